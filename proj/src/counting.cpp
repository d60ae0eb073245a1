#include "sumprodlab/counting.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace sumprodlab {

namespace {

constexpr std::int64_t kDiffSafeBound = (std::int64_t{1} << 62) - 1;

BigInt to_bigint(unsigned __int128 v) {
  BigInt hi(static_cast<unsigned long>(v >> 64));
  BigInt out;
  mpz_mul_2exp(out.get_mpz_t(), hi.get_mpz_t(), 64);
  out += static_cast<unsigned long>(v & ~std::uint64_t{0});
  return out;
}

// Sum of count^power over runs of equal values in a sorted vector.
template <typename T>
unsigned __int128 run_power_sum(const std::vector<T>& sorted, int power) {
  unsigned __int128 acc = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    unsigned __int128 r = j - i;
    unsigned __int128 term = r;
    for (int k = 1; k < power; ++k) term *= r;
    acc += term;
    i = j;
  }
  return acc;
}

// Open-addressing multiplicity counter over reduced int64 fractions.
// den == 0 marks an empty slot (live denominators are always >= 1).
class RatioCounter {
 public:
  explicit RatioCounter(std::uint64_t cap) : cap_(cap) { rehash(1024); }

  void add(std::int64_t num, std::int64_t den, std::uint64_t count = 1) {
    std::size_t idx = probe_start(num, den);
    while (true) {
      Slot& s = slots_[idx];
      if (s.den == 0) {
        s.num = num;
        s.den = den;
        s.count = count;
        ++used_;
        if (used_ > cap_) {
          throw ResourceCapError("ratio table exceeds the element cap");
        }
        if (used_ * 10 >= slots_.size() * 7) rehash(slots_.size() * 2);
        return;
      }
      if (s.num == num && s.den == den) {
        s.count += count;
        return;
      }
      idx = (idx + 1) & mask_;
    }
  }

  template <typename F>
  void for_each(F f) const {
    for (const Slot& s : slots_) {
      if (s.den != 0) f(s.num, s.den, s.count);
    }
  }

  std::size_t distinct() const { return used_; }

 private:
  struct Slot {
    std::int64_t num = 0;
    std::int64_t den = 0;
    std::uint64_t count = 0;
  };

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::size_t probe_start(std::int64_t num, std::int64_t den) const {
    const std::uint64_t h =
        mix(static_cast<std::uint64_t>(num) * 0x9E3779B97F4A7C15ULL ^
            static_cast<std::uint64_t>(den));
    return static_cast<std::size_t>(h) & mask_;
  }

  void rehash(std::size_t new_size) {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(new_size, Slot{});
    mask_ = new_size - 1;
    for (const Slot& s : old) {
      if (s.den == 0) continue;
      std::size_t idx = probe_start(s.num, s.den);
      while (slots_[idx].den != 0) idx = (idx + 1) & mask_;
      slots_[idx] = s;
    }
  }

  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  std::size_t used_ = 0;
  std::uint64_t cap_;
};

void reduce_fraction(std::int64_t& num, std::int64_t& den) {
  std::int64_t g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
}

}  // namespace

MultiplicityTable MultiplicityTable::from_tuple_values(
    std::vector<ExactScalar> values) {
  std::sort(values.begin(), values.end());
  MultiplicityTable t;
  t.total_ = values.size();
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    while (j < values.size() && values[j] == values[i]) ++j;
    t.entries_.emplace_back(std::move(values[i]), j - i);
    i = j;
  }
  return t;
}

std::uint64_t MultiplicityTable::count(const ExactScalar& x) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), x,
      [](const auto& entry, const ExactScalar& key) { return entry.first < key; });
  if (it == entries_.end() || !(it->first == x)) return 0;
  return it->second;
}

MultiplicityTable rep_table(const NumSet& b, const NumSet& c, RepMode mode,
                            const EvalContext& ctx) {
  if (b.empty() || c.empty()) {
    throw std::domain_error("rep_table of an empty set");
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(b.size()) * c.size();
  check_cap(pairs, ctx, "rep_table");
  std::vector<ExactScalar> vals;
  vals.reserve(pairs);
  for (const ExactScalar& x : b) {
    for (const ExactScalar& y : c) {
      vals.push_back(mode == RepMode::sum ? x + y : x - y);
    }
  }
  return MultiplicityTable::from_tuple_values(std::move(vals));
}

BigInt detail::additive_energy_exact(const NumSet& a, const EvalContext& ctx) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * a.size();
  check_cap(pairs, ctx, "additive_energy");
  std::vector<ExactScalar> sums;
  sums.reserve(pairs);
  for (const ExactScalar& x : a) {
    for (const ExactScalar& y : a) sums.push_back(x + y);
  }
  std::sort(sums.begin(), sums.end());
  return to_bigint(run_power_sum(sums, 2));
}

BigInt additive_energy(const NumSet& a, const EvalContext& ctx) {
  if (a.empty()) throw std::domain_error("additive_energy of an empty set");
  const std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * a.size();
  if (auto av = int64_view(a, kDiffSafeBound)) {
    check_cap(pairs, ctx, "additive_energy");
    std::vector<std::int64_t> sums;
    sums.reserve(pairs);
    for (std::int64_t x : *av) {
      for (std::int64_t y : *av) sums.push_back(x + y);
    }
    std::sort(sums.begin(), sums.end());
    return to_bigint(run_power_sum(sums, 2));
  }
  return detail::additive_energy_exact(a, ctx);
}

BigInt sigma(const NumSet& x, const NumSet& b, const NumSet& c,
             const EvalContext& ctx) {
  MultiplicityTable table = rep_table(b, c, RepMode::sum, ctx);
  std::uint64_t acc = 0;
  for (const ExactScalar& v : x) acc += table.count(v);
  return BigInt(static_cast<unsigned long>(acc));
}

namespace {

bool has_admissible_triple(const NumSet& p, const NumSet& b) {
  // Some (p2, b) with p2 != b exists unless both sets are one identical
  // singleton.
  return !(p.size() == 1 && b.size() == 1 && p[0] == b[0]);
}

}  // namespace

BigInt detail::collinear_energy_exact(const NumSet& p, const NumSet& b,
                                      const EvalContext& ctx) {
  const std::uint64_t triples =
      static_cast<std::uint64_t>(p.size()) * p.size() * b.size();
  check_cap(triples, ctx, "collinear_energy");
  std::vector<ExactScalar> ratios;
  ratios.reserve(triples);
  for (const ExactScalar& bv : b) {
    for (const ExactScalar& p2 : p) {
      if (p2 == bv) continue;
      const ExactScalar den = p2 - bv;
      for (const ExactScalar& p1 : p) ratios.push_back((p1 - bv) / den);
    }
  }
  std::sort(ratios.begin(), ratios.end());
  return to_bigint(run_power_sum(ratios, 2));
}

BigInt collinear_energy(const NumSet& p, const NumSet& b,
                        const EvalContext& ctx) {
  if (p.empty() || b.empty()) {
    throw std::domain_error("collinear_energy of an empty set");
  }
  if (!has_admissible_triple(p, b)) {
    throw std::domain_error("collinear_energy: no admissible triple");
  }

  auto pv = int64_view(p, kDiffSafeBound / 2);
  auto bv = int64_view(b, kDiffSafeBound / 2);
  if (!pv || !bv) return detail::collinear_energy_exact(p, b, ctx);

  // Group admissible triples by exact reduced ratio, then sum squared
  // multiplicities. Partitioned over b; per-thread counters merge by
  // key, so the total is independent of the thread count.
  const unsigned want = ctx.effective_threads();
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(want, bv->size()));

  auto scan = [&](std::size_t lo, std::size_t hi, RatioCounter& counter) {
    for (std::size_t bi = lo; bi < hi; ++bi) {
      const std::int64_t base = (*bv)[bi];
      for (std::int64_t p2 : *pv) {
        if (p2 == base) continue;
        const std::int64_t den = p2 - base;
        for (std::int64_t p1 : *pv) {
          std::int64_t rn = p1 - base, rd = den;
          reduce_fraction(rn, rd);
          counter.add(rn, rd);
        }
      }
    }
  };

  std::vector<RatioCounter> counters;
  counters.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) counters.emplace_back(ctx.cap);

  if (workers <= 1) {
    scan(0, bv->size(), counters[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (bv->size() + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(bv->size(), lo + chunk);
      pool.emplace_back([&, lo, hi, t] { scan(lo, hi, counters[t]); });
    }
    for (auto& th : pool) th.join();
    for (unsigned t = 1; t < workers; ++t) {
      counters[t].for_each([&](std::int64_t rn, std::int64_t rd,
                               std::uint64_t count) {
        counters[0].add(rn, rd, count);
      });
    }
  }

  unsigned __int128 acc = 0;
  counters[0].for_each([&](std::int64_t, std::int64_t, std::uint64_t count) {
    acc += static_cast<unsigned __int128>(count) * count;
  });
  return to_bigint(acc);
}

BigInt detail::quad_count_exact(const NumSet& a, const EvalContext& ctx) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * a.size();
  check_cap(pairs, ctx, "quad_count");
  std::vector<ExactScalar> diffs;
  diffs.reserve(pairs);
  for (const ExactScalar& x : a) {
    for (const ExactScalar& y : a) diffs.push_back(x - y);
  }
  std::sort(diffs.begin(), diffs.end());
  return to_bigint(run_power_sum(diffs, 3));
}

BigInt quad_count(const NumSet& a, const EvalContext& ctx) {
  if (a.empty()) throw std::domain_error("quad_count of an empty set");
  const std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * a.size();
  if (auto av = int64_view(a, kDiffSafeBound)) {
    check_cap(pairs, ctx, "quad_count");
    std::vector<std::int64_t> diffs;
    diffs.reserve(pairs);
    for (std::int64_t x : *av) {
      for (std::int64_t y : *av) diffs.push_back(x - y);
    }
    std::sort(diffs.begin(), diffs.end());
    return to_bigint(run_power_sum(diffs, 3));
  }
  return detail::quad_count_exact(a, ctx);
}

std::uint64_t quad_slice(const NumSet& a, const ExactScalar& b,
                         const ExactScalar& b_prime, const ExactScalar& c,
                         const EvalContext& ctx) {
  if (a.empty()) throw std::domain_error("quad_slice of an empty set");
  const NumSet s = sumset(a, a, ctx);
  if (!s.contains(b) || !s.contains(b_prime) || !a.contains(c)) {
    throw std::domain_error("quad_slice argument outside its domain");
  }
  if (!a.contains(b - c) || !a.contains(b_prime - c)) return 0;
  std::uint64_t n = 0;
  for (const ExactScalar& cp : a) {
    if (a.contains(b - cp) && a.contains(b_prime - cp)) ++n;
  }
  return n;
}

NumSet heavy_ratio_set(const NumSet& a, std::uint64_t tau,
                       const EvalContext& ctx) {
  if (a.empty()) throw std::domain_error("heavy_ratio_set of an empty set");
  if (tau == 0) throw std::domain_error("heavy_ratio_set requires tau >= 1");
  const NumSet s = sumset(a, a, ctx);
  check_cap(static_cast<std::uint64_t>(s.size()) * s.size() * a.size(), ctx,
            "heavy_ratio_set");

  std::vector<ExactScalar> ratios;
  for (const ExactScalar& b : s) {
    for (const ExactScalar& bp : s) {
      // Slice value is shared by every admissible c for this (b, b').
      std::uint64_t slice = 0;
      for (const ExactScalar& cp : a) {
        if (a.contains(b - cp) && a.contains(bp - cp)) ++slice;
      }
      if (slice < tau) continue;
      for (const ExactScalar& c : a) {
        if (bp == c) continue;
        if (!a.contains(b - c) || !a.contains(bp - c)) continue;
        ratios.push_back((b - c) / (bp - c));
      }
    }
  }
  return NumSet::from_values(std::move(ratios));
}

ExactScalar heavy_ratio_threshold(const NumSet& a, const EvalContext& ctx) {
  if (a.empty()) {
    throw std::domain_error("heavy_ratio_threshold of an empty set");
  }
  const NumSet s = sumset(a, a, ctx);
  BigInt n5(static_cast<unsigned long>(a.size()));
  mpz_pow_ui(n5.get_mpz_t(), n5.get_mpz_t(), 5);
  BigInt s4(static_cast<unsigned long>(s.size()));
  mpz_pow_ui(s4.get_mpz_t(), s4.get_mpz_t(), 4);
  return ExactScalar(n5, 2 * s4);
}

bool verify_basic_identity(const ExactScalar& b, const ExactScalar& c,
                           const ExactScalar& b_prime,
                           const ExactScalar& c_prime) {
  if (b_prime == c) {
    throw std::domain_error("verify_basic_identity requires b' != c");
  }
  const ExactScalar den = b_prime - c;
  const ExactScalar lhs = ExactScalar(1) - (b - c) / den;
  const ExactScalar rhs = (b_prime - c_prime) / den - (b - c_prime) / den;
  return lhs == rhs;
}

}  // namespace sumprodlab
