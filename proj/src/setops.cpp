#include "sumprodlab/setops.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sumprodlab {

namespace {

constexpr std::int64_t kAddSafeBound = (std::int64_t{1} << 62) - 1;

enum class PairOp { add, subtract, multiply };

// Largest |value| allowed per operand so the int64 path cannot overflow.
std::int64_t operand_bound(PairOp op, const NumSet& a, const NumSet& b) {
  if (op != PairOp::multiply) return kAddSafeBound;
  // For products, bound each side so max|a| * max|b| fits. Probe the
  // actual magnitudes and fall back to the exact path when too large.
  auto mag = [](const NumSet& s) -> ExactScalar {
    ExactScalar lo = s.min().abs();
    ExactScalar hi = s.max().abs();
    return lo < hi ? hi : lo;
  };
  const ExactScalar prod = mag(a) * mag(b);
  auto v = prod.as_int64();
  return v ? kAddSafeBound : 0;  // 0 forces the exact path
}

NumSet from_int64_sorted(std::vector<std::int64_t> vals) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<ExactScalar> out;
  out.reserve(vals.size());
  for (std::int64_t v : vals) out.emplace_back(static_cast<long>(v));
  return NumSet::from_sorted_unique(std::move(out));
}

NumSet pairwise(const NumSet& a, const NumSet& b, PairOp op,
                const EvalContext& ctx, const char* what) {
  if (a.empty() || b.empty()) {
    throw std::domain_error(std::string(what) + " of an empty set");
  }
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(a.size()) * b.size();
  check_cap(pairs, ctx, what);

  const std::int64_t bound = operand_bound(op, a, b);
  if (bound > 0) {
    auto av = int64_view(a, bound);
    auto bv = int64_view(b, bound);
    if (av && bv) {
      std::vector<std::int64_t> vals;
      vals.reserve(pairs);
      for (std::int64_t x : *av) {
        for (std::int64_t y : *bv) {
          switch (op) {
            case PairOp::add: vals.push_back(x + y); break;
            case PairOp::subtract: vals.push_back(x - y); break;
            case PairOp::multiply: vals.push_back(x * y); break;
          }
        }
      }
      return from_int64_sorted(std::move(vals));
    }
  }

  std::vector<ExactScalar> vals;
  vals.reserve(pairs);
  for (const ExactScalar& x : a) {
    for (const ExactScalar& y : b) {
      switch (op) {
        case PairOp::add: vals.push_back(x + y); break;
        case PairOp::subtract: vals.push_back(x - y); break;
        case PairOp::multiply: vals.push_back(x * y); break;
      }
    }
  }
  return NumSet::from_values(std::move(vals));
}

}  // namespace

NumSet sumset(const NumSet& a, const NumSet& b, const EvalContext& ctx) {
  return pairwise(a, b, PairOp::add, ctx, "sumset");
}

NumSet difference_set(const NumSet& a, const NumSet& b,
                      const EvalContext& ctx) {
  return pairwise(a, b, PairOp::subtract, ctx, "difference_set");
}

NumSet product_set(const NumSet& a, const NumSet& b, const EvalContext& ctx) {
  return pairwise(a, b, PairOp::multiply, ctx, "product_set");
}

NumSet ratio_set(const NumSet& a, const NumSet& b, const EvalContext& ctx) {
  if (a.empty() || b.empty()) {
    throw std::domain_error("ratio_set of an empty set");
  }
  const bool any_nonzero =
      b.size() > 1 || !b[0].is_zero();
  if (!any_nonzero) {
    throw std::domain_error("ratio_set denominator set is {0}");
  }
  check_cap(static_cast<std::uint64_t>(a.size()) * b.size(), ctx, "ratio_set");
  std::vector<ExactScalar> vals;
  vals.reserve(a.size() * b.size());
  for (const ExactScalar& x : a) {
    for (const ExactScalar& y : b) {
      if (y.is_zero()) continue;
      vals.push_back(x / y);
    }
  }
  return NumSet::from_values(std::move(vals));
}

namespace {

NumSet iterated(const NumSet& a, unsigned k, PairOp op, const EvalContext& ctx,
                const char* what) {
  if (a.empty()) throw std::domain_error(std::string(what) + " of an empty set");
  if (k == 0) throw std::domain_error(std::string(what) + " requires k >= 1");
  NumSet acc = a;
  for (unsigned i = 1; i < k; ++i) acc = pairwise(acc, a, op, ctx, what);
  return acc;
}

}  // namespace

NumSet iterated_sumset(const NumSet& a, unsigned k, const EvalContext& ctx) {
  return iterated(a, k, PairOp::add, ctx, "iterated_sumset");
}

NumSet iterated_product(const NumSet& a, unsigned k, const EvalContext& ctx) {
  return iterated(a, k, PairOp::multiply, ctx, "iterated_product");
}

NumSet shift_ratio_set(const NumSet& a, ShiftSign sign, const EvalContext& ctx) {
  if (a.empty()) throw std::domain_error("shift_ratio_set of an empty set");
  const std::uint64_t n = a.size();
  check_cap(n * n * n, ctx, "shift_ratio_set");

  // Fast path: reduced int64 fractions, deduplicated lexicographically
  // (a reduced pair with positive denominator is unique per value).
  if (auto av = int64_view(a, kAddSafeBound / 2)) {
    std::vector<std::pair<std::int64_t, std::int64_t>> fracs;
    for (std::int64_t c : *av) {
      for (std::int64_t bp : *av) {
        std::int64_t den = sign == ShiftSign::plus ? bp + c : bp - c;
        if (den == 0) continue;
        for (std::int64_t b : *av) {
          std::int64_t num = sign == ShiftSign::plus ? b + c : b - c;
          std::int64_t g = std::gcd(std::abs(num), std::abs(den));
          if (g == 0) g = 1;
          std::int64_t rn = num / g, rd = den / g;
          if (rd < 0) { rn = -rn; rd = -rd; }
          if (rn == 0) rd = 1;
          fracs.emplace_back(rn, rd);
        }
      }
    }
    if (fracs.empty()) {
      throw std::domain_error("shift_ratio_set: every denominator vanishes");
    }
    std::sort(fracs.begin(), fracs.end());
    fracs.erase(std::unique(fracs.begin(), fracs.end()), fracs.end());
    std::vector<ExactScalar> vals;
    vals.reserve(fracs.size());
    for (auto [rn, rd] : fracs) {
      vals.push_back(ExactScalar(BigInt(static_cast<long>(rn)),
                                 BigInt(static_cast<long>(rd))));
    }
    return NumSet::from_values(std::move(vals));
  }

  std::vector<ExactScalar> vals;
  for (const ExactScalar& c : a) {
    for (const ExactScalar& bp : a) {
      const ExactScalar den = sign == ShiftSign::plus ? bp + c : bp - c;
      if (den.is_zero()) continue;
      for (const ExactScalar& b : a) {
        const ExactScalar num = sign == ShiftSign::plus ? b + c : b - c;
        vals.push_back(num / den);
      }
    }
  }
  if (vals.empty()) {
    throw std::domain_error("shift_ratio_set: every denominator vanishes");
  }
  return NumSet::from_values(std::move(vals));
}

}  // namespace sumprodlab
