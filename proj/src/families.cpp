#include "sumprodlab/families.hpp"

#include <set>
#include <stdexcept>

#include "sumprodlab/rng.hpp"

namespace sumprodlab {

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ap: return "ap";
    case FamilyKind::gp: return "gp";
    case FamilyKind::squares: return "squares";
    case FamilyKind::random_interval: return "random_interval";
    case FamilyKind::random_gp_subset: return "random_gp_subset";
  }
  throw std::logic_error("unreachable family kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
  if (name == "ap") return FamilyKind::ap;
  if (name == "gp") return FamilyKind::gp;
  if (name == "squares") return FamilyKind::squares;
  if (name == "random_interval") return FamilyKind::random_interval;
  if (name == "random_gp_subset") return FamilyKind::random_gp_subset;
  throw std::domain_error("unknown family kind: '" + name + "'");
}

FamilySpec FamilySpec::ap_spec(ExactScalar start, ExactScalar step) {
  FamilySpec s;
  s.kind = FamilyKind::ap;
  s.start = std::move(start);
  s.step = std::move(step);
  return s;
}

FamilySpec FamilySpec::gp_spec(ExactScalar base, ExactScalar ratio) {
  FamilySpec s;
  s.kind = FamilyKind::gp;
  s.base = std::move(base);
  s.ratio = std::move(ratio);
  return s;
}

FamilySpec FamilySpec::squares_spec() {
  FamilySpec s;
  s.kind = FamilyKind::squares;
  return s;
}

FamilySpec FamilySpec::random_interval_spec(ExactScalar density) {
  FamilySpec s;
  s.kind = FamilyKind::random_interval;
  s.density = std::move(density);
  return s;
}

FamilySpec FamilySpec::random_gp_subset_spec(ExactScalar generator,
                                             std::uint64_t exponent_bound) {
  FamilySpec s;
  s.kind = FamilyKind::random_gp_subset;
  s.generator = std::move(generator);
  s.exponent_bound = exponent_bound;
  return s;
}

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::ap:
      if (step.is_zero()) throw std::domain_error("ap family requires step != 0");
      break;
    case FamilyKind::gp:
      if (base.is_zero()) throw std::domain_error("gp family requires base != 0");
      if (ratio.is_zero() || ratio == ExactScalar(1) || ratio == ExactScalar(-1)) {
        throw std::domain_error("gp family requires ratio outside {0, 1, -1}");
      }
      break;
    case FamilyKind::squares:
      break;
    case FamilyKind::random_interval:
      if (density < ExactScalar(1)) {
        throw std::domain_error("random_interval requires density >= 1");
      }
      break;
    case FamilyKind::random_gp_subset:
      if (generator.is_zero() || generator == ExactScalar(1) ||
          generator == ExactScalar(-1)) {
        throw std::domain_error(
            "random_gp_subset requires generator outside {0, 1, -1}");
      }
      break;
  }
}

namespace {

ExactScalar rational_power(const ExactScalar& base, std::uint64_t e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(),
             static_cast<unsigned long>(e));
  return ExactScalar(num, den);
}

// Draws n distinct integers from [lo, lo + universe - 1]: repeated
// uniform_below(universe) draws inserted into an ordered set until it
// holds n values. The draw sequence is part of the reproducibility
// contract.
std::set<std::uint64_t> draw_distinct(Xoshiro256StarStar& rng, std::uint64_t n,
                                      std::uint64_t universe) {
  std::set<std::uint64_t> picked;
  while (picked.size() < n) picked.insert(rng.uniform_below(universe));
  return picked;
}

}  // namespace

NumSet generate(const FamilySpec& spec, std::size_t n, std::uint64_t seed) {
  spec.validate();
  if (n == 0) throw std::domain_error("family generation requires n >= 1");

  std::vector<ExactScalar> out;
  out.reserve(n);
  switch (spec.kind) {
    case FamilyKind::ap: {
      ExactScalar v = spec.start;
      for (std::size_t i = 0; i < n; ++i, v = v + spec.step) out.push_back(v);
      break;
    }
    case FamilyKind::gp: {
      ExactScalar v = spec.base;
      for (std::size_t i = 0; i < n; ++i, v = v * spec.ratio) out.push_back(v);
      break;
    }
    case FamilyKind::squares: {
      for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(ExactScalar(static_cast<long>(i)) *
                      ExactScalar(static_cast<long>(i)));
      }
      break;
    }
    case FamilyKind::random_interval: {
      const ExactScalar span = spec.density * ExactScalar(static_cast<long>(n));
      BigInt universe_big;
      mpz_fdiv_q(universe_big.get_mpz_t(), span.num().get_mpz_t(),
                 span.den().get_mpz_t());
      if (!universe_big.fits_ulong_p()) {
        throw std::domain_error("random_interval universe too large");
      }
      const std::uint64_t universe = universe_big.get_ui();
      if (universe < n) {
        throw std::domain_error(
            "random_interval universe cannot hold n distinct elements");
      }
      Xoshiro256StarStar rng(seed);
      for (std::uint64_t v : draw_distinct(rng, n, universe)) {
        out.push_back(ExactScalar(static_cast<long>(v + 1)));
      }
      break;
    }
    case FamilyKind::random_gp_subset: {
      if (spec.exponent_bound + 1 < n) {
        throw std::domain_error(
            "random_gp_subset exponent range cannot hold n distinct elements");
      }
      Xoshiro256StarStar rng(seed);
      for (std::uint64_t e : draw_distinct(rng, n, spec.exponent_bound + 1)) {
        out.push_back(rational_power(spec.generator, e));
      }
      break;
    }
  }
  NumSet result = build_set(std::move(out));
  if (result.size() != n) {
    throw std::logic_error("family generator produced a degenerate set");
  }
  return result;
}

}  // namespace sumprodlab
