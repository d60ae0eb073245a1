#pragma once

#include <cstdint>
#include <string>

#include "sumprodlab/numset.hpp"

namespace sumprodlab {

enum class FamilyKind { ap, gp, squares, random_interval, random_gp_subset };

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

// Deterministic generator of structured set families for exponent
// scans. Non-random kinds ignore the seed.
//
//   ap:               {start + i*step},        step != 0
//   gp:               {base * ratio^i},        base != 0, ratio not in {0,1,-1}
//   squares:          {1, 4, 9, ..., n^2}
//   random_interval:  n distinct integers uniform in [1, floor(density*n)],
//                     density >= 1
//   random_gp_subset: {generator^e} over n distinct exponents drawn
//                     uniformly from [0, exponent_bound],
//                     generator not in {0,1,-1}
struct FamilySpec {
  FamilyKind kind = FamilyKind::ap;
  ExactScalar start{1};
  ExactScalar step{1};
  ExactScalar base{1};
  ExactScalar ratio{2};
  ExactScalar density{10};
  ExactScalar generator{2};
  std::uint64_t exponent_bound = 0;

  static FamilySpec ap_spec(ExactScalar start, ExactScalar step);
  static FamilySpec gp_spec(ExactScalar base, ExactScalar ratio);
  static FamilySpec squares_spec();
  static FamilySpec random_interval_spec(ExactScalar density);
  static FamilySpec random_gp_subset_spec(ExactScalar generator,
                                          std::uint64_t exponent_bound);

  // Throws std::domain_error on degenerate parameters.
  void validate() const;
};

// Exactly n elements, deterministic in (spec, n, seed). Throws
// std::domain_error when n == 0, parameters are degenerate, or the
// random universe cannot hold n distinct elements.
NumSet generate(const FamilySpec& spec, std::size_t n, std::uint64_t seed);

}  // namespace sumprodlab
