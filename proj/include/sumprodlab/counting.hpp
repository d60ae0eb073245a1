#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sumprodlab/context.hpp"
#include "sumprodlab/numset.hpp"
#include "sumprodlab/setops.hpp"

namespace sumprodlab {

// Multiplicities of an enumerated family of tuples, keyed by the exact
// canonical value each tuple attains. Every key present is actually
// attained; total() is the number of tuples enumerated.
class MultiplicityTable {
 public:
  // Builds from one value per tuple (sorted + run-length internally).
  static MultiplicityTable from_tuple_values(std::vector<ExactScalar> values);

  // Multiplicity of x, 0 when x is not in the support.
  std::uint64_t count(const ExactScalar& x) const;
  const std::vector<std::pair<ExactScalar, std::uint64_t>>& entries() const {
    return entries_;
  }
  std::uint64_t total() const { return total_; }
  std::size_t support_size() const { return entries_.size(); }

 private:
  std::vector<std::pair<ExactScalar, std::uint64_t>> entries_;  // sorted
  std::uint64_t total_ = 0;
};

enum class RepMode { sum, difference };

// r_{B+C} (or r_{B-C}): multiplicity of every representable value over
// ordered pairs B x C. Throws std::domain_error on empty input.
MultiplicityTable rep_table(const NumSet& b, const NumSet& c, RepMode mode,
                            const EvalContext& ctx = {});

// Additive energy: ordered quadruples with a1 + a2 = a3 + a4, i.e.
// sum over x of r_{A+A}(x)^2. |A|^2 <= E+ <= |A|^3.
BigInt additive_energy(const NumSet& a, const EvalContext& ctx = {});

// Mass of B+C landing in X: sum over x in X of r_{B+C}(x). X may be
// empty (result 0); B and C must be nonempty.
BigInt sigma(const NumSet& x, const NumSet& b, const NumSet& c,
             const EvalContext& ctx = {});

// Collinear-triple energy: ordered 6-tuples (p1,p2,b,p1',p2',b') with
// p2 != b, p2' != b' and (p1-b)/(p2-b) = (p1'-b')/(p2'-b'). Computed as
// the sum of squared multiplicities over distinct ratio values. Throws
// std::domain_error when no admissible triple exists.
BigInt collinear_energy(const NumSet& p, const NumSet& b,
                        const EvalContext& ctx = {});

// Quadruples (b,b',c,c') in S x S x A x A, S = A+A, with all four of
// b-c, b-c', b'-c, b'-c' in A. Equals sum over d of r_{A-A}(d)^3.
BigInt quad_count(const NumSet& a, const EvalContext& ctx = {});

// Number of c' in A with b-c' in A and b'-c' in A, provided b-c in A
// and b'-c in A (else 0). Requires b, b' in A+A and c in A; throws
// std::domain_error otherwise.
std::uint64_t quad_slice(const NumSet& a, const ExactScalar& b,
                         const ExactScalar& b_prime, const ExactScalar& c,
                         const EvalContext& ctx = {});

// Ratios (b-c)/(b'-c) over (b,b',c) in S x S x A with b' != c whose
// slice count reaches tau. Monotone nonincreasing in tau; tau >= 1.
NumSet heavy_ratio_set(const NumSet& a, std::uint64_t tau,
                       const EvalContext& ctx = {});

// Pigeonhole threshold |A|^5 / (2 |A+A|^4) used with heavy_ratio_set;
// callers compare slice counts against its ceiling (ties included).
ExactScalar heavy_ratio_threshold(const NumSet& a, const EvalContext& ctx = {});

// Exact check of the shift-ratio rearrangement
//   1 - (b-c)/(b'-c) = (b'-c')/(b'-c) - (b-c')/(b'-c),
// an identity for every rational 4-tuple with b' != c (self-test).
bool verify_basic_identity(const ExactScalar& b, const ExactScalar& c,
                           const ExactScalar& b_prime,
                           const ExactScalar& c_prime);

namespace detail {

// Exact-arithmetic reference paths, used directly whenever operands do
// not fit machine words; exposed so tests can cross-check the int64
// fast paths against them.
BigInt additive_energy_exact(const NumSet& a, const EvalContext& ctx);
BigInt collinear_energy_exact(const NumSet& p, const NumSet& b,
                              const EvalContext& ctx);
BigInt quad_count_exact(const NumSet& a, const EvalContext& ctx);

}  // namespace detail

}  // namespace sumprodlab
