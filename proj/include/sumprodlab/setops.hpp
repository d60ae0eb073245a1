#pragma once

#include "sumprodlab/context.hpp"
#include "sumprodlab/numset.hpp"

namespace sumprodlab {

// {a + b : a in A, b in B}. Throws std::domain_error on empty input.
NumSet sumset(const NumSet& a, const NumSet& b, const EvalContext& ctx = {});

// {a - b : a in A, b in B}.
NumSet difference_set(const NumSet& a, const NumSet& b,
                      const EvalContext& ctx = {});

// {a * b : a in A, b in B}.
NumSet product_set(const NumSet& a, const NumSet& b,
                   const EvalContext& ctx = {});

// {a / b : a in A, b in B, b != 0}; pairs with b == 0 are skipped.
// Throws std::domain_error when B has no nonzero element.
NumSet ratio_set(const NumSet& a, const NumSet& b, const EvalContext& ctx = {});

// k-fold sumset {a_1 + ... + a_k}, k >= 1, by repeated binary folding.
NumSet iterated_sumset(const NumSet& a, unsigned k, const EvalContext& ctx = {});

// k-fold product set {a_1 * ... * a_k}, k >= 1.
NumSet iterated_product(const NumSet& a, unsigned k,
                        const EvalContext& ctx = {});

enum class ShiftSign { plus, minus };

// plus:  {(b + c) / (b' + c) : b, b', c in A, b' + c != 0}
// minus: {(b - c) / (b' - c) : b, b', c in A, b' - c != 0}
// Zero-denominator triples are skipped; throws std::domain_error when
// every denominator vanishes (e.g. minus on a singleton).
NumSet shift_ratio_set(const NumSet& a, ShiftSign sign,
                       const EvalContext& ctx = {});

}  // namespace sumprodlab
