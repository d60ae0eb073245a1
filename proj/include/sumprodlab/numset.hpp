#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumprodlab/rational.hpp"

namespace sumprodlab {

// Finite set of distinct ExactScalars in strictly increasing order.
// The universal input of every statistic. Immutable after construction.
class NumSet {
 public:
  NumSet() = default;

  // Sorts and deduplicates; accepts any order, any multiplicity.
  static NumSet from_values(std::vector<ExactScalar> values);
  // Trusted constructor for kernels that already produce sorted
  // duplicate-free output.
  static NumSet from_sorted_unique(std::vector<ExactScalar> values);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const ExactScalar& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<ExactScalar>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const ExactScalar& x) const;
  const ExactScalar& min() const { return elems_.front(); }
  const ExactScalar& max() const { return elems_.back(); }

  bool operator==(const NumSet& o) const { return elems_ == o.elems_; }

 private:
  std::vector<ExactScalar> elems_;
};

// Deduplicated, sorted set from arbitrary values.
NumSet build_set(std::vector<ExactScalar> values);

// {scale * a + offset : a in A}; cardinality preserved.
// Throws std::domain_error when scale == 0 (collapses the set).
NumSet affine_image(const NumSet& a, const ExactScalar& scale,
                    const ExactScalar& offset);

NumSet set_union(const NumSet& a, const NumSet& b);

// All elements as int64 values when every element is an integer with
// |v| <= abs_bound; nullopt otherwise. Kernels use this to pick the
// overflow-safe machine-word fast path.
std::optional<std::vector<std::int64_t>> int64_view(const NumSet& s,
                                                    std::int64_t abs_bound);

}  // namespace sumprodlab
