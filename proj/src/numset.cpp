#include "sumprodlab/numset.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumprodlab {

NumSet NumSet::from_values(std::vector<ExactScalar> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  NumSet s;
  s.elems_ = std::move(values);
  return s;
}

NumSet NumSet::from_sorted_unique(std::vector<ExactScalar> values) {
  NumSet s;
  s.elems_ = std::move(values);
  return s;
}

bool NumSet::contains(const ExactScalar& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

NumSet build_set(std::vector<ExactScalar> values) {
  return NumSet::from_values(std::move(values));
}

NumSet affine_image(const NumSet& a, const ExactScalar& scale,
                    const ExactScalar& offset) {
  if (scale.is_zero()) {
    throw std::domain_error("affine_image with zero scale collapses the set");
  }
  std::vector<ExactScalar> out;
  out.reserve(a.size());
  for (const ExactScalar& x : a) out.push_back(scale * x + offset);
  if (scale.sign() < 0) std::reverse(out.begin(), out.end());
  return NumSet::from_sorted_unique(std::move(out));
}

NumSet set_union(const NumSet& a, const NumSet& b) {
  std::vector<ExactScalar> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return NumSet::from_sorted_unique(std::move(out));
}

std::optional<std::vector<std::int64_t>> int64_view(const NumSet& s,
                                                    std::int64_t abs_bound) {
  std::vector<std::int64_t> out;
  out.reserve(s.size());
  for (const ExactScalar& x : s) {
    auto v = x.as_int64();
    if (!v || *v > abs_bound || *v < -abs_bound) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

}  // namespace sumprodlab
