#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sumprodlab/numset.hpp"

namespace testutil {

inline sumprodlab::NumSet nset(std::initializer_list<long> values) {
  std::vector<sumprodlab::ExactScalar> out;
  for (long v : values) out.emplace_back(v);
  return sumprodlab::build_set(std::move(out));
}

inline sumprodlab::NumSet qset(std::initializer_list<const char*> values) {
  std::vector<sumprodlab::ExactScalar> out;
  for (const char* v : values) out.push_back(sumprodlab::ExactScalar::parse(v));
  return sumprodlab::build_set(std::move(out));
}

inline sumprodlab::ExactScalar q(const std::string& text) {
  return sumprodlab::ExactScalar::parse(text);
}

}  // namespace testutil
