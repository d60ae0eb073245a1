#pragma once

// Brute-force reference enumerations for every statistic under test.
// Each oracle walks the raw element vectors with nested loops and exact
// arithmetic; none of them share code with the library kernels they
// check.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "sumprodlab/numset.hpp"

namespace oracles {

using sumprodlab::ExactScalar;
using sumprodlab::NumSet;

inline NumSet to_set(const std::set<ExactScalar>& values) {
  return sumprodlab::build_set(
      std::vector<ExactScalar>(values.begin(), values.end()));
}

inline NumSet brute_sumset(const NumSet& a, const NumSet& b) {
  std::set<ExactScalar> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(x + y);
  }
  return to_set(out);
}

inline NumSet brute_difference(const NumSet& a, const NumSet& b) {
  std::set<ExactScalar> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(x - y);
  }
  return to_set(out);
}

inline NumSet brute_product(const NumSet& a, const NumSet& b) {
  std::set<ExactScalar> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(x * y);
  }
  return to_set(out);
}

inline NumSet brute_ratio(const NumSet& a, const NumSet& b) {
  std::set<ExactScalar> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (!y.is_zero()) out.insert(x / y);
    }
  }
  if (out.empty()) throw std::domain_error("brute_ratio: no valid pair");
  return to_set(out);
}

// k-fold sums/products by an explicit odometer over index tuples.
inline NumSet brute_kfold(const NumSet& a, unsigned k, bool multiply) {
  if (k == 0) throw std::domain_error("brute_kfold: k >= 1");
  std::vector<std::size_t> idx(k, 0);
  std::set<ExactScalar> out;
  while (true) {
    ExactScalar acc = multiply ? ExactScalar(1) : ExactScalar(0);
    for (std::size_t i : idx) acc = multiply ? acc * a[i] : acc + a[i];
    out.insert(acc);
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == a.size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return to_set(out);
}

inline NumSet brute_shift_ratio(const NumSet& a, bool plus) {
  std::set<ExactScalar> out;
  for (const auto& b : a) {
    for (const auto& bp : a) {
      for (const auto& c : a) {
        const ExactScalar den = plus ? bp + c : bp - c;
        if (den.is_zero()) continue;
        const ExactScalar num = plus ? b + c : b - c;
        out.insert(num / den);
      }
    }
  }
  if (out.empty()) {
    throw std::domain_error("brute_shift_ratio: every denominator vanishes");
  }
  return to_set(out);
}

inline std::uint64_t brute_rep_count(const NumSet& b, const NumSet& c,
                                     bool sum, const ExactScalar& x) {
  std::uint64_t n = 0;
  for (const auto& u : b) {
    for (const auto& v : c) {
      if ((sum ? u + v : u - v) == x) ++n;
    }
  }
  return n;
}

inline std::uint64_t brute_energy(const NumSet& a) {
  std::uint64_t n = 0;
  for (const auto& a1 : a) {
    for (const auto& a2 : a) {
      for (const auto& a3 : a) {
        for (const auto& a4 : a) {
          if (a1 + a2 == a3 + a4) ++n;
        }
      }
    }
  }
  return n;
}

// Ordered 6-tuples with equal difference ratios, via cross
// multiplication (denominators are nonzero for admissible tuples).
inline std::uint64_t brute_collinear(const NumSet& p, const NumSet& b) {
  std::uint64_t n = 0;
  bool admissible = false;
  for (const auto& bv : b) {
    for (const auto& p2 : p) {
      if (p2 == bv) continue;
      admissible = true;
      for (const auto& p1 : p) {
        for (const auto& bw : b) {
          for (const auto& q2 : p) {
            if (q2 == bw) continue;
            for (const auto& q1 : p) {
              if ((p1 - bv) * (q2 - bw) == (q1 - bw) * (p2 - bv)) ++n;
            }
          }
        }
      }
    }
  }
  if (!admissible) {
    throw std::domain_error("brute_collinear: no admissible triple");
  }
  return n;
}

inline std::uint64_t brute_quad(const NumSet& a) {
  const NumSet s = brute_sumset(a, a);
  std::set<ExactScalar> members(a.begin(), a.end());
  std::uint64_t n = 0;
  for (const auto& b : s) {
    for (const auto& bp : s) {
      for (const auto& c : a) {
        for (const auto& cp : a) {
          if (members.count(b - c) && members.count(b - cp) &&
              members.count(bp - c) && members.count(bp - cp)) {
            ++n;
          }
        }
      }
    }
  }
  return n;
}

inline std::uint64_t brute_sigma(const NumSet& x, const NumSet& b,
                                 const NumSet& c) {
  std::uint64_t n = 0;
  for (const auto& u : b) {
    for (const auto& v : c) {
      for (const auto& t : x) {
        if (u + v == t) ++n;
      }
    }
  }
  return n;
}

inline std::uint64_t brute_quad_slice(const NumSet& a, const ExactScalar& b,
                                      const ExactScalar& bp,
                                      const ExactScalar& c) {
  std::set<ExactScalar> members(a.begin(), a.end());
  if (!members.count(b - c) || !members.count(bp - c)) return 0;
  std::uint64_t n = 0;
  for (const auto& cp : a) {
    if (members.count(b - cp) && members.count(bp - cp)) ++n;
  }
  return n;
}

inline NumSet brute_heavy_ratio(const NumSet& a, std::uint64_t tau) {
  const NumSet s = brute_sumset(a, a);
  std::set<ExactScalar> out;
  for (const auto& b : s) {
    for (const auto& bp : s) {
      for (const auto& c : a) {
        if (bp == c) continue;
        if (brute_quad_slice(a, b, bp, c) >= tau) {
          out.insert((b - c) / (bp - c));
        }
      }
    }
  }
  return to_set(out);
}

}  // namespace oracles
