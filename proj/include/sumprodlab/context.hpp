#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

namespace sumprodlab {

// Thrown when an operation would materialize more elements than the
// configured cap allows. k-fold product sets of generic inputs explode
// combinatorially, so every kernel checks before it allocates.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation knobs shared by every kernel. `cap` bounds the number of
// elements a single operation may materialize at once (tuples streamed
// into a table count against it). `threads` = 0 means use the machine
// parallelism; thread count never changes any computed value.
struct EvalContext {
  std::uint64_t cap = 100'000'000;
  unsigned threads = 0;

  unsigned effective_threads() const {
    if (threads != 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

inline void check_cap(std::uint64_t need, const EvalContext& ctx,
                      const char* what) {
  if (need > ctx.cap) {
    throw ResourceCapError(std::string(what) + " would materialize " +
                           std::to_string(need) + " elements (cap " +
                           std::to_string(ctx.cap) + ")");
  }
}

}  // namespace sumprodlab
