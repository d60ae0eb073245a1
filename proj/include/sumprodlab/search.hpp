#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumprodlab/context.hpp"
#include "sumprodlab/numset.hpp"

namespace sumprodlab {

// How a statistic enters a score: its raw value, or the witnessed
// growth exponent log2(value) / log2(n).
enum class ScoreForm { raw, exponent };

std::string score_form_name(ScoreForm f);
ScoreForm score_form_from_name(const std::string& name);

struct ObjectiveSpec {
  std::string statistic = "A+A";  // registry name or alias
  ScoreForm form = ScoreForm::raw;
};

struct ConstraintSpec {
  std::string statistic = "A+A";
  ScoreForm form = ScoreForm::exponent;
  double cap = 0.0;
};

// Simulated-annealing search over n-element integer subsets of [1, U]
// minimizing objective + penalty_weight * max(0, constraint - cap).
struct SearchConfig {
  std::size_t n = 4;
  std::int64_t universe_bound = 10;
  ObjectiveSpec objective;
  std::optional<ConstraintSpec> constraint;
  double penalty_weight = 10.0;
  std::uint64_t iterations = 0;
  double initial_temperature = 1.0;
  double cooling = 0.999;
  std::uint64_t seed = 0;

  // Throws std::domain_error on degenerate settings (n == 0, n > U,
  // cooling outside (0,1), negative penalty, exponent scoring at n < 2).
  void validate() const;
};

struct SearchResult {
  NumSet best_set;
  double best_score = 0.0;
  // (iteration, best score) checkpoints; nonincreasing in score,
  // starting with the initial set at iteration 0.
  std::vector<std::pair<std::uint64_t, double>> trace;
  std::uint64_t evaluations = 0;
};

// Penalized objective; deterministic. Throws std::domain_error when A
// has the wrong size or an element outside [1, U].
double score(const NumSet& a, const SearchConfig& config,
             const EvalContext& ctx = {});

// Seeded annealing chain: single-element replacement proposals, accept
// when the score does not increase, otherwise with probability
// 2^(-delta/T); T shrinks by the cooling factor each iteration.
// Fully determined by the config.
SearchResult search_extremal(const SearchConfig& config,
                             const EvalContext& ctx = {});

// Best of several independent chains; ties in score resolved toward
// the earlier seed in the list.
SearchResult search_multi_seed(const SearchConfig& config,
                               const std::vector<std::uint64_t>& seeds,
                               const EvalContext& ctx = {});

}  // namespace sumprodlab
