#include "sumprodlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "sumprodlab/harness.hpp"
#include "sumprodlab/rng.hpp"

namespace sumprodlab {

std::string score_form_name(ScoreForm f) {
  return f == ScoreForm::raw ? "raw" : "exponent";
}

ScoreForm score_form_from_name(const std::string& name) {
  if (name == "raw") return ScoreForm::raw;
  if (name == "exponent") return ScoreForm::exponent;
  throw std::domain_error("unknown score form: '" + name + "'");
}

void SearchConfig::validate() const {
  if (n == 0) throw std::domain_error("search requires n >= 1");
  if (universe_bound < 1 ||
      static_cast<std::uint64_t>(universe_bound) < n) {
    throw std::domain_error("search requires n <= universe_bound");
  }
  if (!(cooling > 0.0 && cooling < 1.0)) {
    throw std::domain_error("cooling factor must lie in (0, 1)");
  }
  if (penalty_weight < 0.0) {
    throw std::domain_error("penalty weight must be nonnegative");
  }
  if (initial_temperature < 0.0) {
    throw std::domain_error("initial temperature must be nonnegative");
  }
  const bool uses_exponent =
      objective.form == ScoreForm::exponent ||
      (constraint && constraint->form == ScoreForm::exponent);
  if (uses_exponent && n < 2) {
    throw std::domain_error("exponent scoring requires n >= 2");
  }
  resolve_statistic(objective.statistic);
  if (constraint) resolve_statistic(constraint->statistic);
}

namespace {

double statistic_score(const NumSet& a, const std::string& statistic,
                       ScoreForm form, const EvalContext& ctx) {
  const BigInt v = evaluate_statistic(statistic, a, ctx);
  const double raw = v.get_d();
  if (form == ScoreForm::raw) return raw;
  return std::log2(raw) / std::log2(static_cast<double>(a.size()));
}

std::vector<std::int64_t> set_as_universe_points(const NumSet& a,
                                                 const SearchConfig& config) {
  if (a.size() != config.n) {
    throw std::domain_error("score: set size differs from config n");
  }
  std::vector<std::int64_t> pts;
  pts.reserve(a.size());
  for (const ExactScalar& x : a) {
    auto v = x.as_int64();
    if (!v || *v < 1 || *v > config.universe_bound) {
      throw std::domain_error("score: element outside the universe [1, U]");
    }
    pts.push_back(*v);
  }
  return pts;
}

NumSet points_to_set(const std::vector<std::int64_t>& pts) {
  std::vector<ExactScalar> vals;
  vals.reserve(pts.size());
  for (std::int64_t v : pts) vals.emplace_back(static_cast<long>(v));
  return build_set(std::move(vals));
}

}  // namespace

double score(const NumSet& a, const SearchConfig& config,
             const EvalContext& ctx) {
  config.validate();
  set_as_universe_points(a, config);
  double s = statistic_score(a, config.objective.statistic,
                             config.objective.form, ctx);
  if (config.constraint) {
    const double c = statistic_score(a, config.constraint->statistic,
                                     config.constraint->form, ctx);
    s += config.penalty_weight * std::max(0.0, c - config.constraint->cap);
  }
  return s;
}

SearchResult search_extremal(const SearchConfig& config,
                             const EvalContext& ctx) {
  config.validate();
  Xoshiro256StarStar rng(config.seed);
  const std::uint64_t universe =
      static_cast<std::uint64_t>(config.universe_bound);

  // Seeded random start: distinct uniform draws from [1, U].
  std::set<std::int64_t> current;
  while (current.size() < config.n) {
    current.insert(static_cast<std::int64_t>(rng.uniform_below(universe)) + 1);
  }
  std::vector<std::int64_t> pts(current.begin(), current.end());

  SearchResult result;
  NumSet cur_set = points_to_set(pts);
  double cur_score = score(cur_set, config, ctx);
  result.evaluations = 1;
  result.best_set = cur_set;
  result.best_score = cur_score;
  result.trace.emplace_back(0, cur_score);

  const bool saturated = config.n == universe;  // no replacement exists
  double temperature = config.initial_temperature;
  for (std::uint64_t iter = 1; iter <= config.iterations; ++iter) {
    if (saturated) break;
    const std::size_t victim =
        static_cast<std::size_t>(rng.uniform_below(config.n));
    std::int64_t replacement;
    do {
      replacement =
          static_cast<std::int64_t>(rng.uniform_below(universe)) + 1;
    } while (std::binary_search(pts.begin(), pts.end(), replacement));

    std::vector<std::int64_t> proposal = pts;
    proposal[victim] = replacement;
    std::sort(proposal.begin(), proposal.end());
    const NumSet prop_set = points_to_set(proposal);
    const double prop_score = score(prop_set, config, ctx);
    ++result.evaluations;

    const double delta = prop_score - cur_score;
    bool accept = delta <= 0.0;
    if (!accept && temperature > 0.0) {
      // Base-2 acceptance to match the base-2 log convention.
      accept = rng.uniform_unit() < std::exp2(-delta / temperature);
    }
    if (accept) {
      pts = std::move(proposal);
      cur_set = prop_set;
      cur_score = prop_score;
      if (cur_score < result.best_score) {
        result.best_score = cur_score;
        result.best_set = cur_set;
        result.trace.emplace_back(iter, cur_score);
      }
    }
    temperature *= config.cooling;
  }
  return result;
}

SearchResult search_multi_seed(const SearchConfig& config,
                               const std::vector<std::uint64_t>& seeds,
                               const EvalContext& ctx) {
  if (seeds.empty()) {
    throw std::domain_error("search_multi_seed requires at least one seed");
  }
  std::optional<SearchResult> best;
  std::uint64_t best_seed = 0;
  for (std::uint64_t seed : seeds) {
    SearchConfig chain = config;
    chain.seed = seed;
    SearchResult r = search_extremal(chain, ctx);
    if (!best || r.best_score < best->best_score ||
        (r.best_score == best->best_score && seed < best_seed)) {
      best = std::move(r);
      best_seed = seed;
    }
  }
  return *best;
}

}  // namespace sumprodlab
