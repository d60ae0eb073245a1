// sumprodlab: batch front-end for exact sum-product set statistics.
// Subcommands: stats, check, scan, search, gen. Reports go to stdout as
// a JSON envelope (or CSV with --format csv where a CSV shape exists).
// Exit codes: 0 ok, 1 certified violation, 2 input/config error,
// 3 resource cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sumprodlab/io.hpp"
#include "sumprodlab/setops.hpp"

namespace spl = sumprodlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct GlobalOptions {
  unsigned threads = 0;
  std::uint64_t cap = spl::EvalContext{}.cap;
  std::string format = "json";

  spl::EvalContext context() const {
    spl::EvalContext ctx;
    ctx.cap = cap;
    ctx.threads = threads;
    return ctx;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A family spec given inline (a JSON object string) or as a file path.
spl::FamilySpec load_family(const std::string& arg, std::string* digest_src) {
  std::string text = arg;
  if (arg.find('{') == std::string::npos) text = slurp(arg);
  *digest_src = text;
  spl::Json doc;
  try {
    doc = spl::Json::parse(text);
  } catch (const spl::Json::parse_error& e) {
    throw std::invalid_argument(std::string("family spec: ") + e.what());
  }
  return spl::family_from_json(doc);
}

void emit_report(const spl::Json& payload, const std::string& digest_src) {
  std::cout << spl::report_envelope(payload, spl::fnv1a_digest(digest_src))
                   .dump(1)
            << "\n";
}

int cmd_stats(const GlobalOptions& global, const std::string& set_path,
              const std::vector<std::string>& stats, bool dump_elements,
              const std::vector<std::string>& rep_modes) {
  const std::string raw = slurp(set_path);
  const spl::NumSet a = spl::set_from_json(spl::Json::parse(raw));
  if (a.empty()) throw std::invalid_argument("statistics require |A| >= 1");

  spl::Json values = spl::Json::object();
  for (const std::string& name : stats) {
    const std::string canonical = spl::resolve_statistic(name);
    values[canonical] =
        spl::bigint_to_json(spl::evaluate_statistic(canonical, a,
                                                    global.context()));
  }
  spl::Json payload{{"set", spl::Json{{"file", set_path}, {"n", a.size()}}},
                    {"statistics", values}};
  if (dump_elements) payload["elements"] = spl::set_to_json(a)["elements"];
  for (const std::string& mode : rep_modes) {
    const spl::RepMode m = mode == "sum" ? spl::RepMode::sum
                         : mode == "difference"
                             ? spl::RepMode::difference
                             : throw std::invalid_argument(
                                   "--rep expects sum or difference");
    payload[mode == "sum" ? "rep_table_sum" : "rep_table_difference"] =
        spl::multiplicity_table_to_json(
            spl::rep_table(a, a, m, global.context()));
  }

  if (global.format == "csv") {
    std::cout << "statistic,value\n";
    for (const auto& [k, v] : values.items()) {
      std::cout << k << ','
                << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return kExitOk;
  }
  emit_report(payload, raw);
  return kExitOk;
}

int cmd_check(const GlobalOptions& global, const std::string& set_path) {
  const std::string raw = slurp(set_path);
  const spl::NumSet a = spl::set_from_json(spl::Json::parse(raw));
  if (a.size() < 2) throw std::invalid_argument("check requires |A| >= 2");

  std::vector<spl::InequalityRecord> records =
      spl::check_certified(a, global.context());
  std::vector<spl::InequalityRecord> measured =
      spl::measure_asymptotic(a, global.context());
  records.insert(records.end(), measured.begin(), measured.end());
  const bool ok = spl::all_certified_satisfied(records);

  if (global.format == "csv") {
    std::cout << spl::records_to_csv(records);
  } else {
    spl::Json recs = spl::Json::array();
    for (const auto& r : records) recs.push_back(spl::record_to_json(r));
    emit_report(spl::Json{{"set", spl::Json{{"file", set_path}, {"n", a.size()}}},
                          {"certified_ok", ok},
                          {"records", std::move(recs)}},
                raw);
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_scan(const GlobalOptions& global, const std::string& family_arg,
             const std::vector<std::size_t>& sizes, const std::string& stat,
             std::uint64_t seed) {
  std::string digest_src;
  const spl::FamilySpec family = load_family(family_arg, &digest_src);
  const spl::ExponentFit fit =
      spl::fit_exponent(family, sizes, stat, seed, global.context());
  if (global.format == "csv") {
    std::cout << spl::fit_points_to_csv(fit);
    return kExitOk;
  }
  emit_report(spl::fit_to_json(fit), digest_src);
  return kExitOk;
}

int cmd_search(const GlobalOptions& global, const std::string& config_path,
               const std::string& out_path, const std::string& trace_path) {
  const std::string raw = slurp(config_path);
  spl::Json doc;
  try {
    doc = spl::Json::parse(raw);
  } catch (const spl::Json::parse_error& e) {
    throw std::invalid_argument(std::string("search config: ") + e.what());
  }
  const spl::SearchConfig config = spl::search_config_from_json(doc);

  spl::SearchResult result;
  spl::Json payload;
  if (doc.contains("seeds") && doc["seeds"].is_array() &&
      !doc["seeds"].empty()) {
    std::vector<std::uint64_t> seeds;
    for (const auto& s : doc["seeds"]) seeds.push_back(s.get<std::uint64_t>());
    result = spl::search_multi_seed(config, seeds, global.context());
    payload["seeds"] = doc["seeds"];
  } else {
    result = spl::search_extremal(config, global.context());
  }
  payload["config"] = spl::search_config_to_json(config);
  payload["result"] = spl::search_result_to_json(result);

  if (!out_path.empty()) {
    spl::write_set_file(out_path, result.best_set);
    payload["out"] = out_path;
  }
  if (!trace_path.empty()) {
    std::ofstream trace(trace_path);
    if (!trace) throw std::invalid_argument("cannot write trace: " + trace_path);
    trace << "iteration,best_score\n";
    for (const auto& [iter, value] : result.trace) {
      trace << iter << ',' << value << "\n";
    }
    payload["trace_file"] = trace_path;
  }
  emit_report(payload, raw);
  return kExitOk;
}

int cmd_gen(const GlobalOptions&, const std::string& family_arg, std::size_t n,
            std::uint64_t seed, const std::string& out_path) {
  std::string digest_src;
  const spl::FamilySpec family = load_family(family_arg, &digest_src);
  const spl::NumSet a = spl::generate(family, n, seed);
  spl::write_set_file(out_path, a);
  emit_report(spl::Json{{"family", spl::family_to_json(family)},
                        {"n", n},
                        {"seed", seed},
                        {"out", out_path},
                        {"set", spl::set_to_json(a)["elements"]}},
              digest_src);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic laboratory for sum-product set statistics"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--threads", global.threads,
                 "worker threads (0 = machine parallelism; never changes "
                 "computed values)");
  app.add_option("--cap", global.cap,
                 "max elements one operation may materialize");
  app.add_option("--format", global.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "compute statistics of a set");
  std::string stats_set;
  std::vector<std::string> stats_names;
  bool stats_elements = false;
  std::vector<std::string> stats_rep;
  stats_cmd->add_option("--set", stats_set, "set file")->required();
  stats_cmd->add_option("--stat", stats_names, "statistic name (repeatable)")
      ->required();
  stats_cmd->add_flag("--elements", stats_elements, "include the element dump");
  stats_cmd->add_option("--rep", stats_rep,
                        "also dump the representation table (sum|difference)");

  // check
  auto* check_cmd =
      app.add_subcommand("check", "evaluate every inequality record");
  std::string check_set;
  check_cmd->add_option("--set", check_set, "set file")->required();

  // scan
  auto* scan_cmd =
      app.add_subcommand("scan", "fit a growth exponent over a family");
  std::string scan_family, scan_stat;
  std::vector<std::size_t> scan_sizes;
  std::uint64_t scan_seed = 0;
  scan_cmd->add_option("--family", scan_family,
                       "family spec (inline JSON or a file path)")
      ->required();
  scan_cmd->add_option("--sizes", scan_sizes, "set sizes (>= 3, increasing)")
      ->required()
      ->delimiter(',');
  scan_cmd->add_option("--stat", scan_stat, "statistic name")->required();
  scan_cmd->add_option("--seed", scan_seed, "seed for random families");

  // search
  auto* search_cmd =
      app.add_subcommand("search", "simulated-annealing extremal search");
  std::string search_config, search_out, search_trace;
  search_cmd->add_option("--config", search_config, "search config JSON file")
      ->required();
  search_cmd->add_option("--out", search_out, "write the best set here");
  search_cmd->add_option("--trace", search_trace, "write the trace CSV here");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a family member");
  std::string gen_family, gen_out;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("--family", gen_family,
                      "family spec (inline JSON or a file path)")
      ->required();
  gen_cmd->add_option("--n", gen_n, "set size")->required();
  gen_cmd->add_option("--seed", gen_seed, "seed for random families");
  gen_cmd->add_option("--out", gen_out, "output set file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  if (const char* env_cap = std::getenv("SUMPRODLAB_CAP")) {
    try {
      global.cap = std::stoull(env_cap);
    } catch (const std::exception&) {
      std::cerr << "error: SUMPRODLAB_CAP must be an integer\n";
      return kExitUsage;
    }
  }

  try {
    if (stats_cmd->parsed()) {
      return cmd_stats(global, stats_set, stats_names, stats_elements,
                       stats_rep);
    }
    if (check_cmd->parsed()) return cmd_check(global, check_set);
    if (scan_cmd->parsed()) {
      return cmd_scan(global, scan_family, scan_sizes, scan_stat, scan_seed);
    }
    if (search_cmd->parsed()) {
      return cmd_search(global, search_config, search_out, search_trace);
    }
    if (gen_cmd->parsed()) {
      return cmd_gen(global, gen_family, gen_n, gen_seed, gen_out);
    }
  } catch (const spl::ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const spl::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
