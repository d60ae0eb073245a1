#include "sumprodlab/io.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sumprodlab {

namespace {

ExactScalar scalar_from_json(const Json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      return ExactScalar::parse(std::to_string(v.get<std::uint64_t>()));
    }
    return ExactScalar::parse(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) return ExactScalar::parse(v.get<std::string>());
  throw std::invalid_argument(
      "set element must be an integer or a \"p/q\" string, got: " + v.dump());
}

}  // namespace

NumSet set_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("elements") ||
      !doc["elements"].is_array()) {
    throw std::invalid_argument(
        "set document must be {\"elements\": [...]}");
  }
  std::vector<ExactScalar> vals;
  vals.reserve(doc["elements"].size());
  for (const Json& v : doc["elements"]) vals.push_back(scalar_from_json(v));
  return build_set(std::move(vals));
}

Json scalar_to_json(const ExactScalar& x) {
  if (x.is_integer()) {
    if (auto v = x.as_int64()) return Json(*v);
    return Json(x.str());
  }
  return Json(x.str());
}

Json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json set_to_json(const NumSet& a) {
  Json elems = Json::array();
  for (const ExactScalar& x : a) elems.push_back(scalar_to_json(x));
  return Json{{"elements", std::move(elems)}};
}

NumSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open set file: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("set file " + path + ": " + e.what());
  }
  return set_from_json(doc);
}

void write_set_file(const std::string& path, const NumSet& a) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write set file: " + path);
  out << set_to_json(a).dump(1) << "\n";
}

Json multiplicity_table_to_json(const MultiplicityTable& table) {
  Json out = Json::object();
  for (const auto& [value, count] : table.entries()) {
    out[value.str()] = count;
  }
  return out;
}

Json record_to_json(const InequalityRecord& r) {
  Json out{{"id", r.id},
           {"tier", tier_name(r.tier)},
           {"shape", shape_name(r.shape)},
           {"status", status_name(r.status)},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"ratio", r.ratio},
           {"satisfied", r.satisfied}};
  if (!r.lhs_exact.empty()) out["lhs_exact"] = r.lhs_exact;
  if (!r.rhs_exact.empty()) out["rhs_exact"] = r.rhs_exact;
  if (!r.note.empty()) out["note"] = r.note;
  Json ctx = Json::object();
  for (const auto& [k, v] : r.context) ctx[k] = v;
  out["context"] = std::move(ctx);
  return out;
}

Json fit_to_json(const ExponentFit& fit) {
  Json sizes = Json::array();
  Json values = Json::array();
  Json points = Json::array();
  for (std::size_t i = 0; i < fit.sizes.size(); ++i) {
    sizes.push_back(fit.sizes[i]);
    values.push_back(bigint_to_json(fit.values[i]));
    points.push_back(Json::array(
        {std::log2(static_cast<double>(fit.sizes[i])),
         std::log2(fit.values[i].get_d())}));
  }
  return Json{{"family", family_to_json(fit.family)},
              {"statistic", fit.statistic},
              {"seed", fit.seed},
              {"sizes", std::move(sizes)},
              {"values", std::move(values)},
              {"points", std::move(points)},
              {"fit",
               Json{{"slope", fit.slope},
                    {"intercept", fit.intercept},
                    {"r_squared", fit.r_squared}}}};
}

Json family_to_json(const FamilySpec& spec) {
  Json out{{"kind", family_kind_name(spec.kind)}};
  switch (spec.kind) {
    case FamilyKind::ap:
      out["start"] = spec.start.str();
      out["step"] = spec.step.str();
      break;
    case FamilyKind::gp:
      out["base"] = spec.base.str();
      out["ratio"] = spec.ratio.str();
      break;
    case FamilyKind::squares:
      break;
    case FamilyKind::random_interval:
      out["density"] = spec.density.str();
      break;
    case FamilyKind::random_gp_subset:
      out["generator"] = spec.generator.str();
      out["exponent_bound"] = spec.exponent_bound;
      break;
  }
  return out;
}

namespace {

ExactScalar scalar_field(const Json& doc, const char* key,
                         const ExactScalar& fallback) {
  if (!doc.contains(key)) return fallback;
  return scalar_from_json(doc[key]);
}

}  // namespace

FamilySpec family_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw std::invalid_argument("family spec must be an object with a kind");
  }
  FamilySpec spec;
  spec.kind = family_kind_from_name(doc["kind"].get<std::string>());
  spec.start = scalar_field(doc, "start", spec.start);
  spec.step = scalar_field(doc, "step", spec.step);
  spec.base = scalar_field(doc, "base", spec.base);
  spec.ratio = scalar_field(doc, "ratio", spec.ratio);
  spec.density = scalar_field(doc, "density", spec.density);
  spec.generator = scalar_field(doc, "generator", spec.generator);
  if (doc.contains("exponent_bound")) {
    spec.exponent_bound = doc["exponent_bound"].get<std::uint64_t>();
  }
  spec.validate();
  return spec;
}

Json search_config_to_json(const SearchConfig& config) {
  Json out{{"schema_version", kSchemaVersion},
           {"n", config.n},
           {"universe_bound", config.universe_bound},
           {"objective",
            Json{{"statistic", config.objective.statistic},
                 {"form", score_form_name(config.objective.form)}}},
           {"penalty_weight", config.penalty_weight},
           {"iterations", config.iterations},
           {"initial_temperature", config.initial_temperature},
           {"cooling", config.cooling},
           {"seed", config.seed}};
  if (config.constraint) {
    out["constraint"] = Json{{"statistic", config.constraint->statistic},
                             {"form", score_form_name(config.constraint->form)},
                             {"cap", config.constraint->cap}};
  }
  return out;
}

SearchConfig search_config_from_json(const Json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("search config must be a JSON object");
  }
  if (doc.contains("schema_version") &&
      doc["schema_version"].get<int>() != kSchemaVersion) {
    throw std::invalid_argument("unsupported search config schema_version");
  }
  SearchConfig config;
  config.n = doc.at("n").get<std::size_t>();
  config.universe_bound = doc.at("universe_bound").get<std::int64_t>();
  if (doc.contains("objective")) {
    const Json& obj = doc["objective"];
    config.objective.statistic = obj.at("statistic").get<std::string>();
    if (obj.contains("form")) {
      config.objective.form =
          score_form_from_name(obj["form"].get<std::string>());
    }
  }
  if (doc.contains("constraint") && !doc["constraint"].is_null()) {
    const Json& con = doc["constraint"];
    ConstraintSpec c;
    c.statistic = con.at("statistic").get<std::string>();
    if (con.contains("form")) {
      c.form = score_form_from_name(con["form"].get<std::string>());
    }
    c.cap = con.at("cap").get<double>();
    config.constraint = c;
  }
  if (doc.contains("penalty_weight")) {
    config.penalty_weight = doc["penalty_weight"].get<double>();
  }
  if (doc.contains("iterations")) {
    config.iterations = doc["iterations"].get<std::uint64_t>();
  }
  if (doc.contains("initial_temperature")) {
    config.initial_temperature = doc["initial_temperature"].get<double>();
  }
  if (doc.contains("cooling")) config.cooling = doc["cooling"].get<double>();
  if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
  config.validate();
  return config;
}

Json search_result_to_json(const SearchResult& result) {
  Json trace = Json::array();
  for (const auto& [iter, value] : result.trace) {
    trace.push_back(Json::array({iter, value}));
  }
  return Json{{"best_set", set_to_json(result.best_set)["elements"]},
              {"best_score", result.best_score},
              {"evaluations", result.evaluations},
              {"trace", std::move(trace)}};
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  std::ostringstream os;
  os << "fnv1a:" << std::hex << h;
  return os.str();
}

Json report_envelope(Json payload, const std::string& input_digest) {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return Json{{"schema_version", kSchemaVersion},
              {"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
              {"generated_at", std::string(stamp)},
              {"input_digest", input_digest},
              {"payload", std::move(payload)}};
}

std::string records_to_csv(const std::vector<InequalityRecord>& records) {
  std::ostringstream os;
  os << "id,tier,lhs,rhs,ratio,satisfied,n,K,M\n";
  for (const auto& r : records) {
    auto ctx_or = [&](const char* key) -> std::string {
      auto it = r.context.find(key);
      if (it == r.context.end()) return "";
      std::ostringstream v;
      v << it->second;
      return v.str();
    };
    const double n = r.context.count("n") ? r.context.at("n") : 0.0;
    std::string k;
    if (r.context.count("K")) {
      k = ctx_or("K");
    } else if (r.context.count("sumset_size") && n > 0) {
      std::ostringstream v;
      v << r.context.at("sumset_size") / n;
      k = v.str();
    }
    os << r.id << ',' << tier_name(r.tier) << ',' << r.lhs << ',' << r.rhs
       << ',' << r.ratio << ',' << (r.satisfied ? "true" : "false") << ','
       << n << ',' << k << ',' << ctx_or("M") << "\n";
  }
  return os.str();
}

std::string fit_points_to_csv(const ExponentFit& fit) {
  std::ostringstream os;
  os << "log2_n,log2_value\n";
  for (std::size_t i = 0; i < fit.sizes.size(); ++i) {
    os << std::log2(static_cast<double>(fit.sizes[i])) << ','
       << std::log2(fit.values[i].get_d()) << "\n";
  }
  return os.str();
}

}  // namespace sumprodlab
