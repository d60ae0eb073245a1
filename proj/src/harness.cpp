#include "sumprodlab/harness.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

#include "sumprodlab/setops.hpp"

namespace sumprodlab {

std::string tier_name(Tier t) {
  return t == Tier::certified ? "certified" : "asymptotic";
}

std::string shape_name(BoundShape s) {
  return s == BoundShape::lower ? "lower" : "upper";
}

std::string status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::evaluated: return "evaluated";
    case RecordStatus::skipped_zero_element: return "skipped_zero_element";
    case RecordStatus::skipped_resource_cap: return "skipped_resource_cap";
  }
  throw std::logic_error("unreachable record status");
}

namespace {

BigInt bpow(const BigInt& base, unsigned e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigInt big_of(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }

const std::vector<std::string> kCertifiedIds = {
    "energy-sumset-lower",   "plunnecke-diff-1-1",   "plunnecke-diff-2-1",
    "plunnecke-diff-2-2",    "plunnecke-ratio-4fold", "plunnecke-prod-4fold",
    "quad-energy-lower",
};

const std::vector<std::string> kAsymptoticIds = {
    "elekes-ruzsa",
    "solymosi",
    "li-shen",
    "triple-product-lower",
    "energy-few-products-upper",
    "sumset-triple-product-lower",
    "collinear-triples-upper",
    "sigma-few-products-upper",
    "quad-product-lower",
    "ratio-8fold-lower",
    "triple-product-quantitative",
    "shift-ratio-lower",
    "sumset-ratio-lower",
    "sumset-product-lower",
    "diffset-triple-product-lower",
    "sumset-grows-under-product",
};

// Records whose formula takes products, ratios or dilates of A itself;
// these require 0 to not be an element. Estimates about A+A or A-A
// evaluate regardless (those sets may contain 0 by nature).
bool is_multiplicative_record(const std::string& id) {
  static const std::vector<std::string> kMult = {
      "plunnecke-ratio-4fold",    "plunnecke-prod-4fold",
      "elekes-ruzsa",             "solymosi",
      "li-shen",                  "triple-product-lower",
      "energy-few-products-upper", "sigma-few-products-upper",
      "quad-product-lower",       "ratio-8fold-lower",
      "triple-product-quantitative",
  };
  for (const auto& m : kMult) {
    if (m == id) return true;
  }
  return false;
}

// Memoizes the derived sets and counts one record batch needs; cap
// errors propagate to the per-record wrapper.
class Workspace {
 public:
  Workspace(const NumSet& a, const EvalContext& ctx) : a_(a), ctx_(ctx) {}

  const NumSet& a() const { return a_; }
  std::size_t n() const { return a_.size(); }
  BigInt n_big() const { return big_of(a_.size()); }
  double log2n() const { return std::log2(static_cast<double>(n())); }

  const NumSet& S() { return memo(s_, [&] { return sumset(a_, a_, ctx_); }); }
  const NumSet& D() {
    return memo(d_, [&] { return difference_set(a_, a_, ctx_); });
  }
  const NumSet& AA() {
    return memo(aa_, [&] { return product_set(a_, a_, ctx_); });
  }
  const NumSet& AAA() {
    return memo(aaa_, [&] { return product_set(AA(), a_, ctx_); });
  }
  const NumSet& AAAA() {
    return memo(aaaa_, [&] { return product_set(AAA(), a_, ctx_); });
  }
  const BigInt& energy() {
    return memo(energy_, [&] { return additive_energy(a_, ctx_); });
  }

  ExactScalar K() {
    return ExactScalar(big_of(S().size()), n_big());
  }

 private:
  template <typename T, typename F>
  const T& memo(std::optional<T>& slot, F compute) {
    if (!slot) slot = compute();
    return *slot;
  }

  const NumSet& a_;
  const EvalContext& ctx_;
  std::optional<NumSet> s_, d_, aa_, aaa_, aaaa_;
  std::optional<BigInt> energy_;
};

using FillFn = std::function<void(InequalityRecord&, Workspace&)>;

InequalityRecord run_record(const std::string& id, Tier tier, BoundShape shape,
                            Workspace& ws, const FillFn& fill) {
  InequalityRecord r;
  r.id = id;
  r.tier = tier;
  r.shape = shape;
  r.context["n"] = static_cast<double>(ws.n());
  r.context["log2_n"] = ws.log2n();
  if (is_multiplicative_record(id) && ws.a().contains(ExactScalar(0))) {
    r.status = RecordStatus::skipped_zero_element;
    r.note = "0 is an element: multiplicative record skipped";
    return r;
  }
  try {
    fill(r, ws);
    r.status = RecordStatus::evaluated;
    if (r.rhs != 0.0) r.ratio = r.lhs / r.rhs;
  } catch (const ResourceCapError& e) {
    r.status = RecordStatus::skipped_resource_cap;
    r.note = e.what();
  }
  return r;
}

// lhs and rhs both exact: compare exactly, record canonical strings.
void set_exact_sides(InequalityRecord& r, const ExactScalar& lhs,
                     const ExactScalar& rhs) {
  r.lhs = lhs.to_double();
  r.rhs = rhs.to_double();
  r.lhs_exact = lhs.str();
  r.rhs_exact = rhs.str();
  r.satisfied = r.shape == BoundShape::lower ? lhs >= rhs : lhs <= rhs;
}

// Exact lhs against a real-valued rhs: verdict falls back to doubles.
void set_mixed_sides(InequalityRecord& r, const ExactScalar& lhs, double rhs) {
  r.lhs = lhs.to_double();
  r.rhs = rhs;
  r.lhs_exact = lhs.str();
  r.satisfied = r.shape == BoundShape::lower ? r.lhs >= r.rhs : r.lhs <= r.rhs;
}

ExactScalar exact_of(const BigInt& v) { return ExactScalar(v); }
ExactScalar exact_of(std::size_t v) { return ExactScalar(big_of(v)); }

}  // namespace

const std::vector<std::string>& certified_record_ids() { return kCertifiedIds; }
const std::vector<std::string>& asymptotic_record_ids() {
  return kAsymptoticIds;
}

std::vector<std::string> record_manifest() {
  std::vector<std::string> ids = kCertifiedIds;
  ids.insert(ids.end(), kAsymptoticIds.begin(), kAsymptoticIds.end());
  return ids;
}

std::vector<InequalityRecord> check_certified(const NumSet& a,
                                              const EvalContext& ctx) {
  if (a.empty()) throw std::domain_error("check_certified of an empty set");
  Workspace ws(a, ctx);
  std::vector<InequalityRecord> out;

  out.push_back(run_record(
      "energy-sumset-lower", Tier::certified, BoundShape::lower, ws,
      [](InequalityRecord& r, Workspace& w) {
        r.context["sumset_size"] = static_cast<double>(w.S().size());
        set_exact_sides(r, exact_of(w.energy()),
                        ExactScalar(bpow(w.n_big(), 4), big_of(w.S().size())));
      }));

  struct DiffCase {
    const char* id;
    unsigned k, l;
  };
  for (const DiffCase& dc : {DiffCase{"plunnecke-diff-1-1", 1, 1},
                             DiffCase{"plunnecke-diff-2-1", 2, 1},
                             DiffCase{"plunnecke-diff-2-2", 2, 2}}) {
    out.push_back(run_record(
        dc.id, Tier::certified, BoundShape::upper, ws,
        [&dc, &ctx](InequalityRecord& r, Workspace& w) {
          // kA - lA with kA = S for k = 2 and A itself for k = 1.
          const NumSet& left = dc.k == 1 ? w.a() : w.S();
          const NumSet& right = dc.l == 1 ? w.a() : w.S();
          const NumSet diff = difference_set(left, right, ctx);
          r.context["sumset_size"] = static_cast<double>(w.S().size());
          set_exact_sides(r, exact_of(diff.size()),
                          ExactScalar(bpow(big_of(w.S().size()), dc.k + dc.l),
                                      bpow(w.n_big(), dc.k + dc.l - 1)));
        }));
  }

  out.push_back(run_record(
      "plunnecke-ratio-4fold", Tier::certified, BoundShape::lower, ws,
      [&ctx](InequalityRecord& r, Workspace& w) {
        const NumSet& p4 = w.AAAA();
        const NumSet q = ratio_set(p4, p4, ctx);
        set_exact_sides(
            r, exact_of(bpow(big_of(p4.size()), 4)),
            exact_of(bpow(big_of(w.AA().size()), 3) * big_of(q.size())));
        r.context["prod4_size"] = static_cast<double>(p4.size());
        r.context["ratio8_size"] = static_cast<double>(q.size());
      }));

  out.push_back(run_record(
      "plunnecke-prod-4fold", Tier::certified, BoundShape::upper, ws,
      [](InequalityRecord& r, Workspace& w) {
        set_exact_sides(r, exact_of(w.AAAA().size()),
                        ExactScalar(bpow(big_of(w.AAA().size()), 4),
                                    bpow(big_of(w.AA().size()), 3)));
        r.context["prod2_size"] = static_cast<double>(w.AA().size());
        r.context["prod3_size"] = static_cast<double>(w.AAA().size());
      }));

  out.push_back(run_record(
      "quad-energy-lower", Tier::certified, BoundShape::lower, ws,
      [&ctx](InequalityRecord& r, Workspace& w) {
        const BigInt q = quad_count(w.a(), ctx);
        set_exact_sides(r, exact_of(q),
                        ExactScalar(w.energy() * w.energy(),
                                    w.n_big() * w.n_big()));
        r.context["energy"] = w.energy().get_d();
      }));

  return out;
}

std::vector<InequalityRecord> measure_asymptotic(const NumSet& a,
                                                 const EvalContext& ctx) {
  if (a.size() < 2) {
    throw std::domain_error("measure_asymptotic requires |A| >= 2");
  }
  Workspace ws(a, ctx);
  std::vector<InequalityRecord> out;
  const double n = static_cast<double>(a.size());
  const double logn = ws.log2n();

  auto add = [&](const std::string& id, BoundShape shape, const FillFn& fill) {
    out.push_back(run_record(id, Tier::asymptotic, shape, ws, fill));
  };

  add("elekes-ruzsa", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        set_mixed_sides(
            r, exact_of(bpow(big_of(w.S().size()), 4) * big_of(w.AA().size())),
            std::pow(n, 6) / logn);
        r.context["sumset_size"] = static_cast<double>(w.S().size());
        r.context["prodset_size"] = static_cast<double>(w.AA().size());
      });

  add("solymosi", BoundShape::lower, [&](InequalityRecord& r, Workspace& w) {
    set_mixed_sides(
        r, exact_of(bpow(big_of(w.S().size()), 2) * big_of(w.AA().size())),
        std::pow(n, 4) / logn);
    r.context["sumset_size"] = static_cast<double>(w.S().size());
    r.context["prodset_size"] = static_cast<double>(w.AA().size());
  });

  add("li-shen", BoundShape::lower, [&](InequalityRecord& r, Workspace& w) {
    const NumSet ra = ratio_set(w.a(), w.a(), ctx);
    set_exact_sides(
        r, exact_of(bpow(big_of(w.S().size()), 2) * big_of(ra.size())),
        exact_of(bpow(w.n_big(), 4)));
    r.context["ratioset_size"] = static_cast<double>(ra.size());
  });

  add("triple-product-lower", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        set_exact_sides(r, exact_of(w.AAA().size()),
                        exact_of(bpow(w.n_big(), 2)));
        r.context["sumset_exponent"] =
            std::log2(static_cast<double>(w.S().size())) / logn;
        r.context["prod3_exponent"] =
            std::log2(static_cast<double>(w.AAA().size())) / logn;
      });

  add("energy-few-products-upper", BoundShape::upper,
      [&](InequalityRecord& r, Workspace& w) {
        const double m = static_cast<double>(w.AA().size()) / n;
        set_mixed_sides(r, exact_of(w.energy()),
                        std::pow(m, 8.0 / 5.0) * std::pow(n, 49.0 / 20.0) *
                            std::pow(logn, 1.0 / 5.0));
        r.context["M"] = m;
      });

  add("sumset-triple-product-lower", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        const NumSet ss = product_set(w.S(), w.S(), ctx);
        const NumSet sss = product_set(ss, w.S(), ctx);
        set_mixed_sides(r, exact_of(sss.size()),
                        std::pow(n, 2.0 + 1.0 / 392.0));
        r.context["sumset_size"] = static_cast<double>(w.S().size());
      });

  add("collinear-triples-upper", BoundShape::upper,
      [&](InequalityRecord& r, Workspace& w) {
        set_mixed_sides(r, exact_of(collinear_energy(w.a(), w.a(), ctx)),
                        std::pow(n, 4) * logn);
      });

  add("sigma-few-products-upper", BoundShape::upper,
      [&](InequalityRecord& r, Workspace& w) {
        // X = a^-1 AA for the smallest element a; B = (A+A) union -A.
        const ExactScalar pivot = w.a().min();
        const NumSet x =
            affine_image(w.AA(), pivot.reciprocal(), ExactScalar(0));
        const NumSet b =
            set_union(w.S(), affine_image(w.a(), ExactScalar(-1), ExactScalar(0)));
        set_mixed_sides(r, exact_of(sigma(x, b, b, ctx)),
                        std::pow(static_cast<double>(b.size()), 17.0 / 10.0) *
                            std::pow(static_cast<double>(x.size()), 3.0 / 20.0));
        r.context["c_prime"] = 0.0;
        r.context["x_size"] = static_cast<double>(x.size());
        r.context["b_size"] = static_cast<double>(b.size());
      });

  add("quad-product-lower", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        set_exact_sides(r, exact_of(w.AAAA().size()),
                        exact_of(bpow(w.n_big(), 2)));
        r.context["prod4_exponent"] =
            std::log2(static_cast<double>(w.AAAA().size())) / logn;
      });

  add("ratio-8fold-lower", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        const NumSet q = ratio_set(w.AAAA(), w.AAAA(), ctx);
        const double k = w.K().to_double();
        set_mixed_sides(r, exact_of(q.size()),
                        std::pow(n, 100.0 / 49.0) / std::pow(k, 40.0 / 7.0));
        r.context["K"] = k;
      });

  add("triple-product-quantitative", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        const double k = w.K().to_double();
        set_mixed_sides(r, exact_of(w.AAA().size()),
                        std::pow(n, 2.0 + 1.0 / 392.0) /
                            std::pow(k, 125.0 / 56.0));
        r.context["K"] = k;
      });

  add("shift-ratio-lower", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        const NumSet rp = shift_ratio_set(w.a(), ShiftSign::plus, ctx);
        set_mixed_sides(r, exact_of(rp.size()), std::pow(n, 2) / logn);
      });

  add("sumset-ratio-lower", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        const NumSet q = ratio_set(w.S(), w.S(), ctx);
        set_exact_sides(r, exact_of(q.size()), exact_of(bpow(w.n_big(), 2)));
      });

  add("sumset-product-lower", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        // Sign choice: the A+A flavor (the A-A flavor appears at triple
        // depth in diffset-triple-product-lower).
        const NumSet ss = product_set(w.S(), w.S(), ctx);
        set_mixed_sides(r, exact_of(ss.size()), std::pow(n, 2) / logn);
      });

  add("diffset-triple-product-lower", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        const NumSet dd = product_set(w.D(), w.D(), ctx);
        const NumSet ddd = product_set(dd, w.D(), ctx);
        set_mixed_sides(r, exact_of(ddd.size()), std::pow(n, 2.0 + 1.0 / 8.0));
      });

  add("sumset-grows-under-product", BoundShape::lower,
      [&](InequalityRecord& r, Workspace& w) {
        const NumSet ss = product_set(w.S(), w.S(), ctx);
        set_mixed_sides(r, exact_of(ss.size()),
                        std::pow(static_cast<double>(w.S().size()),
                                 1.0 + 1.0 / 398.0));
        r.context["sumset_size"] = static_cast<double>(w.S().size());
      });

  return out;
}

bool all_certified_satisfied(const std::vector<InequalityRecord>& records) {
  for (const auto& r : records) {
    if (r.tier == Tier::certified && r.status == RecordStatus::evaluated &&
        !r.satisfied) {
      return false;
    }
  }
  return true;
}

// ---- statistic registry --------------------------------------------------

namespace {

struct StatisticEntry {
  const char* canonical;
  std::vector<const char*> aliases;
  std::function<BigInt(const NumSet&, const EvalContext&)> eval;
};

BigInt card(const NumSet& s) { return big_of(s.size()); }

const std::vector<StatisticEntry>& registry() {
  static const std::vector<StatisticEntry> entries = {
      {"A+A", {"sumset"}, [](const NumSet& a, const EvalContext& c) {
         return card(sumset(a, a, c));
       }},
      {"A-A", {"diffset", "difference_set"},
       [](const NumSet& a, const EvalContext& c) {
         return card(difference_set(a, a, c));
       }},
      {"AA", {"prodset", "product_set"},
       [](const NumSet& a, const EvalContext& c) {
         return card(product_set(a, a, c));
       }},
      {"A/A", {"ratioset", "ratio_set"},
       [](const NumSet& a, const EvalContext& c) {
         return card(ratio_set(a, a, c));
       }},
      {"AAA", {"prod3"}, [](const NumSet& a, const EvalContext& c) {
         return card(iterated_product(a, 3, c));
       }},
      {"AAAA", {"prod4"}, [](const NumSet& a, const EvalContext& c) {
         return card(iterated_product(a, 4, c));
       }},
      {"E+", {"energy", "additive_energy"},
       [](const NumSet& a, const EvalContext& c) {
         return additive_energy(a, c);
       }},
      {"T", {"collinear", "collinear_energy"},
       [](const NumSet& a, const EvalContext& c) {
         return collinear_energy(a, a, c);
       }},
      {"quad", {"quad_count"}, [](const NumSet& a, const EvalContext& c) {
         return quad_count(a, c);
       }},
      {"R'", {"shift_ratio_plus"}, [](const NumSet& a, const EvalContext& c) {
         return card(shift_ratio_set(a, ShiftSign::plus, c));
       }},
      {"R", {"shift_ratio_minus"}, [](const NumSet& a, const EvalContext& c) {
         return card(shift_ratio_set(a, ShiftSign::minus, c));
       }},
      {"S/S", {"sumset_ratio"}, [](const NumSet& a, const EvalContext& c) {
         const NumSet s = sumset(a, a, c);
         return card(ratio_set(s, s, c));
       }},
      {"SS", {"sumset_product"}, [](const NumSet& a, const EvalContext& c) {
         const NumSet s = sumset(a, a, c);
         return card(product_set(s, s, c));
       }},
      {"SSS", {"sumset_product3"}, [](const NumSet& a, const EvalContext& c) {
         const NumSet s = sumset(a, a, c);
         return card(iterated_product(s, 3, c));
       }},
  };
  return entries;
}

const StatisticEntry& find_statistic(const std::string& name_or_alias) {
  for (const auto& e : registry()) {
    if (name_or_alias == e.canonical) return e;
    for (const char* alias : e.aliases) {
      if (name_or_alias == alias) return e;
    }
  }
  throw std::domain_error("unregistered statistic: '" + name_or_alias + "'");
}

}  // namespace

const std::vector<std::string>& statistic_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.canonical);
    return out;
  }();
  return names;
}

std::string resolve_statistic(const std::string& name_or_alias) {
  return find_statistic(name_or_alias).canonical;
}

BigInt evaluate_statistic(const std::string& name_or_alias, const NumSet& a,
                          const EvalContext& ctx) {
  return find_statistic(name_or_alias).eval(a, ctx);
}

// ---- exponent fitting ------------------------------------------------------

ExponentFit fit_exponent(const FamilySpec& family,
                         const std::vector<std::size_t>& sizes,
                         const std::string& statistic, std::uint64_t seed,
                         const EvalContext& ctx) {
  if (sizes.size() < 3) {
    throw std::domain_error("fit_exponent requires at least 3 sizes");
  }
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) {
      throw std::domain_error("fit_exponent sizes must be strictly increasing");
    }
  }
  ExponentFit fit;
  fit.family = family;
  fit.statistic = resolve_statistic(statistic);
  fit.seed = seed;
  fit.sizes = sizes;

  std::vector<double> xs, ys;
  for (std::size_t n : sizes) {
    const NumSet a = generate(family, n, seed);
    BigInt v = evaluate_statistic(fit.statistic, a, ctx);
    if (sgn(v) <= 0) {
      throw std::domain_error("fit_exponent statistic must be positive");
    }
    xs.push_back(std::log2(static_cast<double>(n)));
    ys.push_back(std::log2(v.get_d()));
    fit.values.push_back(std::move(v));
  }

  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = m * sxx - sx * sx;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;

  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / m;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double pred = fit.slope * xs[i] + fit.intercept;
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  fit.r_squared = ss_tot == 0.0 ? (ss_res == 0.0 ? 1.0 : 0.0)
                                : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace sumprodlab
