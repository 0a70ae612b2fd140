#include "avoidlab/cli/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "avoidlab/chow.hpp"
#include "avoidlab/cli/report.hpp"
#include "avoidlab/curvelab.hpp"
#include "avoidlab/halphen.hpp"
#include "avoidlab/invariants.hpp"
#include "avoidlab/parallel.hpp"
#include "avoidlab/surfaces.hpp"
#include "avoidlab/veronese.hpp"

namespace avoidlab::cli {

namespace {

using avoidlab::to_string;

struct Params {
  std::int64_t n = 0, s = 0, m = 1, d = 0, g = 0, e = 0, a = 0, b = 0, t = 0, k = 0, w1 = 0;
  std::string mode = "as-printed";
  std::string surface_case = "general";
  std::string fact_kind;
  std::vector<std::string> factors;
  std::int64_t t_max = 4;
  bool normal = false;
  unsigned attempts = 5;
  std::int64_t n_min = 3, n_max = 30, s_min = 3, s_max = 30;
  bool measure = false;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

unsigned as_unsigned(std::int64_t v, const char* name) {
  require(v >= 0 && v <= std::numeric_limits<unsigned>::max(), std::string(name) + " out of range");
  return static_cast<unsigned>(v);
}

Json base_config(const RunConfig& rc, const std::string& output) {
  Json c = Json::object();
  c["prime"] = rc.prime;
  c["seed"] = rc.seed;
  c["trials"] = rc.trials;
  c["jobs"] = rc.jobs;
  c["output"] = output;
  c["out"] = rc.out_path.empty() ? Json(nullptr) : Json(rc.out_path);
  return c;
}

Json divisor_json(const DivisorClass& d) { return Json{{"a", d.a}, {"b", d.b}}; }

Json identity_json(const IdentityCheck& c) {
  Json j = Json::object();
  j["s"] = c.s;
  j["applicable"] = c.applicable;
  j["h0_I_s"] = claim(c.h0_I_s, kMeasured);
  j["rhs_formula"] = claim(c.rhs_formula, kFormula);
  j["rhs_exact_sequence"] = claim(c.rhs_exact_sequence, kMeasured);
  j["h0_IH_s"] = claim(c.h0_IH_s, kMeasured);
  j["restriction_injective"] = c.restriction_injective;
  j["holds"] = c.holds;
  return j;
}

// ---------------------------------------------------------------------------

void run_invariants(const Params& p, bool have_d, bool have_g, Report& r) {
  r.config["n"] = p.n;
  r.config["s"] = p.s;
  r.config["m"] = p.m;
  const auto inv = compute_invariants({p.n, p.s, p.m});
  r.result["d_ns"] = claim(inv.d_ns, kFormula);
  r.result["d_ns_is_upper_bound"] = inv.d_is_upper_bound;
  r.result["g0"] = claim(inv.g0, kFormula);
  r.result["alpha_conj"] = claim(inv.alpha_conj, kConjecture);
  r.result["claim"] = claim(inv.claim_holds, kFormula);
  r.result["phi"] = claim(inv.phi_value, kFormula);

  require(have_d == have_g, "--d and --g must be given together");
  if (have_d) {
    const auto mode = parse_condition_mode(p.mode);
    r.config["d"] = p.d;
    r.config["g"] = p.g;
    r.config["mode"] = to_string(mode);
    const auto c = maximal_rank_conditions(p.n, p.d, p.g, p.s, mode);
    Json j = Json::object();
    j["mode"] = to_string(c.mode);
    j["c1"] = claim(c.c1, kFormula);
    j["c2"] = claim(c.c2, kFormula);
    j["c3"] = claim(c.c3, kFormula);
    j["c4"] = claim(c.c4, kFormula);
    j["all"] = claim(c.all(), kFormula);
    j["expected_h0"] = claim(c.expected_h0, kConjecture);
    j["diagnostic"] = c.diagnostic;
    r.result["maximal_rank"] = std::move(j);
  }
}

void run_classify(const Params& p, bool have_n, Report& r) {
  r.config["d"] = p.d;
  r.config["s"] = p.s;
  if (have_n) r.config["n"] = p.n;
  const auto c = classify_range(p.d, p.s);
  r.result["range"] = to_string(c.label);
  Json matching = Json::array();
  bool in_a = false;
  for (auto l : c.matching) {
    matching.push_back(to_string(l));
    in_a = in_a || l == RangeLabel::kA;
  }
  r.result["matching"] = std::move(matching);
  r.result["on_ab_boundary"] = c.on_ab_boundary;
  r.result["on_empty_a_boundary"] = c.on_empty_a_boundary;
  if (have_n && in_a) r.result["range_a_max_genus"] = claim(range_A_max_genus(p.d, p.s, p.n), kFormula);
  if (p.d > p.s * (p.s - 1)) {
    const auto l = gruson_peskine_link(p.d, p.s);
    Json j = Json::object();
    j["ci"] = l.ci_flag;
    j["plane_degree"] = claim(l.plane_curve_degree, kFormula);
    j["surfaces"] = claim(Json::array({l.surface_degree_low, l.surface_degree_high}), kFormula);
    j["h0_at_most_two"] = l.h0_at_most_two;
    j["h0_equals_two"] = l.h0_equals_two_case;
    r.result["linkage"] = std::move(j);
  } else {
    r.result["linkage"] = nullptr;
  }
}

DivisorClass parse_factor(const std::string& text) {
  const auto comma = text.find(',');
  require(comma != std::string::npos, "factor '" + text + "' must be written a,b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string sa = text.substr(0, comma), sb = text.substr(comma + 1);
    DivisorClass d{std::stoll(sa, &used_a), std::stoll(sb, &used_b)};
    require(used_a == sa.size() && used_b == sb.size(), "factor '" + text + "' is not a,b");
    return d;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("factor '" + text + "' is not a pair of integers");
  }
}

void run_chow_mult(const Params& p, Report& r) {
  r.config["m"] = p.m;
  r.config["e"] = p.e;
  r.config["factors"] = p.factors;
  const auto scroll = ScrollData::make(p.m, p.e);
  std::vector<DivisorClass> factors;
  Json fj = Json::array();
  for (const auto& f : p.factors) {
    factors.push_back(parse_factor(f));
    fj.push_back(divisor_json(factors.back()));
  }
  r.result["factors"] = std::move(fj);
  const auto prod = chow_multiply(scroll, factors);
  if (const auto* cls = std::get_if<ChowClass>(&prod)) {
    r.result["product"] = claim(Json{{"codim", cls->codim}, {"a", cls->a}, {"b", cls->b}}, kFormula);
  } else {
    r.result["degree"] = claim(std::get<std::int64_t>(prod), kFormula);
  }
}

void run_chow_effective(const Params& p, Report& r) {
  r.config["m"] = p.m;
  r.config["e"] = p.e;
  r.config["a"] = p.a;
  r.config["b"] = p.b;
  const auto scroll = ScrollData::make(p.m, p.e);
  const DivisorClass d{p.a, p.b};
  r.result["effective"] = claim(is_effective(scroll, d), kFormula);
  r.result["globally_generated"] = claim(is_globally_generated(scroll, d), kFormula);
  r.result["ample"] = claim(is_ample(scroll, d), kFormula);
}

void run_chow_contains(const Params& p, Report& r) {
  r.config["m"] = p.m;
  r.config["e"] = p.e;
  r.config["b"] = p.b;
  r.config["t"] = p.t;
  const auto scroll = ScrollData::make(p.m, p.e);
  const auto v = divisor_in_hypersurface(scroll, {1, p.b}, p.t);
  r.result["contained"] = claim(v.contained, kFormula);
  r.result["residual"] = divisor_json(v.residual);
  r.result["sufficient_condition"] = claim(v.sufficient_condition, kFormula);
  r.result["in_gap"] = v.in_gap;
}

void run_chow_plan(const Params& p, Report& r) {
  r.config["n"] = p.n;
  r.config["m"] = p.m;
  r.config["s"] = p.s;
  r.config["d"] = p.d;
  const auto plan = plan_scroll_divisor(p.n, p.m, p.s, p.d);
  r.result["e"] = claim(plan.e, kFormula);
  r.result["scroll"] = Json{{"m", plan.scroll.m}, {"e", plan.scroll.e}};
  r.result["divisor"] = divisor_json(plan.divisor);
  r.result["degree"] = claim(plan.degree, kFormula);
  r.result["degree_check"] = plan.degree_check;
  r.result["contained_in_degree_s_minus_1"] = claim(plan.contained_in_degree_s_minus_1, kFormula);
  r.result["consistent"] = plan.consistent;
  r.mismatch = !plan.consistent;
}

void run_curve_verify(const Params& p, const RunConfig& rc, PrimeModulus mod, Report& r) {
  r.config["n"] = p.n;
  r.config["s"] = p.s;
  require(p.n >= 2, "--n must be at least 2");
  const auto c = verify_minimal_degree(static_cast<std::size_t>(p.n), as_unsigned(p.s, "--s"), rc.trials, mod,
                                       rc.seed, rc.jobs);
  r.result["d_ns"] = claim(c.d_ns, kFormula);
  // Only genus-0 curves are sampled, so statements about general curves of
  // positive genus g0 rest on the formulas alone.
  const auto g0 = genus_bound_g0(p.n, p.s);
  r.result["g0"] = claim(g0, kFormula);
  r.result["general_curve_coverage"] = g0 == 0 ? "measured" : "formula-only";
  Json upper = Json::array();
  for (const auto& t : c.upper) {
    Json j = Json::object();
    j["index"] = t.index;
    j["seed"] = t.seed;
    j["curve_retries"] = t.curve_retries;
    j["h0_I_sm1"] = claim(t.h0_I_sm1, kMeasured);
    j["avoids"] = t.avoids;
    j["identity"] = identity_json(t.identity);
    upper.push_back(std::move(j));
  }
  Json lower = Json::array();
  for (const auto& t : c.lower) {
    Json j = Json::object();
    j["index"] = t.index;
    j["seed"] = t.seed;
    j["h0_I_sm1"] = claim(t.h0_I_sm1, kMeasured);
    j["forced_bound"] = claim(t.forced_bound, kFormula);
    j["bound_holds"] = t.bound_holds;
    lower.push_back(std::move(j));
  }
  r.result["upper"] = std::move(upper);
  r.result["lower"] = std::move(lower);
  r.result["upper_success"] = c.upper_success;
  r.result["lower_success"] = c.lower_success;
  r.result["identity_checked"] = c.identity_checked;
  r.result["identity_violations"] = c.identity_violations;
  r.result["passed"] = c.passed();
  r.mismatch = !c.passed();
}

ParamCurve curve_for(const Params& p, const RunConfig& rc, PrimeModulus mod, Report& r) {
  r.config["normal"] = p.normal;
  if (p.normal) {
    require(p.d >= 2, "--d must be at least 2");
    r.config["d"] = p.d;
    return rational_normal_curve(as_unsigned(p.d, "--d"), mod);
  }
  r.config["n"] = p.n;
  r.config["d"] = p.d;
  require(p.n >= 2, "--n must be at least 2");
  return random_rational_curve(static_cast<std::size_t>(p.n), as_unsigned(p.d, "--d"), mod, rc.seed);
}

void run_curve_profile(const Params& p, const RunConfig& rc, PrimeModulus mod, Report& r) {
  const auto curve = curve_for(p, rc, mod, r);
  r.config["t_max"] = p.t_max;
  const auto prof = cohomology_profile(curve, as_unsigned(p.t_max, "--t-max"));
  r.result["n"] = curve.n;
  r.result["d"] = curve.d;
  r.result["genus"] = claim(0, kFormula);
  r.result["curve_retries"] = curve.retries;
  Json rows = Json::array();
  for (const auto& row : prof.rows) {
    Json j = Json::object();
    j["t"] = row.t;
    j["hf"] = claim(row.hf, kMeasured);
    j["h0_I"] = claim(row.h0_I, kMeasured);
    j["h1_I"] = claim(row.h1_I, kMeasured);
    j["h0_O"] = claim(row.h0_O, kFormula);
    j["h1_O"] = claim(row.h1_O, kFormula);
    rows.push_back(std::move(j));
  }
  r.result["rows"] = std::move(rows);
}

void run_curve_section(const Params& p, const RunConfig& rc, PrimeModulus mod, Report& r) {
  const auto curve = curve_for(p, rc, mod, r);
  r.config["t_max"] = p.t_max;
  const std::uint64_t sseed = section_seed(rc.seed);
  r.config["section_seed"] = sseed;
  const unsigned t_max = as_unsigned(p.t_max, "--t-max");
  const auto sec = section_cohomology(curve, t_max, sseed);
  const auto prof = cohomology_profile(curve, t_max);

  r.result["n"] = curve.n;
  r.result["d"] = curve.d;
  r.result["ell"] = sec.ell;
  r.result["eliminated"] = sec.eliminated;
  r.result["section_retries"] = sec.retries;
  r.result["chi"] = claim(sec.chi, kMeasured);
  Json rows = Json::array();
  for (const auto& row : sec.rows) {
    Json j = Json::object();
    j["t"] = row.t;
    j["h0_IH"] = claim(row.h0_IH, kMeasured);
    j["h1_IH"] = claim(row.h1_IH, kMeasured);
    rows.push_back(std::move(j));
  }
  r.result["rows"] = std::move(rows);
  Json psi = Json::array();
  for (const auto& [t, v] : sec.psi) psi.push_back(Json{{"t", t}, {"psi", claim(v, kFormula)}});
  r.result["psi"] = std::move(psi);

  bool ok = true;
  Json ids = Json::array();
  for (unsigned s = 2; s <= t_max; ++s) {
    const auto c = check_section_identity(curve, prof, sec, s);
    ok = ok && (!c.applicable || c.holds);
    ids.push_back(identity_json(c));
  }
  r.result["identity"] = std::move(ids);

  const auto cast = check_castelnuovo(curve, sec);
  Json cj = Json::object();
  cj["chi"] = cast.chi;
  cj["t_checked_to"] = cast.t_checked_to;
  cj["holds"] = cast.holds;
  cj["violations"] = cast.violations;
  r.result["castelnuovo"] = std::move(cj);
  r.mismatch = !(ok && cast.holds);
}

void run_curve_probe(const Params& p, const RunConfig& rc, PrimeModulus mod, Report& r) {
  r.config["n"] = p.n;
  r.config["s"] = p.s;
  r.config["d"] = p.d;
  require(p.n >= 2, "--n must be at least 2");
  const auto pr = probe_degree_question(static_cast<std::size_t>(p.n), as_unsigned(p.s, "--s"),
                                        as_unsigned(p.d, "--d"), rc.trials, mod, rc.seed, rc.jobs);
  r.result["d_ns"] = claim(pr.d_ns, kFormula);
  Json entries = Json::array();
  for (const auto& e : pr.entries) {
    Json j = Json::object();
    j["index"] = e.index;
    j["seed"] = e.seed;
    j["h0_I_sm1"] = claim(e.h0_I_sm1, kMeasured);
    j["h0_I_s"] = claim(e.h0_I_s, kMeasured);
    j["witness"] = e.witness;
    entries.push_back(std::move(j));
  }
  r.result["entries"] = std::move(entries);
  Json dist = Json::array();
  for (const auto& [key, count] : pr.distribution) {
    dist.push_back(Json{{"h0_I_sm1", key.first}, {"h0_I_s", key.second}, {"count", count}});
  }
  r.result["distribution"] = std::move(dist);
  r.result["witness_found"] = pr.witness_found;
}

void fill_projection(const ProjectionComparison& c, Report& r) {
  const char* expected_prov = c.open_question ? kConjecture : kFormula;
  r.result["N"] = claim(static_cast<std::int64_t>(veronese_dimension(c.k)), kFormula);
  r.result["expected_h0"] = claim(c.expected.first, expected_prov);
  r.result["expected_h1"] = claim(c.expected.second, expected_prov);
  r.result["measured_h0"] = claim(c.measured.h0_I, kMeasured);
  r.result["measured_h1"] = claim(c.measured.h1_I, kMeasured);
  r.result["rank"] = claim(c.measured.rank, kMeasured);
  r.result["rows"] = c.measured.rows;
  r.result["cols"] = c.measured.cols;
  r.result["match"] = c.match;
  r.result["seed_used"] = c.seed_used;
  r.result["attempts"] = c.attempts;
  r.result["open_question"] = c.open_question;
}

void run_veronese_verify(const Params& p, const RunConfig& rc, PrimeModulus mod, Report& r) {
  r.config["k"] = p.k;
  r.config["n"] = p.n;
  r.config["s"] = p.s;
  r.config["attempts"] = p.attempts;
  require(p.n >= 0, "--n out of range");
  const auto c = compare_with_expectation(as_unsigned(p.k, "--k"), static_cast<std::size_t>(p.n),
                                          as_unsigned(p.s, "--s"), mod, rc.seed, p.attempts);
  fill_projection(c, r);
  r.mismatch = !c.match && !c.open_question;
}

void run_veronese_probe(const Params& p, const RunConfig& rc, PrimeModulus mod, Report& r) {
  r.config["k"] = p.k;
  r.config["n"] = p.n;
  r.config["s"] = p.s;
  require(p.n >= 0, "--n out of range");
  const auto c = probe_open_question(as_unsigned(p.k, "--k"), static_cast<std::size_t>(p.n),
                                     as_unsigned(p.s, "--s"), mod, rc.seed);
  fill_projection(c, r);
}

Json bound_json(const BoundValue& b) {
  return Json{{"exact", claim(to_string(b.exact), kFormula)}, {"floor", claim(b.floor, kFormula)}};
}

void run_surface_bound(const Params& p, bool have_k, Report& r) {
  r.config["n"] = p.n;
  r.config["d"] = p.d;
  r.config["s"] = p.s;
  const auto kind = parse_surface_case(p.surface_case);
  r.config["case"] = to_string(kind);
  SurfaceData data;
  data.n = p.n;
  data.d = p.d;
  data.s = p.s;
  data.kind = kind;
  r.result["h0_upper_bound"] = bound_json(h0_upper_bound(data));
  if (kind == SurfaceCase::kGeneral || kind == SurfaceCase::kPlane) {
    const auto eq = universal_bound_equality_case(p.d, p.n);
    r.result["equality_shape"] = Json{{"holds", eq.holds}, {"k", eq.k}};
  }
  if (have_k) {
    r.config["veronese_k"] = p.k;
    require(p.k >= 1, "--veronese-k must be positive");
    Json v = Json::object();
    try {
      const auto lb = veronese_h1_lower_bound(p.n, p.s, p.k);
      v["h1_lower_bound"] = claim(to_string(lb.value), kFormula);
      v["integral"] = lb.integral;
    } catch (const std::invalid_argument&) {
      v["h1_lower_bound"] = nullptr;
    }
    const auto t = veronese_bound_tension(p.k, p.s);
    v["exact_h0"] = claim(t.exact_h0, kFormula);
    v["universal_bound"] = bound_json(t.universal_bound);
    v["tension"] = t.tension;
    r.result["veronese"] = std::move(v);
  }
}

void run_surface_genus(const Params& p, Report& r) {
  r.config["d"] = p.d;
  r.config["s"] = p.s;
  r.config["w1"] = p.w1;
  r.result["genus"] = claim(sectional_curve_genus(p.d, p.s, p.w1), kFormula);
}

void run_surface_facts(const Params& p, bool have_g, Report& r) {
  r.config["n"] = p.n;
  r.config["d"] = p.d;
  if (have_g) r.config["g"] = p.g;
  const auto kind = parse_quadric_fact_kind(p.fact_kind);
  r.config["kind"] = to_string(kind);
  const auto f = quadric_facts(p.n, p.d, have_g ? std::optional<std::int64_t>(p.g) : std::nullopt, kind);
  auto opt = [](const std::optional<BigInt>& v) { return v ? claim(*v, kFormula) : Json(nullptr); };
  r.result["upper"] = opt(f.upper);
  r.result["lower"] = opt(f.lower);
  r.result["smooth_value"] = opt(f.smooth_value);
  r.result["vacuous"] = f.vacuous;
}

void run_sweep(const Params& p, const RunConfig& rc, PrimeModulus mod, Report& r) {
  r.config["n_min"] = p.n_min;
  r.config["n_max"] = p.n_max;
  r.config["s_min"] = p.s_min;
  r.config["s_max"] = p.s_max;
  r.config["measure"] = p.measure;
  require(p.n_min <= p.n_max && p.s_min <= p.s_max, "empty sweep grid");
  require(p.n_min >= 2 && p.s_min >= 2, "sweep grid must start at n, s >= 2");

  struct Cell {
    std::int64_t n, s;
  };
  std::vector<Cell> cells;
  for (auto n = p.n_min; n <= p.n_max; ++n)
    for (auto s = p.s_min; s <= p.s_max; ++s) cells.push_back({n, s});

  auto rows = parallel_map(cells.size(), p.measure ? rc.jobs : 1u, [&](std::size_t i) {
    const auto [n, s] = cells[i];
    const auto inv = compute_invariants({n, s, 1});
    const auto d = to_int64(inv.d_ns);
    std::vector<SweepRow> out;
    out.push_back({n, s, d, "d_ns", to_string(inv.d_ns), kFormula});
    out.push_back({n, s, d, "g0", to_string(inv.g0), kFormula});
    out.push_back({n, s, d, "alpha_conj", to_string(inv.alpha_conj), kConjecture});
    out.push_back({n, s, d, "phi", to_string(inv.phi_value), kFormula});
    out.push_back({n, s, d, "claim", inv.claim_holds ? "true" : "false", kFormula});
    if (p.measure) {
      const auto curve = random_rational_curve(static_cast<std::size_t>(n), static_cast<unsigned>(d), mod,
                                               rc.seed + i);
      const auto row = cohomology_row(curve, static_cast<unsigned>(s - 1));
      out.push_back({n, s, d, "h0_I(s-1)", std::to_string(row.h0_I), kMeasured});
    }
    return out;
  });
  for (auto& cell : rows)
    for (auto& row : cell) r.sweep.push_back(std::move(row));
  r.tabular = true;
}

std::string leaf_name(const CLI::App& app) {
  std::string name;
  const CLI::App* cur = &app;
  while (true) {
    const auto subs = cur->get_subcommands();
    if (subs.empty()) break;
    cur = subs.front();
    name += name.empty() ? cur->get_name() : " " + cur->get_name();
  }
  return name;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  Params p;

  CLI::App app{"Numerical companion for varieties avoiding low-degree hypersurfaces.", "avoidlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prime", rc.prime, "Prime modulus p < 2^31")->capture_default_str();
  app.add_option("--seed", rc.seed, "Base seed")->capture_default_str();
  app.add_option("--trials", rc.trials, "Trials per campaign")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}))
      ->capture_default_str();
  app.add_option("--output", rc.output, "json, csv or table (auto: csv for sweep, json otherwise)")
      ->check(CLI::IsMember({"auto", "json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--out", rc.out_path, "Write the report to this file");
  app.add_option("--jobs", rc.jobs, "Worker threads (0: all cores)")->capture_default_str();

  auto sub = [](CLI::App* parent, const char* name, const char* help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto i64 = [](CLI::App* s, const char* name, std::int64_t& v, const char* help, bool required = true) {
    auto* o = s->add_option(name, v, help);
    if (required) o->required();
    return o;
  };

  auto* inv = sub(&app, "invariants", "Closed-form invariants of (n, s)");
  i64(inv, "--n", p.n, "Ambient dimension");
  i64(inv, "--s", p.s, "Degree threshold");
  i64(inv, "--m", p.m, "Dimension of X", false)->capture_default_str();
  auto* inv_d = i64(inv, "--d", p.d, "Degree, for the maximal-rank conditions", false);
  auto* inv_g = i64(inv, "--g", p.g, "Genus, for the maximal-rank conditions", false);
  inv->add_option("--mode", p.mode, "as-printed or corrected")
      ->check(CLI::IsMember({"as-printed", "corrected"}))
      ->capture_default_str();

  auto* cls = sub(&app, "classify", "Halphen range and Gruson-Peskine linkage");
  i64(cls, "--d", p.d, "Degree");
  i64(cls, "--s", p.s, "Least degree of a surface containing the curve");
  auto* cls_n = i64(cls, "--n", p.n, "Ambient dimension for the range A genus", false);

  auto* chow = sub(&app, "chow", "Chow ring of the scroll T");
  chow->require_subcommand(1);
  auto* mult = sub(chow, "mult", "Multiply divisor classes");
  i64(mult, "--m", p.m, "Fiber dimension");
  i64(mult, "--e", p.e, "Twist");
  mult->add_option("--factor", p.factors, "Divisor a h + b f written a,b (repeatable)")->required();
  auto* eff = sub(chow, "effective", "Positivity of a h + b f");
  i64(eff, "--m", p.m, "Fiber dimension");
  i64(eff, "--e", p.e, "Twist");
  i64(eff, "--a", p.a, "Coefficient of h");
  i64(eff, "--b", p.b, "Coefficient of f");
  auto* cont = sub(chow, "contains", "Does h + b f lie in a degree-t hypersurface");
  i64(cont, "--m", p.m, "Fiber dimension");
  i64(cont, "--e", p.e, "Twist");
  i64(cont, "--b", p.b, "Coefficient of f");
  i64(cont, "--t", p.t, "Hypersurface degree");
  auto* plan = sub(chow, "plan", "Scroll-divisor construction for (n, m, s, d)");
  i64(plan, "--n", p.n, "Ambient dimension");
  i64(plan, "--m", p.m, "Dimension of X");
  i64(plan, "--s", p.s, "Degree threshold");
  i64(plan, "--d", p.d, "Coefficient of f in the divisor");

  auto* curve = sub(&app, "curve", "Rational curves over F_p");
  curve->require_subcommand(1);
  auto* verify = sub(curve, "verify", "Minimal-degree campaign");
  i64(verify, "--n", p.n, "Ambient dimension");
  i64(verify, "--s", p.s, "Degree threshold");
  auto* profile = sub(curve, "profile", "h0, h1 of I_X(t) for one curve");
  auto* section = sub(curve, "section", "Hyperplane section data, identity and monotonicity checks");
  for (auto* s : {profile, section}) {
    i64(s, "--n", p.n, "Ambient dimension", false);
    i64(s, "--d", p.d, "Degree");
    i64(s, "--t-max", p.t_max, "Largest twist", false)->capture_default_str();
    s->add_flag("--normal", p.normal, "Use the rational normal curve of degree d");
  }
  auto* probe = sub(curve, "probe", "Search for h0(I(s-1)) = 0 < h0(I(s)) above d(n,s)");
  i64(probe, "--n", p.n, "Ambient dimension");
  i64(probe, "--s", p.s, "Degree threshold");
  i64(probe, "--d", p.d, "Degree, above d(n,s)");

  auto* ver = sub(&app, "veronese", "Projections of Veronese surfaces");
  ver->require_subcommand(1);
  auto* vverify = sub(ver, "verify", "Compare measured h0, h1 of I_X(s) with the maximal-rank values");
  i64(vverify, "--k", p.k, "Veronese degree");
  i64(vverify, "--n", p.n, "Target dimension");
  i64(vverify, "--s", p.s, "Twist", false);
  vverify->add_option("--attempts", p.attempts, "Projections to try")
      ->check(CLI::Range(1u, 1000u))
      ->capture_default_str();
  auto* vprobe = sub(ver, "probe", "Single measurement for s >= 3");
  i64(vprobe, "--k", p.k, "Veronese degree");
  i64(vprobe, "--n", p.n, "Target dimension");
  i64(vprobe, "--s", p.s, "Twist");

  auto* surf = sub(&app, "surface", "Bounds for surfaces");
  surf->require_subcommand(1);
  auto* bound = sub(surf, "bound", "Upper bound on h0(O_X(s))");
  i64(bound, "--n", p.n, "Ambient dimension");
  i64(bound, "--d", p.d, "Degree");
  i64(bound, "--s", p.s, "Twist");
  bound->add_option("--case", p.surface_case, "general, plane, scroll, nef2K3 or kodaira-nonneg")
      ->check(CLI::IsMember({"general", "plane", "scroll", "nef2K3", "kodaira-nonneg"}))
      ->capture_default_str();
  auto* bound_k = i64(bound, "--veronese-k", p.k, "Also report Veronese data for degree k", false);
  auto* genus = sub(surf, "genus", "Genus of a smooth member of |O_X(s)|");
  i64(genus, "--d", p.d, "Degree");
  i64(genus, "--s", p.s, "Twist");
  i64(genus, "--w1", p.w1, "K_X . H");
  auto* facts = sub(surf, "facts", "Quadric counts");
  i64(facts, "--n", p.n, "Ambient dimension");
  i64(facts, "--d", p.d, "Degree");
  auto* facts_g = i64(facts, "--g", p.g, "Sectional genus", false);
  facts->add_option("--kind", p.fact_kind, "sectional-genus, even-dimension or almost-minimal")
      ->check(CLI::IsMember({"sectional-genus", "even-dimension", "almost-minimal"}))
      ->required();

  auto* sweep = sub(&app, "sweep", "Grid of invariants; columns n,s,d,quantity,value,provenance");
  i64(sweep, "--n-min", p.n_min, "", false)->capture_default_str();
  i64(sweep, "--n-max", p.n_max, "", false)->capture_default_str();
  i64(sweep, "--s-min", p.s_min, "", false)->capture_default_str();
  i64(sweep, "--s-max", p.s_max, "", false)->capture_default_str();
  sweep->add_flag("--measure", p.measure, "Also measure h0(I(s-1)) on one curve of degree d(n,s) per cell");

  std::vector<const char*> argv{"avoidlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  Report report;
  report.subcommand = leaf_name(app);
  const std::string output = rc.output != "auto" ? rc.output : (sweep->parsed() ? "csv" : "json");
  report.config = base_config(rc, output);
  const OutputFormat format =
      output == "csv" ? OutputFormat::kCsv : output == "table" ? OutputFormat::kTable : OutputFormat::kJson;

  try {
    const PrimeModulus mod(rc.prime);
    if (inv->parsed()) {
      run_invariants(p, inv_d->count() > 0, inv_g->count() > 0, report);
    } else if (cls->parsed()) {
      run_classify(p, cls_n->count() > 0, report);
    } else if (mult->parsed()) {
      run_chow_mult(p, report);
    } else if (eff->parsed()) {
      run_chow_effective(p, report);
    } else if (cont->parsed()) {
      run_chow_contains(p, report);
    } else if (plan->parsed()) {
      run_chow_plan(p, report);
    } else if (verify->parsed()) {
      run_curve_verify(p, rc, mod, report);
    } else if (profile->parsed()) {
      run_curve_profile(p, rc, mod, report);
    } else if (section->parsed()) {
      run_curve_section(p, rc, mod, report);
    } else if (probe->parsed()) {
      run_curve_probe(p, rc, mod, report);
    } else if (vverify->parsed()) {
      if (p.s == 0) p.s = 2;
      run_veronese_verify(p, rc, mod, report);
    } else if (vprobe->parsed()) {
      run_veronese_probe(p, rc, mod, report);
    } else if (bound->parsed()) {
      run_surface_bound(p, bound_k->count() > 0, report);
    } else if (genus->parsed()) {
      run_surface_genus(p, report);
    } else if (facts->parsed()) {
      run_surface_facts(p, facts_g->count() > 0, report);
    } else if (sweep->parsed()) {
      run_sweep(p, rc, mod, report);
    } else {
      err << "error: no subcommand\n\n" << app.help();
      return kExitInvalid;
    }
  } catch (const PlanError& e) {
    err << "error: inadmissible parameters, violated:";
    for (const auto& v : e.violations()) err << "\n  " << v;
    err << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }

  if (!rc.out_path.empty()) {
    std::ofstream file(rc.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << rc.out_path << " for writing\n";
      return kExitInvalid;
    }
    emit(report, format, file);
  } else {
    emit(report, format, out);
  }
  return report.mismatch ? kExitMismatch : kExitOk;
}

int dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace avoidlab::cli
