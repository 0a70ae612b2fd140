#include "avoidlab/curvelab.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "avoidlab/invariants.hpp"
#include "avoidlab/parallel.hpp"

namespace avoidlab {

namespace {

std::int64_t binom64(std::int64_t a, std::int64_t b) { return to_int64(binomial(a, b)); }

std::vector<Residue> draw(std::mt19937_64& rng, std::size_t count, const PrimeModulus& mod) {
  std::vector<Residue> out(count);
  for (auto& x : out) x = static_cast<Residue>(rng() % mod.value());
  return out;
}

}  // namespace

PrimeMatrix coefficient_matrix(const ParamCurve& curve) {
  const std::size_t cols = curve.d + 1;
  PrimeMatrix m(curve.n + 1, cols, curve.modulus);
  for (std::size_t i = 0; i <= curve.n; ++i) {
    auto c = curve.phi[i].coefficients();
    std::copy(c.begin(), c.end(), m.row(i).begin());
  }
  return m;
}

bool satisfies_curve_invariants(std::span<const BinaryForm> phi) {
  if (phi.empty()) return false;
  const unsigned d = phi.front().degree();
  PrimeMatrix m(phi.size(), d + 1, phi.front().modulus());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i].degree() != d) return false;
    auto c = phi[i].coefficients();
    std::copy(c.begin(), c.end(), m.row(i).begin());
  }
  return rank(m) == phi.size() && !have_common_root(phi);
}

ParamCurve ParamCurve::from_forms(std::vector<BinaryForm> phi, std::uint64_t seed) {
  if (phi.size() < 2) throw std::invalid_argument("a curve needs at least two forms");
  if (!satisfies_curve_invariants(phi)) {
    throw std::invalid_argument("parametrization is degenerate or has a base point");
  }
  ParamCurve c;
  c.n = phi.size() - 1;
  c.d = phi.front().degree();
  c.modulus = phi.front().modulus();
  c.phi = std::move(phi);
  c.seed = seed;
  return c;
}

ParamCurve random_rational_curve(std::size_t n, unsigned d, PrimeModulus modulus, std::uint64_t seed,
                                 unsigned max_retries) {
  if (n < 2) throw std::invalid_argument("random_rational_curve: n must be at least 2");
  if (d < n) throw std::invalid_argument("random_rational_curve: d must be at least n");
  std::mt19937_64 rng(seed);
  for (unsigned attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<BinaryForm> phi;
    phi.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) phi.emplace_back(draw(rng, d + 1, modulus), modulus);
    if (!satisfies_curve_invariants(phi)) continue;
    ParamCurve c;
    c.n = n;
    c.d = d;
    c.phi = std::move(phi);
    c.modulus = modulus;
    c.seed = seed;
    c.retries = attempt;
    return c;
  }
  throw std::runtime_error("random_rational_curve: retries exhausted for n=" + std::to_string(n) +
                           " d=" + std::to_string(d));
}

ParamCurve rational_normal_curve(unsigned d, PrimeModulus modulus) {
  std::vector<BinaryForm> phi;
  for (unsigned i = 0; i <= d; ++i) {
    BinaryForm f(d, modulus);
    f[d - i] = 1;  // u^(d-i) v^i
    phi.push_back(std::move(f));
  }
  return ParamCurve::from_forms(std::move(phi));
}

// ---------------------------------------------------------------------------

CohomologyRow CohomologyProfile::at(unsigned t) const {
  if (t == 0) return CohomologyRow{0, 1, 0, 0, 1, 0};
  if (t > rows.size()) throw std::out_of_range("cohomology profile does not reach t=" + std::to_string(t));
  return rows[t - 1];
}

CohomologyRow cohomology_row(const ParamCurve& curve, unsigned t) {
  if (t == 0) return CohomologyRow{0, 1, 0, 0, 1, 0};
  const auto m = build_restriction_matrix(curve.n, t, curve.phi);
  CohomologyRow row;
  row.t = t;
  row.hf = static_cast<std::int64_t>(rank(m));
  row.h0_I = static_cast<std::int64_t>(m.rows()) - row.hf;
  row.h0_O = static_cast<std::int64_t>(t) * curve.d + 1;
  row.h1_O = 0;
  row.h1_I = row.h0_O - row.hf;
  return row;
}

CohomologyProfile cohomology_profile(const ParamCurve& curve, unsigned t_max) {
  if (t_max < 1) throw std::invalid_argument("cohomology_profile: t_max must be at least 1");
  CohomologyProfile p;
  p.n = curve.n;
  p.d = curve.d;
  for (unsigned t = 1; t <= t_max; ++t) p.rows.push_back(cohomology_row(curve, t));
  return p;
}

// ---------------------------------------------------------------------------

namespace {

// h0 of the ideal of the section points in degree t on H ~ P^(n-1).
std::int64_t section_h0(const ParamCurve& curve, std::size_t eliminated, const BinaryForm& g, unsigned t) {
  std::vector<BinaryForm> on_h;
  for (std::size_t i = 0; i <= curve.n; ++i) {
    if (i != eliminated) on_h.push_back(curve.phi[i]);
  }
  MonomialBasis basis(curve.n - 1, t);
  PrimeMatrix m(basis.size(), g.degree(), curve.modulus);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    auto img = substitute_curve(basis[r], on_h);
    auto rem = remainder_mod(img, g);
    std::copy(rem.begin(), rem.end(), m.row(r).begin());
  }
  return static_cast<std::int64_t>(m.rows() - rank(m));
}

SectionRow section_row(const ParamCurve& curve, std::size_t eliminated, const BinaryForm& g, unsigned t) {
  SectionRow row;
  row.t = t;
  row.h0_IH = section_h0(curve, eliminated, g, t);
  const auto n = static_cast<std::int64_t>(curve.n);
  row.h1_IH = static_cast<std::int64_t>(curve.d) - binom64(n - 1 + t, n - 1) + row.h0_IH;
  return row;
}

}  // namespace

SectionRow SectionProfile::at(unsigned t) const {
  if (t < 1 || t > rows.size()) {
    throw std::out_of_range("section profile does not reach t=" + std::to_string(t));
  }
  return rows[t - 1];
}

SectionProfile section_cohomology(const ParamCurve& curve, unsigned t_max, std::uint64_t seed,
                                  unsigned max_retries) {
  if (t_max < 1) throw std::invalid_argument("section_cohomology: t_max must be at least 1");
  std::mt19937_64 rng(seed);
  for (unsigned attempt = 0; attempt <= max_retries; ++attempt) {
    auto ell = draw(rng, curve.n + 1, curve.modulus);
    std::size_t eliminated = curve.n + 1;
    for (std::size_t i = curve.n + 1; i-- > 0;) {
      if (ell[i] != 0) {
        eliminated = i;
        break;
      }
    }
    if (eliminated > curve.n) continue;

    BinaryForm g(curve.d, curve.modulus);
    for (std::size_t i = 0; i <= curve.n; ++i) g = g + curve.phi[i].scaled(ell[i]);
    if (g.leading() == 0 || !is_squarefree(g)) continue;

    SectionProfile sp{ell, eliminated, g, {}, 0, {}, attempt};
    for (unsigned t = 1; t <= t_max; ++t) sp.rows.push_back(section_row(curve, eliminated, g, t));

    // chi: least t >= 0 with h1_IH(t+1) = 0; d distinct points impose
    // independent conditions in degree d-1, so the scan stops by t = d.
    bool found = false;
    for (unsigned t = 0; t <= curve.d + 1; ++t) {
      const auto h1 = t + 1 <= t_max ? sp.rows[t].h1_IH : section_row(curve, eliminated, g, t + 1).h1_IH;
      if (h1 == 0) {
        sp.chi = t;
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("section_cohomology: section points never impose independent conditions");

    // psi(t) = h1(O_X(t-1)) - h1(O_X(t)); both vanish for a rational curve.
    for (unsigned t = 1; t <= t_max; ++t) sp.psi.emplace_back(t, 0);
    return sp;
  }
  throw std::runtime_error("section_cohomology: retries exhausted");
}

// ---------------------------------------------------------------------------

IdentityCheck check_section_identity(const ParamCurve& curve, const CohomologyProfile& profile,
                                     const SectionProfile& section, unsigned s) {
  if (s < 2) throw std::invalid_argument("check_section_identity: s must be at least 2");
  IdentityCheck c;
  c.n = curve.n;
  c.d = curve.d;
  c.s = s;
  const auto prev = profile.at(s - 1);
  const auto cur = profile.at(s);
  const auto sec = section.at(s);
  c.applicable = prev.h0_I == 0;
  c.h0_I_s = cur.h0_I;
  c.h0_IH_s = sec.h0_IH;
  c.rhs_formula = to_int64(hyperplane_section_rhs(static_cast<std::int64_t>(curve.n), s, curve.d,
                                                  prev.h1_I, cur.h1_I, prev.h1_O, cur.h1_O));
  c.rhs_exact_sequence = sec.h0_IH - sec.h1_IH - prev.h1_I + cur.h1_I + prev.h1_O - cur.h1_O;
  c.restriction_injective = cur.h0_I <= sec.h0_IH;
  c.holds = c.applicable && c.h0_I_s == c.rhs_formula && c.h0_I_s == c.rhs_exact_sequence &&
            c.restriction_injective;
  return c;
}

CastelnuovoCheck check_castelnuovo(const ParamCurve& curve, const SectionProfile& section) {
  CastelnuovoCheck c;
  c.chi = section.chi;
  auto h1 = [&](unsigned t) { return cohomology_row(curve, t).h1_I; };

  // h1_I vanishes for t past the regularity bound; d + chi + 2 is far beyond
  // it for every curve this module can produce.
  const unsigned limit = curve.d + c.chi + 2;
  std::int64_t cur = h1(c.chi);
  unsigned t = c.chi;
  for (; t <= limit; ++t) {
    const std::int64_t next = h1(t + 1);
    if (cur < next) {
      c.holds = false;
      c.violations.push_back("h1_I(" + std::to_string(t) + ")=" + std::to_string(cur) + " < h1_I(" +
                             std::to_string(t + 1) + ")=" + std::to_string(next));
    } else if (t > c.chi && cur != 0 && cur == next) {
      c.holds = false;
      c.violations.push_back("h1_I(" + std::to_string(t) + ")=" + std::to_string(cur) +
                             " not strictly above h1_I(" + std::to_string(t + 1) + ")");
    }
    if (cur == 0 && next == 0) break;
    cur = next;
  }
  c.t_checked_to = t + 1;
  return c;
}

// ---------------------------------------------------------------------------

MinimalDegreeCampaign verify_minimal_degree(std::size_t n, unsigned s, std::size_t trials,
                                            PrimeModulus modulus, std::uint64_t seed, unsigned jobs) {
  if (trials < 1) throw std::invalid_argument("verify_minimal_degree: trials must be at least 1");
  if (s < 2) throw std::invalid_argument("verify_minimal_degree: s must be at least 2");
  const auto nn = static_cast<std::int64_t>(n);
  MinimalDegreeCampaign camp;
  camp.n = n;
  camp.s = s;
  camp.d_ns = to_int64(minimal_degree(nn, s));
  camp.trials = trials;
  camp.prime = modulus.value();
  camp.seed = seed;
  const auto d = static_cast<unsigned>(camp.d_ns);

  camp.upper = parallel_map(trials, jobs, [&](std::size_t i) {
    UpperTrial tr;
    tr.index = i;
    tr.seed = seed + i;
    auto curve = random_rational_curve(n, d, modulus, tr.seed);
    tr.curve_retries = curve.retries;
    auto profile = cohomology_profile(curve, s);
    tr.h0_I_sm1 = profile.at(s - 1).h0_I;
    tr.avoids = tr.h0_I_sm1 == 0;
    auto section = section_cohomology(curve, s, section_seed(tr.seed));
    tr.identity = check_section_identity(curve, profile, section, s);
    return tr;
  });
  for (const auto& tr : camp.upper) {
    camp.upper_success = camp.upper_success || tr.avoids;
    if (tr.identity.applicable) {
      ++camp.identity_checked;
      if (!tr.identity.holds) ++camp.identity_violations;
    }
  }

  if (d >= n + 1) {
    const unsigned dl = d - 1;
    const std::int64_t bound = binom64(nn + s - 1, nn) - (static_cast<std::int64_t>(s - 1) * dl + 1);
    camp.lower = parallel_map(trials, jobs, [&](std::size_t i) {
      LowerTrial tr;
      tr.index = i;
      tr.seed = seed + i;
      auto curve = random_rational_curve(n, dl, modulus, tr.seed);
      tr.h0_I_sm1 = cohomology_row(curve, s - 1).h0_I;
      tr.forced_bound = bound;
      tr.bound_holds = bound > 0 && tr.h0_I_sm1 >= bound;
      return tr;
    });
    for (const auto& tr : camp.lower) camp.lower_success = camp.lower_success && tr.bound_holds;
  }
  return camp;
}

ProbeReport probe_degree_question(std::size_t n, unsigned s, unsigned d, std::size_t trials,
                                  PrimeModulus modulus, std::uint64_t seed, unsigned jobs) {
  if (trials < 1) throw std::invalid_argument("probe: trials must be at least 1");
  ProbeReport r;
  r.n = n;
  r.s = s;
  r.d = d;
  r.d_ns = to_int64(minimal_degree(static_cast<std::int64_t>(n), s));
  if (static_cast<std::int64_t>(d) <= r.d_ns) {
    throw std::invalid_argument("probe: d must exceed d(n,s) = " + std::to_string(r.d_ns));
  }
  r.trials = trials;
  r.entries = parallel_map(trials, jobs, [&](std::size_t i) {
    ProbeTrial tr;
    tr.index = i;
    tr.seed = seed + i;
    auto curve = random_rational_curve(n, d, modulus, tr.seed);
    tr.h0_I_sm1 = cohomology_row(curve, s - 1).h0_I;
    tr.h0_I_s = cohomology_row(curve, s).h0_I;
    tr.witness = tr.h0_I_sm1 == 0 && tr.h0_I_s != 0;
    return tr;
  });
  for (const auto& tr : r.entries) {
    ++r.distribution[{tr.h0_I_sm1, tr.h0_I_s}];
    r.witness_found = r.witness_found || tr.witness;
  }
  return r;
}

}  // namespace avoidlab
