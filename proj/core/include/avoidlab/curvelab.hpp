#pragma once

// Rational curves in P^n over F_p and their ideal-sheaf cohomology.
//
// A curve is the image of P^1 under n+1 binary forms of degree d. For such a
// curve O_X(t) has h^0 = t d + 1 and h^1 = 0, so the only measured quantity
// is the rank of the restriction map from degree-t forms on P^n; everything
// else is bookkeeping. All statements produced here concern genus 0 only.
//
// Ranks over F_p can only drop relative to characteristic zero, so measured
// h^0(I_X(t)) values are upper bounds for the characteristic-zero values of
// the same parametrization.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avoidlab/exactlin.hpp"
#include "avoidlab/forms.hpp"

namespace avoidlab {

struct ParamCurve {
  std::size_t n = 0;
  unsigned d = 0;
  std::vector<BinaryForm> phi;
  PrimeModulus modulus;
  std::uint64_t seed = 0;
  unsigned retries = 0;  // resamples needed before the invariants held

  /// Validates non-degeneracy and base-point-freeness; throws std::invalid_argument.
  static ParamCurve from_forms(std::vector<BinaryForm> phi, std::uint64_t seed = 0);
};

/// (n+1) x (d+1) coefficient matrix of the parametrization.
PrimeMatrix coefficient_matrix(const ParamCurve& curve);

/// Non-degenerate (coefficient matrix of rank n+1) and base-point-free.
bool satisfies_curve_invariants(std::span<const BinaryForm> phi);

inline constexpr unsigned kDefaultRetries = 32;

/// Seeded random parametrization. Requires d >= n >= 2. Coefficients are
/// drawn from a std::mt19937_64 stream; a rejected sample is replaced by the
/// next draws of the same stream. Throws std::runtime_error once `max_retries`
/// resamples fail.
ParamCurve random_rational_curve(std::size_t n, unsigned d, PrimeModulus modulus, std::uint64_t seed,
                                 unsigned max_retries = kDefaultRetries);

/// The twisted-cubic-style rational normal curve (u^d, u^(d-1) v, ..., v^d)
/// in P^d.
ParamCurve rational_normal_curve(unsigned d, PrimeModulus modulus);

struct CohomologyRow {
  unsigned t = 0;
  std::int64_t hf = 0;    // rank of the restriction map
  std::int64_t h0_I = 0;  // C(n+t, n) - hf
  std::int64_t h1_I = 0;  // h0_O - hf
  std::int64_t h0_O = 0;  // t d + 1
  std::int64_t h1_O = 0;  // 0
};

struct CohomologyProfile {
  std::size_t n = 0;
  unsigned d = 0;
  std::vector<CohomologyRow> rows;  // t = 1 .. t_max

  unsigned t_max() const noexcept { return static_cast<unsigned>(rows.size()); }
  /// Row for t >= 0; t = 0 is synthesized (hf = 1, all h^1 zero).
  CohomologyRow at(unsigned t) const;
};

CohomologyProfile cohomology_profile(const ParamCurve& curve, unsigned t_max);
/// Single-degree variant of cohomology_profile.
CohomologyRow cohomology_row(const ParamCurve& curve, unsigned t);

struct SectionRow {
  unsigned t = 0;
  std::int64_t h0_IH = 0;
  std::int64_t h1_IH = 0;
};

struct SectionProfile {
  std::vector<Residue> ell;  // the hyperplane, n+1 coefficients
  std::size_t eliminated = 0;  // coordinate solved for on the hyperplane
  BinaryForm g;              // ell composed with phi
  std::vector<SectionRow> rows;  // t = 1 .. t_max
  unsigned chi = 0;          // least t >= 0 with h1_IH(t+1) = 0
  std::vector<std::pair<unsigned, std::int64_t>> psi;  // (t, h1_O(t-1) - h1_O(t)), t = 1 .. t_max
  unsigned retries = 0;

  SectionRow at(unsigned t) const;
};

/// Seed of the hyperplane stream paired with a curve drawn from `seed`; kept
/// apart from the curve's own stream.
inline std::uint64_t section_seed(std::uint64_t seed) { return seed + 0x9e3779b97f4a7c15ULL; }

/// Samples a hyperplane with squarefree section and nonzero u^d coefficient,
/// then measures h^0 and h^1 of the ideal of the d section points in H.
SectionProfile section_cohomology(const ParamCurve& curve, unsigned t_max, std::uint64_t seed,
                                  unsigned max_retries = kDefaultRetries);

/// One (curve, hyperplane, degree) measurement of the section identity
///   h0_I(s) = C(n+s-1, n-1) - d - h1_I(s-1) + h1_I(s) + h1_O(s-1) - h1_O(s)
/// together with the long-exact-sequence form that uses the measured
/// h0_IH(s) and h1_IH(s) directly.
struct IdentityCheck {
  std::size_t n = 0;
  unsigned d = 0;
  unsigned s = 0;
  bool applicable = false;  // h0_I(s-1) == 0
  std::int64_t h0_I_s = 0;
  std::int64_t rhs_formula = 0;
  std::int64_t rhs_exact_sequence = 0;
  std::int64_t h0_IH_s = 0;
  bool restriction_injective = false;  // h0_I(s) <= h0_IH(s)
  bool holds = false;  // meaningful only when applicable
};

IdentityCheck check_section_identity(const ParamCurve& curve, const CohomologyProfile& profile,
                                     const SectionProfile& section, unsigned s);

/// h1_I(t) >= h1_I(t+1) for t >= chi, strictly when t > chi and h1_I(t) != 0.
struct CastelnuovoCheck {
  unsigned chi = 0;
  unsigned t_checked_to = 0;
  bool holds = true;
  std::vector<std::string> violations;
};

/// Extends the profile as needed until h1_I vanishes past chi.
CastelnuovoCheck check_castelnuovo(const ParamCurve& curve, const SectionProfile& section);

// ---------------------------------------------------------------------------
// Campaigns

struct UpperTrial {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::int64_t h0_I_sm1 = 0;
  bool avoids = false;  // h0_I(s-1) == 0
  IdentityCheck identity;
  unsigned curve_retries = 0;
};

struct LowerTrial {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::int64_t h0_I_sm1 = 0;
  std::int64_t forced_bound = 0;  // C(n+s-1, n) - ((s-1)(d-1) + 1)
  bool bound_holds = false;
};

struct MinimalDegreeCampaign {
  std::size_t n = 0;
  unsigned s = 0;
  std::int64_t d_ns = 0;
  std::size_t trials = 0;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<UpperTrial> upper;
  std::vector<LowerTrial> lower;  // empty when d(n,s) - 1 < n
  bool upper_success = false;      // some degree-d(n,s) curve avoids degree s-1
  bool lower_success = true;       // every degree-(d(n,s)-1) curve meets the forced bound
  std::size_t identity_checked = 0;
  std::size_t identity_violations = 0;

  bool passed() const noexcept { return upper_success && lower_success && identity_violations == 0; }
};

/// Trial i uses seed + i for both degrees and section_seed(seed + i) for the
/// hyperplane.
MinimalDegreeCampaign verify_minimal_degree(std::size_t n, unsigned s, std::size_t trials,
                                            PrimeModulus modulus, std::uint64_t seed, unsigned jobs = 1);

struct ProbeTrial {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::int64_t h0_I_sm1 = 0;
  std::int64_t h0_I_s = 0;
  bool witness = false;  // h0_I(s-1) == 0 and h0_I(s) != 0
};

struct ProbeReport {
  std::size_t n = 0;
  unsigned s = 0;
  unsigned d = 0;
  std::int64_t d_ns = 0;
  std::size_t trials = 0;
  std::vector<ProbeTrial> entries;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> distribution;
  bool witness_found = false;
};

/// Requires d > d(n,s).
ProbeReport probe_degree_question(std::size_t n, unsigned s, unsigned d, std::size_t trials,
                                  PrimeModulus modulus, std::uint64_t seed, unsigned jobs = 1);

}  // namespace avoidlab
