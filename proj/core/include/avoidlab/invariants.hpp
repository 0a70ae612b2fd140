#pragma once

// Closed-form invariants of curves avoiding hypersurfaces of degree < s.
//
// d(n,s): least degree of an integral curve in P^n on no hypersurface of
//         degree s-1.
// g0(n,s): largest arithmetic genus possible at that degree.
// alpha(n,s): conjectured maximum of h^0(I_X(s)); an open question, always
//         reported as a conjecture.

#include <cstdint>
#include <string>

#include "avoidlab/bigint.hpp"

namespace avoidlab {

/// ceil((C(n+s-1, n) - 1) / (s - 1)). Requires n >= 3, s >= 2.
BigInt minimal_degree(std::int64_t n, std::int64_t s);

/// Cone bound d(n,s,m) <= d(n-m+1, s). Requires m >= 1, n >= m+2, n-m+1 >= 3.
BigInt minimal_degree_upper_bound(std::int64_t n, std::int64_t s, std::int64_t m);

/// (s-1) d(n,s) + 1 - C(n+s-1, n).
BigInt genus_bound_g0(std::int64_t n, std::int64_t s);

/// C(n+s-1, n-1) - d(n,s). Conjectural.
BigInt alpha_conjecture(std::int64_t n, std::int64_t s);

/// C(n+s-1, n) - (s-1)(n+s-3) - 2.
BigInt phi(std::int64_t n, std::int64_t s);

/// s - 2 <= d(n,s) - n.
bool claim_check(std::int64_t n, std::int64_t s);

/// max(0, C(n+t, n) - (t d + 1 - g)), valid when O_X(t) is non-special and
/// the restriction map has maximal rank.
BigInt expected_h0_maximal_rank(std::int64_t n, std::int64_t t, std::int64_t d, std::int64_t g);

/// Right-hand side of the hyperplane-section identity for h^0(I_X(s)) of a
/// curve with h^0(I_X(s-1)) = 0.
BigInt hyperplane_section_rhs(std::int64_t n, std::int64_t s, std::int64_t d, std::int64_t h1_I_sm1,
                     std::int64_t h1_I_s, std::int64_t h1_O_sm1, std::int64_t h1_O_s);

struct InvariantQuery {
  std::int64_t n = 3;
  std::int64_t s = 3;
  std::int64_t m = 1;
};

struct InvariantReport {
  InvariantQuery query;
  BigInt d_ns;        // exact for m = 1; cone upper bound for m >= 2
  BigInt g0;
  BigInt alpha_conj;  // conjecture
  bool claim_holds = false;
  BigInt phi_value;
  bool d_is_upper_bound = false;
};

/// Throws std::invalid_argument when the query violates n >= m+2, s >= 2,
/// m >= 1 or n >= 3. g0, alpha, phi and the claim refer to the curve case.
InvariantReport compute_invariants(const InvariantQuery& q);

enum class ConditionMode { kAsPrinted, kCorrected };

struct MaximalRankConditions {
  bool c1 = false;  // 0 <= g <= d - n
  bool c2 = false;  // (n+1) d >= n g + n(n+1)
  bool c3 = false;  // (s-1) d >= C(n+s-1, n) + g - 1
  bool c4 = false;  // s d <= C(n+s-1, n) + g - 2 as printed, C(n+s, n) corrected
  BigInt expected_h0;  // C(n+s, n) - s d + g - 1
  ConditionMode mode = ConditionMode::kAsPrinted;
  std::string diagnostic;  // non-empty in as-printed mode

  bool all() const noexcept { return c1 && c2 && c3 && c4; }
};

MaximalRankConditions maximal_rank_conditions(std::int64_t n, std::int64_t d, std::int64_t g, std::int64_t s,
                                   ConditionMode mode = ConditionMode::kAsPrinted);

std::string to_string(ConditionMode mode);
ConditionMode parse_condition_mode(const std::string& text);

}  // namespace avoidlab
