#include "avoidlab/invariants.hpp"

#include <stdexcept>
#include <string>

namespace avoidlab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Exact ceil(a / b) for a >= 0, b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (a <= 0) return 0;
  return (a - 1) / b + 1;
}

}  // namespace

BigInt minimal_degree(std::int64_t n, std::int64_t s) {
  require(n >= 3, "minimal_degree: n must be at least 3");
  require(s >= 2, "minimal_degree: s must be at least 2");
  return ceil_div(binomial(n + s - 1, n) - 1, BigInt(s - 1));
}

BigInt minimal_degree_upper_bound(std::int64_t n, std::int64_t s, std::int64_t m) {
  require(m >= 1, "minimal_degree_upper_bound: m must be at least 1");
  require(n >= m + 2, "minimal_degree_upper_bound: n must be at least m+2");
  require(n - m + 1 >= 3, "minimal_degree_upper_bound: n-m+1 must be at least 3");
  return minimal_degree(n - m + 1, s);
}

BigInt genus_bound_g0(std::int64_t n, std::int64_t s) {
  return BigInt(s - 1) * minimal_degree(n, s) + 1 - binomial(n + s - 1, n);
}

BigInt alpha_conjecture(std::int64_t n, std::int64_t s) {
  return binomial(n + s - 1, n - 1) - minimal_degree(n, s);
}

BigInt phi(std::int64_t n, std::int64_t s) {
  require(n >= 0 && s >= 1, "phi: arguments out of range");
  return binomial(n + s - 1, n) - BigInt(s - 1) * (n + s - 3) - 2;
}

bool claim_check(std::int64_t n, std::int64_t s) {
  return BigInt(s - 2) <= minimal_degree(n, s) - n;
}

BigInt expected_h0_maximal_rank(std::int64_t n, std::int64_t t, std::int64_t d, std::int64_t g) {
  require(n >= 0 && t >= 0, "expected_h0_maximal_rank: arguments out of range");
  BigInt v = binomial(n + t, n) - (BigInt(t) * d + 1 - g);
  return v > 0 ? v : BigInt(0);
}

BigInt hyperplane_section_rhs(std::int64_t n, std::int64_t s, std::int64_t d, std::int64_t h1_I_sm1,
                     std::int64_t h1_I_s, std::int64_t h1_O_sm1, std::int64_t h1_O_s) {
  return binomial(n + s - 1, n - 1) - d - h1_I_sm1 + h1_I_s + h1_O_sm1 - h1_O_s;
}

InvariantReport compute_invariants(const InvariantQuery& q) {
  require(q.m >= 1, "m must be at least 1");
  require(q.s >= 2, "s must be at least 2");
  require(q.n >= q.m + 2, "n must be at least m+2");
  require(q.n >= 3, "n must be at least 3");

  InvariantReport r;
  r.query = q;
  if (q.m == 1) {
    r.d_ns = minimal_degree(q.n, q.s);
  } else {
    r.d_ns = minimal_degree_upper_bound(q.n, q.s, q.m);
    r.d_is_upper_bound = true;
  }
  r.g0 = genus_bound_g0(q.n, q.s);
  r.alpha_conj = alpha_conjecture(q.n, q.s);
  r.claim_holds = claim_check(q.n, q.s);
  r.phi_value = phi(q.n, q.s);
  return r;
}

MaximalRankConditions maximal_rank_conditions(std::int64_t n, std::int64_t d, std::int64_t g, std::int64_t s,
                                   ConditionMode mode) {
  require(n >= 3, "maximal_rank_conditions: n must be at least 3");
  require(s >= 3, "maximal_rank_conditions: s must be at least 3");

  MaximalRankConditions r;
  r.mode = mode;
  const BigInt c_prev = binomial(n + s - 1, n);
  const BigInt c_full = binomial(n + s, n);
  r.c1 = 0 <= g && g <= d - n;
  r.c2 = BigInt(n + 1) * d >= BigInt(n) * g + BigInt(n) * (n + 1);
  r.c3 = BigInt(s - 1) * d >= c_prev + g - 1;
  const BigInt& c4_rhs_binom = mode == ConditionMode::kAsPrinted ? c_prev : c_full;
  r.c4 = BigInt(s) * d <= c4_rhs_binom + g - 2;
  r.expected_h0 = c_full - BigInt(s) * d + g - 1;
  if (mode == ConditionMode::kAsPrinted) {
    r.diagnostic =
        "as-printed conditions c3 and c4 together force d <= -1 and are never jointly "
        "satisfiable; mode 'corrected' uses C(n+s,n) in c4";
  }
  return r;
}

std::string to_string(ConditionMode mode) {
  return mode == ConditionMode::kAsPrinted ? "as-printed" : "corrected";
}

ConditionMode parse_condition_mode(const std::string& text) {
  if (text == "as-printed") return ConditionMode::kAsPrinted;
  if (text == "corrected") return ConditionMode::kCorrected;
  throw std::invalid_argument("unknown condition mode '" + text + "'");
}

}  // namespace avoidlab
