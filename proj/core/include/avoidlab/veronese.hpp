#pragma once

// Linear projections of the degree-k Veronese surface v_k(P^2) in P^N,
// N = (k^2 + 3k)/2, to P^n, and the dimensions h^0, h^1 of I_X(s) of the
// projected surface X. Since X ~ P^2 with O_X(1) = O(k), h^0(O_X(s)) equals
// C(sk+2, 2) and h^1(O_X(s)) vanishes; the rest is a rank computation.

#include <cstdint>
#include <string>
#include <utility>

#include "avoidlab/exactlin.hpp"

namespace avoidlab {

struct VeroneseLimits {
  unsigned max_k = 6;
  std::size_t max_n = 20;
};

/// (k^2 + 3k) / 2
std::size_t veronese_dimension(unsigned k);

struct VeroneseProjection {
  unsigned k = 2;
  std::size_t N = 5;
  std::size_t n = 5;
  PrimeMatrix proj{0, 0, PrimeModulus{}};  // (n+1) x (N+1)
  PrimeModulus modulus;
  std::uint64_t seed = 0;
  unsigned retries = 0;
};

/// n == N gives the identity (no projection). Otherwise a seeded random
/// (n+1) x (N+1) matrix, resampled until it has rank n+1. Requires
/// 5 <= n <= N and k, n within the limits.
VeroneseProjection build_projection(unsigned k, std::size_t n, PrimeModulus modulus, std::uint64_t seed,
                                    VeroneseLimits limits = {}, unsigned max_retries = 32);

struct ProjectedCohomology {
  std::int64_t h0_I = 0;
  std::int64_t h1_I = 0;
  std::int64_t rows = 0;  // C(n+s, n)
  std::int64_t cols = 0;  // C(sk+2, 2)
  std::int64_t rank = 0;
};

/// Requires s >= 1.
ProjectedCohomology projected_cohomology(const VeroneseProjection& vp, unsigned s);

/// (max{0, C(n+s,n) - C(sk+2,2)}, max{0, C(sk+2,2) - C(n+s,n)}): the
/// maximal-rank expectation. Proven for s = 2, open for s >= 3.
std::pair<std::int64_t, std::int64_t> maximal_rank_expectation(std::size_t n, unsigned k, unsigned s);

/// The s = 2 case.
inline std::pair<std::int64_t, std::int64_t> projection_quadric_formula(std::size_t n, unsigned k) {
  return maximal_rank_expectation(n, k, 2);
}

struct ProjectionComparison {
  unsigned k = 0;
  std::size_t n = 0;
  unsigned s = 0;
  std::pair<std::int64_t, std::int64_t> expected;
  ProjectedCohomology measured;
  bool match = false;
  std::uint64_t seed_used = 0;
  unsigned attempts = 0;
  bool open_question = false;  // s >= 3
};

/// Measures up to `attempts` projections with seeds seed, seed+1, ... and
/// stops at the first exact match with the maximal-rank expectation.
ProjectionComparison compare_with_expectation(unsigned k, std::size_t n, unsigned s, PrimeModulus modulus,
                                              std::uint64_t seed, unsigned attempts = 5,
                                              VeroneseLimits limits = {});

/// A single measurement for s >= 3, reported against the conjectured values.
ProjectionComparison probe_open_question(unsigned k, std::size_t n, unsigned s, PrimeModulus modulus,
                                         std::uint64_t seed, VeroneseLimits limits = {});

}  // namespace avoidlab
