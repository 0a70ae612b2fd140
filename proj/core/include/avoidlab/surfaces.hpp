#pragma once

// Numerical bounds for smooth non-degenerate surfaces X in P^n of degree d.
// All halvings are exact rationals; floors are reported alongside because
// h^0 is an integer.

#include <cstdint>
#include <optional>
#include <string>

#include "avoidlab/bigint.hpp"

namespace avoidlab {

/// Selects which h^0(O_X(s)) bound applies. The Kodaira dimension is an
/// input, never computed.
enum class SurfaceCase {
  kGeneral,          // universal bound 1 + (s^2 + 3s) d / 2
  kPlane,            // X ~ P^2: same bound, d must be a perfect square
  kScroll,           // P^1-bundle with lines as fibers: 1 + (s^2 + 2s) d / 2
  kNef2K3,           // 2K + 3H nef: 1 + (s^2 + 3s/2) d / 2
  kNonnegativeKodaira,  // kappa(X) != -infinity: 2 + s^2 d / 2
};

std::string to_string(SurfaceCase c);
SurfaceCase parse_surface_case(const std::string& text);

struct SurfaceData {
  std::int64_t n = 4;
  std::int64_t d = 3;
  std::int64_t s = 2;
  std::optional<std::int64_t> w1;      // K_X . H
  std::optional<std::int64_t> g_sect;  // sectional genus
  SurfaceCase kind = SurfaceCase::kGeneral;
};

/// 1 + (s^2 d + s w1)/2, the genus of a smooth member of |O_X(s)|.
/// Throws std::invalid_argument when s^2 d + s w1 is odd.
std::int64_t sectional_curve_genus(std::int64_t d, std::int64_t s, std::int64_t w1);

struct BoundValue {
  Rational exact;
  BigInt floor;
};

/// Requires n >= 4, s >= 2, d >= n-1 (and d a square for kPlane).
BoundValue h0_upper_bound(const SurfaceData& data);

/// Bound for a given case without the precondition checks on n.
BoundValue h0_bound_for(SurfaceCase c, std::int64_t d, std::int64_t s);

struct EqualityCase {
  bool holds = false;
  std::int64_t k = 0;  // d = k^2 when holds
};

/// d = k^2 with C(k+2, 2) >= n+1: the shape required for equality in the
/// universal bound.
EqualityCase universal_bound_equality_case(std::int64_t d, std::int64_t n);

struct LowerBound {
  Rational value;
  bool integral = true;
};

/// 1 + (s^2 + 3s) k^2 / 2 - C(n+s, n) for an isomorphic projection of the
/// degree-k Veronese surface. Throws when C(n+s, n) > 1 + (s^2+3s) k^2 / 2.
LowerBound veronese_h1_lower_bound(std::int64_t n, std::int64_t s, std::int64_t k);

/// The exact h^0(O_X(s)) = C(sk+2, 2) of the degree-k Veronese surface set
/// against the universal bound at d = k^2. For k >= 2 the exact value is
/// strictly smaller, which contradicts equality being attained there; the
/// record carries both numbers and a flag rather than choosing between them.
struct VeroneseBoundTension {
  std::int64_t k = 0;
  std::int64_t s = 0;
  BigInt exact_h0;
  BoundValue universal_bound;
  bool tension = false;  // exact_h0 != bound
};

VeroneseBoundTension veronese_bound_tension(std::int64_t k, std::int64_t s);

enum class QuadricFactKind {
  kSectionalGenusUpper,   // h0(I_X(2)) <= C(n+1,2) - 2d - 1 + g
  kEvenDimensionLower,    // h0(I_X(2)) >= C(n+2,2) - 1 - 5d, n even
  kAlmostMinimalRational, // d = n, rational hyperplane section
};

std::string to_string(QuadricFactKind k);
QuadricFactKind parse_quadric_fact_kind(const std::string& text);

struct QuadricFacts {
  QuadricFactKind kind{};
  std::optional<BigInt> upper;  // upper bound on h0(I_X(2))
  std::optional<BigInt> lower;  // lower bound on h0(I_X(2))
  std::optional<BigInt> smooth_value;  // exact value for a smooth surface
  bool vacuous = false;         // lower bound <= 0
};

/// kAlmostMinimalRational requires d == n; kSectionalGenusUpper requires g.
QuadricFacts quadric_facts(std::int64_t n, std::int64_t d, std::optional<std::int64_t> g_sect,
                           QuadricFactKind kind);

}  // namespace avoidlab
