#include "avoidlab/surfaces.hpp"

#include <stdexcept>

namespace avoidlab {

std::string to_string(SurfaceCase c) {
  switch (c) {
    case SurfaceCase::kGeneral: return "general";
    case SurfaceCase::kPlane: return "plane";
    case SurfaceCase::kScroll: return "scroll";
    case SurfaceCase::kNef2K3: return "nef2K3";
    case SurfaceCase::kNonnegativeKodaira: return "kodaira-nonneg";
  }
  return "?";
}

SurfaceCase parse_surface_case(const std::string& text) {
  for (auto c : {SurfaceCase::kGeneral, SurfaceCase::kPlane, SurfaceCase::kScroll, SurfaceCase::kNef2K3,
                 SurfaceCase::kNonnegativeKodaira}) {
    if (text == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown surface case '" + text + "'");
}

std::int64_t sectional_curve_genus(std::int64_t d, std::int64_t s, std::int64_t w1) {
  const std::int64_t twice = s * s * d + s * w1;
  if (twice % 2 != 0) {
    throw std::invalid_argument("sectional_curve_genus: s^2 d + s w1 is odd, so the input is inconsistent");
  }
  return 1 + twice / 2;
}

namespace {

bool is_square(std::int64_t d, std::int64_t* root = nullptr) {
  if (d < 0) return false;
  std::int64_t k = 0;
  while ((k + 1) * (k + 1) <= d) ++k;
  if (root) *root = k;
  return k * k == d;
}

BoundValue make_bound(const Rational& q) { return BoundValue{q, floor(q)}; }

}  // namespace

BoundValue h0_bound_for(SurfaceCase c, std::int64_t d, std::int64_t s) {
  const Rational dd(d);
  const Rational ss(s);
  switch (c) {
    case SurfaceCase::kNonnegativeKodaira:
      return make_bound(2 + ss * ss * dd / 2);
    case SurfaceCase::kScroll:
      return make_bound(1 + (ss * ss + 2 * ss) * dd / 2);
    case SurfaceCase::kNef2K3:
      return make_bound(1 + (ss * ss + Rational(3, 2) * ss) * dd / 2);
    case SurfaceCase::kGeneral:
    case SurfaceCase::kPlane:
      return make_bound(1 + (ss * ss + 3 * ss) * dd / 2);
  }
  throw std::logic_error("unhandled surface case");
}

BoundValue h0_upper_bound(const SurfaceData& data) {
  if (data.n < 4) throw std::invalid_argument("h0_upper_bound: n must be at least 4");
  if (data.s < 2) throw std::invalid_argument("h0_upper_bound: s must be at least 2");
  if (data.d < data.n - 1) throw std::invalid_argument("h0_upper_bound: d must be at least n-1");
  if (data.kind == SurfaceCase::kPlane && !is_square(data.d)) {
    throw std::invalid_argument("h0_upper_bound: the plane case needs d to be a perfect square");
  }
  return h0_bound_for(data.kind, data.d, data.s);
}

EqualityCase universal_bound_equality_case(std::int64_t d, std::int64_t n) {
  std::int64_t k = 0;
  if (!is_square(d, &k)) return {};
  if (binomial(k + 2, 2) < n + 1) return {};
  return {true, k};
}

LowerBound veronese_h1_lower_bound(std::int64_t n, std::int64_t s, std::int64_t k) {
  const Rational top = 1 + Rational(s * s + 3 * s) * k * k / 2;
  const Rational forms(binomial(n + s, n));
  if (forms > top) {
    throw std::invalid_argument("veronese_h1_lower_bound: needs C(n+s,n) <= 1 + (s^2+3s)k^2/2");
  }
  LowerBound b;
  b.value = top - forms;
  b.integral = boost::multiprecision::denominator(b.value) == 1;
  return b;
}

VeroneseBoundTension veronese_bound_tension(std::int64_t k, std::int64_t s) {
  VeroneseBoundTension t;
  t.k = k;
  t.s = s;
  t.exact_h0 = binomial(s * k + 2, 2);
  t.universal_bound = h0_bound_for(SurfaceCase::kGeneral, k * k, s);
  t.tension = Rational(t.exact_h0) != t.universal_bound.exact;
  return t;
}

std::string to_string(QuadricFactKind k) {
  switch (k) {
    case QuadricFactKind::kSectionalGenusUpper: return "sectional-genus";
    case QuadricFactKind::kEvenDimensionLower: return "even-dimension";
    case QuadricFactKind::kAlmostMinimalRational: return "almost-minimal";
  }
  return "?";
}

QuadricFactKind parse_quadric_fact_kind(const std::string& text) {
  for (auto k : {QuadricFactKind::kSectionalGenusUpper, QuadricFactKind::kEvenDimensionLower,
                 QuadricFactKind::kAlmostMinimalRational}) {
    if (text == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown quadric fact kind '" + text + "'");
}

QuadricFacts quadric_facts(std::int64_t n, std::int64_t d, std::optional<std::int64_t> g_sect,
                           QuadricFactKind kind) {
  QuadricFacts f;
  f.kind = kind;
  switch (kind) {
    case QuadricFactKind::kSectionalGenusUpper:
      if (!g_sect) throw std::invalid_argument("quadric_facts: sectional genus required");
      f.upper = binomial(n + 1, 2) - 2 * d - 1 + *g_sect;
      break;
    case QuadricFactKind::kEvenDimensionLower:
      f.lower = binomial(n + 2, 2) - 1 - 5 * d;
      f.vacuous = *f.lower <= 0;
      break;
    case QuadricFactKind::kAlmostMinimalRational:
      if (d != n) throw std::invalid_argument("quadric_facts: almost-minimal degree requires d == n");
      f.lower = binomial(n + 1, 2) - 2 * n - 2;
      f.upper = binomial(n + 1, 2) - 2 * n - 1;
      f.smooth_value = binomial(n + 2, 2) - 3 * n - 3;
      break;
  }
  return f;
}

}  // namespace avoidlab
