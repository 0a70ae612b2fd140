#pragma once

// Intersection calculus on the projective bundle
//   T = P(O + O(-e)^m) over P^1,
// with Picard basis h (the tautological section with |h| = {h}) and f (a
// fiber). Relations: f^2 = 0, h^m f = 1, h^(m+1) = -m e.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace avoidlab {

struct ScrollData {
  std::int64_t m = 1;  // fiber dimension
  std::int64_t e = 2;  // twist

  /// Throws std::invalid_argument unless m >= 1 and e >= 2.
  static ScrollData make(std::int64_t m, std::int64_t e);
};

/// a h + b f
struct DivisorClass {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// a h^c + b h^(c-1) f; b is zero when c = 0.
struct ChowClass {
  std::int64_t codim = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const ChowClass&, const ChowClass&) = default;
};

/// A class of codimension m+1 collapses to its degree.
using ChowProduct = std::variant<ChowClass, std::int64_t>;

/// Throws std::invalid_argument with more than m+1 factors and
/// std::overflow_error if a coefficient leaves 64-bit range.
ChowProduct chow_multiply(const ScrollData& scroll, std::span<const DivisorClass> factors);

/// Degree of a codimension-(m+1) product; throws if the codimension differs.
std::int64_t chow_degree(const ScrollData& scroll, std::span<const DivisorClass> factors);

bool is_effective(const ScrollData& scroll, const DivisorClass& d);
bool is_globally_generated(const ScrollData& scroll, const DivisorClass& d);
bool is_ample(const ScrollData& scroll, const DivisorClass& d);

struct ContainmentVerdict {
  bool contained = false;            // exact: t(h+ef) - (h+bf) is effective
  DivisorClass residual;             // (t-1) h + (te - b) f
  bool sufficient_condition = false;  // b >= t e + 1, the coarser sufficient condition for non-containment
  bool in_gap = false;               // not contained, yet b in [e+1, te]
};

/// Whether the image in P^(e+m) of a divisor in |h + bf| lies on a
/// hypersurface of degree t. Requires d.a == 1 and t >= 1.
ContainmentVerdict divisor_in_hypersurface(const ScrollData& scroll, const DivisorClass& d, std::int64_t t);

struct ConstructionPlan {
  std::int64_t n = 0, m = 0, s = 0, d = 0;
  std::int64_t e = 0;  // minimal degree d(n-m, s) of the base curve
  ScrollData scroll;
  DivisorClass divisor;
  std::int64_t degree = 0;  // (h + d f)(h + e f)^m
  bool degree_check = false;
  bool contained_in_degree_s_minus_1 = true;
  bool consistent = false;  // degree_check and not contained
};

class PlanError : public std::invalid_argument {
 public:
  explicit PlanError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Throws PlanError naming every violated precondition among
/// m >= 1, n >= m+3, s >= 3, d >= (s-1) d(n-m, s) + 1.
ConstructionPlan plan_scroll_divisor(std::int64_t n, std::int64_t m, std::int64_t s, std::int64_t d);

}  // namespace avoidlab
