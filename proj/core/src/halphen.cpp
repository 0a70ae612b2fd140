#include "avoidlab/halphen.hpp"

#include <stdexcept>

namespace avoidlab {

std::string to_string(RangeLabel label) {
  switch (label) {
    case RangeLabel::kEmpty: return "Empty";
    case RangeLabel::kA: return "A";
    case RangeLabel::kB: return "B";
    case RangeLabel::kBoundaryBC: return "BoundaryBC";
    case RangeLabel::kC: return "C";
  }
  return "?";
}

RangeClassification classify_range(std::int64_t d, std::int64_t s) {
  if (d < 3 || s < 3) throw std::invalid_argument("classify_range: d and s must be at least 3");
  const BigInt q = BigInt(s) * s + 4 * s + 6;
  const BigInt sd = BigInt(s) * (s - 1);

  RangeClassification r;
  if (6 * BigInt(d) < q) r.matching.push_back(RangeLabel::kEmpty);
  if (q <= 6 * BigInt(d) && 3 * BigInt(d) < q) r.matching.push_back(RangeLabel::kA);
  if (q <= 3 * BigInt(d) && BigInt(d) < sd) r.matching.push_back(RangeLabel::kB);
  if (BigInt(d) == sd) r.matching.push_back(RangeLabel::kBoundaryBC);
  if (BigInt(d) > sd) r.matching.push_back(RangeLabel::kC);
  r.label = r.matching.front();
  r.on_ab_boundary = 3 * BigInt(d) == q;
  r.on_empty_a_boundary = 6 * BigInt(d) == q;
  return r;
}

BigInt range_A_max_genus(std::int64_t d, std::int64_t s, std::int64_t n) {
  if (n < 3) throw std::invalid_argument("range_A_max_genus: n must be at least 3");
  return BigInt(d) * (s - 1) + 1 - binomial(n + s - 1, n);
}

LinkageData gruson_peskine_link(std::int64_t d, std::int64_t s) {
  if (s < 1) throw std::invalid_argument("gruson_peskine_link: s must be positive");
  if (BigInt(d) <= BigInt(s) * (s - 1)) {
    throw std::invalid_argument("gruson_peskine_link: requires d > s(s-1)");
  }
  LinkageData l;
  const std::int64_t up = (d + s - 1) / s;
  l.ci_flag = d % s == 0;
  l.plane_curve_degree = s * up - d;
  l.surface_degree_low = s;
  l.surface_degree_high = up;
  l.h0_at_most_two = BigInt(d) >= BigInt(s) * s;
  l.h0_equals_two_case = BigInt(d) == BigInt(s) * s;
  return l;
}

}  // namespace avoidlab
