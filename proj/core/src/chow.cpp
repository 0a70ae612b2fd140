#include "avoidlab/chow.hpp"

#include <stdexcept>
#include <string>

#include "avoidlab/invariants.hpp"

namespace avoidlab {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("Chow coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("Chow coefficient overflow");
  return r;
}

}  // namespace

ScrollData ScrollData::make(std::int64_t m, std::int64_t e) {
  if (m < 1) throw std::invalid_argument("scroll: m must be at least 1");
  if (e < 2) throw std::invalid_argument("scroll: e must be at least 2");
  return ScrollData{m, e};
}

ChowProduct chow_multiply(const ScrollData& scroll, std::span<const DivisorClass> factors) {
  const auto c = static_cast<std::int64_t>(factors.size());
  if (c > scroll.m + 1) {
    throw std::invalid_argument("chow_multiply: " + std::to_string(c) +
                                " factors exceed dimension m+1 = " + std::to_string(scroll.m + 1));
  }
  // f^2 = 0, so the product stays in span(h^c, h^(c-1) f).
  ChowClass acc{0, 1, 0};
  for (const auto& D : factors) {
    const std::int64_t a = checked_mul(acc.a, D.a);
    const std::int64_t b = checked_add(checked_mul(acc.a, D.b), checked_mul(acc.b, D.a));
    acc = ChowClass{acc.codim + 1, a, b};
  }
  if (c == scroll.m + 1) {
    // h^(m+1) = -m e, h^m f = 1
    return checked_add(checked_mul(acc.a, checked_mul(-scroll.m, scroll.e)), acc.b);
  }
  return acc;
}

std::int64_t chow_degree(const ScrollData& scroll, std::span<const DivisorClass> factors) {
  auto r = chow_multiply(scroll, factors);
  if (const auto* deg = std::get_if<std::int64_t>(&r)) return *deg;
  throw std::invalid_argument("chow_degree: product is not of top codimension");
}

bool is_effective(const ScrollData& scroll, const DivisorClass& d) {
  return (d.a == 0 && d.b >= 0) || (d.a > 0 && d.b >= d.a * scroll.e);
}

bool is_globally_generated(const ScrollData& scroll, const DivisorClass& d) {
  return d.a >= 0 && d.b >= d.a * scroll.e;
}

bool is_ample(const ScrollData& scroll, const DivisorClass& d) {
  return d.a > 0 && d.b > d.a * scroll.e;
}

ContainmentVerdict divisor_in_hypersurface(const ScrollData& scroll, const DivisorClass& d,
                                           std::int64_t t) {
  if (d.a != 1) throw std::invalid_argument("divisor_in_hypersurface: only classes h + b f are modeled");
  if (t < 1) throw std::invalid_argument("divisor_in_hypersurface: t must be at least 1");
  ContainmentVerdict v;
  // The cone is ACM: degree-t hypersurfaces pull back to |t(h + e f)|.
  v.residual = DivisorClass{t - 1, checked_add(checked_mul(t, scroll.e), -d.b)};
  v.contained = is_effective(scroll, v.residual);
  v.sufficient_condition = d.b >= checked_mul(t, scroll.e) + 1;
  v.in_gap = !v.contained && !v.sufficient_condition;
  return v;
}

PlanError::PlanError(std::vector<std::string> violations)
    : std::invalid_argument([&] {
        std::string msg = "plan preconditions violated:";
        for (const auto& v : violations) msg += " [" + v + "]";
        return msg;
      }()),
      violations_(std::move(violations)) {}

ConstructionPlan plan_scroll_divisor(std::int64_t n, std::int64_t m, std::int64_t s, std::int64_t d) {
  std::vector<std::string> violations;
  if (m < 1) violations.push_back("m >= 1");
  if (n < m + 3) violations.push_back("n >= m+3");
  if (s < 3) violations.push_back("s >= 3");
  std::int64_t e = 0;
  if (violations.empty()) {
    e = to_int64(minimal_degree(n - m, s));
    if (d < (s - 1) * e + 1) {
      violations.push_back("d >= (s-1)*d(n-m,s)+1 = " + std::to_string((s - 1) * e + 1));
    }
  }
  if (!violations.empty()) throw PlanError(std::move(violations));

  ConstructionPlan plan;
  plan.n = n;
  plan.m = m;
  plan.s = s;
  plan.d = d;
  plan.e = e;
  plan.scroll = ScrollData::make(m, e);
  plan.divisor = DivisorClass{1, d};

  std::vector<DivisorClass> factors{plan.divisor};
  factors.insert(factors.end(), static_cast<std::size_t>(m), DivisorClass{1, e});
  plan.degree = chow_degree(plan.scroll, factors);
  plan.degree_check = plan.degree == d;
  plan.contained_in_degree_s_minus_1 = divisor_in_hypersurface(plan.scroll, plan.divisor, s - 1).contained;
  plan.consistent = plan.degree_check && !plan.contained_in_degree_s_minus_1;
  return plan;
}

}  // namespace avoidlab
