#pragma once

// Halphen ranges for space curves of degree d on no surface of degree < s.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avoidlab/bigint.hpp"

namespace avoidlab {

enum class RangeLabel { kEmpty, kA, kB, kBoundaryBC, kC };

std::string to_string(RangeLabel label);

struct RangeClassification {
  RangeLabel label = RangeLabel::kEmpty;
  /// Every range whose defining inequalities hold. For s <= 4 the printed
  /// conditions of A overlap those of C; the label is the first match in the
  /// order Empty, A, B, BoundaryBC, C.
  std::vector<RangeLabel> matching;
  /// 3d == s^2 + 4s + 6: the printed conditions send this point to B.
  bool on_ab_boundary = false;
  /// 6d == s^2 + 4s + 6: the printed conditions send this point to A.
  bool on_empty_a_boundary = false;
};

/// Requires d >= 3, s >= 3.
RangeClassification classify_range(std::int64_t d, std::int64_t s);

/// d(s-1) + 1 - C(n+s-1, n); the Range A genus ceiling when n = 3.
BigInt range_A_max_genus(std::int64_t d, std::int64_t s, std::int64_t n);

struct LinkageData {
  bool ci_flag = false;              // d divisible by s
  std::int64_t plane_curve_degree = 0;  // s * ceil(d/s) - d
  std::int64_t surface_degree_low = 0;  // s
  std::int64_t surface_degree_high = 0; // ceil(d/s)
  bool h0_at_most_two = false;       // d >= s^2
  bool h0_equals_two_case = false;   // d == s^2
};

/// Requires d > s(s-1).
LinkageData gruson_peskine_link(std::int64_t d, std::int64_t s);

}  // namespace avoidlab
