#include <algorithm>

#include "avoidlab/veronese.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace avoidlab;

namespace {

const PrimeModulus kP;

// h0 and h1 of I_X(s) for the projected surface from the rank of degree-s
// evaluation at random points of P^2 pushed through the Veronese map and the
// projection. With more points than C(sk+2, 2) the evaluation rank equals the
// restriction rank for all but a negligible set of point choices.
std::pair<std::int64_t, std::int64_t> by_points(const VeroneseProjection& vp, unsigned s, std::uint64_t seed) {
  const std::int64_t p = kP.value();
  auto veronese = oracle::monomials(3, vp.k);
  std::reverse(veronese.begin(), veronese.end());
  const auto cols = oracle::binom64(static_cast<std::int64_t>(s) * vp.k + 2, 2);
  const auto rows = oracle::binom64(static_cast<std::int64_t>(vp.n + s), s);
  oracle::Gen g(seed);
  std::vector<oracle::Row> pts;
  for (std::int64_t i = 0; i < cols + 10; ++i) {
    const oracle::Row q{g.range(0, p - 1), g.range(0, p - 1), g.range(0, p - 1)};
    oracle::Row v;
    for (const auto& e : veronese) {
      std::int64_t x = 1;
      for (int c = 0; c < 3; ++c) x = x * oracle::powmod(q[c], e[c], p) % p;
      v.push_back(x);
    }
    oracle::Row img(vp.n + 1, 0);
    for (std::size_t r = 0; r <= vp.n; ++r)
      for (std::size_t c = 0; c <= vp.N; ++c) img[r] = (img[r] + static_cast<std::int64_t>(vp.proj(r, c)) * v[c]) % p;
    pts.push_back(std::move(img));
  }
  const auto rank = static_cast<std::int64_t>(oracle::evaluation_rank(pts, s, p));
  return {rows - rank, cols - rank};
}

std::pair<std::int64_t, std::int64_t> pair_of(const ProjectedCohomology& pc) { return {pc.h0_I, pc.h1_I}; }

}  // namespace

TEST_CASE("projection construction") {
  CHECK(veronese_dimension(2) == 5);
  CHECK(veronese_dimension(3) == 9);
  CHECK(veronese_dimension(6) == 27);

  const auto id = build_projection(2, 5, kP, 1);
  CHECK(id.proj == PrimeMatrix::identity(6, kP));
  const auto a = build_projection(3, 7, kP, 4);
  const auto b = build_projection(3, 7, kP, 4);
  CHECK(a.proj.rows() == 8);
  CHECK(a.proj.cols() == 10);
  CHECK(rank(a.proj) == 8);
  CHECK(a.proj == b.proj);

  CHECK_THROWS_AS(build_projection(2, 4, kP, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_projection(2, 6, kP, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_projection(1, 5, kP, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_projection(7, 10, kP, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_projection(6, 21, kP, 1), std::invalid_argument);
  CHECK_NOTHROW(build_projection(6, 21, kP, 1, VeroneseLimits{6, 27}));
  CHECK_THROWS_AS(projected_cohomology(id, 0), std::invalid_argument);
}

TEST_CASE("projected cohomology examples") {
  const auto v2 = build_projection(2, 5, kP, 1);
  CHECK(pair_of(projected_cohomology(v2, 2)) == std::pair<std::int64_t, std::int64_t>{6, 0});
  CHECK(by_points(v2, 2, 5) == std::pair<std::int64_t, std::int64_t>{6, 0});

  const auto v3 = build_projection(3, 5, kP, 1);
  CHECK(pair_of(projected_cohomology(v3, 2)) == std::pair<std::int64_t, std::int64_t>{0, 7});
  CHECK(by_points(v3, 2, 6) == std::pair<std::int64_t, std::int64_t>{0, 7});

  const auto v37 = build_projection(3, 7, kP, 1);
  CHECK(pair_of(projected_cohomology(v37, 2)) == std::pair<std::int64_t, std::int64_t>{8, 0});
  CHECK(by_points(v37, 2, 7) == std::pair<std::int64_t, std::int64_t>{8, 0});

  CHECK(projection_quadric_formula(9, 3) == std::pair<std::int64_t, std::int64_t>{27, 0});
  CHECK(projection_quadric_formula(5, 3) == std::pair<std::int64_t, std::int64_t>{0, 7});
}

TEST_CASE("cubic probes") {
  const auto a = probe_open_question(2, 5, 3, kP, 1);
  CHECK(a.open_question);
  CHECK(pair_of(a.measured) == std::pair<std::int64_t, std::int64_t>{28, 0});
  CHECK(a.match);
  const auto b = probe_open_question(3, 6, 3, kP, 1);
  CHECK(pair_of(b.measured) == std::pair<std::int64_t, std::int64_t>{29, 0});
  const auto c = probe_open_question(3, 5, 3, kP, 1);
  CHECK(pair_of(c.measured) == std::pair<std::int64_t, std::int64_t>{1, 0});
  CHECK(c.match);
  CHECK(by_points(build_projection(3, 5, kP, 1), 3, 8) == pair_of(c.measured));
}

TEST_CASE("euler characteristic and oracle agreement on random projections") {
  oracle::Gen g(4242);
  for (int trial = 0; trial < 12; ++trial) {
    const auto k = static_cast<unsigned>(g.range(2, 4));
    const auto n = static_cast<std::size_t>(g.range(5, static_cast<std::int64_t>(std::min<std::size_t>(veronese_dimension(k), 11))));
    const auto s = static_cast<unsigned>(g.range(1, 2));
    const auto vp = build_projection(k, n, kP, g.next());
    const auto pc = projected_cohomology(vp, s);
    CAPTURE(trial);
    CHECK(pc.h0_I - pc.h1_I == pc.rows - pc.cols);
    CHECK(pc.rows == oracle::binom64(static_cast<std::int64_t>(n + s), s));
    CHECK(pc.cols == oracle::binom64(static_cast<std::int64_t>(s * k + 2), 2));
    CHECK(pair_of(pc) == by_points(vp, s, g.next()));
  }
}

TEST_CASE("quadrics through projected surfaces have maximal rank") {
  for (unsigned k = 2; k <= 5; ++k) {
    for (std::size_t n : {5, 6, 7, 8, 9, 10, 11}) {
      if (n > veronese_dimension(k)) continue;
      const auto c = compare_with_expectation(k, n, 2, kP, 100 + k, 5);
      CAPTURE(k);
      CAPTURE(n);
      CHECK(c.match);
      CHECK(!c.open_question);
      CHECK(c.measured.h0_I == std::max<std::int64_t>(0, oracle::binom64(n + 2, 2) - oracle::binom64(2 * k + 2, 2)));
      CHECK(c.measured.h1_I == std::max<std::int64_t>(0, oracle::binom64(2 * k + 2, 2) - oracle::binom64(n + 2, 2)));
    }
  }
  CHECK_THROWS_AS(compare_with_expectation(2, 5, 2, kP, 1, 0), std::invalid_argument);
}
