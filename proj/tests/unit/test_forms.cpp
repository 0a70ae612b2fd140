#include <algorithm>

#include "avoidlab/forms.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace avoidlab;

namespace {

const PrimeModulus kP;

BinaryForm form(std::initializer_list<std::int64_t> c, PrimeModulus mod = kP) {
  std::vector<std::int64_t> v(c);
  return BinaryForm::from_integers(v, mod);
}

BinaryForm random_form(oracle::Gen& g, unsigned deg, PrimeModulus mod = kP) {
  BinaryForm f(deg, mod);
  for (unsigned i = 0; i <= deg; ++i) f[i] = static_cast<Residue>(g.next() % mod.value());
  return f;
}

// u^i v^(deg-i) in the coefficient convention.
BinaryForm monomial(unsigned deg, unsigned i) {
  BinaryForm f(deg, kP);
  f[i] = 1;
  return f;
}

std::vector<oracle::Row> rows_of(const PrimeMatrix& m) {
  std::vector<oracle::Row> out(m.rows(), oracle::Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST_CASE("binomial examples") {
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(8, 5) == 56);
  for (int a = 0; a < 20; ++a) CHECK(binomial(a, 0) == 1);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
  CHECK(binomial(100, 50) == oracle::binom(100, 50));
}

TEST_CASE("binomial Pascal grid") {
  for (std::int64_t a = 1; a < 50; ++a)
    for (std::int64_t b = 1; b < 50; ++b) {
      CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
      CHECK(binomial(a, b) == oracle::binom(a, b));
    }
}

TEST_CASE("monomial basis order and indexing") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (unsigned t = 0; t <= 5; ++t) {
      MonomialBasis b(n, t);
      CHECK(b.size() == static_cast<std::size_t>(oracle::binom64(static_cast<std::int64_t>(n + t), t)));
      for (std::size_t i = 0; i < b.size(); ++i) {
        unsigned sum = 0;
        for (auto e : b[i]) sum += e;
        CHECK(sum == t);
        CHECK(b.index_of(b[i]) == i);
        if (i > 0) CHECK(std::lexicographical_compare(b[i].begin(), b[i].end(), b[i - 1].begin(), b[i - 1].end()));
      }
      if (t > 0) {
        CHECK(b[0][0] == t);
        CHECK(b[b.size() - 1][n] == t);
      }
    }
}

TEST_CASE("substitute_curve examples") {
  const std::vector<BinaryForm> line{monomial(1, 1), monomial(1, 0)};  // (u, v)
  const unsigned x0sq[] = {2, 0};
  CHECK(substitute_curve(x0sq, line) == monomial(2, 2));

  const std::vector<BinaryForm> conic_part{monomial(2, 2), form({0, 1, 0})};  // (u^2, uv)
  const unsigned x0x1[] = {1, 1};
  CHECK(substitute_curve(x0x1, conic_part) == monomial(4, 3));  // u^3 v

  const std::vector<BinaryForm> bad{monomial(2, 2), monomial(1, 0)};
  CHECK_THROWS_AS(substitute_curve(x0x1, bad), std::invalid_argument);
}

TEST_CASE("restriction matrix examples") {
  const std::vector<BinaryForm> conic{monomial(2, 2), monomial(2, 1), monomial(2, 0)};
  const auto m1 = build_restriction_matrix(2, 1, conic);
  CHECK(m1.rows() == 3);
  CHECK(m1.cols() == 3);
  CHECK(rank(m1) == 3);
  CHECK(m1.rows() - rank(m1) == 0);

  const auto m2 = build_restriction_matrix(2, 2, conic);
  CHECK(m2.rows() == 6);
  CHECK(m2.cols() == 5);
  CHECK(rank(m2) == oracle::rank_mod(rows_of(m2), kP.value()));
  CHECK(m2.rows() - rank(m2) == 1);
  // Basis order x0^2, x0x1, x0x2, x1^2, x1x2, x2^2: the conic is x0 x2 - x1^2.
  const auto k = left_kernel_basis(m2);
  REQUIRE(k.size() == 1);
  const Residue c = k[0][2];
  CHECK(c != 0u);
  CHECK(k[0][3] == kP.neg(c));
  for (std::size_t i : {0, 1, 4, 5}) CHECK(k[0][i] == 0u);

  const std::vector<BinaryForm> cubic{monomial(3, 3), monomial(3, 2), monomial(3, 1), monomial(3, 0)};
  const auto m3 = build_restriction_matrix(3, 1, cubic);
  CHECK(m3.rows() == 4);
  CHECK(rank(m3) == 4);
}

TEST_CASE("remainder examples") {
  // u^3 mod (u^2 - v^2) leaves u v^2, coordinates on {v^3, u v^2}.
  const auto f = monomial(3, 3);
  const auto g = form({-1, 0, 1});
  const auto r = remainder_mod(f, g);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == 0u);
  CHECK(r[1] == 1u);

  const auto h = form({3, 1, 4});
  const auto zero = remainder_mod(g * h, g);
  CHECK(std::all_of(zero.begin(), zero.end(), [](Residue x) { return x == 0; }));

  CHECK_THROWS_AS(remainder_mod(monomial(1, 1), g), std::invalid_argument);
  CHECK_THROWS_AS(remainder_mod(f, BinaryForm(2, kP)), std::invalid_argument);
  CHECK_THROWS_AS(remainder_mod(f, form({1, 1, 0})), std::invalid_argument);  // no u^2 term
}

TEST_CASE("division re-expansion property") {
  oracle::Gen gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto dg = static_cast<unsigned>(gen.range(1, 6));
    const auto df = dg + static_cast<unsigned>(gen.range(0, 6));
    auto g = random_form(gen, dg);
    if (g.leading() == 0) g[dg] = 1;
    const auto f = random_form(gen, df);
    const auto [q, r] = divide(f, g);
    CHECK(q * g + r == f);
    for (unsigned i = dg; i <= df; ++i) CHECK(r[i] == 0u);
    const auto coords = remainder_mod(f, g);
    for (unsigned i = 0; i < dg; ++i) CHECK(coords[i] == r[i]);
  }
}

TEST_CASE("substitution is multiplicative") {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(gen.range(1, 4));
    const auto d = static_cast<unsigned>(gen.range(1, 4));
    std::vector<BinaryForm> phi;
    for (std::size_t i = 0; i <= n; ++i) phi.push_back(random_form(gen, d));
    Exponents e1(n + 1), e2(n + 1), sum(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      e1[i] = static_cast<unsigned>(gen.range(0, 2));
      e2[i] = static_cast<unsigned>(gen.range(0, 2));
      sum[i] = e1[i] + e2[i];
    }
    CHECK(substitute_curve(sum, phi) == substitute_curve(e1, phi) * substitute_curve(e2, phi));
  }
}

TEST_CASE("non-degeneracy detection agrees between paths") {
  oracle::Gen gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(gen.range(2, 4));
    const auto d = static_cast<unsigned>(gen.range(1, 6));
    std::vector<BinaryForm> phi;
    for (std::size_t i = 0; i <= n; ++i) phi.push_back(random_form(gen, d));
    if (trial % 2) phi[n] = phi[0] + phi[1].scaled(3);
    PrimeMatrix coeffs(n + 1, d + 1, kP);
    for (std::size_t i = 0; i <= n; ++i)
      for (unsigned j = 0; j <= d; ++j) coeffs(i, j) = phi[i][j];
    const bool by_coeffs = rank(coeffs) == n + 1;
    const bool by_restriction = rank(build_restriction_matrix(n, 1, phi)) == n + 1;
    CHECK(by_coeffs == by_restriction);
    if (trial % 2 || d < n) CHECK(!by_coeffs);
  }
}

TEST_CASE("squarefree and common roots") {
  CHECK(is_squarefree(form({0, -1, 0, 1})));  // u(u - v)(u + v)
  CHECK(!is_squarefree(form({0, 0, 1})));     // u^2
  CHECK(is_squarefree(form({0, 1, 0})));       // uv
  CHECK(!is_squarefree(form({0, 1, 0, 0})));  // u v^2: double root at infinity
  CHECK(is_squarefree(form({1, 0, 1})));      // u^2 + v^2, p = 1000003 is 3 mod 4

  const std::vector<BinaryForm> share{form({0, 1}), form({0, 1, 1})};  // u and u(u+v)
  CHECK(have_common_root(share));
  const std::vector<BinaryForm> coprime{form({0, 1}), form({1, 0})};  // u and v
  CHECK(!have_common_root(coprime));
  const std::vector<BinaryForm> both_at_infinity{form({0, 1, 0}), form({0, 0, 1, 0})};  // uv and u^2 v
  CHECK(have_common_root(both_at_infinity));
}

TEST_CASE("homogeneous form product") {
  HomogeneousForm a(1, 1, kP), b(1, 1, kP);
  a[0] = 1;
  a[1] = 1;  // x0 + x1
  b[0] = 1;
  b[1] = kP.neg(1);  // x0 - x1
  const auto c = a * b;
  REQUIRE(c.degree() == 2);
  CHECK(c[0] == 1u);
  CHECK(c[1] == 0u);
  CHECK(c[2] == kP.neg(1));
}
