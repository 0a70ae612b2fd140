#include "avoidlab/veronese.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "avoidlab/forms.hpp"

namespace avoidlab {

namespace {

std::int64_t binom64(std::int64_t a, std::int64_t b) { return to_int64(binomial(a, b)); }

struct RowBuilder {
  const std::vector<HomogeneousForm>& coords;
  const MonomialBasis& basis;
  PrimeMatrix& out;
  Exponents exps;

  // Multisets i_1 <= ... <= i_s of coordinate indices, carrying the partial
  // product down the recursion.
  void run(std::size_t first, unsigned remaining, const HomogeneousForm& partial) {
    if (remaining == 0) {
      auto row = out.row(basis.index_of(exps));
      auto c = partial.coefficients();
      std::copy(c.begin(), c.end(), row.begin());
      return;
    }
    for (std::size_t i = first; i < coords.size(); ++i) {
      ++exps[i];
      run(i, remaining - 1, partial * coords[i]);
      --exps[i];
    }
  }
};

}  // namespace

std::size_t veronese_dimension(unsigned k) { return (static_cast<std::size_t>(k) * k + 3 * k) / 2; }

VeroneseProjection build_projection(unsigned k, std::size_t n, PrimeModulus modulus, std::uint64_t seed,
                                    VeroneseLimits limits, unsigned max_retries) {
  if (k < 2) throw std::invalid_argument("build_projection: k must be at least 2");
  if (k > limits.max_k) {
    throw std::invalid_argument("build_projection: k=" + std::to_string(k) + " exceeds the limit " +
                                std::to_string(limits.max_k));
  }
  const std::size_t N = veronese_dimension(k);
  if (n < 5 || n > N) {
    throw std::invalid_argument("build_projection: n=" + std::to_string(n) + " outside [5, " +
                                std::to_string(N) + "]");
  }
  if (n > limits.max_n) {
    throw std::invalid_argument("build_projection: n=" + std::to_string(n) + " exceeds the limit " +
                                std::to_string(limits.max_n));
  }

  VeroneseProjection vp;
  vp.k = k;
  vp.N = N;
  vp.n = n;
  vp.modulus = modulus;
  vp.seed = seed;
  if (n == N) {
    vp.proj = PrimeMatrix::identity(N + 1, modulus);
    return vp;
  }
  std::mt19937_64 rng(seed);
  for (unsigned attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Residue> e((n + 1) * (N + 1));
    for (auto& x : e) x = static_cast<Residue>(rng() % modulus.value());
    PrimeMatrix m(n + 1, N + 1, std::move(e), modulus);
    if (rank(m) == n + 1) {
      vp.proj = std::move(m);
      vp.retries = attempt;
      return vp;
    }
  }
  throw std::runtime_error("build_projection: retries exhausted");
}

ProjectedCohomology projected_cohomology(const VeroneseProjection& vp, unsigned s) {
  if (s < 1) throw std::invalid_argument("projected_cohomology: s must be at least 1");
  // Coordinate i of P^n pulls back to the degree-k form sum_j proj(i,j) m_j,
  // where m_j runs over the degree-k monomials on P^2 (the Veronese coordinates).
  std::vector<HomogeneousForm> coords;
  coords.reserve(vp.n + 1);
  for (std::size_t i = 0; i <= vp.n; ++i) {
    HomogeneousForm f(2, vp.k, vp.modulus);
    for (std::size_t j = 0; j <= vp.N; ++j) f[j] = vp.proj(i, j);
    coords.push_back(std::move(f));
  }

  MonomialBasis basis(vp.n, s);
  const auto cols = static_cast<std::size_t>(binom64(static_cast<std::int64_t>(s) * vp.k + 2, 2));
  PrimeMatrix m(basis.size(), cols, vp.modulus);
  HomogeneousForm one(2, 0, vp.modulus);
  one[0] = 1;
  RowBuilder builder{coords, basis, m, Exponents(vp.n + 1, 0)};
  builder.run(0, s, one);

  ProjectedCohomology pc;
  pc.rows = static_cast<std::int64_t>(m.rows());
  pc.cols = static_cast<std::int64_t>(m.cols());
  pc.rank = static_cast<std::int64_t>(rank(m));
  pc.h0_I = pc.rows - pc.rank;
  pc.h1_I = pc.cols - pc.rank;
  return pc;
}

std::pair<std::int64_t, std::int64_t> maximal_rank_expectation(std::size_t n, unsigned k, unsigned s) {
  const auto forms = binom64(static_cast<std::int64_t>(n + s), static_cast<std::int64_t>(n));
  const auto sections = binom64(static_cast<std::int64_t>(s) * k + 2, 2);
  return {std::max<std::int64_t>(0, forms - sections), std::max<std::int64_t>(0, sections - forms)};
}

ProjectionComparison compare_with_expectation(unsigned k, std::size_t n, unsigned s, PrimeModulus modulus,
                                              std::uint64_t seed, unsigned attempts,
                                              VeroneseLimits limits) {
  if (attempts < 1) throw std::invalid_argument("compare_with_expectation: attempts must be positive");
  ProjectionComparison c;
  c.k = k;
  c.n = n;
  c.s = s;
  c.expected = maximal_rank_expectation(n, k, s);
  c.open_question = s >= 3;
  for (unsigned a = 0; a < attempts; ++a) {
    const auto vp = build_projection(k, n, modulus, seed + a, limits);
    c.measured = projected_cohomology(vp, s);
    c.seed_used = seed + a;
    c.attempts = a + 1;
    c.match = c.measured.h0_I == c.expected.first && c.measured.h1_I == c.expected.second;
    if (c.match) break;
  }
  return c;
}

ProjectionComparison probe_open_question(unsigned k, std::size_t n, unsigned s, PrimeModulus modulus,
                                         std::uint64_t seed, VeroneseLimits limits) {
  if (s < 3) throw std::invalid_argument("probe_open_question: s must be at least 3");
  return compare_with_expectation(k, n, s, modulus, seed, 1, limits);
}

}  // namespace avoidlab
