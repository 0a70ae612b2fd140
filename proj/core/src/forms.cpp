#include "avoidlab/forms.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace avoidlab {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper argument");
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    r *= (a - i);
    r /= (i + 1);
  }
  return r;
}

BigInt floor(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt f = num / den;
  if (num % den != 0 && num < 0) f -= 1;
  return f;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("value " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::string to_string(const Rational& q) {
  BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

// ---------------------------------------------------------------------------

namespace {

std::size_t count_monomials(std::size_t nvars, unsigned degree) {
  if (nvars == 0) return degree == 0 ? 1 : 0;
  return static_cast<std::size_t>(to_int64(binomial(static_cast<std::int64_t>(nvars - 1 + degree),
                                                    static_cast<std::int64_t>(nvars - 1))));
}

void enumerate(std::size_t var, std::size_t nvars, unsigned remaining, Exponents& cur,
               std::vector<Exponents>& out) {
  if (var + 1 == nvars) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    enumerate(var + 1, nvars, remaining - e, cur, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t n, unsigned t) : n_(n), t_(t) {
  monomials_.reserve(count_monomials(n + 1, t));
  Exponents cur(n + 1, 0);
  enumerate(0, n + 1, t, cur, monomials_);
}

std::size_t MonomialBasis::index_of(std::span<const unsigned> e) const {
  if (e.size() != n_ + 1) throw std::invalid_argument("exponent vector has wrong length");
  unsigned remaining = t_;
  std::size_t idx = 0;
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (e[i] > remaining) throw std::invalid_argument("exponent vector has wrong degree");
    // Monomials agreeing so far but with a larger exponent at position i.
    for (unsigned x = e[i] + 1; x <= remaining; ++x) {
      idx += count_monomials(e.size() - i - 1, remaining - x);
    }
    remaining -= e[i];
  }
  if (e.back() != remaining) throw std::invalid_argument("exponent vector has wrong degree");
  return idx;
}

// ---------------------------------------------------------------------------

BinaryForm::BinaryForm(unsigned degree, PrimeModulus modulus)
    : coeffs_(degree + 1, 0), mod_(modulus) {}

BinaryForm::BinaryForm(std::vector<Residue> coefficients, PrimeModulus modulus)
    : coeffs_(std::move(coefficients)), mod_(modulus) {
  if (coeffs_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  for (Residue c : coeffs_) {
    if (c >= mod_.value()) throw std::invalid_argument("binary form coefficient is not reduced");
  }
}

BinaryForm BinaryForm::from_integers(std::span<const std::int64_t> coefficients,
                                     PrimeModulus modulus) {
  std::vector<Residue> c(coefficients.size());
  std::transform(coefficients.begin(), coefficients.end(), c.begin(),
                 [&](std::int64_t x) { return modulus.reduce(x); });
  return BinaryForm(std::move(c), modulus);
}

bool BinaryForm::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (!(a.mod_ == b.mod_)) throw std::invalid_argument("binary forms over different fields");
  const std::uint64_t p = a.mod_.value();
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const std::uint64_t ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] = (acc[i + j] + ai * b.coeffs_[j]) % p;
    }
  }
  std::vector<Residue> out(acc.begin(), acc.end());
  return BinaryForm(std::move(out), a.mod_);
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("adding binary forms of different degree");
  BinaryForm r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.mod_.add(a.coeffs_[i], b.coeffs_[i]);
  return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("subtracting binary forms of different degree");
  BinaryForm r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.mod_.sub(a.coeffs_[i], b.coeffs_[i]);
  return r;
}

BinaryForm BinaryForm::scaled(Residue c) const {
  BinaryForm r = *this;
  for (auto& x : r.coeffs_) x = mod_.mul(x, c);
  return r;
}

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm result(std::vector<Residue>{1}, mod_);
  BinaryForm base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

BinaryForm substitute_curve(std::span<const unsigned> exponents, std::span<const BinaryForm> phi) {
  if (phi.empty()) throw std::invalid_argument("empty parametrization");
  if (exponents.size() != phi.size()) {
    throw std::invalid_argument("exponent vector length differs from parametrization length");
  }
  const unsigned d = phi.front().degree();
  for (const auto& f : phi) {
    if (f.degree() != d) throw std::invalid_argument("parametrizing forms have different degrees");
  }
  BinaryForm result(std::vector<Residue>{1}, phi.front().modulus());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (exponents[i] > 0) result = result * phi[i].pow(exponents[i]);
  }
  return result;
}

PrimeMatrix build_restriction_matrix(std::size_t n, unsigned t, std::span<const BinaryForm> phi) {
  if (t < 1) throw std::invalid_argument("restriction degree must be at least 1");
  if (phi.size() != n + 1) throw std::invalid_argument("parametrization must have n+1 forms");
  const unsigned d = phi.front().degree();
  for (const auto& f : phi) {
    if (f.degree() != d) throw std::invalid_argument("parametrizing forms have different degrees");
  }
  const PrimeModulus mod = phi.front().modulus();

  // powers[i][e] = phi_i^e
  std::vector<std::vector<BinaryForm>> powers(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    powers[i].push_back(BinaryForm(std::vector<Residue>{1}, mod));
    for (unsigned e = 1; e <= t; ++e) powers[i].push_back(powers[i].back() * phi[i]);
  }

  MonomialBasis basis(n, t);
  const std::size_t cols = static_cast<std::size_t>(t) * d + 1;
  PrimeMatrix m(basis.size(), cols, mod);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto& e = basis[r];
    BinaryForm img(std::vector<Residue>{1}, mod);
    for (std::size_t i = 0; i <= n; ++i) {
      if (e[i] > 0) img = img * powers[i][e[i]];
    }
    auto row = m.row(r);
    std::copy(img.coefficients().begin(), img.coefficients().end(), row.begin());
  }
  return m;
}

// ---------------------------------------------------------------------------

namespace {

// Univariate polynomials at v = 1, coefficient i of u^i, trimmed.
using Poly = std::vector<Residue>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly dehomogenize(const BinaryForm& f) {
  Poly p(f.coefficients().begin(), f.coefficients().end());
  trim(p);
  return p;
}

// f mod g, g nonzero and trimmed.
Poly poly_mod(Poly f, const Poly& g, const PrimeModulus& mod) {
  const Residue inv_lead = mod.inv(g.back());
  trim(f);
  while (f.size() >= g.size()) {
    const Residue q = mod.mul(f.back(), inv_lead);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = mod.sub(f[shift + i], mod.mul(q, g[i]));
    }
    trim(f);
  }
  return f;
}

Poly poly_gcd(Poly a, Poly b, const PrimeModulus& mod) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, mod);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

DivisionResult divide(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero form");
  if (g.degree() < 1) throw std::invalid_argument("divisor must have degree at least 1");
  if (f.degree() < g.degree()) throw std::invalid_argument("dividend degree below divisor degree");
  if (g.leading() == 0) {
    throw std::invalid_argument("divisor has zero u^deg coefficient; resample the defining data");
  }
  const PrimeModulus& mod = f.modulus();
  const unsigned df = f.degree();
  const unsigned dg = g.degree();

  std::vector<Residue> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<Residue> quo(df - dg + 1, 0);
  const Residue inv_lead = mod.inv(g.leading());
  for (unsigned k = df + 1; k-- > dg;) {
    const Residue c = rem[k];
    if (c == 0) continue;
    const Residue q = mod.mul(c, inv_lead);
    quo[k - dg] = q;
    for (unsigned i = 0; i <= dg; ++i) {
      rem[k - dg + i] = mod.sub(rem[k - dg + i], mod.mul(q, g[i]));
    }
  }
  return {BinaryForm(std::move(quo), mod), BinaryForm(std::move(rem), mod)};
}

std::vector<Residue> remainder_mod(const BinaryForm& f, const BinaryForm& g) {
  auto r = divide(f, g).remainder;
  return {r.coefficients().begin(), r.coefficients().begin() + g.degree()};
}

bool is_squarefree(const BinaryForm& g) {
  if (g.is_zero()) return false;
  Poly p = dehomogenize(g);
  const std::size_t at_infinity = g.degree() + 1 - p.size();
  if (at_infinity > 1) return false;
  if (p.size() <= 2) return true;
  const PrimeModulus& mod = g.modulus();
  Poly dp(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    dp[i - 1] = mod.mul(p[i], mod.reduce(static_cast<std::int64_t>(i)));
  }
  trim(dp);
  if (dp.empty()) return false;
  return poly_gcd(p, dp, mod).size() == 1;
}

bool have_common_root(std::span<const BinaryForm> forms) {
  if (forms.empty()) return false;
  const PrimeModulus& mod = forms.front().modulus();
  bool all_vanish_at_infinity = true;
  for (const auto& f : forms) {
    if (f.leading() != 0) all_vanish_at_infinity = false;
  }
  if (all_vanish_at_infinity) return true;
  Poly g;
  for (const auto& f : forms) {
    g = poly_gcd(g, dehomogenize(f), mod);
    if (g.size() == 1) return false;
  }
  // Degree >= 1 (common finite root) or empty (all forms zero).
  return true;
}

// ---------------------------------------------------------------------------

HomogeneousForm::HomogeneousForm(std::size_t n, unsigned degree, PrimeModulus modulus)
    : n_(n), degree_(degree), coeffs_(count_monomials(n + 1, degree), 0), mod_(modulus) {}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("multiplying forms in different ambient spaces");
  MonomialBasis ba(a.n_, a.degree_);
  MonomialBasis bb(b.n_, b.degree_);
  MonomialBasis bc(a.n_, a.degree_ + b.degree_);
  HomogeneousForm c(a.n_, a.degree_ + b.degree_, a.mod_);
  const std::uint64_t p = a.mod_.value();
  std::vector<std::uint64_t> acc(c.coeffs_.size(), 0);
  Exponents e(a.n_ + 1);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      for (std::size_t v = 0; v <= a.n_; ++v) e[v] = ba[i][v] + bb[j][v];
      auto& slot = acc[bc.index_of(e)];
      slot = (slot + static_cast<std::uint64_t>(a.coeffs_[i]) * b.coeffs_[j]) % p;
    }
  }
  std::copy(acc.begin(), acc.end(), c.coeffs_.begin());
  return c;
}

}  // namespace avoidlab
