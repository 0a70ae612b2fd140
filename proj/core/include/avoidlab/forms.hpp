#pragma once

// Homogeneous forms: monomial bases of degree-t forms on P^n, binary forms on
// P^1, and the substitution of a parametrization into a monomial.

#include <cstddef>
#include <span>
#include <vector>

#include "avoidlab/bigint.hpp"
#include "avoidlab/exactlin.hpp"

namespace avoidlab {

using Exponents = std::vector<unsigned>;

/// Degree-t monomials in the n+1 coordinates of P^n, in descending
/// lexicographic order on exponent vectors: x0^t comes first, xn^t last.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, unsigned t);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t num_vars() const noexcept { return n_ + 1; }
  unsigned degree() const noexcept { return t_; }
  std::size_t size() const noexcept { return monomials_.size(); }

  const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponents>& monomials() const noexcept { return monomials_; }

  /// Position of an exponent vector in this basis, computed combinatorially.
  std::size_t index_of(std::span<const unsigned> e) const;

 private:
  std::size_t n_;
  unsigned t_;
  std::vector<Exponents> monomials_;
};

/// A binary form on P^1; coefficient i multiplies u^i v^(degree-i).
class BinaryForm {
 public:
  BinaryForm(unsigned degree, PrimeModulus modulus);
  BinaryForm(std::vector<Residue> coefficients, PrimeModulus modulus);
  static BinaryForm from_integers(std::span<const std::int64_t> coefficients, PrimeModulus modulus);

  unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const PrimeModulus& modulus() const noexcept { return mod_; }
  std::span<const Residue> coefficients() const noexcept { return coeffs_; }
  Residue operator[](std::size_t i) const { return coeffs_[i]; }
  Residue& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const noexcept;
  /// Coefficient of u^degree, i.e. the leading coefficient at v = 1.
  Residue leading() const noexcept { return coeffs_.back(); }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  BinaryForm scaled(Residue c) const;
  BinaryForm pow(unsigned e) const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<Residue> coeffs_;
  PrimeModulus mod_;
};

/// prod_i phi_i^{e_i}. All phi_i must share one degree.
BinaryForm substitute_curve(std::span<const unsigned> exponents, std::span<const BinaryForm> phi);

/// Rows: monomials of MonomialBasis(n, t) in basis order. Columns: the t*d+1
/// coefficients of the substituted binary form. Degree-t hypersurfaces
/// containing the image curve are the left kernel, so
/// h^0(I_X(t)) = rows - rank and the Hilbert function value is the rank.
PrimeMatrix build_restriction_matrix(std::size_t n, unsigned t, std::span<const BinaryForm> phi);

struct DivisionResult {
  BinaryForm quotient;   // degree deg f - deg g
  BinaryForm remainder;  // degree deg f, supported on u^i v^(deg f - i) with i < deg g
};

/// Division of f by g, carried out at v = 1 and rehomogenized in degree deg f.
/// Requires deg f >= deg g >= 1 and a nonzero u^(deg g) coefficient of g.
DivisionResult divide(const BinaryForm& f, const BinaryForm& g);

/// The residue of f modulo g as its deg g coordinates in the complement basis
/// {u^i v^(deg f - i) : 0 <= i < deg g}.
std::vector<Residue> remainder_mod(const BinaryForm& f, const BinaryForm& g);

/// No repeated root on P^1, counting the point (1:0) where v vanishes.
bool is_squarefree(const BinaryForm& g);

/// True iff the forms share a root on P^1.
bool have_common_root(std::span<const BinaryForm> forms);

/// Dense homogeneous form in n+1 variables, coefficients in MonomialBasis order.
class HomogeneousForm {
 public:
  HomogeneousForm(std::size_t n, unsigned degree, PrimeModulus modulus);

  std::size_t ambient_dim() const noexcept { return n_; }
  unsigned degree() const noexcept { return degree_; }
  const PrimeModulus& modulus() const noexcept { return mod_; }
  std::span<const Residue> coefficients() const noexcept { return coeffs_; }
  Residue& operator[](std::size_t i) { return coeffs_[i]; }
  Residue operator[](std::size_t i) const { return coeffs_[i]; }

  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);

 private:
  std::size_t n_;
  unsigned degree_;
  std::vector<Residue> coeffs_;
  PrimeModulus mod_;
};

}  // namespace avoidlab
