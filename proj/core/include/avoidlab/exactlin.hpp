#pragma once

// Dense linear algebra over a prime field F_p, p < 2^31.
//
// Every cohomology dimension in the toolkit is a rank or a nullity of one of
// these matrices. Ranks over F_p never exceed the characteristic-zero rank,
// so an h^0 measured here is an upper bound for the value over C.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace avoidlab {

using Residue = std::uint32_t;

class PrimeModulus {
 public:
  static constexpr std::uint32_t kDefault = 1000003;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeModulus(std::uint64_t p = kDefault);

  std::uint32_t value() const noexcept { return p_; }

  Residue reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue base, std::uint64_t exp) const noexcept;
  /// Inverse of a nonzero residue (Fermat).
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint32_t p_;
};

/// Deterministic primality test for 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

class PrimeMatrix {
 public:
  PrimeMatrix(std::size_t rows, std::size_t cols, PrimeModulus modulus);
  /// Entries are taken row-major and must already be reduced.
  PrimeMatrix(std::size_t rows, std::size_t cols, std::vector<Residue> entries, PrimeModulus modulus);

  /// Row-major integers, reduced modulo p.
  static PrimeMatrix from_integers(std::size_t rows, std::size_t cols,
                                   std::span<const std::int64_t> values, PrimeModulus modulus);
  static PrimeMatrix identity(std::size_t size, PrimeModulus modulus);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }

  Residue operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Residue> entries() const noexcept { return entries_; }

  PrimeMatrix transposed() const;
  /// M * v for a column vector of length cols().
  std::vector<Residue> apply(std::span<const Residue> v) const;

  friend bool operator==(const PrimeMatrix&, const PrimeMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
  PrimeModulus modulus_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;  // cols - rank
};

/// Fraction-free elimination; pivot is the first nonzero entry of the column.
RankKernel rank_and_kernel(const PrimeMatrix& m);

inline std::size_t rank(const PrimeMatrix& m) { return rank_and_kernel(m).rank; }

/// Basis of {v : M v = 0}, one vector per free column of the reduced echelon
/// form, with a 1 in that column.
std::vector<std::vector<Residue>> kernel_basis(const PrimeMatrix& m);

/// Basis of {y : y^T M = 0}; the natural kernel when rows index the source
/// basis, as in restriction matrices.
std::vector<std::vector<Residue>> left_kernel_basis(const PrimeMatrix& m);

}  // namespace avoidlab
