#include "avoidlab/exactlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace avoidlab {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " does not fit below 2^31");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

Residue PrimeModulus::pow(Residue base, std::uint64_t exp) const noexcept {
  return static_cast<Residue>(powmod64(base, exp, p_));
}

Residue PrimeModulus::inv(Residue a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero residue");
  return pow(a, p_ - 2);
}

PrimeMatrix::PrimeMatrix(std::size_t rows, std::size_t cols, PrimeModulus modulus)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0), modulus_(modulus) {}

PrimeMatrix::PrimeMatrix(std::size_t rows, std::size_t cols, std::vector<Residue> entries,
                         PrimeModulus modulus)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), modulus_(modulus) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match its shape");
  }
  for (Residue e : entries_) {
    if (e >= modulus_.value()) throw std::invalid_argument("matrix entry is not reduced");
  }
}

PrimeMatrix PrimeMatrix::from_integers(std::size_t rows, std::size_t cols,
                                       std::span<const std::int64_t> values, PrimeModulus modulus) {
  if (values.size() != rows * cols) {
    throw std::invalid_argument("matrix entry count does not match its shape");
  }
  std::vector<Residue> e(values.size());
  std::transform(values.begin(), values.end(), e.begin(),
                 [&](std::int64_t x) { return modulus.reduce(x); });
  return PrimeMatrix(rows, cols, std::move(e), modulus);
}

PrimeMatrix PrimeMatrix::identity(std::size_t size, PrimeModulus modulus) {
  PrimeMatrix m(size, size, modulus);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

PrimeMatrix PrimeMatrix::transposed() const {
  PrimeMatrix t(cols_, rows_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Residue> PrimeMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match column count");
  std::vector<Residue> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    auto rr = row(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + static_cast<std::uint64_t>(rr[c]) * v[c]) % modulus_.value();
    }
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

RankKernel rank_and_kernel(const PrimeMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return {0, cols};

  const std::uint64_t p = m.modulus().value();
  std::vector<Residue> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> Residue& { return a[r * cols + c]; };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                       a.begin() + rank * cols);
    }
    const std::uint64_t pv = at(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t x = at(r, col);
      if (x == 0) continue;
      // row_r <- pv * row_r - x * row_pivot; no division needed.
      const std::uint64_t nx = p - x;
      for (std::size_t c = col; c < cols; ++c) {
        at(r, c) = static_cast<Residue>((pv * at(r, c) + nx * at(rank, c)) % p);
      }
    }
    ++rank;
  }
  return {rank, cols - rank};
}

std::vector<std::vector<Residue>> kernel_basis(const PrimeMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const PrimeModulus& f = m.modulus();
  std::vector<Residue> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> Residue& { return a[r * cols + c]; };

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                       a.begin() + rank * cols);
    }
    const Residue inv = f.inv(at(rank, col));
    for (std::size_t c = col; c < cols; ++c) at(rank, c) = f.mul(at(rank, c), inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Residue x = at(r, col);
      if (x == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        at(r, c) = f.sub(at(r, c), f.mul(x, at(rank, c)));
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Residue>> basis;
  basis.reserve(cols - rank);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[pivot_cols[i]] = f.neg(at(i, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Residue>> left_kernel_basis(const PrimeMatrix& m) {
  return kernel_basis(m.transposed());
}

}  // namespace avoidlab
