#pragma once

// Arithmetic over a prime field F_p and the small dense linear algebra used by
// every other module.

#include <cstdint>
#include <span>
#include <vector>

namespace thinlie::gf {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is a prime greater than 3.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// a + b*c
  Scalar fma(Scalar a, Scalar b, Scalar c) const noexcept {
    return static_cast<Scalar>((a + static_cast<std::uint64_t>(b) * c) % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error for a == 0.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t symmetric(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// C(n, k) mod p by Lucas' theorem (digit-wise in base p). Returns 0 for k > n.
Scalar lucas_binom(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);
  bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Vector apply(const PrimeField& f, const Matrix& a, std::span<const Scalar> v);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& f, const Matrix& a, Scalar s);

/// Row-reduces in place and returns the pivot columns.
std::vector<std::size_t> row_reduce(const PrimeField& f, Matrix& m);
std::size_t rank(const PrimeField& f, Matrix m);

struct SolveResult {
  bool consistent = false;
  Vector particular;           // valid only when consistent
  std::vector<Vector> kernel;  // basis of {v : A v = 0}
};

/// Solves A x = b exactly. Throws std::invalid_argument on dimension mismatch.
SolveResult solve_or_kernel(const PrimeField& f, const Matrix& a, std::span<const Scalar> b);

}  // namespace thinlie::gf
