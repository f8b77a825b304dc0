#include "thinlie/gf.hpp"

#include <stdexcept>
#include <string>

namespace thinlie::gf {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p <= 3)
    throw std::invalid_argument("characteristic must be a prime > 3, got " + std::to_string(p));
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar r = 1 % p_;
  Scalar b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Scalar lucas_binom(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  // small factorial tables for one base-p digit
  std::vector<std::uint64_t> fact(p, 1);
  for (std::uint32_t i = 1; i < p; ++i) fact[i] = fact[i - 1] * i % p;
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::uint64_t r = 1;
  while (n || k) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    r = r * fact[nd] % p * inv(fact[kd] * fact[nd - kd] % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<Scalar>(r);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const noexcept {
  for (auto s : data_)
    if (s) return false;
  return true;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Scalar aik = a(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.fma(c(i, j), aik, b(k, j));
    }
  return c;
}

Vector apply(const PrimeField& f, const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  Vector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = f.fma(out[i], a(i, k), v[k]);
  return out;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add: dimension mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Matrix scale(const PrimeField& f, const Matrix& a, Scalar s) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(a(i, j), s);
  return c;
}

std::vector<std::size_t> row_reduce(const PrimeField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    Scalar s = f.inv(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c)
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const PrimeField& f, Matrix m) { return row_reduce(f, m).size(); }

SolveResult solve_or_kernel(const PrimeField& f, const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_or_kernel: dimension mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c) % f.characteristic();
    aug(r, n) = b[r] % f.characteristic();
  }
  auto pivots = row_reduce(f, aug);

  SolveResult res;
  res.consistent = pivots.empty() || pivots.back() != n;
  if (!res.consistent) pivots.pop_back();

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  if (res.consistent) {
    res.particular.assign(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) res.particular[pivots[i]] = aug(i, n);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(aug(i, free));
    res.kernel.push_back(std::move(v));
  }
  return res;
}

}  // namespace thinlie::gf
