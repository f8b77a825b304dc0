#pragma once

// Per-row bodies shared by the serial and OpenMP kernels. Each function
// handles every pair/triple whose smallest global index is i.

#include <algorithm>

#include "thinlie/kernels.hpp"

namespace thinlie::kernels::detail {

inline void note(Tally& t, int degree, int a, int b, int c) {
  ++t.failures;
  Witness w{degree, {a, b, c}};
  if (t.witnesses.size() < kMaxWitnesses) {
    t.witnesses.push_back(w);
    std::sort(t.witnesses.begin(), t.witnesses.end());
  } else if (w < t.witnesses.back()) {
    t.witnesses.back() = w;
    std::sort(t.witnesses.begin(), t.witnesses.end());
  }
}

/// sum_m v[m] * T[off + m][j], returned unreduced-safe (values < p).
inline std::array<std::uint64_t, 2> lift(const GradedAlgebra& L, const std::array<Scalar, 2>& v,
                                         int deg, int j) {
  std::array<std::uint64_t, 2> out{0, 0};
  const int off = L.offset(deg);
  for (int m = 0; m < L.dim(deg); ++m) {
    if (!v[m]) continue;
    const auto& e = L.entry(off + m, j);
    out[0] += static_cast<std::uint64_t>(v[m]) * e[0];
    out[1] += static_cast<std::uint64_t>(v[m]) * e[1];
  }
  return out;
}

inline void jacobi_row(const GradedAlgebra& L, int maxd, int i, Tally& t) {
  const int nb = L.basis_size();
  const std::uint64_t p = L.p();
  const int di = L.basis(i).degree;
  for (int j = i; j < nb; ++j) {
    const int dj = L.basis(j).degree;
    if (di + 2 * dj > maxd) break;
    for (int k = j; k < nb; ++k) {
      const int dk = L.basis(k).degree;
      const int d = di + dj + dk;
      if (d > maxd) break;
      ++t.checked;
      auto s1 = lift(L, L.entry(i, j), di + dj, k);
      auto s2 = lift(L, L.entry(j, k), dj + dk, i);
      auto s3 = lift(L, L.entry(k, i), dk + di, j);
      if ((s1[0] + s2[0] + s3[0]) % p || (s1[1] + s2[1] + s3[1]) % p) note(t, d, i, j, k);
    }
  }
}

inline void antisymmetry_row(const GradedAlgebra& L, int maxd, int i, Tally& t) {
  const int nb = L.basis_size();
  const std::uint32_t p = L.p();
  const int di = L.basis(i).degree;
  for (int j = i; j < nb; ++j) {
    const int d = di + L.basis(j).degree;
    if (d > maxd) break;
    ++t.checked;
    const auto& a = L.entry(i, j);
    const auto& b = L.entry(j, i);
    if ((a[0] + b[0]) % p || (a[1] + b[1]) % p) note(t, d, i, j, -1);
  }
}

inline void support_row(const GradedAlgebra& L, int maxd, int i, Tally& t) {
  const int nb = L.basis_size();
  const auto& bi = L.basis(i);
  for (int j = i; j < nb; ++j) {
    const auto& bj = L.basis(j);
    const int d = bi.degree + bj.degree;
    if (d > maxd) break;
    ++t.checked;
    const Bidegree want = bi.bidegree + bj.bidegree;
    const auto& e = L.entry(i, j);
    for (int m = 0; m < L.dim(d); ++m)
      if (e[m] && L.basis(L.global(d, m)).bidegree != want) {
        note(t, d, i, j, -1);
        break;
      }
  }
}

inline void leibniz_row(const GradedAlgebra& L, const OperatorFamily& D, int maxd, int i, Tally& t) {
  const int nb = L.basis_size();
  const int di = L.basis(i).degree;
  if (!D.defined_at(di)) return;
  const Element a = L.basis_element(i);
  const Element da = apply(L, D, a);
  for (int j = i; j < nb; ++j) {
    const int dj = L.basis(j).degree;
    const int d = di + dj + D.shift;
    if (d > maxd) break;
    if (!D.defined_at(di + dj)) break;
    ++t.checked;
    const Element b = L.basis_element(j);
    const Element lhs = apply(L, D, Element{di + dj, L.entry(i, j)});
    const Element rhs = L.add(L.bracket(da, b), L.bracket(a, apply(L, D, b)));
    if (lhs != rhs) note(t, d, i, j, -1);
  }
}

template <class Row>
Tally run_serial(const GradedAlgebra& L, Row row) {
  Tally total;
  for (int i = 0; i < L.basis_size(); ++i) row(i, total);
  return total;
}

}  // namespace thinlie::kernels::detail
