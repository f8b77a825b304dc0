#include "kernels_impl.hpp"

namespace thinlie::kernels {

namespace {

template <class Row>
Tally run_parallel(const GradedAlgebra& L, Row row) {
  Tally total;
  const int nb = L.basis_size();
#pragma omp parallel
  {
    Tally local;
#pragma omp for schedule(dynamic, 4) nowait
    for (int i = 0; i < nb; ++i) row(i, local);
#pragma omp critical(thinlie_tally_merge)
    total.merge(local);
  }
  return total;
}

}  // namespace

Tally jacobi_parallel(const GradedAlgebra& L, int maxd) {
  return run_parallel(L, [&](int i, Tally& t) { detail::jacobi_row(L, maxd, i, t); });
}

Tally antisymmetry_parallel(const GradedAlgebra& L, int maxd) {
  return run_parallel(L, [&](int i, Tally& t) { detail::antisymmetry_row(L, maxd, i, t); });
}

Tally support_parallel(const GradedAlgebra& L, int maxd) {
  return run_parallel(L, [&](int i, Tally& t) { detail::support_row(L, maxd, i, t); });
}

Tally leibniz_parallel(const GradedAlgebra& L, const OperatorFamily& D, int maxd) {
  return run_parallel(L, [&](int i, Tally& t) { detail::leibniz_row(L, D, maxd, i, t); });
}

}  // namespace thinlie::kernels
