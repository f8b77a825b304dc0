#include <algorithm>

#include "kernels_impl.hpp"

namespace thinlie::kernels {

void Tally::merge(const Tally& o) {
  checked += o.checked;
  failures += o.failures;
  witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  if (witnesses.size() > kMaxWitnesses) witnesses.resize(kMaxWitnesses);
}

Tally jacobi_serial(const GradedAlgebra& L, int maxd) {
  return detail::run_serial(L, [&](int i, Tally& t) { detail::jacobi_row(L, maxd, i, t); });
}

Tally antisymmetry_serial(const GradedAlgebra& L, int maxd) {
  return detail::run_serial(L, [&](int i, Tally& t) { detail::antisymmetry_row(L, maxd, i, t); });
}

Tally support_serial(const GradedAlgebra& L, int maxd) {
  return detail::run_serial(L, [&](int i, Tally& t) { detail::support_row(L, maxd, i, t); });
}

Tally leibniz_serial(const GradedAlgebra& L, const OperatorFamily& D, int maxd) {
  return detail::run_serial(L, [&](int i, Tally& t) { detail::leibniz_row(L, D, maxd, i, t); });
}

}  // namespace thinlie::kernels
