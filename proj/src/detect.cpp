#include "thinlie/patterns.hpp"

namespace thinlie {

DiamondCoefficients diamond_coefficients(const GradedAlgebra& L, int m) {
  DiamondCoefficients out;
  if (L.dim(m) != 2 || L.dim(m - 1) != 1 || L.dim(m + 1) != 1) return out;
  const Element w = L.unit(m - 1, 0);
  const Element a = L.ad('x', w), b = L.ad('y', w);
  out.relations_hold = L.ad('x', a).is_zero() && L.ad('y', b).is_zero();
  out.lambda = L.ad('x', b).c[0];
  out.kappa = L.ad('y', a).c[0];
  return out;
}

DetectionReport detect(const GradedAlgebra& L, int N) {
  if (N < 0) N = L.N();
  N = std::min(N, L.top() - 1);
  const int scan = std::min(N + 1, L.top() - 1);
  const auto& f = L.field();
  DetectionReport rep;
  std::vector<DiamondEntry> raw;

  auto ad_zero = [&](char t, int k) { return L.ad_matrix(t, k).is_zero(); };

  for (int m = 2; m <= scan; ++m) {
    if (L.dim(m) == 2) {
      auto c = diamond_coefficients(L, m);
      const std::string where = "L_" + std::to_string(m);
      if (L.dim(m - 1) != 1 || L.dim(m + 1) != 1) {
        rep.issues.push_back(where + ": adjacent two-dimensional components");
        continue;
      }
      if (!c.relations_hold) {
        rep.issues.push_back(where + ": untypable ([wxx] or [wyy] nonzero)");
        continue;
      }
      const Scalar sum = f.add(c.lambda, c.kappa);
      if (sum == 0) {
        if (c.lambda == 0) {
          rep.issues.push_back(where + ": untypable (both legs vanish)");
          continue;
        }
        raw.push_back({m, DiamondType::infinite()});
      } else {
        const Scalar mu = f.div(c.kappa, sum);
        if (mu == 0 || mu == 1) {
          rep.issues.push_back(where + ": untypable (type " + std::to_string(mu) + ")");
          continue;
        }
        raw.push_back({m, DiamondType::finite(mu)});
      }
    } else if (ad_zero('x', m)) {
      // [L_m x] = 0: L_{m+1} satisfies the type-0 relations
      raw.push_back({m + 1, DiamondType::fake0()});
    }
  }

  auto admissible = [&](int k) {
    return k >= 3 && L.dim(k) == 1 && L.dim(k - 1) == 1 && ad_zero('y', k - 1);
  };
  rep.pattern = normalize(L.p(), L.q(), std::move(raw), scan, admissible).truncated(N);
  return rep;
}

}  // namespace thinlie
