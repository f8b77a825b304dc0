#include <map>

#include "thinlie/patterns.hpp"

namespace thinlie {

AlgebraData compile_data(const DiamondPattern& pattern, int N) {
  const gf::PrimeField f(pattern.p);
  const int q = pattern.q;
  if (N < q + 2) throw PatternError("N must be at least q + 2");
  const int top = N + 2;
  if (pattern.horizon < top)
    throw PatternError("pattern horizon " + std::to_string(pattern.horizon) + " does not cover degree " +
                       std::to_string(top));

  std::map<int, DiamondType> type;
  for (const auto& e : pattern.entries) type[e.degree] = e.type;
  auto genuine = [&](int k) {
    auto it = type.find(k);
    return it != type.end() && it->second.genuine();
  };
  auto is = [&](int k, DiamondKind kind) {
    auto it = type.find(k);
    return it != type.end() && it->second.kind == kind;
  };

  AlgebraData d(f);
  d.q = q;
  d.N = N;
  d.top = top;
  d.dims.assign(top + 1, 1);
  d.dims[1] = 2;
  for (int k = 2; k <= top; ++k) d.dims[k] = genuine(k) ? 2 : 1;
  d.ad_x.resize(top);
  d.ad_y.resize(top);

  std::vector<int> offset(top + 2, 0);
  for (int k = 1; k <= top; ++k) offset[k + 1] = offset[k] + d.dims[k];
  d.parent.assign(offset[top + 1], -1);
  d.letter.assign(offset[top + 1], 0);
  d.letter[0] = 'x';
  d.letter[1] = 'y';

  const Scalar minus1 = f.neg(1);
  for (int k = 1; k < top; ++k) {
    gf::Matrix ax(d.dims[k + 1], d.dims[k]), ay(d.dims[k + 1], d.dims[k]);
    const int next = offset[k + 1];
    if (k == 1) {
      // [y x] spans L_2 and [x y] = -[y x]
      ax(0, 1) = 1;
      ay(0, 0) = minus1;
      d.parent[next] = 1;
      d.letter[next] = 'x';
    } else if (d.dims[k] == 2) {
      // genuine diamond {a = [wx], b = [wy]}: [a x] = 0 = [b y], [a y] = c, [b x] = t c
      const DiamondType t = type.at(k);
      const Scalar coef = t.kind == DiamondKind::Infinite ? minus1 : f.sub(f.inv(t.mu), 1);
      ay(0, 0) = 1;
      ax(0, 1) = coef;
      d.parent[next] = offset[k];
      d.letter[next] = 'y';
    } else if (genuine(k + 1)) {
      ax(0, 0) = 1;
      ay(1, 0) = 1;
      d.parent[next] = offset[k];
      d.letter[next] = 'x';
      d.parent[next + 1] = offset[k];
      d.letter[next + 1] = 'y';
    } else if (is(k + 1, DiamondKind::Fake0) || is(k, DiamondKind::Fake1)) {
      ay(0, 0) = 1;
      d.parent[next] = offset[k];
      d.letter[next] = 'y';
    } else {
      ax(0, 0) = 1;
      d.parent[next] = offset[k];
      d.letter[next] = 'x';
    }
    d.ad_x[k] = std::move(ax);
    d.ad_y[k] = std::move(ay);
  }
  return d;
}

CompiledAlgebra compile(const DiamondPattern& pattern, int N, const ValidateOptions& opt) {
  GradedAlgebra L(compile_data(pattern, N));
  auto rep = validate(L, opt);
  return {std::move(L), std::move(rep)};
}

}  // namespace thinlie
