#include <algorithm>

#include "thinlie/closure.hpp"
#include "thinlie/constructions.hpp"

namespace thinlie {

namespace {

OperatorFamily combine(const gf::PrimeField& f, const OperatorFamily& a, Scalar sa, const OperatorFamily& b,
                       Scalar sb) {
  OperatorFamily out;
  out.shift = a.shift;
  const int last = std::min(a.last(), b.last());
  out.maps.resize(std::max(last, 0) + 1);
  for (int k = 1; k <= last; ++k) out.maps[k] = gf::add(f, gf::scale(f, a.maps[k], sa), gf::scale(f, b.maps[k], sb));
  return out;
}

// A derivation is determined by its values on L_1.
gf::Vector leading(const OperatorFamily& d) {
  if (!d.defined_at(1)) throw DegreeOverflow(1 + d.shift, d.shift);
  const auto& m = d.maps[1];
  gf::Vector v(4, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * 2 + c] = m(r, c);
  return v;
}

ClosureSpec<OperatorFamily> make_spec(const GradedAlgebra& L, int q, int N_out, int top, OperatorFamily x,
                                      OperatorFamily y) {
  const auto& f = L.field();
  ClosureSpec<OperatorFamily> spec{f, q, N_out, top, std::move(x), std::move(y), nullptr, nullptr};
  const OperatorFamily gx = spec.x, gy = spec.y;
  spec.act = [&f, gx, gy](const OperatorFamily& e, int, char t) { return commutator(f, e, t == 'x' ? gx : gy); };
  spec.coords = [](const OperatorFamily& e, int) { return leading(e); };
  return spec;
}

}  // namespace

OperatorFamily commutator(const gf::PrimeField& f, const OperatorFamily& d1, const OperatorFamily& d2) {
  OperatorFamily out;
  out.shift = d1.shift + d2.shift;
  const int last = std::min({d1.last(), d2.last(), d1.last() - d2.shift, d2.last() - d1.shift});
  out.maps.resize(std::max(last, 0) + 1);
  for (int k = 1; k <= last; ++k) {
    auto a = gf::multiply(f, d2.maps[k + d1.shift], d1.maps[k]);
    auto b = gf::multiply(f, d1.maps[k + d2.shift], d2.maps[k]);
    out.maps[k] = gf::add(f, a, gf::scale(f, b, f.neg(1)));
  }
  return out;
}

OperatorFamily right_action(const GradedAlgebra& L, const Element& u) {
  OperatorFamily op;
  op.shift = u.degree;
  const int last = L.top() - u.degree;
  op.maps.resize(std::max(last, 0) + 1);
  for (int k = 1; k <= last; ++k) {
    gf::Matrix m(L.dim(k + u.degree), L.dim(k));
    for (int i = 0; i < L.dim(k); ++i) {
      const Element v = L.bracket(L.unit(k, i), u);
      for (int r = 0; r < L.dim(k + u.degree); ++r) m(r, i) = v.c[r];
    }
    op.maps[k] = std::move(m);
  }
  return op;
}

int deflation_source_degree(std::uint32_t p, int N_out) { return static_cast<int>(p) * (N_out + 2) + 1; }

DeflationResult deflate_full(const GradedAlgebra& L, int N_out) {
  const auto& f = L.field();
  const auto p = L.p();
  const int need = deflation_source_degree(p, N_out);
  if (L.top() < need) throw DegreeOverflow(need, L.top());
  const int P = static_cast<int>(p);

  std::vector<OperatorFamily> gens;
  for (int i = 0; i < L.dim(P); ++i) gens.push_back(right_action(L, L.unit(P, i)));
  gens.push_back(ad_power_operator(L, L.generator(1, 0), P));
  for (Scalar l = 0; l < p; ++l) gens.push_back(ad_power_operator(L, L.generator(l, 1), P));

  // a basis of the degree-one span
  std::vector<OperatorFamily> basis;
  std::vector<gf::Vector> coords;
  for (auto& g : gens) {
    auto v = leading(g);
    if (detail::is_zero_vec(v) || detail::solve_in(f, coords, v)) continue;
    coords.push_back(v);
    basis.push_back(g);
  }
  if (basis.size() != 2)
    throw ConstructionError("deflation: degree one has dimension " + std::to_string(basis.size()));

  // y spans the centralizer of the degree-two component
  const OperatorFamily u2 = commutator(f, basis[0], basis[1]);
  if (detail::is_zero_vec(leading(u2))) throw ConstructionError("deflation: degree two vanishes");
  gf::Matrix a(4, 2);
  a.set_column(0, leading(commutator(f, u2, basis[0])));
  a.set_column(1, leading(commutator(f, u2, basis[1])));
  auto ker = gf::solve_or_kernel(f, a, gf::Vector(4, 0)).kernel;
  if (ker.size() != 1) throw ConstructionError("deflation: no sandwich generator in degree one");
  const OperatorFamily y = combine(f, basis[0], ker[0][0], basis[1], ker[0][1]);
  const OperatorFamily& x0 = ker[0][1] != 0 ? basis[0] : basis[1];

  // locate the second diamond, whose position does not depend on the choice of x
  const int top = N_out + 2;
  Closure<OperatorFamily> first = close_thin(make_spec(L, 0, N_out, top, x0, y));
  int q = 0;
  for (int k = 2; k <= top; ++k)
    if (first.data.dims[k] == 2) {
      q = k;
      break;
    }
  if (q == 0 || q + 1 > top) throw ConstructionError("deflation: no second diamond within range");

  for (Scalar lambda = 0; lambda < p; ++lambda) {
    OperatorFamily x = combine(f, x0, 1, y, lambda);
    auto small = close_thin(make_spec(L, 0, q - 1, q + 1, x, y));
    GradedAlgebra S(std::move(small.data));
    auto c = diamond_coefficients(S, q);
    const Scalar sum = f.add(c.lambda, c.kappa);
    if (!c.relations_hold || sum == 0 || f.div(c.kappa, sum) != f.neg(1)) continue;
    auto full = close_thin(make_spec(L, q, N_out, top, x, y));
    return {GradedAlgebra(std::move(full.data)), std::move(x), y, lambda};
  }
  throw ConstructionError("deflation: no standard generators give a second diamond of type -1");
}

GradedAlgebra deflate(const GradedAlgebra& L, int N_out) { return std::move(deflate_full(L, N_out).algebra); }

GradedAlgebra nottingham_Nqr(std::uint32_t p, int q, int r, int N) {
  int steps = 0;
  for (int v = r; v > 1; v /= static_cast<int>(p)) {
    if (v % static_cast<int>(p)) throw std::invalid_argument("r must be a power of p");
    ++steps;
  }
  std::vector<int> outs{N};
  for (int i = 0; i < steps; ++i) outs.push_back(deflation_source_degree(p, outs.back()) - 2);
  FamilySpec spec;
  spec.family = "a";
  spec.p = p;
  spec.q = q * r;
  const int n0 = outs.back();
  GradedAlgebra L(compile_data(family_pattern(spec, n0 + 2), n0));
  for (int i = steps - 1; i >= 0; --i) L = deflate(L, outs[i]);
  return L;
}

}  // namespace thinlie
