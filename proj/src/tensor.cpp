#include "thinlie/closure.hpp"
#include "thinlie/constructions.hpp"

namespace thinlie {

namespace {

struct Ambient {
  const GradedAlgebra& M;
  DividedPowerAlgebra eps;
  int q;
  std::size_t size() const { return static_cast<std::size_t>(M.basis_size()) * q + 1; }
  std::size_t slot(int g, int a) const { return static_cast<std::size_t>(g) * q + a; }
  std::size_t dslot() const { return size() - 1; }

  // out += c * [U_g, U_h] (x) eps^(a) eps^(b)
  void add_product(gf::Vector& out, Scalar c, int g, int a, int h, int b) const {
    const auto& f = M.field();
    auto pr = eps.product(a, b);
    if (!pr) return;
    const int dg = M.basis(g).degree, dh = M.basis(h).degree;
    if (dg + dh > M.top()) throw DegreeOverflow(dg + dh, M.top());
    const Element br = M.bracket_basis(g, h);
    const Scalar s = f.mul(c, pr->first);
    for (int i = 0; i < M.dim(br.degree); ++i)
      if (br.c[i]) {
        auto& o = out[slot(M.global(br.degree, i), pr->second)];
        o = f.fma(o, s, br.c[i]);
      }
  }

  // out += c * U_g (x) d(eps^(a))
  void add_derivative(gf::Vector& out, Scalar c, int g, int a) const {
    if (a == 0) return;
    auto& o = out[slot(g, a - 1)];
    o = M.field().add(o, c);
  }
};

}  // namespace

int tensor_required_degree(int q, int N) { return (N + 2) / (q - 1) + 3; }

AmbientElement ambient_bracket(const GradedAlgebra& M, int q, const AmbientElement& a, const AmbientElement& b) {
  const auto& f = M.field();
  Ambient amb{M, DividedPowerAlgebra(f, q), q};
  AmbientElement out{a.degree + b.degree, gf::Vector(amb.size(), 0)};
  const int nb = M.basis_size();
  const Scalar ad = a.c[amb.dslot()], bd = b.c[amb.dslot()];
  for (int g = 0; g < nb; ++g)
    for (int i = 0; i < q; ++i) {
      const Scalar ca = a.c[amb.slot(g, i)];
      if (ca) {
        for (int h = 0; h < nb; ++h)
          for (int j = 0; j < q; ++j)
            if (const Scalar cb = b.c[amb.slot(h, j)]) amb.add_product(out.c, f.mul(ca, cb), g, i, h, j);
        // [A (x) f, d] = -A (x) f'
        if (bd) amb.add_derivative(out.c, f.neg(f.mul(ca, bd)), g, i);
      }
      // [d, B (x) g] = B (x) g'
      if (ad)
        if (const Scalar cb = b.c[amb.slot(g, i)]) amb.add_derivative(out.c, f.mul(ad, cb), g, i);
    }
  return out;
}

TensorResult tensor_construct_full(const GradedAlgebra& M, int q, int N) {
  const auto& f = M.field();
  check_pq(f.characteristic(), q);
  const int need = tensor_required_degree(q, N);
  if (M.top() < need) throw DegreeOverflow(need, M.top());
  if (M.dim(1) != 2) throw ConstructionError("tensor construction needs dim M_1 = 2");
  Ambient amb{M, DividedPowerAlgebra(f, q), q};

  AmbientElement x{1, gf::Vector(amb.size(), 0)}, y{1, gf::Vector(amb.size(), 0)};
  x.c[amb.dslot()] = f.neg(1);
  y.c[amb.slot(0, q - 2)] = 1;
  y.c[amb.slot(1, q - 1)] = 1;

  ClosureSpec<AmbientElement> spec{f, q, N, N + 2, x, y, nullptr, nullptr};
  spec.act = [&](const AmbientElement& e, int degree, char t) {
    AmbientElement out{degree + 1, gf::Vector(amb.size(), 0)};
    const int nb = M.basis_size();
    if (t == 'x') {
      for (int g = 0; g < nb; ++g)
        for (int a = 1; a < q; ++a)
          if (const Scalar c = e.c[amb.slot(g, a)]) amb.add_derivative(out.c, c, g, a);
      return out;
    }
    for (int g = 0; g < nb; ++g)
      for (int a = 0; a < q; ++a)
        if (const Scalar c = e.c[amb.slot(g, a)]) {
          amb.add_product(out.c, c, g, a, 0, q - 2);
          amb.add_product(out.c, c, g, a, 1, q - 1);
        }
    if (const Scalar c = e.c[amb.dslot()]) {
      amb.add_derivative(out.c, c, 0, q - 2);
      amb.add_derivative(out.c, c, 1, q - 1);
    }
    return out;
  };
  spec.coords = [](const AmbientElement& e, int) { return e.c; };

  auto cl = close_thin(spec);
  return {GradedAlgebra(std::move(cl.data)), std::move(cl.elements)};
}

GradedAlgebra tensor_construct(const GradedAlgebra& M, int q, int N) {
  return std::move(tensor_construct_full(M, q, N).algebra);
}

}  // namespace thinlie
