#include "thinlie/derivations.hpp"

#include <string>

#include "thinlie/kernels.hpp"

namespace thinlie {

namespace {

std::string xs(int n) { return std::string(std::max(n, 0), 'x'); }

// v_1 = [y x^{q-2}]
Element v1_of(const GradedAlgebra& L) { return L.word_element("y" + xs(L.q() - 2)); }

}  // namespace

bool in_tq2(const DiamondPattern& P) {
  const int q = P.q;
  if (P.entries.empty() || P.entries[0].degree != q) return false;
  bool prev_fake = false;
  for (std::size_t i = 1; i < P.entries.size(); ++i) {
    const auto& e = P.entries[i];
    const bool fake1 = e.type.kind == DiamondKind::Fake1;
    if (!fake1 && e.type.kind != DiamondKind::Infinite) return false;
    if (fake1 && (prev_fake || e.degree == 2 * q - 1)) return false;
    prev_fake = fake1;
  }
  return true;
}

DerivationRep build_D(const GradedAlgebra& L) {
  const int q = L.q();
  if (q <= 0) throw ConstructionError("build_D: algebra has no second diamond");
  if (!in_tq2(detect(L).pattern)) throw ConstructionError("build_D: algebra is not in T_{q,2}");
  const Element v1 = v1_of(L);
  return {derivation_from_generators(L, L.zero(q), L.ad('y', v1), q - 1), q};
}

ValidationReport verify_leibniz(const GradedAlgebra& L, const DerivationRep& rep, bool parallel) {
  const auto& f = L.field();
  const auto& D = rep.D;
  const int q = rep.q, s = D.shift;
  const Scalar m2 = f.neg(2);
  ValidationReport out;
  auto in_range = [&](const Element& u) { return D.defined_at(u.degree); };

  out.checks.push_back(kernels::to_check(
      L, "leibniz", parallel ? kernels::leibniz_parallel(L, D, L.top()) : kernels::leibniz_serial(L, D, L.top())));

  {
    CheckResult r{"commutes_x"};
    for (int k = 1; k + 1 <= D.last() && k + s < L.top(); ++k) {
      auto a = gf::multiply(f, D.maps[k + 1], L.ad_matrix('x', k));
      auto b = gf::multiply(f, L.ad_matrix('x', k + s), D.maps[k]);
      r.expect(a == b, k + s + 1, "D ad_x != ad_x D on L_" + std::to_string(k));
    }
    out.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"bidegree"};
    const Bidegree shift{q - 2, 1};
    for (int g = 0; g < L.basis_size(); ++g) {
      const auto& b = L.basis(g);
      if (!D.defined_at(b.degree)) break;
      const Element img = apply(L, D, L.basis_element(g));
      bool ok = true;
      for (int i = 0; i < L.dim(img.degree); ++i)
        if (img.c[i] && L.basis(L.global(img.degree, i)).bidegree != b.bidegree + shift) ok = false;
      r.expect(ok, img.degree, "D(" + b.word + ") leaves bidegree");
    }
    out.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"D_v1"};
    const Element v1 = v1_of(L);
    const Element v2 = L.apply_word(v1, "xy" + xs(q - 3));
    r.expect(apply(L, D, v1) == L.scale(v2, m2), 2 * q - 2, "D v_1 != -2 v_2");
    for (int i = 0; i <= q - 1; ++i) {
      const Element u = L.word_element("y" + xs(i));
      if (!in_range(u) || u.degree + q > L.top()) break;
      r.expect(apply(L, D, u) == L.apply_word(L.ad('y', v1), xs(i)), u.degree + s,
               "D[y x^" + std::to_string(i) + "] != [v_1 y x^" + std::to_string(i) + "]");
    }
    out.checks.push_back(std::move(r));
  }
  {
    CheckResult r2{"genuine_step"}, r3{"fake1_step"};
    const auto P = detect(L).pattern;
    for (std::size_t i = 0; i < P.entries.size(); ++i) {
      const auto& e = P.entries[i];
      const int m = e.degree;
      const Element v = L.unit(m - 1, 0);
      const Element vx = L.ad('x', v);
      if (!in_range(vx)) break;
      if (e.type.kind == DiamondKind::Fake1) {
        r3.expect(apply(L, D, v).is_zero() && apply(L, D, vx).is_zero(), m + s, "Dv or D[vx] != 0 at L_" +
                                                                                   std::to_string(m));
      } else if (i + 1 < P.entries.size() && P.entries[i + 1].degree == m + q - 1) {
        const Element w = L.apply_word(v, "xy" + xs(q - 3));
        r2.expect(apply(L, D, v) == L.scale(w, m2) && apply(L, D, vx) == L.scale(L.ad('x', w), m2), m + s,
                  "Dv != -2w or D[vx] != -2[wx] at L_" + std::to_string(m));
      }
    }
    out.checks.push_back(std::move(r2));
    out.checks.push_back(std::move(r3));
  }
  return out;
}

ExtendedElement extended_bracket(const GradedAlgebra& L, const DerivationRep& D, const ExtendedElement& a,
                                 const ExtendedElement& b) {
  // a pure multiple of D has D's degree
  auto degree = [&](const ExtendedElement& e) { return e.u.is_zero() && e.alpha ? D.D.shift : e.u.degree; };
  Element out{degree(a) + degree(b), {0, 0}};
  if (!a.u.is_zero() && !b.u.is_zero()) out = L.bracket(a.u, b.u);
  if (b.alpha && !a.u.is_zero()) out = L.add(out, L.scale(apply(L, D.D, a.u), b.alpha));
  if (a.alpha && !b.u.is_zero()) out = L.sub(out, L.scale(apply(L, D.D, b.u), a.alpha));
  return {out, 0};
}

ExtractedM extract_M(const GradedAlgebra& L, const DerivationRep& rep) {
  const int q = rep.q;
  const Element Y = L.word_element("y" + xs(q - 1));
  std::vector<Element> U{Element{}, Y};
  CentralizerSequence seq;
  for (int j = 1;; ++j) {
    const Element& u = U[j];
    if (u.degree + q > L.top() || !rep.D.defined_at(u.degree)) break;
    const Element uy = L.bracket(u, Y);
    const Element ux = apply(L, rep.D, u);
    if (uy.is_zero() == ux.is_zero())
      throw ConstructionError("extract_M: [U_" + std::to_string(j) + " X] and [U_" + std::to_string(j) +
                              " Y] are both " + (ux.is_zero() ? "zero" : "nonzero"));
    if (j >= 2) seq.entries.push_back(uy.is_zero() ? Centralizer::CY : Centralizer::CX);
    else if (!uy.is_zero()) throw ConstructionError("extract_M: [Y Y] != 0");
    U.push_back(uy.is_zero() ? ux : uy);
  }
  if (seq.last_index() < 2) throw ConstructionError("extract_M: degree range too small");
  GradedAlgebra M = build_maxclass(L.field(), seq, seq.last_index() - 1);
  return {std::move(seq), std::move(U), std::move(M)};
}

int roundtrip_source_degree(int q, int N) { return tensor_required_degree(q, N) * q; }

RoundtripReport roundtrip_check(const GradedAlgebra& L, int N) {
  RoundtripReport rep;
  std::string stage;
  auto done = [&](const char* s) { rep.stages.push_back(s); };
  try {
    stage = "detect L";
    rep.pattern_L = detect(L, N).pattern;
    if (!in_tq2(rep.pattern_L)) throw ConstructionError("algebra is not in T_{q,2}");
    if (L.top() < roundtrip_source_degree(L.q(), N)) throw DegreeOverflow(roundtrip_source_degree(L.q(), N), L.top());
    done("detect L");
    stage = "build D";
    const auto D = build_D(L);
    done("build D");
    stage = "extract M";
    auto ex = extract_M(L, D);
    rep.sequence = ex.sequence;
    done("extract M");
    stage = "build M";
    const int need = tensor_required_degree(L.q(), N);
    GradedAlgebra M = build_maxclass(L.field(), ex.sequence, need - 2);
    done("build M");
    stage = "tensor";
    GradedAlgebra T = tensor_construct(M, L.q(), N);
    done("tensor");
    stage = "detect T";
    rep.pattern_T = detect(T, N).pattern;
    done("detect T");
    rep.pass = rep.pattern_T == rep.pattern_L;
    if (!rep.pass) rep.error = "compare: detected patterns differ";
  } catch (const std::exception& e) {
    rep.error = stage + ": " + e.what();
  }
  return rep;
}

}  // namespace thinlie
