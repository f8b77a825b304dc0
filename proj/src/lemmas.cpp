#include "thinlie/lemmas.hpp"

#include <optional>
#include <string>

namespace thinlie {

namespace {

std::string xs(int n) { return std::string(std::max(n, 0), 'x'); }

struct Ctx {
  const GradedAlgebra& L;
  const gf::PrimeField& f;
  int q;
  Element v1, v2;

  Element br(const Element& a, const Element& b) const { return L.bracket(a, b); }
  Element w(const Element& a, std::string_view s) const { return L.apply_word(a, s); }
  Element sc(const Element& a, Scalar s) const { return L.scale(a, s); }
  Element add(const Element& a, const Element& b) const { return L.add(a, b); }
  Scalar k(long v) const { return f.reduce(v); }
};

// mu^{-1} for a reading; nullopt for type 0.
std::optional<Scalar> mu_inverse(const gf::PrimeField& f, const DiamondType& t) {
  switch (t.kind) {
    case DiamondKind::Finite: return f.inv(t.mu);
    case DiamondKind::Infinite: return Scalar{0};
    case DiamondKind::Fake1: return Scalar{1};
    case DiamondKind::Fake0: return std::nullopt;
  }
  return std::nullopt;
}

// v_k^{-1} spans L_{m-2} and v_k = [v_k^{-1} x] spans L_{m-1}.
std::optional<std::pair<Element, Element>> pre_diamond(const GradedAlgebra& L, int m) {
  if (m < 3 || L.dim(m - 1) != 1 || L.dim(m - 2) != 1) return std::nullopt;
  Element vm = L.unit(m - 2, 0);
  Element v = L.ad('x', vm);
  if (v.is_zero()) return std::nullopt;
  return std::pair{vm, v};
}

}  // namespace

ValidationReport verify_lemma_suite(const GradedAlgebra& L) {
  const auto& f = L.field();
  const int q = L.q();
  const int top = L.top();
  ValidationReport rep;
  if (q <= 0) return rep;
  const Element v1 = L.word_element("y" + xs(q - 2));
  const Element v2 = L.apply_word(v1, "xy" + xs(q - 3));
  Ctx c{L, f, q, v1, v2};
  const auto P = detect(L).pattern;
  const Scalar m2 = f.neg(2);
  auto at = [&](int d) { return P.reading_at(d); };
  auto ds = [](int d) { return "L_" + std::to_string(d); };

  {
    CheckResult r{"second_diamond"};
    const auto t = at(q);
    r.expect(t && *t == DiamondType::finite(f.neg(1)), q, "type of L_q is not -1");
    r.expect(L.apply_word(v1, "yx") == L.scale(L.apply_word(v1, "xy"), m2), q + 1, "[v_1 y x] != -2 [v_1 x y]");
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"support_expansion"};
    const int n = (q - 1) / 2;
    const Element u = L.word_element("y" + xs(n));
    Element sum = L.zero(2 * u.degree);
    for (int i = 0; i <= n; ++i) {
      Scalar coef = gf::lucas_binom(n, i, L.p());
      if (i % 2) coef = f.neg(coef);
      sum = L.add(sum, L.scale(L.apply_word(u, xs(i) + "y" + xs(n - i)), coef));
    }
    r.expect(sum.is_zero() && L.bracket(u, u).is_zero(), 2 * u.degree, "[u u] expansion is nonzero");
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"distances"}, y{"y_centralizes"};
    int prev = 1;
    bool prev_fake1 = false;
    for (const auto& e : P.entries) {
      const int gap = e.degree - prev;
      r.expect(gap == q - 1 || (prev_fake1 && gap == q), e.degree,
               "gap " + std::to_string(gap) + " before " + ds(e.degree));
      prev = e.degree;
      prev_fake1 = e.type.kind == DiamondKind::Fake1;
    }
    std::vector<int> ms{1};
    for (const auto& e : P.entries) ms.push_back(e.degree);
    for (int m : ms)
      for (int k = m + 1; k <= m + q - 3 && k < top; ++k)
        y.expect(L.ad_matrix('y', k).is_zero(), k + 1, "[L_" + std::to_string(k) + " y] != 0 after " + ds(m));
    rep.checks.push_back(std::move(r));
    rep.checks.push_back(std::move(y));
  }

  CheckResult a1{"v1_action"}, a0{"v1_action_type0"}, b{"v2_action"}, bf{"v2_action_finite"}, b0{"v2_action_type0"},
      t1{"type1_action"}, op{"one_past_type1"}, ft{"first_type1"};
  const auto t2q = at(2 * q - 1);
  const bool v2_ok = t2q && t2q->kind == DiamondKind::Infinite;

  for (int m = q; m <= P.horizon; ++m) {
    const auto t = at(m);
    if (!t) continue;
    const auto mi = mu_inverse(f, *t);
    const auto pre = pre_diamond(L, m);
    if (!pre) continue;
    const auto& [vkm, vk] = *pre;
    const std::string where = " at " + ds(m);

    // adjoint action of v_1
    if (at(m + q - 1) && m + q + 1 <= top) {
      if (mi) {
        const Scalar u = *mi;
        const Element n1 = c.w(vk, "xy" + xs(q - 3)), n1m = c.w(vk, "xy" + xs(q - 4));
        a1.expect(c.br(vkm, v1) == c.sc(n1m, f.add(f.mul(2, u), 1)), m + q - 3, "[v_k^{-1} v_1]" + where);
        a1.expect(c.br(vk, v1) == c.sc(n1, f.add(u, 1)), m + q - 2, "[v_k v_1]" + where);
        a1.expect(c.br(c.w(vk, "x"), v1) == c.w(n1, "x"), m + q - 1, "[v_k x v_1]" + where);
        a1.expect(c.br(c.w(vk, "y"), v1) == c.sc(c.w(n1, "y"), f.sub(1, u)), m + q - 1, "[v_k y v_1]" + where);
        a1.expect(c.br(c.w(vk, "xy"), v1) == c.sc(c.add(c.sc(c.w(n1, "yx"), 2), c.w(n1, "xy")), f.neg(1)), m + q,
                  "[v_k x y v_1]" + where);
        a1.expect(c.br(c.w(vk, "xyx"), v1) ==
                      c.sc(c.add(c.sc(c.w(n1, "yxx"), 3), c.sc(c.w(n1, "xyx"), 2)), f.neg(1)),
                  m + q + 1, "[v_k x y x v_1]" + where);
      } else {
        const Element n1m = c.w(vk, "y" + xs(q - 3));
        a0.expect(c.br(vkm, v1) == c.sc(n1m, 2), m + q - 3, "[v_k^{-1} v_1]" + where);
      }
    }

    if (!v2_ok || m + 2 * q > top) continue;
    const auto tn = at(m + q - 1);
    const bool next_diamond = at(m + 2 * q - 2).has_value();

    // adjoint action of v_2 when L_{m+q-1} is infinite
    if (mi && tn && tn->kind == DiamondKind::Infinite && next_diamond) {
      const Scalar u = *mi;
      const Element n1 = c.w(vk, "xy" + xs(q - 3));
      const Element n2 = c.w(n1, "xy" + xs(q - 3));
      b.expect(c.br(vk, v2) == c.sc(n2, u), m + 2 * q - 3, "[v_k v_2]" + where);
      b.expect(c.br(c.w(vk, "x"), v2).is_zero() && c.br(c.w(vk, "y"), v2).is_zero(), m + 2 * q - 2,
               "[v_k x v_2], [v_k y v_2]" + where);
      b.expect(c.br(c.w(vk, "xy"), v2) == c.add(c.w(n2, "yx"), c.w(n2, "xy")), m + 2 * q - 1,
               "[v_k x y v_2]" + where);
      b.expect(c.br(c.w(vk, "xyx"), v2) == c.sc(c.add(c.w(n2, "yxx"), c.w(n2, "xyx")), 2), m + 2 * q,
               "[v_k x y x v_2]" + where);
    }

    // adjoint action of v_2 when L_m is infinite and L_{m+q-1} has finite type
    if (t->kind == DiamondKind::Infinite && tn && tn->kind != DiamondKind::Infinite && next_diamond) {
      const auto un = mu_inverse(f, *tn);
      const Element n1 = c.w(vk, "xy" + xs(q - 3));
      if (un) {
        const Scalar u = *un;
        const Element n2 = c.w(n1, "xy" + xs(q - 3)), n2m = c.w(n1, "xy" + xs(q - 4));
        bf.expect(c.br(vkm, v2) == c.sc(n2m, f.mul(c.k(-3), u)), m + 2 * q - 4, "[v_k^{-1} v_2]" + where);
        bf.expect(c.br(vk, v2) == c.sc(n2, f.mul(m2, u)), m + 2 * q - 3, "[v_k v_2]" + where);
        bf.expect(c.br(c.w(vk, "x"), v2) == c.sc(c.w(n2, "x"), f.neg(u)), m + 2 * q - 2, "[v_k x v_2]" + where);
        bf.expect(c.br(c.w(vk, "y"), v2) == c.sc(c.w(n2, "y"), f.neg(u)), m + 2 * q - 2, "[v_k y v_2]" + where);
        bf.expect(c.br(c.w(vk, "xy"), v2) == c.add(c.w(n2, "xy"), c.sc(c.w(n2, "yx"), f.add(f.mul(2, u), 1))),
                  m + 2 * q - 1, "[v_k x y v_2]" + where);
        bf.expect(c.br(c.w(vk, "xyx"), v2) ==
                      c.add(c.sc(c.w(n2, "xyx"), 2), c.sc(c.w(n2, "yxx"), f.add(f.mul(3, u), 2))),
                  m + 2 * q, "[v_k x y x v_2]" + where);
      } else {
        const Element n2 = c.w(n1, "y" + xs(q - 2)), n2m = c.w(n1, "y" + xs(q - 3));
        b0.expect(c.br(vkm, v2) == c.sc(n2m, c.k(-3)), m + 2 * q - 4, "[v_k^{-1} v_2]" + where);
        b0.expect(c.br(vk, v2) == c.sc(n2, m2), m + 2 * q - 3, "[v_k v_2]" + where);
        b0.expect(c.br(c.w(vk, "x"), v2) == c.sc(c.w(n2, "x"), f.neg(1)), m + 2 * q - 2, "[v_k x v_2]" + where);
        b0.expect(c.br(c.w(vk, "y"), v2) == c.sc(c.w(n2, "y"), f.neg(1)), m + 2 * q - 2, "[v_k y v_2]" + where);
        b0.expect(c.br(c.w(vk, "xy"), v2) == c.sc(c.w(n2, "yx"), 2), m + 2 * q - 1, "[v_k x y v_2]" + where);
        b0.expect(c.br(c.w(vk, "xyx"), v2) == c.sc(c.w(n2, "yxx"), 3), m + 2 * q, "[v_k x y x v_2]" + where);
      }
    }

    // fake diamond of type 1 with [L_{m+q-2} y] = 0
    const auto* canon = P.at(m);
    if (canon && canon->type.kind == DiamondKind::Fake1 && L.ad_matrix('y', m + q - 2).is_zero()) {
      const Element n1 = c.w(vk, "xy" + xs(q - 2)), n1m = c.w(vk, "xy" + xs(q - 3));
      t1.expect(c.br(vk, v1) == c.sc(n1m, 2), m + q - 2, "[v_b v_1]" + where);
      t1.expect(c.br(c.w(vk, "x"), v1) == n1, m + q - 1, "[v_b x v_1]" + where);
      t1.expect(c.br(c.w(vk, "xy"), v1) == c.sc(c.w(n1, "y"), f.neg(1)), m + q, "[v_b x y v_1]" + where);
      t1.expect(c.br(c.w(vk, "xy"), v2).is_zero(), m + 2 * q - 1, "[v_b x y v_2]" + where);
      const auto tq = at(m + q);
      if (tq && tq->kind == DiamondKind::Infinite) {
        const Element n2 = c.w(n1, "xy" + xs(q - 3)), n2m = c.w(n1, "xy" + xs(q - 4));
        t1.expect(c.br(vk, v2) == c.sc(n2m, 2), m + 2 * q - 3, "[v_b v_2]" + where);
        t1.expect(c.br(c.w(vk, "x"), v2) == n2, m + 2 * q - 2, "[v_b x v_2]" + where);
      }
    }

    // a fake1 preceded by an infinite diamond at distance q-1
    if (canon && canon->type.kind == DiamondKind::Fake1 && m + q <= P.horizon) {
      const auto tp = at(m - q + 1);
      if (tp && tp->kind == DiamondKind::Infinite) {
        const auto a = at(m + q - 1), bq = at(m + q);
        const bool ok = (a && a->kind == DiamondKind::Infinite) || (bq && bq->kind == DiamondKind::Infinite);
        op.expect(ok, m + q, "no infinite diamond at distance q-1 or q after " + ds(m));
      }
    }
  }

  // the first fake1 at 2p^s(q-1)+1
  for (long ps = L.p(); 2 * ps * (q - 1) + 1 + q - 2 < top && 2 * ps * (q - 1) + 1 <= P.horizon; ps *= L.p()) {
    const int m = static_cast<int>(2 * ps * (q - 1) + 1);
    bool hyp = v2_ok;
    for (int k = 2; k < 2 * ps && hyp; ++k) {
      const auto t = P.at(k * (q - 1) + 1);
      hyp = t && t->type.kind == DiamondKind::Infinite;
    }
    const auto* t = P.at(m);
    hyp = hyp && t && t->type.kind == DiamondKind::Fake1;
    if (hyp) ft.expect(L.ad_matrix('y', m + q - 2).is_zero(), m + q - 1, "[L_{m+q-2} y] != 0 at " + ds(m));
  }

  for (auto* r : {&a1, &a0, &b, &bf, &b0, &t1, &op, &ft}) rep.checks.push_back(std::move(*r));
  return rep;
}

}  // namespace thinlie
