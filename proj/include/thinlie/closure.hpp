#pragma once

// Degree-by-degree closure of two degree-one elements inside some ambient Lie
// algebra, producing engine data (basis words plus ad matrices). Used by the
// tensor construction and by deflation.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thinlie/engine.hpp"

namespace thinlie {

template <class E>
struct ClosureSpec {
  gf::PrimeField field;
  int q = 0;
  int N = 0;
  int top = 0;
  E x, y;
  /// [e t] for t = 'x' or 'y'; `degree` is the degree of e.
  std::function<E(const E& e, int degree, char t)> act;
  /// Linear coordinates of e, injective on each degree.
  std::function<gf::Vector(const E& e, int degree)> coords;
};

namespace detail {

inline bool is_zero_vec(const gf::Vector& v) {
  for (auto s : v)
    if (s) return false;
  return true;
}

/// Coordinates of v against the independent columns `cols`, if v lies in their span.
inline std::optional<gf::Vector> solve_in(const gf::PrimeField& f, const std::vector<gf::Vector>& cols,
                                          const gf::Vector& v) {
  if (cols.empty()) return is_zero_vec(v) ? std::optional<gf::Vector>(gf::Vector{}) : std::nullopt;
  gf::Matrix a(v.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) a.set_column(c, cols[c]);
  auto r = gf::solve_or_kernel(f, a, v);
  if (!r.consistent) return std::nullopt;
  return r.particular;
}

}  // namespace detail

/// Closure result: engine data plus the ambient representatives of each basis
/// element, in global basis order.
template <class E>
struct Closure {
  AlgebraData data;
  std::vector<E> elements;
};

/// Builds the subalgebra generated by spec.x and spec.y up to degree spec.top.
/// Basis elements are the first independent candidates among [b x], [b y] for
/// b running over the previous degree's basis (y before x in degree one, so
/// that L_2 = [y x]). Throws ConstructionError on a component of dimension 0
/// or more than 2.
template <class E>
Closure<E> close_thin(const ClosureSpec<E>& spec) {
  const auto& f = spec.field;
  AlgebraData d(f);
  d.q = spec.q;
  d.N = spec.N;
  d.top = spec.top;
  d.dims.assign(spec.top + 1, 0);
  d.dims[1] = 2;
  d.ad_x.resize(spec.top);
  d.ad_y.resize(spec.top);
  d.parent = {-1, -1};
  d.letter = {'x', 'y'};

  std::vector<E> elems{spec.x, spec.y};
  std::vector<gf::Vector> cur_coords{spec.coords(spec.x, 1), spec.coords(spec.y, 1)};
  if (detail::is_zero_vec(cur_coords[0]) || detail::solve_in(f, {cur_coords[0]}, cur_coords[1]))
    throw ConstructionError("generators are linearly dependent");
  int cur_offset = 0;

  for (int k = 1; k < spec.top; ++k) {
    const int dk = d.dims[k];
    std::vector<int> order;
    if (k == 1) order = {1, 0};
    else
      for (int i = 0; i < dk; ++i) order.push_back(i);

    struct Cand {
      int src;
      char t;
      E e;
      gf::Vector v;
    };
    std::vector<Cand> cands;
    for (int i : order)
      for (char t : {'x', 'y'}) {
        E e = spec.act(elems[cur_offset + i], k, t);
        gf::Vector v = spec.coords(e, k + 1);
        cands.push_back({i, t, std::move(e), std::move(v)});
      }

    std::vector<gf::Vector> basis_coords;
    std::vector<E> next;
    for (auto& c : cands) {
      if (detail::is_zero_vec(c.v)) continue;
      if (detail::solve_in(f, basis_coords, c.v)) continue;
      if (basis_coords.size() == 2)
        throw ConstructionError("component " + std::to_string(k + 1) + " has dimension greater than 2");
      basis_coords.push_back(c.v);
      next.push_back(c.e);
      d.parent.push_back(cur_offset + c.src);
      d.letter.push_back(c.t);
    }
    const int dn = static_cast<int>(basis_coords.size());
    if (dn == 0) throw ConstructionError("component " + std::to_string(k + 1) + " vanishes");
    d.dims[k + 1] = dn;

    gf::Matrix ax(dn, dk), ay(dn, dk);
    for (auto& c : cands) {
      gf::Matrix& m = c.t == 'x' ? ax : ay;
      if (detail::is_zero_vec(c.v)) continue;
      auto s = *detail::solve_in(f, basis_coords, c.v);
      for (int r = 0; r < dn; ++r) m(r, c.src) = s[r];
    }
    d.ad_x[k] = std::move(ax);
    d.ad_y[k] = std::move(ay);
    cur_offset += dk;
    for (auto& e : next) elems.push_back(std::move(e));
  }
  return {std::move(d), std::move(elems)};
}

}  // namespace thinlie
