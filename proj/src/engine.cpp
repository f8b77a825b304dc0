#include "thinlie/engine.hpp"

#include <algorithm>
#include <sstream>

#include "thinlie/kernels.hpp"

namespace thinlie {

bool OperatorFamily::is_zero() const noexcept {
  for (std::size_t k = 1; k < maps.size(); ++k)
    if (!maps[k].is_zero()) return false;
  return true;
}

GradedAlgebra::GradedAlgebra(AlgebraData data) : data_(std::move(data)) {
  check_data();
  build_basis();
  build_table();
}

void GradedAlgebra::check_data() const {
  const int top = data_.top;
  if (top < 2) throw ConstructionError("algebra must reach at least degree 2");
  if (static_cast<int>(data_.dims.size()) != top + 1)
    throw ConstructionError("dims must have top+1 entries");
  if (data_.dims[1] != 2) throw ConstructionError("L_1 must be two-dimensional");
  std::size_t total = 0;
  for (int k = 1; k <= top; ++k) {
    if (data_.dims[k] < 1 || data_.dims[k] > 2)
      throw ConstructionError("component " + std::to_string(k) + " has dimension " +
                              std::to_string(data_.dims[k]));
    total += data_.dims[k];
  }
  if (data_.parent.size() != total || data_.letter.size() != total)
    throw ConstructionError("parent/letter tables do not match the dimensions");
  if (static_cast<int>(data_.ad_x.size()) != top || static_cast<int>(data_.ad_y.size()) != top)
    throw ConstructionError("ad tables must have top entries (index 0 unused)");
  for (int k = 1; k < top; ++k) {
    for (const auto* m : {&data_.ad_x[k], &data_.ad_y[k]})
      if (static_cast<int>(m->rows()) != data_.dims[k + 1] ||
          static_cast<int>(m->cols()) != data_.dims[k])
        throw ConstructionError("ad matrix at degree " + std::to_string(k) + " has wrong shape");
  }
}

void GradedAlgebra::build_basis() {
  const int top = data_.top;
  offset_.assign(top + 2, 0);
  for (int k = 1; k <= top; ++k) offset_[k + 1] = offset_[k] + data_.dims[k];
  basis_.clear();
  basis_.reserve(offset_[top + 1]);
  basis_.push_back({1, 0, -1, 'x', "x", {1, 0}});
  basis_.push_back({1, 1, -1, 'y', "y", {0, 1}});
  for (int k = 2; k <= top; ++k) {
    for (int i = 0; i < data_.dims[k]; ++i) {
      const int g = offset_[k] + i;
      const int par = data_.parent[g];
      const char t = data_.letter[g];
      if (par < offset_[k - 1] || par >= offset_[k] || (t != 'x' && t != 'y'))
        throw ConstructionError("basis element " + std::to_string(g) + " has a bad parent");
      BasisElement b;
      b.degree = k;
      b.index = i;
      b.parent = par;
      b.letter = t;
      b.word = basis_[par].word + t;
      b.bidegree = basis_[par].bidegree + (t == 'x' ? Bidegree{1, 0} : Bidegree{0, 1});
      basis_.push_back(std::move(b));
      Element img = ad(t, basis_element(par));
      if (img != unit(k, i))
        throw ConstructionError("word " + basis_.back().word + " does not reproduce its basis element");
    }
  }
}

void GradedAlgebra::build_table() {
  const std::size_t nb = basis_.size();
  const int top = data_.top;
  const auto& f = field();
  table_.assign(nb * nb, {0, 0});
  auto cell = [&](std::size_t i, std::size_t j) -> std::array<Scalar, 2>& { return table_[i * nb + j]; };

  for (std::size_t j = 0; j < nb; ++j) {
    const int dj = basis_[j].degree;
    for (std::size_t i = 0; i < nb; ++i) {
      const int di = basis_[i].degree;
      if (di + dj > top) break;
      if (dj == 1) {
        cell(i, j) = ad(basis_[j].letter, unit(di, basis_[i].index)).c;
        continue;
      }
      const std::size_t jp = basis_[j].parent;
      const char t = basis_[j].letter;
      // [b_i, [b_j', t]] = [[b_i, b_j'], t] - [[b_i, t], b_j']
      Element first = ad(t, Element{di + dj - 1, cell(i, jp)});
      Element bt = ad(t, unit(di, basis_[i].index));
      std::array<Scalar, 2> second{0, 0};
      const int base = offset_[di + 1];
      for (int c = 0; c < data_.dims[di + 1]; ++c) {
        if (!bt.c[c]) continue;
        const auto& e = cell(base + c, jp);
        second[0] = f.fma(second[0], bt.c[c], e[0]);
        second[1] = f.fma(second[1], bt.c[c], e[1]);
      }
      cell(i, j) = {f.sub(first.c[0], second[0]), f.sub(first.c[1], second[1])};
    }
  }
}

int GradedAlgebra::dim(int k) const {
  if (k < 1 || k > data_.top) throw DegreeOverflow(k, data_.top);
  return data_.dims[k];
}

const gf::Matrix& GradedAlgebra::ad_matrix(char letter, int k) const {
  if (k < 1 || k >= data_.top) throw DegreeOverflow(k + 1, data_.top);
  return letter == 'x' ? data_.ad_x[k] : data_.ad_y[k];
}

Element GradedAlgebra::zero(int k) const {
  if (k < 1 || k > data_.top) throw DegreeOverflow(k, data_.top);
  return Element{k, {0, 0}};
}

Element GradedAlgebra::unit(int k, int idx) const {
  Element e = zero(k);
  e.c[idx] = 1;
  return e;
}

Element GradedAlgebra::add(const Element& a, const Element& b) const {
  if (a.degree != b.degree) throw Error("adding elements of different degrees");
  return Element{a.degree, {field().add(a.c[0], b.c[0]), field().add(a.c[1], b.c[1])}};
}

Element GradedAlgebra::sub(const Element& a, const Element& b) const {
  if (a.degree != b.degree) throw Error("subtracting elements of different degrees");
  return Element{a.degree, {field().sub(a.c[0], b.c[0]), field().sub(a.c[1], b.c[1])}};
}

Element GradedAlgebra::scale(const Element& a, Scalar s) const {
  return Element{a.degree, {field().mul(a.c[0], s), field().mul(a.c[1], s)}};
}

Element GradedAlgebra::ad(char letter, const Element& u) const {
  if (u.degree >= data_.top) throw DegreeOverflow(u.degree + 1, data_.top);
  const auto& m = letter == 'x' ? data_.ad_x[u.degree] : data_.ad_y[u.degree];
  Element out{u.degree + 1, {0, 0}};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.c[r] = field().fma(out.c[r], m(r, c), u.c[c]);
  return out;
}

Element GradedAlgebra::apply_word(Element u, std::string_view letters) const {
  for (char t : letters) u = ad(t, u);
  return u;
}

Element GradedAlgebra::word_element(std::string_view word) const {
  if (word.empty() || (word[0] != 'x' && word[0] != 'y')) throw Error("bad word");
  return apply_word(unit(1, word[0] == 'x' ? 0 : 1), word.substr(1));
}

bool GradedAlgebra::table_defined(int gi, int gj) const noexcept {
  return basis_[gi].degree + basis_[gj].degree <= data_.top;
}

Element GradedAlgebra::table(int gi, int gj) const {
  const int d = basis_.at(gi).degree + basis_.at(gj).degree;
  if (d > data_.top) throw DegreeOverflow(d, data_.top);
  return Element{d, entry(gi, gj)};
}

Element GradedAlgebra::bracket(const Element& u, const Element& v) const {
  const int d = u.degree + v.degree;
  if (d > data_.top) throw DegreeOverflow(d, data_.top);
  const auto& f = field();
  Element out{d, {0, 0}};
  const bool direct = v.degree <= u.degree;
  for (int a = 0; a < data_.dims[u.degree]; ++a) {
    if (!u.c[a]) continue;
    for (int b = 0; b < data_.dims[v.degree]; ++b) {
      if (!v.c[b]) continue;
      const Scalar coeff = f.mul(u.c[a], v.c[b]);
      const int gu = offset_[u.degree] + a, gv = offset_[v.degree] + b;
      const auto& e = direct ? entry(gu, gv) : entry(gv, gu);
      for (int r = 0; r < 2; ++r) {
        Scalar term = f.mul(coeff, e[r]);
        out.c[r] = direct ? f.add(out.c[r], term) : f.sub(out.c[r], term);
      }
    }
  }
  return out;
}

Element GradedAlgebra::bracket_basis(int gi, int gj) const {
  return bracket(basis_element(gi), basis_element(gj));
}

Element GradedAlgebra::generator(Scalar a, Scalar b) const {
  return Element{1, {a % p(), b % p()}};
}

std::optional<Scalar> GradedAlgebra::ratio(const Element& v, const Element& w) const {
  if (v.degree != w.degree) return std::nullopt;
  int piv = w.c[0] ? 0 : (w.c[1] ? 1 : -1);
  if (piv < 0) return v.is_zero() ? std::optional<Scalar>(0) : std::nullopt;
  Scalar s = field().div(v.c[piv], w.c[piv]);
  if (scale(w, s) != v) return std::nullopt;
  return s;
}

Element apply(const GradedAlgebra& L, const OperatorFamily& op, const Element& u) {
  if (!op.defined_at(u.degree)) throw DegreeOverflow(u.degree + op.shift, L.top());
  const auto& m = op.maps[u.degree];
  Element out{u.degree + op.shift, {0, 0}};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.c[r] = L.field().fma(out.c[r], m(r, c), u.c[c]);
  return out;
}

OperatorFamily ad_power_operator(const GradedAlgebra& L, const Element& z, int e) {
  if (e < 1) throw Error("ad_power_operator: exponent must be positive");
  if (z.degree != 1) throw Error("ad_power_operator: z must lie in L_1");
  const auto& f = L.field();
  auto step = [&](int k) {
    return gf::add(f, gf::scale(f, L.ad_matrix('x', k), z.c[0]), gf::scale(f, L.ad_matrix('y', k), z.c[1]));
  };
  OperatorFamily op;
  op.shift = e;
  const int last = L.top() - e;
  op.maps.resize(std::max(last, 0) + 1);
  for (int k = 1; k <= last; ++k) {
    gf::Matrix m = step(k);
    for (int i = 1; i < e; ++i) m = gf::multiply(f, step(k + i), m);
    op.maps[k] = std::move(m);
  }
  return op;
}

OperatorFamily derivation_from_generators(const GradedAlgebra& L, const Element& dx,
                                          const Element& dy, int shift) {
  if (dx.degree != 1 + shift || dy.degree != 1 + shift)
    throw Error("derivation images must have degree 1 + shift");
  const int last = L.top() - shift;
  std::vector<Element> img(L.basis_size());
  img[0] = dx;
  img[1] = dy;
  for (int g = 2; g < L.basis_size(); ++g) {
    const auto& b = L.basis(g);
    if (b.degree > last) break;
    const Element& dt = b.letter == 'x' ? dx : dy;
    img[g] = L.add(L.ad(b.letter, img[b.parent]), L.bracket(L.basis_element(b.parent), dt));
  }
  OperatorFamily op;
  op.shift = shift;
  op.maps.resize(std::max(last, 0) + 1);
  for (int k = 1; k <= last; ++k) {
    gf::Matrix m(L.dim(k + shift), L.dim(k));
    for (int i = 0; i < L.dim(k); ++i) {
      const auto& v = img[L.global(k, i)];
      for (int r = 0; r < L.dim(k + shift); ++r) m(r, i) = v.c[r];
    }
    op.maps[k] = std::move(m);
  }
  return op;
}

std::set<Bidegree> support(const GradedAlgebra& L, int max_degree) {
  if (max_degree < 0) max_degree = L.top();
  std::set<Bidegree> s;
  for (int g = 0; g < L.basis_size() && L.basis(g).degree <= max_degree; ++g)
    s.insert(L.basis(g).bidegree);
  return s;
}

std::vector<int> dims(const GradedAlgebra& L, int max_degree) {
  if (max_degree < 0) max_degree = L.top();
  std::vector<int> d;
  for (int k = 1; k <= std::min(max_degree, L.top()); ++k) d.push_back(L.dim(k));
  return d;
}

std::vector<std::array<Scalar, 2>> centralizer_in_L1(const GradedAlgebra& L, int k) {
  const int dk = L.dim(k), dn = L.dim(k + 1);
  gf::Matrix a(static_cast<std::size_t>(dk * dn), 2);
  for (int i = 0; i < dk; ++i) {
    Element u = L.unit(k, i);
    Element ux = L.ad('x', u), uy = L.ad('y', u);
    for (int r = 0; r < dn; ++r) {
      a(i * dn + r, 0) = ux.c[r];
      a(i * dn + r, 1) = uy.c[r];
    }
  }
  gf::Vector zero(a.rows(), 0);
  auto sol = gf::solve_or_kernel(L.field(), a, zero);
  std::vector<std::array<Scalar, 2>> out;
  for (const auto& v : sol.kernel) out.push_back({v[0], v[1]});
  return out;
}

int coclass_excess(const GradedAlgebra& L, int N) {
  if (N < 0) N = L.N();
  int c = 0;
  for (int k = 1; k <= std::min(N, L.top()); ++k) c += L.dim(k) == 2;
  return c;
}

// ---------------------------------------------------------------------------

bool ValidationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

int ValidationReport::first_failure_degree() const noexcept {
  int best = -1;
  for (const auto& c : checks)
    if (!c.passed && c.first_failure_degree >= 0 && (best < 0 || c.first_failure_degree < best))
      best = c.first_failure_degree;
  return best;
}

namespace {

std::string short_word(const GradedAlgebra& L, int g) {
  const auto& w = L.basis(g).word;
  if (w.size() <= 24) return w;
  return w.substr(0, 10) + "..." + w.substr(w.size() - 10) + "(" + std::to_string(w.size()) + ")";
}

CheckResult from_tally(const GradedAlgebra& L, std::string name, const kernels::Tally& t) {
  CheckResult r;
  r.name = std::move(name);
  r.checked = t.checked;
  r.failures = t.failures;
  r.passed = t.failures == 0;
  r.first_failure_degree = t.first_failure_degree();
  for (const auto& w : t.witnesses) {
    std::string s = "degree " + std::to_string(w.degree) + ":";
    for (int g : w.idx)
      if (g >= 0) s += " " + short_word(L, g);
    r.witnesses.push_back(std::move(s));
  }
  return r;
}

}  // namespace

void CheckResult::fail(int degree, std::string witness) {
  passed = false;
  ++failures;
  if (first_failure_degree < 0 || degree < first_failure_degree) first_failure_degree = degree;
  if (witnesses.size() < kernels::kMaxWitnesses) witnesses.push_back(std::move(witness));
}

CheckResult kernels::to_check(const GradedAlgebra& L, std::string name, const Tally& t) {
  return from_tally(L, std::move(name), t);
}

ValidationReport validate(const GradedAlgebra& L, const ValidateOptions& opt) {
  const int maxd = opt.max_degree < 0 ? L.top() : std::min(opt.max_degree, L.top());
  const auto& f = L.field();
  ValidationReport rep;

  {
    CheckResult r{"words"};
    for (int g = 0; g < L.basis_size() && L.basis(g).degree <= maxd; ++g) {
      ++r.checked;
      if (L.word_element(L.basis(g).word) != L.basis_element(g))
        r.fail(L.basis(g).degree, L.basis(g).word);
    }
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"thinness"};
    for (int k = 1; k <= maxd; ++k) {
      ++r.checked;
      const int d = L.dim(k);
      if ((k == 1 && d != 2) || d < 1 || d > 2)
        r.fail(k, "dim L_" + std::to_string(k) + " = " + std::to_string(d));
    }
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"covering"};
    for (int k = 1; k < maxd; ++k) {
      const int dk = L.dim(k), dn = L.dim(k + 1);
      std::vector<Element> lines;
      if (dk == 1) {
        lines.push_back(L.unit(k, 0));
      } else {
        lines.push_back(L.unit(k, 1));
        for (Scalar l = 0; l < L.p(); ++l) lines.push_back(Element{k, {1, l}});
      }
      for (const auto& u : lines) {
        ++r.checked;
        gf::Matrix m(dn, 2);
        Element ux = L.ad('x', u), uy = L.ad('y', u);
        for (int i = 0; i < dn; ++i) {
          m(i, 0) = ux.c[i];
          m(i, 1) = uy.c[i];
        }
        if (static_cast<int>(gf::rank(f, m)) != dn)
          r.fail(k + 1, "[u L_1] != L_" + std::to_string(k + 1) + " for u = " + to_string(L, u));
      }
    }
    rep.checks.push_back(std::move(r));
  }
  if (L.q() > 0) {
    CheckResult r{"sandwich_y"};
    for (int k = 1; k + 2 <= maxd; ++k) {
      ++r.checked;
      auto m = gf::multiply(f, L.ad_matrix('y', k + 1), L.ad_matrix('y', k));
      if (!m.is_zero()) r.fail(k + 2, "(ad y)^2 != 0 on L_" + std::to_string(k));
    }
    rep.checks.push_back(std::move(r));

    CheckResult s{"nilpotent_x"};
    const int q = L.q();
    for (int k = 1; k + q <= maxd; ++k) {
      ++s.checked;
      gf::Matrix m = L.ad_matrix('x', k);
      for (int i = 1; i < q; ++i) m = gf::multiply(f, L.ad_matrix('x', k + i), m);
      if (!m.is_zero()) s.fail(k + q, "(ad x)^q != 0 on L_" + std::to_string(k));
    }
    rep.checks.push_back(std::move(s));
  }
  rep.checks.push_back(from_tally(L, "antisymmetry",
                                  opt.parallel ? kernels::antisymmetry_parallel(L, maxd)
                                               : kernels::antisymmetry_serial(L, maxd)));
  rep.checks.push_back(from_tally(
      L, "bigrading", opt.parallel ? kernels::support_parallel(L, maxd) : kernels::support_serial(L, maxd)));
  if (opt.jacobi)
    rep.checks.push_back(from_tally(
        L, "jacobi", opt.parallel ? kernels::jacobi_parallel(L, maxd) : kernels::jacobi_serial(L, maxd)));
  return rep;
}

std::string to_string(const GradedAlgebra& L, const Element& u) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < L.dim(u.degree); ++i) {
    if (!u.c[i]) continue;
    auto v = L.field().symmetric(u.c[i]);
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    auto a = v < 0 ? -v : v;
    if (a != 1) os << a << "*";
    os << "[" << L.basis(L.global(u.degree, i)).word << "]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace thinlie
