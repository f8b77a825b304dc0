#pragma once

// Truncated graded Lie algebras with components of dimension at most two,
// stored through the adjoint actions of the two degree-one generators.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "thinlie/errors.hpp"
#include "thinlie/gf.hpp"

namespace thinlie {

using gf::Scalar;

/// A homogeneous element: its degree and coordinates in that component's basis.
struct Element {
  int degree = 0;
  std::array<Scalar, 2> c{0, 0};

  bool is_zero() const noexcept { return c[0] == 0 && c[1] == 0; }
  friend bool operator==(const Element&, const Element&) = default;
};

struct Bidegree {
  int r = 0;
  int s = 0;
  Bidegree operator+(Bidegree o) const noexcept { return {r + o.r, s + o.s}; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct BasisElement {
  int degree = 0;
  int index = 0;       // position inside its component
  int parent = -1;     // global index of the element this one brackets from
  char letter = 0;     // 'x' or 'y': this = [parent letter]; for generators, its own name
  std::string word;    // left-normed word, e.g. "yxxy"
  Bidegree bidegree;
};

/// Raw input to GradedAlgebra. Components run over degrees 1..top; basis
/// elements are listed degree by degree; ad_x[k], ad_y[k] map L_k -> L_{k+1}.
struct AlgebraData {
  explicit AlgebraData(gf::PrimeField f) : field(f) {}

  gf::PrimeField field;
  int q = 0;    // second-diamond degree; 0 when the algebra is not Nottingham
  int N = 0;    // nominal degree bound
  int top = 0;  // highest computed degree (N plus guard)
  std::vector<int> dims;      // dims[k], k = 1..top (dims[0] unused)
  std::vector<int> parent;    // per global basis index
  std::vector<char> letter;   // per global basis index
  std::vector<gf::Matrix> ad_x, ad_y;  // index k = 1..top-1
};

/// A graded linear map L_k -> L_{k+shift}, one matrix per source degree.
struct OperatorFamily {
  int shift = 0;
  std::vector<gf::Matrix> maps;  // maps[k] for k = 1..last(); maps[0] unused

  int last() const noexcept { return static_cast<int>(maps.size()) - 1; }
  bool defined_at(int k) const noexcept { return k >= 1 && k <= last(); }
  bool is_zero() const noexcept;
};

class GradedAlgebra {
 public:
  /// Builds the full pairwise bracket table. Throws ConstructionError when a
  /// defining word does not reproduce its basis element.
  explicit GradedAlgebra(AlgebraData data);

  const gf::PrimeField& field() const noexcept { return data_.field; }
  std::uint32_t p() const noexcept { return data_.field.characteristic(); }
  int q() const noexcept { return data_.q; }
  int N() const noexcept { return data_.N; }
  int top() const noexcept { return data_.top; }
  const AlgebraData& data() const noexcept { return data_; }

  int dim(int k) const;
  int offset(int k) const { return offset_.at(k); }
  int basis_size() const noexcept { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int g) const { return basis_.at(g); }
  int global(int k, int idx) const { return offset(k) + idx; }

  const gf::Matrix& ad_matrix(char letter, int k) const;

  Element zero(int k) const;
  Element unit(int k, int idx) const;
  Element basis_element(int g) const { return unit(basis_[g].degree, basis_[g].index); }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(const Element& a, Scalar s) const;
  Element neg(const Element& a) const { return scale(a, field().neg(1)); }

  /// [u t] for a generator letter t.
  Element ad(char letter, const Element& u) const;
  /// [u t1 t2 ... tn], left-normed.
  Element apply_word(Element u, std::string_view letters) const;
  /// Evaluates a full word such as "yxxy" starting from its root generator.
  Element word_element(std::string_view word) const;

  /// Table entry [b_i, b_j] computed by the recursion on b_j's word.
  /// Defined whenever deg i + deg j <= top.
  Element table(int gi, int gj) const;
  bool table_defined(int gi, int gj) const noexcept;
  /// Raw table coordinates; no range check.
  const std::array<Scalar, 2>& entry(int gi, int gj) const noexcept {
    return table_[static_cast<std::size_t>(gi) * basis_.size() + static_cast<std::size_t>(gj)];
  }

  /// Lie bracket. Throws DegreeOverflow past top.
  Element bracket(const Element& u, const Element& v) const;
  Element bracket_basis(int gi, int gj) const;

  /// Coordinates of the element with (x,y)-coefficients (a,b), as a degree-1 element.
  Element generator(Scalar a, Scalar b) const;

  /// Expresses v in terms of w (both in the same component) if v is a multiple of w.
  std::optional<Scalar> ratio(const Element& v, const Element& w) const;

 private:
  AlgebraData data_;
  std::vector<int> offset_;
  std::vector<BasisElement> basis_;
  std::vector<std::array<Scalar, 2>> table_;
  void check_data() const;
  void build_basis();
  void build_table();
};

/// Applies an operator family to a homogeneous element.
Element apply(const GradedAlgebra& L, const OperatorFamily& op, const Element& u);

/// Composite (ad z)^e for z = a x + b y.
OperatorFamily ad_power_operator(const GradedAlgebra& L, const Element& z, int e);

/// Extends Dx, Dy (both of degree 1 + shift) to a derivation through the
/// Leibniz rule along each basis word: D[b' t] = [D b', t] + [b', D t].
OperatorFamily derivation_from_generators(const GradedAlgebra& L, const Element& dx,
                                          const Element& dy, int shift);

std::set<Bidegree> support(const GradedAlgebra& L, int max_degree = -1);
std::vector<int> dims(const GradedAlgebra& L, int max_degree = -1);

/// Basis of {z in L_1 : [L_k z] = 0} as (x,y)-coefficient pairs.
std::vector<std::array<Scalar, 2>> centralizer_in_L1(const GradedAlgebra& L, int k);

/// Number of two-dimensional components among L_1..L_N.
int coclass_excess(const GradedAlgebra& L, int N = -1);

// ---------------------------------------------------------------------------
// Validation

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  int first_failure_degree = -1;
  std::vector<std::string> witnesses;

  /// Records one failure; keeps the first few witnesses.
  void fail(int degree, std::string witness);
  /// Counts one instance and records a failure unless ok.
  void expect(bool ok, int degree, const std::string& witness) {
    ++checked;
    if (!ok) fail(degree, witness);
  }
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  const CheckResult* find(std::string_view name) const noexcept;
  /// Smallest degree at which any check failed, or -1.
  int first_failure_degree() const noexcept;
};

struct ValidateOptions {
  int max_degree = -1;  // defaults to top
  bool parallel = true;
  bool jacobi = true;
};

/// Axiom checks: words, antisymmetry, Jacobi, thinness, covering, sandwich
/// identities, grading and bigrading additivity.
ValidationReport validate(const GradedAlgebra& L, const ValidateOptions& opt = {});

/// Renders an element as a combination of basis words.
std::string to_string(const GradedAlgebra& L, const Element& u);

}  // namespace thinlie
