#pragma once

// Divided powers, the tensor construction of a Nottingham algebra from an
// algebra of maximal class, and deflation.

#include <optional>
#include <utility>
#include <vector>

#include "thinlie/engine.hpp"
#include "thinlie/maxclass.hpp"
#include "thinlie/patterns.hpp"

namespace thinlie {

/// F[eps; q] with basis eps^(0..q-1) and eps^(i) eps^(j) = C(i+j, i) eps^(i+j).
class DividedPowerAlgebra {
 public:
  /// q must be a power of the field characteristic.
  DividedPowerAlgebra(gf::PrimeField f, int q);

  int q() const noexcept { return q_; }
  const gf::PrimeField& field() const noexcept { return f_; }

  /// (coefficient, index) of eps^(i) eps^(j), or nullopt when it vanishes.
  /// Throws std::out_of_range unless 0 <= i, j < q.
  std::optional<std::pair<Scalar, int>> product(int i, int j) const;
  /// The standard derivation eps^(i) -> eps^(i-1); nullopt for i = 0.
  std::optional<int> derivative(int i) const;

 private:
  gf::PrimeField f_;
  int q_;
};

/// Free-function form of DividedPowerAlgebra::product over F_p.
std::optional<std::pair<Scalar, int>> divided_power_product(int i, int j, int q, std::uint32_t p);

/// Element of M (x) F[eps; q] + F (1 (x) d): coefficient of U_g (x) eps^(a) at
/// g * q + a (g a global basis index of M), and of 1 (x) d in the last slot.
struct AmbientElement {
  int degree = 0;
  gf::Vector c;
};

struct TensorResult {
  GradedAlgebra algebra;
  std::vector<AmbientElement> representatives;  // per global basis index
};

/// Subalgebra generated by x = -1 (x) d and y = X (x) eps^(q-2) + Y (x) eps^(q-1),
/// over degrees 1..N+2. M must reach degree (N+2)/(q-1) + 2.
/// Throws ConstructionError if some component is not one- or two-dimensional.
TensorResult tensor_construct_full(const GradedAlgebra& M, int q, int N);
GradedAlgebra tensor_construct(const GradedAlgebra& M, int q, int N);

/// Degree of M needed by tensor_construct(M, q, N).
int tensor_required_degree(int q, int N);

/// Ambient bracket [a, b] within tensor_construct's ambient algebra.
AmbientElement ambient_bracket(const GradedAlgebra& M, int q, const AmbientElement& a, const AmbientElement& b);

// ---------------------------------------------------------------------------
// Deflation

struct DeflationResult {
  GradedAlgebra algebra;
  /// Output generators as operator families on the source: x and y.
  OperatorFamily x, y;
  Scalar lambda = 0;  // x = x' + lambda y' after standardization
};

/// Source degree needed for deflate(L, N_out).
int deflation_source_degree(std::uint32_t p, int N_out);

/// Subalgebra of Der(L) generated by (ad L_1)^p (all p+1 lines) and ad L_p,
/// degrees divided by p, with standard generators chosen so that the second
/// diamond has type -1. Output runs over degrees 1..N_out+2.
/// Throws DegreeOverflow if L.top() < deflation_source_degree, and
/// ConstructionError if the result is not thin.
DeflationResult deflate_full(const GradedAlgebra& L, int N_out);
GradedAlgebra deflate(const GradedAlgebra& L, int N_out);

/// Commutator of two operator families of right actions: D2 D1 - D1 D2.
OperatorFamily commutator(const gf::PrimeField& f, const OperatorFamily& d1, const OperatorFamily& d2);

/// w -> [w u] as an operator family.
OperatorFamily right_action(const GradedAlgebra& L, const Element& u);

/// N(q, r): case (a) with second diamond q*r, deflated log_p r times.
GradedAlgebra nottingham_Nqr(std::uint32_t p, int q, int r, int N);

}  // namespace thinlie
