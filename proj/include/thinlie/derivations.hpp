#pragma once

// The derivation D with Dx = 0, Dy = [y x^{q-2} y] on algebras of class
// T_{q,2}, the algebra of maximal class it recovers, and the round trip back
// through the tensor construction.

#include <string>
#include <vector>

#include "thinlie/constructions.hpp"
#include "thinlie/engine.hpp"
#include "thinlie/maxclass.hpp"
#include "thinlie/patterns.hpp"

namespace thinlie {

/// After the second diamond every entry is infinite or fake1, fake1 entries
/// are isolated, and L_{2q-1} is infinite.
bool in_tq2(const DiamondPattern& P);

struct DerivationRep {
  OperatorFamily D;  // shift q - 1
  int q = 0;
};

/// Extends Dx = 0, Dy = [v_1 y] along basis words. Throws ConstructionError
/// when L is not in T_{q,2}.
DerivationRep build_D(const GradedAlgebra& L);

/// Leibniz on all basis pairs, commutation with ad x, bidegree (q-2, 1),
/// D v_1 = -2 v_2, D[y x^i] = [v_1 y x^i], and the per-diamond identities:
/// Dv = -2w, D[vx] = -2[wx] before a genuine diamond followed at distance
/// q-1, and Dv = 0 = D[vx] before a fake1 diamond.
ValidationReport verify_leibniz(const GradedAlgebra& L, const DerivationRep& D, bool parallel = true);

/// Element of L + F D.
struct ExtendedElement {
  Element u;
  Scalar alpha = 0;
};

/// [(u,a), (v,b)] = [u,v] + b D(u) - a D(v), so that [u, D] = D(u).
ExtendedElement extended_bracket(const GradedAlgebra& L, const DerivationRep& D, const ExtendedElement& a,
                                 const ExtendedElement& b);

struct ExtractedM {
  CentralizerSequence sequence;
  std::vector<Element> U;  // U[j] = U_j in L for j >= 1 (U[0] unused)
  GradedAlgebra M;
};

/// X = D, Y = [y x^{q-1}], U_1 = Y, U_{j+1} = [U_j X] if [U_j Y] = 0 (c_j = CY)
/// and [U_j Y] otherwise (c_j = CX, which needs [U_j X] = 0). Runs as far as
/// L's degree range allows. Throws ConstructionError if both or neither of
/// [U_j X], [U_j Y] vanish.
ExtractedM extract_M(const GradedAlgebra& L, const DerivationRep& D);

/// L.top() needed by roundtrip_check(L, N).
int roundtrip_source_degree(int q, int N);

struct RoundtripReport {
  std::vector<std::string> stages;  // completed stage names
  CentralizerSequence sequence;
  DiamondPattern pattern_L, pattern_T;
  bool pass = false;
  std::string error;  // "<stage>: <message>" on failure
};

/// detect L -> build D -> extract M -> build M -> tensor -> detect T; passes iff
/// both detected patterns agree up to N.
RoundtripReport roundtrip_check(const GradedAlgebra& L, int N);

}  // namespace thinlie
