#pragma once

// Computed-identity checks at every diamond context of a built algebra: the
// second-diamond relation, distances between diamonds, and the adjoint action
// of v_1, v_2 near each diamond.

#include "thinlie/engine.hpp"
#include "thinlie/patterns.hpp"

namespace thinlie {

/// Checks, each counting the contexts where its hypotheses hold:
///   second_diamond     L_q has type -1 and [v_1 y x] = -2 [v_1 x y]
///   support_expansion  [u u] expanded term by term is 0, u = [y x^{(q-1)/2}]
///   distances          gaps q-1, or q after fake1
///   y_centralizes      [L_k y] = 0 for m < k <= m+q-3 after every diamond L_m
///   v1_action          [v_k^{-1} v_1], [v_k v_1], [v_k x v_1], ... for mu != 0
///   v1_action_type0    [v_k^{-1} v_1] = 2 v_{k+1}^{-1} for mu = 0
///   v2_action          [v_k v_2] = mu^{-1} v_{k+2}, ... when L_{m+q-1} is infinite
///   v2_action_finite   [v_k v_2] = -2 mu^{-1} v_{k+2}, ... when L_m is infinite
///                      and L_{m+q-1} has finite type mu != 0
///   v2_action_type0    the same with mu = 0
///   type1_action       [v_b v_1] = 2 v_{b+1}^{-1}, ... at a fake1 L_m with [L_{m+q-2} y] = 0
///   one_past_type1     a fake1 after an infinite diamond is followed at q-1 or q
///                      by an infinite diamond
///   first_type1        [L_{m+q-2} y] = 0 for m = 2p^s(q-1)+1 when all earlier
///                      diamonds after L_q are infinite and L_m is fake1
/// The v_2 and type-1 checks need L_{2q-1} to be infinite.
ValidationReport verify_lemma_suite(const GradedAlgebra& L);

}  // namespace thinlie
