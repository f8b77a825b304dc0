#pragma once

// Exhaustive identity checks over basis pairs and triples. Each kernel has a
// serial reference and an OpenMP version; both must return identical tallies.

#include <array>
#include <cstdint>
#include <vector>

#include "thinlie/engine.hpp"

namespace thinlie::kernels {

struct Witness {
  int degree = 0;
  std::array<int, 3> idx{-1, -1, -1};  // global basis indices (unused slots -1)
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;  // smallest few, sorted

  int first_failure_degree() const noexcept {
    return witnesses.empty() ? -1 : witnesses.front().degree;
  }
  void merge(const Tally& o);
  friend bool operator==(const Tally&, const Tally&) = default;
};

inline constexpr std::size_t kMaxWitnesses = 8;

/// Converts a tally into a named report entry with readable witnesses.
CheckResult to_check(const GradedAlgebra& L, std::string name, const Tally& t);

/// [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 over basis triples a <= b <= c
/// with total degree <= max_degree.
Tally jacobi_serial(const GradedAlgebra& L, int max_degree);
Tally jacobi_parallel(const GradedAlgebra& L, int max_degree);

/// Both evaluation orders of the bracket table agree: T[i][j] = -T[j][i].
Tally antisymmetry_serial(const GradedAlgebra& L, int max_degree);
Tally antisymmetry_parallel(const GradedAlgebra& L, int max_degree);

/// Bigrading: every nonzero [b_i, b_j] lies in the bidegree bid(i) + bid(j),
/// and brackets landing outside the support vanish.
Tally support_serial(const GradedAlgebra& L, int max_degree);
Tally support_parallel(const GradedAlgebra& L, int max_degree);

/// D[a,b] = [Da, b] + [a, Db] over basis pairs with deg a + deg b + shift <= max_degree.
Tally leibniz_serial(const GradedAlgebra& L, const OperatorFamily& D, int max_degree);
Tally leibniz_parallel(const GradedAlgebra& L, const OperatorFamily& D, int max_degree);

}  // namespace thinlie::kernels
