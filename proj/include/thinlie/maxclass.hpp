#pragma once

// Graded Lie algebras of maximal class with at most two two-step centralizers.

#include <random>
#include <string>
#include <vector>

#include "thinlie/engine.hpp"

namespace thinlie {

enum class Centralizer { CY, CX };

/// Two-step centralizers c_2, c_3, ...; entries[0] is c_2.
struct CentralizerSequence {
  std::vector<Centralizer> entries;

  /// c_i for i >= 2. Index 1 is read as CY, matching U_2 = [Y X].
  Centralizer at(int i) const;
  int last_index() const noexcept { return static_cast<int>(entries.size()) + 1; }

  /// "YYX..." with the first character encoding c_2.
  std::string str() const;
  static CentralizerSequence parse(std::string_view s);

  /// c_2 = CY and no two consecutive CX.
  bool well_formed() const noexcept;

  friend bool operator==(const CentralizerSequence&, const CentralizerSequence&) = default;
};

CentralizerSequence all_cy(int length);

/// M_1 = <X, Y>, U_1 = Y, U_2 = [Y X], and U_{i+1} = [U_i X] or [U_i Y] as c_i
/// is CY or CX. Components run to degree N + 2. Throws ConstructionError if the
/// sequence is malformed or too short.
GradedAlgebra build_maxclass(gf::PrimeField f, const CentralizerSequence& seq, int N);

/// Reads c_i off the annihilating generator of each U_i. Throws
/// ConstructionError when a component is not centralized by exactly one line
/// among X, Y.
CentralizerSequence extract_centralizer_sequence(const GradedAlgebra& M, int N = -1);

/// True when build_maxclass(seq) passes Jacobi up to its top degree.
bool sequence_realizable(gf::PrimeField f, const CentralizerSequence& seq);

/// Depth-first extension of a sequence one centralizer at a time, keeping
/// only realizable prefixes; returns at most `limit` sequences of `length`
/// entries, CY branches first.
std::vector<CentralizerSequence> realizable_extensions(gf::PrimeField f,
                                                       const CentralizerSequence& prefix,
                                                       int length, std::size_t limit);

/// Same search with branch order drawn from `rng`; returns the first
/// complete sequence found. Throws ConstructionError if none exists.
CentralizerSequence random_realizable_sequence(gf::PrimeField f, const CentralizerSequence& prefix,
                                               int length, std::mt19937_64& rng);

/// Continuation used for the first-type-1 family: all CY up to c_{2p^s - 1},
/// then CX exactly at the multiples of p^s from 2p^s on. (CX at every
/// multiple of 2p^s is not realizable.)
CentralizerSequence uniqueness_sequence(std::uint32_t p, int s, int length);

}  // namespace thinlie
