#pragma once

// Diamond patterns: normalization, compilation into adjoint actions,
// detection on a built algebra, named families and regularity.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thinlie/engine.hpp"
#include "thinlie/maxclass.hpp"

namespace thinlie {

enum class DiamondKind { Finite, Infinite, Fake1, Fake0 };

struct DiamondType {
  DiamondKind kind = DiamondKind::Infinite;
  Scalar mu = 0;  // meaningful for Finite only, reduced mod p

  static DiamondType finite(Scalar mu) { return {DiamondKind::Finite, mu}; }
  static DiamondType infinite() { return {DiamondKind::Infinite, 0}; }
  static DiamondType fake1() { return {DiamondKind::Fake1, 0}; }
  static DiamondType fake0() { return {DiamondKind::Fake0, 0}; }

  bool genuine() const noexcept { return kind == DiamondKind::Finite || kind == DiamondKind::Infinite; }
  bool fake() const noexcept { return !genuine(); }

  /// "finite:<int>" (symmetric residue), "infinite", "fake1" or "fake0".
  std::string str(const gf::PrimeField& f) const;
  static DiamondType parse(std::string_view s, const gf::PrimeField& f);

  friend bool operator==(const DiamondType&, const DiamondType&) = default;
};

struct DiamondEntry {
  int degree = 0;
  DiamondType type;
  friend bool operator==(const DiamondEntry&, const DiamondEntry&) = default;
};

/// Entries after the untyped L_1, starting with (q, finite:-1). The pattern
/// asserts that no other diamond occurs up to `horizon`.
struct DiamondPattern {
  std::uint32_t p = 0;
  int q = 0;
  int horizon = 0;
  std::vector<DiamondEntry> entries;
  std::vector<DiamondEntry> alternates;  // other admissible readings of fake entries

  const DiamondEntry* at(int degree) const noexcept;
  /// Entries up to degree n, horizon n.
  DiamondPattern truncated(int n) const;
  /// True if L_degree is a diamond under the canonical or an alternate reading.
  std::optional<DiamondType> reading_at(int degree) const noexcept;

  friend bool operator==(const DiamondPattern& a, const DiamondPattern& b) {
    return a.p == b.p && a.q == b.q && a.horizon == b.horizon && a.entries == b.entries;
  }
};

/// Predicate for detection: may L_m be read as a type-1 fake diamond?
using Fake1Admissible = std::function<bool(int)>;

/// Canonical reading: each Fake0 at m becomes Fake1 at m-1 when the preceding
/// gap allows it. Allowed gaps: q-1 after a genuine or Fake0 entry, q-1 or q
/// after a Fake1 entry. Throws PatternError otherwise.
DiamondPattern normalize(std::uint32_t p, int q, std::vector<DiamondEntry> raw, int horizon,
                         const Fake1Admissible& admissible = nullptr);

/// Ad matrices and basis words for a normalized pattern, over degrees 1..N+2.
AlgebraData compile_data(const DiamondPattern& pattern, int N);

struct CompiledAlgebra {
  GradedAlgebra algebra;
  ValidationReport report;
};

/// compile_data followed by construction and validation.
CompiledAlgebra compile(const DiamondPattern& pattern, int N, const ValidateOptions& opt = {});

struct DetectionReport {
  DiamondPattern pattern;
  std::vector<std::string> issues;  // untypable components and other anomalies
  bool ok() const noexcept { return issues.empty(); }
};

/// Reads the (normalized) diamond pattern of L up to degree N (default L.N()).
DetectionReport detect(const GradedAlgebra& L, int N = -1);

/// Type data at a genuine diamond: [wyx] = lambda c and [wxy] = kappa c.
struct DiamondCoefficients {
  Scalar lambda = 0;
  Scalar kappa = 0;
  bool relations_hold = false;  // [wxx] = 0 = [wyy]
};
DiamondCoefficients diamond_coefficients(const GradedAlgebra& L, int m);

struct RegularityReport {
  bool regular = false;            // support within S_<=(q)
  bool contains_strict = false;    // S_<(q) (degrees <= N) within support
  bool equals_closed = false;      // support = S_<=(q) (degrees <= N)
  std::vector<Bidegree> outside;   // support points outside S_<=(q)
};

bool in_closed_support(int q, Bidegree b) noexcept;
bool in_strict_support(int q, Bidegree b) noexcept;
RegularityReport classify_regularity(const GradedAlgebra& L, int N = -1);

// ---------------------------------------------------------------------------
// Families

struct FamilySpec {
  std::string family;  // a | b | c | d | e | L1q | L0q | tq2 | uniqueness
  std::uint32_t p = 7;
  int q = 7;
  int s = 1;                      // c, d, uniqueness
  std::optional<long> mu;         // b: type of the third diamond; d: second finite type
  CentralizerSequence sequence;   // tq2
};

/// The family's normalized pattern with horizon `horizon`.
DiamondPattern family_pattern(const FamilySpec& spec, int horizon);

/// Pattern of the class T_{q,2} attached to a centralizer sequence: diamonds
/// d_1 = q, d_{i+1} = d_i + q - 1 (c_i = CY) or + q (c_i = CX); type at d_i,
/// i >= 2, is infinite for CY and fake1 for CX.
DiamondPattern tq2_pattern(std::uint32_t p, int q, const CentralizerSequence& seq, int horizon);

/// Number of centralizer entries tq2_pattern needs to reach `horizon`.
int tq2_sequence_length(int q, int horizon);

/// Throws std::invalid_argument unless q is a power of p with q > 5.
void check_pq(std::uint32_t p, int q);

}  // namespace thinlie
