#include "thinlie/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace thinlie {

std::string DiamondType::str(const gf::PrimeField& f) const {
  switch (kind) {
    case DiamondKind::Finite: return "finite:" + std::to_string(f.symmetric(mu));
    case DiamondKind::Infinite: return "infinite";
    case DiamondKind::Fake1: return "fake1";
    case DiamondKind::Fake0: return "fake0";
  }
  return "?";
}

DiamondType DiamondType::parse(std::string_view s, const gf::PrimeField& f) {
  if (s == "infinite") return infinite();
  if (s == "fake1") return fake1();
  if (s == "fake0") return fake0();
  if (s.rfind("finite:", 0) == 0) {
    long v = 0;
    try {
      std::size_t used = 0;
      std::string num(s.substr(7));
      v = std::stol(num, &used);
      if (used != num.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw PatternError("bad diamond type '" + std::string(s) + "'");
    }
    Scalar mu = f.reduce(v);
    if (mu == 0 || mu == 1)
      throw PatternError("types 0 and 1 only occur as fake diamonds; use fake0/fake1");
    return finite(mu);
  }
  throw PatternError("bad diamond type '" + std::string(s) + "'");
}

const DiamondEntry* DiamondPattern::at(int degree) const noexcept {
  for (const auto& e : entries)
    if (e.degree == degree) return &e;
  return nullptr;
}

std::optional<DiamondType> DiamondPattern::reading_at(int degree) const noexcept {
  if (const auto* e = at(degree)) return e->type;
  for (const auto& e : alternates)
    if (e.degree == degree) return e.type;
  return std::nullopt;
}

DiamondPattern DiamondPattern::truncated(int n) const {
  DiamondPattern out = *this;
  out.horizon = n;
  std::erase_if(out.entries, [n](const DiamondEntry& e) { return e.degree > n; });
  std::erase_if(out.alternates, [n](const DiamondEntry& e) { return e.degree > n; });
  return out;
}

void check_pq(std::uint32_t p, int q) {
  gf::PrimeField f(p);
  if (q <= 5) throw std::invalid_argument("q must exceed 5");
  long v = q;
  while (v % p == 0) v /= p;
  if (v != 1) throw std::invalid_argument("q must be a power of p");
}

namespace {

bool gap_allowed(DiamondKind prev, bool prev_is_first, int gap, int q) {
  if (prev_is_first) return gap == q - 1;
  if (prev == DiamondKind::Fake1) return gap == q - 1 || gap == q;
  return gap == q - 1;
}

int max_gap(DiamondKind prev, int q) { return prev == DiamondKind::Fake1 ? q : q - 1; }

}  // namespace

DiamondPattern normalize(std::uint32_t p, int q, std::vector<DiamondEntry> raw, int horizon,
                         const Fake1Admissible& admissible) {
  gf::PrimeField f(p);
  DiamondPattern out;
  out.p = p;
  out.q = q;
  out.horizon = horizon;
  for (std::size_t i = 1; i < raw.size(); ++i)
    if (raw[i].degree <= raw[i - 1].degree) throw PatternError("pattern degrees must increase strictly");
  if (raw.empty() || raw.front().degree != q || raw.front().type != DiamondType::finite(f.neg(1)))
    throw PatternError("the second diamond must be L_q of type -1");

  int prev_deg = 1;
  DiamondKind prev_kind = DiamondKind::Finite;
  bool prev_first = true;
  for (const auto& e : raw) {
    if (e.degree > horizon + 1) break;
    if (e.type.kind == DiamondKind::Finite && (e.type.mu % p == 0 || e.type.mu % p == 1))
      throw PatternError("finite type 0 or 1 at degree " + std::to_string(e.degree));
    DiamondEntry canon = e;
    bool shifted = false;
    if (e.type.kind == DiamondKind::Fake0) {
      const int m = e.degree;
      shifted = m - 1 > prev_deg && gap_allowed(prev_kind, prev_first, m - 1 - prev_deg, q) &&
                (!admissible || admissible(m - 1));
      if (shifted) canon = {m - 1, DiamondType::fake1()};
    }
    if (canon.degree > horizon) break;
    if (!shifted && !gap_allowed(prev_kind, prev_first, canon.degree - prev_deg, q)) {
      if (canon.type.kind == DiamondKind::Fake0)
        throw PatternError("no admissible reading for the type-0 fake diamond at degree " +
                           std::to_string(canon.degree));
      throw PatternError("diamond at degree " + std::to_string(canon.degree) + " is " +
                         std::to_string(canon.degree - prev_deg) + " past the previous diamond at " +
                         std::to_string(prev_deg));
    }
    if (canon.type.kind == DiamondKind::Fake0 && admissible && admissible(canon.degree - 1))
      out.alternates.push_back({canon.degree - 1, DiamondType::fake1()});
    if (canon.type.kind == DiamondKind::Fake1) out.alternates.push_back({canon.degree + 1, DiamondType::fake0()});
    out.entries.push_back(canon);
    prev_deg = canon.degree;
    prev_kind = canon.type.kind;
    prev_first = false;
  }
  if (horizon >= prev_deg + max_gap(prev_kind, q))
    throw PatternError("no diamond between degree " + std::to_string(prev_deg) + " and the horizon " +
                       std::to_string(horizon));
  return out;
}

bool in_closed_support(int q, Bidegree b) noexcept {
  if (b.r < 0 || b.s < 0) return false;
  const long v = static_cast<long>(q - 2) * b.s - b.r;
  return v >= -1 && v <= q - 2;
}

bool in_strict_support(int q, Bidegree b) noexcept {
  if (b.r < 0 || b.s < 0) return false;
  const long v = static_cast<long>(q - 2) * b.s - b.r;
  return v > -1 && v < q - 2;
}

RegularityReport classify_regularity(const GradedAlgebra& L, int N) {
  if (N < 0) N = L.N();
  const int q = L.q();
  auto sup = support(L, N);
  RegularityReport r;
  for (const auto& b : sup)
    if (!in_closed_support(q, b)) r.outside.push_back(b);
  r.regular = r.outside.empty();
  r.contains_strict = true;
  bool closed_in_support = true;
  for (int d = 1; d <= N; ++d)
    for (int s = 0; s <= d; ++s) {
      Bidegree b{d - s, s};
      const bool present = sup.count(b) > 0;
      if (in_strict_support(q, b) && !present) r.contains_strict = false;
      if (in_closed_support(q, b) && !present) closed_in_support = false;
    }
  r.equals_closed = r.regular && closed_in_support;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

DiamondType finite_or_fake(const gf::PrimeField& f, long v) {
  Scalar mu = f.reduce(v);
  if (mu == 0) return DiamondType::fake0();
  if (mu == 1) return DiamondType::fake1();
  return DiamondType::finite(mu);
}

}  // namespace

int tq2_sequence_length(int q, int horizon) {
  const int imax = (horizon - q) / (q - 1) + 1;
  return std::max(1, imax);
}

DiamondPattern tq2_pattern(std::uint32_t p, int q, const CentralizerSequence& seq, int horizon) {
  gf::PrimeField f(p);
  std::vector<DiamondEntry> raw{{q, DiamondType::finite(f.neg(1))}};
  int d = q;
  for (int i = 1;; ++i) {
    if (i > seq.last_index()) throw PatternError("centralizer sequence too short for the horizon");
    const Centralizer ci = seq.at(i);
    const int next = d + (ci == Centralizer::CX ? q : q - 1);
    if (next > horizon) break;
    if (i + 1 > seq.last_index()) throw PatternError("centralizer sequence too short for the horizon");
    raw.push_back({next, seq.at(i + 1) == Centralizer::CX ? DiamondType::fake1() : DiamondType::infinite()});
    d = next;
  }
  return normalize(p, q, std::move(raw), horizon);
}

DiamondPattern family_pattern(const FamilySpec& spec, int horizon) {
  check_pq(spec.p, spec.q);
  const gf::PrimeField f(spec.p);
  const int q = spec.q;
  const long minus1 = -1;
  std::vector<DiamondEntry> raw;
  const std::string& fam = spec.family;
  auto period = [&] {
    long ps = 1;
    for (int i = 0; i < spec.s; ++i) ps *= spec.p;
    return ps * (q - 1);
  };
  if (spec.s < 1 && (fam == "c" || fam == "d" || fam == "uniqueness"))
    throw std::invalid_argument("s must be positive");

  if (fam == "a") {
    for (int m = q; m <= horizon + 1; m += q - 1) raw.push_back({m, DiamondType::finite(f.reduce(minus1))});
  } else if (fam == "b") {
    const long mu3 = spec.mu.value_or(2);
    const long step = mu3 + 1;
    if (f.reduce(step) == 0) throw PatternError("case (b) needs a non-constant progression");
    for (int i = 2;; ++i) {
      const int m = (i - 1) * (q - 1) + 1;
      if (m > horizon + 1) break;
      raw.push_back({m, finite_or_fake(f, -1 + (i - 2) * step)});
    }
  } else if (fam == "c" || fam == "d") {
    const long per = period();
    const long second = spec.mu.value_or(2);
    const long step = second + 1;
    if (fam == "d" && f.reduce(step) == 0) throw PatternError("case (d) needs a non-constant progression");
    for (int m = q; m <= horizon + 1; m += q - 1) {
      if ((m - q) % per == 0) {
        const long j = (m - q) / per;
        raw.push_back({m, fam == "c" ? DiamondType::finite(f.reduce(minus1)) : finite_or_fake(f, -1 + j * step)});
      } else {
        raw.push_back({m, DiamondType::infinite()});
      }
    }
  } else if (fam == "e") {
    raw.push_back({q, DiamondType::finite(f.reduce(minus1))});
    for (int m = 2 * q - 1; m <= horizon + 1; m += q - 1) raw.push_back({m, DiamondType::infinite()});
  } else if (fam == "L1q" || fam == "L0q") {
    raw.push_back({q, DiamondType::finite(f.reduce(minus1))});
    for (int m = 2 * q - 1; m <= horizon + 1; m += q)
      raw.push_back({m, fam == "L1q" ? DiamondType::fake1() : DiamondType::fake0()});
  } else if (fam == "tq2") {
    return tq2_pattern(spec.p, q, spec.sequence, horizon);
  } else if (fam == "uniqueness") {
    return tq2_pattern(spec.p, q, uniqueness_sequence(spec.p, spec.s, tq2_sequence_length(q, horizon) + 1),
                       horizon);
  } else {
    throw std::invalid_argument("unknown family '" + fam + "'");
  }
  return normalize(spec.p, q, std::move(raw), horizon);
}

}  // namespace thinlie
