#include "thinlie/maxclass.hpp"

#include <algorithm>
#include <functional>

namespace thinlie {

Centralizer CentralizerSequence::at(int i) const {
  if (i == 1) return Centralizer::CY;
  if (i < 1 || i > last_index())
    throw ConstructionError("centralizer c_" + std::to_string(i) + " is not in the sequence");
  return entries[i - 2];
}

std::string CentralizerSequence::str() const {
  std::string s;
  for (auto c : entries) s += c == Centralizer::CY ? 'Y' : 'X';
  return s;
}

CentralizerSequence CentralizerSequence::parse(std::string_view s) {
  CentralizerSequence seq;
  for (char c : s) {
    if (c == 'Y' || c == 'y') seq.entries.push_back(Centralizer::CY);
    else if (c == 'X' || c == 'x') seq.entries.push_back(Centralizer::CX);
    else throw ConstructionError(std::string("bad centralizer character '") + c + "'");
  }
  return seq;
}

bool CentralizerSequence::well_formed() const noexcept {
  if (entries.empty()) return true;
  if (entries.front() != Centralizer::CY) return false;
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i] == Centralizer::CX && entries[i - 1] == Centralizer::CX) return false;
  return true;
}

CentralizerSequence all_cy(int length) {
  CentralizerSequence s;
  s.entries.assign(std::max(length, 0), Centralizer::CY);
  return s;
}

GradedAlgebra build_maxclass(gf::PrimeField f, const CentralizerSequence& seq, int N) {
  if (!seq.well_formed()) throw ConstructionError("centralizer sequence must start with CY and keep CX isolated");
  if (N < 1) throw ConstructionError("N must be positive");
  const int top = N + 2;
  if (seq.last_index() < top - 1)
    throw ConstructionError("centralizer sequence of length " + std::to_string(seq.entries.size()) +
                            " is too short for degree " + std::to_string(top));
  AlgebraData d(f);
  d.q = 0;
  d.N = N;
  d.top = top;
  d.dims.assign(top + 1, 1);
  d.dims[1] = 2;
  d.ad_x.resize(top);
  d.ad_y.resize(top);
  const int nb = top + 1;
  d.parent.assign(nb, -1);
  d.letter.assign(nb, 0);
  d.letter[0] = 'x';
  d.letter[1] = 'y';
  // global index of U_i is i for i >= 2 (X = 0, Y = 1)
  {
    gf::Matrix ax(1, 2), ay(1, 2);
    ax(0, 1) = 1;
    ay(0, 0) = f.neg(1);
    d.ad_x[1] = ax;
    d.ad_y[1] = ay;
    d.parent[2] = 1;
    d.letter[2] = 'x';
  }
  for (int i = 2; i < top; ++i) {
    gf::Matrix ax(1, 1), ay(1, 1);
    const bool cx = seq.at(i) == Centralizer::CX;
    (cx ? ay : ax)(0, 0) = 1;
    d.ad_x[i] = ax;
    d.ad_y[i] = ay;
    d.parent[i + 1] = i;
    d.letter[i + 1] = cx ? 'y' : 'x';
  }
  return GradedAlgebra(std::move(d));
}

CentralizerSequence extract_centralizer_sequence(const GradedAlgebra& M, int N) {
  if (N < 0) N = M.N();
  N = std::min(N, M.top() - 1);
  CentralizerSequence seq;
  for (int i = 2; i <= N; ++i) {
    if (M.dim(i) != 1) throw ConstructionError("component " + std::to_string(i) + " is not one-dimensional");
    const bool x0 = M.ad_matrix('x', i).is_zero(), y0 = M.ad_matrix('y', i).is_zero();
    if (x0 == y0)
      throw ConstructionError("component " + std::to_string(i) + " is not centralized by exactly one of X, Y");
    seq.entries.push_back(x0 ? Centralizer::CX : Centralizer::CY);
  }
  return seq;
}

bool sequence_realizable(gf::PrimeField f, const CentralizerSequence& seq) {
  if (!seq.well_formed()) return false;
  const int N = seq.last_index() - 1;
  if (N < 1) return true;
  auto M = build_maxclass(f, seq, N);
  ValidateOptions opt;
  opt.parallel = false;
  return validate(M, opt).passed();
}

namespace {

bool search(gf::PrimeField f, CentralizerSequence& cur, std::size_t length,
            const std::function<std::array<Centralizer, 2>()>& order,
            const std::function<bool(const CentralizerSequence&)>& accept) {
  if (cur.entries.size() >= length) return accept(cur);
  for (Centralizer c : order()) {
    if (c == Centralizer::CX && (cur.entries.empty() || cur.entries.back() == Centralizer::CX)) continue;
    cur.entries.push_back(c);
    if (sequence_realizable(f, cur) && search(f, cur, length, order, accept)) {
      cur.entries.pop_back();
      return true;
    }
    cur.entries.pop_back();
  }
  return false;
}

}  // namespace

std::vector<CentralizerSequence> realizable_extensions(gf::PrimeField f, const CentralizerSequence& prefix,
                                                       int length, std::size_t limit) {
  std::vector<CentralizerSequence> out;
  if (!sequence_realizable(f, prefix) || limit == 0) return out;
  CentralizerSequence cur = prefix;
  search(
      f, cur, static_cast<std::size_t>(length),
      [] { return std::array<Centralizer, 2>{Centralizer::CY, Centralizer::CX}; },
      [&](const CentralizerSequence& s) {
        out.push_back(s);
        return out.size() >= limit;
      });
  return out;
}

CentralizerSequence random_realizable_sequence(gf::PrimeField f, const CentralizerSequence& prefix, int length,
                                               std::mt19937_64& rng) {
  CentralizerSequence cur = prefix, found;
  bool ok = sequence_realizable(f, prefix) &&
            search(
                f, cur, static_cast<std::size_t>(length),
                [&] {
                  std::array<Centralizer, 2> o{Centralizer::CY, Centralizer::CX};
                  if (rng() & 1) std::swap(o[0], o[1]);
                  return o;
                },
                [&](const CentralizerSequence& s) {
                  found = s;
                  return true;
                });
  if (!ok) throw ConstructionError("no realizable extension of " + prefix.str());
  return found;
}

CentralizerSequence uniqueness_sequence(std::uint32_t p, int s, int length) {
  long ps = 1;
  for (int i = 0; i < s; ++i) ps *= p;
  CentralizerSequence seq;
  for (int i = 2; i < length + 2; ++i)
    seq.entries.push_back(i >= 2 * ps && i % ps == 0 ? Centralizer::CX : Centralizer::CY);
  return seq;
}

}  // namespace thinlie
