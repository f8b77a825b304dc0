#include <doctest.h>

#include <cstdlib>
#include <random>

#include "fixtures.hpp"
#include "thinlie/io.hpp"

using namespace thinlie;

namespace {


/// Dense divided-power element: coefficient per eps^(i).
using DP = std::vector<Scalar>;

DP dp_mul(const DividedPowerAlgebra& A, const DP& a, const DP& b) {
  const auto& f = A.field();
  DP out(A.q(), 0);
  for (int i = 0; i < A.q(); ++i)
    for (int j = 0; j < A.q(); ++j) {
      if (!a[i] || !b[j]) continue;
      if (auto r = A.product(i, j)) out[r->second] = f.fma(out[r->second], f.mul(a[i], b[j]), r->first);
    }
  return out;
}

DP dp_unit(int q, int i) {
  DP v(q, 0);
  v[i] = 1;
  return v;
}

DP dp_d(const DividedPowerAlgebra& A, const DP& a) {
  DP out(A.q(), 0);
  for (int i = 0; i < A.q(); ++i)
    if (auto k = A.derivative(i)) out[*k] = a[i];
  return out;
}

AmbientElement rep_of_word(const TensorResult& T, const std::string& word) {
  const auto& L = T.algebra;
  for (int g = 0; g < L.basis_size(); ++g)
    if (L.basis(g).word == word) return T.representatives[g];
  FAIL("word " << word << " is not a basis word");
  return {};
}

/// Ambient coordinate of U_g (x) eps^(a).
Scalar coeff(const AmbientElement& e, int q, int g, int a) {
  const std::size_t i = static_cast<std::size_t>(g * q + a);
  return i < e.c.size() - 1 ? e.c[i] : 0;
}

}  // namespace

TEST_CASE("divided power products") {
  CHECK(*divided_power_product(1, 1, 7, 7) == std::pair<Scalar, int>{2, 2});
  for (int j = 0; j < 7; ++j) CHECK(*divided_power_product(0, j, 7, 7) == std::pair<Scalar, int>{1, j});
  CHECK_FALSE(divided_power_product(3, 5, 7, 7));
  CHECK_FALSE(divided_power_product(3, 4, 7, 7));  // C(7,3) = 35 = 0 mod 7
  CHECK_THROWS_AS(divided_power_product(7, 0, 7, 7), std::out_of_range);
  CHECK_THROWS_AS(divided_power_product(-1, 0, 7, 7), std::out_of_range);
  CHECK_THROWS(DividedPowerAlgebra(gf::PrimeField(7), 8));
}

TEST_CASE("divided powers: truncation is consistent") {
  for (int q : {7, 49}) {
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        if (i + j >= q) CHECK(gf::lucas_binom(i + j, i, 7) == 0);
  }
}

TEST_CASE("divided powers: commutative, associative, d is a derivation") {
  for (int q : {7, 49}) {
    DividedPowerAlgebra A(gf::PrimeField(7), q);
    const int step = q == 49 ? 3 : 1;
    for (int i = 0; i < q; i += step)
      for (int j = 0; j < q; j += step) {
        const DP a = dp_unit(q, i), b = dp_unit(q, j);
        const DP ab = dp_mul(A, a, b);
        CHECK(ab == dp_mul(A, b, a));
        DP lhs = dp_d(A, ab);
        DP r1 = dp_mul(A, dp_d(A, a), b), r2 = dp_mul(A, a, dp_d(A, b));
        for (int k = 0; k < q; ++k) r1[k] = A.field().add(r1[k], r2[k]);
        CHECK(lhs == r1);
        for (int k = 0; k < q; k += step) {
          const DP c = dp_unit(q, k);
          CHECK(dp_mul(A, ab, c) == dp_mul(A, a, dp_mul(A, b, c)));
        }
      }
    CHECK_FALSE(A.derivative(0));
    CHECK(*A.derivative(5) == 4);
  }
}

TEST_CASE("tensor construction: generator images") {
  const int q = 7, N = 60;
  auto M = fixtures::metabelian(7, tensor_required_degree(q, N) - 2);
  auto T = tensor_construct_full(M, q, N);
  const auto& L = T.algebra;
  // M basis: X = 0, Y = 1, U_i at index i (degree i)
  SUBCASE("[y x^i] = X (x) eps^(q-2-i) + Y (x) eps^(q-1-i)") {
    for (int i = 0; i <= q - 2; ++i) {
      auto e = rep_of_word(T, "y" + std::string(i, 'x'));
      int nonzero = 0;
      for (auto s : e.c) nonzero += s != 0;
      CHECK(nonzero == 2);
      CHECK(coeff(e, q, 0, q - 2 - i) == 1);
      CHECK(coeff(e, q, 1, q - 1 - i) == 1);
    }
  }
  SUBCASE("v_1 = X (x) 1 + Y (x) eps^(1)") {
    auto v1 = rep_of_word(T, "y" + std::string(q - 2, 'x'));
    CHECK(v1.degree == q - 1);
    CHECK(coeff(v1, q, 0, 0) == 1);
    CHECK(coeff(v1, q, 1, 1) == 1);
  }
  SUBCASE("[v_1 y] = -2 U_2 (x) eps^(q-1)") {
    auto v1 = rep_of_word(T, "y" + std::string(q - 2, 'x'));
    auto y = rep_of_word(T, "y");
    auto b = ambient_bracket(M, q, v1, y);
    CHECK(b.degree == q);
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      if (i == static_cast<std::size_t>(2 * q + q - 1)) CHECK(b.c[i] == L.field().reduce(-2));
      else CHECK(b.c[i] == 0);
    }
  }
  SUBCASE("x = -1 (x) d") {
    auto x = rep_of_word(T, "x");
    CHECK(x.c.back() == L.field().reduce(-1));
  }
}

TEST_CASE("tensor construction of the metabelian algebra is case (e)") {
  const int q = 7, N = 100;
  auto L = fixtures::tensor_metabelian(q, N);
  CHECK(validate(L).passed());
  auto P = detect(L, N);
  CHECK(P.ok());
  CHECK(P.pattern == family_pattern(fixtures::spec("e"), N + 2).truncated(N));
  CHECK(classify_regularity(L).regular);
}

TEST_CASE("tensor construction: bidegrees agree with the ambient grading") {
  const int q = 7, N = 90;
  auto seq = uniqueness_sequence(7, 1, tensor_required_degree(q, N));
  auto M = build_maxclass(gf::PrimeField(7), seq, tensor_required_degree(q, N) - 2);
  auto T = tensor_construct_full(M, q, N);
  const auto& L = T.algebra;
  for (int g = 0; g < L.basis_size(); ++g) {
    const auto& e = T.representatives[g];
    const auto bd = L.basis(g).bidegree;
    if (e.c.back()) CHECK(bd == Bidegree{1, 0});
    for (std::size_t i = 0; i + 1 < e.c.size(); ++i) {
      if (!e.c[i]) continue;
      const int mg = static_cast<int>(i) / q, a = static_cast<int>(i) % q;
      const auto mb = M.basis(mg).bidegree;  // (#X, #Y)
      CHECK(bd == Bidegree{mb.r * (q - 2) + mb.s * (q - 1) - a, mb.r + mb.s});
    }
  }
}

TEST_CASE("tensor construction follows the centralizer sequence") {
  std::mt19937_64 rng(31);
  const gf::PrimeField f(7);
  const int q = 7, N = 150;
  const int need = tensor_required_degree(q, N);
  std::vector<CentralizerSequence> seqs{all_cy(need), uniqueness_sequence(7, 1, need)};
  for (int t = 0; t < 3; ++t) seqs.push_back(random_realizable_sequence(f, CentralizerSequence::parse("Y"), need, rng));
  for (const auto& seq : seqs) {
    auto M = build_maxclass(f, seq, need - 2);
    auto L = tensor_construct(M, q, N);
    auto extracted = extract_centralizer_sequence(M);
    CHECK(detect(L, N).pattern == tq2_pattern(7, q, extracted, N + 2).truncated(N));
  }
}

TEST_CASE("tensor construction needs enough of M") {
  auto M = fixtures::metabelian(7, 10);
  CHECK_THROWS(tensor_construct(M, 7, 100));
}

TEST_CASE("commutator of right actions is the action of the bracket") {
  const auto& L = fixtures::corpus().get("b", 40);
  const gf::PrimeField& f = L.field();
  for (auto [i, j] : {std::pair{2, 5}, std::pair{7, 8}, std::pair{1, 6}}) {
    const Element u = L.unit(i, 0), v = L.unit(j, L.dim(j) - 1);
    auto C = commutator(f, right_action(L, u), right_action(L, v));
    auto R = right_action(L, L.bracket(u, v));
    CHECK(C.shift == R.shift);
    for (int k = 1; k <= std::min(C.last(), R.last()); ++k)
      if (k + i + j <= L.top()) CHECK(C.maps[k] == R.maps[k]);
  }
}

TEST_CASE("deflation of N(7) is N(7)") {
  const int Nout = 40;
  auto L = fixtures::compiled("a", deflation_source_degree(7, Nout) - 2);
  auto D = deflate_full(L, Nout);
  CHECK(validate(D.algebra).passed());
  CHECK(detect(D.algebra, Nout).pattern == family_pattern(fixtures::spec("a"), Nout + 2).truncated(Nout));
}

TEST_CASE("deflation of N(49)") {
  const int Nout = 60;
  auto L = fixtures::compiled("a", deflation_source_degree(7, Nout) - 2, 7, 49);
  auto D = deflate(L, Nout);
  CHECK(validate(D).passed());
  auto P = detect(D, Nout).pattern;
  REQUIRE(!P.entries.empty());
  CHECK(P.entries.front() == DiamondEntry{7, DiamondType::finite(6)});
  REQUIRE(P.at(13));
  CHECK(P.at(13)->type == DiamondType::fake1());
  for (const auto& e : P.entries)
    CHECK((e.type.genuine() && e.type == DiamondType::finite(6)) == (e.degree % 48 == 7));
  CHECK_FALSE(classify_regularity(D).regular);
}

TEST_CASE("deflation rejects a short source") {
  auto L = fixtures::compiled("a", 60);
  CHECK_THROWS_AS(deflate(L, 40), DegreeOverflow);
}

TEST_CASE("N(7,7) fake positions match the golden file") {
  auto L = nottingham_Nqr(7, 7, 7, 100);
  auto want = io::pattern_from_json(io::read_file(fixtures::golden("N77_pattern.json")));
  auto got = detect(L, 100).pattern;
  CHECK(got == want);
  CHECK(validate(L).passed());
  CHECK_FALSE(classify_regularity(L).regular);
  for (const auto& e : got.entries)
    if (e.type.genuine()) CHECK(e.degree % 48 == 7);
}
