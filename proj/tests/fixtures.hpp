#pragma once

// Shared test fixtures: the corpus of named algebras and an independent
// bracket oracle built from the regular representation.

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "thinlie/constructions.hpp"
#include "thinlie/engine.hpp"
#include "thinlie/maxclass.hpp"
#include "thinlie/patterns.hpp"

namespace fixtures {

#ifndef THINLIE_GOLDEN_DEFAULT
#define THINLIE_GOLDEN_DEFAULT "tests/golden"
#endif

inline std::string golden(const std::string& name) {
  const char* dir = std::getenv("THINLIE_GOLDEN_DIR");
  return std::string(dir ? dir : THINLIE_GOLDEN_DEFAULT) + "/" + name;
}

using namespace thinlie;

inline FamilySpec spec(const std::string& family, std::uint32_t p = 7, int q = 7, int s = 1) {
  FamilySpec f;
  f.family = family;
  f.p = p;
  f.q = q;
  f.s = s;
  return f;
}

inline GradedAlgebra family_algebra(const FamilySpec& s, int N) {
  return GradedAlgebra(compile_data(family_pattern(s, N + 2), N));
}

inline GradedAlgebra compiled(const std::string& family, int N, std::uint32_t p = 7, int q = 7, int s = 1) {
  return family_algebra(spec(family, p, q, s), N);
}

/// Metabelian algebra of maximal class: all centralizers CY.
inline GradedAlgebra metabelian(std::uint32_t p, int N) {
  return build_maxclass(gf::PrimeField(p), all_cy(N + 2), N);
}

/// T_{q,2}(metabelian) by the tensor construction.
inline GradedAlgebra tensor_metabelian(int q, int N) {
  const int need = tensor_required_degree(q, N);
  return tensor_construct(metabelian(7, need - 2), q, N);
}

/// Corpus entries named as in the acceptance list; built once per process.
struct Corpus {
  std::vector<std::string> names{"a", "b", "c", "d", "e", "L1q", "L0q", "uniqueness", "tq2_metabelian", "N77"};

  const GradedAlgebra& get(const std::string& name, int N) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = name + "/" + std::to_string(N);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    std::unique_ptr<GradedAlgebra> L;
    if (name == "tq2_metabelian") L = std::make_unique<GradedAlgebra>(tensor_metabelian(7, N));
    else if (name == "N77") L = std::make_unique<GradedAlgebra>(nottingham_Nqr(7, 7, 7, N));
    else L = std::make_unique<GradedAlgebra>(compiled(name, N));
    return *cache_.emplace(key, std::move(L)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::string, std::unique_ptr<GradedAlgebra>> cache_;
};

inline Corpus& corpus() {
  static Corpus c;
  return c;
}

/// Right-regular representation: ad(b) as a global matrix, built from the
/// generator matrices alone through ad([a, t]) = ad(t) ad(a) - ad(a) ad(t)
/// (columns are sources). Independent of the engine's bracket table.
class RegularOracle {
 public:
  explicit RegularOracle(const GradedAlgebra& L) : L_(L), n_(L.basis_size()) {
    const auto& f = L.field();
    auto gen = [&](char t) {
      gf::Matrix m(n_, n_);
      for (int k = 1; k < L.top(); ++k) {
        const auto& a = L.ad_matrix(t, k);
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t c = 0; c < a.cols(); ++c) m(L.global(k + 1, r), L.global(k, c)) = a(r, c);
      }
      return m;
    };
    ad_.push_back(gen('x'));
    ad_.push_back(gen('y'));
    for (int g = 2; g < n_; ++g) {
      const auto& b = L.basis(g);
      const auto& A = ad_[b.parent];
      const auto& T = ad_[b.letter == 'x' ? 0 : 1];
      ad_.push_back(gf::add(f, gf::multiply(f, T, A), gf::scale(f, gf::multiply(f, A, T), f.neg(1))));
    }
  }

  /// [b_i, b_j] as global coordinates.
  gf::Vector bracket(int i, int j) const { return ad_[j].column(i); }

  /// Same as an Element of degree deg i + deg j.
  Element bracket_element(int i, int j) const {
    const int d = L_.basis(i).degree + L_.basis(j).degree;
    Element e{d, {0, 0}};
    auto v = bracket(i, j);
    for (int k = 0; k < L_.dim(d); ++k) e.c[k] = v[L_.global(d, k)];
    return e;
  }

 private:
  const GradedAlgebra& L_;
  int n_;
  std::vector<gf::Matrix> ad_;
};

}  // namespace fixtures
