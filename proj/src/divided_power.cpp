#include <stdexcept>
#include <string>

#include "thinlie/constructions.hpp"

namespace thinlie {

DividedPowerAlgebra::DividedPowerAlgebra(gf::PrimeField f, int q) : f_(f), q_(q) {
  long v = 1;
  while (v < q) v *= f.characteristic();
  if (q < 1 || v != q) throw std::invalid_argument("divided power algebra: q must be a power of p");
}

std::optional<std::pair<Scalar, int>> DividedPowerAlgebra::product(int i, int j) const {
  if (i < 0 || j < 0 || i >= q_ || j >= q_)
    throw std::out_of_range("divided power index out of range: (" + std::to_string(i) + ", " + std::to_string(j) +
                            ")");
  if (i + j >= q_) return std::nullopt;
  const Scalar c = gf::lucas_binom(static_cast<std::uint64_t>(i + j), static_cast<std::uint64_t>(i),
                                   f_.characteristic());
  if (c == 0) return std::nullopt;
  return std::pair{c, i + j};
}

std::optional<int> DividedPowerAlgebra::derivative(int i) const {
  if (i < 0 || i >= q_) throw std::out_of_range("divided power index out of range");
  if (i == 0) return std::nullopt;
  return i - 1;
}

std::optional<std::pair<Scalar, int>> divided_power_product(int i, int j, int q, std::uint32_t p) {
  return DividedPowerAlgebra(gf::PrimeField(p), q).product(i, j);
}

}  // namespace thinlie
