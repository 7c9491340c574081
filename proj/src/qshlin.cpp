#include "qshkit/qshlin.hpp"

namespace qshkit {
namespace {

// e_a e_b = sign * e_c
struct Product {
  int sign;
  int unit;
};

constexpr Product kTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
};

}  // namespace

Matrix<Rational> left_mult(Unit u) {
  Matrix<Rational> m(4, 4);
  const int a = static_cast<int>(u);
  for (int b = 0; b < 4; ++b) {
    Product p = kTable[a][b];
    m(static_cast<std::size_t>(p.unit), static_cast<std::size_t>(b)) = p.sign;
  }
  return m;
}

Matrix<Rational> right_mult(Unit u) {
  Matrix<Rational> m(4, 4);
  const int a = static_cast<int>(u);
  for (int b = 0; b < 4; ++b) {
    Product p = kTable[b][a];
    m(static_cast<std::size_t>(p.unit), static_cast<std::size_t>(b)) = p.sign;
  }
  return m;
}

Matrix<Rational> diagonal_blocks(const Matrix<Rational>& block, std::size_t n) {
  const std::size_t b = block.rows();
  Matrix<Rational> m(b * n, b * n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) m(q * b + i, q * b + j) = block(i, j);
  return m;
}

}  // namespace qshkit
