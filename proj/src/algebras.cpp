#include "qshkit/algebras.hpp"

namespace qshkit::algebras {

RMatrix complex_unit(std::size_t n) {
  return diagonal_blocks(RMatrix::from_rows({{0, -1}, {1, 0}}), n);
}

RMatrix complex_conjugation(std::size_t n) {
  return diagonal_blocks(RMatrix::from_rows({{1, 0}, {0, -1}}), n);
}

RMatrix standard_omega(std::size_t n) {
  return -(standard_g2<Rational>(n) * standard_triple<Rational>(n).J(2));
}

RMatrix left_unit(Unit u, std::size_t n, std::size_t first, std::size_t count) {
  RMatrix m(4 * n, 4 * n);
  RMatrix b = left_mult(u);
  for (std::size_t q = first; q < first + count; ++q)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(4 * q + i, 4 * q + j) = b(i, j);
  return m;
}

std::vector<LinearCondition> quaternionic_linear(std::size_t n) {
  auto t = standard_triple<Rational>(n);
  return {cond::commutes_with(t.J(1)), cond::commutes_with(t.J(2))};
}

MatrixLieAlgebra sl(std::size_t n, NumberField f) {
  switch (f) {
    case NumberField::real:
      return stabilizer_subalgebra("sl(" + std::to_string(n) + ",R)", n, {cond::trace_against(RMatrix::identity(n))});
    case NumberField::complex: {
      RMatrix j = complex_unit(n);
      return stabilizer_subalgebra("sl(" + std::to_string(n) + ",C)", 2 * n,
                                   {cond::commutes_with(j), cond::trace_against(RMatrix::identity(2 * n)),
                                    cond::trace_against(j)});
    }
    case NumberField::quaternionic: {
      auto c = quaternionic_linear(n);
      c.push_back(cond::trace_against(RMatrix::identity(4 * n)));
      return stabilizer_subalgebra("sl(" + std::to_string(n) + ",H)", 4 * n, c);
    }
  }
  throw std::invalid_argument("unknown number field");
}

MatrixLieAlgebra su(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  RMatrix f(2 * n, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) f(i, i) = i / 2 < p ? 1 : -1;
  RMatrix j = complex_unit(n);
  return stabilizer_subalgebra("su(" + std::to_string(p) + "," + std::to_string(q) + ")", 2 * n,
                               {cond::commutes_with(j), cond::preserves_form(f), cond::trace_against(j)});
}

MatrixLieAlgebra so(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  RMatrix f(n, n);
  for (std::size_t i = 0; i < n; ++i) f(i, i) = i < p ? 1 : -1;
  return stabilizer_subalgebra("so(" + std::to_string(p) + "," + std::to_string(q) + ")", n, {cond::preserves_form(f)});
}

MatrixLieAlgebra so_star(std::size_t n) {
  auto c = quaternionic_linear(n);
  c.push_back(cond::preserves_form(standard_omega(n)));
  return stabilizer_subalgebra("so*(" + std::to_string(2 * n) + ")", 4 * n, c);
}

MatrixLieAlgebra sp(std::size_t n) {
  auto c = quaternionic_linear(n);
  c.push_back(cond::preserves_form(RMatrix::identity(4 * n)));
  return stabilizer_subalgebra("sp(" + std::to_string(n) + ")", 4 * n, c);
}

MatrixLieAlgebra restrict(std::string name, const MatrixLieAlgebra& g, const std::vector<LinearCondition>& conditions) {
  return stabilizer_subalgebra(std::move(name), g.matrix_size(), conditions, g.basis());
}

LinearCondition block_embedding(const std::vector<std::size_t>& block_sizes) { return cond::block_diagonal(block_sizes); }

LinearCondition corner_embedding(std::size_t count, std::size_t size) {
  return cond::support([count](std::size_t i, std::size_t j) { return i < count && j < count; }, size);
}

}  // namespace qshkit::algebras
