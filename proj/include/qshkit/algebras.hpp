#pragma once

#include "qshkit/lie.hpp"

namespace qshkit::algebras {

enum class NumberField { real, complex, quaternionic };

/// Complex structure on R^{2n} with coordinate pairs (Re z, Im z).
RMatrix complex_unit(std::size_t n);
/// Complex conjugation on R^{2n}.
RMatrix complex_conjugation(std::size_t n);
/// omega_0 = -g_0^2 J_2 on H^n = R^{4n}.
RMatrix standard_omega(std::size_t n);
/// Left multiplication by a quaternion unit on the listed quaternionic coordinates of H^n.
RMatrix left_unit(Unit u, std::size_t n, std::size_t first, std::size_t count);

/// X commutes with the right quaternionic structure (J1, J2) of H^n.
std::vector<LinearCondition> quaternionic_linear(std::size_t n);

MatrixLieAlgebra sl(std::size_t n, NumberField f);
/// su(p, q) on C^{p+q} = R^{2(p+q)}.
MatrixLieAlgebra su(std::size_t p, std::size_t q);
/// so(p, q) on R^{p+q}.
MatrixLieAlgebra so(std::size_t p, std::size_t q);
/// so*(2n) on H^n = R^{4n}.
MatrixLieAlgebra so_star(std::size_t n);
/// compact sp(n) on H^n = R^{4n}.
MatrixLieAlgebra sp(std::size_t n);

/// Subalgebra of g cut out by additional conditions.
MatrixLieAlgebra restrict(std::string name, const MatrixLieAlgebra& g, const std::vector<LinearCondition>& conditions);

/// Support on the given consecutive index blocks (block-diagonal embedding).
LinearCondition block_embedding(const std::vector<std::size_t>& block_sizes);
/// Support on the leading count x count corner.
LinearCondition corner_embedding(std::size_t count, std::size_t size);

}  // namespace qshkit::algebras
