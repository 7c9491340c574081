#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "qshkit/qshlin.hpp"
#include "qshkit/tensor.hpp"

namespace qshkit {

using RMatrix = Matrix<Rational>;
using RVec = Vec<Rational>;

/// Linear span of real square matrices with exact entries. The stored basis is
/// canonical (reduced echelon form of the flattened spanning set), so
/// coordinates are read off at the pivot entries.
class MatrixSpan {
 public:
  MatrixSpan() = default;
  MatrixSpan(std::size_t matrix_size, const std::vector<RMatrix>& spanning);

  std::size_t dim() const { return basis_.size(); }
  std::size_t matrix_size() const { return size_; }
  const std::vector<RMatrix>& basis() const { return basis_; }
  const RMatrix& operator[](std::size_t i) const { return basis_[i]; }

  std::optional<RVec> try_coordinates(const RMatrix& x) const;
  RVec coordinates(const RMatrix& x) const;
  bool contains(const RMatrix& x) const { return try_coordinates(x).has_value(); }
  RMatrix element(const RVec& c) const;

 private:
  std::size_t size_ = 0;
  std::vector<RMatrix> basis_;
  std::vector<std::size_t> pivots_;
  // nonzero entries of each basis matrix: (flat index, value)
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;
};

/// Matrix Lie algebra; closure under the commutator is verified on construction
/// and the adjoint matrices are kept.
class MatrixLieAlgebra : public MatrixSpan {
 public:
  MatrixLieAlgebra() = default;
  MatrixLieAlgebra(std::string name, const MatrixSpan& span);

  const std::string& name() const { return name_; }
  /// ad(X_i) in basis coordinates.
  const RMatrix& ad(std::size_t i) const { return ad_[i]; }
  /// ad(x) for an arbitrary element.
  RMatrix ad_of(const RMatrix& x) const;

 private:
  std::string name_;
  std::vector<RMatrix> ad_;
};

/// A linear map on matrices whose vanishing is required.
using LinearCondition = std::function<RMatrix(const RMatrix&)>;

/// Solution space of the conditions inside span(start) (all matrices if start is empty).
MatrixSpan solve_linear_conditions(std::size_t matrix_size, const std::vector<LinearCondition>& conditions,
                                   const std::vector<RMatrix>& start = {});

/// Subalgebra cut out by linear conditions; throws StructuralError if the
/// solution space is not closed under brackets.
MatrixLieAlgebra stabilizer_subalgebra(std::string name, std::size_t matrix_size,
                                       const std::vector<LinearCondition>& conditions,
                                       const std::vector<RMatrix>& start = {});

/// Conditions for common realizations.
namespace cond {
LinearCondition commutes_with(RMatrix a);
LinearCondition anticommutes_with(RMatrix a);
/// X^T F + F X = 0
LinearCondition preserves_form(RMatrix f);
/// tr(A X) = 0 (A = identity for the plain trace)
LinearCondition trace_against(RMatrix a);
/// entries (i,j) with allowed(i,j) false must vanish
LinearCondition support(std::function<bool(std::size_t, std::size_t)> allowed, std::size_t size);
/// block-diagonal support for consecutive index blocks of the given sizes
LinearCondition block_diagonal(const std::vector<std::size_t>& block_sizes);
}  // namespace cond

/// B_ij = tr(ad X_i ad X_j)
RMatrix killing_form(const MatrixLieAlgebra& g);

RMatrix center_coordinates(const MatrixLieAlgebra& l);
MatrixSpan center(const MatrixLieAlgebra& l);

/// g = l + m with m the Killing-orthogonal complement of l.
class SymmetricPair {
 public:
  /// Builds the pair from explicit data without requiring the bracket relations.
  SymmetricPair(MatrixLieAlgebra g, MatrixLieAlgebra l, MatrixSpan m);

  const MatrixLieAlgebra& g() const { return g_; }
  const MatrixLieAlgebra& l() const { return l_; }
  const MatrixSpan& m() const { return m_; }
  std::size_t dim_m() const { return m_.dim(); }

  const RMatrix& killing() const { return killing_; }
  /// Killing form restricted to m, in m-coordinates.
  const RMatrix& killing_m() const { return killing_m_; }

  bool killing_orthogonal() const { return killing_orthogonal_; }
  bool reductive() const { return reductive_; }
  bool symmetric() const { return symmetric_; }
  bool mm_spans_l() const { return mm_spans_l_; }

  struct Parts {
    RVec l;
    RVec m;
  };
  /// Coordinates of x in l and m.
  Parts decompose(const RMatrix& x) const;
  RMatrix l_part(const RMatrix& x) const { return l_.element(decompose(x).l); }
  RMatrix m_element(const RVec& c) const { return m_.element(c); }

  /// ad(x) restricted to m in m-coordinates; throws if ad(x) does not preserve m.
  RMatrix ad_m(const RMatrix& x) const;
  /// m-component of ad(x) on m, and the largest l-component encountered.
  std::pair<RMatrix, Rational> ad_m_projected(const RMatrix& x) const;

  /// [X, Y]_m for X, Y given in m-coordinates.
  BilinearMap<Rational> m_bracket() const;

 private:
  MatrixLieAlgebra g_;
  MatrixLieAlgebra l_;
  MatrixSpan m_;
  RMatrix killing_;
  RMatrix killing_m_;
  RMatrix decomp_inv_;
  bool killing_orthogonal_ = false;
  bool reductive_ = false;
  bool symmetric_ = false;
  bool mm_spans_l_ = false;
};

/// Throws StructuralError if the Killing form is degenerate on l or [l, m] is not in m.
SymmetricPair reductive_split(const MatrixLieAlgebra& g, const MatrixLieAlgebra& l);

enum class StructureKind { complex, paracomplex };

/// Scaled ad_m(Z0) squaring to -Id (complex) or +Id (paracomplex).
RMatrix isotropy_structure(const RMatrix& z0, const SymmetricPair& pair, StructureKind kind);

/// Endomorphisms of m commuting with ad(x)|_m for every x in the action.
MatrixSpan commutant_on_m(const SymmetricPair& pair, const std::vector<RMatrix>& l_action);

/// (A, B, AB) from the traceless part of an associative commutant.
AdmissibleTriple<Rational> quaternionic_triple_in_commutant(const MatrixSpan& comm);

/// (ad x / s, ad y / t, product) normalized to square to -Id.
AdmissibleTriple<Rational> su2_triple(const SymmetricPair& pair, const RMatrix& x, const RMatrix& y);

struct InvariantTensorSet {
  RMatrix I;
  StructureKind kind = StructureKind::complex;
  std::optional<AdmissibleTriple<Rational>> triple;
  RMatrix omega;
  RMatrix killing_m;
};

/// omega(X, Z) = B_m(X, I Z) (paracomplex) or -B_m(X, I Z) (complex).
RMatrix invariant_two_form(const SymmetricPair& pair, const RMatrix& i_o, StructureKind kind);

struct OriginCalculus {
  BilinearMap<Rational> torsion;  // -[X,Y]_m
  Tensor3<Rational> d_omega;
  Rational torsion_residual;
  Rational d_omega_residual;
  Rational reductive_residual;  // largest l-component of [l, m]
  std::map<std::string, Rational> equivariance;
};

OriginCalculus nomizu_origin_calculus(const SymmetricPair& pair, const InvariantTensorSet& tensors);

/// [[a, b], c] in span(m_hat) for all a, b, c in m_hat (m-coordinates).
bool totally_geodesic_check(const SymmetricPair& pair, const Subspace<Rational>& m_hat);

/// m-coordinates subspace of m cut out by a subalgebra h (m ∩ h).
Subspace<Rational> m_intersection(const SymmetricPair& pair, const MatrixSpan& h);

RVec flatten(const RMatrix& x);

}  // namespace qshkit
