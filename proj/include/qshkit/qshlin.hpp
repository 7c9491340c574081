#pragma once

#include <array>
#include <string>

#include "qshkit/linalg.hpp"

namespace qshkit {

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Named residuals; passes iff every residual is within tolerance.
struct VerificationReport {
  struct Entry {
    std::string name;
    double residual;
    bool pass;
  };
  std::vector<Entry> entries;

  bool passes() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
  }
  double max_residual() const {
    double m = 0;
    for (const auto& e : entries) m = std::max(m, e.residual);
    return m;
  }
};

template <class T>
void record(VerificationReport& r, std::string name, const T& residual, double tol) {
  r.entries.push_back({std::move(name), Field<T>::to_double(residual), Field<T>::is_zero(residual, tol)});
}

/// Cyclic successors (b, c) of a in {1,2,3}.
inline std::pair<int, int> cyclic(int a) {
  switch (a) {
    case 1: return {2, 3};
    case 2: return {3, 1};
    case 3: return {1, 2};
    default: throw std::invalid_argument("triple index must be 1, 2 or 3");
  }
}

template <class T>
struct AdmissibleTriple {
  std::array<Matrix<T>, 3> mats;

  const Matrix<T>& J(int a) const {
    if (a < 1 || a > 3) throw std::invalid_argument("triple index must be 1, 2 or 3");
    return mats[static_cast<std::size_t>(a - 1)];
  }
  std::size_t dim() const { return mats[0].rows(); }

  /// (J_b, J_c, J_a) for a = 2 or (J_c, J_a, J_b) for a = 3: puts J_a first.
  AdmissibleTriple rotated(int a) const {
    auto [b, c] = cyclic(a);
    return {{J(a), J(b), J(c)}};
  }

  /// Restriction to an invariant subspace, in its basis coordinates.
  AdmissibleTriple restrict_to(const Subspace<T>& w, double tol = kRelTol) const {
    return {{w.restrict_endomorphism(mats[0], tol), w.restrict_endomorphism(mats[1], tol),
             w.restrict_endomorphism(mats[2], tol)}};
  }
};

/// Quaternion units 1, i, j, k acting on R^4 = span(1, i, j, k).
enum class Unit { one = 0, i = 1, j = 2, k = 3 };

/// 4x4 matrix of q -> u q.
Matrix<Rational> left_mult(Unit u);
/// 4x4 matrix of q -> q u.
Matrix<Rational> right_mult(Unit u);
/// Block-diagonal copy of a 4x4 matrix acting on each quaternionic coordinate.
Matrix<Rational> diagonal_blocks(const Matrix<Rational>& block, std::size_t n);

template <class T>
struct SymmetricForm {
  Matrix<T> g;
  Inertia inertia;
};

template <class T>
struct LinearModel {
  std::size_t n = 0;
  AdmissibleTriple<T> triple;
  Matrix<T> omega;
  std::array<SymmetricForm<T>, 3> metrics;
};

template <class T>
Inertia signature_of(const Matrix<T>& g) {
  if constexpr (Field<T>::exact) {
    return signature(g);
  } else {
    return signature(g, 1e-8);
  }
}

/// Hypercomplex triple J_a = right multiplication by -i, -j, -k on H^n = R^{4n}.
template <class T>
AdmissibleTriple<T> standard_triple(std::size_t n) {
  if (n < 1) throw std::invalid_argument("quaternionic dimension must be positive");
  return {{convert<T>(diagonal_blocks(-right_mult(Unit::i), n)), convert<T>(diagonal_blocks(-right_mult(Unit::j), n)),
           convert<T>(diagonal_blocks(-right_mult(Unit::k), n))}};
}

/// g_0^2(a + bj, c + dj) = Re(a^t c + b^t d) with per-coordinate order (Re a, Im a, Re b, Im b).
template <class T>
Matrix<T> standard_g2(std::size_t n) {
  Matrix<T> g(4 * n, 4 * n);
  for (std::size_t q = 0; q < n; ++q) {
    g(4 * q, 4 * q) = T(1);
    g(4 * q + 1, 4 * q + 1) = T(-1);
    g(4 * q + 2, 4 * q + 2) = T(1);
    g(4 * q + 3, 4 * q + 3) = T(-1);
  }
  return g;
}

template <class T>
LinearModel<T> standard_model(std::size_t n) {
  if (n < 2) throw std::invalid_argument("standard model requires n >= 2");
  LinearModel<T> m;
  m.n = n;
  m.triple = standard_triple<T>(n);
  m.omega = -(standard_g2<T>(n) * m.triple.J(2));
  for (int a = 1; a <= 3; ++a) {
    Matrix<T> g = m.omega * m.triple.J(a);
    m.metrics[static_cast<std::size_t>(a - 1)] = {g, signature_of(g)};
  }
  return m;
}

template <class T>
VerificationReport check_admissible_triple(const AdmissibleTriple<T>& t, double tol = 1e-10) {
  const std::size_t d = t.dim();
  for (int a = 1; a <= 3; ++a)
    if (t.J(a).rows() != d || t.J(a).cols() != d) throw StructuralError("triple matrices must be square of equal size");
  if (d % 4 != 0) throw StructuralError("triple size must be divisible by 4");
  const Matrix<T> id = Matrix<T>::identity(d);
  VerificationReport r;
  for (int a = 1; a <= 3; ++a) record(r, "J" + std::to_string(a) + "^2=-I", (t.J(a) * t.J(a) + id).max_abs(), tol);
  record(r, "J1J2=J3", (t.J(1) * t.J(2) - t.J(3)).max_abs(), tol);
  record(r, "J2J1=-J3", (t.J(2) * t.J(1) + t.J(3)).max_abs(), tol);
  return r;
}

template <class T>
struct ScalarFormCheck {
  bool ok = false;
  bool skew = false;
  bool full_rank = false;
  bool hermitian = false;
  double residual = 0.0;
};

template <class T>
ScalarFormCheck<T> is_scalar_two_form(const Matrix<T>& omega, const AdmissibleTriple<T>& t, double tol = 1e-10) {
  if (omega.rows() != t.dim() || !omega.square()) throw StructuralError("two-form size mismatch");
  ScalarFormCheck<T> c;
  T skew = (omega + omega.transpose()).max_abs();
  T herm(0);
  for (int a = 1; a <= 3; ++a) {
    T r = (t.J(a).transpose() * omega * t.J(a) - omega).max_abs();
    if (r > herm) herm = r;
  }
  c.skew = Field<T>::is_zero(skew, tol);
  c.hermitian = Field<T>::is_zero(herm, tol);
  c.full_rank = rank(omega) == omega.rows();
  c.residual = std::max(Field<T>::to_double(skew), Field<T>::to_double(herm));
  c.ok = c.skew && c.hermitian && c.full_rank;
  return c;
}

/// g(X, Y) = omega(X, J Y).
template <class T>
SymmetricForm<T> metric_from_pair(const Matrix<T>& omega, const Matrix<T>& j, double tol = 1e-10) {
  const Matrix<T> id = Matrix<T>::identity(j.rows());
  if (!Field<T>::is_zero((j * j + id).max_abs(), tol)) throw StructuralError("J does not square to -I");
  Matrix<T> g = omega * j;
  if (!Field<T>::is_zero((g - g.transpose()).max_abs(), tol))
    throw StructuralError("omega(X, JY) is not symmetric: incompatible pair");
  if (!Field<T>::is_zero((j.transpose() * g * j - g).max_abs(), tol))
    throw StructuralError("metric is not J-Hermitian");
  if (rank(g) != g.rows()) throw StructuralError("metric is degenerate");
  return {g, signature_of(g)};
}

/// {u : omega(u, w) = 0 for all w in W}.
template <class T>
Subspace<T> omega_complement(const Matrix<T>& omega, const Subspace<T>& w, double tol = kRelTol) {
  if (w.dim() == 0) return Subspace<T>::full(omega.rows());
  // rows: (omega W)^T u = 0
  Matrix<T> cond = (omega * w.basis()).transpose();
  return Subspace<T>::span(nullspace(cond, tol), tol);
}

template <class T>
bool is_symplectic_subspace(const Matrix<T>& omega, const Subspace<T>& w, double tol = kRelTol) {
  if (w.dim() % 2 == 1) return false;
  return rank(w.restrict_form(omega), tol) == w.dim();
}

}  // namespace qshkit
