#pragma once

#include <optional>
#include <utility>

#include "qshkit/matrix.hpp"

namespace qshkit {

template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
};

namespace detail {

template <class T>
double zero_threshold(const Matrix<T>& a, double tol) {
  if constexpr (Field<T>::exact) {
    return 0.0;
  } else {
    double scale = Field<T>::to_double(a.max_abs());
    return tol * scale;
  }
}

template <class T>
bool negligible(const T& x, double threshold) {
  if constexpr (Field<T>::exact) {
    return sgn(x) == 0;
  } else {
    return std::fabs(x) <= threshold;
  }
}

}  // namespace detail

/// Reduced row echelon form. Exact path pivots on the first nonzero entry;
/// float path uses partial pivoting with a relative zero threshold.
template <class T>
Echelon<T> rref(Matrix<T> a, double tol = kRelTol) {
  const double thr = detail::zero_threshold(a, tol);
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = m;
    if constexpr (Field<T>::exact) {
      for (std::size_t i = r; i < m; ++i)
        if (sgn(a(i, c)) != 0) {
          p = i;
          break;
        }
    } else {
      double best = thr;
      for (std::size_t i = r; i < m; ++i)
        if (std::fabs(a(i, c)) > best) {
          best = std::fabs(a(i, c));
          p = i;
        }
    }
    if (p == m) {
      if constexpr (!Field<T>::exact)
        for (std::size_t i = r; i < m; ++i) a(i, c) = 0.0;
      continue;
    }
    if (p != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
    T inv = T(1) / a(r, c);
    for (std::size_t j = c; j < n; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      T f = a(i, c);
      if (Field<T>::is_exact_zero(f)) continue;
      for (std::size_t j = c; j < n; ++j) {
        if (Field<T>::is_exact_zero(a(r, j))) continue;
        a(i, j) -= f * a(r, j);
      }
      a(i, c) = T(0);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& a, double tol = kRelTol) {
  return rref(a, tol).pivots.size();
}

/// Basis of the right nullspace as columns; the basis vector for free column f
/// has a 1 in position f and zeros at the other free positions.
template <class T>
Matrix<T> nullspace(const Matrix<T>& a, double tol = kRelTol) {
  auto e = rref(a, tol);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<T> basis(n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = T(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.reduced(i, free[k]);
  }
  return basis;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a, double tol = kRelTol) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  auto e = rref(hstack(a, Matrix<T>::identity(n)), tol);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

/// Some solution X of A X = B, or nullopt if inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b, double tol = kRelTol) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  auto e = rref(hstack(a, b), tol);
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, a.cols() + j);
  }
  if constexpr (!Field<T>::exact) {
    Matrix<T> r = a * x - b;
    double scale = std::max(Field<T>::to_double(b.max_abs()), Field<T>::to_double(a.max_abs()));
    if (Field<T>::to_double(r.max_abs()) > 1e3 * tol * std::max(scale, 1.0)) return std::nullopt;
  }
  return x;
}

/// Linear subspace of T^d stored by a canonical basis: the transpose of the
/// reduced row echelon form of any spanning set.
template <class T>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : basis_(ambient_dim, 0) {}

  static Subspace span(const Matrix<T>& spanning_columns, double tol = kRelTol) {
    Subspace s(spanning_columns.rows());
    auto e = rref(spanning_columns.transpose(), tol);
    const std::size_t k = e.pivots.size();
    s.basis_ = e.reduced.block(0, 0, k, spanning_columns.rows()).transpose();
    s.pivots_ = e.pivots;
    return s;
  }

  static Subspace span(const std::vector<Vec<T>>& vectors, std::size_t ambient_dim, double tol = kRelTol) {
    return span(Matrix<T>::from_columns(vectors, ambient_dim), tol);
  }

  static Subspace full(std::size_t d) { return span(Matrix<T>::identity(d)); }

  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t codim() const { return ambient_dim() - dim(); }

  /// Columns are the canonical basis.
  const Matrix<T>& basis() const { return basis_; }
  Vec<T> basis_vector(std::size_t i) const { return basis_.column(i); }

  /// Coordinates with respect to basis() of the component read off at the pivot rows.
  Vec<T> pivot_coordinates(const Vec<T>& v) const {
    Vec<T> c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  /// Residual of v against the subspace (zero iff v lies in it).
  Vec<T> residual(const Vec<T>& v) const { return v - basis_ * pivot_coordinates(v); }

  bool contains(const Vec<T>& v, double tol = kRelTol) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("vector length mismatch");
    Vec<T> r = residual(v);
    if constexpr (Field<T>::exact) {
      return std::all_of(r.begin(), r.end(), [](const T& x) { return sgn(x) == 0; });
    } else {
      return norm2(r) <= tol * std::max(norm2(v), 1e-300) || norm2(v) == 0.0;
    }
  }

  bool contains(const Subspace& o, double tol = kRelTol) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_vector(i), tol)) return false;
    return true;
  }

  bool equals(const Subspace& o, double tol = kRelTol) const {
    return dim() == o.dim() && contains(o, tol);
  }

  /// Coordinates in basis(); throws if v is not a member.
  Vec<T> coordinates(const Vec<T>& v, double tol = kRelTol) const {
    if (!contains(v, tol)) throw std::domain_error("vector not in subspace");
    return pivot_coordinates(v);
  }

  Subspace sum(const Subspace& o, double tol = kRelTol) const { return span(hstack(basis_, o.basis_), tol); }

  Subspace intersect(const Subspace& o, double tol = kRelTol) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_dim());
    Matrix<T> stacked = hstack(basis_, -o.basis_);
    Matrix<T> null = nullspace(stacked, tol);
    Matrix<T> coeffs = null.block(0, 0, dim(), null.cols());
    return span(basis_ * coeffs, tol);
  }

  Subspace image(const Matrix<T>& a, double tol = kRelTol) const { return span(a * basis_, tol); }

  bool is_invariant(const Matrix<T>& a, double tol = kRelTol) const { return contains(image(a, tol), tol); }

  /// Matrix of a|_W in basis() coordinates; requires invariance.
  Matrix<T> restrict_endomorphism(const Matrix<T>& a, double tol = kRelTol) const {
    Matrix<T> r(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) r.set_column(j, coordinates(a * basis_vector(j), tol));
    return r;
  }

  /// Gram matrix B^T g B of a bilinear form on the subspace.
  Matrix<T> restrict_form(const Matrix<T>& g) const { return basis_.transpose() * g * basis_; }

 private:
  static double norm2(const Vec<T>& v) {
    double s = 0.0;
    for (const T& x : v) s += Field<T>::to_double(x) * Field<T>::to_double(x);
    return std::sqrt(s);
  }

  Matrix<T> basis_;
  std::vector<std::size_t> pivots_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia by eigenvalues with relative threshold rel * spectral norm.
Inertia signature(const Matrix<double>& g, double rel = 1e-8);
/// Exact inertia by symmetric congruence (Sylvester).
Inertia signature(const Matrix<Rational>& g);

}  // namespace qshkit
