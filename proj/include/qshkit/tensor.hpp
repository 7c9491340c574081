#pragma once

#include "qshkit/matrix.hpp"

namespace qshkit {

/// Dense three-index array t(i,j,k), row-major.
template <class T>
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2) : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, T(0)) {}

  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }

  T& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d1_ + j) * d2_ + k]; }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * d1_ + j) * d2_ + k]; }

  const std::vector<T>& data() const { return data_; }

  T max_abs() const {
    T m(0);
    for (const T& x : data_) {
      T a = Field<T>::abs(x);
      if (a > m) m = a;
    }
    return m;
  }

  Tensor3& operator+=(const Tensor3& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Tensor3& operator*=(const T& s) {
    for (T& x : data_) x *= s;
    return *this;
  }
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const T& s, Tensor3 a) { return a *= s; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Tensor3& o) const {
    if (d0_ != o.d0_ || d1_ != o.d1_ || d2_ != o.d2_) throw std::invalid_argument("tensor shape mismatch");
  }

  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<T> data_;
};

/// Vector-valued bilinear map B: V1 x V2 -> U, stored as t(i,j,k) = k-th
/// component of B(e_i, e_j). Also used for endomorphism-valued one-forms,
/// where K(X)Y = B(X, Y).
template <class T>
class BilinearMap {
 public:
  BilinearMap() = default;
  BilinearMap(std::size_t in1, std::size_t in2, std::size_t out) : t_(in1, in2, out) {}
  explicit BilinearMap(std::size_t d) : t_(d, d, d) {}
  explicit BilinearMap(Tensor3<T> t) : t_(std::move(t)) {}

  std::size_t in1() const { return t_.dim0(); }
  std::size_t in2() const { return t_.dim1(); }
  std::size_t out() const { return t_.dim2(); }

  const Tensor3<T>& tensor() const { return t_; }

  T& operator()(std::size_t i, std::size_t j, std::size_t k) { return t_(i, j, k); }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const { return t_(i, j, k); }

  Vec<T> on_basis(std::size_t i, std::size_t j) const {
    Vec<T> v(out());
    for (std::size_t k = 0; k < out(); ++k) v[k] = t_(i, j, k);
    return v;
  }

  void set_on_basis(std::size_t i, std::size_t j, const Vec<T>& v) {
    for (std::size_t k = 0; k < out(); ++k) t_(i, j, k) = v[k];
  }

  Vec<T> operator()(const Vec<T>& x, const Vec<T>& y) const {
    Vec<T> v(out(), T(0));
    for (std::size_t i = 0; i < in1(); ++i) {
      if (Field<T>::is_exact_zero(x[i])) continue;
      for (std::size_t j = 0; j < in2(); ++j) {
        if (Field<T>::is_exact_zero(y[j])) continue;
        T xy = x[i] * y[j];
        for (std::size_t k = 0; k < out(); ++k) v[k] += xy * t_(i, j, k);
      }
    }
    return v;
  }

  /// Endomorphism Y -> B(X, Y) for fixed X.
  Matrix<T> partial(const Vec<T>& x) const {
    Matrix<T> m(out(), in2());
    for (std::size_t i = 0; i < in1(); ++i) {
      if (Field<T>::is_exact_zero(x[i])) continue;
      for (std::size_t j = 0; j < in2(); ++j)
        for (std::size_t k = 0; k < out(); ++k) m(k, j) += x[i] * t_(i, j, k);
    }
    return m;
  }

  /// (X, Y) -> B(a X, b Y).
  BilinearMap precompose(const Matrix<T>& a, const Matrix<T>& b) const {
    if (a.rows() != in1() || b.rows() != in2()) throw std::invalid_argument("precompose shape mismatch");
    if (a.is_identity() && b.is_identity()) return *this;
    if (a.is_identity()) return second_slot(t_, b);
    Tensor3<T> s(a.cols(), in2(), out());
    for (std::size_t l = 0; l < in1(); ++l)
      for (std::size_t i = 0; i < a.cols(); ++i) {
        const T& c = a(l, i);
        if (Field<T>::is_exact_zero(c)) continue;
        for (std::size_t j = 0; j < in2(); ++j)
          for (std::size_t k = 0; k < out(); ++k) s(i, j, k) += c * t_(l, j, k);
      }
    if (b.is_identity()) return BilinearMap(std::move(s));
    return second_slot(s, b);
  }

  /// (X, Y) -> m B(X, Y).
  BilinearMap postcompose(const Matrix<T>& m) const {
    if (m.cols() != out()) throw std::invalid_argument("postcompose shape mismatch");
    Tensor3<T> r(in1(), in2(), m.rows());
    for (std::size_t i = 0; i < in1(); ++i)
      for (std::size_t j = 0; j < in2(); ++j)
        for (std::size_t l = 0; l < out(); ++l) {
          const T& v = t_(i, j, l);
          if (Field<T>::is_exact_zero(v)) continue;
          for (std::size_t k = 0; k < m.rows(); ++k) r(i, j, k) += m(k, l) * v;
        }
    return BilinearMap(std::move(r));
  }

  /// (X, Y) -> B(Y, X).
  BilinearMap swapped() const {
    Tensor3<T> r(in2(), in1(), out());
    for (std::size_t i = 0; i < in1(); ++i)
      for (std::size_t j = 0; j < in2(); ++j)
        for (std::size_t k = 0; k < out(); ++k) r(j, i, k) = t_(i, j, k);
    return BilinearMap(std::move(r));
  }

  /// Restriction to W1 x W2 given basis columns, values kept in the ambient.
  BilinearMap restrict_inputs(const Matrix<T>& w1, const Matrix<T>& w2) const { return precompose(w1, w2); }

  T max_abs() const { return t_.max_abs(); }

  BilinearMap& operator+=(const BilinearMap& o) {
    t_ += o.t_;
    return *this;
  }
  BilinearMap& operator-=(const BilinearMap& o) {
    t_ -= o.t_;
    return *this;
  }
  friend BilinearMap operator+(BilinearMap a, const BilinearMap& b) { return a += b; }
  friend BilinearMap operator-(BilinearMap a, const BilinearMap& b) { return a -= b; }
  friend BilinearMap operator*(const T& s, BilinearMap a) {
    a.t_ *= s;
    return a;
  }
  friend bool operator==(const BilinearMap& a, const BilinearMap& b) { return a.t_ == b.t_; }

 private:
  static BilinearMap second_slot(const Tensor3<T>& s, const Matrix<T>& b) {
    const std::size_t n1 = s.dim0(), n3 = s.dim2();
    Tensor3<T> r(n1, b.cols(), n3);
    for (std::size_t l = 0; l < b.rows(); ++l)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& c = b(l, j);
        if (Field<T>::is_exact_zero(c)) continue;
        for (std::size_t i = 0; i < n1; ++i)
          for (std::size_t k = 0; k < n3; ++k) r(i, j, k) += c * s(i, l, k);
      }
    return BilinearMap(std::move(r));
  }

  Tensor3<T> t_;
};

/// Residual of B(X,Y) + B(Y,X).
template <class T>
T skew_residual(const BilinearMap<T>& b) {
  return (b + b.swapped()).max_abs();
}

/// Residual of B(X,Y) - B(Y,X).
template <class T>
T symmetry_residual(const BilinearMap<T>& b) {
  return (b - b.swapped()).max_abs();
}

/// (X,Y) -> f(X) v(Y) in the given output dimension: u ⊗ endo style builders.
template <class T>
BilinearMap<T> form_times_vector(const Matrix<T>& form, const Vec<T>& v) {
  BilinearMap<T> b(form.rows(), form.cols(), v.size());
  for (std::size_t i = 0; i < form.rows(); ++i)
    for (std::size_t j = 0; j < form.cols(); ++j) {
      if (Field<T>::is_exact_zero(form(i, j))) continue;
      for (std::size_t k = 0; k < v.size(); ++k) b(i, j, k) = form(i, j) * v[k];
    }
  return b;
}

/// (X,Y) -> xi(X) A Y for a covector xi and endomorphism A.
template <class T>
BilinearMap<T> covector_times_endo(const Vec<T>& xi, const Matrix<T>& a) {
  BilinearMap<T> b(xi.size(), a.cols(), a.rows());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (Field<T>::is_exact_zero(xi[i])) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < a.rows(); ++k) b(i, j, k) = xi[i] * a(k, j);
  }
  return b;
}

/// Row vector xi as covector applied through a matrix: (xi o a)(X) = xi(aX).
template <class T>
Vec<T> pull_back(const Vec<T>& xi, const Matrix<T>& a) {
  return a.transpose() * xi;
}

}  // namespace qshkit
