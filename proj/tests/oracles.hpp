#pragma once

// Direct evaluators used as independent references: they only evaluate maps
// on vectors and never call the library's tensor reshaping routines.

#include <functional>

#include "qshkit/tensorops.hpp"

namespace oracle {

using qshkit::BilinearMap;
using qshkit::Matrix;
using qshkit::Vec;

template <class T>
Vec<T> basis(std::size_t d, std::size_t i) {
  Vec<T> v(d, T(0));
  v[i] = T(1);
  return v;
}

template <class T>
T max_over_basis(std::size_t d, const std::function<Vec<T>(const Vec<T>&, const Vec<T>&)>& f) {
  T worst(0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const T& x : f(basis<T>(d, i), basis<T>(d, j))) {
        T a = qshkit::Field<T>::abs(x);
        if (a > worst) worst = a;
      }
  return worst;
}

/// 1/4 (phi(X,Y) + J phi(JX,Y) + J phi(X,JY) - phi(JX,JY))
template <class T>
Vec<T> pi_J(const BilinearMap<T>& phi, const Matrix<T>& j, const Vec<T>& x, const Vec<T>& y) {
  Vec<T> jx = j * x, jy = j * y;
  Vec<T> r = phi(x, y) + j * (phi(jx, y) + phi(x, jy)) - phi(jx, jy);
  return qshkit::scaled(r, T(T(1) / T(4)));
}

/// Dense trace of Y -> J T(X, Y).
template <class T>
T trace_JT(const BilinearMap<T>& torsion, const Matrix<T>& j, const Vec<T>& x) {
  const std::size_t d = j.rows();
  T tr(0);
  for (std::size_t i = 0; i < d; ++i) tr += (j * torsion(x, basis<T>(d, i)))[i];
  return tr;
}

}  // namespace oracle
