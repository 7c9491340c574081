#include "qshkit/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace qshkit {

bool exact_sqrt(const Rational& x, Rational& root) {
  if (sgn(x) < 0) return false;
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

std::string Field<double>::to_string(double x) { return std::to_string(x); }

Inertia signature(const Matrix<double>& g, double rel) {
  if (!g.square()) throw std::invalid_argument("signature of non-square matrix");
  const auto n = static_cast<Eigen::Index>(g.rows());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = 0.5 * (g(i, j) + g(j, i));
  Inertia s;
  if (n == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double norm = ev.cwiseAbs().maxCoeff();
  double thr = rel * norm;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (ev(i) > thr && norm > 0) ++s.positive;
    else if (ev(i) < -thr && norm > 0) ++s.negative;
    else ++s.zero;
  }
  return s;
}

Inertia signature(const Matrix<Rational>& g) {
  if (!g.square()) throw std::invalid_argument("signature of non-square matrix");
  Matrix<Rational> a = g;
  const std::size_t n = a.rows();
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  Inertia s;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t j = k + 1;
      while (j < n && sgn(a(j, j)) == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && sgn(a(k, j)) == 0) ++j;
        if (j == n) {
          ++s.zero;
          continue;
        }
        // e_k <- e_k + e_j gives a(k,k) = 2 a(k,j) != 0.
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    Rational inv = 1 / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      Rational f = a(i, k) * inv;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    if (sgn(a(k, k)) > 0) ++s.positive;
    else ++s.negative;
  }
  return s;
}

}  // namespace qshkit
