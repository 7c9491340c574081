#pragma once

#include "qshkit/qshlin.hpp"
#include "qshkit/tensor.hpp"

namespace qshkit {

template <class T>
using Gammas = std::array<Vec<T>, 3>;

/// 1/4 (phi(X,Y) + J(phi(JX,Y) + phi(X,JY)) - phi(JX,JY))
template <class T>
BilinearMap<T> pi_J(const BilinearMap<T>& phi, const Matrix<T>& j) {
  if (phi.in1() != j.rows() || phi.in2() != j.rows() || phi.out() != j.rows())
    throw std::invalid_argument("pi_J shape mismatch");
  const Matrix<T> id = Matrix<T>::identity(j.rows());
  BilinearMap<T> mixed = phi.precompose(j, id) + phi.precompose(id, j);
  BilinearMap<T> r = phi + mixed.postcompose(j) - phi.precompose(j, j);
  return ratio<T>(1, 4) * r;
}

/// 2/3 (pi_J1 + pi_J2 + pi_J3)
template <class T>
BilinearMap<T> pi_H(const BilinearMap<T>& phi, const AdmissibleTriple<T>& t) {
  BilinearMap<T> s = pi_J(phi, t.J(1)) + pi_J(phi, t.J(2)) + pi_J(phi, t.J(3));
  return ratio<T>(2, 3) * s;
}

/// Eight-term Nijenhuis expression with K(X)Y = (nabla_X J)Y and torsion T.
template <class T>
BilinearMap<T> nijenhuis_algebraic(const Matrix<T>& j, const BilinearMap<T>& k, const BilinearMap<T>& torsion) {
  const Matrix<T> id = Matrix<T>::identity(j.rows());
  BilinearMap<T> kj = k.precompose(j, id);  // K(JX)Y
  BilinearMap<T> r = kj - kj.swapped();
  r += (k.swapped() - k).postcompose(j);
  BilinearMap<T> tj = torsion.precompose(j, id) + torsion.precompose(id, j);
  r += torsion + tj.postcompose(j) - torsion.precompose(j, j);
  return r;
}

/// K(X) = gamma_c(X) J_b - gamma_b(X) J_c for (a, b, c) cyclic.
template <class T>
BilinearMap<T> nabla_J_from_gammas(const Gammas<T>& g, const AdmissibleTriple<T>& t, int a) {
  auto [b, c] = cyclic(a);
  return covector_times_endo(g[static_cast<std::size_t>(c - 1)], t.J(b)) -
         covector_times_endo(g[static_cast<std::size_t>(b - 1)], t.J(c));
}

/// psi_a = gamma_c o J_a - gamma_b
template <class T>
Vec<T> psi_from_gammas(const Gammas<T>& g, const AdmissibleTriple<T>& t, int a) {
  auto [b, c] = cyclic(a);
  return pull_back(g[static_cast<std::size_t>(c - 1)], t.J(a)) - g[static_cast<std::size_t>(b - 1)];
}

/// V(X,Y) = psi(X)Y - psi(JX)JY - psi(Y)X + psi(JY)JX
template <class T>
BilinearMap<T> v_psi(const Vec<T>& psi, const Matrix<T>& jhat) {
  const Matrix<T> id = Matrix<T>::identity(jhat.rows());
  BilinearMap<T> half = covector_times_endo(psi, id) - covector_times_endo(pull_back(psi, jhat), jhat);
  return half - half.swapped();
}

/// psi(X)J2Y + psi(J1X)J3Y - psi(Y)J2X - psi(J1Y)J3X + 4 pi_J1(T)
template <class T>
BilinearMap<T> nijenhuis_expansion(const Vec<T>& psi, const AdmissibleTriple<T>& t, const BilinearMap<T>& torsion) {
  BilinearMap<T> half = covector_times_endo(psi, t.J(2)) + covector_times_endo(pull_back(psi, t.J(1)), t.J(3));
  return half - half.swapped() + T(4) * pi_J(torsion, t.J(1));
}

/// J2 V^psi(X,Y) + 4 pi_J1(T)(X,Y) for X, Y in the J1-invariant subspace W.
/// psi_w and jhat are in W-coordinates; the result takes W-coordinates in and
/// returns ambient vectors.
template <class T>
BilinearMap<T> n_hat_formula(const Vec<T>& psi_w, const Matrix<T>& jhat, const Subspace<T>& w,
                             const AdmissibleTriple<T>& t, const BilinearMap<T>& torsion) {
  const Matrix<T>& b = w.basis();
  BilinearMap<T> v = v_psi(psi_w, jhat).postcompose(t.J(2) * b);
  BilinearMap<T> p = pi_J(torsion, t.J(1)).precompose(b, b);
  return v + T(4) * p;
}

/// 1/6 sum_cycl (psi_a(X)J_bY + psi_a(J_aX)J_cY - psi_a(Y)J_bX - psi_a(J_aY)J_cX)
template <class T>
BilinearMap<T> x6_part(const std::array<Vec<T>, 3>& psis, const AdmissibleTriple<T>& t) {
  BilinearMap<T> half(t.dim());
  for (int a = 1; a <= 3; ++a) {
    auto [b, c] = cyclic(a);
    const Vec<T>& p = psis[static_cast<std::size_t>(a - 1)];
    half += covector_times_endo(p, t.J(b)) + covector_times_endo(pull_back(p, t.J(a)), t.J(c));
  }
  return ratio<T>(1, 6) * (half - half.swapped());
}

/// tau(X) = tr(Y -> J T(X,Y)) / (dim - 2)
template <class T>
Vec<T> torsion_trace(const BilinearMap<T>& torsion, const Matrix<T>& j) {
  const std::size_t d = torsion.in1();
  Vec<T> tau(d, T(0));
  for (std::size_t i = 0; i < d; ++i) {
    T s(0);
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t k = 0; k < d; ++k) {
        if (Field<T>::is_exact_zero(j(y, k))) continue;
        s += j(y, k) * torsion(i, y, k);
      }
    tau[i] = s / T(static_cast<long>(d) - 2);
  }
  return tau;
}

/// sum_a (tau_a(X) J_a Y - tau_a(Y) J_a X)
template <class T>
BilinearMap<T> torsion_trace_correction(const BilinearMap<T>& torsion, const AdmissibleTriple<T>& t) {
  BilinearMap<T> half(t.dim());
  for (int a = 1; a <= 3; ++a) half += covector_times_endo(torsion_trace(torsion, t.J(a)), t.J(a));
  return half - half.swapped();
}

/// T^H + sum_a alternation(tau_a (x) J_a)
template <class T>
BilinearMap<T> oproiu_correction(const BilinearMap<T>& th, const AdmissibleTriple<T>& t) {
  if (t.dim() < 8) throw std::invalid_argument("torsion correction requires n >= 2");
  return th + torsion_trace_correction(th, t);
}

/// A with omega(A(X,Y), Z) = 1/2 S(X;Y,Z), S stored as s(X,Y,Z).
template <class T>
BilinearMap<T> skew_correction_A(const Matrix<T>& omega, const Tensor3<T>& s) {
  const std::size_t d = omega.rows();
  auto inv = inverse(Matrix<T>(omega.transpose()));
  if (!inv) throw StructuralError("two-form is singular");
  BilinearMap<T> a(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec<T> rhs(d);
      for (std::size_t k = 0; k < d; ++k) rhs[k] = s(i, j, k) / T(2);
      a.set_on_basis(i, j, *inv * rhs);
    }
  return a;
}

/// omega(X,Y) v as a vector-valued two-form.
template <class T>
BilinearMap<T> omega_times_vector(const Matrix<T>& omega, const Vec<T>& v) {
  return form_times_vector(omega, v);
}

}  // namespace qshkit
