#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "qshkit/tensorops.hpp"

namespace qshkit {

enum class Verdict { pass, fail, not_evaluated };

const char* to_string(Verdict v);

/// Named verdicts, each with a residual (NaN when not evaluated) and optional evidence.
struct SubspaceReport {
  std::map<std::string, Verdict> verdicts;
  std::map<std::string, double> residuals;
  std::map<std::string, std::string> evidence;

  void set(const std::string& name, bool pass, double residual, const std::string& why = {}) {
    verdicts[name] = pass ? Verdict::pass : Verdict::fail;
    residuals[name] = residual;
    if (!why.empty()) evidence[name] = why;
  }
  void skip(const std::string& name, const std::string& why) {
    verdicts[name] = Verdict::not_evaluated;
    residuals[name] = std::numeric_limits<double>::quiet_NaN();
    evidence[name] = why;
  }
  bool is(const std::string& name, Verdict v) const {
    auto it = verdicts.find(name);
    return it != verdicts.end() && it->second == v;
  }
  bool passed(const std::string& name) const { return is(name, Verdict::pass); }
  bool all_pass() const {
    for (const auto& [k, v] : verdicts)
      if (v != Verdict::pass) return false;
    return true;
  }
};

template <class T>
struct TangentData {
  Matrix<T> omega;
  std::optional<AdmissibleTriple<T>> triple;
  Subspace<T> w;
  std::optional<Gammas<T>> gammas;
  std::optional<BilinearMap<T>> torsion;
  std::optional<BilinearMap<T>> connection;  // Lambda(X)Y
  std::optional<Tensor3<T>> d_omega;
  std::string d_omega_evidence;
  std::optional<Matrix<T>> extra_structure;  // e.g. an invariant complex structure I
};

template <class T>
struct TangentSplit {
  Subspace<T> tangent;
  Subspace<T> normal;
  Matrix<T> p_top;
  Matrix<T> p_perp;
};

template <class T>
TangentSplit<T> tangent_normal_split(const Matrix<T>& omega, const Subspace<T>& w, double tol = kRelTol) {
  if (!is_symplectic_subspace(omega, w, tol)) throw StructuralError("subspace is not symplectic: no omega-orthogonal split");
  Subspace<T> nu = omega_complement(omega, w, tol);
  const std::size_t d = omega.rows(), k = w.dim();
  Matrix<T> m = hstack(w.basis(), nu.basis());
  auto inv = inverse(m, tol);
  if (!inv) throw StructuralError("tangent and normal spaces are not complementary");
  Matrix<T> sel(d, d);
  for (std::size_t i = 0; i < k; ++i) sel(i, i) = T(1);
  Matrix<T> top = m * sel * *inv;
  return {w, nu, top, Matrix<T>::identity(d) - top};
}

template <class T>
struct GaussData {
  BilinearMap<T> alpha;       // normal part of Lambda(X)Y, X,Y in W-coordinates
  BilinearMap<T> induced;     // tangential part
  BilinearMap<T> torsion_w;   // P_top T(X,Y) via the induced connection
  T alpha_skew_residual;      // alpha - alpha^t - P_perp T
  T torsion_residual;         // T~ - P_top T
  T alpha_symmetry;           // alpha - alpha^t
  T compatibility_residual;   // omega(nabla~_X Y, Z) + omega(Y, nabla~_X Z)
};

/// T(X,Y) = Lambda(X)Y - Lambda(Y)X
template <class T>
BilinearMap<T> connection_torsion(const BilinearMap<T>& lambda) {
  return lambda - lambda.swapped();
}

template <class T>
GaussData<T> second_fundamental_form(const TangentSplit<T>& split, const BilinearMap<T>& lambda, const Matrix<T>& omega) {
  const Matrix<T>& b = split.tangent.basis();
  BilinearMap<T> on_w = lambda.precompose(b, b);
  GaussData<T> g;
  g.alpha = on_w.postcompose(split.p_perp);
  g.induced = on_w.postcompose(split.p_top);
  BilinearMap<T> t = connection_torsion(lambda).precompose(b, b);
  g.torsion_w = g.induced - g.induced.swapped();
  g.alpha_skew_residual = (g.alpha - g.alpha.swapped() - t.postcompose(split.p_perp)).max_abs();
  g.torsion_residual = (g.torsion_w - t.postcompose(split.p_top)).max_abs();
  g.alpha_symmetry = symmetry_residual(g.alpha);
  const std::size_t k = b.cols();
  T worst(0);
  Matrix<T> wo = omega * b;  // columns omega(., W_j)
  for (std::size_t x = 0; x < k; ++x) {
    Matrix<T> nab(omega.rows(), k);
    for (std::size_t y = 0; y < k; ++y) nab.set_column(y, g.induced.on_basis(x, y));
    Matrix<T> lhs = nab.transpose() * wo;  // omega(nabla_x Y, Z)
    T r = (lhs - lhs.transpose()).max_abs();
    if (r > worst) worst = r;
  }
  g.compatibility_residual = worst;
  return g;
}

/// Residual of omega(Lambda(X)Y, Z) + omega(Y, Lambda(X)Z) over all basis triples.
template <class T>
T preserves_omega_residual(const BilinearMap<T>& lambda, const Matrix<T>& omega) {
  T worst(0);
  const std::size_t d = omega.rows();
  for (std::size_t x = 0; x < d; ++x) {
    Matrix<T> a = lambda.partial(unit_vector<T>(d, x));
    T r = (a.transpose() * omega + omega * a).max_abs();
    if (r > worst) worst = r;
  }
  return worst;
}

template <class T>
struct ShapeOperators {
  std::vector<Matrix<T>> a;  // A_xi in W-coordinates, one per normal basis vector
  T residual;
};

/// Solves omega^(A_xi X, Y) = omega(alpha(X,Y), xi) for each normal basis vector xi.
template <class T>
ShapeOperators<T> shape_operator_check(const BilinearMap<T>& alpha, const Matrix<T>& omega, const TangentSplit<T>& split) {
  const Matrix<T>& b = split.tangent.basis();
  const std::size_t k = b.cols();
  Matrix<T> wh = b.transpose() * omega * b;
  auto whti = inverse(Matrix<T>(wh.transpose()));
  if (!whti) throw StructuralError("restricted two-form is degenerate");
  ShapeOperators<T> s;
  s.residual = T(0);
  for (std::size_t n = 0; n < split.normal.dim(); ++n) {
    Vec<T> xi = split.normal.basis_vector(n);
    Vec<T> oxi = omega * xi;  // omega(u, xi) = u . oxi
    Matrix<T> r(k, k);
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) r(x, y) = dot(alpha.on_basis(x, y), oxi);
    Matrix<T> a = *whti * r.transpose();
    T res = (a.transpose() * wh - r).max_abs();
    if (res > s.residual) s.residual = res;
    s.a.push_back(std::move(a));
  }
  return s;
}

/// A_xi X = (Lambda(X) xi)^top, for omega-preserving Lambda; compared with shape_operator_check output.
template <class T>
T shape_operator_second_route(const ShapeOperators<T>& s, const BilinearMap<T>& lambda, const TangentSplit<T>& split) {
  const Matrix<T>& b = split.tangent.basis();
  T worst(0);
  for (std::size_t n = 0; n < split.normal.dim(); ++n) {
    Vec<T> xi = split.normal.basis_vector(n);
    for (std::size_t x = 0; x < b.cols(); ++x) {
      Vec<T> v = split.p_top * (lambda.partial(b.column(x)) * xi);
      Vec<T> expect = b * s.a[n].column(x);
      T r = max_abs(v - expect);
      if (r > worst) worst = r;
    }
  }
  return worst;
}

/// alpha(JX, Y) = alpha(X, JY) = J1 alpha(X, Y), with jhat in W-coordinates.
template <class T>
T alpha_submanifold_residual(const BilinearMap<T>& alpha, const Matrix<T>& jhat, const Matrix<T>& j1) {
  const Matrix<T> id = Matrix<T>::identity(jhat.rows());
  BilinearMap<T> first = alpha.precompose(jhat, id);
  BilinearMap<T> second = alpha.precompose(id, jhat);
  BilinearMap<T> third = alpha.postcompose(j1);
  T r1 = (first - second).max_abs(), r2 = (first - third).max_abs();
  return r1 > r2 ? r1 : r2;
}

template <class T>
T invariance_residual(const Subspace<T>& w, const Matrix<T>& a) {
  T worst(0);
  for (std::size_t i = 0; i < w.dim(); ++i) {
    T r = max_abs(w.residual(a * w.basis_vector(i)));
    if (r > worst) worst = r;
  }
  return worst;
}

/// J2 W ∩ W for a J1-invariant W.
template <class T>
Subspace<T> q_invariant_part(const Subspace<T>& w, const AdmissibleTriple<T>& t, double tol = kRelTol) {
  if (!w.is_invariant(t.J(1), tol)) throw StructuralError("subspace is not J1-invariant: no adapted basis");
  Subspace<T> q = w.image(t.J(2), tol).intersect(w, tol);
  for (int a = 1; a <= 3; ++a)
    if (!q.is_invariant(t.J(a), tol)) throw StructuralError("Q-invariant part is not invariant under the triple");
  return q;
}

template <class T>
struct PsiKernel {
  Subspace<T> kernel;
  std::size_t codim;
};

/// ker psi ∩ ker (psi o Jhat), in W-coordinates.
template <class T>
PsiKernel<T> psi_kernel_subspace(const Vec<T>& psi, const Matrix<T>& jhat, double tol = kRelTol) {
  const std::size_t k = jhat.rows();
  Matrix<T> rows(2, k);
  Vec<T> pj = pull_back(psi, jhat);
  for (std::size_t i = 0; i < k; ++i) {
    rows(0, i) = psi[i];
    rows(1, i) = pj[i];
  }
  Subspace<T> ker = Subspace<T>::span(nullspace(rows, tol), tol);
  return {ker, k - ker.dim()};
}

template <class T>
struct InducedHermitian {
  Matrix<T> jhat;
  Matrix<T> omega_hat;
  Matrix<T> g_hat;
  Inertia inertia;
  T hermitian_residual;
};

/// Jhat = J1|_W, omega^ = omega|_W, g^(X,Y) = omega^(X, Jhat Y).
template <class T>
InducedHermitian<T> induced_hermitian(const Subspace<T>& w, const Matrix<T>& omega, const AdmissibleTriple<T>& t,
                                      double tol = kRelTol) {
  if (!w.is_invariant(t.J(1), tol)) throw StructuralError("subspace is not J1-invariant");
  if (!is_symplectic_subspace(omega, w, tol)) throw StructuralError("restricted two-form is degenerate");
  InducedHermitian<T> h;
  h.jhat = w.restrict_endomorphism(t.J(1), tol);
  h.omega_hat = w.restrict_form(omega);
  h.g_hat = h.omega_hat * h.jhat;
  T r1 = (h.jhat.transpose() * h.omega_hat * h.jhat - h.omega_hat).max_abs();
  T r2 = (h.g_hat - h.g_hat.transpose()).max_abs();
  h.hermitian_residual = r1 > r2 ? r1 : r2;
  h.inertia = signature_of(h.g_hat);
  return h;
}

template <class T>
struct PsiSplitting {
  bool defined = false;
  Subspace<T> t_psi;
  Subspace<T> plane;  // span{Psi, Jhat Psi}
  Vec<T> big_psi;
  bool direct = false;
  bool orthogonal = false;
  bool both_symplectic = false;
  bool non_isotropic = false;
  Inertia t_psi_inertia;
  Inertia plane_inertia;
  Inertia total_inertia;
};

/// omega^(Z, Psi) = psi(Z) and the split W = T^psi + span{Psi, Jhat Psi}; all in W-coordinates.
template <class T>
PsiSplitting<T> psi_splitting(const Vec<T>& psi, const Matrix<T>& jhat, const Matrix<T>& omega_hat, double tol = kRelTol) {
  const std::size_t k = jhat.rows();
  PsiSplitting<T> s;
  auto ker = psi_kernel_subspace(psi, jhat, tol);
  s.t_psi = ker.kernel;
  if (ker.codim == 0) return s;  // psi = 0: splitting undefined
  if (rank(omega_hat, tol) != k) throw StructuralError("restricted two-form is degenerate");
  Matrix<T> rhs(k, 1);
  rhs.set_column(0, psi);
  auto sol = solve(omega_hat, rhs, tol);
  if (!sol) throw StructuralError("dual vector of psi does not exist");
  s.defined = true;
  s.big_psi = sol->column(0);
  s.plane = Subspace<T>::span(std::vector<Vec<T>>{s.big_psi, jhat * s.big_psi}, k, tol);
  s.direct = s.t_psi.intersect(s.plane, tol).dim() == 0 && s.t_psi.dim() + s.plane.dim() == k;
  s.orthogonal = Field<T>::is_zero((s.t_psi.basis().transpose() * omega_hat * s.plane.basis()).max_abs(), tol);
  s.both_symplectic = is_symplectic_subspace(omega_hat, s.t_psi, tol) && is_symplectic_subspace(omega_hat, s.plane, tol);
  Matrix<T> g = omega_hat * jhat;
  s.non_isotropic = !Field<T>::is_zero(bilinear(g, s.big_psi, s.big_psi), tol);
  s.t_psi_inertia = signature_of(s.t_psi.restrict_form(g));
  s.plane_inertia = signature_of(s.plane.restrict_form(g));
  s.total_inertia = signature_of(g);
  return s;
}

/// psi_1 restricted to W, in W-coordinates.
template <class T>
Vec<T> restrict_covector(const Vec<T>& xi, const Subspace<T>& w) {
  return w.basis().transpose() * xi;
}

/// Condition checks of the integrability theorem on a J1-invariant W.
template <class T>
SubspaceReport integrability_report(const TangentData<T>& data, double tol = 1e-10) {
  if (!data.triple) throw std::invalid_argument("integrability report needs a triple");
  if (!data.gammas) throw std::invalid_argument("integrability report needs gammas");
  const auto& t = *data.triple;
  const auto& w = data.w;
  if (!w.is_invariant(t.J(1))) throw StructuralError("subspace is not J1-invariant");
  const auto& g = *data.gammas;
  const std::size_t d = t.dim();
  BilinearMap<T> torsion = data.torsion ? *data.torsion : BilinearMap<T>(d);
  SubspaceReport r;
  const Matrix<T>& b = w.basis();

  T psi_res = max_abs(restrict_covector(psi_from_gammas(g, t, 1), w));
  r.set("psi_vanishes", Field<T>::is_zero(psi_res, tol), Field<T>::to_double(psi_res));

  T pi_res = pi_J(torsion, t.J(1)).precompose(b, b).max_abs();
  r.set("pi_J1_torsion_vanishes", Field<T>::is_zero(pi_res, tol), Field<T>::to_double(pi_res));

  // (gamma_3(X) J2 Y - gamma_2(X) J3 Y)^top for X, Y in W
  bool symplectic = is_symplectic_subspace(data.omega, w);
  bool c_holds = false;
  if (symplectic) {
    auto split = tangent_normal_split(data.omega, w);
    BilinearMap<T> expr = covector_times_endo(g[2], t.J(2)) - covector_times_endo(g[1], t.J(3));
    T c_res = expr.precompose(b, b).postcompose(split.p_top).max_abs();
    c_holds = Field<T>::is_zero(c_res, tol);
    r.set("tangential_condition", c_holds, Field<T>::to_double(c_res));
  } else {
    r.skip("tangential_condition", "restricted two-form degenerate");
  }

  T i1 = max_abs(restrict_covector(g[1], w));
  T i1b = max_abs(restrict_covector(g[2], w));
  if (i1b > i1) i1 = i1b;
  bool i1_holds = Field<T>::is_zero(i1, tol);
  T i2 = (b.transpose() * t.J(2).transpose() * data.omega * b).max_abs();
  bool i2_holds = Field<T>::is_zero(i2, tol);
  std::string alternatives = std::string("I1 (gamma_2 = gamma_3 = 0 on W): ") + (i1_holds ? "yes" : "no") +
                             ", I2 (J2 W omega-orthogonal to W): " + (i2_holds ? "yes" : "no");
  r.set("I1_or_I2", i1_holds || i2_holds, std::min(Field<T>::to_double(i1), Field<T>::to_double(i2)), alternatives);

  if (symplectic) {
    bool consistent = c_holds == (i1_holds || i2_holds);
    r.set("totally_complex_biconditional", consistent, consistent ? 0.0 : 1.0,
          std::string("c=") + (c_holds ? "1" : "0") + " I1=" + (i1_holds ? "1" : "0") + " I2=" + (i2_holds ? "1" : "0"));
  } else {
    r.skip("totally_complex_biconditional", "restricted two-form degenerate");
  }
  return r;
}

/// Aggregated classification of a tangent subspace.
template <class T>
SubspaceReport classify_submanifold(const TangentData<T>& data, double tol = 1e-10) {
  SubspaceReport r;
  const Subspace<T>& w = data.w;
  const std::size_t d = data.omega.rows(), k = w.dim();
  const Matrix<T> wh = w.restrict_form(data.omega);

  std::size_t rk = rank(wh);
  bool symplectic = rk == k && k % 2 == 0;
  r.set("almost_symplectic", symplectic, static_cast<double>(k - rk));

  T lag = wh.max_abs();
  bool lagrangian = 2 * k == d && Field<T>::is_zero(lag, tol);
  r.set("lagrangian", lagrangian, Field<T>::to_double(lag) + std::fabs(2.0 * static_cast<double>(k) - static_cast<double>(d)));

  if (data.extra_structure) {
    std::size_t overlap = w.image(*data.extra_structure).intersect(w).dim();
    r.set("totally_real_wrt_I", overlap == 0, static_cast<double>(overlap));
  } else {
    r.skip("totally_real_wrt_I", "no extra structure supplied");
  }

  if (!data.triple) {
    for (const char* n : {"J1_invariant", "Q_invariant", "totally_real_J2", "pseudo_kahler", "qsh_submanifold"})
      r.skip(n, "no triple supplied");
    return r;
  }
  const auto& t = *data.triple;
  T inv1 = invariance_residual(w, t.J(1));
  bool j1_inv = Field<T>::is_zero(inv1, tol);
  r.set("J1_invariant", j1_inv, Field<T>::to_double(inv1));

  T invq = inv1;
  for (int a = 2; a <= 3; ++a) {
    T x = invariance_residual(w, t.J(a));
    if (x > invq) invq = x;
  }
  bool q_inv = Field<T>::is_zero(invq, tol);
  r.set("Q_invariant", q_inv, Field<T>::to_double(invq));

  std::optional<Subspace<T>> tq;
  if (j1_inv) {
    tq = q_invariant_part(w, t);
    r.set("totally_real_J2", tq->dim() == 0, static_cast<double>(tq->dim()));
  } else {
    r.skip("totally_real_J2", "subspace is not J1-invariant");
  }

  if (j1_inv && symplectic) {
    auto h = induced_hermitian(w, data.omega, t);
    r.evidence["induced_signature"] = "(" + std::to_string(h.inertia.positive) + "," + std::to_string(h.inertia.negative) + ")";
    if (!data.gammas) {
      r.skip("pseudo_kahler", "no connection one-forms supplied");
    } else if (!data.d_omega) {
      r.skip("pseudo_kahler", "no evidence for d omega");
    } else {
      BilinearMap<T> torsion = data.torsion ? *data.torsion : BilinearMap<T>(d);
      Vec<T> psi_w = restrict_covector(psi_from_gammas(*data.gammas, t, 1), w);
      BilinearMap<T> nhat = n_hat_formula(psi_w, h.jhat, w, t, torsion);
      BilinearMap<T> direct =
          nijenhuis_algebraic(t.J(1), nabla_J_from_gammas(*data.gammas, t, 1), torsion).precompose(w.basis(), w.basis());
      T agree = (nhat - direct).max_abs();
      r.set("nijenhuis_routes_agree", Field<T>::is_zero(agree, tol), Field<T>::to_double(agree));
      T nres = nhat.max_abs();
      const Tensor3<T>& dw = *data.d_omega;
      const Matrix<T>& b = w.basis();
      T dres(0);
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
          for (std::size_t z = 0; z < k; ++z) {
            T s(0);
            for (std::size_t i = 0; i < d; ++i) {
              if (Field<T>::is_exact_zero(b(i, x))) continue;
              for (std::size_t j = 0; j < d; ++j) {
                if (Field<T>::is_exact_zero(b(j, y))) continue;
                for (std::size_t l = 0; l < d; ++l) {
                  if (Field<T>::is_exact_zero(b(l, z))) continue;
                  s += b(i, x) * b(j, y) * b(l, z) * dw(i, j, l);
                }
              }
            }
            T a = Field<T>::abs(s);
            if (a > dres) dres = a;
          }
      bool pk = Field<T>::is_zero(nres, tol) && Field<T>::is_zero(dres, tol);
      r.set("pseudo_kahler", pk, std::max(Field<T>::to_double(nres), Field<T>::to_double(dres)),
            "d omega evidence: " + data.d_omega_evidence);
      if (!data.torsion || Field<T>::is_zero(data.torsion->max_abs(), tol)) {
        T out(0);
        for (std::size_t x = 0; x < k; ++x)
          for (std::size_t y = 0; y < k; ++y) {
            T res = max_abs(tq->residual(nhat.on_basis(x, y)));
            if (res > out) out = res;
          }
        r.set("nijenhuis_in_TQ", Field<T>::is_zero(out, tol), Field<T>::to_double(out));
      }
    }
  } else {
    r.skip("pseudo_kahler", "requires a J1-invariant symplectic subspace");
  }

  bool qsh = q_inv && symplectic && k % 4 == 0;
  r.set("qsh_submanifold", qsh, Field<T>::to_double(invq) + static_cast<double>(k - rk));
  return r;
}

}  // namespace qshkit
