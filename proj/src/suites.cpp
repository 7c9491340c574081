#include "qshkit/suites.hpp"

#include <algorithm>
#include <map>

#include "qshkit/random.hpp"

namespace qshkit {
namespace {

class Tally {
 public:
  explicit Tally(double tol) : tol_(tol) {}

  template <class T>
  void check(const std::string& name, const std::string& ref, const T& residual) {
    add(name, ref, Field<T>::to_double(residual), Field<T>::is_zero(residual, tol_));
  }

  void flag(const std::string& name, const std::string& ref, bool ok) { add(name, ref, ok ? 0.0 : 1.0, ok); }

  void add(const std::string& name, const std::string& ref, double residual, bool ok) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      index_.emplace(name, records_.size());
      records_.push_back({name, ok ? Verdict::pass : Verdict::fail, residual, ref, 1});
      return;
    }
    ResultRecord& r = records_[it->second];
    r.residual = std::max(*r.residual, residual);
    if (!ok) r.verdict = Verdict::fail;
    ++*r.trials;
  }

  std::vector<ResultRecord> take() { return std::move(records_); }

 private:
  double tol_;
  std::map<std::string, std::size_t> index_;
  std::vector<ResultRecord> records_;
};

template <class T>
Matrix<T> identity(std::size_t d) {
  return Matrix<T>::identity(d);
}

template <class T>
BilinearMap<T> cte(const Vec<T>& xi, const Matrix<T>& a) {
  return covector_times_endo(xi, a);
}

template <class T>
T half() {
  return ratio<T>(1, 2);
}

template <class T>
Gammas<T> rotate(const Gammas<T>& g, int a) {
  auto [b, c] = cyclic(a);
  return {g[static_cast<std::size_t>(a - 1)], g[static_cast<std::size_t>(b - 1)], g[static_cast<std::size_t>(c - 1)]};
}

template <class T>
Matrix<T> random_invertible(Sampler<T>& s, std::size_t d) {
  while (true) {
    Matrix<T> p = s.matrix(d, d);
    auto inv = inverse(p);
    if (inv && Field<T>::to_double(inv->max_abs()) <= 4.0) return p;
  }
}

template <class T>
void model_checks(Tally& tally, const LinearModel<T>& model, double tol) {
  const std::size_t n = model.n;
  const auto& t = model.triple;
  auto tr = check_admissible_triple(t, tol);
  tally.add("standard model: triple relations", "anti-commuting triple J1 J2 = J3 = -J2 J1", tr.max_residual(), tr.passes());
  auto sf = is_scalar_two_form(model.omega, t, tol);
  tally.add("standard model: omega_0 scalar 2-form", "omega(J_a X, J_a Y) = omega(X, Y)", sf.residual, sf.ok);
  for (int a = 1; a <= 3; ++a) {
    const Inertia& in = model.metrics[static_cast<std::size_t>(a - 1)].inertia;
    tally.flag("standard model: signature g_0^" + std::to_string(a) + " = (2n,2n)", "metrics of signature (2n, 2n)",
               in.positive == 2 * n && in.negative == 2 * n && in.zero == 0);
    auto g = metric_from_pair(model.omega, t.J(a), tol);
    tally.check("standard model: metric_from_pair symmetric and Hermitian", "g_a(X,Y) = omega(X, J_a Y)",
                (g.g - model.metrics[static_cast<std::size_t>(a - 1)].g).max_abs());
  }
  tally.check("standard model: g_0^2 = Re(a^t c + b^t d)", "explicit formula for g_0^2",
              (model.metrics[1].g - standard_g2<T>(n)).max_abs());
  tally.check("standard model: omega(X,Y) = g_1(X, -J_1 Y)", "inverse relation between omega and g_1",
              (model.metrics[0].g * (-t.J(1)) - model.omega).max_abs());
}

template <class T>
std::vector<ResultRecord> identities_impl(const SuiteConfig& cfg) {
  Tally tally(cfg.tolerance);
  const auto model = standard_model<T>(cfg.n);
  const auto& t = model.triple;
  const auto& omega = model.omega;
  const std::size_t d = t.dim();
  const Matrix<T> id = identity<T>(d);
  model_checks(tally, model, cfg.tolerance);

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Sampler<T> s(cfg.seed, "identities", trial);
    BilinearMap<T> phi = s.skew_bilinear(d), chi = s.skew_bilinear(d), torsion = s.skew_bilinear(d);
    Vec<T> v = s.vec(d);
    Gammas<T> gam{s.vec(d), s.vec(d), s.vec(d)};
    T ca = s.scalar(), cb = s.scalar();
    BilinearMap<T> wv = omega_times_vector(omega, v);

    for (int a = 1; a <= 3; ++a) {
      BilinearMap<T> p = pi_J(phi, t.J(a));
      tally.check("pi_J idempotent", "pi_J o pi_J = pi_J", (pi_J(p, t.J(a)) - p).max_abs());
      tally.check("pi_J output skew", "pi_J preserves skew two-forms", skew_residual(p));
      tally.check("pi_J kills omega (x) v", "omega-Hermitian identity omega(JX,Y) = -omega(X,JY)", pi_J(wv, t.J(a)).max_abs());
    }
    BilinearMap<T> ph = pi_H(phi, t);
    tally.check("pi_H idempotent", "pi_H = 2/3 (pi_J1 + pi_J2 + pi_J3)", (pi_H(ph, t) - ph).max_abs());
    tally.check("pi_H linear", "pi_H is linear",
                (pi_H(ca * phi + cb * chi, t) - ca * ph - cb * pi_H(chi, t)).max_abs());
    tally.check("pi_H kills omega (x) v", "each pi_J summand vanishes on omega (x) v", pi_H(wv, t).max_abs());

    BilinearMap<T> sum(d);
    std::array<Vec<T>, 3> psis;
    for (int a = 1; a <= 3; ++a) {
      auto [b, c] = cyclic(a);
      const Vec<T>& ga = gam[static_cast<std::size_t>(a - 1)];
      BilinearMap<T> g_a = cte(ga, t.J(a));
      sum += g_a;
      psis[static_cast<std::size_t>(a - 1)] = psi_from_gammas(gam, t, a);
      tally.check("pi_Ja(gamma_a J_a) = 0", "connection-difference proof identity", pi_J(g_a, t.J(a)).max_abs());
      BilinearMap<T> rc = half<T>() * (cte(ga, t.J(a)) + cte(pull_back(ga, t.J(c)), t.J(b)));
      tally.check("pi_Jc(gamma_a J_a) = 1/2(gamma_a(X)J_aY + gamma_a(J_cX)J_bY)", "connection-difference proof identity",
                  (pi_J(g_a, t.J(c)) - rc).max_abs());
      BilinearMap<T> rb = half<T>() * (cte(ga, t.J(a)) - cte(pull_back(ga, t.J(b)), t.J(c)));
      tally.check("pi_Jb(gamma_a J_a) = 1/2(gamma_a(X)J_aY - gamma_a(J_bX)J_cY)", "connection-difference proof identity",
                  (pi_J(g_a, t.J(b)) - rb).max_abs());
    }
    for (int a = 1; a <= 3; ++a) {
      auto [b, c] = cyclic(a);
      const Vec<T>& pa = psis[static_cast<std::size_t>(a - 1)];
      BilinearMap<T> rhs = half<T>() * (cte(pa, t.J(b)) + cte(pull_back(pa, t.J(a)), t.J(c)));
      tally.check("pi_Ja(sum gamma J) = -1/2(psi_a(X)J_bY + psi_a(J_aX)J_cY)", "connection-difference proof identity",
                  (pi_J(sum, t.J(a)) + rhs).max_abs());
    }
    BilinearMap<T> x6 = x6_part(psis, t);
    tally.check("x6 part = pi_H of the alternated gamma term", "X6-part of the torsion",
                (x6 - pi_H(half<T>() * (sum.swapped() - sum), t)).max_abs());
    tally.check("x6 part skew", "X6-part of the torsion", skew_residual(x6));

    BilinearMap<T> zero(d);
    for (int a = 1; a <= 3; ++a) {
      tally.check("Nijenhuis with K=0 equals 4 pi_J(T)", "N_J = 4 pi_J(T) for adapted connections",
                  (nijenhuis_algebraic(t.J(a), zero, torsion) - T(4) * pi_J(torsion, t.J(a))).max_abs());
      AdmissibleTriple<T> rt = t.rotated(a);
      Gammas<T> rg = rotate(gam, a);
      BilinearMap<T> k = nabla_J_from_gammas(gam, t, a);
      tally.check("Nijenhuis with K from gammas equals the psi expansion", "Nijenhuis tensor in terms of psi and torsion",
                  (nijenhuis_algebraic(t.J(a), k, torsion) - nijenhuis_expansion(psi_from_gammas(rg, rt, 1), rt, torsion))
                      .max_abs());
      tally.check("nabla J_a anticommutes with J_a", "Q-valued derivative anticommutes with J_a",
                  (k.precompose(id, t.J(a)) + k.postcompose(t.J(a))).max_abs());
    }
    BilinearMap<T> k1 = nabla_J_from_gammas(gam, t, 1);
    Vec<T> psi1 = psi_from_gammas(gam, t, 1);
    tally.check("K(J1X) - J1 K(X) = psi(X)J2 + psi(J1X)J3", "complex-structure commutator lemma",
                (k1.precompose(t.J(1), id) - k1.postcompose(t.J(1)) - cte(psi1, t.J(2)) -
                 cte(pull_back(psi1, t.J(1)), t.J(3)))
                    .max_abs());
    {
      Gammas<T> g0 = gam;
      g0[1] = pull_back(gam[2], t.J(1));
      tally.check("psi_a cancels for gamma_b = gamma_c o J_a", "psi_a = gamma_c o J_a - gamma_b",
                  max_abs(psi_from_gammas(g0, t, 1)));
    }

    BilinearMap<T> corr = torsion_trace_correction(torsion, t);
    std::array<Vec<T>, 3> taus{torsion_trace(torsion, t.J(1)), torsion_trace(torsion, t.J(2)), torsion_trace(torsion, t.J(3))};
    const T scale = T(1) / T(static_cast<long>(d) - 2);
    for (int b = 1; b <= 3; ++b) {
      Vec<T> expect = scaled(taus[static_cast<std::size_t>(b - 1)], T(-(static_cast<long>(d) - 1)));
      for (int a = 1; a <= 3; ++a)
        if (a != b) expect = expect - pull_back(taus[static_cast<std::size_t>(a - 1)], Matrix<T>(t.J(b) * t.J(a)));
      expect = scaled(expect, scale);
      tally.check("trace of the torsion correction (closed form)", "torsion correction T^Q = T^H + sum alt(tau_a (x) J_a)",
                  max_abs(torsion_trace(corr, t.J(b)) - expect));
    }
    tally.check("torsion correction adds the alternated traces", "torsion correction T^Q = T^H + sum alt(tau_a (x) J_a)",
                (oproiu_correction(torsion, t) - torsion - corr).max_abs());

    Tensor3<T> sk = s.skew_last_pair(d);
    BilinearMap<T> a_map = skew_correction_A(omega, sk);
    T worst(0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec<T> lowered = omega.transpose() * a_map.on_basis(i, j);
        for (std::size_t k = 0; k < d; ++k) {
          T r = Field<T>::abs(lowered[k] - sk(i, j, k) / T(2));
          if (r > worst) worst = r;
        }
      }
    tally.check("A tensor defining relation omega(A(X,Y),Z) = 1/2 S(X;Y,Z)", "A-tensor of the minimal connection", worst);
    Tensor3<T> sxi(d, d, d);
    Vec<T> xi = s.vec(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) sxi(i, j, k) = T(2) * omega(j, k) * xi[i];
    tally.check("A tensor for S = 2 omega (x) xi is xi(X) Y", "A-tensor of the minimal connection",
                (skew_correction_A(omega, sxi) - cte(xi, id)).max_abs());

    Matrix<T> p = random_invertible(s, d);
    Matrix<T> pinv = *inverse(p);
    AdmissibleTriple<T> conj{{p * t.J(1) * pinv, p * t.J(2) * pinv, p * t.J(3) * pinv}};
    auto rep = check_admissible_triple(conj, cfg.tolerance);
    tally.add("conjugated triple stays admissible", "triple relations are similarity invariant", rep.max_residual(),
              rep.passes());

    std::size_t wd = 1 + s.index(d);
    Subspace<T> w = Subspace<T>::span(s.matrix(d, wd));
    tally.flag("dim W + dim omega-complement(W) = 4n", "omega-orthogonal complement",
               w.dim() + omega_complement(omega, w).dim() == d);
  }
  return tally.take();
}

template <class T>
Subspace<T> random_symplectic(Sampler<T>& s, const Matrix<T>& omega, std::size_t wd) {
  while (true) {
    Subspace<T> w = Subspace<T>::span(s.matrix(omega.rows(), wd));
    if (w.dim() != wd || !is_symplectic_subspace(omega, w)) continue;
    // keep the tangent projector bounded so float residuals stay at rounding level
    auto split = tangent_normal_split(omega, w);
    double size = std::max({Field<T>::to_double(split.p_top.max_abs()), Field<T>::to_double(w.basis().max_abs()),
                            Field<T>::to_double(split.normal.basis().max_abs())});
    if (size <= 4.0) return w;
  }
}

// Lambda(X)Y = u with omega(u, Z) = c(X, Y, Z).
template <class T>
BilinearMap<T> connection_from_form(const Matrix<T>& omega, const Tensor3<T>& c) {
  const std::size_t d = omega.rows();
  Matrix<T> inv = *inverse(Matrix<T>(omega.transpose()));
  BilinearMap<T> lam(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec<T> row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = c(i, j, k);
      lam.set_on_basis(i, j, inv * row);
    }
  return lam;
}

template <class T>
std::vector<ResultRecord> extrinsic_impl(const SuiteConfig& cfg) {
  Tally tally(cfg.tolerance);
  const auto model = standard_model<T>(cfg.n);
  const auto& omega = model.omega;
  const std::size_t d = omega.rows();

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Sampler<T> s(cfg.seed, "extrinsic", trial);
    std::size_t wd = 2 * (1 + s.index(d / 2 - 1));
    Subspace<T> w = random_symplectic(s, omega, wd);
    auto split = tangent_normal_split(omega, w);
    const Matrix<T> id = identity<T>(d);
    tally.check("projectors: P_top^2 = P_top", "tangent-normal splitting", (split.p_top * split.p_top - split.p_top).max_abs());
    tally.check("projectors: P_top P_perp = 0", "tangent-normal splitting", (split.p_top * split.p_perp).max_abs());
    tally.check("projectors: omega(P_top u, P_perp v) = 0", "tangent-normal splitting",
                (split.p_top.transpose() * omega * split.p_perp).max_abs());
    T img(0);
    for (std::size_t i = 0; i < d; ++i) {
      T r = max_abs(w.residual(split.p_top.column(i)));
      if (r > img) img = r;
    }
    tally.check("projectors: image of P_top is W", "tangent-normal splitting", img);

    const int flavor = static_cast<int>(trial % 3);
    BilinearMap<T> lambda;
    if (flavor == 0) {
      lambda = s.bilinear(d);
    } else if (flavor == 1) {
      lambda = connection_from_form(omega, s.symmetric_trilinear(d));
    } else {
      // symmetric in the last two slots only: preserves omega, has torsion
      Tensor3<T> c = s.symmetric_trilinear(d);
      Tensor3<T> extra(d, d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = j; k < d; ++k) {
            T x = s.scalar();
            extra(i, j, k) = x;
            extra(i, k, j) = x;
          }
      lambda = connection_from_form(omega, c + extra);
    }
    auto gd = second_fundamental_form(split, lambda, omega);
    tally.check("Gauss: alpha - alpha^t = (T)^perp", "symplectic Gauss formula", gd.alpha_skew_residual);
    tally.check("Gauss: induced torsion = (T)^top", "symplectic Gauss formula", gd.torsion_residual);
    if (flavor == 1) tally.check("alpha symmetric for torsion-free connections", "second fundamental form is symmetric", gd.alpha_symmetry);
    if (flavor != 0) {
      tally.check("connection preserves omega (generator check)", "omega-preserving connection",
                  preserves_omega_residual(lambda, omega));
      tally.check("induced connection preserves omega_hat", "induced connection is symplectic", gd.compatibility_residual);
    }
    auto shape = shape_operator_check(gd.alpha, omega, split);
    tally.check("shape operator defining relation", "omega_hat(A_xi X, Y) = omega(alpha(X,Y), xi)", shape.residual);
    if (flavor != 0)
      tally.check("shape operator equals (Lambda(X) xi)^top", "omega_hat(A_xi X, Y) = omega(alpha(X,Y), xi)",
                  shape_operator_second_route(shape, lambda, split));
    (void)id;
  }
  return tally.take();
}

template <class T>
Subspace<T> random_j1_invariant(Sampler<T>& s, const AdmissibleTriple<T>& t, std::size_t pairs) {
  const std::size_t d = t.dim();
  while (true) {
    std::vector<Vec<T>> vs;
    for (std::size_t i = 0; i < pairs; ++i) {
      Vec<T> v = s.vec(d);
      vs.push_back(v);
      vs.push_back(t.J(1) * v);
    }
    Subspace<T> w = Subspace<T>::span(vs, d);
    if (w.dim() == 2 * pairs) return w;
  }
}

// Per quaternionic coordinate the 2-plane {(a, b, b, a)}: J1-invariant and J2 W omega-orthogonal to W.
template <class T>
std::vector<Vec<T>> totally_complex_family(std::size_t n) {
  std::vector<Vec<T>> f;
  for (std::size_t c = 0; c < n; ++c) {
    Vec<T> u(4 * n, T(0)), v(4 * n, T(0));
    u[4 * c] = T(1), u[4 * c + 3] = T(1);
    v[4 * c + 1] = T(1), v[4 * c + 2] = T(1);
    f.push_back(u);
    f.push_back(v);
  }
  return f;
}

template <class T>
Vec<T> combination(Sampler<T>& s, const std::vector<Vec<T>>& basis) {
  Vec<T> v(basis[0].size(), T(0));
  for (const auto& b : basis) v = v + scaled(b, s.scalar());
  return v;
}

template <class T>
Vec<T> annihilator_covector(Sampler<T>& s, const Subspace<T>& w) {
  Matrix<T> ann = nullspace(Matrix<T>(w.basis().transpose()));
  Vec<T> g(w.ambient_dim(), T(0));
  for (std::size_t j = 0; j < ann.cols(); ++j) g = g + scaled(ann.column(j), s.scalar());
  return g;
}

template <class T>
std::vector<ResultRecord> submanifold_impl(const SuiteConfig& cfg) {
  Tally tally(cfg.tolerance);
  const std::size_t n = cfg.n;
  const auto model = standard_model<T>(n);
  const auto& t = model.triple;
  const auto& omega = model.omega;
  const std::size_t d = t.dim();
  const auto family = totally_complex_family<T>(n);

  {
    auto h = induced_hermitian(Subspace<T>::full(d), omega, t);
    tally.flag("induced signature of the full model = (2n,2n)", "metrics of signature (2n, 2n)",
               h.inertia.positive == 2 * n && h.inertia.negative == 2 * n);
    Subspace<T> f = Subspace<T>::span(family, d);
    tally.flag("q_invariant_part of a J2-totally-real W is 0", "J2 T_xN ∩ T_xN = {0}", q_invariant_part(f, t).dim() == 0);
    BilinearMap<T> zero_alpha(f.dim(), f.dim(), d);
    auto hf = f.restrict_endomorphism(t.J(1));
    tally.check("alpha = 0 satisfies the alpha-submanifold condition", "alpha(JX,Y) = alpha(X,JY) = J1 alpha(X,Y)",
                alpha_submanifold_residual(zero_alpha, hf, t.J(1)));
  }

  std::size_t generic_failures = 0;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Sampler<T> s(cfg.seed, "submanifold", trial);
    // kernel of psi and psi o Jhat
    std::size_t pairs = 1 + s.index(2 * n);
    Subspace<T> w = random_j1_invariant(s, t, pairs);
    Matrix<T> jhat = w.restrict_endomorphism(t.J(1));
    const std::size_t k = w.dim();
    bool zero_psi = trial % 5 == 0;
    Vec<T> psi = zero_psi ? Vec<T>(k, T(0)) : s.nonzero_vec(k);
    auto ker = psi_kernel_subspace(psi, jhat);
    tally.flag("psi kernel codimension is 0 or 2", "T^psi has codimension 2", ker.codim == (zero_psi ? 0u : 2u));
    tally.check("psi kernel is Jhat-invariant", "T^psi is Jhat-invariant", invariance_residual(ker.kernel, jhat));
    if (!zero_psi) {
      Matrix<T> sys(2, k), rhs(2, 1);
      Vec<T> pj = pull_back(psi, jhat);
      for (std::size_t i = 0; i < k; ++i) sys(0, i) = psi[i], sys(1, i) = pj[i];
      rhs(0, 0) = T(1);
      Vec<T> z = solve(sys, rhs)->column(0);
      Vec<T> y = ker.kernel.dim() ? Vec<T>(ker.kernel.basis() * s.vec(ker.kernel.dim())) : Vec<T>(k, T(0));
      BilinearMap<T> v = v_psi(psi, jhat);
      tally.check("V^psi(Z, Y) = Y", "V^psi_{Z,Y} = Y for psi(Z)=1, psi(JZ)=0, Y in T^psi", max_abs(v(z, y) - y));
      tally.check("V^psi skew", "V^psi is skew", skew_residual(v));

      BilinearMap<T> nh = n_hat_formula(psi, jhat, w, t, BilinearMap<T>(d));
      Vec<T> x = s.vec(k), y2 = s.vec(k);
      Vec<T> value = nh(x, y2);
      Matrix<T> j2b = t.J(2) * w.basis();
      Subspace<T> target = Subspace<T>::span(std::vector<Vec<T>>{j2b * x, j2b * (jhat * x), j2b * y2, j2b * (jhat * y2)}, d);
      tally.check("N_hat lies in J2 span{X, JX, Y, JY} when T=0", "N_hat = J2 V^psi + 4 pi_J1(T)",
                  max_abs(target.residual(value)));
    }

    // two routes to the Nijenhuis tensor on W
    {
      Gammas<T> gam{s.vec(d), s.vec(d), s.vec(d)};
      BilinearMap<T> torsion = s.skew_bilinear(d);
      Vec<T> psi_w = restrict_covector(psi_from_gammas(gam, t, 1), w);
      BilinearMap<T> nh = n_hat_formula(psi_w, jhat, w, t, torsion);
      BilinearMap<T> direct = nijenhuis_algebraic(t.J(1), nabla_J_from_gammas(gam, t, 1), torsion).precompose(w.basis(), w.basis());
      tally.check("N_hat formula agrees with the direct Nijenhuis tensor on W", "N_hat = J2 V^psi + 4 pi_J1(T)",
                  (nh - direct).max_abs());
    }

    // totally complex biconditional
    {
      const int kind = static_cast<int>(trial % 4);
      Subspace<T> wi(d);
      if (kind == 2) {
        std::size_t m = 1 + s.index(n);
        while (true) {
          std::vector<Vec<T>> vs;
          for (std::size_t i = 0; i < m; ++i) {
            Vec<T> v = combination(s, family);
            vs.push_back(v);
            vs.push_back(t.J(1) * v);
          }
          wi = Subspace<T>::span(vs, d);
          if (wi.dim() > 0 && is_symplectic_subspace(omega, wi)) break;
        }
      } else {
        while (true) {
          wi = random_j1_invariant(s, t, 1 + s.index(2 * n - 1));
          if (is_symplectic_subspace(omega, wi)) break;
        }
      }
      Gammas<T> gam{s.vec(d), s.vec(d), s.vec(d)};
      if (kind == 0) gam = {Vec<T>(d, T(0)), Vec<T>(d, T(0)), Vec<T>(d, T(0))};
      if (kind == 1) {
        gam[1] = annihilator_covector(s, wi);
        gam[2] = annihilator_covector(s, wi);
      }
      TangentData<T> data{omega, t, wi, gam, std::nullopt, std::nullopt, std::nullopt, {}, std::nullopt};
      SubspaceReport rep = integrability_report(data, cfg.tolerance);
      tally.flag("integrability report: tangential condition iff I1 or I2", "totally complex submanifold theorem",
                 rep.passed("totally_complex_biconditional"));
      if (kind == 0) tally.flag("integrability report: gamma = 0 passes all conditions", "integrable case", rep.all_pass());
      if (kind == 1 || kind == 2)
        tally.flag("integrability report: I1 and I2 instances satisfy the condition", "totally complex submanifold theorem",
                   rep.passed("I1_or_I2") && rep.passed("tangential_condition"));
      if (kind == 3) generic_failures += rep.passed("tangential_condition") ? 0 : 1;
    }

    // Q-invariant part
    {
      Vec<T> v = s.vec(d);
      Subspace<T> quat = Subspace<T>::span(std::vector<Vec<T>>{v, t.J(1) * v, t.J(2) * v, t.J(3) * v}, d);
      tally.flag("q_invariant_part of a quaternionic W is W", "T^Q N = J2 TN ∩ TN", q_invariant_part(quat, t).equals(quat));
      Vec<T> u = s.vec(d);
      Subspace<T> six = quat.sum(Subspace<T>::span(std::vector<Vec<T>>{u, t.J(1) * u}, d));
      if (six.dim() == 6) tally.flag("q_invariant_part of a 6-dim W with 4-dim core has dim 4", "T^Q N = J2 TN ∩ TN",
                                     q_invariant_part(six, t).dim() == 4);
    }

    // psi splitting on the 6-dim instance: quaternionic line plus a positive J1-plane
    {
      std::vector<Vec<T>> span;
      for (std::size_t i = 0; i < 4; ++i) span.push_back(unit_vector<T>(d, i));
      Vec<T> p1(d, T(0)), p2(d, T(0));
      p1[4] = T(1), p1[7] = T(1);
      p2[5] = T(-1), p2[6] = T(-1);
      span.push_back(p1);
      span.push_back(p2);
      Subspace<T> w6 = Subspace<T>::span(span, d);
      auto h = induced_hermitian(w6, omega, t);
      Vec<T> psi_full(d, T(0));
      psi_full[4] = s.scalar(), psi_full[5] = s.scalar(), psi_full[6] = s.scalar(), psi_full[7] = s.scalar();
      Vec<T> psi6 = restrict_covector(psi_full, w6);
      if (max_abs(psi6) == T(0)) psi6 = restrict_covector(p1, w6);
      auto sp = psi_splitting(psi6, h.jhat, h.omega_hat);
      tally.flag("psi splitting (dim 6): direct and omega_hat-orthogonal", "T_xN = T^psi + (T^psi)^perp",
                 sp.defined && sp.direct && sp.orthogonal);
      tally.flag("psi splitting (dim 6): both summands symplectic", "T_xN = T^psi + (T^psi)^perp", sp.both_symplectic);
      tally.flag("psi splitting (dim 6): Psi non-isotropic", "Psi is non-isotropic", sp.non_isotropic);
      tally.flag("psi splitting (dim 6): span{Psi, J Psi} has signature (2,0)", "signature (2(k+1), 2k) split",
                 sp.plane_inertia.positive == 2 && sp.plane_inertia.negative == 0);
      tally.flag("psi splitting (dim 6): T^psi signature (2,2), total (4,2)", "signature (2(k+1), 2k) split",
                 sp.t_psi_inertia.positive == 2 && sp.t_psi_inertia.negative == 2 && sp.total_inertia.positive == 4 &&
                     sp.total_inertia.negative == 2);
      Subspace<T> tq = q_invariant_part(w6, t);
      Subspace<T> tpsi_ambient = Subspace<T>::span(Matrix<T>(w6.basis() * sp.t_psi.basis()));
      tally.flag("psi splitting (dim 6): T^psi = T^Q", "T^psi N = T^Q N", tpsi_ambient.equals(tq));
    }
    // psi splitting on a quaternionic line
    {
      Subspace<T> w4 = Subspace<T>::span(
          std::vector<Vec<T>>{unit_vector<T>(d, 0), unit_vector<T>(d, 1), unit_vector<T>(d, 2), unit_vector<T>(d, 3)}, d);
      auto h = induced_hermitian(w4, omega, t);
      PsiSplitting<T> sp;
      do {
        sp = psi_splitting(s.nonzero_vec(4), h.jhat, h.omega_hat);
      } while (!sp.non_isotropic);
      tally.flag("psi splitting (dim 4): T^psi has codimension 2", "T^psi has codimension 2", sp.t_psi.dim() == 2);
      tally.flag("psi splitting (dim 4): both summands symplectic", "T_xN = T^psi + (T^psi)^perp",
                 sp.direct && sp.orthogonal && sp.both_symplectic);
    }
  }
  if (cfg.trials >= 4)
    tally.flag("integrability report: generic instances violate the condition", "the condition is not automatic",
               generic_failures > 0);
  return tally.take();
}

void require_model_n(const SuiteConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("n must be at least 2");
  if (cfg.n > cfg.n_cap) throw std::invalid_argument("n exceeds the configured cap");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be positive");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "extrinsic", "submanifold", "example-a", "example-b",
                                              "example-c",  "flat-npq",  "remark-hpn",  "all"};
  return names;
}

std::vector<ResultRecord> identities_suite(const SuiteConfig& cfg) {
  require_model_n(cfg);
  return cfg.arithmetic == Arithmetic::rational ? identities_impl<Rational>(cfg) : identities_impl<double>(cfg);
}

std::vector<ResultRecord> extrinsic_suite(const SuiteConfig& cfg) {
  require_model_n(cfg);
  return cfg.arithmetic == Arithmetic::rational ? extrinsic_impl<Rational>(cfg) : extrinsic_impl<double>(cfg);
}

std::vector<ResultRecord> submanifold_suite(const SuiteConfig& cfg) {
  require_model_n(cfg);
  return cfg.arithmetic == Arithmetic::rational ? submanifold_impl<Rational>(cfg) : submanifold_impl<double>(cfg);
}

std::vector<ResultRecord> example_records(const catalog::ExampleReport& report) {
  std::vector<ResultRecord> out;
  for (const auto& [name, verdict] : report.verdicts.verdicts) {
    ResultRecord r;
    r.name = report.name + ": " + name;
    r.verdict = verdict;
    double res = report.verdicts.residuals.at(name);
    if (!std::isnan(res)) r.residual = res;
    auto it = report.verdicts.evidence.find(name);
    if (it != report.verdicts.evidence.end()) r.paper_ref = it->second;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ResultRecord> run_suite(const std::string& suite, const SuiteConfig& cfg) {
  auto prefixed = [](const std::string& prefix, std::vector<ResultRecord> v) {
    for (auto& r : v) r.name = prefix + ": " + r.name;
    return v;
  };
  if (suite == "identities") return prefixed("identities", identities_suite(cfg));
  if (suite == "extrinsic") return prefixed("extrinsic", extrinsic_suite(cfg));
  if (suite == "submanifold") return prefixed("submanifold", submanifold_suite(cfg));
  if (suite == "example-a") return example_records(catalog::example_A(cfg.n, cfg.caps));
  if (suite == "example-b") return example_records(catalog::example_B(cfg.p, cfg.q, cfg.caps));
  if (suite == "example-c") return example_records(catalog::example_C(cfg.n, cfg.k, cfg.caps));
  if (suite == "flat-npq") return example_records(catalog::flat_Npq(cfg.n, cfg.p, cfg.q));
  if (suite == "remark-hpn") return example_records(catalog::remark_HPn(cfg.n, cfg.caps));
  if (suite == "all") {
    std::vector<ResultRecord> all;
    for (const char* name : {"identities", "extrinsic", "submanifold", "example-a", "example-b", "example-c", "remark-hpn"}) {
      auto part = run_suite(name, cfg);
      all.insert(all.end(), part.begin(), part.end());
    }
    SuiteConfig flat = cfg;
    flat.n = cfg.p + cfg.q;
    auto part = run_suite("flat-npq", flat);
    all.insert(all.end(), part.begin(), part.end());
    return all;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace qshkit
