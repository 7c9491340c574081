#include "doctest.h"
#include "oracles.hpp"
#include "qshkit/subman.hpp"
#include "qshkit/random.hpp"

using namespace qshkit;
using R = Rational;

namespace {

const LinearModel<R>& model2() {
  static const LinearModel<R> m = standard_model<R>(2);
  return m;
}

template <class T>
Gammas<T> random_gammas(Sampler<T>& s, std::size_t d) {
  return {s.vec(d), s.vec(d), s.vec(d)};
}

// K(X) = gamma_c(X) J_b - gamma_b(X) J_c applied to Y, evaluated directly
template <class T>
Vec<T> k_apply(const Gammas<T>& g, const AdmissibleTriple<T>& t, int a, const Vec<T>& x, const Vec<T>& y) {
  auto [b, c] = cyclic(a);
  return scaled(t.J(b) * y, dot(g[c - 1], x)) - scaled(t.J(c) * y, dot(g[b - 1], x));
}

}  // namespace

TEST_CASE("pi_J: zero, omega (x) v and agreement with direct four-term evaluation") {
  const auto& m = model2();
  BilinearMap<R> zero(8);
  CHECK(pi_J(zero, m.triple.J(1)).max_abs() == 0);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    Sampler<R> s(1, "pi_J", trial);
    Vec<R> v = s.vec(8);
    BilinearMap<R> wv = omega_times_vector(m.omega, v);
    BilinearMap<R> phi = s.skew_bilinear(8);
    for (int a = 1; a <= 3; ++a) {
      const Matrix<R>& j = m.triple.J(a);
      CHECK(oracle::max_over_basis<R>(8, [&](const Vec<R>& x, const Vec<R>& y) { return oracle::pi_J(wv, j, x, y); }) == 0);
      CHECK(pi_J(wv, j).max_abs() == 0);
      BilinearMap<R> p = pi_J(phi, j);
      CHECK(oracle::max_over_basis<R>(8, [&](const Vec<R>& x, const Vec<R>& y) {
              return p(x, y) - oracle::pi_J(phi, j, x, y);
            }) == 0);
    }
  }
}

TEST_CASE("pi_J idempotent on 50 random float forms") {
  auto m = standard_model<double>(2);
  double worst = 0;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    Sampler<double> s(2, "pi_J idempotent", trial);
    BilinearMap<double> phi = s.skew_bilinear(8);
    for (int a = 1; a <= 3; ++a) {
      BilinearMap<double> p = pi_J(phi, m.triple.J(a));
      worst = std::max(worst, (pi_J(p, m.triple.J(a)) - p).max_abs());
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("pi_H: zero, omega (x) v and linearity") {
  auto m = standard_model<double>(2);
  CHECK(pi_H(BilinearMap<double>(8), m.triple).max_abs() == 0);
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Sampler<double> s(3, "pi_H", trial);
    CHECK(pi_H(omega_times_vector(m.omega, s.vec(8)), m.triple).max_abs() <= 1e-12);
    BilinearMap<double> phi = s.skew_bilinear(8), psi = s.skew_bilinear(8);
    double a = s.scalar(), b = s.scalar();
    BilinearMap<double> lhs = pi_H(a * phi + b * psi, m.triple);
    BilinearMap<double> rhs = a * pi_H(phi, m.triple) + b * pi_H(psi, m.triple);
    CHECK((lhs - rhs).max_abs() <= 1e-12);
  }
}

TEST_CASE("Nijenhuis tensor with K = 0") {
  const auto& m = model2();
  BilinearMap<R> zero(8);
  CHECK(nijenhuis_algebraic(m.triple.J(1), zero, zero).max_abs() == 0);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    Sampler<R> s(4, "nijenhuis", trial);
    BilinearMap<R> torsion = s.skew_bilinear(8);
    for (int a = 1; a <= 3; ++a) {
      const Matrix<R>& j = m.triple.J(a);
      BilinearMap<R> n = nijenhuis_algebraic(j, zero, torsion);
      CHECK(oracle::max_over_basis<R>(8, [&](const Vec<R>& x, const Vec<R>& y) {
              return n(x, y) - scaled(oracle::pi_J(torsion, j, x, y), R(4));
            }) == 0);
    }
  }
}

TEST_CASE("Nijenhuis tensor with K from gammas matches the psi expansion") {
  const auto& m = model2();
  const auto& t = m.triple;
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    Sampler<R> s(5, "nijenhuis gamma", trial);
    Gammas<R> g = random_gammas(s, 8);
    BilinearMap<R> k = nabla_J_from_gammas(g, t, 1);
    BilinearMap<R> n = nijenhuis_algebraic(t.J(1), k, BilinearMap<R>(8));
    Vec<R> psi = psi_from_gammas(g, t, 1);
    const Matrix<R>& j = t.J(1);
    CHECK(oracle::max_over_basis<R>(8, [&](const Vec<R>& x, const Vec<R>& y) {
            // K(JX)Y - K(JY)X + J(K(Y)X - K(X)Y)
            Vec<R> direct = k_apply(g, t, 1, j * x, y) - k_apply(g, t, 1, j * y, x) +
                            j * (k_apply(g, t, 1, y, x) - k_apply(g, t, 1, x, y));
            return n(x, y) - direct;
          }) == 0);
    CHECK(oracle::max_over_basis<R>(8, [&](const Vec<R>& x, const Vec<R>& y) {
            Vec<R> expansion = scaled(t.J(2) * y, dot(psi, x)) + scaled(t.J(3) * y, dot(psi, j * x)) -
                               scaled(t.J(2) * x, dot(psi, y)) - scaled(t.J(3) * x, dot(psi, j * y));
            return n(x, y) - expansion;
          }) == 0);
  }
}

TEST_CASE("nabla_J_from_gammas special cases and anticommutation") {
  const auto& t = model2().triple;
  Gammas<R> zero{Vec<R>(8, R(0)), Vec<R>(8, R(0)), Vec<R>(8, R(0))};
  CHECK(nabla_J_from_gammas(zero, t, 2).max_abs() == 0);
  Sampler<R> s(6, "nabla", 0);
  Vec<R> xi = s.vec(8);
  // a = 1: b = 2, c = 3
  Gammas<R> one{Vec<R>(8, R(0)), Vec<R>(8, R(0)), xi};
  CHECK((nabla_J_from_gammas(one, t, 1) - covector_times_endo(xi, t.J(2))).max_abs() == 0);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    Sampler<R> r(6, "nabla", trial + 1);
    Gammas<R> g = random_gammas(r, 8);
    for (int a = 1; a <= 3; ++a) {
      BilinearMap<R> k = nabla_J_from_gammas(g, t, a);
      for (std::size_t i = 0; i < 8; ++i) {
        Matrix<R> kx = k.partial(unit_vector<R>(8, i));
        CHECK((kx * t.J(a) + t.J(a) * kx).is_zero());
      }
    }
  }
}

TEST_CASE("psi_from_gammas: zero, cancellation and the complex-structure lemma") {
  const auto& t = model2().triple;
  Gammas<R> zero{Vec<R>(8, R(0)), Vec<R>(8, R(0)), Vec<R>(8, R(0))};
  CHECK(max_abs(psi_from_gammas(zero, t, 1)) == 0);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    Sampler<R> s(7, "psi", trial);
    Vec<R> xi = s.vec(8);
    for (int a = 1; a <= 3; ++a) {
      auto [b, c] = cyclic(a);
      Gammas<R> g = random_gammas(s, 8);
      g[c - 1] = xi;
      g[b - 1] = pull_back(xi, t.J(a));
      CHECK(max_abs(psi_from_gammas(g, t, a)) == 0);
    }
    Gammas<R> g = random_gammas(s, 8);
    Vec<R> psi = psi_from_gammas(g, t, 1);
    const Matrix<R>& j = t.J(1);
    for (std::size_t i = 0; i < 8; ++i) {
      Vec<R> x = unit_vector<R>(8, i);
      for (std::size_t l = 0; l < 8; ++l) {
        Vec<R> y = unit_vector<R>(8, l);
        Vec<R> lhs = k_apply(g, t, 1, j * x, y) - j * k_apply(g, t, 1, x, y);
        Vec<R> rhs = scaled(t.J(2) * y, dot(psi, x)) + scaled(t.J(3) * y, dot(psi, j * x));
        CHECK(max_abs(lhs - rhs) == 0);
      }
    }
  }
}

TEST_CASE("v_psi examples") {
  auto jhat = Matrix<R>::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  CHECK(v_psi(Vec<R>(4, R(0)), jhat).max_abs() == 0);
  Vec<R> psi{1, 0, 0, 0};
  BilinearMap<R> v = v_psi(psi, jhat);
  Vec<R> z = unit_vector<R>(4, 0), y = unit_vector<R>(4, 2);
  CHECK(v(z, y) == y);
  Sampler<R> s(8, "vpsi", 0);
  Vec<R> p = s.nonzero_vec(4), x = s.vec(4);
  CHECK(max_abs(v_psi(p, jhat)(x, x)) == 0);
}

TEST_CASE("n_hat_formula: integrable case and consistency with the psi expansion") {
  const auto& m = model2();
  const auto& t = m.triple;
  auto w = Subspace<R>::span(std::vector<Vec<R>>{unit_vector<R>(8, 0), unit_vector<R>(8, 1), unit_vector<R>(8, 4),
                                                 unit_vector<R>(8, 5)},
                             8);
  REQUIRE(w.is_invariant(t.J(1)));
  Matrix<R> jhat = w.restrict_endomorphism(t.J(1));
  CHECK(n_hat_formula(Vec<R>(4, R(0)), jhat, w, t, BilinearMap<R>(8)).max_abs() == 0);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    Sampler<R> s(9, "nhat", trial);
    Vec<R> psi = s.vec(8);
    BilinearMap<R> torsion = s.skew_bilinear(8);
    BilinearMap<R> nh = n_hat_formula(restrict_covector(psi, w), jhat, w, t, torsion);
    BilinearMap<R> full = nijenhuis_expansion(psi, t, torsion);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t l = 0; l < 4; ++l) CHECK(nh.on_basis(i, l) == full(w.basis_vector(i), w.basis_vector(l)));
  }
}

TEST_CASE("x6_part and the connection-difference identities") {
  const auto& t = model2().triple;
  CHECK(x6_part<R>({Vec<R>(8, R(0)), Vec<R>(8, R(0)), Vec<R>(8, R(0))}, t).max_abs() == 0);
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    Sampler<R> s(10, "x6", trial);
    Gammas<R> g = random_gammas(s, 8);
    BilinearMap<R> sum(8);
    for (int a = 1; a <= 3; ++a) sum += covector_times_endo(g[a - 1], t.J(a));
    for (int a = 1; a <= 3; ++a) {
      auto [b, c] = cyclic(a);
      BilinearMap<R> ga = covector_times_endo(g[a - 1], t.J(a));
      Vec<R> psi = psi_from_gammas(g, t, a);
      CHECK(oracle::max_over_basis<R>(8, [&](const Vec<R>& x, const Vec<R>& y) {
              return oracle::pi_J(ga, t.J(a), x, y);
            }) == 0);
      CHECK(oracle::max_over_basis<R>(8, [&](const Vec<R>& x, const Vec<R>& y) {
              Vec<R> rhs = scaled(scaled(t.J(b) * y, dot(psi, x)) + scaled(t.J(c) * y, dot(psi, t.J(a) * x)), R(-1, 2));
              return oracle::pi_J(sum, t.J(a), x, y) - rhs;
            }) == 0);
    }
  }
}

TEST_CASE("torsion correction: zero, trace-free input and brute-force traces") {
  const auto& t = model2().triple;
  CHECK(oproiu_correction(BilinearMap<R>(8), t).max_abs() == 0);
  // T(X,Y) = xi(X)eta(Y)u - xi(Y)eta(X)u with xi, eta vanishing on J_a u
  Vec<R> u = unit_vector<R>(8, 0);
  Matrix<R> ju = hstack(hstack(Matrix<R>::from_columns({t.J(1) * u}, 8), Matrix<R>::from_columns({t.J(2) * u}, 8)),
                        Matrix<R>::from_columns({t.J(3) * u}, 8));
  Matrix<R> ann = nullspace(Matrix<R>(ju.transpose()));
  Vec<R> xi = ann.column(0), eta = ann.column(1);
  BilinearMap<R> tf(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) tf.set_on_basis(i, j, scaled(u, R(xi[i] * eta[j] - xi[j] * eta[i])));
  CHECK((oproiu_correction(tf, t) - tf).max_abs() == 0);

  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    Sampler<R> s(11, "oproiu", trial);
    BilinearMap<R> th = s.skew_bilinear(8);
    BilinearMap<R> corr = oproiu_correction(th, t) - th;
    std::array<Vec<R>, 3> tau;
    for (int a = 1; a <= 3; ++a) {
      tau[a - 1] = Vec<R>(8);
      for (std::size_t i = 0; i < 8; ++i) tau[a - 1][i] = oracle::trace_JT(th, t.J(a), unit_vector<R>(8, i)) / R(6);
      CHECK(torsion_trace(th, t.J(a)) == tau[a - 1]);
    }
    for (int b = 1; b <= 3; ++b)
      for (std::size_t i = 0; i < 8; ++i) {
        Vec<R> x = unit_vector<R>(8, i);
        R expect = R(-7) * tau[b - 1][i];
        for (int a = 1; a <= 3; ++a)
          if (a != b) expect -= dot(tau[a - 1], t.J(b) * (t.J(a) * x));
        CHECK(oracle::trace_JT(corr, t.J(b), x) / R(6) == expect / R(6));
      }
  }
}

TEST_CASE("skew_correction_A: zero, the xi case and round trip") {
  const auto& m = model2();
  CHECK(skew_correction_A(m.omega, Tensor3<R>(8, 8, 8)).max_abs() == 0);
  Sampler<R> s(12, "A", 0);
  Vec<R> xi = s.vec(8);
  Tensor3<R> sx(8, 8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) sx(i, j, k) = R(2) * m.omega(j, k) * xi[i];
  BilinearMap<R> a = skew_correction_A(m.omega, sx);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(a.on_basis(i, j) == scaled(unit_vector<R>(8, j), xi[i]));
  Tensor3<R> sk = s.skew_last_pair(8);
  BilinearMap<R> b = skew_correction_A(m.omega, sk);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k)
        CHECK(R(2) * bilinear(m.omega, b.on_basis(i, j), unit_vector<R>(8, k)) == sk(i, j, k));
}
