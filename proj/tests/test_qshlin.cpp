#include "doctest.h"
#include "qshkit/qshlin.hpp"
#include "qshkit/random.hpp"

using namespace qshkit;

TEST_CASE("standard model: triple and scalar 2-form hold exactly") {
  for (std::size_t n : {2, 3, 4}) {
    auto m = standard_model<Rational>(n);
    auto r = check_admissible_triple(m.triple);
    CHECK(r.passes());
    CHECK(r.max_residual() == 0.0);
    auto sf = is_scalar_two_form(m.omega, m.triple);
    CHECK(sf.ok);
    CHECK(sf.residual == 0.0);
    for (const auto& g : m.metrics) {
      CHECK(g.inertia.positive == 2 * n);
      CHECK(g.inertia.negative == 2 * n);
      CHECK(g.inertia.zero == 0);
    }
  }
}

TEST_CASE("omega_0 is J_a-invariant on every basis pair") {
  auto m = standard_model<Rational>(2);
  for (int a = 1; a <= 3; ++a)
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        Vec<Rational> x = unit_vector<Rational>(8, i), y = unit_vector<Rational>(8, j);
        CHECK(bilinear(m.omega, m.triple.J(a) * x, m.triple.J(a) * y) == bilinear(m.omega, x, y));
      }
}

TEST_CASE("g_0^2 evaluates Re(a^t c + b^t d)") {
  auto m = standard_model<Rational>(2);
  Vec<Rational> x = unit_vector<Rational>(8, 0);
  CHECK(bilinear(m.metrics[1].g, x, x) == 1);
  // (a, b) with a = (1 + 2i, 0), b = (0, 3); (c, d) with c = (1, 0), d = (0, 5 - i)
  Vec<Rational> u{1, 2, 0, 0, 0, 0, 3, 0}, v{1, 0, 0, 0, 0, 0, 5, -1};
  CHECK(bilinear(m.metrics[1].g, u, v) == 1 + 15);
}

TEST_CASE("flipping J3 shows up in J1J2=J3 with twice its size") {
  auto t = standard_triple<Rational>(2);
  AdmissibleTriple<Rational> bad{{t.J(1), t.J(2), -t.J(3)}};
  auto r = check_admissible_triple(bad);
  CHECK_FALSE(r.passes());
  for (const auto& e : r.entries)
    if (e.name == "J1J2=J3") CHECK(e.residual == doctest::Approx(2.0 * to_double(t.J(3)).max_abs()));
}

TEST_CASE("conjugated triples stay admissible in float arithmetic") {
  auto t = standard_triple<double>(2);
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Sampler<double> s(1, "similarity", trial);
    Matrix<double> p = s.matrix(8, 8) + Matrix<double>::identity(8) * 4.0;
    auto pinv = inverse(p);
    REQUIRE(pinv);
    AdmissibleTriple<double> c{{p * t.J(1) * *pinv, p * t.J(2) * *pinv, p * t.J(3) * *pinv}};
    CHECK(check_admissible_triple(c).max_residual() <= 1e-10);
  }
}

TEST_CASE("is_scalar_two_form rejects symmetric and degenerate forms") {
  auto m = standard_model<Rational>(2);
  CHECK(is_scalar_two_form(m.omega, m.triple).ok);
  auto sym = is_scalar_two_form(m.metrics[0].g, m.triple);
  CHECK_FALSE(sym.ok);
  CHECK_FALSE(sym.skew);
  Matrix<Rational> z = m.omega;
  for (std::size_t j = 0; j < 8; ++j) z(0, j) = 0;
  auto deg = is_scalar_two_form(z, m.triple);
  CHECK_FALSE(deg.ok);
  CHECK_FALSE(deg.full_rank);
}

TEST_CASE("metric_from_pair") {
  auto m = standard_model<Rational>(2);
  auto g2 = metric_from_pair(m.omega, m.triple.J(2));
  CHECK(g2.g == standard_g2<Rational>(2));
  CHECK(g2.inertia.positive == 4);
  CHECK(g2.inertia.negative == 4);
  auto g1 = metric_from_pair(m.omega, m.triple.J(1));
  CHECK(g1.g * (-m.triple.J(1)) == m.omega);
  Matrix<Rational> padded = m.omega;
  for (std::size_t i = 0; i < 8; ++i) padded(i, 7) = padded(7, i) = 0;
  CHECK_THROWS_AS(metric_from_pair(padded, m.triple.J(1)), StructuralError);
}

TEST_CASE("signature of g_0^3 for n = 3") {
  auto m = standard_model<Rational>(3);
  CHECK(m.metrics[2].inertia.positive == 6);
  CHECK(m.metrics[2].inertia.negative == 6);
  Inertia f = signature(to_double(m.metrics[2].g));
  CHECK(f.positive == 6);
  CHECK(f.negative == 6);
}

TEST_CASE("omega complement and symplectic subspaces in the block example") {
  // omega = e1^e2 + e3^e4
  auto omega = Matrix<Rational>::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  auto e = [](std::size_t i) { return unit_vector<Rational>(4, i); };
  auto w12 = Subspace<Rational>::span(std::vector<Vec<Rational>>{e(0), e(1)}, 4);
  auto w34 = Subspace<Rational>::span(std::vector<Vec<Rational>>{e(2), e(3)}, 4);
  auto w13 = Subspace<Rational>::span(std::vector<Vec<Rational>>{e(0), e(2)}, 4);
  CHECK(omega_complement(omega, w12).equals(w34));
  // omega(u, e1) = -u2 and omega(u, e3) = -u4
  CHECK(omega_complement(omega, w13).equals(w13));
  CHECK(omega_complement(omega, Subspace<Rational>::full(4)).dim() == 0);
  CHECK(is_symplectic_subspace(omega, w12));
  CHECK_FALSE(is_symplectic_subspace(omega, w13));
  auto odd = Subspace<Rational>::span(std::vector<Vec<Rational>>{e(0), e(1), e(2)}, 4);
  CHECK_FALSE(is_symplectic_subspace(omega, odd));
}

TEST_CASE("omega complement rank-nullity on random subspaces") {
  auto m = standard_model<Rational>(2);
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    Sampler<Rational> s(2, "complement", trial);
    auto w = Subspace<Rational>::span(s.matrix(8, 1 + s.index(8)));
    auto c = omega_complement(m.omega, w);
    CHECK(w.dim() + c.dim() == 8);
    CHECK((c.basis().transpose() * m.omega * w.basis()).is_zero());
    CHECK(is_symplectic_subspace(m.omega, w) == (w.intersect(c).dim() == 0));
  }
}

TEST_CASE("standard model rejects n < 2") { CHECK_THROWS(standard_model<Rational>(1)); }
