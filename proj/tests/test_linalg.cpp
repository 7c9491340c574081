#include "doctest.h"
#include "qshkit/linalg.hpp"
#include "qshkit/random.hpp"

using namespace qshkit;

TEST_CASE("rank and nullspace of a small rational matrix") {
  auto a = Matrix<Rational>::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  Matrix<Rational> k = nullspace(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
}

TEST_CASE("inverse round trip in both arithmetics") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Sampler<Rational> s(7, "inverse", trial);
    Matrix<Rational> a = s.matrix(6, 6);
    auto inv = inverse(a);
    if (!inv) {
      CHECK(rank(a) < 6);
      continue;
    }
    CHECK((a * *inv - Matrix<Rational>::identity(6)).is_zero());
    Matrix<double> af = to_double(a);
    auto invf = inverse(af);
    REQUIRE(invf);
    CHECK((af * *invf - Matrix<double>::identity(6)).max_abs() < 1e-9);
  }
  CHECK_FALSE(inverse(Matrix<Rational>::from_rows({{1, 2}, {2, 4}})));
}

TEST_CASE("solve returns nullopt for inconsistent systems") {
  auto a = Matrix<Rational>::from_rows({{1, 1}, {1, 1}});
  auto b = Matrix<Rational>::from_rows({{1}, {2}});
  CHECK_FALSE(solve(a, b));
  auto c = Matrix<Rational>::from_rows({{2}, {2}});
  auto x = solve(a, c);
  REQUIRE(x);
  CHECK((a * *x - c).is_zero());
}

TEST_CASE("subspace canonical form does not depend on the spanning set") {
  Sampler<Rational> s(3, "subspace", 0);
  Matrix<Rational> m = s.matrix(7, 3);
  Matrix<Rational> mix = s.matrix(3, 3);
  while (rank(mix) < 3) mix = s.matrix(3, 3);
  auto w1 = Subspace<Rational>::span(m), w2 = Subspace<Rational>::span(Matrix<Rational>(m * mix));
  CHECK(w1.basis() == w2.basis());
  CHECK(w1.equals(w2));
  for (std::size_t j = 0; j < 3; ++j) CHECK(w1.contains(m.column(j)));
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    Sampler<Rational> s(11, "grassmann", trial);
    std::size_t a = 1 + s.index(5), b = 1 + s.index(5);
    Matrix<Rational> shared = s.matrix(8, 1);
    auto u = Subspace<Rational>::span(hstack(shared, s.matrix(8, a)));
    auto v = Subspace<Rational>::span(hstack(shared, s.matrix(8, b)));
    auto i = u.intersect(v);
    CHECK(u.dim() + v.dim() == u.sum(v).dim() + i.dim());
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    CHECK(i.contains(shared.column(0)));
  }
}

TEST_CASE("float membership uses a relative residual") {
  auto w = Subspace<double>::span(Matrix<double>::from_rows({{1, 0}, {0, 1}, {1, 1}}));
  CHECK(w.contains(Vec<double>{1e6, 2e6, 3e6}));
  CHECK_FALSE(w.contains(Vec<double>{1, 2, 3.001}));
}

TEST_CASE("signature examples") {
  Inertia id = signature(Matrix<Rational>::identity(2));
  CHECK(id.positive == 2);
  CHECK(id.negative == 0);
  CHECK(id.zero == 0);
  auto d = Matrix<Rational>::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
  Inertia x = signature(d), y = signature(to_double(d));
  CHECK(x.positive == 1);
  CHECK(x.negative == 1);
  CHECK(x.zero == 1);
  CHECK(y.positive == 1);
  CHECK(y.negative == 1);
  CHECK(y.zero == 1);
}

TEST_CASE("float and rational signatures agree on random symmetric matrices") {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    Sampler<Rational> s(5, "sylvester", trial);
    std::size_t r = 1 + s.index(5);
    Matrix<Rational> b = s.matrix(6, r);
    Matrix<Rational> diag(r, r);
    for (std::size_t i = 0; i < r; ++i) diag(i, i) = s.coin() ? 1 : -1;
    Matrix<Rational> g = b * diag * b.transpose();
    Inertia e = signature(g), f = signature(to_double(g));
    CHECK(e.positive == f.positive);
    CHECK(e.negative == f.negative);
    CHECK(e.zero == f.zero);
    CHECK(e.positive + e.negative == rank(g));
  }
}
