// Acceptance criteria runner: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qshkit/random.hpp"
#include "qshkit/report.hpp"

using namespace qshkit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

const ResultRecord* find(const std::vector<ResultRecord>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return &r;
  return nullptr;
}

bool record_ok(const std::vector<ResultRecord>& rs, const std::string& name, double tol, std::size_t min_trials,
               std::string& detail) {
  const ResultRecord* r = find(rs, name);
  if (!r) {
    detail += " missing '" + name + "';";
    return false;
  }
  bool ok = r->verdict == Verdict::pass && r->residual && *r->residual <= tol && (!r->trials || *r->trials >= min_trials);
  if (!ok) detail += " failed '" + name + "';";
  return ok;
}

bool verdict_ok(const catalog::ExampleReport& r, const std::string& name, std::string& detail) {
  bool ok = r.verdicts.passed(name);
  if (!ok) detail += " " + r.name + " '" + name + "';";
  return ok;
}

bool dims_ok(const catalog::ExampleReport& r, const std::vector<std::pair<std::string, std::size_t>>& expect,
             std::string& detail) {
  bool ok = true;
  for (const auto& [label, value] : expect) {
    bool found = false;
    for (const auto& [k, v] : r.dimensions)
      if (k == label) found = v == value;
    if (!found) detail += " " + r.name + " dim " + label + " != " + std::to_string(value) + ";";
    ok = ok && found;
  }
  return ok;
}

Outcome linear_model() {
  Outcome o;
  for (std::size_t n : {2, 3, 4}) {
    auto t0 = Clock::now();
    auto m = standard_model<Rational>(n);
    auto tr = check_admissible_triple(m.triple);
    auto sf = is_scalar_two_form(m.omega, m.triple);
    bool ok = tr.passes() && tr.max_residual() == 0 && sf.ok && sf.residual == 0;
    for (const auto& g : m.metrics) ok = ok && g.inertia.positive == 2 * n && g.inertia.negative == 2 * n && g.inertia.zero == 0;
    double s = seconds_since(t0);
    ok = ok && s < 1.0;
    o.pass = o.pass && ok;
    o.detail += " n=" + std::to_string(n) + " " + fmt(s) + "s";
  }
  return o;
}

template <class T>
double projection_trials(std::size_t trials) {
  auto m = standard_model<T>(2);
  const auto& t = m.triple;
  double worst = 0;
  auto track = [&](const T& r) { worst = std::max(worst, Field<T>::to_double(r)); };
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Sampler<T> s(42, "acceptance projections", trial);
    BilinearMap<T> phi = s.skew_bilinear(8);
    BilinearMap<T> wv = omega_times_vector(m.omega, s.vec(8));
    Gammas<T> g{s.vec(8), s.vec(8), s.vec(8)};
    BilinearMap<T> sum(8);
    for (int a = 1; a <= 3; ++a) sum += covector_times_endo(g[a - 1], t.J(a));
    for (int a = 1; a <= 3; ++a) {
      auto [b, c] = cyclic(a);
      const Matrix<T>& ja = t.J(a);
      BilinearMap<T> p = pi_J(phi, ja);
      track((pi_J(p, ja) - p).max_abs());
      track(pi_J(wv, ja).max_abs());
      BilinearMap<T> ga = covector_times_endo(g[a - 1], ja);
      track(pi_J(ga, ja).max_abs());
      BilinearMap<T> rc = ga + covector_times_endo(pull_back(g[a - 1], t.J(c)), t.J(b));
      track((T(2) * pi_J(ga, t.J(c)) - rc).max_abs());
      Vec<T> psi = psi_from_gammas(g, t, a);
      BilinearMap<T> rhs = covector_times_endo(psi, t.J(b)) + covector_times_endo(pull_back(psi, ja), t.J(c));
      track((T(2) * pi_J(sum, ja) + rhs).max_abs());
    }
  }
  return worst;
}

Outcome projections() {
  Outcome o;
  auto t0 = Clock::now();
  double f = projection_trials<double>(100);
  double sf = seconds_since(t0);
  t0 = Clock::now();
  double r = projection_trials<Rational>(100);
  double sr = seconds_since(t0);
  o.pass = f <= 1e-10 && r == 0 && sf < 10 && sr < 10;
  o.detail = " 100 trials: float max " + fmt(f) + " (" + fmt(sf) + "s), rational max " + fmt(r) + " (" + fmt(sr) + "s)";
  return o;
}

template <class T>
double nijenhuis_trials(std::size_t trials) {
  auto m = standard_model<T>(2);
  const auto& t = m.triple;
  double worst = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Sampler<T> s(42, "acceptance nijenhuis", trial);
    BilinearMap<T> torsion = s.skew_bilinear(8);
    Gammas<T> g{s.vec(8), s.vec(8), s.vec(8)};
    BilinearMap<T> zero(8);
    worst = std::max(worst, Field<T>::to_double(
                                (nijenhuis_algebraic(t.J(1), zero, torsion) - T(4) * pi_J(torsion, t.J(1))).max_abs()));
    BilinearMap<T> k = nabla_J_from_gammas(g, t, 1);
    worst = std::max(worst, Field<T>::to_double((nijenhuis_algebraic(t.J(1), k, torsion) -
                                                 nijenhuis_expansion(psi_from_gammas(g, t, 1), t, torsion))
                                                    .max_abs()));
  }
  return worst;
}

Outcome nijenhuis() {
  double f = nijenhuis_trials<double>(100), r = nijenhuis_trials<Rational>(100);
  return {f <= 1e-10 && r <= 1e-10, " 100 torsions: float max " + fmt(f) + ", rational max " + fmt(r)};
}

Outcome extrinsic() {
  Outcome o;
  for (Arithmetic a : {Arithmetic::floating, Arithmetic::rational}) {
    SuiteConfig c;
    c.arithmetic = a;
    auto rs = extrinsic_suite(c);
    for (const char* name : {"Gauss: alpha - alpha^t = (T)^perp", "Gauss: induced torsion = (T)^top"})
      o.pass = record_ok(rs, name, 1e-10, 100, o.detail) && o.pass;
    o.pass = record_ok(rs, "alpha symmetric for torsion-free connections", 1e-10, 1, o.detail) && o.pass;
    o.pass = record_ok(rs, "shape operator defining relation", 1e-10, 100, o.detail) && o.pass;
    const ResultRecord* g = find(rs, "Gauss: alpha - alpha^t = (T)^perp");
    if (g && g->residual)
      o.detail += std::string(a == Arithmetic::rational ? " rational" : " float") + " max " + fmt(*g->residual);
  }
  return o;
}

std::vector<ResultRecord> submanifold_records() {
  static const std::vector<ResultRecord> rs = submanifold_suite(SuiteConfig{});
  return rs;
}

Outcome psi_theory() {
  Outcome o;
  const auto& rs = submanifold_records();
  for (const char* name : {"psi kernel codimension is 0 or 2", "psi kernel is Jhat-invariant", "V^psi(Z, Y) = Y",
                           "psi splitting (dim 6): direct and omega_hat-orthogonal",
                           "psi splitting (dim 6): span{Psi, J Psi} has signature (2,0)",
                           "psi splitting (dim 6): T^psi signature (2,2), total (4,2)",
                           "psi splitting (dim 4): T^psi has codimension 2"})
    o.pass = record_ok(rs, name, 0.0, 1, o.detail) && o.pass;
  if (o.pass) o.detail = " exact on all instances";
  return o;
}

Outcome biconditional() {
  Outcome o;
  const auto& rs = submanifold_records();
  o.pass = record_ok(rs, "integrability report: tangential condition iff I1 or I2", 0.0, 100, o.detail);
  o.pass = record_ok(rs, "integrability report: generic instances violate the condition", 0.0, 1, o.detail) && o.pass;
  if (const ResultRecord* r = find(rs, "integrability report: tangential condition iff I1 or I2"))
    o.detail += " " + std::to_string(r->trials.value_or(0)) + " instances";
  return o;
}

Outcome example_a() {
  Outcome o;
  for (std::size_t n : {2, 3}) {
    auto t0 = Clock::now();
    auto r = catalog::example_A(n);
    double s = seconds_since(t0);
    o.pass = dims_ok(r, {{"m", 8 * n}, {"m_R", 2 * n}, {"m_C", 4 * n}}, o.detail) && o.pass;
    o.pass = r.passes() && o.pass;
    for (const char* name : {"pair: [m,m] in l", "pair_R: [m,m] in l", "pair_C: [m,m] in l", "m_R totally geodesic",
                             "m_C totally geodesic", "omega_R nondegenerate", "N_C pseudo_kahler"})
      o.pass = verdict_ok(r, name, o.detail) && o.pass;
    if (n == 2) o.pass = o.pass && s < 10;
    o.detail += " n=" + std::to_string(n) + " " + fmt(s) + "s";
  }
  return o;
}

Outcome example_b() {
  Outcome o;
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}}) {
    auto r = catalog::example_B(p, q);
    for (const char* name : {"I_o(m_hat) ∩ m_hat = 0", "m = m_hat + I_o(m_hat)", "B_m(m_hat, I_o m_hat) = 0",
                             "omega_hat = 0", "lagrangian"})
      o.pass = verdict_ok(r, name, o.detail) && o.pass;
    o.pass = r.passes() && o.pass;
    o.detail += " " + r.name;
  }
  return o;
}

Outcome example_c() {
  Outcome o;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {3, 2}}) {
    auto r = catalog::example_C(n, k);
    o.pass = dims_ok(r, {{"so*(2n) summand", n * (2 * n - 1)}, {"m_hat", 4 * k}}, o.detail) && o.pass;
    for (const char* name : {"m_hat Q-invariant", "omega_hat nondegenerate", "m_hat totally geodesic"})
      o.pass = verdict_ok(r, name, o.detail) && o.pass;
    o.pass = r.passes() && o.pass;
    o.detail += " " + r.name;
  }
  return o;
}

Outcome flat() {
  Outcome o;
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 0}}) {
    auto r = catalog::flat_Npq(p + q, p, q);
    o.pass = verdict_ok(r, "signature (2q,2p)", o.detail) && verdict_ok(r, "pseudo_kahler", o.detail) && r.passes() && o.pass;
    o.detail += " " + r.name;
  }
  return o;
}

Outcome determinism() {
  SuiteConfig c;
  auto body = [&](const std::string& stamp) {
    Json j = run_report("all", c, run_suite("all", c), stamp);
    j.erase("timestamp");
    return j.dump();
  };
  std::string a = body("first"), b = body("second");
  return {a == b, " run(all) bodies " + std::string(a == b ? "identical" : "differ") + " (" + std::to_string(a.size()) + " bytes)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"linear model invariants for n = 2, 3, 4", linear_model},
      {"projection algebra identities", projections},
      {"Nijenhuis consistency", nijenhuis},
      {"extrinsic Gauss identities and shape operators", extrinsic},
      {"psi kernel, V^psi and psi splitting", psi_theory},
      {"totally complex biconditional", biconditional},
      {"example A", example_a},
      {"example B", example_b},
      {"example C", example_c},
      {"flat N_pq", flat},
      {"determinism of run(all)", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    std::printf("criterion %2zu %s: %s -%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
