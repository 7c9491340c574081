#include "doctest.h"
#include "qshkit/random.hpp"
#include "qshkit/report.hpp"

using namespace qshkit;

TEST_CASE("rational matrices round-trip through JSON") {
  Sampler<Rational> s(30, "json", 0);
  Matrix<Rational> m = s.matrix(3, 4);
  m(0, 0) = Rational(7, 3);
  Json j = to_json(m);
  CHECK(j["arithmetic"] == "rational");
  CHECK(j["data"][0][0] == "7/3");
  CHECK(rational_matrix_from_json(Json::parse(j.dump())) == m);
  Matrix<double> f = float_matrix_from_json(j);
  CHECK(f(0, 0) == doctest::Approx(7.0 / 3.0));
}

TEST_CASE("float matrices and tensors serialize with shapes") {
  Matrix<double> m = Matrix<double>::from_rows({{1, 2}, {3, 4}});
  CHECK(float_matrix_from_json(Json::parse(to_json(m).dump())) == m);
  BilinearMap<Rational> b(2, 3, 4);
  Json t = to_json(b);
  CHECK(t["shape"] == Json::array({2, 3, 4}));
  CHECK(t["data"].size() == 2);
  CHECK(t["data"][0].size() == 3);
  CHECK(t["data"][0][0].size() == 4);
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS(rational_matrix_from_json(Json::parse(R"({"data": [["1", "2"], ["3"]]})")));
  CHECK_THROWS(rational_matrix_from_json(Json::parse(R"({"data": [[0.5]]})")));
}

TEST_CASE("subspace report serialization") {
  SubspaceReport r;
  r.set("a", true, 0.0, "why");
  r.skip("b", "no data");
  Json j = to_json(r);
  CHECK(j["verdicts"]["a"] == "pass");
  CHECK(j["verdicts"]["b"] == "not-evaluated");
  CHECK(j["residuals"]["b"].is_null());
  CHECK(j["evidence"]["a"] == "why");
}

TEST_CASE("run report schema and verdict aggregation") {
  SuiteConfig c;
  c.trials = 3;
  auto results = run_suite("example-b", c);
  Json report = run_report("example-b", c, results, "T");
  std::vector<std::string> keys;
  for (auto it = report.begin(); it != report.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"version", "config", "results", "timestamp"});
  CHECK(report["version"] == 1);
  bool found = false;
  for (const auto& r : report["results"]) {
    CHECK(r.contains("paper_ref"));
    CHECK(r.contains("residual"));
    if (r["name"] == "example-b(p=1,q=1): lagrangian") found = r["verdict"] == "pass";
  }
  CHECK(found);
  CHECK(all_pass(results));
  results.back().verdict = Verdict::fail;
  CHECK_FALSE(all_pass(results));
}

TEST_CASE("suites are deterministic and reject bad parameters") {
  SuiteConfig c;
  c.trials = 5;
  for (const char* suite : {"identities", "extrinsic", "submanifold"}) {
    Json a = run_report(suite, c, run_suite(suite, c), "");
    Json b = run_report(suite, c, run_suite(suite, c), "");
    CHECK(a.dump() == b.dump());
    SuiteConfig f = c;
    f.arithmetic = Arithmetic::floating;
    SuiteConfig g = f;
    g.seed = 43;
    CHECK(run_report(suite, f, run_suite(suite, f), "")["results"].dump() !=
          run_report(suite, g, run_suite(suite, g), "")["results"].dump());
  }
  SuiteConfig zero = c;
  zero.trials = 0;
  CHECK_THROWS_AS(run_suite("identities", zero), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nonsense", c), std::invalid_argument);
  SuiteConfig mismatch = c;
  mismatch.n = 3;
  CHECK_THROWS_AS(run_suite("flat-npq", mismatch), std::invalid_argument);
}

TEST_CASE("float suites pass at the default tolerance") {
  SuiteConfig c;
  c.trials = 20;
  c.arithmetic = Arithmetic::floating;
  for (std::size_t n : {2, 3}) {
    c.n = n;
    for (const char* suite : {"identities", "extrinsic", "submanifold"})
      for (const auto& r : run_suite(suite, c)) CHECK_MESSAGE(r.verdict == Verdict::pass, r.name);
  }
}
