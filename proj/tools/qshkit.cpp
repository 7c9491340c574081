#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qshkit/algebras.hpp"
#include "qshkit/report.hpp"

namespace {

enum Exit { ok = 0, verification_failed = 1, usage = 2, internal = 3 };

qshkit::MatrixLieAlgebra named_algebra(const std::string& name, const qshkit::SuiteConfig& c) {
  using namespace qshkit::algebras;
  if (name == "sl-r") return sl(c.n, NumberField::real);
  if (name == "sl-c") return sl(c.n, NumberField::complex);
  if (name == "sl-h") return sl(c.n, NumberField::quaternionic);
  if (name == "su") return su(c.p, c.q);
  if (name == "so") return so(c.p, c.q);
  if (name == "so-star") return so_star(c.n);
  if (name == "sp") return sp(c.n);
  throw std::invalid_argument("unknown algebra: " + name);
}

void emit(const qshkit::Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  qshkit::SuiteConfig config;
  if (const char* env = std::getenv("QSHKIT_TOL")) {
    try {
      config.tolerance = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "QSHKIT_TOL is not a number: " << env << "\n";
      return usage;
    }
    if (!(config.tolerance > 0)) {
      std::cerr << "QSHKIT_TOL must be positive\n";
      return usage;
    }
  }

  CLI::App app{"Verification runner for quaternionic skew-Hermitian linear algebra and submanifold checks"};
  std::string suite = "all", arith = "rational", out, algebra;
  auto* n_opt = app.add_option("--n", config.n, "quaternionic dimension of the model / example parameter")
                    ->check(CLI::PositiveNumber);
  app.add_option("--suite", suite, "suite to run")->check(CLI::IsMember(qshkit::suite_names()));
  app.add_option("--seed", config.seed, "base seed");
  app.add_option("--trials", config.trials, "random trials per identity")->check(CLI::PositiveNumber);
  app.add_option("--tol", config.tolerance, "float tolerance (default from QSHKIT_TOL)")->check(CLI::PositiveNumber);
  app.add_option("--arith", arith, "arithmetic")->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--p", config.p, "signature parameter p");
  app.add_option("--q", config.q, "signature parameter q");
  app.add_option("--k", config.k, "sub-example parameter k")->check(CLI::PositiveNumber);
  app.add_option("--n-cap", config.n_cap, "largest model dimension accepted by the random suites");
  app.add_option("--out", out, "report path (stdout when absent)");
  app.add_option("--algebra", algebra, "dump a named matrix Lie algebra (sl-r, sl-c, sl-h, su, so, so-star, sp) instead of running a suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }
  config.arithmetic = arith == "rational" ? qshkit::Arithmetic::rational : qshkit::Arithmetic::floating;

  try {
    if (!algebra.empty()) {
      emit(qshkit::to_json(named_algebra(algebra, config)), out);
      return ok;
    }
    if (suite == "flat-npq") {
      if (n_opt->count() == 0) config.n = config.p + config.q;
      if (config.n != config.p + config.q) throw std::invalid_argument("flat-npq needs p + q = n");
    }
    auto results = qshkit::run_suite(suite, config);
    emit(qshkit::run_report(suite, config, results, qshkit::utc_timestamp()), out);
    return qshkit::all_pass(results) ? ok : verification_failed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
}
