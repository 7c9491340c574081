#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qshkit/catalog.hpp"

namespace qshkit {

enum class Arithmetic { rational, floating };

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  double tolerance = 1e-10;
  Arithmetic arithmetic = Arithmetic::rational;
  std::size_t n = 2;
  std::size_t p = 1;
  std::size_t q = 1;
  std::size_t k = 1;
  std::size_t n_cap = 4;
  catalog::Caps caps;
};

struct ResultRecord {
  std::string name;
  Verdict verdict = Verdict::not_evaluated;
  std::optional<double> residual;
  std::string paper_ref;
  std::optional<std::size_t> trials;
};

const std::vector<std::string>& suite_names();

/// Runs a named suite; throws std::invalid_argument for unknown names or bad parameters.
std::vector<ResultRecord> run_suite(const std::string& suite, const SuiteConfig& config);

std::vector<ResultRecord> identities_suite(const SuiteConfig& config);
std::vector<ResultRecord> extrinsic_suite(const SuiteConfig& config);
std::vector<ResultRecord> submanifold_suite(const SuiteConfig& config);
std::vector<ResultRecord> example_records(const catalog::ExampleReport& report);

}  // namespace qshkit
