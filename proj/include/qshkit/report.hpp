#pragma once

#include <string>

#include "json.hpp"

#include "qshkit/catalog.hpp"
#include "qshkit/lie.hpp"
#include "qshkit/suites.hpp"

namespace qshkit {

using Json = nlohmann::ordered_json;

Json to_json(const Matrix<double>& m);
Json to_json(const Matrix<Rational>& m);
Json to_json(const BilinearMap<double>& b);
Json to_json(const BilinearMap<Rational>& b);
Json to_json(const MatrixLieAlgebra& g);
Json to_json(const SubspaceReport& r);
Json to_json(const catalog::ExampleReport& r);

/// Reads {"arithmetic": "rational", "data": [["1/2", ...], ...]}.
Matrix<Rational> rational_matrix_from_json(const Json& j);
/// Reads {"arithmetic": "float", "data": [[0.5, ...], ...]}; rational entries are converted.
Matrix<double> float_matrix_from_json(const Json& j);

Json config_json(const std::string& suite, const SuiteConfig& config);
Json result_json(const ResultRecord& r);
/// {"version": 1, "config", "results", "timestamp"}
Json run_report(const std::string& suite, const SuiteConfig& config, const std::vector<ResultRecord>& results,
                const std::string& timestamp);

bool all_pass(const std::vector<ResultRecord>& results);

/// UTC, ISO 8601.
std::string utc_timestamp();

}  // namespace qshkit
