#include "qshkit/report.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace qshkit {
namespace {

template <class T>
Json matrix_data(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (Field<T>::exact)
        row.push_back(m(i, j).get_str());
      else
        row.push_back(m(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
Json tensor_json(const BilinearMap<T>& b) {
  Json j;
  j["arithmetic"] = Field<T>::exact ? "rational" : "float";
  j["shape"] = {b.in1(), b.in2(), b.out()};
  Json data = Json::array();
  for (std::size_t i = 0; i < b.in1(); ++i) {
    Json slab = Json::array();
    for (std::size_t k = 0; k < b.in2(); ++k) {
      Json v = Json::array();
      for (const T& x : b.on_basis(i, k)) {
        if constexpr (Field<T>::exact)
          v.push_back(x.get_str());
        else
          v.push_back(x);
      }
      slab.push_back(std::move(v));
    }
    data.push_back(std::move(slab));
  }
  j["data"] = std::move(data);
  return j;
}

Json number_or_null(double x) { return std::isnan(x) ? Json(nullptr) : Json(x); }

}  // namespace

Json to_json(const Matrix<double>& m) { return Json{{"arithmetic", "float"}, {"data", matrix_data(m)}}; }
Json to_json(const Matrix<Rational>& m) { return Json{{"arithmetic", "rational"}, {"data", matrix_data(m)}}; }
Json to_json(const BilinearMap<double>& b) { return tensor_json(b); }
Json to_json(const BilinearMap<Rational>& b) { return tensor_json(b); }

Json to_json(const MatrixLieAlgebra& g) {
  Json basis = Json::array();
  for (const auto& x : g.basis()) basis.push_back(matrix_data(x));
  return Json{{"name", g.name()}, {"dim", g.dim()}, {"matrix_size", g.matrix_size()}, {"arithmetic", "rational"},
              {"basis", std::move(basis)}};
}

Json to_json(const SubspaceReport& r) {
  Json v = Json::object(), res = Json::object(), ev = Json::object();
  for (const auto& [k, x] : r.verdicts) v[k] = to_string(x);
  for (const auto& [k, x] : r.residuals) res[k] = number_or_null(x);
  for (const auto& [k, x] : r.evidence) ev[k] = x;
  return Json{{"verdicts", std::move(v)}, {"residuals", std::move(res)}, {"evidence", std::move(ev)}};
}

Json to_json(const catalog::ExampleReport& r) {
  Json dims = Json::object();
  for (const auto& [k, d] : r.dimensions) dims[k] = d;
  Json ids = Json::object();
  for (const auto& [k, x] : r.identity_residuals) ids[k] = number_or_null(x);
  Json j{{"name", r.name}, {"dimensions", std::move(dims)}};
  j["report"] = to_json(r.verdicts);
  j["identity_residuals"] = std::move(ids);
  return j;
}

Matrix<Rational> rational_matrix_from_json(const Json& j) {
  const Json& rows = j.at("data");
  const std::size_t r = rows.size(), c = r ? rows.at(0).size() : 0;
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t k = 0; k < c; ++k) {
      const Json& x = rows[i][k];
      if (x.is_string()) {
        Rational q;
        if (q.set_str(x.get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational entry");
        q.canonicalize();
        m(i, k) = q;
      } else if (x.is_number_integer()) {
        m(i, k) = Rational(x.get<long>());
      } else {
        throw std::invalid_argument("rational matrices need string or integer entries");
      }
    }
  }
  return m;
}

Matrix<double> float_matrix_from_json(const Json& j) {
  const Json& rows = j.at("data");
  const std::size_t r = rows.size(), c = r ? rows.at(0).size() : 0;
  Matrix<double> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t k = 0; k < c; ++k) {
      const Json& x = rows[i][k];
      if (x.is_string()) {
        Rational q(x.get<std::string>());
        q.canonicalize();
        m(i, k) = q.get_d();
      } else {
        m(i, k) = x.get<double>();
      }
    }
  }
  return m;
}

Json config_json(const std::string& suite, const SuiteConfig& c) {
  return Json{{"suite", suite},
              {"seed", c.seed},
              {"trials", c.trials},
              {"tolerance", c.tolerance},
              {"arithmetic", c.arithmetic == Arithmetic::rational ? "rational" : "float"},
              {"n", c.n},
              {"p", c.p},
              {"q", c.q},
              {"k", c.k},
              {"n_cap", c.n_cap}};
}

Json result_json(const ResultRecord& r) {
  Json j{{"name", r.name}, {"verdict", to_string(r.verdict)}};
  j["residual"] = r.residual ? number_or_null(*r.residual) : Json(nullptr);
  j["paper_ref"] = r.paper_ref;
  if (r.trials) j["trials"] = *r.trials;
  return j;
}

Json run_report(const std::string& suite, const SuiteConfig& config, const std::vector<ResultRecord>& results,
                const std::string& timestamp) {
  Json rs = Json::array();
  for (const auto& r : results) rs.push_back(result_json(r));
  return Json{{"version", 1}, {"config", config_json(suite, config)}, {"results", std::move(rs)}, {"timestamp", timestamp}};
}

bool all_pass(const std::vector<ResultRecord>& results) {
  for (const auto& r : results)
    if (r.verdict != Verdict::pass) return false;
  return true;
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qshkit
