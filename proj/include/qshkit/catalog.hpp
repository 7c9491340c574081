#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qshkit/subman.hpp"

namespace qshkit::catalog {

struct ExampleReport {
  std::string name;
  std::vector<std::pair<std::string, std::size_t>> dimensions;
  SubspaceReport verdicts;
  std::map<std::string, double> identity_residuals;

  bool passes() const { return verdicts.all_pass(); }
};

struct Caps {
  std::size_t max_n = 3;
  std::size_t max_pq = 3;
};

/// sl(n+1,H) / s(gl(1,H)+gl(n,H)) with its real and complex reductions.
ExampleReport example_A(std::size_t n, const Caps& caps = {});
/// su(2+p,q) / s(u(2)+u(p,q)) with the so(p+2,q) Lagrangian reduction.
ExampleReport example_B(std::size_t p, std::size_t q, const Caps& caps = {});
/// so*(2n+2) / so*(2n)u(1) with the so*(2k+2) reduction.
ExampleReport example_C(std::size_t n, std::size_t k, const Caps& caps = {});
/// Flat pseudo-Kähler coordinate subspace N_{p,q} of the linear model.
ExampleReport flat_Npq(std::size_t n, std::size_t p, std::size_t q);
/// sp(n+1) / sp(1)+sp(n): trivial isotropy center.
ExampleReport remark_HPn(std::size_t n, const Caps& caps = {});

}  // namespace qshkit::catalog
