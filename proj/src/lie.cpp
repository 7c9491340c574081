#include "qshkit/lie.hpp"

#include <tuple>

namespace qshkit {

RVec flatten(const RMatrix& x) { return x.data(); }

namespace {

RMatrix unflatten(const RVec& v, std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

}  // namespace

MatrixSpan::MatrixSpan(std::size_t matrix_size, const std::vector<RMatrix>& spanning) : size_(matrix_size) {
  const std::size_t flat = matrix_size * matrix_size;
  RMatrix rows(spanning.size(), flat);
  for (std::size_t k = 0; k < spanning.size(); ++k) {
    if (spanning[k].rows() != matrix_size || spanning[k].cols() != matrix_size)
      throw std::invalid_argument("matrix size mismatch in span");
    const auto& d = spanning[k].data();
    for (std::size_t e = 0; e < flat; ++e) rows(k, e) = d[e];
  }
  auto ech = rref(rows);
  pivots_ = ech.pivots;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    basis_.push_back(unflatten(ech.reduced.row(k), matrix_size));
    std::vector<std::pair<std::size_t, Rational>> nz;
    for (std::size_t e = 0; e < flat; ++e)
      if (sgn(ech.reduced(k, e)) != 0) nz.emplace_back(e, ech.reduced(k, e));
    sparse_.push_back(std::move(nz));
  }
}

std::optional<RVec> MatrixSpan::try_coordinates(const RMatrix& x) const {
  if (x.rows() != size_ || x.cols() != size_) throw std::invalid_argument("matrix size mismatch");
  const auto& d = x.data();
  RVec c(dim());
  std::vector<Rational> rec(d.size());
  for (std::size_t k = 0; k < dim(); ++k) {
    c[k] = d[pivots_[k]];
    if (sgn(c[k]) == 0) continue;
    for (const auto& [e, v] : sparse_[k]) rec[e] += c[k] * v;
  }
  for (std::size_t e = 0; e < d.size(); ++e)
    if (rec[e] != d[e]) return std::nullopt;
  return c;
}

RVec MatrixSpan::coordinates(const RMatrix& x) const {
  auto c = try_coordinates(x);
  if (!c) throw std::domain_error("matrix not in span");
  return *c;
}

RMatrix MatrixSpan::element(const RVec& c) const {
  if (c.size() != dim()) throw std::invalid_argument("coordinate length mismatch");
  RMatrix m(size_, size_);
  auto& d = m.mutable_data();
  for (std::size_t k = 0; k < dim(); ++k) {
    if (sgn(c[k]) == 0) continue;
    for (const auto& [e, v] : sparse_[k]) d[e] += c[k] * v;
  }
  return m;
}

MatrixLieAlgebra::MatrixLieAlgebra(std::string name, const MatrixSpan& span)
    : MatrixSpan(span), name_(std::move(name)) {
  const std::size_t n = dim();
  ad_.assign(n, RMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto c = try_coordinates(commutator((*this)[i], (*this)[j]));
      if (!c) throw StructuralError("span '" + name_ + "' is not closed under the bracket");
      for (std::size_t k = 0; k < n; ++k) {
        ad_[i](k, j) = (*c)[k];
        ad_[j](k, i) = -(*c)[k];
      }
    }
}

RMatrix MatrixLieAlgebra::ad_of(const RMatrix& x) const {
  const std::size_t n = dim();
  RMatrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) a.set_column(j, coordinates(commutator(x, (*this)[j])));
  return a;
}

MatrixSpan solve_linear_conditions(std::size_t matrix_size, const std::vector<LinearCondition>& conditions,
                                   const std::vector<RMatrix>& start) {
  const std::size_t flat = matrix_size * matrix_size;
  std::vector<RVec> current;
  if (start.empty()) {
    for (std::size_t e = 0; e < flat; ++e) current.push_back(unit_vector<Rational>(flat, e));
  } else {
    for (const auto& s : start) current.push_back(flatten(s));
  }
  for (const auto& f : conditions) {
    if (current.empty()) break;
    RMatrix images(flat, current.size());
    for (std::size_t k = 0; k < current.size(); ++k) {
      RMatrix y = f(unflatten(current[k], matrix_size));
      if (y.rows() != matrix_size || y.cols() != matrix_size)
        throw std::invalid_argument("condition must return a matrix of the same size");
      images.set_column(k, y.data());
    }
    RMatrix null = nullspace(images);
    std::vector<RVec> next;
    for (std::size_t j = 0; j < null.cols(); ++j) {
      RVec v(flat);
      for (std::size_t k = 0; k < current.size(); ++k) {
        const Rational& c = null(k, j);
        if (sgn(c) == 0) continue;
        for (std::size_t e = 0; e < flat; ++e)
          if (sgn(current[k][e]) != 0) v[e] += c * current[k][e];
      }
      next.push_back(std::move(v));
    }
    current = std::move(next);
  }
  std::vector<RMatrix> mats;
  for (const auto& v : current) mats.push_back(unflatten(v, matrix_size));
  return MatrixSpan(matrix_size, mats);
}

MatrixLieAlgebra stabilizer_subalgebra(std::string name, std::size_t matrix_size,
                                       const std::vector<LinearCondition>& conditions,
                                       const std::vector<RMatrix>& start) {
  return MatrixLieAlgebra(std::move(name), solve_linear_conditions(matrix_size, conditions, start));
}

namespace cond {

LinearCondition commutes_with(RMatrix a) {
  return [a = std::move(a)](const RMatrix& x) { return x * a - a * x; };
}

LinearCondition anticommutes_with(RMatrix a) {
  return [a = std::move(a)](const RMatrix& x) { return x * a + a * x; };
}

LinearCondition preserves_form(RMatrix f) {
  return [f = std::move(f)](const RMatrix& x) { return x.transpose() * f + f * x; };
}

LinearCondition trace_against(RMatrix a) {
  return [a = std::move(a)](const RMatrix& x) {
    RMatrix out(x.rows(), x.cols());
    out(0, 0) = (a * x).trace();
    return out;
  };
}

LinearCondition support(std::function<bool(std::size_t, std::size_t)> allowed, std::size_t size) {
  return [allowed = std::move(allowed), size](const RMatrix& x) {
    RMatrix out(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        if (!allowed(i, j)) out(i, j) = x(i, j);
    return out;
  };
}

LinearCondition block_diagonal(const std::vector<std::size_t>& block_sizes) {
  std::vector<std::size_t> owner;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) owner.insert(owner.end(), block_sizes[b], b);
  const std::size_t size = owner.size();
  return support([owner](std::size_t i, std::size_t j) { return owner[i] == owner[j]; }, size);
}

}  // namespace cond

RMatrix killing_form(const MatrixLieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> nz(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(g.ad(i)(r, c)) != 0) nz[i].emplace_back(r, c, g.ad(i)(r, c));
  RMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational s = 0;
      for (const auto& [r, c, v] : nz[i]) {
        const Rational& w = g.ad(j)(c, r);
        if (sgn(w) != 0) s += v * w;
      }
      b(i, j) = s;
      b(j, i) = s;
    }
  return b;
}

RMatrix center_coordinates(const MatrixLieAlgebra& l) {
  const std::size_t n = l.dim();
  if (n == 0) return RMatrix(0, 0);
  // rows indexed by (j, k): sum_i z_i ad_i(k, j) = 0
  RMatrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) stacked(j * n + k, i) = l.ad(i)(k, j);
  return nullspace(stacked);
}

MatrixSpan center(const MatrixLieAlgebra& l) {
  RMatrix z = center_coordinates(l);
  std::vector<RMatrix> mats;
  for (std::size_t c = 0; c < z.cols(); ++c) mats.push_back(l.element(z.column(c)));
  return MatrixSpan(l.matrix_size(), mats);
}

SymmetricPair::SymmetricPair(MatrixLieAlgebra g, MatrixLieAlgebra l, MatrixSpan m)
    : g_(std::move(g)), l_(std::move(l)), m_(std::move(m)) {
  const std::size_t dg = g_.dim(), dl = l_.dim(), dm = m_.dim();
  if (dl + dm != dg) throw StructuralError("dim l + dim m must equal dim g");
  killing_ = killing_form(g_);
  RMatrix coords(dg, dg);
  for (std::size_t k = 0; k < dl; ++k) coords.set_column(k, g_.coordinates(l_[k]));
  for (std::size_t k = 0; k < dm; ++k) coords.set_column(dl + k, g_.coordinates(m_[k]));
  auto inv = inverse(coords);
  if (!inv) throw StructuralError("l and m do not span g directly");
  decomp_inv_ = *inv;
  RMatrix lc = coords.block(0, 0, dg, dl), mc = coords.block(0, dl, dg, dm);
  killing_orthogonal_ = (lc.transpose() * killing_ * mc).is_zero();
  killing_m_ = mc.transpose() * killing_ * mc;

  reductive_ = true;
  for (std::size_t a = 0; a < dl && reductive_; ++a)
    for (std::size_t b = 0; b < dm; ++b) {
      auto p = decompose(commutator(l_[a], m_[b]));
      if (std::any_of(p.l.begin(), p.l.end(), [](const Rational& x) { return sgn(x) != 0; })) {
        reductive_ = false;
        break;
      }
    }
  symmetric_ = true;
  std::vector<RVec> lparts;
  for (std::size_t a = 0; a < dm; ++a)
    for (std::size_t b = a + 1; b < dm; ++b) {
      auto p = decompose(commutator(m_[a], m_[b]));
      if (std::any_of(p.m.begin(), p.m.end(), [](const Rational& x) { return sgn(x) != 0; })) symmetric_ = false;
      lparts.push_back(p.l);
    }
  mm_spans_l_ = dl == 0 || (!lparts.empty() && rank(RMatrix::from_columns(lparts, dl)) == dl);
}

SymmetricPair::Parts SymmetricPair::decompose(const RMatrix& x) const {
  RVec c = decomp_inv_ * g_.coordinates(x);
  Parts p;
  p.l.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(l_.dim()));
  p.m.assign(c.begin() + static_cast<std::ptrdiff_t>(l_.dim()), c.end());
  return p;
}

RMatrix SymmetricPair::ad_m(const RMatrix& x) const {
  auto [a, res] = ad_m_projected(x);
  if (sgn(res) != 0) throw StructuralError("ad(x) does not preserve m");
  return a;
}

std::pair<RMatrix, Rational> SymmetricPair::ad_m_projected(const RMatrix& x) const {
  const std::size_t dm = m_.dim();
  RMatrix a(dm, dm);
  Rational worst = 0;
  for (std::size_t j = 0; j < dm; ++j) {
    auto p = decompose(commutator(x, m_[j]));
    a.set_column(j, p.m);
    Rational r = max_abs(p.l);
    if (r > worst) worst = r;
  }
  return {a, worst};
}

BilinearMap<Rational> SymmetricPair::m_bracket() const {
  const std::size_t dm = m_.dim();
  BilinearMap<Rational> b(dm);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = i + 1; j < dm; ++j) {
      RVec c = decompose(commutator(m_[i], m_[j])).m;
      b.set_on_basis(i, j, c);
      b.set_on_basis(j, i, scaled(c, Rational(-1)));
    }
  return b;
}

SymmetricPair reductive_split(const MatrixLieAlgebra& g, const MatrixLieAlgebra& l) {
  RMatrix b = killing_form(g);
  const std::size_t dg = g.dim(), dl = l.dim();
  RMatrix lc(dg, dl);
  for (std::size_t k = 0; k < dl; ++k) lc.set_column(k, g.coordinates(l[k]));
  if (rank(RMatrix(lc.transpose() * b * lc)) != dl)
    throw StructuralError("Killing form is degenerate on the subalgebra: no reductive complement");
  RMatrix mc = nullspace(RMatrix(lc.transpose() * b));
  std::vector<RMatrix> mats;
  for (std::size_t k = 0; k < mc.cols(); ++k) mats.push_back(g.element(mc.column(k)));
  SymmetricPair pair(g, l, MatrixSpan(g.matrix_size(), mats));
  if (!pair.reductive()) throw StructuralError("[l, m] is not contained in m");
  return pair;
}

namespace {

// First nonzero entry of the first column.
Rational leading_entry(const RMatrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (sgn(a(i, j)) != 0) return a(i, j);
  return 0;
}

// lambda with a*a = lambda*Id, if any.
std::optional<Rational> scalar_square(const RMatrix& a) {
  RMatrix sq = a * a;
  Rational lambda = sq(0, 0);
  if (!(sq == RMatrix::identity(a.rows()) * lambda)) return std::nullopt;
  return lambda;
}

}  // namespace

RMatrix isotropy_structure(const RMatrix& z0, const SymmetricPair& pair, StructureKind kind) {
  RMatrix a = pair.ad_m(z0);
  if (a.rows() == 0) throw StructuralError("m is trivial");
  auto lambda = scalar_square(a);
  if (!lambda) throw StructuralError("(ad_m Z0)^2 is not a multiple of the identity");
  if (sgn(*lambda) == 0) throw StructuralError("ad_m Z0 is nilpotent");
  if ((kind == StructureKind::complex) != (sgn(*lambda) < 0))
    throw StructuralError("sign of (ad_m Z0)^2 does not match the requested structure kind");
  Rational root;
  if (!exact_sqrt(Rational(abs(*lambda)), root)) throw StructuralError("normalization is not rational");
  RMatrix i_o = a * Rational(1 / root);
  if (sgn(leading_entry(i_o)) < 0) i_o = -i_o;
  return i_o;
}

MatrixSpan commutant_on_m(const SymmetricPair& pair, const std::vector<RMatrix>& l_action) {
  std::vector<LinearCondition> conds;
  for (const auto& x : l_action) conds.push_back(cond::commutes_with(pair.ad_m(x)));
  return solve_linear_conditions(pair.dim_m(), conds);
}

namespace {

// Deterministic enumeration of integer vectors by max-norm, then lexicographic.
template <class F>
bool search_integer_vectors(std::size_t r, int radius, F&& visit) {
  std::vector<int> v(r);
  for (int norm = 1; norm <= radius; ++norm) {
    std::fill(v.begin(), v.end(), -norm);
    while (true) {
      int m = 0;
      for (int x : v) m = std::max(m, std::abs(x));
      if (m == norm && visit(v)) return true;
      bool done = true;
      for (std::size_t k = r; k-- > 0;) {
        if (v[k] < norm) {
          ++v[k];
          for (std::size_t t = k + 1; t < r; ++t) v[t] = -norm;
          done = false;
          break;
        }
      }
      if (done) break;
    }
  }
  return false;
}

RMatrix combine(const std::vector<RMatrix>& basis, const std::vector<int>& c) {
  RMatrix m(basis[0].rows(), basis[0].cols());
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) m += basis[k] * Rational(c[k]);
  return m;
}

// Normalized complex structure in span(basis), if a small integer combination has one.
std::optional<RMatrix> find_complex_structure(const std::vector<RMatrix>& basis) {
  std::optional<RMatrix> found;
  if (basis.empty()) return found;
  search_integer_vectors(basis.size(), 4, [&](const std::vector<int>& c) {
    RMatrix a = combine(basis, c);
    auto lambda = scalar_square(a);
    if (!lambda || sgn(*lambda) >= 0) return false;
    Rational root;
    if (!exact_sqrt(Rational(-*lambda), root)) return false;
    found = a * Rational(1 / root);
    return true;
  });
  return found;
}

}  // namespace

AdmissibleTriple<Rational> quaternionic_triple_in_commutant(const MatrixSpan& comm) {
  const std::size_t d = comm.matrix_size();
  const RMatrix id = RMatrix::identity(d);
  std::vector<RMatrix> traceless;
  for (const auto& c : comm.basis()) traceless.push_back(c - id * Rational(c.trace() / Rational(static_cast<long>(d))));
  MatrixSpan t(d, traceless);
  auto a = find_complex_structure(t.basis());
  if (!a) throw StructuralError("commutant contains no complex structure: isotropy module is not quaternionic");
  MatrixSpan anti = solve_linear_conditions(d, {cond::anticommutes_with(*a)}, t.basis());
  auto b = find_complex_structure(anti.basis());
  if (!b) throw StructuralError("no anticommuting complex structure: isotropy module is not quaternionic");
  AdmissibleTriple<Rational> triple{{*a, *b, *a * *b}};
  if (!check_admissible_triple(triple).passes()) throw StructuralError("commutant triple is not admissible");
  return triple;
}

AdmissibleTriple<Rational> su2_triple(const SymmetricPair& pair, const RMatrix& x, const RMatrix& y) {
  auto normalize = [&](const RMatrix& e) {
    RMatrix a = pair.ad_m(e);
    auto lambda = scalar_square(a);
    Rational root;
    if (!lambda || sgn(*lambda) >= 0 || !exact_sqrt(Rational(-*lambda), root))
      throw StructuralError("ad_m of the su(2) element is not a normalizable complex structure");
    return RMatrix(a * Rational(1 / root));
  };
  RMatrix a = normalize(x), b = normalize(y);
  AdmissibleTriple<Rational> triple{{a, b, a * b}};
  if (!check_admissible_triple(triple).passes()) throw StructuralError("su(2) action does not give an admissible triple");
  return triple;
}

RMatrix invariant_two_form(const SymmetricPair& pair, const RMatrix& i_o, StructureKind kind) {
  RMatrix omega = pair.killing_m() * i_o;
  if (kind == StructureKind::complex) omega = -omega;
  if (!(omega + omega.transpose()).is_zero()) throw StructuralError("invariant two-form is not skew: I is incompatible with B_m");
  if (rank(omega) != omega.rows()) throw StructuralError("invariant two-form is degenerate");
  for (const auto& x : pair.l().basis()) {
    RMatrix a = pair.ad_m(x);
    if (!(a.transpose() * omega + omega * a).is_zero()) throw StructuralError("two-form is not ad(l)-invariant");
  }
  return omega;
}

OriginCalculus nomizu_origin_calculus(const SymmetricPair& pair, const InvariantTensorSet& tensors) {
  OriginCalculus oc;
  const std::size_t dm = pair.dim_m();
  BilinearMap<Rational> br = pair.m_bracket();
  oc.torsion = Rational(-1) * br;
  oc.torsion_residual = oc.torsion.max_abs();
  oc.d_omega = Tensor3<Rational>(dm, dm, dm);
  const RMatrix& w = tensors.omega;
  // omega([X,Y]_m, Z) for basis X, Y, Z
  Tensor3<Rational> wb(dm, dm, dm);
  for (std::size_t x = 0; x < dm; ++x)
    for (std::size_t y = 0; y < dm; ++y) {
      RVec v = br.on_basis(x, y);
      RVec row = w.transpose() * v;
      for (std::size_t z = 0; z < dm; ++z) wb(x, y, z) = row[z];
    }
  for (std::size_t x = 0; x < dm; ++x)
    for (std::size_t y = 0; y < dm; ++y)
      for (std::size_t z = 0; z < dm; ++z) oc.d_omega(x, y, z) = -wb(x, y, z) - wb(y, z, x) - wb(z, x, y);
  oc.d_omega_residual = oc.d_omega.max_abs();

  oc.reductive_residual = 0;
  Rational eq_i = 0, eq_w = 0, eq_b = 0, eq_q = 0;
  for (const auto& l : pair.l().basis()) {
    auto [a, res] = pair.ad_m_projected(l);
    if (res > oc.reductive_residual) oc.reductive_residual = res;
    eq_i = std::max(eq_i, Rational(commutator(a, tensors.I).max_abs()));
    eq_w = std::max(eq_w, Rational((a.transpose() * w + w * a).max_abs()));
    eq_b = std::max(eq_b, Rational((a.transpose() * tensors.killing_m + tensors.killing_m * a).max_abs()));
    if (tensors.triple) {
      std::vector<RMatrix> span{tensors.triple->J(1), tensors.triple->J(2), tensors.triple->J(3)};
      MatrixSpan q(dm, span);
      for (int k = 1; k <= 3; ++k) {
        RMatrix c = commutator(a, tensors.triple->J(k));
        if (!q.contains(c)) eq_q = std::max(eq_q, Rational(c.max_abs()));
      }
    }
  }
  oc.equivariance["I"] = eq_i;
  oc.equivariance["omega"] = eq_w;
  oc.equivariance["B_m"] = eq_b;
  if (tensors.triple) oc.equivariance["Q"] = eq_q;
  return oc;
}

bool totally_geodesic_check(const SymmetricPair& pair, const Subspace<Rational>& m_hat) {
  const std::size_t k = m_hat.dim();
  std::vector<RMatrix> mats;
  for (std::size_t i = 0; i < k; ++i) mats.push_back(pair.m_element(m_hat.basis_vector(i)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      RMatrix ab = commutator(mats[a], mats[b]);
      for (std::size_t c = 0; c < k; ++c) {
        auto p = pair.decompose(commutator(ab, mats[c]));
        if (std::any_of(p.l.begin(), p.l.end(), [](const Rational& x) { return sgn(x) != 0; })) return false;
        if (!m_hat.contains(p.m)) return false;
      }
    }
  return true;
}

Subspace<Rational> m_intersection(const SymmetricPair& pair, const MatrixSpan& h) {
  const std::size_t dg = pair.g().dim(), dm = pair.dim_m();
  RMatrix mc(dg, dm), hc(dg, h.dim());
  for (std::size_t k = 0; k < dm; ++k) mc.set_column(k, pair.g().coordinates(pair.m()[k]));
  for (std::size_t k = 0; k < h.dim(); ++k) hc.set_column(k, pair.g().coordinates(h[k]));
  if (h.dim() == 0) return Subspace<Rational>(dm);
  RMatrix null = nullspace(hstack(mc, RMatrix(-hc)));
  return Subspace<Rational>::span(null.block(0, 0, dm, null.cols()));
}

}  // namespace qshkit
