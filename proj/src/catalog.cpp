#include "qshkit/catalog.hpp"

#include "qshkit/algebras.hpp"

namespace qshkit::catalog {
namespace {

using algebras::left_unit;

void claim(ExampleReport& r, const std::string& name, bool holds, double residual, const std::string& anchor) {
  r.verdicts.set(name, holds, residual, anchor);
}

void claim_dim(ExampleReport& r, const std::string& label, std::size_t actual, std::size_t expected,
               const std::string& anchor) {
  r.dimensions.emplace_back(label, actual);
  claim(r, "dim " + label + " = " + std::to_string(expected), actual == expected,
        std::fabs(static_cast<double>(actual) - static_cast<double>(expected)), anchor);
}

double res(const Rational& x) { return x.get_d(); }

void claim_pair(ExampleReport& r, const std::string& label, const SymmetricPair& p) {
  claim(r, label + ": B(l,m)=0", p.killing_orthogonal(), p.killing_orthogonal() ? 0 : 1, "Killing-orthogonal splitting");
  claim(r, label + ": [l,m] in m", p.reductive(), p.reductive() ? 0 : 1, "reductive bracket relation");
  claim(r, label + ": [m,m] in l", p.symmetric(), p.symmetric() ? 0 : 1, "symmetric bracket relation");
  claim(r, label + ": [m,m] = l", p.mm_spans_l(), p.mm_spans_l() ? 0 : 1, "symmetric bracket relation");
}

void claim_geodesic(ExampleReport& r, const std::string& name, const SymmetricPair& pair,
                    const Subspace<Rational>& m_hat, const std::string& anchor) {
  bool ok = totally_geodesic_check(pair, m_hat);
  claim(r, name, ok, ok ? 0 : 1, anchor);
}

std::vector<RMatrix> elements(const SymmetricPair& pair, const Subspace<Rational>& s) {
  std::vector<RMatrix> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(pair.m_element(s.basis_vector(i)));
  return out;
}

// The reduced pair's complement agrees with m ∩ g_hat.
void claim_sub_pair(ExampleReport& r, const std::string& label, const SymmetricPair& pair, const SymmetricPair& sub,
                    const Subspace<Rational>& m_hat) {
  claim_pair(r, label, sub);
  MatrixSpan from_big(pair.g().matrix_size(), elements(pair, m_hat));
  bool same = from_big.dim() == sub.dim_m();
  for (std::size_t i = 0; same && i < from_big.dim(); ++i) same = sub.m().contains(from_big[i]);
  claim(r, label + ": m_hat = m ∩ g_hat", same, same ? 0 : 1, "canonical decomposition of the reduced pair");
}

void claim_triple(ExampleReport& r, const std::string& label, const AdmissibleTriple<Rational>& t) {
  auto rep = check_admissible_triple(t);
  claim(r, label, rep.passes(), rep.max_residual(), "admissible hypercomplex triple");
}

Tensor3<Rational> zero_tensor(std::size_t d) { return Tensor3<Rational>(d, d, d); }

Gammas<Rational> zero_gammas(std::size_t d) { return {RVec(d), RVec(d), RVec(d)}; }

void copy_verdict(ExampleReport& r, const SubspaceReport& c, const std::string& prefix, const std::string& name,
                  const std::string& anchor) {
  bool ok = c.passed(name);
  auto it = c.residuals.find(name);
  double v = it == c.residuals.end() ? std::nan("") : it->second;
  r.verdicts.set(prefix + name, ok, v, anchor);
}

void check_cap(std::size_t value, std::size_t cap, const char* what) {
  if (value > cap) throw std::invalid_argument(std::string(what) + " exceeds the configured cap");
}

}  // namespace

ExampleReport example_A(std::size_t n, const Caps& caps) {
  if (n < 2) throw std::invalid_argument("example A requires n >= 2");
  check_cap(n, caps.max_n, "n");
  ExampleReport r;
  r.name = "example-a(n=" + std::to_string(n) + ")";
  const std::size_t big = n + 1;

  MatrixLieAlgebra g = algebras::sl(big, algebras::NumberField::quaternionic);
  MatrixLieAlgebra l = algebras::restrict("s(gl(1,H)+gl(n,H))", g, {algebras::block_embedding({4, 4 * n})});
  claim_dim(r, "g", g.dim(), 4 * big * big - 1, "sl(n+1,H)");
  SymmetricPair pair = reductive_split(g, l);
  claim_dim(r, "m", pair.dim_m(), 8 * n, "isotropy module of real dimension 8n");
  claim_pair(r, "pair", pair);

  MatrixSpan z = center(l);
  claim_dim(r, "center(l)", z.dim(), 1, "Z0 generates the center of l");
  RMatrix i_o = isotropy_structure(z[0], pair, StructureKind::paracomplex);
  RMatrix id = RMatrix::identity(pair.dim_m());
  claim(r, "I_o^2 = +Id", i_o * i_o == id, res((i_o * i_o - id).max_abs()), "invariant paracomplex structure");

  AdmissibleTriple<Rational> triple = su2_triple(pair, left_unit(Unit::i, big, 0, 1), left_unit(Unit::j, big, 0, 1));
  claim_triple(r, "sp(1) triple admissible", triple);
  RMatrix omega = invariant_two_form(pair, i_o, StructureKind::paracomplex);
  auto sf = is_scalar_two_form(omega, triple);
  claim(r, "omega_o scalar 2-form", sf.ok, sf.residual, "scalar 2-form from B_m(X,Y)=omega(X,IY)");

  InvariantTensorSet tensors{i_o, StructureKind::paracomplex, triple, omega, pair.killing_m()};
  OriginCalculus oc = nomizu_origin_calculus(pair, tensors);
  claim(r, "canonical connection torsion-free", sgn(oc.torsion_residual) == 0, res(oc.torsion_residual),
        "canonical connection of a symmetric space");
  claim(r, "d omega_o = 0 at origin", sgn(oc.d_omega_residual) == 0, res(oc.d_omega_residual), "closed invariant 2-form");
  for (const auto& [name, v] : oc.equivariance)
    claim(r, "ad(l)-equivariance of " + name, sgn(v) == 0, res(v), "invariant tensors at the origin");

  // real and complex reductions
  RMatrix li = left_unit(Unit::i, big, 0, big), lj = left_unit(Unit::j, big, 0, big);
  std::vector<LinearCondition> complex_conds{cond::commutes_with(li), cond::trace_against(li)};
  MatrixLieAlgebra gc = algebras::restrict("sl(n+1,C)", g, complex_conds);
  MatrixLieAlgebra lc = algebras::restrict("l_C", l, complex_conds);
  MatrixLieAlgebra gr = algebras::restrict("sl(n+1,R)", gc, {cond::commutes_with(lj)});
  MatrixLieAlgebra lr = algebras::restrict("l_R", lc, {cond::commutes_with(lj)});
  claim_dim(r, "g_C", gc.dim(), 2 * (big * big - 1), "sl(n+1,C)");
  claim_dim(r, "g_R", gr.dim(), big * big - 1, "sl(n+1,R)");

  Subspace<Rational> mc = m_intersection(pair, gc), mr = m_intersection(pair, gr);
  claim_dim(r, "m_C", mc.dim(), 4 * n, "complex reduction of dimension 4n");
  claim_dim(r, "m_R", mr.dim(), 2 * n, "real reduction of dimension 2n");
  claim_sub_pair(r, "pair_C", pair, reductive_split(gc, lc), mc);
  claim_sub_pair(r, "pair_R", pair, reductive_split(gr, lr), mr);

  claim_geodesic(r, "m_R totally geodesic", pair, mr, "[[m_K,m_K],m_K] in m_K");
  claim_geodesic(r, "m_C totally geodesic", pair, mc, "[[m_K,m_K],m_K] in m_K");

  std::size_t rk = rank(mr.restrict_form(omega));
  claim(r, "omega_R nondegenerate", rk == mr.dim(), static_cast<double>(mr.dim() - rk),
        "N_R is a symplectic submanifold");

  auto j_res = invariance_residual(mc, triple.J(1));
  claim(r, "m_C invariant under J1 = ad(i)", sgn(j_res) == 0, res(j_res), "U(1) isotropy of the complex reduction");

  TangentData<Rational> data{omega, triple, mc, zero_gammas(pair.dim_m()), oc.torsion, std::nullopt, oc.d_omega,
                             "symmetric-origin", std::nullopt};
  SubspaceReport c = classify_submanifold(data);
  copy_verdict(r, c, "N_C ", "almost_symplectic", "N_C is pseudo-Kähler");
  copy_verdict(r, c, "N_C ", "J1_invariant", "N_C is pseudo-Kähler");
  copy_verdict(r, c, "N_C ", "pseudo_kahler", "N_C is pseudo-Kähler");
  copy_verdict(r, c, "N_C ", "nijenhuis_in_TQ", "Nijenhuis tensor lies in the Q-invariant part");
  TangentData<Rational> real{omega, triple, mr, std::nullopt, oc.torsion, std::nullopt, oc.d_omega, "symmetric-origin",
                             std::nullopt};
  SubspaceReport cr = classify_submanifold(real);
  copy_verdict(r, cr, "N_R ", "almost_symplectic", "N_R is a symplectic submanifold");
  return r;
}

ExampleReport example_B(std::size_t p, std::size_t q, const Caps& caps) {
  if (p < 1 || q < 1) throw std::invalid_argument("example B requires p, q >= 1");
  check_cap(p + q, caps.max_pq, "p+q");
  ExampleReport r;
  r.name = "example-b(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
  const std::size_t s = p + q, big = 2 + s;

  MatrixLieAlgebra g = algebras::su(2 + p, q);
  MatrixLieAlgebra l = algebras::restrict("s(u(2)+u(p,q))", g, {algebras::block_embedding({4, 2 * s})});
  claim_dim(r, "g", g.dim(), big * big - 1, "su(2+p,q)");
  SymmetricPair pair = reductive_split(g, l);
  claim_dim(r, "m", pair.dim_m(), 4 * s, "4(p+q)-dimensional symmetric space");
  claim_pair(r, "pair", pair);

  MatrixSpan z = center(l);
  claim_dim(r, "center(l)", z.dim(), 1, "Z0 generates the center of l");
  RMatrix i_o = isotropy_structure(z[0], pair, StructureKind::complex);
  RMatrix id = RMatrix::identity(pair.dim_m());
  claim(r, "I_o^2 = -Id", i_o * i_o == -id, res((i_o * i_o + id).max_abs()), "invariant complex structure");

  // su(2) on the first two complex coordinates; e2 real, e3 = e1 e2.
  RMatrix e2(2 * big, 2 * big), e3(2 * big, 2 * big);
  e2(0, 2) = 1, e2(1, 3) = 1, e2(2, 0) = -1, e2(3, 1) = -1;
  e3(0, 3) = -1, e3(1, 2) = 1, e3(2, 1) = -1, e3(3, 0) = 1;
  AdmissibleTriple<Rational> triple = su2_triple(pair, e2, e3);
  claim_triple(r, "su(2) triple admissible", triple);
  MatrixSpan qspan(pair.dim_m(), {triple.J(1), triple.J(2), triple.J(3)});
  claim(r, "I_o not in Q", !qspan.contains(i_o), 0, "complex structure I outside Q");

  RMatrix omega = invariant_two_form(pair, i_o, StructureKind::complex);
  auto sf = is_scalar_two_form(omega, triple);
  claim(r, "omega_o scalar 2-form", sf.ok, sf.residual, "invariant scalar 2-form");

  MatrixLieAlgebra gh = algebras::restrict("so(p+2,q)", g, {cond::commutes_with(algebras::complex_conjugation(big))});
  MatrixLieAlgebra lh = algebras::restrict("l_hat", l, {cond::commutes_with(algebras::complex_conjugation(big))});
  claim_dim(r, "g_hat", gh.dim(), big * (big - 1) / 2, "so(p+2,q)");
  Subspace<Rational> mh = m_intersection(pair, gh);
  claim_dim(r, "m_hat", mh.dim(), 2 * s, "half-dimensional reduction");
  claim_sub_pair(r, "pair_hat", pair, reductive_split(gh, lh), mh);

  Subspace<Rational> imh = mh.image(i_o);
  std::size_t overlap = imh.intersect(mh).dim();
  claim(r, "I_o(m_hat) ∩ m_hat = 0", overlap == 0, static_cast<double>(overlap), "totally real relations");
  Subspace<Rational> total = mh.sum(imh);
  claim(r, "m = m_hat + I_o(m_hat)", total.dim() == pair.dim_m(), static_cast<double>(pair.dim_m() - total.dim()),
        "totally real relations");
  Rational borth = (mh.basis().transpose() * pair.killing_m() * imh.basis()).max_abs();
  claim(r, "B_m(m_hat, I_o m_hat) = 0", sgn(borth) == 0, res(borth), "totally real relations");

  Rational wres = mh.restrict_form(omega).max_abs();
  claim(r, "omega_hat = 0", sgn(wres) == 0, res(wres), "restricted scalar 2-form vanishes");
  claim(r, "dim m_hat = dim m / 2", 2 * mh.dim() == pair.dim_m(), 0, "Lagrangian dimension");

  auto j_res = invariance_residual(mh, triple.J(1));
  claim(r, "m_hat invariant under J1 = ad(e2)", sgn(j_res) == 0, res(j_res), "SO(2)-induced structure in Q");
  claim_geodesic(r, "m_hat totally geodesic", pair, mh, "[[m_K,m_K],m_K] in m_K");

  TangentData<Rational> data{omega, triple, mh, std::nullopt, std::nullopt, std::nullopt, std::nullopt, {}, i_o};
  SubspaceReport c = classify_submanifold(data);
  copy_verdict(r, c, "", "lagrangian", "complex Lagrangian submanifold");
  copy_verdict(r, c, "", "totally_real_wrt_I", "totally real with respect to I");
  return r;
}

ExampleReport example_C(std::size_t n, std::size_t k, const Caps& caps) {
  if (n < 2 || k < 1 || k >= n) throw std::invalid_argument("example C requires n >= 2 and 1 <= k < n");
  check_cap(n, caps.max_n, "n");
  ExampleReport r;
  r.name = "example-c(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  const std::size_t big = n + 1, d = 4 * big;

  MatrixLieAlgebra g = algebras::so_star(big);
  claim_dim(r, "g", g.dim(), big * (2 * big - 1), "so*(2n) has dimension n(2n-1)");
  MatrixLieAlgebra l = algebras::restrict("so*(2n)+u(1)", g, {algebras::block_embedding({4, 4 * n})});
  MatrixLieAlgebra ls = algebras::restrict(
      "so*(2n)", l, {cond::support([](std::size_t i, std::size_t j) { return i >= 4 && j >= 4; }, d)});
  claim_dim(r, "so*(2n) summand", ls.dim(), n * (2 * n - 1), "so*(2n) has dimension n(2n-1)");
  claim_dim(r, "l", l.dim(), n * (2 * n - 1) + 1, "so*(2n)+u(1)");
  SymmetricPair pair = reductive_split(g, l);
  claim_dim(r, "m", pair.dim_m(), 4 * n, "M^{4n} = SO*(2n+2)/SO*(2n)U(1)");
  claim_pair(r, "pair", pair);

  MatrixSpan z = center(l);
  claim_dim(r, "center(l)", z.dim(), 1, "u(1) center of the isotropy");
  RMatrix j_o = isotropy_structure(z[0], pair, StructureKind::complex);
  RMatrix omega = invariant_two_form(pair, j_o, StructureKind::complex);

  MatrixSpan comm = commutant_on_m(pair, ls.basis());
  claim_dim(r, "commutant of so*(2n)", comm.dim(), 4, "quaternion algebra commuting with the isotropy");
  MatrixSpan comm_full = commutant_on_m(pair, l.basis());
  claim_dim(r, "commutant of so*(2n)+u(1)", comm_full.dim(), 2, "the u(1) factor cuts the commutant to C");
  AdmissibleTriple<Rational> triple = quaternionic_triple_in_commutant(comm);
  claim_triple(r, "commutant triple admissible", triple);
  MatrixSpan qspan(pair.dim_m(), {triple.J(1), triple.J(2), triple.J(3)});
  claim(r, "J_o in Q", qspan.contains(j_o), 0, "invariant complex structure lies in Q");
  auto sf = is_scalar_two_form(omega, triple);
  claim(r, "omega_o scalar 2-form", sf.ok, sf.residual, "invariant quaternionic skew-Hermitian structure");

  InvariantTensorSet tensors{j_o, StructureKind::complex, triple, omega, pair.killing_m()};
  OriginCalculus oc = nomizu_origin_calculus(pair, tensors);
  claim(r, "canonical connection torsion-free", sgn(oc.torsion_residual) == 0, res(oc.torsion_residual),
        "canonical connection of a symmetric space");
  claim(r, "d omega_o = 0 at origin", sgn(oc.d_omega_residual) == 0, res(oc.d_omega_residual), "closed invariant 2-form");
  for (const auto& [name, v] : oc.equivariance)
    claim(r, "ad(l)-equivariance of " + name, sgn(v) == 0, res(v), "invariant tensors at the origin");

  MatrixLieAlgebra gh = algebras::restrict("so*(2k+2)", g, {algebras::corner_embedding(4 * (k + 1), d)});
  MatrixLieAlgebra lh = algebras::restrict("l_hat", l, {algebras::corner_embedding(4 * (k + 1), d)});
  claim_dim(r, "g_hat", gh.dim(), (k + 1) * (2 * k + 1), "so*(2k+2)");
  Subspace<Rational> mh = m_intersection(pair, gh);
  claim_dim(r, "m_hat", mh.dim(), 4 * k, "reduction of dimension 4k");
  claim_sub_pair(r, "pair_hat", pair, reductive_split(gh, lh), mh);

  Rational qres = 0;
  for (int a = 1; a <= 3; ++a) qres = std::max(qres, invariance_residual(mh, triple.J(a)));
  claim(r, "m_hat Q-invariant", sgn(qres) == 0, res(qres), "m ∩ so*(2(k+1)) is Q-invariant");
  std::size_t rk = rank(mh.restrict_form(omega));
  claim(r, "omega_hat nondegenerate", rk == mh.dim(), static_cast<double>(mh.dim() - rk), "non-degenerate blocks");
  claim_geodesic(r, "m_hat totally geodesic", pair, mh, "[[m_K,m_K],m_K] in m_K");

  if (sgn(qres) == 0 && rk == mh.dim()) {
    auto th = triple.restrict_to(mh);
    auto sh = is_scalar_two_form(mh.restrict_form(omega), th);
    claim(r, "restricted structures qs-H", sh.ok && check_admissible_triple(th).passes(), sh.residual,
          "restricted connection preserves the induced structure");
    Rational tres = oc.torsion.precompose(mh.basis(), mh.basis()).max_abs();
    claim(r, "restricted canonical connection torsion-free", sgn(tres) == 0, res(tres),
          "torsion-free induced structure");
  }

  TangentData<Rational> data{omega, triple, mh, std::nullopt, oc.torsion, std::nullopt, oc.d_omega,
                             "symmetric-origin", std::nullopt};
  SubspaceReport c = classify_submanifold(data);
  copy_verdict(r, c, "", "Q_invariant", "Q-invariant tangent space");
  copy_verdict(r, c, "", "almost_symplectic", "non-degenerate restricted form");
  copy_verdict(r, c, "", "qsh_submanifold", "quaternionic skew-Hermitian submanifold");
  return r;
}

ExampleReport flat_Npq(std::size_t n, std::size_t p, std::size_t q) {
  if (n < 2) throw std::invalid_argument("flat example requires n >= 2");
  if (p + q != n) throw std::invalid_argument("flat example requires p + q = n");
  ExampleReport r;
  r.name = "flat-npq(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
  auto model = standard_model<Rational>(n);
  const std::size_t d = 4 * n;
  // per coordinate (Re a, Im a, Re b, Im b): imaginary parts for the first p, real parts after
  std::vector<RVec> span;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t off = c < p ? 1 : 0;
    span.push_back(unit_vector<Rational>(d, 4 * c + off));
    span.push_back(unit_vector<Rational>(d, 4 * c + 2 + off));
  }
  Subspace<Rational> w = Subspace<Rational>::span(span, d);
  claim_dim(r, "N", w.dim(), 2 * n, "2n-dimensional submanifold");
  AdmissibleTriple<Rational> triple = model.triple.rotated(2);
  auto h = induced_hermitian(w, model.omega, triple);
  bool sig = h.inertia.positive == 2 * q && h.inertia.negative == 2 * p && h.inertia.zero == 0;
  claim(r, "signature (2q,2p)", sig, sig ? 0 : 1, "pseudo-Kähler of signature (2q,2p)");
  Rational g2res = (h.g_hat - w.restrict_form(model.metrics[1].g)).max_abs();
  claim(r, "g_hat = g_0^2 restricted", sgn(g2res) == 0, res(g2res), "g_0^2(a+bj,c+dj) = Re(a^t c + b^t d)");
  Inertia fl = signature(to_double(h.g_hat));
  claim(r, "float signature agrees", fl == h.inertia, fl == h.inertia ? 0 : 1, "Sylvester cross-check");

  TangentData<Rational> data{model.omega, triple, w, zero_gammas(d), BilinearMap<Rational>(d), std::nullopt,
                             zero_tensor(d), "flat-model", std::nullopt};
  SubspaceReport c = classify_submanifold(data);
  copy_verdict(r, c, "", "almost_symplectic", "omega restricted is non-degenerate");
  copy_verdict(r, c, "", "J1_invariant", "J2-invariant submanifold");
  copy_verdict(r, c, "", "pseudo_kahler", "pseudo-Kähler submanifold");
  return r;
}

ExampleReport remark_HPn(std::size_t n, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_cap(n, caps.max_n, "n");
  ExampleReport r;
  r.name = "remark-hpn(n=" + std::to_string(n) + ")";
  const std::size_t big = n + 1;
  MatrixLieAlgebra g = algebras::sp(big);
  claim_dim(r, "g", g.dim(), big * (2 * big + 1), "sp(n+1)");
  MatrixLieAlgebra l = algebras::restrict("sp(1)+sp(n)", g, {algebras::block_embedding({4, 4 * n})});
  claim_dim(r, "l", l.dim(), 3 + n * (2 * n + 1), "sp(1)+sp(n)");
  claim_dim(r, "center(l)", center(l).dim(), 0, "isotropy algebra has trivial center");
  MatrixLieAlgebra u = algebras::restrict("u(1)+sp(n)", l, {cond::commutes_with(left_unit(Unit::i, big, 0, 1))});
  claim_dim(r, "center(u(1)+sp(n))", center(u).dim(), 1, "contrast case with a one-dimensional center");
  return r;
}

}  // namespace qshkit::catalog
