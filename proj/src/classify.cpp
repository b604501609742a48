#include "nilpair/classify.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "nilpair/errors.hpp"

namespace nilpair {

namespace {

long to_long(const Rat& x) { return x.get_num().get_si(); }

bool is_zero_vec(const QVector& v) { return v == QVector::Zero(v.size()); }

std::vector<Index> pivot_columns(const QMatrix& basis) {
  std::vector<Index> piv;
  piv.reserve(static_cast<size_t>(basis.rows()));
  for (Index i = 0; i < basis.rows(); ++i) {
    Index c = 0;
    while (c < basis.cols() && basis(i, c) == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

// Matrix of op on the invariant subspace s, in the coordinates of its
// echelon basis (pivot columns read the coordinates off directly).
QMatrix restricted(const QMatrix& op, const Subspace& s) {
  const Index d = s.dim();
  const auto piv = pivot_columns(s.basis());
  const QMatrix images = op * s.basis().transpose();
  QMatrix r(d, d);
  for (Index j = 0; j < d; ++j) {
    const QVector col = images.col(j);
    if (!s.contains(col)) throw Error("restricted operator: subspace is not invariant");
    for (Index i = 0; i < d; ++i) r(i, j) = col(piv[static_cast<size_t>(i)]);
  }
  return r;
}

Subspace cell_or_zero(const BiGrading& bg, const Rat& p, const Rat& q) {
  const Subspace* cell = bg.find(p, q);
  return cell ? *cell : Subspace::zero(bg.alg->dim());
}

Subspace h_space(const BiGrading& bg) { return cell_or_zero(bg, 0, 0); }

bool pred_true(const Rat&, const Rat&) { return true; }

// Largest nonnegative integral value taken by the chosen grading coordinate.
long axis_max(const BiGrading& bg, bool first_coord) {
  long m = -1;
  for (const auto& cell : bg.cells) {
    const Rat& v = first_coord ? cell.p : cell.q;
    if (rat_in_P(v)) m = std::max(m, to_long(v));
  }
  return m;
}

bool multiset_matches(const std::vector<Rat>& values, const std::vector<int>& expected) {
  if (values.size() != expected.size()) return false;
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i] != expected[i]) return false;
  return true;
}

}  // namespace

WonderfulCertificate is_wonderful(const NilpotentPair& pair, const BiGrading& bg) {
  const LieAlgebraQ& alg = *bg.alg;
  const Index n = alg.dim();
  const QMatrix ad1 = alg.ad(pair.e1);
  const QMatrix ad2 = alg.ad(pair.e2);
  const Subspace h = h_space(bg);
  const Subspace z = centralizer(alg, {pair.e1, pair.e2});

  const long pmax = axis_max(bg, true);
  const long qmax = axis_max(bg, false);

  // Pt[j][i] = (ad e1)^i (ad e2)^j applied to the h basis (columns).
  const QMatrix b = h.basis().transpose();
  std::vector<std::vector<QMatrix>> pt(static_cast<size_t>(qmax + 2));
  for (long j = 0; j <= qmax + 1; ++j) {
    auto& row = pt[static_cast<size_t>(j)];
    row.push_back(j == 0 ? b : QMatrix(ad2 * pt[static_cast<size_t>(j - 1)][0]));
    for (long i = 1; i <= pmax + 1; ++i) row.push_back(QMatrix(ad1 * row.back()));
  }

  WonderfulCertificate out;
  out.wonderful = true;
  for (const auto& cell : bg.cells) {
    if (!rat_in_P(cell.p) || !rat_in_P(cell.q)) continue;
    const long i = to_long(cell.p);
    const long j = to_long(cell.q);
    // h(i,j) in h coordinates: killed by (ad e1)^{i+1} and (ad e2)^{j+1}.
    const Subspace ci = kernel(pt[0][static_cast<size_t>(i + 1)]);
    const Subspace cj = kernel(pt[static_cast<size_t>(j + 1)][0]);
    const Subspace coords = intersect(ci, cj);
    const QMatrix cols = pt[static_cast<size_t>(j)][static_cast<size_t>(i)] *
                         coords.basis().transpose();
    const Subspace lhs = Subspace::span_of_rows(cols.transpose());
    const Subspace rhs = intersect(z, cell.space);
    if (!rhs.contains(lhs))
      throw Error("wonderful certificate: filtration image escapes the centralizer cell");
    const bool equal = (lhs == rhs);
    out.cells.push_back({cell.p, cell.q, lhs.dim(), rhs.dim(), equal});
    out.wonderful = out.wonderful && equal;
  }
  (void)n;
  return out;
}

bool is_integral(const NilpotentPair& pair, const BiGrading& bg) {
  bool all_integral = true;
  for (const auto& cell : bg.cells)
    if (!rat_is_integer(cell.p) || !rat_is_integer(cell.q)) {
      all_integral = false;
      break;
    }
  const Subspace z = centralizer(*bg.alg, {pair.e1, pair.e2});
  const GradedSlice zz = slice(bg, z, "z integral part", [](const Rat& p, const Rat& q) {
    return rat_is_integer(p) && rat_is_integer(q);
  });
  if (all_integral != (zz.space == z))
    throw Error("integrality criterion: spectrum and centralizer tests disagree");
  return all_integral;
}

ClassificationReport classification_report(const NilpotentPair& pair, const BiGrading& bg,
                                           Index rank) {
  const LieAlgebraQ& alg = *bg.alg;
  ClassificationReport r;
  r.rank = rank;
  r.trivial = is_zero_vec(pair.e1) || is_zero_vec(pair.e2);
  r.dim_z_e = centralizer(alg, {pair.e1, pair.e2}).dim();
  r.dim_z_h = bg.dim_at(0, 0);
  r.even = (r.dim_z_e == r.dim_z_h);
  r.almost_even = (r.dim_z_e == r.dim_z_h + 1);
  r.principal = (r.dim_z_e == rank);
  r.almost_principal = (r.dim_z_e == rank + 1);
  r.certificate = is_wonderful(pair, bg);
  r.wonderful = r.certificate.wonderful;
  r.integral = is_integral(pair, bg);
  r.rectangular = is_rectangular(alg, pair, bg.ch);

  if (r.principal && !r.even) throw Error("classification: principal pair fails evenness");
  if (r.almost_principal && !r.almost_even)
    throw Error("classification: almost principal pair fails almost evenness");
  if (r.even && !(r.wonderful && r.integral))
    throw Error("classification: even pair fails wonderful or integral");
  if (r.rectangular && !r.wonderful)
    throw Error("classification: rectangular pair fails wonderful");
  return r;
}

XarakVerdict xarak_check(const NilpotentPair& pair, const BiGrading& bg) {
  if (!is_integral(pair, bg)) throw InputError("xarak_check: pair is not integral");
  const LieAlgebraQ& alg = *bg.alg;
  const Subspace z = centralizer(alg, {pair.e1, pair.e2});
  const Subspace lim = limit(alg, pair, h_space(bg), LimitMode::both);
  const bool lhs = (lim == slice_PP(bg, z).space);

  const Subspace z1 = centralizer(alg, {pair.e1});
  const Subspace z2 = centralizer(alg, {pair.e2});
  bool rhs = true;
  for (const auto& cell : bg.cells) {
    if (cell.p < 0 && cell.q < 0 && intersect(z, cell.space).dim() > 0) rhs = false;
    if (cell.q == 0 && cell.p < 0 && intersect(z1, cell.space).dim() > 0) rhs = false;
    if (cell.p == 0 && cell.q < 0 && intersect(z2, cell.space).dim() > 0) rhs = false;
  }
  if (lhs != rhs) throw Error("wonderful characterization: the two sides disagree");
  return {lhs, rhs};
}

bool pusto3_check(const NilpotentPair& pair, const BiGrading& bg) {
  if (!is_integral(pair, bg) || !is_wonderful(pair, bg).wonderful)
    throw InputError("pusto3_check: pair is not wonderful integral");
  const Subspace z = centralizer(*bg.alg, {pair.e1, pair.e2});
  for (const auto& cell : bg.cells)
    if (cell.p < 0 && cell.q < 0 && intersect(z, cell.space).dim() > 0) return false;
  return true;
}

bool richardson_check(const NilpotentPair& pair, const BiGrading& bg, Side side,
                      RichardsonScope scope) {
  const LieAlgebraQ& alg = *bg.alg;
  const Index n = alg.dim();
  const QVector& e = (side == Side::e1) ? pair.e1 : pair.e2;
  Subspace dom = Subspace::zero(n);
  Subspace nil = Subspace::zero(n);
  for (const auto& cell : bg.cells) {
    const Rat& deg = (side == Side::e1) ? cell.p : cell.q;
    const Rat& other = (side == Side::e1) ? cell.q : cell.p;
    if (scope == RichardsonScope::parabolic ? !rat_is_integer(other) : other != 0) continue;
    if (rat_in_P(deg)) dom = sum(dom, cell.space);
    if (rat_is_integer(deg) && deg >= 1) nil = sum(nil, cell.space);
  }
  return apply(alg.ad(e), dom) == nil;
}

LabelReport labels_report(const RootedAlgebra& ra, const Characteristic& ch,
                          std::optional<bool> e2_richardson) {
  if (!ra.in_cartan_span(ch.h1) || !ra.in_cartan_span(ch.h2))
    throw InputError("labels_report: characteristic outside the standard Cartan");
  const RootSystem& rs = ra.rs;
  const Index r = rs.rank();
  std::vector<Rat> a = ra.simple_root_values(ch.h1);
  std::vector<Rat> b = ra.simple_root_values(ch.h2);
  for (Index k = 0; k < r; ++k)
    if (!rat_is_integer(a[static_cast<size_t>(k)]) || !rat_is_integer(b[static_cast<size_t>(k)]))
      throw InputError("labels_report: labels are not integral");

  // Move to the simple system on which h2, with ties broken by h1, is
  // dominant; reflecting at j with b_j = 0 leaves every b label unchanged.
  const long npos = static_cast<long>(rs.num_positive());
  const long cap = 1000 + 32 * npos * npos;
  for (long step = 0;; ++step) {
    Index j = r;
    for (Index k = 0; k < r; ++k) {
      const Rat& bk = b[static_cast<size_t>(k)];
      const Rat& ak = a[static_cast<size_t>(k)];
      if (bk < 0 || (bk == 0 && ak < 0)) {
        j = k;
        break;
      }
    }
    if (j == r) break;
    if (step > cap) throw Error("labels_report: dominance recursion failed to terminate");
    const Rat bj = b[static_cast<size_t>(j)];
    const Rat aj = a[static_cast<size_t>(j)];
    for (Index k = 0; k < r; ++k) {
      b[static_cast<size_t>(k)] -= rs.cartan(j, k) * bj;
      a[static_cast<size_t>(k)] -= rs.cartan(j, k) * aj;
    }
  }

  LabelReport out;
  out.h1_labels = a;
  out.h2_labels = b;
  for (Index k = 0; k < r; ++k)
    if (b[static_cast<size_t>(k)] == 0) out.pi2.push_back(k);

  out.labels_i = true;
  out.labels_ii = true;
  out.labels_iii = true;
  out.pr_i = true;
  out.pr_ii = true;
  out.cox_bound = true;
  out.cox_l2 = levi_data(rs, out.pi2).coxeter_max;
  out.d = bound_d_min(rs, out.pi2);
  for (Index k = 0; k < r; ++k) {
    const Rat& ak = a[static_cast<size_t>(k)];
    const Rat& bk = b[static_cast<size_t>(k)];
    if (bk != 0 && bk != 1) out.labels_i = false;
    if (bk == 0 && ak != 0 && ak != 1) out.labels_ii = false;
    if (bk == 0 && ak != 1) out.pr_ii = false;
    if (bk == 1) {
      if (ak > 0 || ak < bound_d(rs, out.pi2, k)) out.labels_iii = false;
      if (ak > 0 || ak < Rat(1 - out.cox_l2)) out.cox_bound = false;
    }
  }
  out.pr_i = out.labels_i;
  if (e2_richardson.has_value() && *e2_richardson) out.pr_iii = out.cox_bound;
  return out;
}

ExponentsCheck exponents_check(const RootedAlgebra& ra, const NilpotentPair& pair,
                               const BiGrading& bg) {
  const LieAlgebraQ& alg = ra.alg;
  if (!ra.in_cartan_span(bg.ch.h1) || !ra.in_cartan_span(bg.ch.h2))
    throw InputError("exponents_check: characteristic outside the standard Cartan");
  const Index rank = ra.rank();
  const Index dim_z = centralizer(alg, {pair.e1, pair.e2}).dim();
  if (dim_z != rank && dim_z != rank + 1)
    throw InputError("exponents_check: pair is neither principal nor almost principal");

  const Subspace lim = limit(alg, pair, h_space(bg), LimitMode::both);
  ExponentsCheck out;
  out.eigencount_ok = (lim.dim() == rank);
  const GradedSlice ls = slice(bg, lim, "limit of h", pred_true);
  for (const auto& [pq, d] : ls.cell_dims)
    for (Index t = 0; t < d; ++t) {
      if (pq.first != 0) out.alpha_nonzero.push_back(pq.first);
      if (pq.second != 0) out.beta_nonzero.push_back(pq.second);
    }
  std::sort(out.alpha_nonzero.begin(), out.alpha_nonzero.end());
  std::sort(out.beta_nonzero.begin(), out.beta_nonzero.end());

  const auto levi_exponents = [&](const std::vector<Rat>& vals) {
    std::vector<RootVec> roots;
    for (const RootVec& beta : ra.rs.positive) {
      Rat v = 0;
      for (Index k = 0; k < ra.rank(); ++k)
        v += vals[static_cast<size_t>(k)] * beta[static_cast<size_t>(k)];
      if (v == 0) roots.push_back(beta);
    }
    return subsystem_data(ra.rs, roots).exponents;
  };
  out.l2_exponents = levi_exponents(ra.simple_root_values(bg.ch.h2));
  out.l1_exponents = levi_exponents(ra.simple_root_values(bg.ch.h1));
  out.l2_match = multiset_matches(out.alpha_nonzero, out.l2_exponents);
  out.l1_match = multiset_matches(out.beta_nonzero, out.l1_exponents);
  return out;
}

DenominatorCheck denominator_check(const RootedAlgebra& ra, const BiGrading& bg) {
  if (!ra.in_cartan_span(bg.ch.h1) || !ra.in_cartan_span(bg.ch.h2))
    throw InputError("denominator_check: characteristic outside the standard Cartan");
  const std::vector<Rat> v1 = ra.simple_root_values(bg.ch.h1);
  const std::vector<Rat> v2 = ra.simple_root_values(bg.ch.h2);
  std::vector<RootVec> sroots;
  for (const RootVec& beta : ra.rs.positive) {
    Rat a = 0, b = 0;
    for (Index k = 0; k < ra.rank(); ++k) {
      a += v1[static_cast<size_t>(k)] * beta[static_cast<size_t>(k)];
      b += v2[static_cast<size_t>(k)] * beta[static_cast<size_t>(k)];
    }
    if (rat_is_integer(a) && rat_is_integer(b)) sroots.push_back(beta);
  }
  const SubsystemData data = subsystem_data(ra.rs, sroots);

  DenominatorCheck out;
  out.c_s = data.cartan_det;
  out.s_types = data.component_types;
  out.ok = true;
  const mpz_class cs(out.c_s);
  for (const auto& cell : bg.cells)
    for (const Rat* coord : {&cell.p, &cell.q}) {
      const mpz_class den = coord->get_den();
      out.max_denominator = std::max(out.max_denominator, den.get_si());
      if (cs % den != 0) out.ok = false;
    }
  return out;
}

RectangleCheck rectangle_spectrum_check(const QMatrix& act_e1, const QMatrix& act_e2,
                                        const QMatrix& act_h1, const QMatrix& act_h2) {
  const Index n = act_e1.rows();
  for (const QMatrix* m : {&act_e1, &act_e2, &act_h1, &act_h2})
    if (m->rows() != n || m->cols() != n)
      throw DimensionError("rectangle spectrum: actions must be square of equal size");

  RectangleCheck out;
  const Subspace fixed = intersect(kernel(act_e1), kernel(act_e2));
  out.fixed_dim = fixed.dim();
  out.hypothesis_ok = (out.fixed_dim == 1);
  if (!out.hypothesis_ok) return out;

  const auto cells = joint_eigenspaces({act_h1, act_h2});
  const QVector v = fixed.basis_row(0);
  bool found = false;
  std::map<std::pair<Rat, Rat>, Index> dims;
  for (const auto& [ev, space] : cells) {
    dims[{ev[0], ev[1]}] = space.dim();
    if (!found && space.contains(v)) {
      out.p0 = ev[0];
      out.q0 = ev[1];
      found = true;
    }
  }
  if (!found) throw Error("rectangle spectrum: fixed vector is not a weight vector");

  bool rect = (out.p0 >= 0 && out.q0 >= 0);
  if (rect) {
    std::map<std::pair<Rat, Rat>, Index> expect;
    for (Rat m = -out.p0; m <= out.p0; m += 1)
      for (Rat l = -out.q0; l <= out.q0; l += 1) expect[{m, l}] = 1;
    rect = (dims == expect);
  }
  out.rectangle_ok = rect;
  out.count_ok = (Rat(static_cast<long>(n)) == (2 * out.p0 + 1) * (2 * out.q0 + 1));
  return out;
}

RectangleCheck rectangle_spectrum_check(const NilpotentPair& pair, const BiGrading& bg,
                                        const Subspace& module) {
  const LieAlgebraQ& alg = *bg.alg;
  return rectangle_spectrum_check(
      restricted(alg.ad(pair.e1), module), restricted(alg.ad(pair.e2), module),
      restricted(alg.ad(bg.ch.h1), module), restricted(alg.ad(bg.ch.h2), module));
}

AlmostEvenStructure almost_even_structure(const NilpotentPair& pair, const BiGrading& bg,
                                          const ClassificationReport& report) {
  if (!report.almost_even) throw InputError("almost_even_structure: pair is not almost even");
  const LieAlgebraQ& alg = *bg.alg;
  const Subspace z = centralizer(alg, {pair.e1, pair.e2});
  const Subspace lim = limit(alg, pair, h_space(bg), LimitMode::both);
  if (!z.contains(lim)) throw Error("almost even structure: limit escapes the centralizer");

  std::map<std::pair<Rat, Rat>, Index> excess;
  for (const auto& [pq, d] : slice(bg, z, "z", pred_true).cell_dims) excess[pq] = d;
  for (const auto& [pq, d] : slice(bg, lim, "lim", pred_true).cell_dims) excess[pq] -= d;
  std::vector<std::pair<Rat, Rat>> hot;
  for (const auto& [pq, d] : excess) {
    if (d == 0) continue;
    if (d != 1) throw Error("almost even structure: excess is not a single line");
    hot.push_back(pq);
  }
  if (hot.size() != 1) throw Error("almost even structure: excess is not a single line");

  AlmostEvenStructure out;
  out.p = hot[0].first;
  out.q = hot[0].second;
  const auto half = [](const Rat& x) { return !rat_is_integer(x) && rat_is_integer(2 * x); };
  out.integral_case =
      rat_is_integer(out.p) && rat_is_integer(out.q) && out.p * out.q < 0;
  out.fractional_case = half(out.p) && half(out.q) && out.p > 0 && out.q > 0;
  out.class_ok = out.integral_case || out.fractional_case;

  if (out.fractional_case) {
    out.rectangular = report.rectangular;
    const Subspace h = h_space(bg);
    bool abelian = true;
    for (Index i = 0; i < h.dim() && abelian; ++i)
      for (Index j = i + 1; j < h.dim() && abelian; ++j)
        abelian = is_zero_vec(alg.bracket(h.basis_row(i), h.basis_row(j)));
    out.h_cartan = (h.dim() == report.rank) && abelian;
    const auto split = integral_fractional_split(bg);
    out.principal_in_zz = (intersect(z, split.first.space).dim() == report.rank);
  }
  return out;
}

bool killing_duality_check(const LieAlgebraQ& alg, const NilpotentPair& pair) {
  const Subspace z = centralizer(alg, {pair.e1, pair.e2});
  const Subspace perp = orth_complement(z, alg.killing());
  return perp == sum(image(alg.ad(pair.e1)), image(alg.ad(pair.e2)));
}

bool nilpotent_is_even(const LieAlgebraQ& alg, const QVector& e) {
  if (is_zero_vec(e)) return true;
  const Sl2Triple t = complete_sl2(alg, e);
  for (const auto& [ev, space] : joint_eigenspaces({alg.ad(t.tih)})) {
    if (!rat_is_integer(ev[0])) throw Error("sl2 coweight with non-integral spectrum");
    if (ev[0].get_num() % 2 != 0) return false;
  }
  return true;
}

Wond1Check wond1_check(const NilpotentPair& pair, const BiGrading& bg) {
  const LieAlgebraQ& alg = *bg.alg;
  const Subspace h = h_space(bg);
  const auto p_first = [](const Rat& p, const Rat&) { return rat_in_P(p); };
  const auto p_second = [](const Rat&, const Rat& q) { return rat_in_P(q); };
  const QVector &e1 = pair.e1, &e2 = pair.e2, &h1 = bg.ch.h1, &h2 = bg.ch.h2;

  Wond1Check out;
  out.first_e1 = (limit(alg, pair, h, LimitMode::e1) ==
                  slice(bg, centralizer(alg, {e1, h2}), "z(e1,h2) nonneg", p_first).space);
  out.first_e2 = (limit(alg, pair, h, LimitMode::e2) ==
                  slice(bg, centralizer(alg, {e2, h1}), "z(e2,h1) nonneg", p_second).space);
  out.second_e1 =
      (limit(alg, pair, centralizer(alg, {e2, h1, h2}), LimitMode::e1) ==
       slice(bg, centralizer(alg, {e1, e2, h2}), "z(e,h2) nonneg", p_first).space);
  out.second_e2 =
      (limit(alg, pair, centralizer(alg, {e1, h1, h2}), LimitMode::e2) ==
       slice(bg, centralizer(alg, {e1, e2, h1}), "z(e,h1) nonneg", p_second).space);
  return out;
}

Wond2Check wond2_check(const NilpotentPair& pair, const BiGrading& bg) {
  const LieAlgebraQ& alg = *bg.alg;
  const QMatrix ad1 = alg.ad(pair.e1);
  const QMatrix ad2 = alg.ad(pair.e2);
  const long pmax = axis_max(bg, true);
  const long qmax = axis_max(bg, false);

  Wond2Check out;
  out.grid_rows = true;
  for (long i = 0; i <= pmax; ++i)
    out.grid_rows = out.grid_rows && (apply(ad1, cell_or_zero(bg, i, 0)) ==
                                      cell_or_zero(bg, i + 1, 0));
  out.grid_cols = true;
  for (long j = 0; j <= qmax; ++j)
    out.grid_cols = out.grid_cols && (apply(ad2, cell_or_zero(bg, 0, j)) ==
                                      cell_or_zero(bg, 0, j + 1));

  const Subspace z2h2 = centralizer(alg, {pair.e2, bg.ch.h2});
  out.z2_ladder = true;
  for (long i = 0; i <= pmax; ++i)
    out.z2_ladder = out.z2_ladder &&
                    (apply(ad1, intersect(z2h2, cell_or_zero(bg, i, 0))) ==
                     intersect(z2h2, cell_or_zero(bg, i + 1, 0)));
  const Subspace z1h1 = centralizer(alg, {pair.e1, bg.ch.h1});
  out.z1_ladder = true;
  for (long j = 0; j <= qmax; ++j)
    out.z1_ladder = out.z1_ladder &&
                    (apply(ad2, intersect(z1h1, cell_or_zero(bg, 0, j))) ==
                     intersect(z1h1, cell_or_zero(bg, 0, j + 1)));

  const auto p_int = [](const Rat& p, const Rat&) { return rat_is_integer(p); };
  const auto p_nonneg = [](const Rat& p, const Rat&) { return rat_in_P(p); };
  const auto q_int = [](const Rat&, const Rat& q) { return rat_is_integer(q); };
  const auto q_nonneg = [](const Rat&, const Rat& q) { return rat_in_P(q); };
  const Subspace z1h2 = centralizer(alg, {pair.e1, bg.ch.h2});
  out.nonneg_e1 = (slice(bg, z1h2, "z(e1,h2) integral", p_int).space ==
                   slice(bg, z1h2, "z(e1,h2) nonneg", p_nonneg).space);
  const Subspace z2h1 = centralizer(alg, {pair.e2, bg.ch.h1});
  out.nonneg_e2 = (slice(bg, z2h1, "z(e2,h1) integral", q_int).space ==
                   slice(bg, z2h1, "z(e2,h1) nonneg", q_nonneg).space);
  return out;
}

UsefulCheck useful_check(const NilpotentPair& pair, const BiGrading& bg, Side side) {
  const LieAlgebraQ& alg = *bg.alg;
  const QVector& e = (side == Side::e1) ? pair.e1 : pair.e2;
  const QMatrix ade = alg.ad(e);
  const long dmax = axis_max(bg, side == Side::e1);
  const auto on_axis = [&](long i) {
    return side == Side::e1 ? cell_or_zero(bg, i, 0) : cell_or_zero(bg, 0, i);
  };
  const Subspace z_e = centralizer(alg, {e});

  UsefulCheck out;
  Index dim_positive_part = 0;
  for (long i = 0; i <= dmax; ++i) dim_positive_part += intersect(z_e, on_axis(i)).dim();
  out.hypothesis = (dim_positive_part == bg.dim_at(0, 0));
  out.surjective = true;
  for (long i = 0; i <= dmax; ++i)
    out.surjective = out.surjective && (apply(ade, on_axis(i)) == on_axis(i + 1));
  return out;
}

std::vector<NilpotentPair> search_non_wonderful(const RootedAlgebra& ra, std::size_t want) {
  const LieAlgebraQ& alg = ra.alg;
  const Index r = ra.rank();
  const Index npos = ra.rs.num_positive();
  std::vector<QVector> cands;
  for (Index k = 0; k < npos; ++k) cands.push_back(alg.basis_vector(r + k));
  const size_t singles = cands.size();
  for (size_t x = 0; x < singles; ++x)
    for (size_t y = x + 1; y < singles; ++y)
      if (is_zero_vec(alg.bracket(cands[x], cands[y]))) {
        cands.push_back(QVector(cands[x] + cands[y]));
        cands.push_back(QVector(cands[x] - cands[y]));
      }

  std::vector<NilpotentPair> found;
  for (size_t x = 0; x < cands.size() && found.size() < want; ++x)
    for (size_t y = x + 1; y < cands.size() && found.size() < want; ++y) {
      if (!is_zero_vec(alg.bracket(cands[x], cands[y]))) continue;
      NilpotentPair p{cands[x], cands[y]};
      std::optional<Characteristic> ch;
      try {
        ch = is_nilpotent_pair(alg, p);
      } catch (const SolveError&) {
        continue;  // undecided candidates are skipped, not reported
      }
      if (!ch) continue;
      const BiGrading bg = bigrade(alg, *ch);
      if (!is_integral(p, bg)) continue;
      if (is_wonderful(p, bg).wonderful) continue;
      found.push_back(std::move(p));
    }
  return found;
}

}  // namespace nilpair
