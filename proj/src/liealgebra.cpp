#include "nilpair/liealgebra.hpp"

#include <algorithm>
#include <functional>

#include "nilpair/errors.hpp"

namespace nilpair {

namespace {

RootVec vneg(const RootVec& v) {
  RootVec o(v);
  for (int& c : o) c = -c;
  return o;
}

RootVec vsub(const RootVec& a, const RootVec& b) {
  RootVec o(a);
  for (size_t i = 0; i < o.size(); ++i) o[i] -= b[i];
  return o;
}

RootVec vadd(const RootVec& a, const RootVec& b) {
  RootVec o(a);
  for (size_t i = 0; i < o.size(); ++i) o[i] += b[i];
  return o;
}

}  // namespace

QVector LieAlgebraQ::basis_vector(Index i) const {
  QVector v = zero();
  v(i) = 1;
  return v;
}

QVector LieAlgebraQ::bracket(const QVector& x, const QVector& y) const {
  Index n = dim();
  if (x.size() != n || y.size() != n) throw DimensionError("bracket: element size mismatch");
  QVector out = zero();
  for (Index i = 0; i < n; ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < n; ++j) {
      if (y(j) == 0) continue;
      for (const auto& [k, c] : bracket_basis(i, j)) out(k) += x(i) * y(j) * c;
    }
  }
  return out;
}

QMatrix LieAlgebraQ::ad(const QVector& x) const {
  Index n = dim();
  if (x.size() != n) throw DimensionError("ad: element size mismatch");
  QMatrix m = QMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < n; ++j)
      for (const auto& [k, c] : bracket_basis(i, j)) m(k, j) += x(i) * c;
  }
  return m;
}

void LieAlgebraQ::finalize() {
  Index n = dim();
  killing_cache = QMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j) {
      Rat s = 0;
      for (Index k = 0; k < n; ++k)
        for (const auto& [l, c] : bracket_basis(j, k))
          for (const auto& [mm, c2] : bracket_basis(i, l))
            if (mm == k) s += c * c2;
      killing_cache(i, j) = s;
      killing_cache(j, i) = s;
    }
}

Rat LieAlgebraQ::killing_form(const QVector& x, const QVector& y) const {
  Rat s = 0;
  for (Index i = 0; i < dim(); ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < dim(); ++j)
      if (y(j) != 0) s += x(i) * killing_cache(i, j) * y(j);
  }
  return s;
}

std::string LieAlgebraQ::format(const QVector& x) const {
  std::string out;
  for (Index i = 0; i < dim(); ++i) {
    if (x(i) == 0) continue;
    Rat c = x(i);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    Rat a = c < 0 ? Rat(-c) : c;
    if (a != 1) out += format_rat(a) + "*";
    out += labels[static_cast<size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

Index RootedAlgebra::h_index(Index k) const {
  if (k < 0 || k >= rs.rank()) throw InputError("Cartan index out of range");
  return k;
}

Index RootedAlgebra::root_vector_index(const RootVec& beta) const {
  auto it = rs.position.find(beta);
  if (it != rs.position.end()) return rs.rank() + it->second;
  it = rs.position.find(vneg(beta));
  if (it != rs.position.end()) return rs.rank() + rs.num_positive() + it->second;
  throw InputError("not a root: " + root_label(beta));
}

RootVec RootedAlgebra::root_at(Index i) const {
  Index r = rs.rank(), P = rs.num_positive();
  if (i < r || i >= alg.dim()) throw InputError("basis index has no root");
  if (i < r + P) return rs.positive[static_cast<size_t>(i - r)];
  return vneg(rs.positive[static_cast<size_t>(i - r - P)]);
}

QVector RootedAlgebra::coroot(const RootVec& beta) const {
  long nb = rs.norm2(beta);
  QVector v = alg.zero();
  for (Index k = 0; k < rs.rank(); ++k) {
    Rat c = Rat(beta[static_cast<size_t>(k)]) * Rat(2 * rs.d[static_cast<size_t>(k)]) / Rat(nb);
    if (!is_integer(c)) throw Error("coroot has non-integral coordinates");
    v(k) = c;
  }
  return v;
}

QVector RootedAlgebra::element_from_labels(const std::vector<Rat>& values) const {
  Index r = rs.rank();
  if (static_cast<Index>(values.size()) != r)
    throw InputError("label vector has wrong length");
  QMatrix a(r, r);
  for (Index j = 0; j < r; ++j)
    for (Index k = 0; k < r; ++k) a(j, k) = rs.cartan(k, j);
  QVector b(r);
  for (Index j = 0; j < r; ++j) b(j) = values[static_cast<size_t>(j)];
  auto sol = solve_affine(a, b);
  if (!sol || sol->kern.dim() != 0) throw Error("Cartan pairing is degenerate");
  QVector h = alg.zero();
  for (Index k = 0; k < r; ++k) h(k) = sol->particular(k);
  return h;
}

std::vector<Rat> RootedAlgebra::simple_root_values(const QVector& h) const {
  if (!in_cartan_span(h)) throw InputError("element is not in the Cartan span");
  std::vector<Rat> out;
  for (Index j = 0; j < rs.rank(); ++j) {
    Rat s = 0;
    for (Index k = 0; k < rs.rank(); ++k) s += h(k) * rs.cartan(k, j);
    out.push_back(s);
  }
  return out;
}

bool RootedAlgebra::in_cartan_span(const QVector& x) const {
  for (Index i = rs.rank(); i < alg.dim(); ++i)
    if (x(i) != 0) return false;
  return true;
}

RootedAlgebra chevalley_algebra(const RootSystem& rs) {
  const Index r = rs.rank();
  const Index P = rs.num_positive();
  const Index dim = r + 2 * P;

  auto pos_index = [&rs](const RootVec& v) -> Index {
    auto it = rs.position.find(v);
    return it == rs.position.end() ? -1 : it->second;
  };
  auto is_signed_root = [&](const RootVec& v) {
    return pos_index(v) >= 0 || pos_index(vneg(v)) >= 0;
  };

  // Antisymmetric table of coefficients for positive pairs whose sum is a root.
  std::vector<std::vector<Rat>> N(static_cast<size_t>(P),
                                  std::vector<Rat>(static_cast<size_t>(P), Rat(0)));
  std::function<Rat(const RootVec&, const RootVec&)> cN =
      [&](const RootVec& u, const RootVec& v) -> Rat {
    Index pu = pos_index(u), pv = pos_index(v);
    if (pu >= 0 && pv >= 0) return N[static_cast<size_t>(pu)][static_cast<size_t>(pv)];
    if (pu < 0 && pv < 0) return -cN(vneg(u), vneg(v));
    if (pu < 0) return -cN(v, u);
    // u positive, v = -beta: rotate the triple (u, -beta, beta-u).
    RootVec beta = vneg(v);
    RootVec diff = vsub(u, beta);
    Index pd = pos_index(diff);
    if (pd >= 0)
      return -N[static_cast<size_t>(pos_index(beta))][static_cast<size_t>(pd)] *
             Rat(rs.norm2(diff)) / Rat(rs.norm2(u));
    RootVec nd = vneg(diff);
    return N[static_cast<size_t>(pos_index(nd))][static_cast<size_t>(pos_index(u))] *
           Rat(rs.norm2(nd)) / Rat(rs.norm2(beta));
  };

  // Roots come sorted by height, so each level only needs lower ones. The
  // minimal decomposition fixes the sign; every other pair for the same sum
  // follows from the Jacobi identity applied to (eps, eta, -alpha).
  for (Index gi = 0; gi < P; ++gi) {
    const RootVec gamma = rs.positive[static_cast<size_t>(gi)];
    std::vector<std::pair<Index, Index>> decomps;
    for (Index ai = 0; ai < gi; ++ai) {
      Index bi = pos_index(vsub(gamma, rs.positive[static_cast<size_t>(ai)]));
      if (bi >= 0 && ai < bi) decomps.emplace_back(ai, bi);
    }
    if (decomps.empty()) continue;
    const auto [ei, hi] = decomps.front();
    const RootVec eps = rs.positive[static_cast<size_t>(ei)];
    const RootVec eta = rs.positive[static_cast<size_t>(hi)];
    {
      long p = 0;
      RootVec down = eta;
      while (true) {
        down = vsub(down, eps);
        if (!is_signed_root(down)) break;
        ++p;
      }
      N[static_cast<size_t>(ei)][static_cast<size_t>(hi)] = Rat(p + 1);
      N[static_cast<size_t>(hi)][static_cast<size_t>(ei)] = Rat(-(p + 1));
    }
    for (size_t t = 1; t < decomps.size(); ++t) {
      const auto [ai, bi] = decomps[t];
      const RootVec alpha = rs.positive[static_cast<size_t>(ai)];
      const RootVec beta = rs.positive[static_cast<size_t>(bi)];
      Rat total = 0;
      RootVec d2 = vsub(eta, alpha);
      if (is_signed_root(d2)) total += cN(eta, vneg(alpha)) * cN(d2, eps);
      RootVec d3 = vsub(eps, alpha);
      if (is_signed_root(d3)) total += cN(vneg(alpha), eps) * cN(d3, eta);
      Rat val = total * Rat(rs.norm2(gamma)) /
                (N[static_cast<size_t>(ei)][static_cast<size_t>(hi)] * Rat(rs.norm2(beta)));
      if (!is_integer(val) || val == 0) throw Error("structure constant recursion failed");
      N[static_cast<size_t>(ai)][static_cast<size_t>(bi)] = val;
      N[static_cast<size_t>(bi)][static_cast<size_t>(ai)] = -val;
    }
  }

  RootedAlgebra out;
  out.rs = rs;
  out.alg.labels.reserve(static_cast<size_t>(dim));
  for (Index k = 0; k < r; ++k) out.alg.labels.push_back("h" + std::to_string(k + 1));
  for (const RootVec& b : rs.positive) out.alg.labels.push_back("e[" + root_label(b) + "]");
  for (const RootVec& b : rs.positive) out.alg.labels.push_back("f[" + root_label(b) + "]");
  out.alg.table.assign(static_cast<size_t>(dim * dim), {});

  auto set = [&](Index i, Index j, Index k, const Rat& c) {
    if (c == 0) return;
    if (!is_integer(c)) throw Error("non-integral structure constant");
    out.alg.table[static_cast<size_t>(i * dim + j)].emplace_back(k, c);
  };

  for (Index bp = 0; bp < P; ++bp) {
    const RootVec& b = rs.positive[static_cast<size_t>(bp)];
    Index e = r + bp, f = r + P + bp;
    for (Index k = 0; k < r; ++k) {
      Rat c = Rat(rs.pairing(b, k));
      set(k, e, e, c);
      set(e, k, e, -c);
      set(k, f, f, -c);
      set(f, k, f, c);
    }
    QVector hv = out.coroot(b);
    for (Index k = 0; k < r; ++k) {
      set(e, f, k, hv(k));
      set(f, e, k, -hv(k));
    }
  }
  for (Index ip = 0; ip < P; ++ip) {
    for (Index jp = 0; jp < P; ++jp) {
      if (ip == jp) continue;
      const RootVec& a = rs.positive[static_cast<size_t>(ip)];
      const RootVec& b = rs.positive[static_cast<size_t>(jp)];
      Index sum_idx = pos_index(vadd(a, b));
      if (sum_idx >= 0) {
        Rat c = N[static_cast<size_t>(ip)][static_cast<size_t>(jp)];
        set(r + ip, r + jp, r + sum_idx, c);
        set(r + P + ip, r + P + jp, r + P + sum_idx, -c);
      }
      RootVec diff = vsub(a, b);
      if (is_signed_root(diff)) {
        Rat c = cN(a, vneg(b));
        Index target = pos_index(diff) >= 0 ? r + pos_index(diff)
                                            : r + P + pos_index(vneg(diff));
        set(r + ip, r + P + jp, target, c);
        set(r + P + jp, r + ip, target, -c);
      }
    }
  }
  out.alg.finalize();
  return out;
}

QMatrix MatrixAlgebra::to_matrix(const QVector& x) const {
  QMatrix m = QMatrix::Zero(msize, msize);
  for (Index i = 0; i < rooted.alg.dim(); ++i)
    if (x(i) != 0) m += x(i) * basis_mats[static_cast<size_t>(i)];
  return m;
}

QVector MatrixAlgebra::from_matrix(const QMatrix& m) const {
  if (m.rows() != msize || m.cols() != msize)
    throw DimensionError("from_matrix: wrong matrix size");
  QVector x = rooted.alg.zero();
  for (Index i = rooted.rank(); i < rooted.alg.dim(); ++i) {
    auto [a, b] = lead_cell[static_cast<size_t>(i)];
    x(i) = m(a, b);
  }
  QVector diag(msize);
  for (Index k = 0; k < msize; ++k) diag(k) = m(k, k);
  QVector h = diag_solver * diag;
  for (Index k = 0; k < rooted.rank(); ++k) x(k) = h(k);
  if (QMatrix(to_matrix(x)) != m) throw InputError("matrix is not in the algebra");
  return x;
}

namespace {

// Fills table, labels and killing for an algebra whose basis matrices are set.
void finish_matrix_algebra(MatrixAlgebra& ma) {
  Index dim = ma.rooted.alg.dim();
  ma.rooted.alg.table.assign(static_cast<size_t>(dim * dim), {});
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      if (i == j) continue;
      QMatrix c = ma.basis_mats[static_cast<size_t>(i)] * ma.basis_mats[static_cast<size_t>(j)] -
                  ma.basis_mats[static_cast<size_t>(j)] * ma.basis_mats[static_cast<size_t>(i)];
      QVector coords = ma.from_matrix(c);
      auto& cell = ma.rooted.alg.table[static_cast<size_t>(i * dim + j)];
      for (Index k = 0; k < dim; ++k)
        if (coords(k) != 0) cell.emplace_back(k, coords(k));
    }
  ma.rooted.alg.finalize();
}

}  // namespace

MatrixAlgebra matrix_sl(int n) {
  if (n < 2) throw InputError("matrix_sl needs n >= 2");
  MatrixAlgebra ma;
  ma.rooted.rs = RootSystem::simple('A', n - 1);
  const RootSystem& rs = ma.rooted.rs;
  Index r = rs.rank(), P = rs.num_positive(), dim = r + 2 * P;
  ma.msize = n;
  ma.basis_mats.assign(static_cast<size_t>(dim), QMatrix::Zero(n, n));
  ma.lead_cell.assign(static_cast<size_t>(dim), {0, 0});
  ma.rooted.alg.labels.resize(static_cast<size_t>(dim));

  for (Index k = 0; k < r; ++k) {
    QMatrix& h = ma.basis_mats[static_cast<size_t>(k)];
    h(k, k) = 1;
    h(k + 1, k + 1) = -1;
    ma.rooted.alg.labels[static_cast<size_t>(k)] = "h" + std::to_string(k + 1);
  }
  for (Index bp = 0; bp < P; ++bp) {
    const RootVec& b = rs.positive[static_cast<size_t>(bp)];
    // b is the interval root eps_i - eps_j (0-indexed i < j).
    Index i = 0;
    while (b[static_cast<size_t>(i)] == 0) ++i;
    Index j = i;
    while (j < r && b[static_cast<size_t>(j)] == 1) ++j;
    ma.basis_mats[static_cast<size_t>(r + bp)](i, j) = 1;
    ma.lead_cell[static_cast<size_t>(r + bp)] = {i, j};
    ma.basis_mats[static_cast<size_t>(r + P + bp)](j, i) = 1;
    ma.lead_cell[static_cast<size_t>(r + P + bp)] = {j, i};
    ma.rooted.alg.labels[static_cast<size_t>(r + bp)] = "e[" + root_label(b) + "]";
    ma.rooted.alg.labels[static_cast<size_t>(r + P + bp)] = "f[" + root_label(b) + "]";
  }
  ma.diag_solver = QMatrix::Zero(r, n);
  for (Index k = 0; k < r; ++k)
    for (Index l = 0; l <= k; ++l) ma.diag_solver(k, l) = 1;
  finish_matrix_algebra(ma);
  return ma;
}

MatrixAlgebra matrix_sp(int two_n) {
  if (two_n < 4 || two_n % 2 != 0) throw InputError("matrix_sp needs even size >= 4");
  int n = two_n / 2;
  MatrixAlgebra ma;
  ma.rooted.rs = RootSystem::simple('C', n);
  const RootSystem& rs = ma.rooted.rs;
  Index r = rs.rank(), P = rs.num_positive(), dim = r + 2 * P;
  ma.msize = two_n;
  ma.basis_mats.assign(static_cast<size_t>(dim), QMatrix::Zero(two_n, two_n));
  ma.lead_cell.assign(static_cast<size_t>(dim), {0, 0});
  ma.rooted.alg.labels.resize(static_cast<size_t>(dim));
  auto bar = [&](Index i) { return two_n - 1 - i; };

  for (Index k = 0; k < r; ++k) {
    QMatrix& h = ma.basis_mats[static_cast<size_t>(k)];
    h(k, k) = 1;
    h(bar(k), bar(k)) = -1;
    if (k + 1 < n) {
      h(k + 1, k + 1) = -1;
      h(bar(k + 1), bar(k + 1)) = 1;
    }
    ma.rooted.alg.labels[static_cast<size_t>(k)] = "h" + std::to_string(k + 1);
  }
  for (Index bp = 0; bp < P; ++bp) {
    const RootVec& b = rs.positive[static_cast<size_t>(bp)];
    // Epsilon coordinates of the root.
    std::vector<int> w(static_cast<size_t>(n), 0);
    for (Index i = 0; i < n; ++i) {
      int prev = (i == 0) ? 0 : b[static_cast<size_t>(i - 1)];
      w[static_cast<size_t>(i)] =
          (i + 1 < n) ? b[static_cast<size_t>(i)] - prev : 2 * b[static_cast<size_t>(i)] - prev;
    }
    QMatrix& e = ma.basis_mats[static_cast<size_t>(r + bp)];
    QMatrix& f = ma.basis_mats[static_cast<size_t>(r + P + bp)];
    std::vector<Index> plus, minus;
    for (Index i = 0; i < n; ++i) {
      if (w[static_cast<size_t>(i)] > 0) plus.push_back(i);
      if (w[static_cast<size_t>(i)] < 0) minus.push_back(i);
    }
    if (plus.size() == 1 && minus.size() == 1) {
      Index i = plus[0], j = minus[0];
      e(i, j) = 1;
      e(bar(j), bar(i)) = -1;
      f(j, i) = 1;
      f(bar(i), bar(j)) = -1;
      ma.lead_cell[static_cast<size_t>(r + bp)] = {i, j};
      ma.lead_cell[static_cast<size_t>(r + P + bp)] = {j, i};
    } else if (plus.size() == 2) {
      Index i = plus[0], j = plus[1];
      e(i, bar(j)) = 1;
      e(j, bar(i)) = 1;
      f(bar(j), i) = 1;
      f(bar(i), j) = 1;
      ma.lead_cell[static_cast<size_t>(r + bp)] = {i, bar(j)};
      ma.lead_cell[static_cast<size_t>(r + P + bp)] = {bar(j), i};
    } else {
      Index i = plus[0];
      e(i, bar(i)) = 1;
      f(bar(i), i) = 1;
      ma.lead_cell[static_cast<size_t>(r + bp)] = {i, bar(i)};
      ma.lead_cell[static_cast<size_t>(r + P + bp)] = {bar(i), i};
    }
    ma.rooted.alg.labels[static_cast<size_t>(r + bp)] = "e[" + root_label(b) + "]";
    ma.rooted.alg.labels[static_cast<size_t>(r + P + bp)] = "f[" + root_label(b) + "]";
  }
  ma.diag_solver = QMatrix::Zero(r, two_n);
  for (Index k = 0; k < r; ++k)
    for (Index l = 0; l <= k; ++l) ma.diag_solver(k, l) = 1;
  finish_matrix_algebra(ma);
  return ma;
}

QMatrix embed_sl_in_sp(const QMatrix& a) {
  Index n = a.rows();
  if (a.cols() != n) throw DimensionError("embed_sl_in_sp: square matrix required");
  QMatrix out = QMatrix::Zero(2 * n, 2 * n);
  out.block(0, 0, n, n) = a;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(n + i, n + j) = -a(n - 1 - j, n - 1 - i);
  return out;
}

}  // namespace nilpair
