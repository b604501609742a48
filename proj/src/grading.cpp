#include "nilpair/grading.hpp"

#include <algorithm>

#include "nilpair/errors.hpp"

namespace nilpair {

const Subspace* BiGrading::find(const Rat& p, const Rat& q) const {
  for (const Cell& c : cells)
    if (c.p == p && c.q == q) return &c.space;
  return nullptr;
}

Index BiGrading::dim_at(const Rat& p, const Rat& q) const {
  const Subspace* s = find(p, q);
  return s ? s->dim() : 0;
}

std::vector<std::pair<Rat, Rat>> BiGrading::support() const {
  std::vector<std::pair<Rat, Rat>> out;
  out.reserve(cells.size());
  for (const Cell& c : cells) out.emplace_back(c.p, c.q);
  return out;
}

BiGrading bigrade(const LieAlgebraQ& alg, const Characteristic& ch) {
  BiGrading bg;
  bg.alg = &alg;
  bg.ch = ch;
  auto eigen = joint_eigenspaces({alg.ad(ch.h1), alg.ad(ch.h2)});
  Index total = 0;
  for (auto& [vals, space] : eigen) {
    total += space.dim();
    bg.cells.push_back({vals[0], vals[1], std::move(space)});
  }
  if (total != alg.dim()) throw Error("bigrade: cells do not sum to the whole algebra");
  std::sort(bg.cells.begin(), bg.cells.end(), [](const BiGrading::Cell& a, const BiGrading::Cell& b) {
    if (a.q != b.q) return a.q > b.q;
    return a.p < b.p;
  });
  return bg;
}

Subspace filtration(const LieAlgebraQ& alg, const NilpotentPair& pair, const Subspace& m,
                    std::optional<Index> i, std::optional<Index> j) {
  if ((i && *i < 0) || (j && *j < 0)) return Subspace::zero(alg.dim());
  const Index n = alg.dim();
  const QMatrix zero_mat = QMatrix::Zero(n, n);
  Subspace out = m;
  const auto cut = [&](const QVector& e, Index idx) {
    const QMatrix op = alg.ad(e);
    QMatrix power = op;
    const Index reps = std::min(idx, n);
    for (Index k = 0; k < reps && power != zero_mat; ++k) power = QMatrix(power * op);
    out = intersect(out, kernel(power));
  };
  if (i) cut(pair.e1, *i);
  if (j) cut(pair.e2, *j);
  return out;
}

namespace {

// Limit of exp(t op) V as t -> infinity, taken in the Grassmannian. Each
// basis vector expands to a polynomial column in s = 1/t, normalized so its
// value at s = 0 is nonzero; whenever the values at s = 0 become dependent,
// the dependency vanishes at s = 0 and can be divided by s, which strictly
// lowers the valuation of the wedge of the columns. The loop therefore
// terminates with a full-rank special fiber, which is the limit subspace:
// in particular the dimension never changes. Taking leading vectors of a
// fixed basis alone would be wrong, since leading terms of different
// filtration levels can collide.
Subspace limit_along(const QMatrix& op, const Subspace& m) {
  const Index n = op.rows();
  const Index k = m.dim();
  if (k == 0) return Subspace::zero(n);

  using Poly = std::vector<QVector>;  // index e holds the coefficient of s^e
  const QVector zero_vec = QVector::Zero(n);

  std::vector<Poly> cols(k);
  long budget = 8;  // decreases by >= 1 per round; starts at the wedge valuation
  for (Index i = 0; i < k; ++i) {
    std::vector<QVector> iter = {m.basis_row(i)};  // op^d v / d!
    while (true) {
      const long d = static_cast<long>(iter.size());
      QVector next = op * iter.back();
      if (next == zero_vec) break;
      // iter.back() already carries 1/(d-1)!, so dividing by d completes d!.
      iter.push_back(QVector(next / Rat(d)));
    }
    const size_t deg = iter.size() - 1;
    cols[i].assign(iter.rbegin(), iter.rend());
    budget += static_cast<long>(deg);
  }

  while (true) {
    QMatrix fiber(n, k);
    for (Index i = 0; i < k; ++i) fiber.col(i) = cols[i][0];
    const Subspace dep = kernel(fiber);
    if (dep.dim() == 0) return Subspace::span_of_rows(fiber.transpose());
    if (--budget < 0) throw Error("limit: saturation did not terminate");

    const QVector c = dep.basis_row(0);
    size_t maxdeg = 0;
    Index pivot = -1;
    for (Index i = 0; i < k; ++i)
      if (c(i) != 0) {
        maxdeg = std::max(maxdeg, cols[i].size());
        pivot = i;
      }
    Poly combo(maxdeg, zero_vec);
    for (Index i = 0; i < k; ++i)
      if (c(i) != 0)
        for (size_t e = 0; e < cols[i].size(); ++e) combo[e] += QVector(c(i) * cols[i][e]);
    size_t shift = 1;  // combo[0] = fiber * c = 0 by construction
    while (shift < combo.size() && combo[shift] == zero_vec) ++shift;
    if (shift == combo.size()) throw Error("limit: basis degenerated");
    cols[pivot].assign(combo.begin() + static_cast<long>(shift), combo.end());
  }
}

}  // namespace

Subspace limit(const LieAlgebraQ& alg, const NilpotentPair& pair, const Subspace& m,
               LimitMode mode) {
  // The joint limit along both nilpotents is the limit along their sum:
  // the adjoint operators commute, so exp(t ad e1) exp(t ad e2) is exactly
  // exp(t ad(e1 + e2)).
  QVector e;
  switch (mode) {
    case LimitMode::e1: e = pair.e1; break;
    case LimitMode::e2: e = pair.e2; break;
    default: e = QVector(pair.e1 + pair.e2); break;
  }
  Subspace result = limit_along(alg.ad(e), m);
  if (result.dim() != m.dim()) throw Error("limit: dimension changed");
  return result;
}

bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }
bool rat_in_P(const Rat& x) { return rat_is_integer(x) && x >= 0; }

GradedSlice slice(const BiGrading& bg, const Subspace& target, const std::string& descriptor,
                  const std::function<bool(const Rat&, const Rat&)>& pred) {
  const LieAlgebraQ& alg = *bg.alg;
  const Subspace h1img = apply(alg.ad(bg.ch.h1), target);
  const Subspace h2img = apply(alg.ad(bg.ch.h2), target);
  if (!target.contains(h1img) || !target.contains(h2img))
    throw InputError("slice: target not graded");

  GradedSlice out;
  out.descriptor = descriptor;
  out.space = Subspace::zero(alg.dim());
  Index accounted = 0;
  const bool full_target = target.dim() == alg.dim();
  for (const BiGrading::Cell& c : bg.cells) {
    const Subspace piece = full_target ? c.space : intersect(target, c.space);
    accounted += piece.dim();
    if (piece.dim() == 0 || !pred(c.p, c.q)) continue;
    out.cell_dims.push_back({{c.p, c.q}, piece.dim()});
    out.space = sum(out.space, piece);
  }
  if (accounted != target.dim())
    throw Error("slice: graded pieces of the target do not sum to it");
  return out;
}

GradedSlice slice_cell(const BiGrading& bg, const Subspace& target, const Rat& p, const Rat& q) {
  return slice(bg, target, "cell", [&](const Rat& a, const Rat& b) { return a == p && b == q; });
}

GradedSlice slice_row(const BiGrading& bg, const Subspace& target, const Rat& q) {
  return slice(bg, target, "row", [&](const Rat&, const Rat& b) { return b == q; });
}

GradedSlice slice_col(const BiGrading& bg, const Subspace& target, const Rat& p) {
  return slice(bg, target, "column", [&](const Rat& a, const Rat&) { return a == p; });
}

GradedSlice slice_PP(const BiGrading& bg, const Subspace& target) {
  return slice(bg, target, "PxP",
               [](const Rat& a, const Rat& b) { return rat_in_P(a) && rat_in_P(b); });
}

std::pair<GradedSlice, GradedSlice> integral_fractional_split(const BiGrading& bg) {
  const LieAlgebraQ& alg = *bg.alg;
  const Subspace full = Subspace::full(alg.dim());
  GradedSlice zz = slice(bg, full, "ZxZ", [](const Rat& a, const Rat& b) {
    return rat_is_integer(a) && rat_is_integer(b);
  });
  GradedSlice fr = slice(bg, full, "fractional", [](const Rat& a, const Rat& b) {
    return !(rat_is_integer(a) && rat_is_integer(b));
  });
  if (zz.space.dim() + fr.space.dim() != alg.dim())
    throw Error("integral_fractional_split: parts do not complement");

  // The integral part must be closed under the bracket.
  for (Index i = 0; i < zz.space.dim(); ++i)
    for (Index j = i + 1; j < zz.space.dim(); ++j)
      if (!zz.space.contains(alg.bracket(zz.space.basis_row(i), zz.space.basis_row(j))))
        throw Error("integral_fractional_split: integral part is not a subalgebra");
  return {zz, fr};
}

}  // namespace nilpair
