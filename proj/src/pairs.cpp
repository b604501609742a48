#include "nilpair/pairs.hpp"

#include <utility>

#include "nilpair/errors.hpp"

namespace nilpair {

namespace {

QMatrix vstack(const std::vector<QMatrix>& blocks) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  QMatrix out(rows, blocks.front().cols());
  Index r = 0;
  for (const auto& b : blocks) {
    out.block(r, 0, b.rows(), b.cols()) = b;
    r += b.rows();
  }
  return out;
}

// Solves A x = b with the column order rotated left by r before elimination,
// so r = 0 prefers pivots (hence support) on the earliest coordinates and
// other values of r yield different representatives of the same solution set.
std::optional<QVector> solve_rotated(const QMatrix& a, const QVector& b, Index r) {
  const Index n = a.cols();
  QMatrix p(a.rows(), n);
  for (Index j = 0; j < n; ++j) p.col(j) = a.col((j + r) % n);
  auto sol = solve_affine(p, b);
  if (!sol) return std::nullopt;
  QVector y = QVector::Zero(n);
  for (Index j = 0; j < n; ++j) y((j + r) % n) = sol->particular(j);
  return y;
}

bool poly_squarefree(const QPoly& p) {
  return poly_gcd(p, poly_derivative(p)).size() == 1;
}

bool semisimple_rational(const LieAlgebraQ& alg, const QVector& h) {
  QPoly mp = minimal_polynomial(alg.ad(h));
  if (!poly_squarefree(mp)) return false;
  return rational_roots(mp).size() + 1 == mp.size();
}

}  // namespace

Subspace centralizer(const LieAlgebraQ& alg, const std::vector<QVector>& elems) {
  if (elems.empty()) return Subspace::full(alg.dim());
  std::vector<QMatrix> blocks;
  blocks.reserve(elems.size());
  for (const auto& x : elems) blocks.push_back(alg.ad(x));
  return kernel(vstack(blocks));
}

VerifyReport verify_characteristic(const LieAlgebraQ& alg, const NilpotentPair& pair,
                                   const Characteristic& ch) {
  VerifyReport rep;
  const QVector zero = alg.zero();

  if (alg.bracket(pair.e1, pair.e2) != zero) {
    rep.failure = "commutation: [e1,e2] != 0";
    return rep;
  }
  if (alg.bracket(ch.h1, ch.h2) != zero) {
    rep.failure = "commutation: [h1,h2] != 0";
    return rep;
  }
  rep.commutation = true;

  if (alg.bracket(ch.h1, pair.e1) != pair.e1) {
    rep.failure = "units: [h1,e1] != e1";
    return rep;
  }
  if (alg.bracket(ch.h1, pair.e2) != zero) {
    rep.failure = "units: [h1,e2] != 0";
    return rep;
  }
  if (alg.bracket(ch.h2, pair.e1) != zero) {
    rep.failure = "units: [h2,e1] != 0";
    return rep;
  }
  if (alg.bracket(ch.h2, pair.e2) != pair.e2) {
    rep.failure = "units: [h2,e2] != e2";
    return rep;
  }
  rep.units = true;

  const Subspace z = centralizer(alg, {pair.e1, pair.e2});
  for (Index i = 0; i < z.dim(); ++i) {
    const QVector zi = z.basis_row(i);
    if (alg.killing_form(zi, ch.h1) != 0) {
      rep.failure = "orthogonality: h1 is not Killing-orthogonal to the centralizer";
      return rep;
    }
    if (alg.killing_form(zi, ch.h2) != 0) {
      rep.failure = "orthogonality: h2 is not Killing-orthogonal to the centralizer";
      return rep;
    }
  }
  rep.orthogonality = true;

  const QPoly mp1 = minimal_polynomial(alg.ad(ch.h1));
  const QPoly mp2 = minimal_polynomial(alg.ad(ch.h2));
  if (!poly_squarefree(mp1)) {
    rep.failure = "semisimplicity: ad h1 is not semisimple";
    return rep;
  }
  if (!poly_squarefree(mp2)) {
    rep.failure = "semisimplicity: ad h2 is not semisimple";
    return rep;
  }
  rep.semisimple = true;

  if (rational_roots(mp1).size() + 1 != mp1.size()) {
    rep.failure = "rationality: ad h1 has irrational eigenvalues";
    return rep;
  }
  if (rational_roots(mp2).size() + 1 != mp2.size()) {
    rep.failure = "rationality: ad h2 has irrational eigenvalues";
    return rep;
  }
  rep.rational = true;
  return rep;
}

Characteristic solve_characteristic(const LieAlgebraQ& alg, const NilpotentPair& pair) {
  const Index n = alg.dim();
  if (alg.bracket(pair.e1, pair.e2) != alg.zero())
    throw InputError("solve_characteristic: e1 and e2 do not commute");

  const Subspace z = centralizer(alg, {pair.e1, pair.e2});
  const QMatrix orth = z.basis() * alg.killing();
  const QMatrix ad1 = alg.ad(pair.e1);
  const QMatrix ad2 = alg.ad(pair.e2);

  // Stage 1: [h1,e1] = e1, [h1,e2] = 0, h1 perp z(e). In unknown-first form
  // [h1,ei] = -ad(ei) h1, so the right sides pick up a sign.
  const QMatrix a1 = vstack({ad1, ad2, orth});
  QVector b1 = QVector::Zero(a1.rows());
  b1.head(n) = -pair.e1;
  if (!solve_rotated(a1, b1, 0)) throw SolveError(1, "no h1 satisfies the constraints");

  const Index tries = std::min<Index>(n, 16);
  QVector h1;
  bool found1 = false;
  for (Index r = 0; r < tries && !found1; ++r) {
    auto cand = solve_rotated(a1, b1, r);
    if (cand && semisimple_rational(alg, *cand)) {
      h1 = *cand;
      found1 = true;
    }
  }
  if (!found1) throw SolveError(3, "no semisimple rational representative for h1");

  // Stage 2: [h2,e2] = e2, [h2,e1] = 0, h2 perp z(e), [h1,h2] = 0.
  const QMatrix a2 = vstack({ad2, ad1, orth, alg.ad(h1)});
  QVector b2 = QVector::Zero(a2.rows());
  b2.head(n) = -pair.e2;
  if (!solve_rotated(a2, b2, 0)) throw SolveError(2, "no h2 completes h1");

  QVector h2;
  bool found2 = false;
  for (Index r = 0; r < tries && !found2; ++r) {
    auto cand = solve_rotated(a2, b2, r);
    if (cand && semisimple_rational(alg, *cand)) {
      h2 = *cand;
      found2 = true;
    }
  }
  if (!found2) throw SolveError(3, "no semisimple rational representative for h2");

  Characteristic ch{h1, h2};
  const VerifyReport rep = verify_characteristic(alg, pair, ch);
  if (!rep.ok()) throw SolveError(3, "candidate failed verification: " + rep.failure);
  return ch;
}

std::optional<Characteristic> is_nilpotent_pair(const LieAlgebraQ& alg,
                                                const NilpotentPair& pair) {
  if (alg.bracket(pair.e1, pair.e2) != alg.zero()) return std::nullopt;
  try {
    return solve_characteristic(alg, pair);
  } catch (const SolveError& err) {
    // An inconsistent linear system rules the pair out; failure to certify a
    // semisimple representative does not, so that is surfaced to the caller.
    if (err.stage <= 2) return std::nullopt;
    throw;
  }
}

Sl2Triple complete_sl2(const LieAlgebraQ& alg, const QVector& e) {
  const Index n = alg.dim();
  if (e == alg.zero()) throw InputError("complete_sl2: zero element");

  const QMatrix ade = alg.ad(e);
  const auto ysol = solve_affine(QMatrix(ade * ade), QVector(e * Rat(-2)));
  if (!ysol) throw SolveError(1, "complete_sl2: no coweight, element is not nilpotent");
  const QVector tih = alg.bracket(e, ysol->particular);
  if (alg.bracket(tih, e) != QVector(e * Rat(2)))
    throw SolveError(1, "complete_sl2: coweight relation failed");

  QMatrix a(2 * n, n);
  a.topRows(n) = ade;
  a.bottomRows(n) = QMatrix(alg.ad(tih) + QMatrix::Identity(n, n) * Rat(2));
  QVector b = QVector::Zero(2 * n);
  b.head(n) = tih;
  const auto fsol = solve_affine(a, b);
  if (!fsol) throw SolveError(2, "complete_sl2: no lowering element");
  return Sl2Triple{e, tih, fsol->particular};
}

bool is_rectangular(const LieAlgebraQ& alg, const NilpotentPair& pair,
                    const Characteristic& ch) {
  const bool c1 = solve_affine(alg.ad(pair.e1), ch.h1).has_value();
  const bool c2 = solve_affine(alg.ad(pair.e2), ch.h2).has_value();
  if (c1 != c2) throw Error("is_rectangular: the two membership clauses disagree");
  return c1;
}

}  // namespace nilpair
