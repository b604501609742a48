#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilpair/errors.hpp"
#include "nilpair/rational.hpp"

namespace nilpair {

// ---------------------------------------------------------------------------
// Elimination primitives. All pivoting is deterministic: pivots are taken in
// the leftmost column that has a nonzero entry, scanning rows top-down, so the
// reduced form of a matrix is a canonical function of its row space.
// ---------------------------------------------------------------------------

struct RrefResult {
  QMatrix mat;
  std::vector<Index> pivots;  // pivot column per pivot row
};

RrefResult rref(QMatrix m);
Index rank(const QMatrix& m);
Rat det(QMatrix m);

/// Canonical subspace of Q^n: the row span of a matrix held in reduced row
/// echelon form with zero rows dropped. Two subspaces are equal iff their
/// stored bases are identical matrices.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);
  static Subspace span_of_rows(const QMatrix& rows);
  static Subspace span_of(const std::vector<QVector>& vecs, Index ambient);

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }
  QVector basis_row(Index i) const { return basis_.row(i).transpose(); }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.basis_.rows() != b.basis_.rows()) return false;
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Index ambient_;
  QMatrix basis_;  // dim x ambient, rref, no zero rows
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// {x : form(u, x) = 0 for all u in a}; form must be symmetric.
Subspace orth_complement(const Subspace& a, const QMatrix& form);

/// Null space {x : m x = 0}.
Subspace kernel(const QMatrix& m);

/// Column space of m.
Subspace image(const QMatrix& m);

/// Image subspace { op v : v in s }.
Subspace apply(const QMatrix& op, const Subspace& s);

struct AffineSolution {
  QVector particular;  // free variables set to zero
  Subspace kern;       // solution set is particular + kern
};

/// Solves a x = b exactly; nullopt when inconsistent. Column order determines
/// which variables become free (later columns are preferred as free ones).
std::optional<AffineSolution> solve_affine(const QMatrix& a, const QVector& b);

// ---------------------------------------------------------------------------
// Exact polynomial spectra.
// ---------------------------------------------------------------------------

/// Dense polynomial, coeffs[i] is the x^i coefficient, no trailing zeros.
using QPoly = std::vector<Rat>;

QPoly poly_derivative(const QPoly& p);
QPoly poly_gcd(QPoly a, QPoly b);  // monic gcd
Rat poly_eval(const QPoly& p, const Rat& x);

/// Monic minimal polynomial, found as the first linear dependence among
/// I, m, m^2, ... (exact Krylov-style elimination on flattened powers).
QPoly minimal_polynomial(const QMatrix& m);

/// True iff gcd(minpoly, minpoly') is constant, i.e. m is diagonalizable over
/// the algebraic closure.
bool minpoly_is_squarefree(const QMatrix& m);

/// All rational roots of p (each listed once), via the rational-root theorem
/// applied to the content-normalized integer form of p.
std::vector<Rat> rational_roots(const QPoly& p);

/// Simultaneous eigenspace decomposition of pairwise commuting operators.
/// Returns (eigenvalue tuple, eigenspace) pairs sorted lexicographically by
/// eigenvalue tuple; the spaces form a direct sum of the full ambient space.
/// Throws SpectrumError("not semisimple") or SpectrumError("irrational
/// spectrum") when the decomposition does not exist over Q.
std::vector<std::pair<std::vector<Rat>, Subspace>> joint_eigenspaces(
    const std::vector<QMatrix>& ops);

// ---------------------------------------------------------------------------
// Integer helpers used by the rational-root search.
// ---------------------------------------------------------------------------

/// Prime factorization of |n| (n nonzero), primes ascending with multiplicity.
std::vector<mpz_class> prime_factors(mpz_class n);

/// All positive divisors of |n|, ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

}  // namespace nilpair
