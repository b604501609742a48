#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilpair/liealgebra.hpp"

namespace nilpair {

struct NilpotentPair {
  QVector e1, e2;
};

struct Characteristic {
  QVector h1, h2;
};

struct Sl2Triple {
  QVector e, tih, f;  // [tih,e] = 2e, [tih,f] = -2f, [e,f] = tih
};

// Common centralizer of a list of elements; the empty list gives the algebra.
Subspace centralizer(const LieAlgebraQ& alg, const std::vector<QVector>& elems);

// Clause-by-clause check that (h1, h2) is a characteristic of the pair:
// commutation, unit relations, Killing orthogonality to the centralizer,
// semisimplicity, rational spectrum. The first failed clause is reported.
struct VerifyReport {
  bool commutation = false;
  bool units = false;
  bool orthogonality = false;
  bool semisimple = false;
  bool rational = false;
  std::string failure;  // empty when everything holds
  bool ok() const { return failure.empty(); }
};
VerifyReport verify_characteristic(const LieAlgebraQ& alg, const NilpotentPair& pair,
                                   const Characteristic& ch);

// Solves the defining constraints for h1, then h2, preferring representatives
// supported on the leading (Cartan) coordinates; enumerates alternative
// representatives if the default one is not semisimple. Throws SolveError with
// the stage that failed: 1 = no h1, 2 = no h2, 3 = no semisimple representative.
Characteristic solve_characteristic(const LieAlgebraQ& alg, const NilpotentPair& pair);

// A commuting pair is nilpotent exactly when the characteristic constraints
// are solvable; returns the witness when they are.
std::optional<Characteristic> is_nilpotent_pair(const LieAlgebraQ& alg,
                                                const NilpotentPair& pair);

// Jacobson-Morozov completion of a nonzero nilpotent element.
Sl2Triple complete_sl2(const LieAlgebraQ& alg, const QVector& e);

// h1 in [e1, g] iff h2 in [e2, g]; the equivalence itself is asserted.
bool is_rectangular(const LieAlgebraQ& alg, const NilpotentPair& pair,
                    const Characteristic& ch);

}  // namespace nilpair
