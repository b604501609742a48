#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilpair/errors.hpp"
#include "nilpair/pairs.hpp"

using namespace nilpair;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

// The commuting pair in sp6 with fractional characteristic used throughout.
struct Sp6Fixture {
  MatrixAlgebra sp6 = matrix_sp(6);
  QVector e1, e2, h1, h2;

  Sp6Fixture() {
    QMatrix m1 = QMatrix::Zero(6, 6), m2 = QMatrix::Zero(6, 6);
    m1(1, 2) = 1;
    m1(3, 4) = -1;
    m2(0, 2) = 1;
    m2(3, 5) = -1;
    e1 = sp6.from_matrix(m1);
    e2 = sp6.from_matrix(m2);
    QMatrix d1 = QMatrix::Zero(6, 6), d2 = QMatrix::Zero(6, 6);
    const int a1[] = {-1, 2, -1, 1, -2, 1}, a2[] = {2, -1, -1, 1, 1, -2};
    for (Index i = 0; i < 6; ++i) {
      d1(i, i) = a1[i] * rat(1, 3);
      d2(i, i) = a2[i] * rat(1, 3);
    }
    h1 = sp6.from_matrix(d1);
    h2 = sp6.from_matrix(d2);
  }

  const LieAlgebraQ& alg() const { return sp6.rooted.alg; }
  NilpotentPair pair() const { return {e1, e2}; }
  Characteristic ch() const { return {h1, h2}; }
};

}  // namespace

TEST_CASE("centralizers of small sets") {
  RootedAlgebra a1 = chevalley_algebra(RootSystem::simple('A', 1));
  const LieAlgebraQ& alg = a1.alg;
  CHECK(centralizer(alg, {}).dim() == 3);

  QVector e = alg.basis_vector(1), h = alg.basis_vector(0);
  Subspace ze = centralizer(alg, {e});
  CHECK(ze.dim() == 1);
  CHECK(ze.contains(e));
  Subspace zh = centralizer(alg, {h});
  CHECK(zh.dim() == 1);
  CHECK(zh.contains(h));

  Sp6Fixture fx;
  CHECK(centralizer(fx.alg(), {fx.e1, fx.e2}).dim() == 7);
}

TEST_CASE("designated sp6 characteristic passes every clause") {
  Sp6Fixture fx;
  VerifyReport rep = verify_characteristic(fx.alg(), fx.pair(), fx.ch());
  CHECK(rep.ok());
  CHECK(rep.commutation);
  CHECK(rep.units);
  CHECK(rep.orthogonality);
  CHECK(rep.semisimple);
  CHECK(rep.rational);
}

TEST_CASE("tampered characteristics fail the right clause") {
  Sp6Fixture fx;

  // Doubling h1 breaks the unit relations but nothing earlier.
  VerifyReport doubled =
      verify_characteristic(fx.alg(), fx.pair(), {QVector(fx.h1 * Rat(2)), fx.h2});
  CHECK(!doubled.ok());
  CHECK(doubled.commutation);
  CHECK(starts_with(doubled.failure, "units"));

  // Adding e1 to h1 gives exp(ad(-e1)) applied to h1 with e1 fixed by the
  // conjugation, i.e. another characteristic: uniqueness only holds up to
  // conjugacy, and the checker accepts the whole class.
  VerifyReport conj =
      verify_characteristic(fx.alg(), fx.pair(), {QVector(fx.h1 + fx.e1), fx.h2});
  CHECK(conj.ok());

  // Adding the toral part of the centralizer breaks only orthogonality.
  Subspace z = centralizer(fx.alg(), {fx.e1, fx.e2});
  QMatrix cart_rows = QMatrix::Zero(3, fx.alg().dim());
  for (Index k = 0; k < 3; ++k) cart_rows(k, k) = 1;
  Subspace toral = intersect(z, Subspace::span_of_rows(cart_rows));
  REQUIRE(toral.dim() == 1);
  QVector z0 = toral.basis_row(0);
  REQUIRE(fx.alg().killing_form(z0, z0) != 0);
  VerifyReport shifted =
      verify_characteristic(fx.alg(), fx.pair(), {QVector(fx.h1 + z0), fx.h2});
  CHECK(!shifted.ok());
  CHECK(shifted.units);
  CHECK(starts_with(shifted.failure, "orthogonality"));

  // A non-commuting pair fails at the first clause.
  RootedAlgebra a2 = chevalley_algebra(RootSystem::simple('A', 2));
  QVector x1 = a2.alg.basis_vector(a2.root_vector_index({1, 0}));
  QVector x2 = a2.alg.basis_vector(a2.root_vector_index({0, 1}));
  VerifyReport noncomm =
      verify_characteristic(a2.alg, {x1, x2}, {a2.alg.zero(), a2.alg.zero()});
  CHECK(starts_with(noncomm.failure, "commutation"));
}

TEST_CASE("solver recovers the sp6 characteristic from the pair alone") {
  Sp6Fixture fx;
  Characteristic ch = solve_characteristic(fx.alg(), fx.pair());
  CHECK(ch.h1 == fx.h1);
  CHECK(ch.h2 == fx.h2);
  CHECK(verify_characteristic(fx.alg(), fx.pair(), ch).ok());

  auto witness = is_nilpotent_pair(fx.alg(), fx.pair());
  REQUIRE(witness.has_value());
  CHECK(witness->h1 == fx.h1);
  CHECK(witness->h2 == fx.h2);
}

TEST_CASE("solver output on degenerate pairs") {
  RootedAlgebra a1 = chevalley_algebra(RootSystem::simple('A', 1));
  const LieAlgebraQ& alg = a1.alg;
  QVector h = alg.basis_vector(0), e = alg.basis_vector(1);

  // A single raising element: h1 is half the coroot, h2 must vanish.
  Characteristic ch = solve_characteristic(alg, {e, alg.zero()});
  CHECK(ch.h1 == QVector(h * rat(1, 2)));
  CHECK(ch.h2 == alg.zero());

  // The zero pair has the zero characteristic.
  Characteristic triv = solve_characteristic(alg, {alg.zero(), alg.zero()});
  CHECK(triv.h1 == alg.zero());
  CHECK(triv.h2 == alg.zero());

  // (e, e) needs [h1,e] equal to both e and 0: inconsistent.
  CHECK_THROWS_AS(solve_characteristic(alg, {e, e}), SolveError);
  CHECK(!is_nilpotent_pair(alg, {e, e}).has_value());

  // Non-commuting elements are rejected outright.
  RootedAlgebra a2 = chevalley_algebra(RootSystem::simple('A', 2));
  QVector x1 = a2.alg.basis_vector(a2.root_vector_index({1, 0}));
  QVector x2 = a2.alg.basis_vector(a2.root_vector_index({0, 1}));
  CHECK_THROWS_AS(solve_characteristic(a2.alg, {x1, x2}), InputError);
  CHECK(!is_nilpotent_pair(a2.alg, {x1, x2}).has_value());
}

TEST_CASE("commuting matrix units in sl4 split the characteristic") {
  MatrixAlgebra sl4 = matrix_sl(4);
  const LieAlgebraQ& alg = sl4.rooted.alg;
  QMatrix m1 = QMatrix::Zero(4, 4), m2 = QMatrix::Zero(4, 4);
  m1(0, 1) = 1;
  m2(2, 3) = 1;
  NilpotentPair pair{sl4.from_matrix(m1), sl4.from_matrix(m2)};

  auto witness = is_nilpotent_pair(alg, pair);
  REQUIRE(witness.has_value());
  QMatrix d1 = QMatrix::Zero(4, 4), d2 = QMatrix::Zero(4, 4);
  d1(0, 0) = rat(1, 2);
  d1(1, 1) = rat(-1, 2);
  d2(2, 2) = rat(1, 2);
  d2(3, 3) = rat(-1, 2);
  CHECK(witness->h1 == sl4.from_matrix(d1));
  CHECK(witness->h2 == sl4.from_matrix(d2));

  CHECK(is_rectangular(alg, pair, *witness));
}

TEST_CASE("sl2 completion of nilpotent elements") {
  MatrixAlgebra sl3 = matrix_sl(3);
  const LieAlgebraQ& alg = sl3.rooted.alg;
  QMatrix m = QMatrix::Zero(3, 3);
  m(0, 1) = 1;
  QVector e = sl3.from_matrix(m);

  Sl2Triple t = complete_sl2(alg, e);
  QMatrix dh = QMatrix::Zero(3, 3);
  dh(0, 0) = 1;
  dh(1, 1) = -1;
  CHECK(t.tih == sl3.from_matrix(dh));
  QMatrix mf = QMatrix::Zero(3, 3);
  mf(1, 0) = 1;
  CHECK(t.f == sl3.from_matrix(mf));
  CHECK(QVector(alg.bracket(t.tih, t.e)) == QVector(t.e * Rat(2)));
  CHECK(QVector(alg.bracket(t.tih, t.f)) == QVector(t.f * Rat(-2)));
  CHECK(QVector(alg.bracket(t.e, t.f)) == t.tih);

  // The relations also hold away from matrix realizations.
  RootedAlgebra g2 = chevalley_algebra(RootSystem::simple('G', 2));
  QVector ge = g2.alg.basis_vector(g2.root_vector_index({1, 1}));
  Sl2Triple gt = complete_sl2(g2.alg, ge);
  CHECK(QVector(g2.alg.bracket(gt.tih, gt.e)) == QVector(gt.e * Rat(2)));
  CHECK(QVector(g2.alg.bracket(gt.tih, gt.f)) == QVector(gt.f * Rat(-2)));
  CHECK(QVector(g2.alg.bracket(gt.e, gt.f)) == gt.tih);

  CHECK_THROWS_AS(complete_sl2(alg, alg.zero()), InputError);
  // A semisimple element admits no completion.
  RootedAlgebra a1 = chevalley_algebra(RootSystem::simple('A', 1));
  CHECK_THROWS_AS(complete_sl2(a1.alg, a1.alg.basis_vector(0)), SolveError);
}

TEST_CASE("rectangularity of the sp6 pair is ruled out by both clauses") {
  Sp6Fixture fx;
  // h1 pairs nontrivially with diag(1,0,0,0,0,-1), which centralizes e1, so
  // h1 cannot lie in the image of ad e1; the h2 clause must agree.
  CHECK(!is_rectangular(fx.alg(), fx.pair(), fx.ch()));

  // Single-element pairs are always rectangular.
  RootedAlgebra a1 = chevalley_algebra(RootSystem::simple('A', 1));
  QVector e = a1.alg.basis_vector(1);
  Characteristic ch = solve_characteristic(a1.alg, {e, a1.alg.zero()});
  CHECK(is_rectangular(a1.alg, {e, a1.alg.zero()}, ch));
}
