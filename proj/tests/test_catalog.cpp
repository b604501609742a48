#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilpair/catalog.hpp"
#include "nilpair/classify.hpp"
#include "nilpair/errors.hpp"

using namespace nilpair;

namespace {

bool same_matrix(const QMatrix& x, const QMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j)
      if (x(i, j) != y(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("partition_pair validates its input") {
  CHECK_THROWS_AS(partition_pair(1, {1}), InputError);
  CHECK_THROWS_AS(partition_pair(3, {}), InputError);
  CHECK_THROWS_AS(partition_pair(3, {1, 2}), InputError);
  CHECK_THROWS_AS(partition_pair(4, {2, 1}), InputError);
  CHECK_THROWS_AS(partition_pair(2, {2, 0}), InputError);
  CHECK_THROWS_AS(partition_pair(2, {3, -1}), InputError);
}

TEST_CASE("partition pair of (2,1) matches the hand built hook pair") {
  PartitionPair pp = partition_pair(3, {2, 1});
  REQUIRE(pp.cells.size() == 3);
  CHECK(pp.cells[0] == std::pair<int, int>{0, 0});
  CHECK(pp.cells[1] == std::pair<int, int>{0, 1});
  CHECK(pp.cells[2] == std::pair<int, int>{1, 0});

  QMatrix e1 = QMatrix::Zero(3, 3), e2 = QMatrix::Zero(3, 3);
  e1(1, 0) = 1;
  e2(2, 0) = 1;
  QMatrix h1 = QMatrix::Zero(3, 3), h2 = QMatrix::Zero(3, 3);
  h1(0, 0) = rat(-1, 3);
  h1(1, 1) = rat(2, 3);
  h1(2, 2) = rat(-1, 3);
  h2(0, 0) = rat(-1, 3);
  h2(1, 1) = rat(-1, 3);
  h2(2, 2) = rat(2, 3);
  CHECK(same_matrix(pp.algebra->to_matrix(pp.pair.e1), e1));
  CHECK(same_matrix(pp.algebra->to_matrix(pp.pair.e2), e2));
  CHECK(same_matrix(pp.algebra->to_matrix(pp.ch.h1), h1));
  CHECK(same_matrix(pp.algebra->to_matrix(pp.ch.h2), h2));

  const LieAlgebraQ& alg = pp.algebra->rooted.alg;
  CHECK(is_nilpotent_pair(alg, pp.pair).has_value());
  CHECK(verify_characteristic(alg, pp.pair, pp.ch).ok());
}

TEST_CASE("partition pairs with n at most 5 are even principal pairs") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& parts : partitions_of(n)) {
      CAPTURE(n);
      CAPTURE(parts.size());
      PartitionPair pp = partition_pair(n, parts);
      BiGrading bg = bigrade(pp.algebra->rooted.alg, pp.ch);
      ClassificationReport rep = classification_report(pp.pair, bg, pp.algebra->rooted.rank());
      CHECK(rep.principal);
      CHECK(rep.even);
      CHECK(rep.wonderful);
      CHECK(rep.integral);
      CHECK(rep.dim_z_e == n - 1);
    }
  }
}

TEST_CASE("partitions_of enumerates in descending lexicographic order") {
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(2).size() == 2);
  CHECK(partitions_of(3).size() == 3);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(6).size() == 11);
  const std::vector<std::vector<int>> four = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(partitions_of(4) == four);
}

TEST_CASE("block embedding preserves brackets and spans an sl image") {
  MatrixAlgebra sl2 = matrix_sl(2);
  for (const QMatrix& x : sl2.basis_mats) {
    for (const QMatrix& y : sl2.basis_mats) {
      QMatrix lhs = embed_sl_in_sp(x) * embed_sl_in_sp(y) - embed_sl_in_sp(y) * embed_sl_in_sp(x);
      QMatrix rhs = embed_sl_in_sp(QMatrix(x * y - y * x));
      CHECK(same_matrix(lhs, rhs));
    }
  }

  MatrixAlgebra sl3 = matrix_sl(3);
  MatrixAlgebra sp6 = matrix_sp(6);
  std::vector<QVector> image;
  for (const QMatrix& b : sl3.basis_mats) image.push_back(sp6.from_matrix(embed_sl_in_sp(b)));
  CHECK(Subspace::span_of(image, sp6.rooted.alg.dim()).dim() == 8);
}

TEST_CASE("sp6 entry reproduces the documented example") {
  CatalogEntry entry = sp6_example();
  CHECK(entry.name == "sp6-denom");
  CHECK(entry.expect("dim z(e)") == "7");
  CHECK(entry.expect("z(e) weights") ==
        "(-2/3,4/3) (0,0) (0,1) (1/3,1/3) (2/3,2/3) (1,0) (4/3,-2/3)");
  CHECK(entry.expect("wonderful") == "true");
  CHECK(entry.expect("integral") == "false");
  CHECK(entry.expect("max denominator") == "3");
  CHECK(entry.expect("c(s)") == "3");
  CHECK(entry.expect("type of s") == "A2");
  CHECK(entry.expect("matches embedded partition pair (2,1)") == "true");
  CHECK_THROWS_AS(entry.expect("no such quantity"), InputError);

  QMatrix m1 = QMatrix::Zero(6, 6);
  m1(1, 2) = 1;
  m1(3, 4) = -1;
  CHECK(same_matrix(entry.matrix->to_matrix(entry.pair.e1), m1));
  CHECK(entry.z.dim() == 7);
  CHECK(entry.seed == 0);
}

TEST_CASE("sp4 almost principal entry: labels and richardson asymmetry") {
  CatalogEntry entry = sp_almost_principal(1);
  CHECK(entry.name == "sp4n-n1");
  CHECK(entry.expect("dim z(e)") == "3");
  CHECK(entry.expect("almost principal") == "true");
  CHECK(entry.expect("integral") == "true");
  CHECK(entry.expect("type of l2") == "A1");
  CHECK(entry.expect("type of l1") == "A1");
  CHECK(entry.expect("richardson e1 (parabolic)") == "true");
  CHECK(entry.expect("richardson e2 (parabolic)") == "false");
  CHECK(entry.expect("almost even") == "true");

  const RootedAlgebra& ra = *entry.algebra;
  // Straight order: e2 is not Richardson and the Coxeter bound fails on the
  // label -2 < -cox(A1) + 1 = -1.
  LabelReport straight = labels_report(ra, entry.ch, false);
  CHECK(straight.h1_labels == std::vector<Rat>{1, -2});
  CHECK(straight.h2_labels == std::vector<Rat>{0, 1});
  CHECK(straight.labels_i);
  CHECK(straight.labels_ii);
  CHECK(straight.labels_iii);
  CHECK(straight.pr_i);
  CHECK(straight.pr_ii);
  CHECK_FALSE(straight.cox_bound);
  CHECK(straight.cox_l2 == 2);
  CHECK_FALSE(straight.pr_iii.has_value());

  // Swapped order: the Richardson member sits in second position and the
  // bound -1 is attained after adaptation.
  Characteristic swapped{entry.ch.h2, entry.ch.h1};
  LabelReport sw = labels_report(ra, swapped, true);
  CHECK(sw.h1_labels == std::vector<Rat>{-1, 1});
  CHECK(sw.h2_labels == std::vector<Rat>{1, 0});
  CHECK(sw.cox_bound);
  REQUIRE(sw.pr_iii.has_value());
  CHECK(*sw.pr_iii);
  CHECK(sw.cox_l2 == 2);

  ExponentsCheck ec = exponents_check(ra, entry.pair, entry.grading);
  CHECK(ec.ok());

  CHECK_THROWS_AS(sp_almost_principal(0), InputError);

  // Seeded construction is reproducible.
  CatalogEntry again = sp_almost_principal(1);
  CHECK(QVector(again.pair.e1) == QVector(entry.pair.e1));
  CHECK(QVector(again.pair.e2) == QVector(entry.pair.e2));
}

TEST_CASE("sp8 almost principal entry: A3 and 2A1 levis") {
  CatalogEntry entry = sp_almost_principal(2);
  CHECK(entry.name == "sp4n-n2");
  CHECK(entry.expect("dim z(e)") == "5");
  CHECK(entry.expect("almost principal") == "true");
  CHECK(entry.expect("type of l2") == "A3");
  CHECK(entry.expect("type of l1") == "A1+A1");
  CHECK(entry.expect("richardson e1 (parabolic)") == "true");
  CHECK(entry.expect("richardson e2 (parabolic)") == "false");
  CHECK(entry.expect("almost even") == "true");
  CHECK(exponents_check(*entry.algebra, entry.pair, entry.grading).ok());
}

TEST_CASE("E6 entry matches the figure row data and the label theorems") {
  CatalogEntry entry = exceptional_pair(ExceptionalPair::E6);
  CHECK(entry.name == "e6-d5-2a1");
  CHECK(entry.expect("dim z(e)") == "6");
  CHECK(entry.expect("principal") == "true");
  CHECK(entry.expect("even") == "true");
  CHECK(entry.expect("dim g(0,0)") == "6");
  CHECK(entry.expect("dim g(1,0)") == "5");
  CHECK(entry.expect("dim g(-4,1)") == "2");
  CHECK(entry.expect("dim algebra") == "78");
  CHECK(entry.expect("cells meeting z(e)") == "6");
  CHECK(entry.expect("type of l2") == "D5");
  CHECK(entry.expect("z(e) weights") == "(0,1) (1,0) (3,1) (4,0) (5,0) (7,0)");

  const RootedAlgebra& ra = *entry.algebra;
  const bool e2_rich =
      richardson_check(entry.pair, entry.grading, Side::e2, RichardsonScope::parabolic);
  CHECK(e2_rich);
  LabelReport lr = labels_report(ra, entry.ch, e2_rich);
  CHECK(lr.h1_labels == std::vector<Rat>{1, 1, 1, 1, 1, -7});
  CHECK(lr.h2_labels == std::vector<Rat>{0, 0, 0, 0, 0, 1});
  CHECK(lr.pr_i);
  CHECK(lr.pr_ii);
  CHECK(lr.cox_l2 == 8);
  CHECK(lr.cox_bound);  // x = -7 = -cox(D5) + 1, attained exactly
  REQUIRE(lr.pr_iii.has_value());
  CHECK(*lr.pr_iii);

  ExponentsCheck ec = exponents_check(ra, entry.pair, entry.grading);
  CHECK(ec.ok());
  CHECK(ec.alpha_nonzero == std::vector<Rat>{1, 3, 4, 5, 7});
  CHECK(ec.l2_exponents == std::vector<int>{1, 3, 4, 5, 7});
  CHECK(ec.beta_nonzero == std::vector<Rat>{1, 1});
}

TEST_CASE("E7 entry matches the figure row data") {
  CatalogEntry entry = exceptional_pair(ExceptionalPair::E7);
  CHECK(entry.name == "e7-a4a1");
  CHECK(entry.expect("dim z(e)") == "7");
  CHECK(entry.expect("principal") == "true");
  CHECK(entry.expect("even") == "true");
  CHECK(entry.expect("dim g(0,0)") == "7");
  CHECK(entry.expect("dim g(1,0)") == "5");
  CHECK(entry.expect("dim algebra") == "133");
  CHECK(entry.expect("cells meeting z(e)") == "7");
  CHECK(entry.expect("type of l2") == "A4+A1");
  CHECK(entry.expect("z(e) weights") == "(0,1) (0,4) (1,0) (1,3) (2,2) (3,1) (4,0)");
}

TEST_CASE("catalog registry exposes stable names") {
  const std::vector<std::string> names = {"sl2-trivial", "sl3-partition-2-1", "sl4-rect",
                                          "sp4-rect-frac", "sp6-denom", "sp4n-n1",
                                          "sp4n-n2", "e6-d5-2a1", "e7-a4a1"};
  CHECK(catalog_names() == names);
  CHECK_THROWS_AS(catalog_entry("so6-denom"), InputError);

  CatalogEntry trivial = catalog_entry("sl2-trivial");
  CHECK(trivial.expect("dim z(e)") == "1");
  CHECK(trivial.expect("principal") == "true");
  CHECK(QVector(trivial.pair.e2) == QVector(trivial.algebra->alg.zero()));

  CatalogEntry rect = catalog_entry("sl4-rect");
  CHECK(rect.expect("rectangular") == "true");
  CHECK(rect.expect("integral") == "false");
  CHECK(rect.expect("dim z(e)") == "5");

  CatalogEntry frac = catalog_entry("sp4-rect-frac");
  CHECK(frac.expect("almost even") == "true");
  CHECK(frac.expect("max denominator") == "2");
  CHECK(frac.expect("type of s") == "A1+A1");
}
