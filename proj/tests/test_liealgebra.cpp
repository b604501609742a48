#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilpair/errors.hpp"
#include "nilpair/liealgebra.hpp"

using namespace nilpair;

namespace {

// [b_i, [b_j, b_k]] accumulated straight from the structure table.
QVector double_bracket(const LieAlgebraQ& alg, Index i, Index j, Index k) {
  QVector acc = alg.zero();
  for (const auto& [l, c] : alg.bracket_basis(j, k))
    for (const auto& [m, c2] : alg.bracket_basis(i, l)) acc(m) += c * c2;
  return acc;
}

bool jacobi_holds(const LieAlgebraQ& alg, Index i, Index j, Index k) {
  QVector s = double_bracket(alg, i, j, k) + double_bracket(alg, j, k, i) +
              double_bracket(alg, k, i, j);
  for (Index t = 0; t < alg.dim(); ++t)
    if (s(t) != 0) return false;
  return true;
}

bool antisymmetric(const LieAlgebraQ& alg, Index i, Index j) {
  QVector s = alg.zero();
  for (const auto& [k, c] : alg.bracket_basis(i, j)) s(k) += c;
  for (const auto& [k, c] : alg.bracket_basis(j, i)) s(k) += c;
  for (Index t = 0; t < alg.dim(); ++t)
    if (s(t) != 0) return false;
  return true;
}

bool table_integral(const LieAlgebraQ& alg) {
  for (const auto& cell : alg.table)
    for (const auto& [k, c] : cell)
      if (!is_integer(c)) return false;
  return true;
}

QVector random_element(const LieAlgebraQ& alg, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  QVector v = alg.zero();
  for (Index i = 0; i < alg.dim(); ++i) v(i) = coef(rng);
  return v;
}

}  // namespace

TEST_CASE("sl2 bracket and Killing values") {
  RootedAlgebra sl2 = chevalley_algebra(RootSystem::simple('A', 1));
  CHECK(sl2.alg.dim() == 3);
  QVector h = sl2.alg.basis_vector(0);
  QVector e = sl2.alg.basis_vector(1);
  QVector f = sl2.alg.basis_vector(2);
  CHECK(QVector(sl2.alg.bracket(h, e)) == QVector(2 * e));
  CHECK(QVector(sl2.alg.bracket(h, f)) == QVector(-2 * f));
  CHECK(QVector(sl2.alg.bracket(e, f)) == h);
  CHECK(sl2.alg.killing_form(h, h) == 8);
  CHECK(sl2.alg.killing_form(e, f) == 4);
  CHECK(sl2.alg.killing_form(e, e) == 0);
  CHECK(sl2.alg.killing_form(h, e) == 0);
}

TEST_CASE("Jacobi identity holds exhaustively in small rank") {
  for (const char* label : {"A1", "A2", "A3", "C2", "C3", "G2"}) {
    CAPTURE(label);
    RootedAlgebra g = chevalley_algebra(RootSystem::parse(label));
    Index n = g.alg.dim();
    bool all_anti = true, all_jacobi = true;
    for (Index i = 0; i < n; ++i)
      for (Index j = i; j < n; ++j) {
        if (!antisymmetric(g.alg, i, j)) all_anti = false;
        for (Index k = j; k < n; ++k)
          if (!jacobi_holds(g.alg, i, j, k)) all_jacobi = false;
      }
    CHECK(all_anti);
    CHECK(all_jacobi);
    CHECK(table_integral(g.alg));
  }
}

TEST_CASE("Jacobi identity holds on sampled triples in E6 and E7") {
  for (const char* label : {"E6", "E7"}) {
    CAPTURE(label);
    RootedAlgebra g = chevalley_algebra(RootSystem::parse(label));
    CHECK(g.alg.dim() == (label[1] == '6' ? 78 : 133));
    CHECK(table_integral(g.alg));
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<Index> pick(0, g.alg.dim() - 1);
    bool ok = true;
    for (int t = 0; t < 10000; ++t) {
      Index i = pick(rng), j = pick(rng), k = pick(rng);
      if (!jacobi_holds(g.alg, i, j, k) || !antisymmetric(g.alg, i, j)) ok = false;
    }
    CHECK(ok);
  }
}

TEST_CASE("bracket coefficients have string length magnitude") {
  for (const char* label : {"A2", "C2", "C3", "G2"}) {
    CAPTURE(label);
    RootedAlgebra g = chevalley_algebra(RootSystem::parse(label));
    const RootSystem& rs = g.rs;
    for (const RootVec& a : rs.positive)
      for (const RootVec& b : rs.positive) {
        RootVec s(a);
        for (size_t t = 0; t < s.size(); ++t) s[t] += b[t];
        if (!rs.is_positive_root(s)) continue;
        // p = how far the string b, b-a, b-2a, ... extends through roots.
        int p = 0;
        RootVec down(b);
        while (true) {
          for (size_t t = 0; t < down.size(); ++t) down[t] -= a[t];
          RootVec neg(down);
          for (int& c : neg) c = -c;
          if (!rs.is_positive_root(down) && !rs.is_positive_root(neg)) break;
          ++p;
        }
        QVector br = g.alg.bracket(g.alg.basis_vector(g.root_vector_index(a)),
                                   g.alg.basis_vector(g.root_vector_index(b)));
        Rat c = br(g.root_vector_index(s));
        CAPTURE(root_label(a));
        CAPTURE(root_label(b));
        CHECK((c == p + 1 || c == -(p + 1)));
      }
  }
}

TEST_CASE("Cartan relations and coroots") {
  RootedAlgebra g2 = chevalley_algebra(RootSystem::simple('G', 2));
  for (Index k = 0; k < 2; ++k)
    for (const RootVec& b : g2.rs.positive) {
      QVector e = g2.alg.basis_vector(g2.root_vector_index(b));
      CHECK(QVector(g2.alg.bracket(g2.alg.basis_vector(k), e)) ==
            QVector(Rat(g2.rs.pairing(b, k)) * e));
    }
  // Coroot of the highest root 3a1+2a2 is h1 + 2 h2.
  QVector hv = g2.coroot({3, 2});
  CHECK(hv(0) == 1);
  CHECK(hv(1) == 2);
  // [e_b, f_b] equals the coroot for every root.
  for (const RootVec& b : g2.rs.positive) {
    QVector e = g2.alg.basis_vector(g2.root_vector_index(b));
    RootVec nb(b);
    for (int& c : nb) c = -c;
    QVector f = g2.alg.basis_vector(g2.root_vector_index(nb));
    CHECK(QVector(g2.alg.bracket(e, f)) == QVector(g2.coroot(b)));
  }
  // sp-type coroot: the long root 2a1+a2 in C2 has coroot h1 + h2.
  RootedAlgebra c2 = chevalley_algebra(RootSystem::simple('C', 2));
  QVector cv = c2.coroot({2, 1});
  CHECK(cv(0) == 1);
  CHECK(cv(1) == 1);
}

TEST_CASE("Killing form is invariant and pairs opposite root spaces") {
  RootedAlgebra g = chevalley_algebra(RootSystem::simple('C', 3));
  std::mt19937 rng(7151);
  for (int t = 0; t < 30; ++t) {
    QVector x = random_element(g.alg, rng);
    QVector y = random_element(g.alg, rng);
    QVector z = random_element(g.alg, rng);
    CHECK(g.alg.killing_form(g.alg.bracket(x, y), z) ==
          g.alg.killing_form(x, g.alg.bracket(y, z)));
  }
  Index r = g.rank(), P = g.rs.num_positive();
  for (Index i = 0; i < P; ++i)
    for (Index j = 0; j < P; ++j) {
      CHECK(g.alg.killing_cache(r + i, r + j) == 0);
      if (i != j) CHECK(g.alg.killing_cache(r + i, r + P + j) == 0);
      else CHECK(g.alg.killing_cache(r + i, r + P + j) != 0);
    }
  for (Index k = 0; k < r; ++k)
    for (Index i = 0; i < 2 * P; ++i) CHECK(g.alg.killing_cache(k, r + i) == 0);
}

TEST_CASE("Killing form is nondegenerate") {
  for (const char* label : {"A2", "C2", "G2", "E6"}) {
    CAPTURE(label);
    RootedAlgebra g = chevalley_algebra(RootSystem::parse(label));
    CHECK(det(g.alg.killing()) != 0);
  }
}

TEST_CASE("matrix_sl(3) realizes the bracket by commutators") {
  MatrixAlgebra sl3 = matrix_sl(3);
  CHECK(sl3.rooted.alg.dim() == 8);
  CHECK(table_integral(sl3.rooted.alg));
  QMatrix e12 = QMatrix::Zero(3, 3), e23 = QMatrix::Zero(3, 3), e13 = QMatrix::Zero(3, 3);
  e12(0, 1) = 1;
  e23(1, 2) = 1;
  e13(0, 2) = 1;
  QVector x = sl3.from_matrix(e12), y = sl3.from_matrix(e23);
  CHECK(QMatrix(sl3.to_matrix(sl3.rooted.alg.bracket(x, y))) == e13);
  // Round trip through coordinates.
  std::mt19937 rng(991);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int t = 0; t < 20; ++t) {
    QMatrix m(3, 3);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j) m(i, j) = coef(rng);
    Rat tr = m(0, 0) + m(1, 1) + m(2, 2);
    m(2, 2) -= tr;
    CHECK(QMatrix(sl3.to_matrix(sl3.from_matrix(m))) == m);
  }
  CHECK_THROWS_AS(sl3.from_matrix(QMatrix::Identity(3, 3)), InputError);
  CHECK_THROWS_AS(sl3.from_matrix(QMatrix::Zero(4, 4)), DimensionError);
  // Killing form of sl_n is 2n times the trace form.
  for (int t = 0; t < 10; ++t) {
    QVector a = random_element(sl3.rooted.alg, rng);
    QVector b = random_element(sl3.rooted.alg, rng);
    QMatrix prod = sl3.to_matrix(a) * sl3.to_matrix(b);
    Rat trace = 0;
    for (Index i = 0; i < 3; ++i) trace += prod(i, i);
    CHECK(sl3.rooted.alg.killing_form(a, b) == 6 * trace);
  }
}

TEST_CASE("matrix_sp(4) membership and Killing") {
  MatrixAlgebra sp4 = matrix_sp(4);
  CHECK(sp4.rooted.alg.dim() == 10);
  CHECK(sp4.rooted.rs.label() == "C2");
  CHECK(table_integral(sp4.rooted.alg));
  // All basis matrices preserve the antidiagonal symplectic form.
  QMatrix J = QMatrix::Zero(4, 4);
  J(0, 3) = 1;
  J(1, 2) = 1;
  J(2, 1) = -1;
  J(3, 0) = -1;
  for (const QMatrix& m : sp4.basis_mats)
    CHECK(QMatrix(m.transpose() * J + J * m) == QMatrix::Zero(4, 4));
  // A lone matrix unit is not symplectic.
  QMatrix e12 = QMatrix::Zero(4, 4);
  e12(0, 1) = 1;
  CHECK_THROWS_AS(sp4.from_matrix(e12), InputError);
  // Killing form of sp_2n is (2n+2) times the trace form.
  std::mt19937 rng(40321);
  for (int t = 0; t < 10; ++t) {
    QVector a = random_element(sp4.rooted.alg, rng);
    QVector b = random_element(sp4.rooted.alg, rng);
    QMatrix prod = sp4.to_matrix(a) * sp4.to_matrix(b);
    Rat trace = 0;
    for (Index i = 0; i < 4; ++i) trace += prod(i, i);
    CHECK(sp4.rooted.alg.killing_form(a, b) == 6 * trace);
  }
}

TEST_CASE("matrix_sp(6) hosts the designated commuting pair") {
  MatrixAlgebra sp6 = matrix_sp(6);
  CHECK(sp6.rooted.alg.dim() == 21);
  QMatrix m1 = QMatrix::Zero(6, 6), m2 = QMatrix::Zero(6, 6);
  m1(1, 2) = 1;
  m1(3, 4) = -1;
  m2(0, 2) = 1;
  m2(3, 5) = -1;
  QVector e1 = sp6.from_matrix(m1), e2 = sp6.from_matrix(m2);
  QMatrix d1 = QMatrix::Zero(6, 6), d2 = QMatrix::Zero(6, 6);
  Rat third = rat(1, 3);
  const int a1[] = {-1, 2, -1, 1, -2, 1}, a2[] = {2, -1, -1, 1, 1, -2};
  for (Index i = 0; i < 6; ++i) {
    d1(i, i) = a1[i] * third;
    d2(i, i) = a2[i] * third;
  }
  QVector h1 = sp6.from_matrix(d1), h2 = sp6.from_matrix(d2);
  const LieAlgebraQ& alg = sp6.rooted.alg;
  CHECK(QVector(alg.bracket(e1, e2)) == alg.zero());
  CHECK(QVector(alg.bracket(h1, h2)) == alg.zero());
  CHECK(QVector(alg.bracket(h1, e1)) == e1);
  CHECK(QVector(alg.bracket(h2, e1)) == alg.zero());
  CHECK(QVector(alg.bracket(h1, e2)) == alg.zero());
  CHECK(QVector(alg.bracket(h2, e2)) == e2);
  // e1 is the root vector of a2 (eps2 - eps3), e2 of a1+a2 (eps1 - eps3).
  CHECK(e1 == alg.basis_vector(sp6.rooted.root_vector_index({0, 1, 0})));
  CHECK(e2 == alg.basis_vector(sp6.rooted.root_vector_index({1, 1, 0})));
}

TEST_CASE("sl3 embeds into sp6 preserving brackets") {
  MatrixAlgebra sl3 = matrix_sl(3);
  MatrixAlgebra sp6 = matrix_sp(6);
  Index dim = sl3.rooted.alg.dim();
  QMatrix flat(36, dim);
  for (Index i = 0; i < dim; ++i) {
    QMatrix im = embed_sl_in_sp(sl3.basis_mats[static_cast<size_t>(i)]);
    CHECK_NOTHROW(sp6.from_matrix(im));
    for (Index a = 0; a < 6; ++a)
      for (Index b = 0; b < 6; ++b) flat(a * 6 + b, i) = im(a, b);
    for (Index j = 0; j < dim; ++j) {
      const QMatrix& x = sl3.basis_mats[static_cast<size_t>(i)];
      const QMatrix& y = sl3.basis_mats[static_cast<size_t>(j)];
      CHECK(QMatrix(embed_sl_in_sp(x * y - y * x)) ==
            QMatrix(embed_sl_in_sp(x) * embed_sl_in_sp(y) -
                    embed_sl_in_sp(y) * embed_sl_in_sp(x)));
    }
  }
  CHECK(rank(flat) == 8);
}

TEST_CASE("Cartan elements from simple root values") {
  RootedAlgebra e6 = chevalley_algebra(RootSystem::simple('E', 6));
  std::vector<Rat> want = {1, 1, 1, 1, 1, -7};
  QVector h = e6.element_from_labels(want);
  CHECK(e6.in_cartan_span(h));
  CHECK(e6.simple_root_values(h) == want);
  // Value on the highest root (1,2,2,3,2,1) is 1+2+2+3+2-7 = 3.
  QVector etop = e6.alg.basis_vector(e6.root_vector_index(e6.rs.highest_root()));
  CHECK(QVector(e6.alg.bracket(h, etop)) == QVector(Rat(3) * etop));

  RootedAlgebra c3 = chevalley_algebra(RootSystem::simple('C', 3));
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int t = 0; t < 25; ++t) {
    std::vector<Rat> v;
    for (int k = 0; k < 3; ++k) v.push_back(rat(num(rng), 3));
    QVector hh = c3.element_from_labels(v);
    CHECK(c3.simple_root_values(hh) == v);
  }
  QVector not_cartan = c3.alg.basis_vector(4);
  CHECK_FALSE(c3.in_cartan_span(not_cartan));
  CHECK_THROWS_AS(c3.simple_root_values(not_cartan), InputError);
}

TEST_CASE("roots map to basis indices and back") {
  RootedAlgebra g2 = chevalley_algebra(RootSystem::simple('G', 2));
  for (const RootVec& b : g2.rs.positive) {
    RootVec nb(b);
    for (int& c : nb) c = -c;
    Index ip = g2.root_vector_index(b), in = g2.root_vector_index(nb);
    CHECK(g2.root_at(ip) == b);
    CHECK(g2.root_at(in) == nb);
    CHECK(ip != in);
  }
  CHECK_THROWS_AS(g2.root_vector_index({2, 2}), InputError);
  CHECK_THROWS_AS(g2.root_at(0), InputError);
}

TEST_CASE("element formatting is readable") {
  RootedAlgebra a2 = chevalley_algebra(RootSystem::simple('A', 2));
  QVector v = a2.alg.zero();
  CHECK(a2.alg.format(v) == "0");
  Index e_a1 = a2.root_vector_index({1, 0});
  v(0) = 1;
  v(e_a1) = 2;
  CHECK(a2.alg.format(v) == "h1 + 2*e[a1]");
  v(0) = rat(-1, 2);
  v(e_a1) = 0;
  CHECK(a2.alg.format(v) == "-1/2*h1");
}
