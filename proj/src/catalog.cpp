#include "nilpair/catalog.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "nilpair/classify.hpp"
#include "nilpair/errors.hpp"

namespace nilpair {

namespace {

constexpr std::uint64_t kSp4nSeed = 9400;
constexpr std::uint64_t kE6Seed = 60601;
constexpr std::uint64_t kE7Seed = 70701;

std::string fmt(const Rat& x) { return x.get_str(); }
std::string fmt(Index n) { return std::to_string(static_cast<long long>(n)); }
std::string fmt(bool b) { return b ? "true" : "false"; }

std::string fmt_types(const std::vector<std::pair<char, int>>& types) {
  std::string out;
  for (const auto& [family, rank] : types) {
    if (!out.empty()) out += "+";
    out += family;
    out += std::to_string(rank);
  }
  return out.empty() ? "0" : out;
}

void pin(CatalogEntry& entry, const std::string& quantity, const std::string& computed,
         const std::string& fixed) {
  if (computed != fixed)
    throw Error("catalog entry " + entry.name + ": " + quantity + " computed as " + computed +
                " but pinned to " + fixed);
  entry.expected.push_back({quantity, fixed, true});
}

void derive(CatalogEntry& entry, const std::string& quantity, const std::string& computed) {
  entry.expected.push_back({quantity, computed, false});
}

// (p, q) weight multiset of a graded subspace, lex sorted, e.g. "(0,0) (1,0)".
std::string weight_multiset(const BiGrading& bg, const Subspace& target,
                            const std::string& descriptor) {
  GradedSlice s = slice(bg, target, descriptor, [](const Rat&, const Rat&) { return true; });
  std::vector<std::pair<Rat, Rat>> weights;
  for (const auto& [pq, dim] : s.cell_dims)
    for (Index k = 0; k < dim; ++k) weights.push_back(pq);
  std::sort(weights.begin(), weights.end());
  std::string out;
  for (const auto& [p, q] : weights) {
    if (!out.empty()) out += " ";
    out += "(" + fmt(p) + "," + fmt(q) + ")";
  }
  return out;
}

Index cells_meeting(const BiGrading& bg, const Subspace& target) {
  GradedSlice s = slice(bg, target, "support", [](const Rat&, const Rat&) { return true; });
  Index count = 0;
  for (const auto& [pq, dim] : s.cell_dims)
    if (dim > 0) ++count;
  return count;
}

// Small integer stream with platform independent draws.
struct SmallInts {
  std::mt19937_64 gen;
  explicit SmallInts(std::uint64_t seed) : gen(seed) {}
  long draw(long lo, long hi) {
    return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

QVector combine(const Subspace& space, SmallInts& rng, long lo, long hi) {
  QVector out = QVector::Zero(space.ambient());
  for (Index i = 0; i < space.dim(); ++i) out += Rat(rng.draw(lo, hi)) * space.basis_row(i);
  return out;
}

std::vector<RootVec> vanishing_roots(const RootSystem& rs, const std::vector<Rat>& labels) {
  std::vector<RootVec> out;
  for (const RootVec& beta : rs.positive) {
    Rat value = 0;
    for (size_t k = 0; k < beta.size(); ++k) value += Rat(beta[k]) * labels[k];
    if (value == 0) out.push_back(beta);
  }
  return out;
}

// Levi subalgebra spanned by the Cartan and the root spaces killed by the
// given simple root labels.
Subspace vanishing_levi(const RootedAlgebra& ra, const std::vector<Rat>& labels) {
  std::vector<QVector> vecs;
  for (Index k = 0; k < ra.rank(); ++k) vecs.push_back(ra.alg.basis_vector(ra.h_index(k)));
  for (const RootVec& beta : vanishing_roots(ra.rs, labels)) {
    vecs.push_back(ra.alg.basis_vector(ra.root_vector_index(beta)));
    RootVec neg = beta;
    for (int& c : neg) c = -c;
    vecs.push_back(ra.alg.basis_vector(ra.root_vector_index(neg)));
  }
  return Subspace::span_of(vecs, ra.alg.dim());
}

// Draws e1 in g_{1,0} until it is regular in the h2-vanishing Levi, then e2
// in z(e1) cap g_{0,1} until the pair's centralizer has the target dimension.
NilpotentPair search_pair(const RootedAlgebra& ra, const BiGrading& bg,
                          const std::vector<Rat>& h2_labels, Index dim_z_target,
                          std::uint64_t seed, const std::string& who) {
  const Subspace* g10 = bg.find(1, 0);
  const Subspace* g01 = bg.find(0, 1);
  if (g10 == nullptr || g01 == nullptr)
    throw Error(who + ": the grading is missing a (1,0) or (0,1) cell");
  const Subspace levi = vanishing_levi(ra, h2_labels);
  SmallInts rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    QVector e1 = combine(*g10, rng, 1, 3);
    Subspace z_e1 = kernel(ra.alg.ad(e1));
    if (intersect(z_e1, levi).dim() != ra.rank()) continue;
    Subspace cand = intersect(z_e1, *g01);
    if (cand.dim() == 0) continue;
    QVector e2 = combine(cand, rng, 1, 3);
    if (centralizer(ra.alg, {e1, e2}).dim() != dim_z_target) continue;
    return NilpotentPair{e1, e2};
  }
  throw Error(who + ": generic element search failed after 64 attempts (seed " +
              std::to_string(seed) + ")");
}

// Shared tail: verified characteristic, grading, centralizer.
void finish(CatalogEntry& entry) {
  const LieAlgebraQ& alg = entry.algebra->alg;
  VerifyReport report = verify_characteristic(alg, entry.pair, entry.ch);
  if (!report.ok())
    throw Error("catalog entry " + entry.name + ": characteristic fails to verify (" +
                report.failure + ")");
  if (entry.grading.alg == nullptr) entry.grading = bigrade(alg, entry.ch);
  entry.z = centralizer(alg, {entry.pair.e1, entry.pair.e2});
}

CatalogEntry from_partition(const std::string& name, int n, const std::vector<int>& parts) {
  PartitionPair pp = partition_pair(n, parts);
  CatalogEntry entry;
  entry.name = name;
  entry.matrix = pp.algebra;
  entry.algebra = std::shared_ptr<const RootedAlgebra>(pp.algebra, &pp.algebra->rooted);
  entry.pair = pp.pair;
  entry.ch = pp.ch;
  finish(entry);
  ClassificationReport rep =
      classification_report(entry.pair, entry.grading, entry.algebra->rank());
  pin(entry, "dim z(e)", fmt(entry.z.dim()), fmt(static_cast<Index>(n - 1)));
  pin(entry, "principal", fmt(rep.principal), "true");
  pin(entry, "even", fmt(rep.even), "true");
  pin(entry, "wonderful", fmt(rep.wonderful), "true");
  pin(entry, "integral", fmt(rep.integral), "true");
  derive(entry, "dim z(h)", fmt(rep.dim_z_h));
  derive(entry, "z(e) weights", weight_multiset(entry.grading, entry.z, "centralizer"));
  return entry;
}

CatalogEntry sl4_rect_entry() {
  auto msl = std::make_shared<MatrixAlgebra>(matrix_sl(4));
  CatalogEntry entry;
  entry.name = "sl4-rect";
  entry.matrix = msl;
  entry.algebra = std::shared_ptr<const RootedAlgebra>(msl, &msl->rooted);
  QMatrix m1 = QMatrix::Zero(4, 4), m2 = QMatrix::Zero(4, 4);
  m1(0, 1) = 1;
  m2(2, 3) = 1;
  QMatrix d1 = QMatrix::Zero(4, 4), d2 = QMatrix::Zero(4, 4);
  const Rat half = rat(1, 2);
  d1(0, 0) = half;
  d1(1, 1) = -half;
  d2(2, 2) = half;
  d2(3, 3) = -half;
  entry.pair = NilpotentPair{msl->from_matrix(m1), msl->from_matrix(m2)};
  entry.ch = Characteristic{msl->from_matrix(d1), msl->from_matrix(d2)};
  finish(entry);
  ClassificationReport rep = classification_report(entry.pair, entry.grading, msl->rooted.rank());
  pin(entry, "dim z(e)", fmt(entry.z.dim()), "5");
  pin(entry, "rectangular", fmt(rep.rectangular), "true");
  pin(entry, "wonderful", fmt(rep.wonderful), "true");
  pin(entry, "integral", fmt(rep.integral), "false");
  derive(entry, "dim z(h)", fmt(rep.dim_z_h));
  derive(entry, "even", fmt(rep.even));
  return entry;
}

CatalogEntry sp4_rect_frac_entry() {
  auto msl = std::make_shared<MatrixAlgebra>(matrix_sp(4));
  CatalogEntry entry;
  entry.name = "sp4-rect-frac";
  entry.matrix = msl;
  entry.algebra = std::shared_ptr<const RootedAlgebra>(msl, &msl->rooted);
  QMatrix m1 = QMatrix::Zero(4, 4), m2 = QMatrix::Zero(4, 4);
  m1(0, 3) = 1;
  m2(1, 2) = 1;
  QMatrix d1 = QMatrix::Zero(4, 4), d2 = QMatrix::Zero(4, 4);
  const Rat half = rat(1, 2);
  d1(0, 0) = half;
  d1(3, 3) = -half;
  d2(1, 1) = half;
  d2(2, 2) = -half;
  entry.pair = NilpotentPair{msl->from_matrix(m1), msl->from_matrix(m2)};
  entry.ch = Characteristic{msl->from_matrix(d1), msl->from_matrix(d2)};
  finish(entry);
  ClassificationReport rep = classification_report(entry.pair, entry.grading, msl->rooted.rank());
  DenominatorCheck dc = denominator_check(msl->rooted, entry.grading);
  pin(entry, "dim z(e)", fmt(entry.z.dim()), "3");
  pin(entry, "almost principal", fmt(rep.almost_principal), "true");
  pin(entry, "almost even", fmt(rep.almost_even), "true");
  pin(entry, "rectangular", fmt(rep.rectangular), "true");
  pin(entry, "wonderful", fmt(rep.wonderful), "true");
  pin(entry, "integral", fmt(rep.integral), "false");
  pin(entry, "max denominator", std::to_string(dc.max_denominator), "2");
  derive(entry, "dim z(h)", fmt(rep.dim_z_h));
  derive(entry, "c(s)", std::to_string(dc.c_s));
  derive(entry, "type of s", fmt_types(dc.s_types));
  return entry;
}

}  // namespace

const std::string& CatalogEntry::expect(const std::string& quantity) const {
  for (const auto& ev : expected)
    if (ev.quantity == quantity) return ev.value;
  throw InputError("catalog entry " + name + ": no expected value named " + quantity);
}

PartitionPair partition_pair(int n, const std::vector<int>& partition) {
  if (n < 2) throw InputError("partition_pair: n must be at least 2");
  if (partition.empty()) throw InputError("partition_pair: empty partition");
  long sum = 0;
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] <= 0) throw InputError("partition_pair: parts must be positive");
    if (i + 1 < partition.size() && partition[i + 1] > partition[i])
      throw InputError("partition_pair: parts must be weakly decreasing");
    sum += partition[i];
  }
  if (sum != n) throw InputError("partition_pair: parts do not sum to n");

  PartitionPair out;
  out.n = n;
  out.partition = partition;
  for (int r = 0; r < static_cast<int>(partition.size()); ++r)
    for (int c = 0; c < partition[r]; ++c) out.cells.emplace_back(r, c);

  auto in_diagram = [&](int r, int c) {
    return r >= 0 && r < static_cast<int>(partition.size()) && c >= 0 && c < partition[r];
  };
  auto cell_index = [&](int r, int c) {
    int idx = c;
    for (int i = 0; i < r; ++i) idx += partition[i];
    return idx;
  };

  Rat cbar = 0, rbar = 0;
  for (const auto& [r, c] : out.cells) {
    cbar += c;
    rbar += r;
  }
  cbar /= n;
  rbar /= n;

  QMatrix e1 = QMatrix::Zero(n, n), e2 = QMatrix::Zero(n, n);
  QMatrix h1 = QMatrix::Zero(n, n), h2 = QMatrix::Zero(n, n);
  for (const auto& [r, c] : out.cells) {
    const int i = cell_index(r, c);
    if (in_diagram(r, c + 1)) e1(cell_index(r, c + 1), i) = 1;
    if (in_diagram(r + 1, c)) e2(cell_index(r + 1, c), i) = 1;
    h1(i, i) = Rat(c) - cbar;
    h2(i, i) = Rat(r) - rbar;
  }

  auto msl = std::make_shared<MatrixAlgebra>(matrix_sl(n));
  out.algebra = msl;
  out.pair = NilpotentPair{msl->from_matrix(e1), msl->from_matrix(e2)};
  out.ch = Characteristic{msl->from_matrix(h1), msl->from_matrix(h2)};

  const LieAlgebraQ& alg = msl->rooted.alg;
  VerifyReport report = verify_characteristic(alg, out.pair, out.ch);
  if (!report.ok())
    throw Error("partition_pair: characteristic fails to verify (" + report.failure + ")");
  if (centralizer(alg, {out.pair.e1, out.pair.e2}).dim() != n - 1)
    throw Error("partition_pair: centralizer dimension is not n - 1");
  return out;
}

CatalogEntry sp6_example() {
  auto msl = std::make_shared<MatrixAlgebra>(matrix_sp(6));
  CatalogEntry entry;
  entry.name = "sp6-denom";
  entry.matrix = msl;
  entry.algebra = std::shared_ptr<const RootedAlgebra>(msl, &msl->rooted);
  QMatrix m1 = QMatrix::Zero(6, 6), m2 = QMatrix::Zero(6, 6);
  m1(1, 2) = 1;
  m1(3, 4) = -1;
  m2(0, 2) = 1;
  m2(3, 5) = -1;
  const long diag1[6] = {-1, 2, -1, 1, -2, 1};
  const long diag2[6] = {2, -1, -1, 1, 1, -2};
  QMatrix d1 = QMatrix::Zero(6, 6), d2 = QMatrix::Zero(6, 6);
  for (Index i = 0; i < 6; ++i) {
    d1(i, i) = rat(diag1[i], 3);
    d2(i, i) = rat(diag2[i], 3);
  }
  entry.pair = NilpotentPair{msl->from_matrix(m1), msl->from_matrix(m2)};
  entry.ch = Characteristic{msl->from_matrix(d1), msl->from_matrix(d2)};
  finish(entry);

  // The same pair through the partition route: push the (2,1) pair of sl3
  // through the block embedding, then reverse each Witt block.
  PartitionPair pp = partition_pair(3, {2, 1});
  const Index sigma[6] = {2, 1, 0, 5, 4, 3};
  auto identify = [&](const QVector& x) {
    QMatrix m = embed_sl_in_sp(pp.algebra->to_matrix(x));
    QMatrix moved = QMatrix::Zero(6, 6);
    for (Index i = 0; i < 6; ++i)
      for (Index j = 0; j < 6; ++j) moved(sigma[i], sigma[j]) = m(i, j);
    return moved;
  };
  auto same = [](const QMatrix& x, const QMatrix& y) {
    for (Index i = 0; i < x.rows(); ++i)
      for (Index j = 0; j < x.cols(); ++j)
        if (x(i, j) != y(i, j)) return false;
    return true;
  };
  const bool identified = same(identify(pp.pair.e1), m1) && same(identify(pp.pair.e2), m2) &&
                          same(identify(pp.ch.h1), d1) && same(identify(pp.ch.h2), d2);

  ClassificationReport rep = classification_report(entry.pair, entry.grading, msl->rooted.rank());
  DenominatorCheck dc = denominator_check(msl->rooted, entry.grading);
  pin(entry, "dim z(e)", fmt(entry.z.dim()), "7");
  pin(entry, "z(e) weights", weight_multiset(entry.grading, entry.z, "centralizer"),
      "(-2/3,4/3) (0,0) (0,1) (1/3,1/3) (2/3,2/3) (1,0) (4/3,-2/3)");
  pin(entry, "wonderful", fmt(rep.wonderful), "true");
  pin(entry, "integral", fmt(rep.integral), "false");
  pin(entry, "max denominator", std::to_string(dc.max_denominator), "3");
  pin(entry, "c(s)", std::to_string(dc.c_s), "3");
  pin(entry, "type of s", fmt_types(dc.s_types), "A2");
  pin(entry, "matches embedded partition pair (2,1)", fmt(identified), "true");
  derive(entry, "dim z(h)", fmt(rep.dim_z_h));
  return entry;
}

CatalogEntry sp_almost_principal(int n, std::optional<std::uint64_t> seed) {
  if (n < 1) throw InputError("sp_almost_principal: n must be at least 1");
  const Index rank = 2 * n;
  auto msl = std::make_shared<MatrixAlgebra>(matrix_sp(4 * n));
  CatalogEntry entry;
  entry.name = "sp4n-n" + std::to_string(n);
  entry.matrix = msl;
  entry.algebra = std::shared_ptr<const RootedAlgebra>(msl, &msl->rooted);
  entry.seed = seed.value_or(kSp4nSeed + static_cast<std::uint64_t>(n));

  const RootedAlgebra& ra = msl->rooted;
  std::vector<Rat> a(static_cast<size_t>(rank), 1), b(static_cast<size_t>(rank), 0);
  a.back() = -2 * n;
  b.back() = 1;
  entry.ch = Characteristic{ra.element_from_labels(a), ra.element_from_labels(b)};
  entry.grading = bigrade(ra.alg, entry.ch);
  entry.pair = search_pair(ra, entry.grading, b, rank + 1, entry.seed,
                           "catalog entry " + entry.name);
  finish(entry);

  ClassificationReport rep = classification_report(entry.pair, entry.grading, rank);
  const std::string l2 = fmt_types(subsystem_data(ra.rs, vanishing_roots(ra.rs, b)).component_types);
  const std::string l1 = fmt_types(subsystem_data(ra.rs, vanishing_roots(ra.rs, a)).component_types);
  std::string n_a1;
  for (int i = 0; i < n; ++i) n_a1 += (i ? "+A1" : "A1");
  pin(entry, "dim z(e)", fmt(entry.z.dim()), fmt(rank + 1));
  pin(entry, "almost principal", fmt(rep.almost_principal), "true");
  pin(entry, "integral", fmt(rep.integral), "true");
  pin(entry, "type of l2", l2, "A" + std::to_string(2 * n - 1));
  pin(entry, "type of l1", l1, n_a1);
  pin(entry, "richardson e1 (parabolic)",
      fmt(richardson_check(entry.pair, entry.grading, Side::e1, RichardsonScope::parabolic)),
      "true");
  pin(entry, "richardson e2 (parabolic)",
      fmt(richardson_check(entry.pair, entry.grading, Side::e2, RichardsonScope::parabolic)),
      "false");
  derive(entry, "dim z(h)", fmt(rep.dim_z_h));
  derive(entry, "almost even", fmt(rep.almost_even));
  derive(entry, "wonderful", fmt(rep.wonderful));
  derive(entry, "z(e) weights", weight_multiset(entry.grading, entry.z, "centralizer"));
  return entry;
}

CatalogEntry exceptional_pair(ExceptionalPair which, std::optional<std::uint64_t> seed) {
  const bool six = which == ExceptionalPair::E6;
  RootSystem rs = RootSystem::simple('E', six ? 6 : 7);
  auto ra = std::make_shared<const RootedAlgebra>(chevalley_algebra(rs));
  CatalogEntry entry;
  entry.name = six ? "e6-d5-2a1" : "e7-a4a1";
  entry.algebra = ra;
  entry.seed = seed.value_or(six ? kE6Seed : kE7Seed);

  std::vector<Rat> a, b;
  if (six) {
    a = {1, 1, 1, 1, 1, -7};
    b = {0, 0, 0, 0, 0, 1};
  } else {
    a = {1, 1, 1, 1, -4, 1, -1};
    b = {0, 0, 0, 0, 1, 0, 1};
  }
  entry.ch = Characteristic{ra->element_from_labels(a), ra->element_from_labels(b)};
  entry.grading = bigrade(ra->alg, entry.ch);
  entry.pair =
      search_pair(*ra, entry.grading, b, ra->rank(), entry.seed, "catalog entry " + entry.name);
  finish(entry);

  const Index dim_z = entry.z.dim();
  const Index dim_zh = entry.grading.dim_at(0, 0);
  Index total = 0;
  for (const auto& cell : entry.grading.cells) total += cell.space.dim();
  pin(entry, "dim z(e)", fmt(dim_z), six ? "6" : "7");
  pin(entry, "principal", fmt(dim_z == ra->rank()), "true");
  pin(entry, "even", fmt(dim_z == dim_zh), "true");
  pin(entry, "dim g(0,0)", fmt(dim_zh), six ? "6" : "7");
  pin(entry, "dim g(1,0)", fmt(entry.grading.dim_at(1, 0)), "5");
  if (six) pin(entry, "dim g(-4,1)", fmt(entry.grading.dim_at(-4, 1)), "2");
  pin(entry, "dim algebra", fmt(total), six ? "78" : "133");
  pin(entry, "cells meeting z(e)", fmt(cells_meeting(entry.grading, entry.z)), six ? "6" : "7");
  const std::string l2 = fmt_types(subsystem_data(rs, vanishing_roots(rs, b)).component_types);
  pin(entry, "type of l2", l2, six ? "D5" : "A4+A1");
  derive(entry, "z(e) weights", weight_multiset(entry.grading, entry.z, "centralizer"));
  return entry;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "sl2-trivial", "sl3-partition-2-1", "sl4-rect", "sp4-rect-frac", "sp6-denom",
      "sp4n-n1",     "sp4n-n2",           "e6-d5-2a1", "e7-a4a1"};
  return names;
}

CatalogEntry catalog_entry(const std::string& name, std::optional<std::uint64_t> seed) {
  if (name == "sl2-trivial") return from_partition(name, 2, {2});
  if (name == "sl3-partition-2-1") return from_partition(name, 3, {2, 1});
  if (name == "sl4-rect") return sl4_rect_entry();
  if (name == "sp4-rect-frac") return sp4_rect_frac_entry();
  if (name == "sp6-denom") return sp6_example();
  if (name == "sp4n-n1") return sp_almost_principal(1, seed);
  if (name == "sp4n-n2") return sp_almost_principal(2, seed);
  if (name == "e6-d5-2a1") return exceptional_pair(ExceptionalPair::E6, seed);
  if (name == "e7-a4a1") return exceptional_pair(ExceptionalPair::E7, seed);
  throw InputError("catalog_entry: unknown name " + name);
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace nilpair
