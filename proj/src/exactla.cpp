#include "nilpair/exactla.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nilpair {

std::string format_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view s) {
  if (s.empty()) throw InputError("empty rational literal");
  std::string text(s);
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw InputError("bad rational literal: " + text);
  }
  try {
    Rat r(text);
    if (r.get_den() == 0) throw InputError("zero denominator: " + text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal: " + text);
  }
}

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

RrefResult rref(QMatrix m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) m.row(sel).swap(m.row(r));
    const Rat inv = Rat(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Index rank(const QMatrix& m) { return static_cast<Index>(rref(m).pivots.size()); }

Rat det(QMatrix m) {
  if (m.rows() != m.cols()) throw DimensionError("det needs a square matrix");
  const Index n = m.rows();
  Rat result = 1;
  for (Index c = 0; c < n; ++c) {
    Index sel = -1;
    for (Index i = c; i < n; ++i) {
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return Rat(0);
    if (sel != c) {
      m.row(sel).swap(m.row(c));
      result = -result;
    }
    result *= m(c, c);
    const Rat inv = Rat(1) / m(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rat f = m(i, c) * inv;
      for (Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace Subspace::zero(Index ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = QMatrix(0, ambient);
  return s;
}

Subspace Subspace::full(Index ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = QMatrix::Identity(ambient, ambient);
  return s;
}

Subspace Subspace::span_of_rows(const QMatrix& rows) {
  RrefResult r = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  const Index d = static_cast<Index>(r.pivots.size());
  s.basis_ = r.mat.topRows(d);
  return s;
}

Subspace Subspace::span_of(const std::vector<QVector>& vecs, Index ambient) {
  QMatrix rows(static_cast<Index>(vecs.size()), ambient);
  for (Index i = 0; i < rows.rows(); ++i) {
    if (vecs[static_cast<size_t>(i)].size() != ambient)
      throw DimensionError("span_of: vector of wrong ambient dimension");
    rows.row(i) = vecs[static_cast<size_t>(i)].transpose();
  }
  return span_of_rows(rows);
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) throw DimensionError("contains: ambient mismatch");
  QVector w = v;
  for (Index i = 0; i < basis_.rows(); ++i) {
    Index p = 0;
    while (p < ambient_ && basis_(i, p) == 0) ++p;
    if (p == ambient_) continue;
    if (w(p) != 0) w -= w(p) * basis_.row(i).transpose();
  }
  for (Index j = 0; j < ambient_; ++j)
    if (w(j) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("contains: ambient mismatch");
  for (Index i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("sum: ambient mismatch");
  QMatrix rows(a.dim() + b.dim(), a.ambient());
  rows.topRows(a.dim()) = a.basis();
  rows.bottomRows(b.dim()) = b.basis();
  return Subspace::span_of_rows(rows);
}

Subspace kernel(const QMatrix& m) {
  RrefResult r = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Index p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<QVector> basis;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    QVector v = QVector::Zero(cols);
    v(f) = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i)
      v(r.pivots[i]) = -r.mat(static_cast<Index>(i), f);
    basis.push_back(std::move(v));
  }
  return Subspace::span_of(basis, cols);
}

Subspace image(const QMatrix& m) { return Subspace::span_of_rows(m.transpose()); }

Subspace apply(const QMatrix& op, const Subspace& s) {
  if (op.cols() != s.ambient()) throw DimensionError("apply: ambient mismatch");
  QMatrix rows = s.basis() * op.transpose();
  return Subspace::span_of_rows(rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("intersect: ambient mismatch");
  // (A ^ B) = (A* + B*)* with S* the annihilator under the standard pairing.
  Subspace ann = sum(kernel(a.basis()), kernel(b.basis()));
  return kernel(ann.basis());
}

Subspace orth_complement(const Subspace& a, const QMatrix& form) {
  if (form.rows() != form.cols()) throw DimensionError("orth_complement: form not square");
  if (form.rows() != a.ambient()) throw DimensionError("orth_complement: ambient mismatch");
  if (form != QMatrix(form.transpose())) throw InputError("orth_complement: form not symmetric");
  return kernel(QMatrix(a.basis() * form));
}

std::optional<AffineSolution> solve_affine(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.size()) throw DimensionError("solve_affine: shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  RrefResult r = rref(std::move(aug));
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;  // pivot in the constant column
  }
  QVector x = QVector::Zero(a.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i)
    x(r.pivots[i]) = r.mat(static_cast<Index>(i), a.cols());
  return AffineSolution{std::move(x), kernel(a)};
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

static void poly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
  poly_trim(d);
  return d;
}

Rat poly_eval(const QPoly& p, const Rat& x) {
  Rat acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

static QPoly poly_monic(QPoly p) {
  poly_trim(p);
  if (p.empty()) return p;
  const Rat lead = p.back();
  for (Rat& c : p) c /= lead;
  return p;
}

static QPoly poly_mod(QPoly a, const QPoly& b) {
  // remainder of a by monic b
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  a = poly_monic(std::move(a));
  b = poly_monic(std::move(b));
  while (!b.empty()) {
    QPoly r = poly_monic(poly_mod(std::move(a), b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

QPoly minimal_polynomial(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("minimal_polynomial: not square");
  const Index n = m.rows();
  if (n == 0) return QPoly{Rat(1)};
  const Index flat = n * n;

  struct Row {
    QVector vec;             // residual of the flattened power
    std::vector<Rat> coef;   // combination of powers it came from
    Index pivot;
  };
  std::vector<Row> rows;

  QMatrix power = QMatrix::Identity(n, n);
  for (Index k = 0;; ++k) {
    QVector v(flat);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) v(i * n + j) = power(i, j);
    std::vector<Rat> coef(static_cast<size_t>(k) + 1, Rat(0));
    coef[static_cast<size_t>(k)] = 1;

    for (const Row& row : rows) {
      if (v(row.pivot) == 0) continue;
      const Rat f = v(row.pivot);
      v -= f * row.vec;
      for (size_t i = 0; i < row.coef.size(); ++i) coef[i] -= f * row.coef[i];
    }
    Index pivot = -1;
    for (Index j = 0; j < flat; ++j) {
      if (v(j) != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) {
      QPoly p(coef.begin(), coef.end());
      poly_trim(p);
      return poly_monic(std::move(p));
    }
    const Rat inv = Rat(1) / v(pivot);
    v *= inv;
    for (Rat& c : coef) c *= inv;
    rows.push_back(Row{std::move(v), std::move(coef), pivot});
    if (k == n) throw Error("minimal polynomial search exceeded the dimension bound");
    power = QMatrix(power * m);
  }
}

bool minpoly_is_squarefree(const QMatrix& m) {
  QPoly p = minimal_polynomial(m);
  if (p.size() <= 1) return true;
  QPoly g = poly_gcd(p, poly_derivative(p));
  return g.size() == 1;
}

// ---------------------------------------------------------------------------
// Integer factorization (trial division + Pollard rho)
// ---------------------------------------------------------------------------

static mpz_class pollard_rho(const mpz_class& n) {
  // n odd composite, not a prime power of interest; returns a proper factor.
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle; retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

std::vector<mpz_class> prime_factors(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0) throw InputError("prime_factors: zero");
  std::vector<mpz_class> out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      out.emplace_back(p);
      n /= p;
    }
  }
  long q = 41;
  while (n > 1 && mpz_class(q) * q <= n && q < 100000) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(q))) {
      out.emplace_back(q);
      n /= q;
    }
    q += 2;
  }
  // What is left is 1, a prime, or a composite with no small factors.
  std::vector<mpz_class> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    mpz_class v = stack.back();
    stack.pop_back();
    if (v == 1) continue;
    if (mpz_probab_prime_p(v.get_mpz_t(), 40)) {
      out.push_back(v);
      continue;
    }
    mpz_class f = pollard_rho(v);
    stack.push_back(f);
    stack.push_back(v / f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> primes = prime_factors(n);
  std::map<mpz_class, int> mult;
  for (const mpz_class& p : primes) mult[p]++;
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : mult) {
    const size_t base = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
    if (out.size() > 500000) throw Error("divisor enumeration too large");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> rational_roots(const QPoly& p_in) {
  QPoly p = p_in;
  poly_trim(p);
  if (p.empty()) throw InputError("rational_roots: zero polynomial");
  std::vector<Rat> roots;
  size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
  }
  if (p.size() <= 1) return roots;

  // scale to a primitive integer polynomial
  mpz_class denlcm = 1;
  for (const Rat& c : p) mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const Rat& c : p) {
    Rat s = c * Rat(denlcm);
    z.push_back(s.get_num());
  }
  mpz_class content = 0;
  for (const mpz_class& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (mpz_class& c : z) c /= content;

  const std::vector<mpz_class> nums = divisors(z.front());
  const std::vector<mpz_class> dens = divisors(z.back());
  for (const mpz_class& den : dens) {
    for (const mpz_class& num : nums) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Rat cand(sign * num, den);
        cand.canonicalize();
        if (poly_eval(p, cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Joint eigenspaces
// ---------------------------------------------------------------------------

namespace {

// Matrix of op restricted to an invariant subspace, in the subspace's basis.
QMatrix restrict_operator(const QMatrix& op, const Subspace& s) {
  QMatrix images = s.basis() * op.transpose();  // rows are images of basis rows
  // Pivot columns of an rref basis carry an identity block, so coefficients
  // can be read off directly.
  std::vector<Index> pivots;
  for (Index i = 0; i < s.dim(); ++i) {
    Index p = 0;
    while (p < s.ambient() && s.basis()(i, p) == 0) ++p;
    pivots.push_back(p);
  }
  // Column convention: column j of the result holds the coordinates of the
  // image of basis row j.
  QMatrix r(s.dim(), s.dim());
  for (Index i = 0; i < s.dim(); ++i)
    for (Index j = 0; j < s.dim(); ++j) r(i, j) = images(j, pivots[static_cast<size_t>(i)]);
  if (QMatrix(r.transpose() * s.basis()) != images)
    throw Error("restrict_operator: subspace is not invariant");
  return r;
}

}  // namespace

std::vector<std::pair<std::vector<Rat>, Subspace>> joint_eigenspaces(
    const std::vector<QMatrix>& ops) {
  if (ops.empty()) throw InputError("joint_eigenspaces: no operators");
  const Index n = ops.front().rows();
  for (const QMatrix& m : ops) {
    if (m.rows() != m.cols() || m.rows() != n)
      throw DimensionError("joint_eigenspaces: operators must be square of equal size");
  }
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i + 1; j < ops.size(); ++j)
      if (QMatrix(ops[i] * ops[j]) != QMatrix(ops[j] * ops[i]))
        throw InputError("joint_eigenspaces: operators do not commute");

  std::vector<std::pair<std::vector<Rat>, Subspace>> blocks;
  blocks.emplace_back(std::vector<Rat>{}, Subspace::full(n));

  for (const QMatrix& op : ops) {
    std::vector<std::pair<std::vector<Rat>, Subspace>> next;
    for (const auto& [evals, space] : blocks) {
      if (space.dim() == 0) continue;
      const QMatrix r = restrict_operator(op, space);
      QPoly mp = minimal_polynomial(r);
      if (poly_gcd(mp, poly_derivative(mp)).size() != 1)
        throw SpectrumError("not semisimple");
      std::vector<Rat> roots = rational_roots(mp);
      if (roots.size() + 1 != mp.size()) throw SpectrumError("irrational spectrum");
      Index total = 0;
      for (const Rat& lambda : roots) {
        QMatrix shifted = r;
        for (Index i = 0; i < r.rows(); ++i) shifted(i, i) -= lambda;
        Subspace eig = kernel(shifted);
        if (eig.dim() == 0) continue;
        total += eig.dim();
        std::vector<Rat> tuple = evals;
        tuple.push_back(lambda);
        next.emplace_back(std::move(tuple),
                          Subspace::span_of_rows(QMatrix(eig.basis() * space.basis())));
      }
      if (total != space.dim()) throw SpectrumError("irrational spectrum");
    }
    blocks = std::move(next);
  }

  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(),
                                        b.first.end());
  });
  return blocks;
}

}  // namespace nilpair
