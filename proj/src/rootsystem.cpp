#include "nilpair/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nilpair/errors.hpp"

namespace nilpair {

namespace {

struct DynkinDiagram {
  std::vector<std::pair<int, int>> edges;
  std::vector<long> d;
};

DynkinDiagram diagram_of(char family, int n) {
  DynkinDiagram g;
  auto path = [&](int count) {
    for (int i = 0; i + 1 < count; ++i) g.edges.emplace_back(i, i + 1);
  };
  switch (family) {
    case 'A':
      if (n < 1) throw InputError("type A needs rank >= 1");
      path(n);
      g.d.assign(n, 1);
      break;
    case 'B':
      if (n < 2) throw InputError("type B needs rank >= 2");
      path(n);
      g.d.assign(n, 2);
      g.d[n - 1] = 1;
      break;
    case 'C':
      if (n < 2) throw InputError("type C needs rank >= 2");
      path(n);
      g.d.assign(n, 1);
      g.d[n - 1] = 2;
      break;
    case 'D':
      if (n < 3) throw InputError("type D needs rank >= 3");
      for (int i = 0; i + 1 < n - 1; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(n - 3, n - 1);
      g.d.assign(n, 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw InputError("type E needs rank 6, 7 or 8");
      g.edges = {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}};
      for (int i = 6; i <= n; ++i) g.edges.emplace_back(i - 2, i - 1);
      g.d.assign(n, 1);
      break;
    case 'F':
      if (n != 4) throw InputError("type F needs rank 4");
      path(4);
      g.d = {2, 2, 1, 1};
      break;
    case 'G':
      if (n != 2) throw InputError("type G needs rank 2");
      path(2);
      g.d = {1, 3};
      break;
    default:
      throw InputError(std::string("unknown type family '") + family + "'");
  }
  return g;
}

bool root_order(const RootVec& a, const RootVec& b) {
  int ha = RootSystem::height(a), hb = RootSystem::height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

int RootSystem::height(const RootVec& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

long RootSystem::pairing(const RootVec& beta, Index j) const {
  Rat s = 0;
  for (Index k = 0; k < rank_; ++k) s += Rat(beta[static_cast<size_t>(k)]) * cartan(j, k);
  if (!is_integer(s)) throw Error("non-integral root pairing");
  return static_cast<long>(s.get_num().get_si());
}

Rat RootSystem::inner(const RootVec& a, const RootVec& b) const {
  Rat s = 0;
  for (Index i = 0; i < rank_; ++i)
    for (Index j = 0; j < rank_; ++j)
      s += Rat(a[static_cast<size_t>(i)]) * gram(i, j) * Rat(b[static_cast<size_t>(j)]);
  return s;
}

long RootSystem::norm2(const RootVec& a) const {
  Rat s = inner(a, a);
  if (!is_integer(s)) throw Error("non-integral root norm");
  return static_cast<long>(s.get_num().get_si());
}

RootSystem RootSystem::simple(char family, int rank) {
  DynkinDiagram g = diagram_of(family, rank);
  RootSystem rs;
  rs.components = {{family, rank}};
  rs.rank_ = rank;
  rs.d = g.d;
  rs.gram = QMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) rs.gram(i, i) = 2 * g.d[static_cast<size_t>(i)];
  for (auto [a, b] : g.edges) {
    long v = -std::max(g.d[static_cast<size_t>(a)], g.d[static_cast<size_t>(b)]);
    rs.gram(a, b) = v;
    rs.gram(b, a) = v;
  }
  rs.cartan = QMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan(i, j) = rs.gram(i, j) / Rat(g.d[static_cast<size_t>(i)]);

  // Close the simple roots upward by height: beta + alpha_j is a root iff
  // p - <beta, alpha_j^vee> > 0, with p the depth of the string below beta.
  std::vector<RootVec> level;
  for (int i = 0; i < rank; ++i) {
    RootVec e(static_cast<size_t>(rank), 0);
    e[static_cast<size_t>(i)] = 1;
    level.push_back(e);
    rs.position.emplace(e, 0);
  }
  while (!level.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& beta : level) {
      for (int j = 0; j < rank; ++j) {
        RootVec up = beta;
        up[static_cast<size_t>(j)] += 1;
        if (rs.position.count(up)) continue;
        long p = 0;
        RootVec down = beta;
        while (true) {
          down[static_cast<size_t>(j)] -= 1;
          if (std::all_of(down.begin(), down.end(), [](int c) { return c == 0; })) break;
          if (!rs.position.count(down)) break;
          ++p;
        }
        if (p - rs.pairing(beta, j) > 0) {
          rs.position.emplace(up, 0);
          next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
  rs.positive.reserve(rs.position.size());
  for (const auto& [v, unused] : rs.position) rs.positive.push_back(v);
  std::sort(rs.positive.begin(), rs.positive.end(), root_order);
  for (Index i = 0; i < static_cast<Index>(rs.positive.size()); ++i)
    rs.position[rs.positive[static_cast<size_t>(i)]] = i;
  return rs;
}

RootSystem RootSystem::parse(const std::string& label) {
  std::vector<RootSystem> parts;
  std::string cur;
  auto flush = [&]() {
    std::string t;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw InputError("empty type label");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    for (size_t i = 1; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw InputError("bad type label: " + cur);
    if (t.size() < 2) throw InputError("type label needs a rank: " + cur);
    parts.push_back(simple(fam, std::stoi(t.substr(1))));
    cur.clear();
  };
  for (char c : label) {
    if (c == '+') flush();
    else cur += c;
  }
  flush();
  if (parts.size() == 1) return parts[0];

  RootSystem rs;
  Index total = 0;
  for (const auto& p : parts) total += p.rank();
  rs.rank_ = total;
  rs.gram = QMatrix::Zero(total, total);
  rs.cartan = QMatrix::Zero(total, total);
  Index off = 0;
  for (const auto& p : parts) {
    rs.components.push_back(p.components[0]);
    rs.d.insert(rs.d.end(), p.d.begin(), p.d.end());
    rs.gram.block(off, off, p.rank(), p.rank()) = p.gram;
    rs.cartan.block(off, off, p.rank(), p.rank()) = p.cartan;
    for (const RootVec& b : p.positive) {
      RootVec v(static_cast<size_t>(total), 0);
      std::copy(b.begin(), b.end(), v.begin() + off);
      rs.positive.push_back(v);
    }
    off += p.rank();
  }
  std::sort(rs.positive.begin(), rs.positive.end(), root_order);
  for (Index i = 0; i < static_cast<Index>(rs.positive.size()); ++i)
    rs.position[rs.positive[static_cast<size_t>(i)]] = i;
  return rs;
}

std::string RootSystem::label() const {
  std::string out;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) out += '+';
    out += components[i].first;
    out += std::to_string(components[i].second);
  }
  return out;
}

RootVec RootSystem::highest_root() const {
  if (components.size() != 1) throw InputError("highest root needs a single component");
  return positive.back();
}

std::string root_label(const RootVec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    int c = v[i];
    if (c == 0) continue;
    if (!out.empty()) out += (c > 0) ? "+" : "-";
    else if (c < 0) out += "-";
    int a = std::abs(c);
    if (a != 1) out += std::to_string(a);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

RootVec parse_root_label(const std::string& text, Index rank) {
  RootVec v(static_cast<size_t>(rank), 0);
  size_t i = 0;
  auto skip_space = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i < text.size() && text[i] == '0' && i + 1 == text.size()) return v;
  bool any = false;
  while (i < text.size()) {
    skip_space();
    int sign = 1;
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip_space();
    }
    int coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        coeff = coeff * 10 + (text[i++] - '0');
      if (i < text.size() && text[i] == '*') ++i;
    }
    skip_space();
    if (i >= text.size() || text[i] != 'a')
      throw InputError("bad root expression: " + text);
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw InputError("bad root expression: " + text);
    int idx = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      idx = idx * 10 + (text[i++] - '0');
    if (idx < 1 || idx > rank)
      throw InputError("simple root index out of range: a" + std::to_string(idx));
    v[static_cast<size_t>(idx - 1)] += sign * coeff;
    any = true;
    skip_space();
  }
  if (!any) throw InputError("empty root expression");
  return v;
}

namespace {

std::pair<char, int> classify_component(const RootSystem& rs,
                                        const std::vector<RootVec>& members, int r) {
  int P = static_cast<int>(members.size());
  long lo = rs.norm2(members.front()), hi = lo;
  int short_count = 0;
  for (const RootVec& m : members) {
    long n2 = rs.norm2(m);
    lo = std::min(lo, n2);
    hi = std::max(hi, n2);
  }
  for (const RootVec& m : members)
    if (rs.norm2(m) == lo) ++short_count;
  if (hi == lo) {
    if (P == r * (r + 1) / 2) return {'A', r};
    if (r >= 4 && P == r * (r - 1)) return {'D', r};
    if ((r == 6 && P == 36) || (r == 7 && P == 63) || (r == 8 && P == 120)) return {'E', r};
  } else if (hi == 2 * lo) {
    if (r == 4 && P == 24) return {'F', 4};
    if (P == r * r && short_count == r * (r - 1)) return {'C', r};
    if (P == r * r && short_count == r) return {'B', r};
  } else if (hi == 3 * lo && r == 2 && P == 6) {
    return {'G', 2};
  }
  throw Error("unrecognized component shape");
}

}  // namespace

SubsystemData subsystem_data(const RootSystem& rs, std::vector<RootVec> roots) {
  std::sort(roots.begin(), roots.end(), root_order);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::map<RootVec, Index> in_set;
  for (const RootVec& v : roots) {
    if (!rs.is_positive_root(v))
      throw InputError("subsystem member is not a positive root: " + root_label(v));
    in_set.emplace(v, 0);
  }
  for (const RootVec& a : roots)
    for (const RootVec& b : roots) {
      RootVec s(a.size());
      for (size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
      if (rs.is_positive_root(s) && !in_set.count(s))
        throw InputError("root subset is not closed under addition");
    }

  SubsystemData out;
  out.positive = roots;
  if (roots.empty()) return out;

  for (const RootVec& b : roots) {
    bool decomposable = false;
    for (const RootVec& a : roots) {
      RootVec diff(b.size());
      for (size_t k = 0; k < b.size(); ++k) diff[k] = b[k] - a[k];
      if (diff != b && in_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.simple.push_back(b);
  }

  int m = static_cast<int>(out.simple.size());
  out.component_of.assign(static_cast<size_t>(m), -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (out.component_of[static_cast<size_t>(i)] >= 0) continue;
    std::vector<int> stack = {i};
    out.component_of[static_cast<size_t>(i)] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < m; ++v)
        if (out.component_of[static_cast<size_t>(v)] < 0 &&
            rs.inner(out.simple[static_cast<size_t>(u)], out.simple[static_cast<size_t>(v)]) != 0) {
          out.component_of[static_cast<size_t>(v)] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  // Coordinates of every member in the indecomposable basis give subsystem
  // heights and the component assignment of non-simple members.
  QMatrix basis(rs.rank(), m);
  for (int j = 0; j < m; ++j)
    for (Index i = 0; i < rs.rank(); ++i)
      basis(i, j) = out.simple[static_cast<size_t>(j)][static_cast<size_t>(i)];
  std::vector<std::vector<RootVec>> comp_members(static_cast<size_t>(ncomp));
  std::vector<std::vector<int>> comp_heights(static_cast<size_t>(ncomp));
  for (const RootVec& b : roots) {
    QVector target(rs.rank());
    for (Index i = 0; i < rs.rank(); ++i) target(i) = b[static_cast<size_t>(i)];
    auto sol = solve_affine(basis, target);
    if (!sol || sol->kern.dim() != 0)
      throw Error("subsystem member has no unique indecomposable expansion");
    int ht = 0, comp = -1;
    for (int j = 0; j < m; ++j) {
      Rat c = sol->particular(j);
      if (!is_integer(c) || c < 0) throw Error("non-integral subsystem height");
      int ci = static_cast<int>(c.get_num().get_si());
      ht += ci;
      if (ci != 0) {
        if (comp < 0) comp = out.component_of[static_cast<size_t>(j)];
        else if (comp != out.component_of[static_cast<size_t>(j)])
          throw Error("subsystem member straddles components");
      }
    }
    comp_members[static_cast<size_t>(comp)].push_back(b);
    comp_heights[static_cast<size_t>(comp)].push_back(ht);
  }

  for (int c = 0; c < ncomp; ++c) {
    const auto& hts = comp_heights[static_cast<size_t>(c)];
    int rank_c = static_cast<int>(std::count(hts.begin(), hts.end(), 1));
    int max_ht = *std::max_element(hts.begin(), hts.end());
    // Exponents are the dual partition of the height multiset.
    std::vector<int> count_at(static_cast<size_t>(max_ht + 1), 0);
    for (int h : hts) ++count_at[static_cast<size_t>(h)];
    std::vector<int> exps;
    for (int mlt = 1; mlt <= rank_c; ++mlt) {
      int e = 0;
      for (int h = 1; h <= max_ht; ++h)
        if (count_at[static_cast<size_t>(h)] >= mlt) ++e;
      exps.push_back(e);
    }
    out.exponents.insert(out.exponents.end(), exps.begin(), exps.end());
    out.coxeter_max = std::max(out.coxeter_max, max_ht + 1);
    out.component_types.push_back(
        classify_component(rs, comp_members[static_cast<size_t>(c)], rank_c));
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  std::sort(out.component_types.begin(), out.component_types.end(),
            [](const std::pair<char, int>& a, const std::pair<char, int>& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });

  QMatrix sub_cartan(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sub_cartan(i, j) = 2 * rs.inner(out.simple[static_cast<size_t>(i)],
                                      out.simple[static_cast<size_t>(j)]) /
                         rs.inner(out.simple[static_cast<size_t>(i)],
                                  out.simple[static_cast<size_t>(i)]);
  Rat dt = det(sub_cartan);
  if (!is_integer(dt) || dt <= 0) throw Error("subsystem Cartan determinant is not a positive integer");
  out.cartan_det = static_cast<long>(dt.get_num().get_si());
  return out;
}

SubsystemData levi_data(const RootSystem& rs, const std::vector<Index>& subset) {
  std::vector<bool> in(static_cast<size_t>(rs.rank()), false);
  for (Index j : subset) {
    if (j < 0 || j >= rs.rank()) throw InputError("simple root index out of range");
    in[static_cast<size_t>(j)] = true;
  }
  std::vector<RootVec> roots;
  for (const RootVec& b : rs.positive) {
    bool ok = true;
    for (Index i = 0; i < rs.rank() && ok; ++i)
      if (b[static_cast<size_t>(i)] != 0 && !in[static_cast<size_t>(i)]) ok = false;
    if (ok) roots.push_back(b);
  }
  return subsystem_data(rs, roots);
}

Rat bound_d(const RootSystem& rs, const std::vector<Index>& subset, Index mu) {
  if (mu < 0 || mu >= rs.rank()) throw InputError("simple root index out of range");
  for (Index j : subset)
    if (j == mu) throw InputError("mu must lie outside the Levi subset");
  SubsystemData levi = levi_data(rs, subset);
  QVector nu = QVector::Zero(rs.rank());
  for (const RootVec& b : levi.positive) {
    Rat half_norm = Rat(rs.norm2(b)) / 2;
    for (Index i = 0; i < rs.rank(); ++i) nu(i) += Rat(b[static_cast<size_t>(i)]) / half_norm;
  }
  Rat s = 0;
  for (Index i = 0; i < rs.rank(); ++i) s += rs.gram(mu, i) * nu(i);
  return 2 * s;
}

Rat bound_d_min(const RootSystem& rs, const std::vector<Index>& subset) {
  std::vector<bool> in(static_cast<size_t>(rs.rank()), false);
  for (Index j : subset) in[static_cast<size_t>(j)] = true;
  bool found = false;
  Rat best = 0;
  for (Index mu = 0; mu < rs.rank(); ++mu) {
    if (in[static_cast<size_t>(mu)]) continue;
    Rat v = bound_d(rs, subset, mu);
    if (!found || v < best) best = v;
    found = true;
  }
  return best;
}

}  // namespace nilpair
