#include "nilpair/report.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "nilpair/classify.hpp"

namespace nilpair {

namespace {

using nlohmann::json;

std::vector<Rat> to_coords(const QVector& v) {
  std::vector<Rat> out(static_cast<size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) out[static_cast<size_t>(i)] = v[i];
  return out;
}

QVector from_coords(const std::vector<Rat>& v) {
  QVector out(static_cast<Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out[static_cast<Index>(i)] = v[i];
  return out;
}

std::string join_rats(const std::vector<Rat>& v, const char* sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += format_rat(v[i]);
  }
  return out;
}

struct CheckList {
  std::vector<ReportCheck> checks;

  void add(std::string name, bool verdict, bool hard) {
    checks.push_back({std::move(name), verdict ? "true" : "false", hard});
  }
  void skip(std::string name, const std::string& why) {
    checks.push_back({std::move(name), "skipped: " + why, false});
  }
};

// The full check battery for one pair. A check runs hard when the pair
// satisfies the hypotheses under which it must hold, soft when computed
// outside that scope, and is skipped when its inputs do not apply.
ReportDocument run_pipeline(const RootedAlgebra& ra, std::string algebra_desc,
                            std::string entry_name, std::uint64_t seed,
                            const NilpotentPair& pair, const Characteristic& ch,
                            const BiGrading& bg, const Subspace& z,
                            std::vector<ExpectedValue> expected) {
  const LieAlgebraQ& alg = ra.alg;
  ReportDocument doc;
  doc.algebra = std::move(algebra_desc);
  doc.entry = std::move(entry_name);
  doc.seed = seed;
  doc.e1 = to_coords(pair.e1);
  doc.e2 = to_coords(pair.e2);
  doc.h1 = to_coords(ch.h1);
  doc.h2 = to_coords(ch.h2);

  const bool in_cartan = ra.in_cartan_span(ch.h1) && ra.in_cartan_span(ch.h2);
  if (in_cartan) {
    doc.h1_labels = ra.simple_root_values(ch.h1);
    doc.h2_labels = ra.simple_root_values(ch.h2);
  }

  ClassificationReport rep = classification_report(pair, bg, ra.rank());
  doc.dim_z_e = rep.dim_z_e;
  doc.dim_z_h = rep.dim_z_h;
  doc.rank = rep.rank;
  doc.trivial = rep.trivial;
  doc.wonderful = rep.wonderful;
  doc.integral = rep.integral;
  doc.even = rep.even;
  doc.almost_even = rep.almost_even;
  doc.principal = rep.principal;
  doc.almost_principal = rep.almost_principal;
  doc.rectangular = rep.rectangular;

  for (const auto& cell : bg.cells) {
    GridCell gc;
    gc.p = cell.p;
    gc.q = cell.q;
    gc.dim = cell.space.dim();
    gc.star = intersect(z, cell.space).dim() > 0;
    doc.grid.push_back(std::move(gc));
  }

  CheckList cl;
  cl.add("characteristic verified", verify_characteristic(alg, pair, ch).ok(), true);
  cl.add("killing duality", killing_duality_check(alg, pair), true);
  cl.add("denominator bound", denominator_check(ra, bg).ok, true);

  if (rep.integral) {
    XarakVerdict xv = xarak_check(pair, bg);
    cl.add("limit criterion (xarak)", xv.lhs && xv.rhs, true);
  } else {
    cl.skip("limit criterion (xarak)", "requires an integral pair");
  }

  if (rep.wonderful && rep.integral) {
    cl.add("negative quadrant vanishing (pusto3)", pusto3_check(pair, bg), true);
  } else {
    cl.skip("negative quadrant vanishing (pusto3)", "requires a wonderful integral pair");
  }

  if (rep.wonderful) {
    const bool hard = rep.integral;
    cl.add("limits equal graded centralizers (wond1)", wond1_check(pair, bg).ok(), hard);
    cl.add("surjectivity ladders (wond2)", wond2_check(pair, bg).ok(), hard);
  } else {
    cl.skip("limits equal graded centralizers (wond1)", "requires a wonderful pair");
    cl.skip("surjectivity ladders (wond2)", "requires a wonderful pair");
  }

  UsefulCheck u1 = useful_check(pair, bg, Side::e1);
  UsefulCheck u2 = useful_check(pair, bg, Side::e2);
  cl.add("graded dichotomy e1 (useful)", !u1.hypothesis || u1.surjective, true);
  cl.add("graded dichotomy e2 (useful)", !u2.hypothesis || u2.surjective, true);

  const bool rich_hard = rep.wonderful && rep.integral;
  cl.add("richardson in levi e1",
         richardson_check(pair, bg, Side::e1, RichardsonScope::levi), rich_hard);
  cl.add("richardson in levi e2",
         richardson_check(pair, bg, Side::e2, RichardsonScope::levi), rich_hard);
  cl.add("richardson in parabolic e1",
         richardson_check(pair, bg, Side::e1, RichardsonScope::parabolic), false);
  cl.add("richardson in parabolic e2",
         richardson_check(pair, bg, Side::e2, RichardsonScope::parabolic), false);

  if (rep.rectangular) {
    const bool members =
        nilpotent_is_even(alg, pair.e1) && nilpotent_is_even(alg, pair.e2);
    cl.add("member evenness matches the pair", rep.even == members, true);
  } else {
    cl.skip("member evenness matches the pair", "requires a rectangular pair");
  }

  if (rep.almost_even) {
    cl.add("almost even excess cell", almost_even_structure(pair, bg, rep).class_ok, true);
  } else {
    cl.skip("almost even excess cell", "requires an almost even pair");
  }

  bool labels_integral = in_cartan;
  for (const Rat& v : doc.h1_labels) labels_integral = labels_integral && is_integer(v);
  for (const Rat& v : doc.h2_labels) labels_integral = labels_integral && is_integer(v);
  const bool pr_ish = rep.principal || rep.almost_principal;
  if (labels_integral) {
    LabelReport lr = labels_report(ra, ch, std::nullopt);
    cl.add("label constraints (i)-(iii)", lr.labels_i && lr.labels_ii && lr.labels_iii, true);
    if (pr_ish) {
      cl.add("principal label refinement", lr.pr_i && lr.pr_ii, true);
      cl.add("coxeter label bound", lr.cox_bound, false);
    } else {
      cl.skip("principal label refinement", "requires a principal or almost principal pair");
      cl.skip("coxeter label bound", "requires a principal or almost principal pair");
    }
  } else {
    const std::string why = in_cartan ? "labels are not integral"
                                      : "characteristic leaves the standard Cartan";
    cl.skip("label constraints (i)-(iii)", why);
    cl.skip("principal label refinement", why);
    cl.skip("coxeter label bound", why);
  }
  if (in_cartan && pr_ish) {
    cl.add("limit exponents", exponents_check(ra, pair, bg).ok(), true);
  } else {
    cl.skip("limit exponents", in_cartan ? "requires a principal or almost principal pair"
                                         : "characteristic leaves the standard Cartan");
  }

  doc.checks = std::move(cl.checks);
  doc.expected = std::move(expected);
  doc.invariants_ok = true;
  for (const auto& c : doc.checks) {
    if (c.hard && c.verdict == "false") {
      doc.invariants_ok = false;
      doc.failure = c.name;
      break;
    }
  }
  return doc;
}

json rat_array(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(format_rat(r));
  return a;
}

std::vector<Rat> rats_from(const json& a) {
  std::vector<Rat> out;
  for (const auto& item : a) out.push_back(parse_rat(item.get<std::string>()));
  return out;
}

std::string pad_left(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

AlgebraHandle build_algebra(const std::string& type, int rank) {
  std::string label = type;
  if (rank >= 0) {
    if (type.size() != 1 || !std::isalpha(static_cast<unsigned char>(type[0])))
      throw InputError("build_algebra: an explicit rank needs a bare family letter, got " + type);
    label = type + std::to_string(rank);
  }
  RootSystem rs = RootSystem::parse(label);
  AlgebraHandle handle;
  handle.descriptor = rs.label();
  if (rs.components.size() == 1) {
    const char family = rs.components[0].first;
    const int r = rs.components[0].second;
    std::shared_ptr<MatrixAlgebra> m;
    if (family == 'A') m = std::make_shared<MatrixAlgebra>(matrix_sl(r + 1));
    if (family == 'C') m = std::make_shared<MatrixAlgebra>(matrix_sp(2 * r));
    if (m) {
      handle.matrix = m;
      handle.algebra = std::shared_ptr<const RootedAlgebra>(m, &m->rooted);
      return handle;
    }
  }
  handle.algebra = std::make_shared<const RootedAlgebra>(chevalley_algebra(rs));
  return handle;
}

QVector parse_element(const AlgebraHandle& handle, const std::string& text) {
  const RootedAlgebra& ra = handle.rooted();
  const LieAlgebraQ& alg = ra.alg;

  // Split into signed terms at bracket depth zero.
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0;
  int sign = 1;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == '[') ++depth;
    if (c == ']') {
      --depth;
      if (depth < 0) throw InputError("parse_element: unbalanced ']' in " + text);
    }
    if ((c == '+' || c == '-') && depth == 0) {
      if (cur.empty()) {
        if (c == '-') sign = -sign;
        continue;
      }
      terms.emplace_back(sign, cur);
      cur.clear();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw InputError("parse_element: unbalanced '[' in " + text);
  if (!cur.empty()) terms.emplace_back(sign, cur);
  if (terms.empty()) throw InputError("parse_element: empty element text");

  if (terms.size() == 1 && terms[0].second == "0") return alg.zero();

  QVector coords = alg.zero();
  QMatrix units;
  bool used_coords = false;
  bool used_units = false;

  for (const auto& [tsign, body] : terms) {
    size_t at = body.find_first_of("hefv");
    if (at == std::string::npos)
      throw InputError("parse_element: term '" + body + "' has no basis atom");
    std::string ctext = body.substr(0, at);
    if (!ctext.empty() && ctext.back() == '*') ctext.pop_back();
    Rat coeff = ctext.empty() ? Rat(1) : parse_rat(ctext);
    coeff *= tsign;
    const std::string atom = body.substr(at);

    if (atom[0] == 'v') {
      if (!handle.matrix)
        throw InputError("parse_element: matrix units need a classical realization");
      if (atom.size() != 3 || !std::isdigit(static_cast<unsigned char>(atom[1])) ||
          !std::isdigit(static_cast<unsigned char>(atom[2])))
        throw InputError("parse_element: matrix unit atom must look like v23, got " + atom);
      const Index i = atom[1] - '0';
      const Index j = atom[2] - '0';
      const Index n = handle.matrix->msize;
      if (i < 1 || j < 1 || i > n || j > n)
        throw InputError("parse_element: matrix unit " + atom + " outside size " +
                         std::to_string(n));
      if (units.size() == 0) units = QMatrix::Zero(n, n);
      units(i - 1, j - 1) += coeff;
      used_units = true;
      continue;
    }

    used_coords = true;
    Index idx = -1;
    if (atom[0] == 'h') {
      Index k = 1;
      if (atom.size() > 1) {
        try {
          size_t eaten = 0;
          k = static_cast<Index>(std::stol(atom.substr(1), &eaten));
          if (eaten + 1 != atom.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw InputError("parse_element: bad Cartan atom " + atom);
        }
      } else if (ra.rank() != 1) {
        throw InputError("parse_element: bare 'h' only in rank one");
      }
      if (k < 1 || k > ra.rank())
        throw InputError("parse_element: Cartan index out of range in " + atom);
      idx = ra.h_index(k - 1);
    } else {
      RootVec root;
      if (atom.size() == 1) {
        if (ra.rank() != 1)
          throw InputError("parse_element: bare '" + atom + "' only in rank one");
        root = {1};
      } else {
        if (atom[1] != '[' || atom.back() != ']')
          throw InputError("parse_element: expected " + atom.substr(0, 1) + "[...], got " + atom);
        root = parse_root_label(atom.substr(2, atom.size() - 3), ra.rank());
      }
      if (atom[0] == 'f')
        for (int& c : root) c = -c;
      idx = ra.root_vector_index(root);
    }
    coords[idx] += coeff;
  }

  if (used_units && used_coords)
    throw InputError("parse_element: matrix units cannot be mixed with root coordinates");
  if (used_units) return handle.matrix->from_matrix(units);
  return coords;
}

std::vector<Rat> parse_labels(const std::string& text, Index rank) {
  std::vector<Rat> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) throw InputError("parse_labels: empty entry in " + text);
    out.push_back(parse_rat(cur.substr(a, b - a + 1)));
  }
  if (static_cast<Index>(out.size()) != rank)
    throw InputError("parse_labels: expected " + std::to_string(rank) + " labels, got " +
                     std::to_string(out.size()));
  return out;
}

GridRender render_grid(const std::vector<GridCell>& input) {
  GridRender g;
  std::set<Rat> pset, qset;
  std::map<std::pair<Rat, Rat>, std::pair<Index, bool>> cells;
  for (const auto& cell : input) {
    pset.insert(cell.p);
    qset.insert(cell.q);
    cells[{cell.p, cell.q}] = {cell.dim, cell.star};
    g.total += cell.dim;
    if (cell.star) ++g.stars;
  }
  g.ps.assign(pset.begin(), pset.end());
  g.qs.assign(qset.rbegin(), qset.rend());

  auto cell_text = [&](const Rat& p, const Rat& q) -> std::string {
    auto it = cells.find({p, q});
    if (it == cells.end()) return "";
    return std::to_string(it->second.first) + (it->second.second ? "*" : "");
  };

  const std::string corner = "q\\p";
  size_t w0 = corner.size();
  for (const Rat& q : g.qs) w0 = std::max(w0, format_rat(q).size());
  std::vector<size_t> widths(g.ps.size());
  for (size_t i = 0; i < g.ps.size(); ++i) {
    widths[i] = format_rat(g.ps[i]).size();
    for (const Rat& q : g.qs) widths[i] = std::max(widths[i], cell_text(g.ps[i], q).size());
  }

  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };

  std::string text = pad_left(corner, w0) + " |";
  for (size_t i = 0; i < g.ps.size(); ++i)
    text += " " + pad_left(format_rat(g.ps[i]), widths[i]);
  text += '\n';
  std::string sep(w0 + 1, '-');
  sep += '+';
  for (size_t i = 0; i < g.ps.size(); ++i) sep += std::string(widths[i] + 1, '-');
  text += sep + '\n';
  for (const Rat& q : g.qs) {
    std::string line = pad_left(format_rat(q), w0) + " |";
    for (size_t i = 0; i < g.ps.size(); ++i)
      line += " " + pad_left(cell_text(g.ps[i], q), widths[i]);
    text += rstrip(line) + '\n';
  }
  g.text = std::move(text);
  return g;
}

GridRender render_grid(const BiGrading& bg, const Subspace* mark) {
  std::vector<GridCell> cells;
  for (const auto& cell : bg.cells) {
    GridCell gc;
    gc.p = cell.p;
    gc.q = cell.q;
    gc.dim = cell.space.dim();
    gc.star = mark != nullptr && intersect(*mark, cell.space).dim() > 0;
    cells.push_back(std::move(gc));
  }
  return render_grid(cells);
}

ReportDocument analyze_entry(const CatalogEntry& entry) {
  return run_pipeline(*entry.algebra, entry.algebra->rs.label(), entry.name, entry.seed,
                      entry.pair, entry.ch, entry.grading, entry.z, entry.expected);
}

ReportDocument analyze_pair(const AlgebraHandle& handle, const NilpotentPair& pair) {
  const RootedAlgebra& ra = handle.rooted();
  if (!(QVector(ra.alg.bracket(pair.e1, pair.e2)) == ra.alg.zero()))
    throw InputError("analyze_pair: the two elements do not commute");
  Characteristic ch = solve_characteristic(ra.alg, pair);
  BiGrading bg = bigrade(ra.alg, ch);
  Subspace z = centralizer(ra.alg, {pair.e1, pair.e2});
  return run_pipeline(ra, handle.descriptor, "", 0, pair, ch, bg, z, {});
}

std::string to_text(const ReportDocument& doc, const RootedAlgebra* ra) {
  std::ostringstream out;
  out << "algebra: " << doc.algebra;
  if (!doc.entry.empty()) out << "\nentry: " << doc.entry;
  if (doc.seed != 0) out << "\nseed: " << doc.seed;
  out << "\nrank: " << doc.rank << "  dim z(e): " << doc.dim_z_e
      << "  dim z(h): " << doc.dim_z_h << "\n";

  std::string flags;
  auto flag = [&](bool v, const char* n) {
    if (v) flags += std::string(flags.empty() ? "" : " ") + n;
  };
  flag(doc.trivial, "trivial");
  flag(doc.wonderful, "wonderful");
  flag(doc.integral, "integral");
  flag(doc.even, "even");
  flag(doc.almost_even, "almost-even");
  flag(doc.principal, "principal");
  flag(doc.almost_principal, "almost-principal");
  flag(doc.rectangular, "rectangular");
  out << "flags: " << (flags.empty() ? "none" : flags) << "\n";

  if (ra != nullptr) {
    out << "e1 = " << ra->alg.format(from_coords(doc.e1)) << "\n";
    out << "e2 = " << ra->alg.format(from_coords(doc.e2)) << "\n";
    out << "h1 = " << ra->alg.format(from_coords(doc.h1)) << "\n";
    out << "h2 = " << ra->alg.format(from_coords(doc.h2)) << "\n";
  }
  if (!doc.h1_labels.empty()) {
    out << "h1 labels: " << join_rats(doc.h1_labels, ", ") << "\n";
    out << "h2 labels: " << join_rats(doc.h2_labels, ", ") << "\n";
  }

  std::vector<GridCell> starred;
  for (const auto& c : doc.grid)
    if (c.star) starred.push_back(c);
  if (!starred.empty()) {
    out << "z(e) weights:";
    for (const auto& c : starred)
      out << " (" << format_rat(c.p) << "," << format_rat(c.q) << ")";
    out << "\n";
  }

  out << "checks:\n";
  for (const auto& c : doc.checks) {
    out << "  " << (c.hard ? "[hard] " : "       ") << c.name << ": " << c.verdict << "\n";
  }
  if (!doc.expected.empty()) {
    out << "expected values:\n";
    for (const auto& e : doc.expected)
      out << "  " << (e.pinned ? "pinned " : "derived") << "  " << e.quantity << " = "
          << e.value << "\n";
  }
  out << "result: "
      << (doc.invariants_ok ? "PASS" : "FAIL (" + doc.failure + ")") << "\n";
  return out.str();
}

std::string to_json_text(const ReportDocument& doc) {
  json j;
  j["schema"] = doc.schema;
  j["algebra"] = doc.algebra;
  j["entry"] = doc.entry;
  j["seed"] = doc.seed;
  j["e1"] = rat_array(doc.e1);
  j["e2"] = rat_array(doc.e2);
  j["h1"] = rat_array(doc.h1);
  j["h2"] = rat_array(doc.h2);
  j["h1_labels"] = rat_array(doc.h1_labels);
  j["h2_labels"] = rat_array(doc.h2_labels);
  j["dim_z_e"] = doc.dim_z_e;
  j["dim_z_h"] = doc.dim_z_h;
  j["rank"] = doc.rank;
  j["flags"] = {{"trivial", doc.trivial},
                {"wonderful", doc.wonderful},
                {"integral", doc.integral},
                {"even", doc.even},
                {"almost_even", doc.almost_even},
                {"principal", doc.principal},
                {"almost_principal", doc.almost_principal},
                {"rectangular", doc.rectangular}};
  json grid = json::array();
  for (const auto& c : doc.grid)
    grid.push_back({{"p", format_rat(c.p)},
                    {"q", format_rat(c.q)},
                    {"dim", c.dim},
                    {"star", c.star}});
  j["grid"] = std::move(grid);
  json checks = json::array();
  for (const auto& c : doc.checks)
    checks.push_back({{"name", c.name}, {"verdict", c.verdict}, {"hard", c.hard}});
  j["checks"] = std::move(checks);
  json expected = json::array();
  for (const auto& e : doc.expected)
    expected.push_back({{"quantity", e.quantity}, {"value", e.value}, {"pinned", e.pinned}});
  j["expected"] = std::move(expected);
  j["invariants_ok"] = doc.invariants_ok;
  j["failure"] = doc.failure;
  return j.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("report_from_json: ") + e.what());
  }
  try {
    ReportDocument doc;
    doc.schema = j.at("schema").get<int>();
    if (doc.schema != 1)
      throw InputError("report_from_json: unsupported schema " + std::to_string(doc.schema));
    doc.algebra = j.at("algebra").get<std::string>();
    doc.entry = j.at("entry").get<std::string>();
    doc.seed = j.at("seed").get<std::uint64_t>();
    doc.e1 = rats_from(j.at("e1"));
    doc.e2 = rats_from(j.at("e2"));
    doc.h1 = rats_from(j.at("h1"));
    doc.h2 = rats_from(j.at("h2"));
    doc.h1_labels = rats_from(j.at("h1_labels"));
    doc.h2_labels = rats_from(j.at("h2_labels"));
    doc.dim_z_e = j.at("dim_z_e").get<Index>();
    doc.dim_z_h = j.at("dim_z_h").get<Index>();
    doc.rank = j.at("rank").get<Index>();
    const json& f = j.at("flags");
    doc.trivial = f.at("trivial").get<bool>();
    doc.wonderful = f.at("wonderful").get<bool>();
    doc.integral = f.at("integral").get<bool>();
    doc.even = f.at("even").get<bool>();
    doc.almost_even = f.at("almost_even").get<bool>();
    doc.principal = f.at("principal").get<bool>();
    doc.almost_principal = f.at("almost_principal").get<bool>();
    doc.rectangular = f.at("rectangular").get<bool>();
    for (const auto& c : j.at("grid")) {
      GridCell gc;
      gc.p = parse_rat(c.at("p").get<std::string>());
      gc.q = parse_rat(c.at("q").get<std::string>());
      gc.dim = c.at("dim").get<Index>();
      gc.star = c.at("star").get<bool>();
      doc.grid.push_back(std::move(gc));
    }
    for (const auto& c : j.at("checks"))
      doc.checks.push_back({c.at("name").get<std::string>(),
                            c.at("verdict").get<std::string>(), c.at("hard").get<bool>()});
    for (const auto& e : j.at("expected"))
      doc.expected.push_back({e.at("quantity").get<std::string>(),
                              e.at("value").get<std::string>(), e.at("pinned").get<bool>()});
    doc.invariants_ok = j.at("invariants_ok").get<bool>();
    doc.failure = j.at("failure").get<std::string>();
    return doc;
  } catch (const json::exception& e) {
    throw InputError(std::string("report_from_json: ") + e.what());
  }
}

}  // namespace nilpair
