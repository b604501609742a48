#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "nilpair/report.hpp"
#include "nilpair/suite.hpp"

using namespace nilpair;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = fs::temp_directory_path() / ("nilpair_cli_" + std::to_string(++counter));
  const std::string cmd = std::string(NILPAIR_BIN) + " " + args + " > " + out.string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
  std::ifstream f(out);
  std::ostringstream ss;
  ss << f.rdbuf();
  r.output = ss.str();
  fs::remove(out);
  return r;
}

QVector unit(const RootedAlgebra& ra, Index idx, const Rat& c) {
  QVector v = ra.alg.zero();
  v[idx] = c;
  return v;
}

}  // namespace

TEST_CASE("build_algebra realizes classical families by matrices") {
  AlgebraHandle a2 = build_algebra("A2");
  CHECK(a2.descriptor == "A2");
  REQUIRE(a2.matrix != nullptr);
  CHECK(a2.matrix->msize == 3);

  AlgebraHandle c3 = build_algebra("C", 3);
  CHECK(c3.descriptor == "C3");
  REQUIRE(c3.matrix != nullptr);
  CHECK(c3.matrix->msize == 6);

  AlgebraHandle e6 = build_algebra("E6");
  CHECK(e6.matrix == nullptr);
  CHECK(e6.rooted().alg.dim() == 78);

  AlgebraHandle sum = build_algebra("A1+A1");
  CHECK(sum.matrix == nullptr);
  CHECK(sum.rooted().rank() == 2);

  CHECK_THROWS_AS(build_algebra("Z9"), InputError);
  CHECK_THROWS_AS(build_algebra("A"), InputError);
  CHECK_THROWS_AS(build_algebra("A2", 2), InputError);
}

TEST_CASE("parse_element understands the mini language") {
  AlgebraHandle a2 = build_algebra("A2");
  const RootedAlgebra& ra = a2.rooted();

  QVector x = parse_element(a2, "e[a1] - e[a1+a2]");
  QVector want = unit(ra, ra.root_vector_index({1, 0}), 1);
  want += unit(ra, ra.root_vector_index({1, 1}), -1);
  CHECK(QVector(x) == QVector(want));

  CHECK(QVector(parse_element(a2, "f[a1+a2]")) ==
        QVector(unit(ra, ra.root_vector_index({-1, -1}), 1)));
  CHECK(QVector(parse_element(a2, "e[-a1-a2]")) ==
        QVector(parse_element(a2, "f[a1+a2]")));

  QVector h = parse_element(a2, "3/2h1 + 2*h2");
  QVector hwant = unit(ra, ra.h_index(0), rat(3, 2));
  hwant += unit(ra, ra.h_index(1), 2);
  CHECK(QVector(h) == QVector(hwant));

  // Matrix units go through the defining representation.
  QVector v = parse_element(a2, "v12 - 1/2v23");
  QMatrix m = QMatrix::Zero(3, 3);
  m(0, 1) = 1;
  m(1, 2) = rat(-1, 2);
  CHECK(QVector(v) == QVector(a2.matrix->from_matrix(m)));

  CHECK(QVector(parse_element(a2, "0")) == QVector(ra.alg.zero()));

  AlgebraHandle a1 = build_algebra("A1");
  CHECK(QVector(parse_element(a1, "e")) ==
        QVector(unit(a1.rooted(), a1.rooted().root_vector_index({1}), 1)));
  CHECK(QVector(parse_element(a1, "h")) == QVector(unit(a1.rooted(), 0, 1)));

  CHECK_THROWS_AS(parse_element(a2, ""), InputError);
  CHECK_THROWS_AS(parse_element(a2, "2"), InputError);
  CHECK_THROWS_AS(parse_element(a2, "e"), InputError);
  CHECK_THROWS_AS(parse_element(a2, "e[a1"), InputError);
  CHECK_THROWS_AS(parse_element(a2, "e[a9]"), InputError);
  CHECK_THROWS_AS(parse_element(a2, "h5"), InputError);
  CHECK_THROWS_AS(parse_element(a2, "v12 + e[a1]"), InputError);
  CHECK_THROWS_AS(parse_element(a2, "v99"), InputError);
  CHECK_THROWS_AS(parse_element(build_algebra("E6"), "v12"), InputError);
}

TEST_CASE("parse_labels reads comma separated rationals") {
  std::vector<Rat> got = parse_labels("1, 2/3 ,-1", 3);
  REQUIRE(got.size() == 3);
  CHECK(got[0] == 1);
  CHECK(got[1] == rat(2, 3));
  CHECK(got[2] == -1);
  CHECK_THROWS_AS(parse_labels("1,2", 3), InputError);
  CHECK_THROWS_AS(parse_labels("1,x,3", 3), InputError);
  CHECK_THROWS_AS(parse_labels("", 1), InputError);
}

TEST_CASE("grid rendering matches the grading it came from") {
  AlgebraHandle a2 = build_algebra("A2");
  const RootedAlgebra& ra = a2.rooted();
  Characteristic ch{ra.element_from_labels({1, 1}), ra.element_from_labels({0, 0})};
  BiGrading bg = bigrade(ra.alg, ch);
  GridRender g = render_grid(bg, nullptr);
  CHECK(g.total == 8);
  CHECK(g.stars == 0);
  REQUIRE(g.qs.size() == 1);
  CHECK(g.qs[0] == 0);
  REQUIRE(g.ps.size() == 5);
  CHECK(g.ps.front() == -2);
  CHECK(g.ps.back() == 2);

  // Rendering from cell records gives the identical text.
  std::vector<GridCell> cells;
  for (const auto& cell : bg.cells)
    cells.push_back({cell.p, cell.q, cell.space.dim(), false});
  CHECK(render_grid(cells).text == g.text);

  Characteristic zero{ra.alg.zero(), ra.alg.zero()};
  GridRender single = render_grid(bigrade(ra.alg, zero), nullptr);
  CHECK(single.total == 8);
  CHECK(single.ps.size() == 1);
  CHECK(single.qs.size() == 1);
}

TEST_CASE("report documents round trip through json") {
  for (const char* name : {"sl2-trivial", "sl3-partition-2-1", "sl4-rect", "sp4-rect-frac"}) {
    CatalogEntry entry = catalog_entry(name);
    ReportDocument doc = analyze_entry(entry);
    ReportDocument back = report_from_json(to_json_text(doc));
    CHECK(doc == back);
    CHECK(doc.invariants_ok);
  }
  CHECK_THROWS_AS(report_from_json("not json"), InputError);
  CHECK_THROWS_AS(report_from_json("{\"schema\": 1}"), InputError);
  CHECK_THROWS_AS(report_from_json("{\"schema\": 7}"), InputError);
}

TEST_CASE("ad hoc analysis solves the characteristic itself") {
  AlgebraHandle a1 = build_algebra("A1");
  NilpotentPair pair{parse_element(a1, "e"), parse_element(a1, "0")};
  ReportDocument doc = analyze_pair(a1, pair);
  CHECK(doc.entry.empty());
  CHECK(doc.trivial);
  CHECK(doc.principal);
  CHECK(doc.invariants_ok);
  CHECK(doc.h1_labels == std::vector<Rat>{1});

  AlgebraHandle a2 = build_algebra("A2");
  NilpotentPair bad{parse_element(a2, "e[a1]"), parse_element(a2, "e[a2]")};
  CHECK_THROWS_AS(analyze_pair(a2, bad), InputError);  // does not commute
  NilpotentPair semisimple{parse_element(a2, "h1"), parse_element(a2, "0")};
  CHECK_THROWS_AS(analyze_pair(a2, semisimple), SolveError);
}

TEST_CASE("cli exit codes follow the contract") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("analyze --type A1 --e1 e --e2 0").code == 0);
  CHECK(run_cli("").code == 2);                                  // missing subcommand
  CHECK(run_cli("analyze").code == 2);                           // no pair given
  CHECK(run_cli("analyze --catalog nosuch").code == 2);          // unknown entry
  CHECK(run_cli("analyze --type A1 --e1 e --e2 f").code == 2);   // does not commute
  CHECK(run_cli("analyze --type A1 --e1 h1 --e2 0").code == 2);  // not nilpotent
  CHECK(run_cli("grid --type A2 --h1-labels 1,1,1").code == 2);  // label count
  CHECK(run_cli("build --type Q7").code == 2);

  RunResult grid = run_cli("grid --type A2 --h1-labels 1,1");
  CHECK(grid.code == 0);
  CHECK(grid.output.find("total: 8") != std::string::npos);

  RunResult rep = run_cli("analyze --type A1 --e1 e --e2 0");
  CHECK(rep.output.find("principal") != std::string::npos);
  CHECK(rep.output.find("result: PASS") != std::string::npos);

  RunResult json = run_cli("analyze --type A1 --e1 e --e2 0 --json");
  ReportDocument doc = report_from_json(json.output);
  CHECK(doc.principal);
  CHECK(doc.algebra == "A1");
}

TEST_CASE("suite figure comparison detects golden corruption") {
  const std::string golden = GOLDEN_DIR;
  RunResult good = run_cli("suite --filter figures --golden-dir " + golden);
  CHECK(good.code == 0);
  CHECK(good.output.find("PASS") != std::string::npos);
  CHECK(good.output.find("FAIL") == std::string::npos);

  const fs::path tmp = fs::temp_directory_path() / "nilpair_corrupt_golden";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  fs::copy(golden, tmp, fs::copy_options::overwrite_existing);
  std::ofstream(tmp / "e6_grid.txt", std::ios::app) << "corrupted\n";
  RunResult bad = run_cli("suite --filter figures --golden-dir " + tmp.string());
  CHECK(bad.code == 1);
  CHECK(bad.output.find("FAIL") != std::string::npos);
  fs::remove_all(tmp);
}
