#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "nilpair/suite.hpp"

namespace {

using namespace nilpair;

struct Options {
  std::string type;
  int rank = -1;
  std::string catalog;
  std::string e1_text, e2_text;
  std::string h1_labels, h2_labels;
  bool grid = false;
  bool as_json = false;
  std::optional<std::uint64_t> seed;
  std::string filter;
  std::string golden_dir = "tests/golden";
};

int cmd_build(const Options& opt) {
  AlgebraHandle handle = build_algebra(opt.type, opt.rank);
  const RootSystem& rs = handle.rooted().rs;
  std::vector<Index> all(static_cast<size_t>(rs.rank()));
  for (Index i = 0; i < rs.rank(); ++i) all[static_cast<size_t>(i)] = i;
  SubsystemData data = levi_data(rs, all);

  if (opt.as_json) {
    nlohmann::json j;
    j["algebra"] = handle.descriptor;
    j["rank"] = rs.rank();
    j["dimension"] = rs.dim_algebra();
    j["positive_roots"] = rs.num_positive();
    j["exponents"] = data.exponents;
    j["coxeter"] = data.coxeter_max;
    j["cartan_determinant"] = data.cartan_det;
    if (handle.matrix)
      j["matrix_size"] = handle.matrix->msize;
    else
      j["matrix_size"] = nullptr;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "algebra: " << handle.descriptor << "\n"
            << "rank: " << rs.rank() << "\n"
            << "dimension: " << rs.dim_algebra() << "\n"
            << "positive roots: " << rs.num_positive() << "\n";
  std::cout << "exponents:";
  for (int e : data.exponents) std::cout << " " << e;
  std::cout << "\ncoxeter number: " << data.coxeter_max << "\n"
            << "cartan determinant: " << data.cartan_det << "\n";
  if (handle.matrix)
    std::cout << "realization: matrices of size " << handle.matrix->msize << "\n";
  else
    std::cout << "realization: chevalley basis\n";
  return 0;
}

int cmd_analyze(const Options& opt) {
  ReportDocument doc;
  std::shared_ptr<const RootedAlgebra> keep;

  if (!opt.catalog.empty()) {
    if (!opt.type.empty() || !opt.e1_text.empty() || !opt.e2_text.empty())
      throw InputError("analyze: give either --catalog or --type with --e1/--e2");
    CatalogEntry entry = catalog_entry(opt.catalog, opt.seed);
    keep = entry.algebra;
    doc = analyze_entry(entry);
  } else {
    if (opt.type.empty() || opt.e1_text.empty() || opt.e2_text.empty())
      throw InputError("analyze: need --catalog, or --type with --e1 and --e2");
    AlgebraHandle handle = build_algebra(opt.type, opt.rank);
    keep = handle.algebra;
    NilpotentPair pair{parse_element(handle, opt.e1_text),
                       parse_element(handle, opt.e2_text)};
    doc = analyze_pair(handle, pair);
  }

  if (opt.as_json) {
    std::cout << to_json_text(doc);
  } else {
    std::cout << to_text(doc, keep.get());
    if (opt.grid) {
      GridRender g = render_grid(doc.grid);
      std::cout << "\n" << g.text << "total: " << g.total << "  stars: " << g.stars << "\n";
    }
  }
  return doc.invariants_ok ? 0 : 1;
}

int cmd_grid(const Options& opt) {
  if (opt.type.empty()) throw InputError("grid: --type is required");
  AlgebraHandle handle = build_algebra(opt.type, opt.rank);
  const RootedAlgebra& ra = handle.rooted();
  auto labels_or_zero = [&](const std::string& text) {
    if (text.empty()) return std::vector<Rat>(static_cast<size_t>(ra.rank()), Rat(0));
    return parse_labels(text, ra.rank());
  };
  Characteristic ch{ra.element_from_labels(labels_or_zero(opt.h1_labels)),
                    ra.element_from_labels(labels_or_zero(opt.h2_labels))};
  BiGrading bg = bigrade(ra.alg, ch);
  GridRender g = render_grid(bg, nullptr);

  if (opt.as_json) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : bg.cells)
      cells.push_back({{"p", format_rat(cell.p)},
                       {"q", format_rat(cell.q)},
                       {"dim", cell.space.dim()}});
    nlohmann::json j;
    j["algebra"] = handle.descriptor;
    j["cells"] = std::move(cells);
    j["total"] = g.total;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << g.text << "total: " << g.total << "\n";
  return 0;
}

int cmd_suite(const Options& opt) {
  std::vector<SuiteResult> results = run_suite(opt.filter, opt.golden_dir);
  std::cout << format_suite(results);
  return suite_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic analyzer for commuting nilpotent pairs"};
  app.require_subcommand(1);
  Options opt;
  std::uint64_t seed_value = 0;

  CLI::App* build = app.add_subcommand("build", "construct an algebra and print a summary");
  CLI::App* analyze = app.add_subcommand("analyze", "run the full pipeline on one pair");
  CLI::App* grid = app.add_subcommand("grid", "render the bi-grading of two label vectors");
  CLI::App* suite = app.add_subcommand("suite", "run the property batteries over the catalog");

  for (CLI::App* sub : {build, analyze, grid}) {
    sub->add_option("--type", opt.type, "algebra type, e.g. A2, C3, E6, or a bare letter");
    sub->add_option("--rank", opt.rank, "rank, when --type is a bare letter");
  }
  build->add_flag("--json", opt.as_json, "machine-readable output");

  analyze->add_option("--catalog", opt.catalog, "catalog entry name");
  analyze->add_option("--e1", opt.e1_text, "first element, e.g. \"e[a1] - e[a1+a2]\"");
  analyze->add_option("--e2", opt.e2_text, "second element");
  analyze->add_flag("--grid", opt.grid, "append the dimension grid");
  analyze->add_flag("--json", opt.as_json, "machine-readable report");
  CLI::Option* seed_opt =
      analyze->add_option("--seed", seed_value, "override the entry's search seed");

  grid->add_option("--h1-labels", opt.h1_labels, "comma-separated simple-root values of h1");
  grid->add_option("--h2-labels", opt.h2_labels, "comma-separated simple-root values of h2");
  grid->add_flag("--json", opt.as_json, "machine-readable output");

  suite->add_option("--filter", opt.filter, "run only properties whose name contains this");
  suite->add_option("--golden-dir", opt.golden_dir, "directory with the grid golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (seed_opt->count() > 0) opt.seed = seed_value;

  try {
    if (build->parsed()) return cmd_build(opt);
    if (analyze->parsed()) return cmd_analyze(opt);
    if (grid->parsed()) return cmd_grid(opt);
    return cmd_suite(opt);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SolveError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 2;
  } catch (const SpectrumError& e) {
    std::cerr << "spectrum error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "invariant failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
