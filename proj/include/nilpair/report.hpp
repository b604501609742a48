#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nilpair/catalog.hpp"

namespace nilpair {

// An algebra selected on the command line. Classical families A and C come
// with a matrix realization (sl_{r+1}, sp_{2r}); other types are built on the
// Chevalley basis only.
struct AlgebraHandle {
  std::string descriptor;
  std::shared_ptr<const MatrixAlgebra> matrix;  // null for Chevalley-only
  std::shared_ptr<const RootedAlgebra> algebra;

  const RootedAlgebra& rooted() const { return *algebra; }
};

// type is either a full label ("A2", "E6") with rank = -1, or a bare family
// letter combined with an explicit rank. InputError on anything else.
AlgebraHandle build_algebra(const std::string& type, int rank = -1);

// Element mini-language: a signed sum of terms, each an optional rational
// coefficient times an atom. Atoms: h<k> (k-th simple coroot, 1-based),
// e[<root>] and f[<root>] with <root> in simple-root syntax ("a1+2a2"),
// v<i><j> (matrix units of the defining representation, 1-based, classical
// realizations only, not mixable with the other atoms), bare e/f/h in rank
// one, and "0". Throws InputError on malformed text.
QVector parse_element(const AlgebraHandle& handle, const std::string& text);

// Comma-separated rationals, exactly `rank` of them.
std::vector<Rat> parse_labels(const std::string& text, Index rank);

// Text rendering of a dimension grid: q decreasing downward, p increasing
// rightward, each cell its dimension with a star suffix when the marked
// subspace meets the cell, blanks where the grading has no support.
struct GridRender {
  std::vector<Rat> ps;  // ascending
  std::vector<Rat> qs;  // descending
  Index total = 0;
  Index stars = 0;
  std::string text;
};

struct GridCell {
  Rat p, q;
  Index dim = 0;
  bool star = false;

  bool operator==(const GridCell&) const = default;
};

GridRender render_grid(const std::vector<GridCell>& cells);
GridRender render_grid(const BiGrading& bg, const Subspace* mark);

// One theorem-check verdict. Hard checks with verdict "false" make the whole
// report fail; soft checks and skipped checks are informational.
struct ReportCheck {
  std::string name;
  std::string verdict;  // "true", "false", or "skipped: <reason>"
  bool hard = false;

  bool operator==(const ReportCheck&) const = default;
};

// Full analysis of one pair. Round-trips losslessly through the JSON format;
// rationals are serialized as "num/den" strings.
struct ReportDocument {
  int schema = 1;
  std::string algebra;
  std::string entry;  // catalog name, empty for ad hoc input
  std::uint64_t seed = 0;
  std::vector<Rat> e1, e2, h1, h2;
  std::vector<Rat> h1_labels, h2_labels;  // empty when h's leave the Cartan
  Index dim_z_e = 0;
  Index dim_z_h = 0;
  Index rank = 0;
  bool trivial = false;
  bool wonderful = false;
  bool integral = false;
  bool even = false;
  bool almost_even = false;
  bool principal = false;
  bool almost_principal = false;
  bool rectangular = false;
  std::vector<GridCell> grid;
  std::vector<ReportCheck> checks;
  std::vector<ExpectedValue> expected;
  bool invariants_ok = true;
  std::string failure;  // first failed hard check

  bool operator==(const ReportDocument&) const = default;
};

// Runs the full pipeline on a catalog entry: classify, then every theorem
// check that applies. Assertion failures inside the checks propagate.
ReportDocument analyze_entry(const CatalogEntry& entry);

// Same pipeline for an explicit pair; the characteristic is solved from
// scratch (SolveError when the pair is not a commuting nilpotent pair).
ReportDocument analyze_pair(const AlgebraHandle& handle, const NilpotentPair& pair);

// The optional algebra is used to print elements by basis name.
std::string to_text(const ReportDocument& doc, const RootedAlgebra* ra = nullptr);
std::string to_json_text(const ReportDocument& doc);
ReportDocument report_from_json(const std::string& text);

}  // namespace nilpair
