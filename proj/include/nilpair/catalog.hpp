#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilpair/grading.hpp"
#include "nilpair/liealgebra.hpp"
#include "nilpair/pairs.hpp"

namespace nilpair {

// A named quantity attached to a catalog entry. Pinned values are fixed
// reference data and are re-derived and asserted when the entry is built;
// derived values record what the engine computed.
struct ExpectedValue {
  std::string quantity;
  std::string value;
  bool pinned = false;

  bool operator==(const ExpectedValue&) const = default;
};

// A worked example: an algebra, a commuting nilpotent pair with its
// characteristic, the bigrading, and the expected values it was built to
// satisfy. Construction is deterministic (searched entries consume a fixed
// seed) and throws Error if any pinned value fails to reproduce.
struct CatalogEntry {
  std::string name;
  std::shared_ptr<const MatrixAlgebra> matrix;  // null for Chevalley-basis entries
  std::shared_ptr<const RootedAlgebra> algebra;
  NilpotentPair pair;
  Characteristic ch;
  BiGrading grading;  // valid while `algebra` is alive
  Subspace z;         // centralizer of the pair
  std::vector<ExpectedValue> expected;
  std::uint64_t seed = 0;  // 0 when no generic search was involved

  const RootedAlgebra& rooted() const { return *algebra; }
  // Value of a recorded quantity; InputError if absent.
  const std::string& expect(const std::string& quantity) const;
};

// Pair attached to a Young diagram: cells are listed row-major as (row, col)
// and index the natural basis of Q^n; e1 shifts each cell one step rightward
// along its row, e2 one step downward along its column, and the
// characteristic acts on a cell by its centered column and row coordinates.
struct PartitionPair {
  int n = 0;
  std::vector<int> partition;
  std::vector<std::pair<int, int>> cells;
  std::shared_ptr<const MatrixAlgebra> algebra;
  NilpotentPair pair;
  Characteristic ch;
};

// Principal pair in sl_n for a partition of n >= 2. InputError on an invalid
// partition; Error if the construction fails to verify (it never should).
PartitionPair partition_pair(int n, const std::vector<int>& partition);

// The fractional pair in sp6 with centralizer eigenvalue denominators 3:
// e1 = E12 - E34, e2 = E02 - E35 in the Witt basis. Coincides with the
// partition-(2,1) pair pushed through embed_sl_in_sp and the blockwise
// basis reversal v_i -> v_{2-i}, v_{3+i} -> v_{5-i}.
CatalogEntry sp6_example();

// Integral almost principal pair in sp_{4n}: characteristic from the label
// vectors h1 = (1,...,1,-2n), h2 = (0,...,0,1), e1 generic in g_{1,0} and
// regular in the h2-vanishing Levi, e2 generic in z(e1) cap g_{0,1}.
// A seed override replaces the built-in search seed.
CatalogEntry sp_almost_principal(int n, std::optional<std::uint64_t> seed = {});

enum class ExceptionalPair { E6, E7 };

// The label-driven principal pairs in E6 and E7. Characteristics come from
// fixed label vectors; the nilpotent members are found by seeded generic
// search in g_{1,0} and z(e1) cap g_{0,1} with dim z(e) = rank verified.
CatalogEntry exceptional_pair(ExceptionalPair which, std::optional<std::uint64_t> seed = {});

// Stable entry identifiers, construction dispatch by name. The seed override
// is forwarded to entries that search; others ignore it.
const std::vector<std::string>& catalog_names();
CatalogEntry catalog_entry(const std::string& name, std::optional<std::uint64_t> seed = {});

// All partitions of n in descending lexicographic order, parts decreasing.
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace nilpair
