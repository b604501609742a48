#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilpair/pairs.hpp"

namespace nilpair {

// Simultaneous eigenspace decomposition of the algebra under ad h1, ad h2.
// Cells are ordered by q descending then p ascending, the row-major reading
// order of the dimension grids.
struct BiGrading {
  struct Cell {
    Rat p, q;
    Subspace space;
  };

  const LieAlgebraQ* alg = nullptr;
  Characteristic ch;
  std::vector<Cell> cells;

  const Subspace* find(const Rat& p, const Rat& q) const;
  Index dim_at(const Rat& p, const Rat& q) const;
  std::vector<std::pair<Rat, Rat>> support() const;
};

BiGrading bigrade(const LieAlgebraQ& alg, const Characteristic& ch);

// M(i,*), M(*,j) and M(i,j) of a subspace: vanishing under powers of the pair.
// nullopt means no constraint on that index; a negative index gives {0}.
Subspace filtration(const LieAlgebraQ& alg, const NilpotentPair& pair, const Subspace& m,
                    std::optional<Index> i, std::optional<Index> j);

enum class LimitMode { e1, e2, both };

// lim M = sum over i (and j) of (ad e1)^i (ad e2)^j M(i,j).
Subspace limit(const LieAlgebraQ& alg, const NilpotentPair& pair, const Subspace& m,
               LimitMode mode);

// A piece of an h-stable subspace cut out by a predicate on cell coordinates.
struct GradedSlice {
  Subspace space;
  std::string descriptor;
  std::vector<std::pair<std::pair<Rat, Rat>, Index>> cell_dims;  // nonzero cells
};

bool rat_is_integer(const Rat& x);
bool rat_in_P(const Rat& x);  // nonnegative integer

GradedSlice slice(const BiGrading& bg, const Subspace& target, const std::string& descriptor,
                  const std::function<bool(const Rat&, const Rat&)>& pred);

GradedSlice slice_cell(const BiGrading& bg, const Subspace& target, const Rat& p, const Rat& q);
GradedSlice slice_row(const BiGrading& bg, const Subspace& target, const Rat& q);
GradedSlice slice_col(const BiGrading& bg, const Subspace& target, const Rat& p);
GradedSlice slice_PP(const BiGrading& bg, const Subspace& target);

// g = g_ZZ + g_fr with g_ZZ a subalgebra; the closure is asserted.
std::pair<GradedSlice, GradedSlice> integral_fractional_split(const BiGrading& bg);

}  // namespace nilpair
