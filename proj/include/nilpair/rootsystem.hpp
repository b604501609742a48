#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilpair/exactla.hpp"

namespace nilpair {

// Integer coordinate vector of a root in the simple-root basis.
using RootVec = std::vector<int>;

// A reduced root system of a semisimple type, with a fixed simple basis.
// Conventions: cartan(i,j) = <alpha_j, alpha_i^vee>, gram(i,j) = (alpha_i|alpha_j)
// with short roots of squared length 2, d[i] = (alpha_i|alpha_i)/2 in {1,2,3}.
// Positive roots are sorted by height, then lexicographically.
struct RootSystem {
  std::vector<std::pair<char, int>> components;
  Index rank_ = 0;
  QMatrix cartan;
  QMatrix gram;
  std::vector<long> d;
  std::vector<RootVec> positive;
  std::map<RootVec, Index> position;

  static RootSystem simple(char family, int rank);
  // Accepts "E6" or sums like "A1+A1"; components keep the given order.
  static RootSystem parse(const std::string& label);

  Index rank() const { return rank_; }
  Index num_positive() const { return static_cast<Index>(positive.size()); }
  Index dim_algebra() const { return rank_ + 2 * num_positive(); }
  std::string label() const;

  bool is_positive_root(const RootVec& v) const { return position.count(v) != 0; }
  static int height(const RootVec& v);
  // <beta, alpha_j^vee>
  long pairing(const RootVec& beta, Index j) const;
  Rat inner(const RootVec& a, const RootVec& b) const;
  long norm2(const RootVec& a) const;
  RootVec highest_root() const;  // requires a single component
};

// Canonical text for a root, e.g. "a1+2a2"; parse accepts the same syntax
// (signs and coefficients allowed, "a3-a1" etc.).
std::string root_label(const RootVec& v);
RootVec parse_root_label(const std::string& text, Index rank);

// Data attached to a closed symmetric root subsystem, given by its positive part
// (which must be closed under addition within the ambient system). Works for
// arbitrary centralizer subsystems, not just Levi subsets of the simple basis.
struct SubsystemData {
  std::vector<RootVec> positive;
  std::vector<RootVec> simple;               // indecomposable members
  std::vector<int> component_of;             // per simple root, component id
  std::vector<std::pair<char, int>> component_types;
  std::vector<int> exponents;                // ascending, all components together
  int coxeter_max = 1;                       // 1 for the empty subsystem
  long cartan_det = 1;
};
using LeviData = SubsystemData;

SubsystemData subsystem_data(const RootSystem& rs, std::vector<RootVec> roots);
// Subsystem generated by a subset of the simple basis (indices into it).
SubsystemData levi_data(const RootSystem& rs, const std::vector<Index>& subset);

// 2(mu | nu) where nu is the sum of the positive coroots of the Levi generated
// by `subset` and mu is a simple root outside the subset.
Rat bound_d(const RootSystem& rs, const std::vector<Index>& subset, Index mu);
// Minimum of bound_d over all admissible mu; 0 when the complement is empty.
Rat bound_d_min(const RootSystem& rs, const std::vector<Index>& subset);

}  // namespace nilpair
