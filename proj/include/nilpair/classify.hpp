#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilpair/grading.hpp"

namespace nilpair {

// Record of the defining per-cell equality (ad e1)^i (ad e2)^j h(i,j) = z(e)_{i,j}
// over the nonnegative integral cells of the bi-grading, h = g_{0,0}.
struct CellCheck {
  Rat p, q;
  Index lhs_dim = 0;
  Index rhs_dim = 0;
  bool equal = false;
};

struct WonderfulCertificate {
  bool wonderful = false;
  std::vector<CellCheck> cells;  // support cells with p, q nonnegative integers
};

// The pair must be the one whose characteristic produced the bi-grading.
WonderfulCertificate is_wonderful(const NilpotentPair& pair, const BiGrading& bg);

// All bi-grading eigenvalues integral. The equivalent condition
// z(e) = z(e)_{Z,Z} is computed independently and the agreement is asserted.
bool is_integral(const NilpotentPair& pair, const BiGrading& bg);

struct ClassificationReport {
  bool trivial = false;  // one member is zero
  bool wonderful = false;
  bool integral = false;
  bool even = false;            // dim z(e) = dim z(h)
  bool almost_even = false;     // dim z(e) = dim z(h) + 1
  bool principal = false;       // dim z(e) = rank
  bool almost_principal = false;
  bool rectangular = false;
  Index dim_z_e = 0;
  Index dim_z_h = 0;
  Index rank = 0;
  WonderfulCertificate certificate;
};

// All flags recomputed from scratch; the implications principal => even,
// almost principal => almost even, even => wonderful and integral, and
// rectangular => wonderful are asserted and violations throw Error.
ClassificationReport classification_report(const NilpotentPair& pair, const BiGrading& bg,
                                           Index rank);

// lhs: lim_e h = z(e)_{P,P}. rhs: the three vanishing conditions
// z(e)_{p,q} = 0 for p,q < 0; z(e1)_{p,0} = 0 for p < 0; z(e2)_{0,q} = 0 for
// q < 0. Both sides are computed independently and asserted equal.
struct XarakVerdict {
  bool lhs = false;
  bool rhs = false;
};
XarakVerdict xarak_check(const NilpotentPair& pair, const BiGrading& bg);

// z(e)_{p,q} = 0 on the open negative quadrant; requires wonderful integral.
bool pusto3_check(const NilpotentPair& pair, const BiGrading& bg);

enum class Side { e1, e2 };
enum class RichardsonScope {
  parabolic,  // [g_{Z,P}, e2] = g_{Z,N} (side e2), symmetrically for e1
  levi        // [(l2)_{>=0}, e1] = (l2)_{>=1} inside the q = 0 slice (side e1)
};
bool richardson_check(const NilpotentPair& pair, const BiGrading& bg, Side side,
                      RichardsonScope scope);

// Simple-root labels of (h1, h2) after moving to the simple system making
// (h2, then h1 on ties) dominant, with the label-constraint verdicts.
struct LabelReport {
  std::vector<Rat> h1_labels;
  std::vector<Rat> h2_labels;
  std::vector<Index> pi2;  // simple indices with alpha(h2) = 0
  // General constraints: labels of h2 in {0,1}; alpha(h2)=0 forces
  // alpha(h1) in {0,1}; alpha(h2)=1 forces 2(alpha|nu) <= alpha(h1) <= 0.
  bool labels_i = false;
  bool labels_ii = false;
  bool labels_iii = false;
  Rat d;  // min of 2(mu|nu) over mu outside pi2; 0 when the complement is empty
  // Principal/almost-principal refinements: alpha(h2)=0 forces alpha(h1)=1;
  // on the Richardson side alpha(h1) >= -cox(l2)+1.
  bool pr_i = false;
  bool pr_ii = false;
  bool cox_bound = false;  // -cox(l2)+1 <= alpha(h1) <= 0 wherever alpha(h2)=1
  std::optional<bool> pr_iii;  // = cox_bound when e2 is flagged Richardson
  int cox_l2 = 1;
};
LabelReport labels_report(const RootedAlgebra& ra, const Characteristic& ch,
                          std::optional<bool> e2_richardson);

// Eigenvalues (alpha_i, beta_i) of (h1, h2) on lim_e h: the nonzero alpha_i
// form the exponent multiset of the h2-Levi, the nonzero beta_i that of the
// h1-Levi. Requires a principal or almost principal pair with h's in the
// standard Cartan.
struct ExponentsCheck {
  std::vector<Rat> alpha_nonzero;  // ascending, with multiplicity
  std::vector<Rat> beta_nonzero;
  std::vector<int> l2_exponents;
  std::vector<int> l1_exponents;
  bool eigencount_ok = false;  // dim lim_e h = rank
  bool l2_match = false;
  bool l1_match = false;
  bool ok() const { return eigencount_ok && l2_match && l1_match; }
};
ExponentsCheck exponents_check(const RootedAlgebra& ra, const NilpotentPair& pair,
                               const BiGrading& bg);

// Every eigenvalue denominator of ad h1, ad h2 divides the Cartan determinant
// of s = [g_{Z,Z}, g_{Z,Z}], identified through its root subsystem.
struct DenominatorCheck {
  long max_denominator = 1;
  long c_s = 1;
  std::vector<std::pair<char, int>> s_types;
  bool ok = false;
};
DenominatorCheck denominator_check(const RootedAlgebra& ra, const BiGrading& bg);

// Spectrum test for a module with one-dimensional joint e-fixed space: the
// weight support must be the full rectangle with corner (p0, q0), every cell
// one-dimensional, and dim V = (2 p0 + 1)(2 q0 + 1). A fixed space of the
// wrong dimension is reported, not thrown.
struct RectangleCheck {
  Index fixed_dim = 0;
  bool hypothesis_ok = false;
  Rat p0, q0;
  bool rectangle_ok = false;
  bool count_ok = false;
  bool ok() const { return hypothesis_ok && rectangle_ok && count_ok; }
};
RectangleCheck rectangle_spectrum_check(const QMatrix& act_e1, const QMatrix& act_e2,
                                        const QMatrix& act_h1, const QMatrix& act_h2);
// Same check on an ad-invariant subspace of the algebra.
RectangleCheck rectangle_spectrum_check(const NilpotentPair& pair, const BiGrading& bg,
                                        const Subspace& module);

// For an almost even pair, locates the unique excess cell (p,q) with
// z(e) = lim_e h + <x>, and classifies it: either p,q integral with pq < 0,
// or p,q properly half-integral and positive. The fractional branch also
// reports rectangularity, dim h = rank with h abelian, and principality of
// the pair inside g_{Z,Z}.
struct AlmostEvenStructure {
  Rat p, q;
  bool integral_case = false;
  bool fractional_case = false;
  bool class_ok = false;
  std::optional<bool> rectangular;
  std::optional<bool> h_cartan;
  std::optional<bool> principal_in_zz;
};
AlmostEvenStructure almost_even_structure(const NilpotentPair& pair, const BiGrading& bg,
                                          const ClassificationReport& report);

// z(e)^perp = im(ad e1) + im(ad e2) under the Killing form.
bool killing_duality_check(const LieAlgebraQ& alg, const NilpotentPair& pair);

// A single nilpotent is even when ad of its sl2-coweight has even spectrum;
// e = 0 counts as even.
bool nilpotent_is_even(const LieAlgebraQ& alg, const QVector& e);

// lim_{e1} h = z(e1,h2)_P and lim_{e1} z(e2,h1,h2) = z(e1,e2,h2)_P, plus the
// mirror images; holds for wonderful pairs.
struct Wond1Check {
  bool first_e1 = false, first_e2 = false;
  bool second_e1 = false, second_e2 = false;
  bool ok() const { return first_e1 && first_e2 && second_e1 && second_e2; }
};
Wond1Check wond1_check(const NilpotentPair& pair, const BiGrading& bg);

// Surjectivity ladders of a wonderful pair: [g_{i,0}, e1] = g_{i+1,0} and
// [g_{0,j}, e2] = g_{0,j+1}; [z(e2,h2)_i, e1] = z(e2,h2)_{i+1} and the mirror;
// and z(e1,h2), z(e2,h1) concentrated in nonnegative integral degrees.
struct Wond2Check {
  bool grid_rows = false, grid_cols = false;
  bool z2_ladder = false, z1_ladder = false;
  bool nonneg_e1 = false, nonneg_e2 = false;
  bool ok() const {
    return grid_rows && grid_cols && z2_ladder && z1_ladder && nonneg_e1 && nonneg_e2;
  }
};
Wond2Check wond2_check(const NilpotentPair& pair, const BiGrading& bg);

// Graded-slice dichotomy on (l2)_Z (side e1) resp. (l1)_Z (side e2): when
// dim z_a(e)_P = dim a_0, the maps [a_i, e] -> a_{i+1} are onto for i >= 0.
struct UsefulCheck {
  bool hypothesis = false;
  bool surjective = false;
};
UsefulCheck useful_check(const NilpotentPair& pair, const BiGrading& bg, Side side);

// Deterministic scan over commuting positive-root-vector pairs and their
// two-term sums whose characteristic solves to an integral non-wonderful
// pair; returns the first `want` hits in enumeration order.
std::vector<NilpotentPair> search_non_wonderful(const RootedAlgebra& ra, std::size_t want);

}  // namespace nilpair
