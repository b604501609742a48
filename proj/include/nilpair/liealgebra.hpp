#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilpair/exactla.hpp"
#include "nilpair/rootsystem.hpp"

namespace nilpair {

// A finite dimensional Lie algebra over Q, given by structure constants on a
// fixed basis. Elements are coordinate vectors (QVector) in that basis.
struct LieAlgebraQ {
  std::vector<std::string> labels;
  // table[i*dim+j] lists the nonzero coordinates of [b_i, b_j].
  std::vector<std::vector<std::pair<Index, Rat>>> table;
  QMatrix killing_cache;

  Index dim() const { return static_cast<Index>(labels.size()); }
  QVector zero() const { return QVector::Zero(dim()); }
  QVector basis_vector(Index i) const;

  const std::vector<std::pair<Index, Rat>>& bracket_basis(Index i, Index j) const {
    return table[static_cast<size_t>(i * dim() + j)];
  }
  QVector bracket(const QVector& x, const QVector& y) const;
  QMatrix ad(const QVector& x) const;
  const QMatrix& killing() const { return killing_cache; }
  Rat killing_form(const QVector& x, const QVector& y) const;
  std::string format(const QVector& x) const;

  void finalize();  // computes the Killing matrix from the table
};

// A Lie algebra carrying a root decomposition: basis is laid out as the simple
// coroots h_1..h_r, then e_beta over the positive roots in root system order,
// then f_beta in the same order.
struct RootedAlgebra {
  LieAlgebraQ alg;
  RootSystem rs;

  Index rank() const { return rs.rank(); }
  Index h_index(Index k) const;
  // Accepts positive or negative roots.
  Index root_vector_index(const RootVec& beta) const;
  RootVec root_at(Index basis_index) const;  // InputError on Cartan slots
  bool is_cartan_index(Index i) const { return i < rs.rank(); }

  // Coordinates of the coroot beta^vee in the Cartan basis, as an element.
  QVector coroot(const RootVec& beta) const;
  // Cartan element h with alpha_j(h) = values[j].
  QVector element_from_labels(const std::vector<Rat>& values) const;
  std::vector<Rat> simple_root_values(const QVector& h) const;
  bool in_cartan_span(const QVector& x) const;
};

// Chevalley basis construction: integral structure constants, signs fixed by
// the extraspecial pair convention on the (height, lex) root order.
RootedAlgebra chevalley_algebra(const RootSystem& rs);

// A rooted algebra realized by matrices, with conversion both ways.
struct MatrixAlgebra {
  RootedAlgebra rooted;
  Index msize = 0;
  std::vector<QMatrix> basis_mats;
  // Distinguished matrix entry of each root vector basis element.
  std::vector<std::pair<Index, Index>> lead_cell;
  // Reads Cartan coordinates off the matrix diagonal: hcoords = diag_solver * diag.
  QMatrix diag_solver;

  QMatrix to_matrix(const QVector& x) const;
  QVector from_matrix(const QMatrix& m) const;  // InputError if not a member
};

// Traceless n x n matrices; root vectors are the matrix units E_ij.
MatrixAlgebra matrix_sl(int n);
// sp_2n for the symplectic form <v_i, v_{2n+1-i}> = 1 (i <= n), -1 (i > n).
MatrixAlgebra matrix_sp(int two_n);
// Block embedding of sl_n into sp_2n compatible with that form:
// A acts on v_1..v_n, and -reversed(A^T) on v_{n+1}..v_2n.
QMatrix embed_sl_in_sp(const QMatrix& a);

}  // namespace nilpair
