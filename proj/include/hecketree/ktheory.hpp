#pragma once

// Integer linear algebra for K-groups of AF algebras and their crossed
// products by N: Smith normal form, cokernels and kernel ranks, truncated
// Bratteli direct limits, and the (id - alpha)_* step of the
// Pimsner-Voiculescu sequence.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "hecketree/coefficient.hpp"

namespace hecketree {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  /// Row-major literal; throws std::invalid_argument on ragged input.
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                                 std::size_t cols_if_empty = 0);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);

  bool is_diagonal() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V = D with U, V unimodular and D diagonal with d_i | d_{i+1},
/// nonnegative entries.
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  std::size_t rank = 0;
};

/// Pivot: the smallest nonzero absolute value, ties broken by row-major
/// position, so U and V are reproducible.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Fraction-free (Bareiss) determinant. Throws on non-square input.
Integer determinant(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

/// Z^free_rank + Z/d_1 + ... + Z/d_k with d_i >= 2 and d_i | d_{i+1}.
struct AbelianGroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroupPresentation&,
                         const AbelianGroupPresentation&) = default;
};

/// Cokernel of M : Z^cols -> Z^rows.
AbelianGroupPresentation cokernel(const IntegerMatrix& m);
std::size_t kernel_rank(const IntegerMatrix& m);

struct BratteliDiagram {
  /// Multiplicity vectors n_k of the finite-dimensional levels.
  std::vector<std::vector<Integer>> levels;
  /// maps[k] has shape |levels[k+1]| x |levels[k]|, entries >= 0.
  std::vector<IntegerMatrix> maps;

  /// Throws std::invalid_argument describing the first inconsistency.
  void validate() const;
};

struct LevelReport {
  std::size_t rank = 0;                 // K_0 of the level is Z^rank
  IntegerMatrix composed;               // level 0 -> this level
  AbelianGroupPresentation composed_cokernel;
  std::size_t composed_kernel_rank = 0;
  bool incoming_injective = true;       // the map into this level
};

struct LimitReport {
  std::vector<LevelReport> levels;      // levels 0..K
  bool stabilized = false;
};

/// Finite-stage view of lim (Z^{n_k}, B_k) up to level K. The report is
/// stabilized when K >= 1 and the composed maps into levels K-1 and K have
/// equal cokernels and kernel ranks.
LimitReport truncated_limit(const BratteliDiagram& d, std::size_t K);

struct PvGroups {
  AbelianGroupPresentation k0;
  std::size_t k1_rank = 0;
};

/// (coker(I - alpha), ker(I - alpha)) for a square alpha.
PvGroups pv_k_groups(const IntegerMatrix& alpha_star);

/// Stage version: alpha and the inclusion both map level N to level N+1 and
/// the groups are computed for inclusion - alpha.
PvGroups pv_k_groups(const IntegerMatrix& alpha_star, const IntegerMatrix& inclusion);

}  // namespace hecketree
