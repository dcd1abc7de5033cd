#include "hecketree/ktheory.hpp"

#include <stdexcept>
#include <utility>

namespace hecketree {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                                       std::size_t cols_if_empty) {
  IntegerMatrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw std::invalid_argument("matrix row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(m.cols_));
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not compose");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shapes differ");
  IntegerMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  return os << ']';
}

namespace {

struct Pos {
  std::size_t i, j;
};

// Smallest nonzero |D(i,j)| with i, j >= t, first in row-major order.
bool find_pivot(const IntegerMatrix& d, std::size_t t, Pos& out) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Integer& v = d(i, j);
      if (v == 0) continue;
      const Integer a = abs(v);
      if (!found || a < best) {
        best = a;
        out = {i, j};
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithForm f{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols()), 0};
  IntegerMatrix& D = f.D;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    Pos p{};
    if (!find_pivot(D, t, p)) break;
    D.swap_rows(t, p.i);
    f.U.swap_rows(t, p.i);
    D.swap_cols(t, p.j);
    f.V.swap_cols(t, p.j);
    for (;;) {
      // Clear column t below the pivot; a remainder becomes the new pivot.
      std::size_t swap_row = t;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        const Integer q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0 && (swap_row == t || abs(D(i, t)) < abs(D(swap_row, t)))) swap_row = i;
      }
      if (swap_row != t) {
        D.swap_rows(t, swap_row);
        f.U.swap_rows(t, swap_row);
        continue;
      }
      std::size_t swap_col = t;
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        const Integer q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0 && (swap_col == t || abs(D(t, j)) < abs(D(t, swap_col)))) swap_col = j;
      }
      if (swap_col != t) {
        D.swap_cols(t, swap_col);
        f.V.swap_cols(t, swap_col);
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < D.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < D.cols(); ++j) {
          if (D(i, j) % D(t, t) != 0) {
            D.add_row_multiple(t, i, 1);
            f.U.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      f.U.negate_row(t);
    }
    f.rank = t + 1;
  }
  return f;
}

Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& m) { return smith_normal_form(m).rank; }

std::string AbelianGroupPresentation::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const Integer& d : invariant_factors) append("Z/" + d.get_str());
  return out.empty() ? "0" : out;
}

AbelianGroupPresentation cokernel(const IntegerMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  AbelianGroupPresentation g;
  g.free_rank = m.rows() - f.rank;
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.D(i, i) > 1) g.invariant_factors.push_back(f.D(i, i));
  return g;
}

std::size_t kernel_rank(const IntegerMatrix& m) { return m.cols() - rank(m); }

void BratteliDiagram::validate() const {
  if (levels.empty()) throw std::invalid_argument("Bratteli diagram has no levels");
  if (maps.size() + 1 != levels.size())
    throw std::invalid_argument("Bratteli diagram with " + std::to_string(levels.size()) +
                                " levels needs " + std::to_string(levels.size() - 1) +
                                " maps, got " + std::to_string(maps.size()));
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].empty())
      throw std::invalid_argument("level " + std::to_string(k) + " is empty");
    for (const Integer& n : levels[k])
      if (n <= 0)
        throw std::invalid_argument("level " + std::to_string(k) +
                                    " has a non-positive multiplicity");
  }
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const IntegerMatrix& b = maps[k];
    if (b.rows() != levels[k + 1].size() || b.cols() != levels[k].size())
      throw std::invalid_argument("map " + std::to_string(k) + " has shape " +
                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                                  ", expected " + std::to_string(levels[k + 1].size()) + "x" +
                                  std::to_string(levels[k].size()));
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(i, j) < 0)
          throw std::invalid_argument("map " + std::to_string(k) + " has a negative entry");
  }
}

LimitReport truncated_limit(const BratteliDiagram& d, std::size_t K) {
  d.validate();
  if (K >= d.levels.size())
    throw std::invalid_argument("truncation level " + std::to_string(K) +
                                " exceeds the " + std::to_string(d.levels.size()) +
                                " provided levels");
  LimitReport report;
  IntegerMatrix composed = IntegerMatrix::identity(d.levels[0].size());
  for (std::size_t k = 0; k <= K; ++k) {
    LevelReport level;
    level.rank = d.levels[k].size();
    if (k > 0) {
      composed = d.maps[k - 1] * composed;
      level.incoming_injective = kernel_rank(d.maps[k - 1]) == 0;
    }
    level.composed = composed;
    level.composed_cokernel = cokernel(composed);
    level.composed_kernel_rank = kernel_rank(composed);
    report.levels.push_back(std::move(level));
  }
  if (K >= 1) {
    const LevelReport& a = report.levels[K - 1];
    const LevelReport& b = report.levels[K];
    report.stabilized = a.composed_cokernel == b.composed_cokernel &&
                        a.composed_kernel_rank == b.composed_kernel_rank;
  }
  return report;
}

PvGroups pv_k_groups(const IntegerMatrix& alpha_star) {
  if (!alpha_star.is_square())
    throw std::invalid_argument("square alpha_* expected; use the stage overload");
  const IntegerMatrix m = IntegerMatrix::identity(alpha_star.rows()) - alpha_star;
  return {cokernel(m), kernel_rank(m)};
}

PvGroups pv_k_groups(const IntegerMatrix& alpha_star, const IntegerMatrix& inclusion) {
  const IntegerMatrix m = inclusion - alpha_star;
  return {cokernel(m), kernel_rank(m)};
}

}  // namespace hecketree
