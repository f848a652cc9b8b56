#ifndef GIM_MATRIX_HPP
#define GIM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "gim/interval.hpp"
#include "gim/rational.hpp"

namespace gim {

/*
 * Dense rectangular grid with value semantics. The 0x0 grid is legal; it
 * appears as the result of deleting all rows and columns and its determinant
 * is defined to be 1.
 */
template <typename T>
class Grid {
 public:
  Grid() : rows_(0), cols_(0) {}

  Grid(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {
    if ((rows == 0) != (cols == 0))
      throw std::invalid_argument("Grid: degenerate shape " +
                                  std::to_string(rows) + "x" +
                                  std::to_string(cols));
  }

  static Grid from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    Grid g;
    g.rows_ = rows.size();
    for (const auto& row : rows) {
      if (g.cols_ == 0) g.cols_ = row.size();
      if (row.size() != g.cols_)
        throw std::invalid_argument("Grid::from_rows: ragged rows");
      g.cells_.insert(g.cells_.end(), row.begin(), row.end());
    }
    if (g.rows_ > 0 && g.cols_ == 0)
      throw std::invalid_argument("Grid::from_rows: empty row");
    return g;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return cells_[i * cols_ + j];
  }

  T& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  bool operator==(const Grid& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           cells_ == other.cells_;
  }
  bool operator!=(const Grid& other) const { return !(*this == other); }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("Grid: index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") outside " +
                              std::to_string(rows_) + "x" +
                              std::to_string(cols_));
  }

  std::size_t rows_, cols_;
  std::vector<T> cells_;
};

/// General closed interval matrix: a grid of closed connected sets.
using GIMatrix = Grid<GInterval>;
/// Real (completion) matrix with exact rational entries.
using RMatrix = Grid<Rational>;

/// Cell position, 0-based (row, col).
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  bool operator==(const Cell&) const = default;
};

/// True iff every entry of a lies in the corresponding set of mu.
/// Throws std::invalid_argument on dimension mismatch.
bool contains(const GIMatrix& mu, const RMatrix& a);

/// Replace every (-inf,+inf) entry by the constant 0.
GIMatrix zero_unbounded(const GIMatrix& mu);

/// Replace every half-bounded entry by its finite endpoint:
/// [a,+inf) -> a, (-inf,b] -> b. Other entries untouched.
GIMatrix pin_half_bounded(const GIMatrix& mu);

/// Replace every bounded entry [a,b] by its lower endpoint a.
GIMatrix take_left(const GIMatrix& mu);

/// Replace every bounded entry [a,b] by its upper endpoint b.
GIMatrix take_right(const GIMatrix& mu);

/// Submatrix after removing the listed rows and columns (0-based, duplicates
/// ignored). Removing everything yields the legal 0x0 matrix.
/// Throws std::out_of_range on an out-of-range index.
GIMatrix erase_rows_cols(const GIMatrix& mu, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols);
RMatrix erase_rows_cols(const RMatrix& a, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols);

/// Submatrix keeping exactly the listed rows and columns, in the given order.
GIMatrix submatrix(const GIMatrix& mu, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols);

GIMatrix transpose(const GIMatrix& mu);
RMatrix transpose(const RMatrix& a);

/// All entries Constant or Bounded (a classical interval matrix)?
bool is_classical(const GIMatrix& mu);
/// Any entry of the given predicate class?
bool has_unbounded(const GIMatrix& mu);
bool has_half_bounded(const GIMatrix& mu);

/// Positions of all entries equal to (-inf,+inf), row-major order.
std::vector<Cell> unbounded_cells(const GIMatrix& mu);
/// Positions of all half-bounded entries, row-major order.
std::vector<Cell> half_bounded_cells(const GIMatrix& mu);
/// Positions of all bounded (nondegenerate) entries, row-major order.
std::vector<Cell> bounded_cells(const GIMatrix& mu);

/// Collapse an all-constant interval matrix to a real matrix.
/// Throws std::invalid_argument if any entry is nonconstant.
RMatrix to_rmatrix(const GIMatrix& mu);

/// Lift a real matrix to the interval matrix of its point entries.
GIMatrix to_gimatrix(const RMatrix& a);

}  // namespace gim

#endif  // GIM_MATRIX_HPP
