#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "qcurve/rational.hpp"

namespace qcurve {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix scalar(std::size_t n, const Rational& s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const;
  void setBlock(std::size_t row, std::size_t col, const RationalMatrix& m);

  /// Reduced row echelon form; `pivots` receives the pivot columns.
  RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  bool isInvertible() const { return isSquare() && rank() == rows_; }
  /// Throws InvalidInput when singular.
  RationalMatrix inverse() const;
  /// Columns form a basis of the right null space.
  RationalMatrix nullspace() const;
  /// Some x with (*this) x = b, or nullopt when inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& m);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace qcurve
