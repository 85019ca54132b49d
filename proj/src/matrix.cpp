#include "qcurve/matrix.hpp"

#include <utility>

#include "qcurve/errors.hpp"

namespace qcurve {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InvalidInput("matrix entry count does not match shape");
}

RationalMatrix RationalMatrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

RationalMatrix RationalMatrix::scalar(std::size_t n, const Rational& s) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix RationalMatrix::block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) throw InvalidInput("block out of range");
  RationalMatrix b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(row + r, col + c);
  }
  return b;
}

void RationalMatrix::setBlock(std::size_t row, std::size_t col, const RationalMatrix& m) {
  if (row + m.rows_ > rows_ || col + m.cols_ > cols_) throw InvalidInput("block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r) {
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(row + r, col + c) = m(r, c);
  }
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivots) const {
  RationalMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t r = lead;
    while (r < rows_ && m(r, c).isZero()) ++r;
    if (r == rows_) continue;
    if (r != lead) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(r, k), m(lead, k));
    }
    const Rational inv = m(lead, c).inverse();
    for (std::size_t k = c; k < cols_; ++k) m(lead, k) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead || m(i, c).isZero()) continue;
      const Rational f = m(i, c);
      for (std::size_t k = c; k < cols_; ++k) m(i, k) -= f * m(lead, k);
    }
    piv.push_back(c);
    ++lead;
  }
  if (pivots != nullptr) *pivots = std::move(piv);
  return m;
}

std::size_t RationalMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

RationalMatrix RationalMatrix::inverse() const {
  if (!isSquare()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  aug.setBlock(0, 0, *this);
  aug.setBlock(0, n, identity(n));
  std::vector<std::size_t> piv;
  const RationalMatrix red = aug.rref(&piv);
  if (piv.size() < n || piv[n - 1] >= n) throw InvalidInput("matrix is singular");
  return red.block(0, n, n, n);
}

RationalMatrix RationalMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  const RationalMatrix red = rref(&piv);
  std::vector<bool> isPivot(cols_, false);
  for (auto p : piv) isPivot[p] = true;
  std::vector<std::size_t> freeCols;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!isPivot[c]) freeCols.push_back(c);
  }
  RationalMatrix basis(cols_, freeCols.size());
  for (std::size_t j = 0; j < freeCols.size(); ++j) {
    basis(freeCols[j], j) = Rational(1);
    for (std::size_t i = 0; i < piv.size(); ++i) basis(piv[i], j) = -red(i, freeCols[j]);
  }
  return basis;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (b.size() != rows_) throw InvalidInput("right-hand side has wrong length");
  RationalMatrix aug(rows_, cols_ + 1);
  aug.setBlock(0, 0, *this);
  for (std::size_t r = 0; r < rows_; ++r) aug(r, cols_) = b[r];
  std::vector<std::size_t> piv;
  const RationalMatrix red = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  std::vector<Rational> x(cols_, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, cols_);
  return x;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix shapes do not compose");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.isZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).isZero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix shapes differ");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return a + Rational(-1) * b; }

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix out = m;
  for (auto& e : out.entries_) e *= s;
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << "]";
}

}  // namespace qcurve
