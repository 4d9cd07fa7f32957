#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "tdlc/rational.hpp"

namespace tdlc {

// Dense matrix over the exact rationals.  Small sizes only; everything is
// computed exactly, no floating point anywhere.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  QMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static QMat identity(std::size_t n);
  static QMat diagonal(const std::vector<Rat>& d);
  static QMat block_diag(const QMat& a, const QMat& b);
  // [[a, r], [0, b]] with r of shape a.rows() x b.cols().
  static QMat block_upper(const QMat& a, const QMat& r, const QMat& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QMat transpose() const;
  Rat trace() const;
  Rat det() const;
  // Throws singular_matrix_error when not invertible.
  QMat inverse() const;
  // Integer powers; negative exponents go through the inverse.
  QMat pow(long long k) const;

  friend QMat operator*(const QMat& a, const QMat& b);
  friend QMat operator+(const QMat& a, const QMat& b);
  friend QMat operator-(const QMat& a, const QMat& b);
  QMat operator*(const Rat& s) const;
  friend bool operator==(const QMat& a, const QMat& b) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace tdlc
