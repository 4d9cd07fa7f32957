#include "tdlc/matrix.hpp"

#include "tdlc/errors.hpp"

namespace tdlc {

QMat::QMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw input_error("ragged matrix literal");
    for (const auto& x : row) a_.push_back(x);
  }
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::diagonal(const std::vector<Rat>& d) {
  QMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

QMat QMat::block_diag(const QMat& a, const QMat& b) {
  QMat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

QMat QMat::block_upper(const QMat& a, const QMat& r, const QMat& b) {
  if (r.rows() != a.rows() || r.cols() != b.cols())
    throw input_error("block_upper: off-diagonal block has wrong shape");
  QMat m = block_diag(a, b);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) m.at(i, a.cols() + j) = r.at(i, j);
  return m;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rat QMat::trace() const {
  if (!is_square()) throw input_error("trace of a non-square matrix");
  Rat t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Rat QMat::det() const {
  if (!is_square()) throw input_error("det of a non-square matrix");
  QMat m = *this;
  const std::size_t n = rows_;
  Rat d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m.at(piv, c) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / m.at(c, c);
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

QMat QMat::inverse() const {
  if (!is_square()) throw input_error("inverse of a non-square matrix");
  const std::size_t n = rows_;
  QMat m = *this;
  QMat inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m.at(piv, c) == 0) ++piv;
    if (piv == n) throw singular_matrix_error("matrix is singular");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    Rat f = m.at(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m.at(c, j) /= f;
      inv.at(c, j) /= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m.at(i, c) == 0) continue;
      Rat g = m.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) -= g * m.at(c, j);
        inv.at(i, j) -= g * inv.at(c, j);
      }
    }
  }
  return inv;
}

QMat QMat::pow(long long k) const {
  if (!is_square()) throw input_error("pow of a non-square matrix");
  QMat base = k >= 0 ? *this : inverse();
  unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                : static_cast<unsigned long long>(-k);
  QMat acc = identity(rows_);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols_ != b.rows_) throw input_error("matrix product shape mismatch");
  QMat m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw input_error("matrix sum shape mismatch");
  QMat m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

QMat operator-(const QMat& a, const QMat& b) { return a + b * Rat(-1); }

QMat QMat::operator*(const Rat& s) const {
  QMat m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

}  // namespace tdlc
