#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exalg/rational.hpp"

namespace exalg {

using QVector = std::vector<Rational>;

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector column(std::size_t j) const;
  QMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  QMatrix operator*(const QMatrix& b) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator+(const QMatrix& b) const;
  QMatrix operator-(const QMatrix& b) const;
  QMatrix operator*(const Rational& s) const;
  QMatrix operator-() const;
  bool operator==(const QMatrix& b) const;
  bool operator!=(const QMatrix& b) const { return !(*this == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& a);

std::size_t rank(QMatrix a);

// Columns form a basis of {v : a v = 0}.
QMatrix nullspace(const QMatrix& a);

std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// Throws ZeroDeterminant when singular.
QMatrix inverse(const QMatrix& a);

Rational determinant(QMatrix a);

// dim(span(cols of a) + span(cols of b))
std::size_t joint_rank(const QMatrix& a, const QMatrix& b);

QMatrix hconcat(const QMatrix& a, const QMatrix& b);

}  // namespace exalg
