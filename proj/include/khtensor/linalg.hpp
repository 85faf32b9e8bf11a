#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra: matrices, row reduction, incremental
 * echelon bases.
 */

#include <optional>
#include <string>
#include <vector>

#include "khtensor/scalar.hpp"

namespace kht {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Scalar& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  Vec row(int r) const;
  Vec column(int c) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;

  Matrix operator*(const Matrix& o) const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);
/// Basis of {x : A x = 0}.
std::vector<Vec> nullspace(const Matrix& a);
/// Some x with A x = b, if one exists.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/**
 * Incrementally built row space in semi-echelon form.  Each stored row has
 * a distinct pivot and vanishes at the pivots of all earlier rows, so a
 * single forward sweep reduces any vector.  When tracking is enabled the
 * combination of inserted vectors producing each row is kept, which lets
 * express() return coordinates relative to the inserted vectors.
 */
class Echelon {
 public:
  explicit Echelon(int dim, bool track = false) : dim_(dim), track_(track) {}

  int dim() const noexcept { return dim_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  int inserted() const noexcept { return inserted_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }
  const std::vector<Vec>& rows() const noexcept { return rows_; }

  /// Adds v; returns true when it enlarged the span.  Dependent vectors
  /// are discarded and do not count as inserted.
  bool add(const Vec& v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Coefficients relative to rows(), if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Coefficients c with sum c_j * (j-th inserted vector) = v.
  std::optional<Vec> express(const Vec& v) const;

 private:
  int dim_;
  bool track_;
  int inserted_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
  std::vector<Vec> combos_;
};

}  // namespace kht
