#ifndef LOCOH_MATRIX_HPP
#define LOCOH_MATRIX_HPP

#include <optional>
#include <vector>

#include "locoh/field.hpp"

namespace locoh {

/// Dense matrix over an exact field. Desk-scale dimensions; row-major storage.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(Field f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Scalar(0)) {}

  static Matrix identity(Field f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  void set(int i, int j, const Scalar& v) { at(i, j) = f_.reduce(v); }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // this * v

  Matrix cols_slice(const std::vector<int>& idx) const;
  static Matrix hcat(const Matrix& a, const Matrix& b);

  int rank() const;

  /// Basis of the right null space; columns are kernel vectors. Deterministic.
  Matrix kernel_basis() const;

  /// Indices of a maximal set of linearly independent columns (leftmost-greedy).
  std::vector<int> independent_cols() const;

 private:
  Field f_;
  int rows_, cols_;
  std::vector<Scalar> a_;

  friend class LinearSolver;
};

/// Row-reduces A once and answers A x = b queries repeatedly.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& a);
  LinearSolver() = default;

  /// Returns x with A x = b, or nullopt if inconsistent. If the system is
  /// underdetermined, free variables are set to zero.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  Field f_;
  int rows_ = 0, cols_ = 0;
  Matrix rref_;           // reduced row echelon form of A
  Matrix ops_;            // row-operation matrix: ops_ * A = rref_
  std::vector<int> pivots_;  // pivot column per pivot row
};

}  // namespace locoh

#endif
