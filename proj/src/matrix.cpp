#include "locoh/matrix.hpp"

namespace locoh {

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Matrix r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  if (!f_.rational())
    for (auto& x : r.a_) x = f_.reduce(x);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("matrix apply shape mismatch");
  std::vector<Scalar> r(rows_, Scalar(0));
  for (int i = 0; i < rows_; ++i) {
    Scalar s(0);
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
    r[i] = f_.reduce(s);
  }
  return r;
}

Matrix Matrix::cols_slice(const std::vector<int>& idx) const {
  Matrix r(f_, rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < r.cols_; ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("hcat shape mismatch");
  Matrix r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

namespace {

// In-place Gaussian elimination to reduced row echelon form.
// Pivot choice prefers entries with small numerator/denominator to limit
// coefficient growth on the incidence-style matrices that dominate here.
void rref_inplace(Matrix& m, const Field& f, std::vector<int>& pivots, Matrix* ops) {
  pivots.clear();
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int best = -1;
    size_t best_size = 0;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      size_t sz = mpz_size(m.at(i, col).get_num().get_mpz_t()) +
                  mpz_size(m.at(i, col).get_den().get_mpz_t());
      bool unit = m.at(i, col) == 1 || m.at(i, col) == -1;
      if (best == -1 || (unit && best_size > 2) || (!unit && sz < best_size)) {
        best = i;
        best_size = unit ? 2 : sz;
        if (unit) break;
      }
    }
    if (best == -1) continue;
    if (best != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(best, j));
      if (ops)
        for (int j = 0; j < ops->cols(); ++j) std::swap(ops->at(row, j), ops->at(best, j));
    }
    Scalar piv_inv = f.inv(m.at(row, col));
    if (piv_inv != 1) {
      for (int j = col; j < m.cols(); ++j)
        if (m.at(row, j) != 0) m.at(row, j) = f.mul(m.at(row, j), piv_inv);
      if (ops)
        for (int j = 0; j < ops->cols(); ++j)
          if (ops->at(row, j) != 0) ops->at(row, j) = f.mul(ops->at(row, j), piv_inv);
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Scalar c = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (m.at(row, j) != 0) m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
      if (ops)
        for (int j = 0; j < ops->cols(); ++j)
          if (ops->at(row, j) != 0) ops->at(i, j) = f.sub(ops->at(i, j), f.mul(c, ops->at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
}

}  // namespace

int Matrix::rank() const {
  Matrix m = *this;
  std::vector<int> pivots;
  rref_inplace(m, f_, pivots, nullptr);
  return static_cast<int>(pivots.size());
}

Matrix Matrix::kernel_basis() const {
  Matrix m = *this;
  std::vector<int> pivots;
  rref_inplace(m, f_, pivots, nullptr);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(f_, cols_, static_cast<int>(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int fc = free_cols[fi];
    k.at(fc, static_cast<int>(fi)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      k.at(pivots[r], static_cast<int>(fi)) = f_.neg(m.at(static_cast<int>(r), fc));
  }
  return k;
}

std::vector<int> Matrix::independent_cols() const {
  Matrix m = *this;
  std::vector<int> pivots;
  rref_inplace(m, f_, pivots, nullptr);
  return pivots;
}

LinearSolver::LinearSolver(const Matrix& a)
    : f_(a.field()), rows_(a.rows()), cols_(a.cols()), rref_(a), ops_(Matrix::identity(a.field(), a.rows())) {
  rref_inplace(rref_, f_, pivots_, &ops_);
}

std::optional<std::vector<Scalar>> LinearSolver::solve(const std::vector<Scalar>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw Error("solver rhs size mismatch");
  std::vector<Scalar> u = ops_.apply(b);
  std::vector<Scalar> x(cols_, Scalar(0));
  for (size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = u[r];
  // Zero rows of the RREF must see a zero rhs; pivot rows are then satisfied
  // exactly with the free variables at zero.
  for (int r = static_cast<int>(pivots_.size()); r < rows_; ++r)
    if (u[r] != 0) return std::nullopt;
  return x;
}

}  // namespace locoh
