#include "locoh/complex.hpp"

namespace locoh {

VectorSpaceComplex::VectorSpaceComplex(Field f, std::vector<int> dims) : field(f), term_dims(std::move(dims)) {
  for (size_t i = 0; i + 1 < term_dims.size(); ++i)
    differentials.emplace_back(field, term_dims[i + 1], term_dims[i]);
}

void VectorSpaceComplex::validate() const {
  if (differentials.size() + 1 != term_dims.size() && !(term_dims.empty() && differentials.empty()))
    throw Error("complex: differential count does not match term count");
  for (size_t i = 0; i < differentials.size(); ++i) {
    if (differentials[i].cols() != term_dims[i] || differentials[i].rows() != term_dims[i + 1])
      throw Error("complex: differential shape mismatch at " + std::to_string(i));
  }
  for (size_t i = 0; i + 1 < differentials.size(); ++i) {
    if (term_dims[i] == 0 || term_dims[i + 2] == 0) continue;
    if (!(differentials[i + 1] * differentials[i]).is_zero())
      throw Error("complex: d*d != 0 at " + std::to_string(i));
  }
}

std::vector<int> VectorSpaceComplex::cohomology_dims() const {
  validate();
  int n = length();
  std::vector<int> h(n, 0);
  std::vector<int> rk(differentials.size(), 0);
  for (size_t i = 0; i < differentials.size(); ++i) rk[i] = differentials[i].rank();
  for (int i = 0; i < n; ++i) {
    int out = i < static_cast<int>(rk.size()) ? rk[i] : 0;
    int in = i > 0 ? rk[i - 1] : 0;
    h[i] = term_dims[i] - out - in;
    if (h[i] < 0) throw Error("complex: negative cohomology dimension (corrupt complex)");
  }
  return h;
}

long VectorSpaceComplex::euler_characteristic() const {
  long e = 0;
  for (int i = 0; i < length(); ++i) e += (i % 2 == 0 ? 1 : -1) * term_dims[i];
  return e;
}

std::vector<Scalar> CohomologySpace::project(const std::vector<Scalar>& cocycle) const {
  if (dim == 0) return {};
  auto y = solver.solve(cocycle);
  if (!y) throw Error("cohomology projection: vector is not a cocycle in the span");
  std::vector<Scalar> out(y->end() - dim, y->end());
  return out;
}

CohomologySpace cohomology_space(const Field& f, int dim, const Matrix& d_in, const Matrix& d_out) {
  CohomologySpace cs;
  cs.ambient_dim = dim;
  Matrix ker = d_out.rows() == 0 || d_out.cols() == 0 ? Matrix::identity(f, dim) : d_out.kernel_basis();
  Matrix img(f, dim, 0);
  if (d_in.rows() == dim && d_in.cols() > 0) {
    std::vector<int> ic = d_in.independent_cols();
    img = d_in.cols_slice(ic);
  }
  // Extend the image basis to a basis of the kernel; the added kernel columns
  // represent cohomology classes.
  Matrix stacked = Matrix::hcat(img, ker);
  std::vector<int> indep = stacked.independent_cols();
  std::vector<int> rep_cols;
  for (int c : indep)
    if (c >= img.cols()) rep_cols.push_back(c - img.cols());
  cs.reps = ker.cols_slice(rep_cols);
  cs.dim = cs.reps.cols();
  cs.span = Matrix::hcat(img, cs.reps);
  cs.solver = LinearSolver(cs.span);
  return cs;
}

}  // namespace locoh
