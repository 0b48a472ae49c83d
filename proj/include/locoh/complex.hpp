#ifndef LOCOH_COMPLEX_HPP
#define LOCOH_COMPLEX_HPP

#include <vector>

#include "locoh/matrix.hpp"

namespace locoh {

/// Finite complex of vector spaces in cohomological convention: the stored
/// differential d[i] maps term i to term i+1 and d[i+1] * d[i] = 0.
struct VectorSpaceComplex {
  Field field;
  std::vector<int> term_dims;
  std::vector<Matrix> differentials;  // differentials[i] : term i -> term i+1

  VectorSpaceComplex() = default;
  VectorSpaceComplex(Field f, std::vector<int> dims);

  int length() const { return static_cast<int>(term_dims.size()); }

  /// Throws unless shapes match and d compose to zero.
  void validate() const;

  /// h^i for every term; validates first.
  std::vector<int> cohomology_dims() const;

  /// Signed dimension count; equals the signed cohomology count.
  long euler_characteristic() const;
};

/// Cohomology at one spot of a complex, with an explicit basis of
/// representatives and a projection onto cohomology coordinates.
struct CohomologySpace {
  int dim = 0;
  int ambient_dim = 0;
  Matrix reps;  // ambient_dim x dim cocycle representatives
  // project() solves [image_basis | reps] y = v and returns the reps part.
  Matrix span;  // ambient_dim x (image_dim + dim)
  LinearSolver solver;

  /// Coordinates of a cocycle's class in the chosen basis.
  std::vector<Scalar> project(const std::vector<Scalar>& cocycle) const;
};

/// Cohomology basis at the middle term of  prev --d_in--> cur --d_out--> cur+1.
/// Pass empty matrices (0 x dim / dim x 0) for missing ends.
CohomologySpace cohomology_space(const Field& f, int dim, const Matrix& d_in, const Matrix& d_out);

}  // namespace locoh

#endif
