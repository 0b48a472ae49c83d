#ifndef LOCOH_SIMPLICIAL_HPP
#define LOCOH_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "locoh/complex.hpp"

namespace locoh {

/// Simplicial complex on the vertex set {0, ..., n-1}, stored by facets as
/// bitmasks. Two degenerate values are distinct and both representable:
///   - the void complex (no faces at all): empty facet list;
///   - the irrelevant complex (only the empty face): facet list {0}.
struct SimplicialComplex {
  int n = 0;
  std::vector<uint32_t> facets;  // inclusion-maximal, sorted ascending

  static SimplicialComplex void_complex(int n) { return {n, {}}; }
  static SimplicialComplex irrelevant(int n) { return {n, {0u}}; }
  static SimplicialComplex full_simplex(int n);
  /// Complex generated by the given faces (facets = maximal ones).
  static SimplicialComplex generated_by(int n, std::vector<uint32_t> faces);

  bool is_void() const { return facets.empty(); }
  bool is_irrelevant() const { return facets.size() == 1 && facets[0] == 0; }

  /// Dimension; -1 for the irrelevant complex, -2 as a sentinel for void.
  int dim() const;

  bool has_face(uint32_t s) const;

  /// All faces grouped by cardinality: result[k] = faces with k vertices,
  /// sorted. result[0] = {empty face} unless the complex is void.
  std::vector<std::vector<uint32_t>> faces_by_size() const;

  bool is_pure() const;

  /// Number of connected components of the underlying space (0 when there
  /// are no vertices).
  int components() const;

  bool operator==(const SimplicialComplex& o) const { return n == o.n && facets == o.facets; }
};

SimplicialComplex link(const SimplicialComplex& d, uint32_t sigma);
SimplicialComplex induced_subcomplex(const SimplicialComplex& d, uint32_t verts);
SimplicialComplex pure_skeleton(const SimplicialComplex& d, int i);
SimplicialComplex alexander_dual(const SimplicialComplex& d);

/// Inclusion-minimal non-faces (empty list for the full simplex; {0} for void).
std::vector<uint32_t> minimal_nonfaces(const SimplicialComplex& d);

/// dim_F of reduced simplicial cohomology in degree j. Conventions: the
/// irrelevant complex has H~^{-1} = F; the void complex has none at all.
int reduced_cohomology_dim(const SimplicialComplex& d, int j, const Field& f);

/// Reisner criterion: every link (including the whole complex) has vanishing
/// reduced cohomology below its dimension.
bool is_cm(const SimplicialComplex& d, const Field& f);

/// Signed coboundary matrix between consecutive face lists of one complex:
/// rows = faces in `hi` (size k+1), cols = faces in `lo` (size k).
Matrix coboundary_matrix(const Field& f, const std::vector<uint32_t>& lo, const std::vector<uint32_t>& hi);

/// Reduced cohomology dimensions, indexed by degree j = -1 .. top, of the
/// complex generated by the given (64-bit) vertex sets. Vertex universe size
/// `nverts` may exceed the 32-bit complex limit; `face_cap` bounds the face
/// enumeration. Returns dims for j in [-1, nverts-1] shifted by one:
/// result[j+1] = dim H~^j.
std::vector<int> union_reduced_cohomology(const Field& f, int nverts, const std::vector<uint64_t>& gen_faces,
                                          size_t face_cap);

}  // namespace locoh

#endif
