#ifndef LOCOH_CECH_HPP
#define LOCOH_CECH_HPP

#include <cstdint>

#include "locoh/complex.hpp"
#include "locoh/monomial.hpp"

namespace locoh {

struct EngineOptions {
  int workers = 1;
  int straightness_samples = 50;
  int literal_check_cap = 10;  // max generator count for literal Cech cross-checks
  int direct_subset_cap = 14;  // max compressed generators in quotient ambients
  uint64_t check_seed = 0xC0FFEEULL;
  bool run_checks = true;
  int scan_lo = -2, scan_hi = 1;  // Bass scan box
};

/// Ambient ring A = k[vars]/J with J a squarefree monomial ideal none of
/// whose minimal generators is a single variable (quotients by variables are
/// represented by shrinking the ring instead).
struct AmbientQuotient {
  PolyRingContext ring;
  MonomialIdeal relations;  // proper or zero

  static AmbientQuotient polynomial(const PolyRingContext& r);
  static AmbientQuotient make(const PolyRingContext& r, const MonomialIdeal& j);

  bool polynomial_like() const { return relations.is_zero(); }
  int dim() const;

  bool operator==(const AmbientQuotient& o) const { return ring == o.ring && relations == o.relations; }
};

/// Quotient A/x_v A re-expressed over the smaller ring, together with the
/// image of a carried ideal.
struct VariableQuotient {
  AmbientQuotient ambient;
  MonomialIdeal ideal;
  std::string dropped;
};
VariableQuotient quotient_by_variable(const AmbientQuotient& a, const MonomialIdeal& i, int var);

/// Degree window coding: beta in {-1,0,1}^m <-> code = sum (beta_j+1) 3^j.
long window_size(int m);
long window_code(const std::vector<int>& beta);
std::vector<int> window_decode(long code, int m);
std::vector<int> clamp_degree(const std::vector<int>& gamma);

/// The literal Cech complex of A with respect to the minimal generators of I,
/// scalarized at one multidegree. Terms are indexed by the number of chosen
/// generators.
VectorSpaceComplex cech_complex_at_degree(const AmbientQuotient& a, const MonomialIdeal& i,
                                          const std::vector<int>& beta, int max_gens = 12);

/// One graded piece and the basis data needed to push maps through it.
struct WindowPiece {
  int dim = 0;
  std::vector<uint32_t> cells;  // nerve faces or Cech subsets carrying C^q
  CohomologySpace coh;
};

/// Finite presentation of H_I^i(A) on the degree window {-1,0,1}^m: all
/// pieces plus the multiplication-by-variable maps between adjacent window
/// degrees. Multiplication is an isomorphism everywhere outside the window;
/// construction verifies this by sampling ("window completeness").
struct WindowedModule {
  AmbientQuotient ambient;
  MonomialIdeal ideal;
  int coh_index = 0;
  int m = 0;

  std::vector<WindowPiece> pieces;     // indexed by window code
  std::vector<Matrix> step_maps;       // index code*m + j, for beta_j in {-1,0}
  std::vector<uint8_t> step_iso;       // same indexing: map is an isomorphism

  int dim_at_code(long code) const { return pieces[static_cast<size_t>(code)].dim; }
  int dim_at(const std::vector<int>& gamma) const;  // clamps first
  const Matrix& step(long code, int j) const;
  bool is_zero() const;
  std::vector<int> piece_dims() const;
};

WindowedModule windowed_module(const AmbientQuotient& a, const MonomialIdeal& i, int coh_index,
                               const EngineOptions& opt = {});

/// Piece dimensions only (no maps, no checks); the cheap scan behind
/// cohomological_dimension.
std::vector<int> window_piece_dims(const AmbientQuotient& a, const MonomialIdeal& i, int coh_index,
                                   const EngineOptions& opt = {});

int cohomological_dimension(const AmbientQuotient& a, const MonomialIdeal& i, const EngineOptions& opt = {});

/// Monomial annihilator ideal of a nonzero windowed module.
MonomialIdeal annihilator(const WindowedModule& n);

/// Verdict of a single candidate exponent vector (exported for the
/// stabilization property test).
bool annihilator_candidate_holds(const WindowedModule& n, const Expo& b);

WindowedModule localize_at_variable(const WindowedModule& n, int j);

/// Degreewise kernel and cokernel dimensions of N -> N_{x_j} over the window.
std::pair<std::vector<int>, std::vector<int>> h0_h1_principal(const WindowedModule& n, int j);

bool supported_only_at_max(const WindowedModule& n);

}  // namespace locoh

#endif
