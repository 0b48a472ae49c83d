#ifndef LOCOH_RESOLUTIONS_HPP
#define LOCOH_RESOLUTIONS_HPP

#include "locoh/monomial.hpp"

namespace locoh {

/// Taylor complex on the minimal generators of a monomial ideal, kept as the
/// lcm table over subsets. Materializing matrices is only allowed at small
/// generator counts; large ideals go through the per-multidegree strands.
struct TaylorComplex {
  MonomialIdeal ideal;
  int r = 0;
  std::vector<Expo> lcms;  // indexed by generator subset mask, size 2^r

  static TaylorComplex build(const MonomialIdeal& j, int max_gens = 12);

  /// Differential sign of dropping generator `i` from subset `mask`.
  static int drop_sign(uint32_t mask, int i);

  /// The complex T tensor k: homological terms dims[t] = C(r, t) with
  /// matrices d[t] : t -> t-1 whose entries are the unit lcm-ratio signs.
  void tensor_k(std::vector<int>& dims, std::vector<Matrix>& d) const;

  /// Scalarization of the full Taylor differential at one multidegree:
  /// spots are subsets with lcm dividing alpha... kept for the d*d = 0 check.
  Matrix scalarized_differential(int t, const Expo& alpha) const;
};

/// All lcms of nonempty generator subsets (closure under lcm), sorted.
std::vector<Expo> lcm_lattice(const MonomialIdeal& j, size_t cap = 200000);

/// Total Betti numbers beta_p(R/J) for p = 0..n, Taylor-strand route.
std::vector<int> betti_numbers(const MonomialIdeal& j);

/// Literal small-scale route (homology of the full T tensor k); tests only.
std::vector<int> betti_numbers_literal(const MonomialIdeal& j, int max_gens = 12);

int pd(const MonomialIdeal& j);
int depth_ring(const MonomialIdeal& j);
bool is_cm_ring(const MonomialIdeal& j);

/// Hochster-formula Betti contribution of a squarefree ideal at (p, sigma):
/// dim H~^{|sigma|-p-2} of the induced subcomplex on sigma. Summing over
/// sigma at fixed p gives beta_{p+1}(R/I).
int hochster_betti(const MonomialIdeal& i, int p, uint32_t sigma);

/// Depth of the subquotient J1/J2 for monomial ideals J2 strictly inside J1
/// (J1 may be the unit ideal, giving depth of R/J2).
int depth_pair(const MonomialIdeal& j1, const MonomialIdeal& j2);

/// Total dimensions of Tor_p(k, J1/J2), the engine behind depth_pair.
std::vector<int> tor_pair_dims(const MonomialIdeal& j1, const MonomialIdeal& j2);

}  // namespace locoh

#endif
