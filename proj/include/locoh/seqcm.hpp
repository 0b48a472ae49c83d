#ifndef LOCOH_SEQCM_HPP
#define LOCOH_SEQCM_HPP

#include "locoh/resolutions.hpp"

namespace locoh {

/// Dimension filtration of R/J: levels[k+1] = U_k, the intersection of the
/// primary components of J of dimension > k (the unit ideal when none),
/// so that M_k = U_k/J is the largest submodule of dimension <= k.
struct DimensionFiltration {
  MonomialIdeal base;                 // J
  std::vector<MonomialIdeal> levels;  // U_{-1} .. U_d
  int d = 0;

  const MonomialIdeal& u(int k) const { return levels[static_cast<size_t>(k + 1)]; }
};

DimensionFiltration dimension_filtration(const MonomialIdeal& j);

/// Every filtration quotient M_k/M_{k-1} with k >= i is zero or a
/// k-dimensional Cohen-Macaulay module.
bool is_partially_scm(const MonomialIdeal& j, int i);
bool is_sequentially_cm(const MonomialIdeal& j);

/// Duval's skeleton criterion on the Stanley-Reisner complex; agrees with
/// is_sequentially_cm on squarefree ideals and serves as its oracle.
bool duval_cross_check(const MonomialIdeal& i);

}  // namespace locoh

#endif
