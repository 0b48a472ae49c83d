#ifndef LOCOH_REDUCTION_HPP
#define LOCOH_REDUCTION_HPP

#include <string>

#include "locoh/cech.hpp"

namespace locoh {

/// One certified step of the reduction: quotient by a ring variable found in
/// Ann H^c intersected with the non-zerodivisor monomials.
struct ReductionStep {
  std::string variable;
  AmbientQuotient ambient_before, ambient_after;
  MonomialIdeal ideal_before, ideal_after;
  int c = 0;
  /// Nonzero window pieces (degree, dim) before and after the step.
  std::vector<std::pair<std::vector<int>, int>> window_before, window_after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  AmbientQuotient final_ambient;
  MonomialIdeal final_ideal;
  int c = 0;
  std::string termination;
};

/// Iteratively replaces (I, J) by (I + rA, J + rA) for a variable r in
/// Ann H^c cap Sigma, recording and verifying each step. Stops when no
/// variable qualifies; non-variable candidates are reported, never used.
ReductionTrace reduce(const AmbientQuotient& a, const MonomialIdeal& i, const EngineOptions& opt = {});

/// Hypotheses of the principal-annihilator corollary: Cohen-Macaulay ambient,
/// dim A/I >= 2, c = dim A - (dim A/I - 1), and Ann cap Sigma nonempty.
bool main1_hypotheses(const AmbientQuotient& a, const MonomialIdeal& i, const EngineOptions& opt = {});

/// Vacuously true when the hypotheses fail; otherwise checks that the
/// annihilator is principal with its generator in Sigma.
bool ann_principal_check(const AmbientQuotient& a, const MonomialIdeal& i, const EngineOptions& opt = {});

/// For the first variable y outside every minimal prime of I, the image of
/// Ann H^c_I(A) in A/yA must land in Q_{I}(A/yA). Vacuously true when no
/// such variable exists or the annihilator is zero.
bool q_containment_check(const AmbientQuotient& a, const MonomialIdeal& i, const EngineOptions& opt = {});

}  // namespace locoh

#endif
