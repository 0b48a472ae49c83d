#ifndef LOCOH_INSTANCES_HPP
#define LOCOH_INSTANCES_HPP

#include "locoh/monomial.hpp"

namespace locoh {

/// Deterministic cross-platform generator (splitmix64).
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next();
  /// Uniform in [0, n).
  int below(int n);
  bool coin() { return (next() & 1) != 0; }
};

enum class InstanceKind { Squarefree, PureGraph, Dim1, GeneralMonomial };

InstanceKind instance_kind_from_string(const std::string& s);
std::string instance_kind_name(InstanceKind k);

/// Reproducible pseudo-random ideal of the requested family. Post-verified:
/// dim1 instances have dim R/I = 1, pure-graph instances are pure of
/// dimension 2.
MonomialIdeal random_instance(InstanceKind kind, int n, uint64_t seed, const Field& f, int max_n = 8);

/// Cohen-Macaulay squarefree instance with a variable outside every minimal
/// prime (complete intersections of variables and cones over simplex
/// skeletons, plus filtered random complexes).
MonomialIdeal random_cm_instance(int n, uint64_t seed, const Field& f);

}  // namespace locoh

#endif
