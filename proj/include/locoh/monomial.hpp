#ifndef LOCOH_MONOMIAL_HPP
#define LOCOH_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "locoh/field.hpp"
#include "locoh/simplicial.hpp"

namespace locoh {

/// Exponent vector of a monomial; length = number of ring variables.
using Expo = std::vector<int>;

struct PolyRingContext {
  Field field;
  std::vector<std::string> names;

  PolyRingContext() = default;
  PolyRingContext(Field f, std::vector<std::string> vars);

  int n() const { return static_cast<int>(names.size()); }
  bool operator==(const PolyRingContext& o) const { return field == o.field && names == o.names; }

  /// Default ring Q[x1..xn] or F_p[x1..xn].
  static PolyRingContext standard(int n, Field f);
};

bool divides(const Expo& a, const Expo& b);  // x^a | x^b
Expo lcm_expo(const Expo& a, const Expo& b);
Expo gcd_expo(const Expo& a, const Expo& b);
uint32_t support_mask(const Expo& a);
bool is_squarefree_expo(const Expo& a);

std::string format_monomial(const PolyRingContext& r, const Expo& e);
Expo parse_monomial(const PolyRingContext& r, const std::string& text);

/// Monomial ideal given by its unique minimal generating set.
/// The unit ideal is represented by the single generator 1 (all exponents 0);
/// the zero ideal by an empty generator list.
struct MonomialIdeal {
  PolyRingContext ring;
  std::vector<Expo> gens;  // divisibility-minimal, sorted

  MonomialIdeal() = default;
  static MonomialIdeal make(const PolyRingContext& r, std::vector<Expo> gens);
  static MonomialIdeal zero(const PolyRingContext& r) { return make(r, {}); }
  static MonomialIdeal unit(const PolyRingContext& r) { return make(r, {Expo(static_cast<size_t>(r.n()), 0)}); }
  static MonomialIdeal maximal(const PolyRingContext& r);
  static MonomialIdeal from_vars(const PolyRingContext& r, uint32_t vars);

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;
  bool contains(const Expo& m) const;      // membership of a monomial
  bool contains(const MonomialIdeal& o) const;  // o subseteq this
  bool operator==(const MonomialIdeal& o) const { return ring == o.ring && gens == o.gens; }

  std::vector<std::string> format() const;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

/// Minimal primes as variable masks (minimal covers of the generator supports).
std::vector<uint32_t> minimal_primes(const MonomialIdeal& i);

int dimension(const MonomialIdeal& i);  // dim R/I
int height(const MonomialIdeal& i);

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& i);

/// Irredundant primary decomposition: irreducible components grouped by
/// radical and merged by intersection.
struct PrimaryComponent {
  uint32_t prime;  // radical, as a variable mask
  MonomialIdeal component;
};
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& i);

MonomialIdeal stanley_reisner(const SimplicialComplex& d, const PolyRingContext& r);
SimplicialComplex to_complex(const MonomialIdeal& i);

/// Monomial preimage of the non-zerodivisors of (R/J)/I(R/J): the variables
/// outside every minimal prime of I+J. A monomial lies in Sigma iff its
/// support is inside the returned mask.
struct SigmaSet {
  uint32_t allowed_variables;
};
SigmaSet sigma_set(const MonomialIdeal& i, const MonomialIdeal& ambient_j);

/// Q_{I}(R/J): intersection of the top-dimensional primary components of J
/// whose primes P satisfy dim R/(I+P) = 0; the unit ideal when none qualify.
MonomialIdeal q_ideal(const MonomialIdeal& i, const MonomialIdeal& j);

/// Image of the ideal in the subring on the kept variables: generators whose
/// support meets a dropped variable map to zero and are discarded.
MonomialIdeal project_to_vars(const MonomialIdeal& i, uint32_t keep, const PolyRingContext& sub);

}  // namespace locoh

#endif
