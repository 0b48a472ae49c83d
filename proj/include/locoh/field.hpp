#ifndef LOCOH_FIELD_HPP
#define LOCOH_FIELD_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace locoh {

/// Error type for all precondition violations and engine failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

using Scalar = mpq_class;

/// Coefficient field: exact rationals (characteristic 0) or a prime field F_p.
/// Elements of F_p are kept as canonical integer residues in [0, p).
struct Field {
  long p = 0;  // 0 = rationals, otherwise a prime

  bool rational() const { return p == 0; }

  static Field rationals() { return Field{0}; }
  static Field prime(long q);

  bool operator==(const Field& o) const { return p == o.p; }

  /// Canonical form of a scalar in this field.
  Scalar reduce(const Scalar& x) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(const Scalar& a) const;

  std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

bool is_prime(long n);

}  // namespace locoh

#endif
