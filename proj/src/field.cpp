#include "locoh/field.hpp"

namespace locoh {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(long q) {
  if (!is_prime(q)) throw Error("field characteristic must be 0 or prime, got " + std::to_string(q));
  return Field{q};
}

Scalar Field::reduce(const Scalar& x) const {
  if (p == 0) return x;
  // x is a rational with denominator coprime to p only when it came from
  // integer arithmetic; all internal F_p values have denominator 1.
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class pz(p);
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  if (den != 1) {
    mpz_class dinv;
    mpz_class dmod;
    mpz_mod(dmod.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw Error("denominator not invertible mod " + std::to_string(p));
    r = (r * dinv) % pz;
    if (r < 0) r += pz;
  }
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar s = a + b;
  return p == 0 ? s : reduce(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar s = a - b;
  return p == 0 ? s : reduce(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar s = a * b;
  return p == 0 ? s : reduce(s);
}

Scalar Field::neg(const Scalar& a) const {
  Scalar s = -a;
  return p == 0 ? s : reduce(s);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error("division by zero");
  if (p == 0) return 1 / a;
  mpz_class pz(p), am = a.get_num() % pz, r;
  if (am < 0) am += pz;
  if (mpz_invert(r.get_mpz_t(), am.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw Error("element not invertible mod " + std::to_string(p));
  return Scalar(r);
}

}  // namespace locoh
