#include "wfid/scalar.hpp"

#include <ostream>

#include "wfid/errors.hpp"

namespace wfid {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

}  // namespace

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw DivisionByZero("Scalar::ratio with zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t prime) {
  if (prime < 2 || prime >= (std::uint64_t{1} << 63)) {
    throw UsageError("prime modulus out of range");
  }
  return Scalar(ModP{value % prime, prime});
}

Scalar Scalar::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw UsageError("not a rational number: " + text);
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in " + text);
  return Scalar(q);
}

std::uint64_t Scalar::prime() const {
  return is_rational() ? 0 : std::get<ModP>(v_).prime;
}

bool Scalar::is_zero() const {
  return is_rational() ? sgn(rational()) == 0 : std::get<ModP>(v_).value == 0;
}

bool Scalar::is_one() const {
  return is_rational() ? rational() == 1 : std::get<ModP>(v_).value == 1;
}

void Scalar::unify(Scalar& other) {
  const std::uint64_t p = prime(), q = other.prime();
  if (p == q) return;
  if (p == 0) {
    *this = to_prime_field(*this, q);
  } else if (q == 0) {
    other = to_prime_field(other, p);
  } else {
    throw FieldMismatch("arithmetic between different prime fields");
  }
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  const auto& m = std::get<ModP>(v_);
  return Scalar(ModP{m.value == 0 ? 0 : m.prime - m.value, m.prime});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Scalar b = o;
  unify(b);
  if (is_rational()) {
    std::get<mpq_class>(v_) += b.rational();
  } else {
    auto& m = std::get<ModP>(v_);
    m.value = static_cast<std::uint64_t>((static_cast<u128>(m.value) + b.residue_value()) % m.prime);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar b = o;
  unify(b);
  if (is_rational()) {
    std::get<mpq_class>(v_) *= b.rational();
  } else {
    auto& m = std::get<ModP>(v_);
    m.value = mulmod(m.value, b.residue_value(), m.prime);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero");
  if (is_rational()) return Scalar(mpq_class(1 / rational()));
  const auto& m = std::get<ModP>(v_);
  return Scalar(ModP{powmod(m.value, m.prime - 2, m.prime), m.prime});
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this, r = is_rational() ? Scalar(1) : Scalar::residue(1, prime());
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.prime() == b.prime()) {
    if (a.is_rational()) return a.rational() == b.rational();
    return a.residue_value() == b.residue_value();
  }
  return (a - b).is_zero();
}

std::string Scalar::str() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(residue_value());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar to_prime_field(const Scalar& x, std::uint64_t prime) {
  if (!x.is_rational()) {
    if (x.prime() != prime) throw FieldMismatch("residue belongs to another prime field");
    return x;
  }
  const std::uint64_t num = mpz_mod_u64(x.rational().get_num(), prime);
  const std::uint64_t den = mpz_mod_u64(x.rational().get_den(), prime);
  if (den == 0) throw DivisionByZero("denominator divisible by the field prime");
  return Scalar::residue(num, prime) / Scalar::residue(den, prime);
}

bool is_probable_prime(std::uint64_t p) {
  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

}  // namespace wfid
