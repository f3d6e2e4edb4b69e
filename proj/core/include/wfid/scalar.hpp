#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace wfid {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

// Residue modulo a prime below 2^63.
struct ModP {
  std::uint64_t value = 0;
  std::uint64_t prime = 0;
};

// Exact field element: a GMP rational, or a residue in a prime field.
// Mixing a rational with a residue maps the rational into that prime field;
// mixing residues of different primes is a FieldMismatch.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(int v) : v_(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : v_(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class v) : v_(std::move(v)) {  // NOLINT(google-explicit-constructor)
    std::get<mpq_class>(v_).canonicalize();
  }

  static Scalar ratio(long num, long den);
  static Scalar residue(std::uint64_t value, std::uint64_t prime);
  static Scalar parse(const std::string& text);

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  // 0 for rationals.
  std::uint64_t prime() const;
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue_value() const { return std::get<ModP>(v_).value; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(long e) const;

  // "num/den" (or "num" for integers); residues print as their canonical value.
  std::string str() const;

 private:
  explicit Scalar(ModP m) : v_(m) {}
  void unify(Scalar& other);
  std::variant<mpq_class, ModP> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Ring homomorphism Q -> F_p. Throws DivisionByZero if p divides the denominator.
Scalar to_prime_field(const Scalar& x, std::uint64_t prime);

bool is_probable_prime(std::uint64_t p);

}  // namespace wfid
