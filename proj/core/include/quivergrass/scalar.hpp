#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace quivergrass {

using Integer = mpz_class;
using Rational = mpq_class;

/// Residue class modulo an odd prime below 2^31; `value` is always reduced.
struct ModInt {
  std::uint32_t value = 0;
  std::uint32_t prime = 0;

  friend bool operator==(const ModInt&, const ModInt&) = default;
};

enum class ScalarKind { integer, rational, prime_field };

struct ScalarDomain {
  ScalarKind kind = ScalarKind::integer;
  std::uint32_t prime = 0;  // meaningful for prime_field only

  static ScalarDomain integers() { return {ScalarKind::integer, 0}; }
  static ScalarDomain rationals() { return {ScalarKind::rational, 0}; }
  static ScalarDomain prime_field(std::uint32_t p);

  bool is_prime_field() const { return kind == ScalarKind::prime_field; }
  std::string to_string() const;

  friend bool operator==(const ScalarDomain&, const ScalarDomain&) = default;
};

/// An exact scalar: arbitrary-precision integer, rational, or F_p element.
class Scalar {
 public:
  Scalar() : value_(Integer(0)) {}
  Scalar(int v) : value_(Integer(v)) {}
  Scalar(long v) : value_(Integer(v)) {}
  Scalar(long long v);
  Scalar(Integer v) : value_(std::move(v)) {}
  Scalar(Rational v);
  Scalar(ModInt v);

  ScalarDomain domain() const;
  bool is_zero() const;

  /// Value as a rational; prime-field scalars are rejected.
  Rational to_rational() const;

  /// Image in F_p. Integers and rationals are reduced (the denominator must
  /// be a unit mod p); prime-field scalars must already live in F_p.
  std::uint32_t reduce_mod(std::uint32_t p) const;

  /// Same value re-tagged into `domain` (integer -> rational, etc.).
  Scalar cast_to(const ScalarDomain& domain) const;

  std::string to_string() const;

  const std::variant<Integer, Rational, ModInt>& value() const { return value_; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Integer, Rational, ModInt> value_;
};

/// Canonical zero/one of a domain.
Scalar zero_of(const ScalarDomain& domain);
Scalar one_of(const ScalarDomain& domain);

/// Parses "3", "-7/2" as Rational.
Rational parse_rational(const std::string& text);

}  // namespace quivergrass
