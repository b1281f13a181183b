#include "quivergrass/scalar.hpp"

#include "quivergrass/error.hpp"
#include "quivergrass/modular.hpp"

namespace quivergrass {

namespace {

std::uint32_t reduce_integer(const Integer& v, std::uint32_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

ScalarDomain ScalarDomain::prime_field(std::uint32_t p) {
  if (p < 3 || p >= (1U << 31) || !is_prime(p)) {
    throw Error(ErrorKind::invalid_argument,
                "prime field requires an odd prime below 2^31, got " + std::to_string(p));
  }
  return {ScalarKind::prime_field, p};
}

std::string ScalarDomain::to_string() const {
  switch (kind) {
    case ScalarKind::integer: return "Z";
    case ScalarKind::rational: return "Q";
    case ScalarKind::prime_field: return "F_" + std::to_string(prime);
  }
  return "?";
}

Scalar::Scalar(long long v) : value_(Integer(std::to_string(v))) {}

Scalar::Scalar(Rational v) {
  v.canonicalize();
  value_ = std::move(v);
}

Scalar::Scalar(ModInt v) {
  if (v.prime == 0 || v.value >= v.prime) {
    throw Error(ErrorKind::invalid_argument, "ModInt value not reduced");
  }
  value_ = v;
}

ScalarDomain Scalar::domain() const {
  if (std::holds_alternative<Integer>(value_)) return ScalarDomain::integers();
  if (std::holds_alternative<Rational>(value_)) return ScalarDomain::rationals();
  return {ScalarKind::prime_field, std::get<ModInt>(value_).prime};
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ModInt>) {
          return v.value == 0;
        } else {
          return sgn(v) == 0;
        }
      },
      value_);
}

Rational Scalar::to_rational() const {
  if (const auto* z = std::get_if<Integer>(&value_)) return Rational(*z);
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw Error(ErrorKind::domain_mismatch, "prime-field scalar has no rational value");
}

std::uint32_t Scalar::reduce_mod(std::uint32_t p) const {
  if (const auto* z = std::get_if<Integer>(&value_)) return reduce_integer(*z, p);
  if (const auto* q = std::get_if<Rational>(&value_)) {
    std::uint32_t den = reduce_integer(q->get_den(), p);
    if (den == 0) {
      throw Error(ErrorKind::domain_mismatch,
                  "denominator of " + q->get_str() + " vanishes mod " + std::to_string(p));
    }
    return mul_mod(reduce_integer(q->get_num(), p), inv_mod(den, p), p);
  }
  const auto& m = std::get<ModInt>(value_);
  if (m.prime != p) {
    throw Error(ErrorKind::domain_mismatch, "F_" + std::to_string(m.prime) +
                                                " scalar used over F_" + std::to_string(p));
  }
  return m.value;
}

Scalar Scalar::cast_to(const ScalarDomain& domain) const {
  switch (domain.kind) {
    case ScalarKind::integer: {
      Rational q = to_rational();
      if (q.get_den() != 1) {
        throw Error(ErrorKind::mixed_scalar_domains, q.get_str() + " is not an integer");
      }
      return Scalar(Integer(q.get_num()));
    }
    case ScalarKind::rational:
      return Scalar(to_rational());
    case ScalarKind::prime_field:
      return Scalar(ModInt{reduce_mod(domain.prime), domain.prime});
  }
  return *this;
}

std::string Scalar::to_string() const {
  if (const auto* z = std::get_if<Integer>(&value_)) return z->get_str();
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  return std::to_string(std::get<ModInt>(value_).value);
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

Scalar zero_of(const ScalarDomain& domain) {
  switch (domain.kind) {
    case ScalarKind::integer: return Scalar(Integer(0));
    case ScalarKind::rational: return Scalar(Rational(0));
    case ScalarKind::prime_field: return Scalar(ModInt{0, domain.prime});
  }
  return {};
}

Scalar one_of(const ScalarDomain& domain) {
  switch (domain.kind) {
    case ScalarKind::integer: return Scalar(Integer(1));
    case ScalarKind::rational: return Scalar(Rational(1));
    case ScalarKind::prime_field: return Scalar(ModInt{1, domain.prime});
  }
  return {};
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::parse_error, "not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::parse_error, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace quivergrass
