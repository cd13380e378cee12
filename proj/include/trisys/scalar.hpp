#ifndef TRISYS_SCALAR_HPP
#define TRISYS_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "trisys/error.hpp"

namespace trisys {

// The coefficient field: exact rationals, or GF(p) with p an odd prime.
// p = 2 is rejected because the scalar ring must contain 1/2.
struct FieldSpec {
  enum class Kind : std::uint8_t { Rational, GFp };
  Kind kind = Kind::Rational;
  std::uint64_t p = 0;

  static FieldSpec rational() { return {Kind::Rational, 0}; }
  static FieldSpec gfp(std::uint64_t p);

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
  std::string str() const;
};

bool is_odd_prime(std::uint64_t n);

class Scalar {
 public:
  Scalar() = default;  // rational 0
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long long n);
  static Scalar rational(const mpq_class& q);
  static Scalar rational(long long num, long long den);
  static Scalar gfp(std::uint64_t p, std::uint64_t value);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws Error on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rational values print as "n" or "n/d" in lowest terms with positive
  // denominator; GF(p) values as the representative in [0, p).
  std::string str() const;

  const mpq_class& rat() const;
  std::uint64_t gf_value() const { return v_; }

 private:
  void check_same_field(const Scalar& o) const;

  FieldSpec field_ = FieldSpec::rational();
  mpq_class q_ = 0;        // Rational payload
  std::uint64_t v_ = 0;    // GFp payload, always in [0, p)
};

}  // namespace trisys

#endif
