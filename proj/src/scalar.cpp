#include "trisys/scalar.hpp"

namespace trisys {

bool is_odd_prime(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::gfp(std::uint64_t p) {
  if (!is_odd_prime(p))
    throw Error("GF(p) requires an odd prime modulus, got " + std::to_string(p));
  return {Kind::GFp, p};
}

std::string FieldSpec::str() const {
  return kind == Kind::Rational ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::zero(const FieldSpec& f) { return of_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, long long n) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldSpec::Kind::Rational) {
    s.q_ = mpq_class(static_cast<long>(n));
  } else {
    long long r = n % static_cast<long long>(f.p);
    if (r < 0) r += static_cast<long long>(f.p);
    s.v_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.field_ = FieldSpec::rational();
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Scalar s;
  s.field_ = FieldSpec::rational();
  s.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::gfp(std::uint64_t p, std::uint64_t value) {
  FieldSpec f = FieldSpec::gfp(p);
  Scalar s;
  s.field_ = f;
  s.v_ = value % p;
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldSpec::Kind::Rational ? q_ == 0 : v_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldSpec::Kind::Rational ? q_ == 1 : v_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw KindMismatch("scalar kind mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind == FieldSpec::Kind::Rational)
    s.q_ = -q_;
  else
    s.v_ = v_ == 0 ? 0 : field_.p - v_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  Scalar s = *this;
  if (field_.kind == FieldSpec::Kind::Rational) {
    s.q_ = 1 / q_;
  } else {
    // extended Euclid mod p
    std::int64_t p = static_cast<std::int64_t>(field_.p);
    std::int64_t a = static_cast<std::int64_t>(v_), b = p, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    x0 %= p;
    if (x0 < 0) x0 += p;
    s.v_ = static_cast<std::uint64_t>(x0);
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.kind == FieldSpec::Kind::Rational) {
    q_ += o.q_;
  } else {
    v_ += o.v_;
    if (v_ >= field_.p) v_ -= field_.p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.kind == FieldSpec::Kind::Rational) {
    q_ -= o.q_;
  } else {
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + field_.p - o.v_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.kind == FieldSpec::Kind::Rational) {
    q_ *= o.q_;
  } else {
    // p < 2^32 in practice; guard anyway
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % field_.p);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.kind == FieldSpec::Kind::Rational ? q_ == o.q_ : v_ == o.v_;
}

std::string Scalar::str() const {
  if (field_.kind == FieldSpec::Kind::Rational) return q_.get_str();
  return std::to_string(v_);
}

const mpq_class& Scalar::rat() const {
  if (field_.kind != FieldSpec::Kind::Rational) throw KindMismatch("not a rational scalar");
  return q_;
}

}  // namespace trisys
