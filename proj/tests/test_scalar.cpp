#include <doctest.h>

#include <random>

#include "trisys/scalar.hpp"

using namespace trisys;

namespace {

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.kind == FieldSpec::Kind::GFp) return Scalar::gfp(f.p, rng() % f.p);
  long long num = static_cast<long long>(rng() % 2001) - 1000;
  long long den = static_cast<long long>(rng() % 1000) + 1;
  return Scalar::rational(num, den);
}

void field_axioms(const FieldSpec& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  for (int it = 0; it < 200; ++it) {
    Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == one);
      CHECK(a / a == one);
    }
  }
}

}  // namespace

TEST_CASE("field axioms on randomized triples") {
  field_axioms(FieldSpec::rational(), 1);
  field_axioms(FieldSpec::gfp(5), 2);
  field_axioms(FieldSpec::gfp(101), 3);
}

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
  Scalar a = Scalar::rational(2, -4);
  CHECK(a.str() == "-1/2");
  CHECK(Scalar::rational(6, 3).str() == "2");
  CHECK((Scalar::rational(1, 3) + Scalar::rational(2, 3)).str() == "1");
}

TEST_CASE("GF(2) and non-primes are rejected") {
  CHECK_THROWS_AS(FieldSpec::gfp(2), Error);
  CHECK_THROWS_AS(FieldSpec::gfp(9), Error);
  CHECK_THROWS_AS(FieldSpec::gfp(1), Error);
  CHECK_NOTHROW(FieldSpec::gfp(3));
}

TEST_CASE("one half exists in every admitted field") {
  for (auto f : {FieldSpec::rational(), FieldSpec::gfp(3), FieldSpec::gfp(7)}) {
    Scalar half = Scalar::one(f) / Scalar::of_int(f, 2);
    CHECK(half + half == Scalar::one(f));
  }
}

TEST_CASE("mixed kinds raise kind-mismatch") {
  Scalar q = Scalar::rational(1, 2), g = Scalar::gfp(5, 3);
  CHECK_THROWS_AS(q + g, KindMismatch);
  CHECK_THROWS_AS(Scalar::gfp(5, 1) * Scalar::gfp(7, 1), KindMismatch);
}

TEST_CASE("GF(p) representative stays in range") {
  Scalar a = Scalar::of_int(FieldSpec::gfp(5), -7);
  CHECK(a.gf_value() == 3);
  CHECK((-Scalar::gfp(5, 0)).gf_value() == 0);
}
