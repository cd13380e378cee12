#include <doctest.h>

#include <random>

#include "trisys/matrix.hpp"

using namespace trisys;

namespace {

std::vector<Scalar> row(const FieldSpec& f, std::initializer_list<long long> xs) {
  std::vector<Scalar> v;
  for (long long x : xs) v.push_back(Scalar::of_int(f, x));
  return v;
}

}  // namespace

TEST_CASE("span_basis on the documented cases") {
  FieldSpec q = FieldSpec::rational();
  SUBCASE("collinear rows collapse") {
    SpanBasis b = span_basis({row(q, {1, 0}), row(q, {2, 0})}, 2, q);
    REQUIRE(b.dim() == 1);
    CHECK(b.rows[0] == row(q, {1, 0}));
  }
  SUBCASE("empty input gives the empty basis") {
    SpanBasis b = span_basis({}, 2, q);
    CHECK(b.dim() == 0);
  }
  SUBCASE("identity rows are already the echelon basis") {
    SpanBasis b =
        span_basis({row(q, {1, 0, 0}), row(q, {0, 1, 0}), row(q, {0, 0, 1})}, 3, q);
    REQUIRE(b.dim() == 3);
    CHECK(b.rows[0] == row(q, {1, 0, 0}));
    CHECK(b.rows[1] == row(q, {0, 1, 0}));
    CHECK(b.rows[2] == row(q, {0, 0, 1}));
  }
}

TEST_CASE("coords_in_span on the documented cases") {
  FieldSpec q = FieldSpec::rational();
  SpanBasis b = span_basis({row(q, {1, 0})}, 2, q);
  auto c = coords_in_span(row(q, {3, 0}), b);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Scalar::of_int(q, 3));
  CHECK_FALSE(coords_in_span(row(q, {0, 1}), b).has_value());

  SpanBasis empty = span_basis({}, 2, q);
  auto z = coords_in_span(row(q, {0, 0}), empty);
  REQUIRE(z.has_value());
  CHECK(z->empty());

  CHECK_THROWS_AS(coords_in_span(row(q, {1, 2, 3}), b), DimensionMismatch);
}

TEST_CASE("mixed scalar kinds are rejected") {
  FieldSpec q = FieldSpec::rational();
  std::vector<Scalar> bad = {Scalar::gfp(5, 1), Scalar::gfp(5, 0)};
  CHECK_THROWS_AS(span_basis({row(q, {1, 0}), bad}, 2, q), KindMismatch);
}

TEST_CASE("span membership and idempotence properties") {
  FieldSpec f = FieldSpec::gfp(7);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 30; ++it) {
    std::size_t width = 4 + rng() % 3;
    std::vector<std::vector<Scalar>> vecs;
    for (std::size_t k = 0; k < 5; ++k) {
      std::vector<Scalar> v;
      for (std::size_t j = 0; j < width; ++j) v.push_back(Scalar::gfp(7, rng() % 7));
      vecs.push_back(std::move(v));
    }
    SpanBasis b = span_basis(vecs, width, f);
    for (const auto& v : vecs) CHECK(coords_in_span(v, b).has_value());
    SpanBasis bb = span_basis(b.rows, width, f);
    CHECK(bb.rows == b.rows);
    CHECK(bb.pivots == b.pivots);
  }
}

TEST_CASE("tracked span expresses members and products") {
  FieldSpec f = FieldSpec::gfp(5);
  TrackedSpan span(3, f);
  CHECK(span.insert(row(f, {1, 2, 0})));
  CHECK(span.insert(row(f, {0, 1, 1})));
  CHECK_FALSE(span.insert(row(f, {1, 3, 1})));  // sum of the two
  auto c = span.express(row(f, {2, 3, 4}));     // 2*m1 + 4*m2
  REQUIRE(c.has_value());
  std::vector<Scalar> back(3, Scalar::zero(f));
  const auto& members = span.members();
  for (std::size_t k = 0; k < members.size(); ++k)
    for (std::size_t j = 0; j < 3; ++j) back[j] += (*c)[k] * members[k][j];
  CHECK(back == row(f, {2, 3, 4}));
  CHECK_FALSE(span.express(row(f, {0, 0, 1})).has_value());
}

TEST_CASE("matrix apply respects the convention") {
  FieldSpec f = FieldSpec::gfp(5);
  ExactMatrix m(2, 2, f);
  m.at(0, 1) = Scalar::one(f);  // column convention: e2 -> e1
  SparseVec e2 = SparseVec::unit(1, f);
  CHECK(m.apply_col(e2) == SparseVec::unit(0, f));
  CHECK(m.apply_row(SparseVec::unit(0, f)) == SparseVec::unit(1, f));
}
