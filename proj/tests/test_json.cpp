#include <doctest.h>

#include "trisys/json_io.hpp"

using namespace trisys;

TEST_CASE("dialgebra serialization round-trips products, involution and labels") {
  for (bool rational : {false, true}) {
    TableDialgebra D =
        matrix_dialgebra(2, 1, rational ? FieldSpec::rational() : FieldSpec::gfp(5));
    TableDialgebra back = dialgebra_from_json(dialgebra_to_json(D));
    REQUIRE(back.dim() == D.dim());
    CHECK(back.field() == D.field());
    for (std::size_t i = 0; i < D.dim(); ++i) {
      CHECK(back.label(i) == D.label(i));
      for (std::size_t j = 0; j < D.dim(); ++j) {
        CHECK(back.left_basis(i, j) == D.left_basis(i, j));
        CHECK(back.right_basis(i, j) == D.right_basis(i, j));
      }
    }
    REQUIRE(back.has_involution());
    for (std::size_t i = 0; i < D.dim(); ++i) CHECK(back.star_basis(i) == D.star_basis(i));
  }
}

TEST_CASE("trisystem serialization round-trips all three tensors") {
  DenseTrisystem T = att2_from_dialgebra(matrix_dialgebra(2, 1, FieldSpec::gfp(5)));
  DenseTrisystem back = trisystem_from_json(trisystem_to_json(T));
  REQUIRE(back.dim() == T.dim());
  CHECK(back.provenance() == T.provenance());
  for (int w = 1; w <= 3; ++w)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
          CHECK(back.t_basis(w, i, j, k) == T.t_basis(w, i, j, k));
}

TEST_CASE("rational scalars survive as exact fractions") {
  TableDialgebra D(1, FieldSpec::rational());
  SparseVec v;
  v.add_term(0, Scalar::rational(-7, 3));
  D.set_left(0, 0, v);
  TableDialgebra back = dialgebra_from_json(dialgebra_to_json(D));
  CHECK(back.left_basis(0, 0).terms()[0].second == Scalar::rational(-7, 3));
}

TEST_CASE("embedding serialization carries blocks and reports") {
  DenseTrisystem T = att1_from_dialgebra(matrix_dialgebra(2, 1, FieldSpec::gfp(5)));
  EmbeddingAlgebra e = build_U(T);
  json j = embedding_to_json(e);
  CHECK(j.at("kind") == "first");
  CHECK(j.at("blocks").size() == 2);
  CHECK(j.at("recovery").at("status") == "pass");
  CHECK(j.at("dialgebra").at("dim").get<std::size_t>() == e.dia->dim());
}
