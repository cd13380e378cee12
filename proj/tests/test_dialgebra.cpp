#include <doctest.h>

#include <random>

#include "trisys/dialgebra.hpp"

using namespace trisys;

namespace {

SparseVec vec_of(const FieldSpec& f, std::initializer_list<long long> xs) {
  SparseVec v;
  std::size_t i = 0;
  for (long long x : xs) v.add_term(i++, Scalar::of_int(f, x));
  return v;
}

SparseVec random_vec(std::size_t dim, const FieldSpec& f, std::mt19937_64& rng) {
  SparseVec v;
  for (std::size_t i = 0; i < dim; ++i) v.add_term(i, Scalar::gfp(f.p, rng() % f.p));
  return v;
}

// ordinary 2x2 (or m x m) matrix product with block masks applied first;
// an oracle independent of the dialgebra product tables
std::vector<Scalar> masked_product(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                   std::size_t m, std::size_t m1, bool right_mask,
                                   const FieldSpec& f) {
  std::size_t split = m - m1;
  auto masked = [&](const std::vector<Scalar>& x) {
    std::vector<Scalar> y(m * m, Scalar::zero(f));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        bool keep = right_mask ? (c >= split) : (r >= split);
        if (keep) y[r * m + c] = x[r * m + c];
      }
    return y;
  };
  std::vector<Scalar> ma = masked(a), mb = masked(b), out(m * m, Scalar::zero(f));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t k = 0; k < m; ++k) out[r * m + c] += ma[r * m + k] * mb[k * m + c];
  return out;
}

}  // namespace

TEST_CASE("free dialgebra normal-form products") {
  FreeDialgebra D(2, 3);  // generators a, b
  const FieldSpec& f = D.field();
  std::size_t xa = D.generator_index(0), xb = D.generator_index(1);
  SUBCASE("products of generators") {
    SparseVec ab_left = D.left_basis(xa, xb);
    REQUIRE(ab_left.size() == 1);
    CHECK(D.label(ab_left.terms()[0].first) == "(ab,1)");
    SparseVec ab_right = D.right_basis(xa, xb);
    CHECK(D.label(ab_right.terms()[0].first) == "(ab,2)");
  }
  SUBCASE("association instance of the bar-side axiom") {
    // (a -| b) -| b  =  a -| (b |- b), both (abb, 1)
    SparseVec lhs = D.left(D.left_basis(xa, xb), SparseVec::unit(xb, f));
    SparseVec rhs = D.left(SparseVec::unit(xa, f), D.right_basis(xb, xb));
    CHECK(lhs == rhs);
    CHECK(D.label(lhs.terms()[0].first) == "(abb,1)");
  }
  SUBCASE("truncation above the degree bound") {
    SparseVec ab = D.left_basis(xa, xb);
    SparseVec abab = D.left(ab, ab);  // length 4 > 3
    CHECK(abab.is_zero());
  }
  SUBCASE("encode/decode round-trips over the whole basis") {
    for (std::size_t i = 0; i < D.dim(); ++i) CHECK(D.encode(D.decode(i)) == i);
  }
}

TEST_CASE("free dialgebra satisfies the five axioms (exhaustive oracle)") {
  FreeDialgebra D(2, 3);
  CheckReport r = check_dialgebra_axioms(D);
  CHECK(r.passed);
  CHECK(r.evaluations == 5u * 34 * 34 * 34);
  FreeDialgebra D2(3, 2);
  CHECK(check_dialgebra_axioms(D2).passed);
}

TEST_CASE("free involution") {
  FreeDialgebra D(2, 3);
  SUBCASE("word reversal with re-centered marker") {
    std::size_t xa = D.generator_index(0), xb = D.generator_index(1);
    SparseVec ab1 = D.left_basis(xa, xb);  // (ab, 1)
    SparseVec star = D.star(ab1);
    REQUIRE(star.size() == 1);
    CHECK(D.label(star.terms()[0].first) == "(ba,2)");
  }
  SUBCASE("involution axioms hold exhaustively") {
    CheckReport r = check_involution(D);
    CHECK(r.passed);
  }
  SUBCASE("applying it twice is the identity") {
    for (std::size_t i = 0; i < D.dim(); ++i)
      CHECK(D.star(D.star_basis(i)) == SparseVec::unit(i, D.field()));
  }
}

TEST_CASE("matrix dialgebra block products over the rationals") {
  FieldSpec q = FieldSpec::rational();
  TableDialgebra D = matrix_dialgebra(2, 1, q);
  SparseVec A = vec_of(q, {1, 2, 3, 4});  // ((1,2),(3,4))
  SparseVec B = vec_of(q, {5, 6, 7, 8});
  SUBCASE("left product keeps only the right block column data") {
    CHECK(D.left(A, B) == vec_of(q, {0, 16, 0, 32}));
  }
  SUBCASE("right product keeps only the lower block row data") {
    CHECK(D.right(A, B) == vec_of(q, {0, 0, 28, 32}));
  }
  SUBCASE("axioms and involution pass") {
    CHECK(check_dialgebra_axioms(D).passed);
    CHECK(check_involution(D).passed);
  }
}

TEST_CASE("matrix products agree with the masked ordinary product oracle") {
  FieldSpec f = FieldSpec::gfp(5);
  for (auto [m, m1] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 1}, {3, 2}}) {
    TableDialgebra D = matrix_dialgebra(m, m1, f);
    for (std::size_t i = 0; i < D.dim(); ++i)
      for (std::size_t j = 0; j < D.dim(); ++j) {
        auto ei = SparseVec::unit(i, f).dense(D.dim(), f);
        auto ej = SparseVec::unit(j, f).dense(D.dim(), f);
        CHECK(D.left_basis(i, j).dense(D.dim(), f) == masked_product(ei, ej, m, m1, true, f));
        CHECK(D.right_basis(i, j).dense(D.dim(), f) == masked_product(ei, ej, m, m1, false, f));
      }
    CHECK(check_dialgebra_axioms(D).passed);
    CHECK(check_involution(D).passed);
  }
}

TEST_CASE("conjugate-transpose involution on random pairs over GF(5)") {
  FieldSpec f = FieldSpec::gfp(5);
  TableDialgebra D = matrix_dialgebra(2, 1, f);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 100; ++it) {
    SparseVec A = random_vec(4, f, rng), B = random_vec(4, f, rng);
    CHECK(D.star(D.left(A, B)) == D.right(D.star(B), D.star(A)));
    CHECK(D.star(D.right(A, B)) == D.left(D.star(B), D.star(A)));
  }
}

TEST_CASE("complex-like base ring gives a nontrivial ring involution") {
  FieldSpec f = FieldSpec::gfp(5);
  TableDialgebra D = matrix_dialgebra(2, 1, f, /*complex_like=*/true);
  CHECK(D.dim() == 8);
  CHECK(check_dialgebra_axioms(D).passed);
  CHECK(check_involution(D).passed);
  // the involution is not the plain transpose: it swaps the ring components
  SparseVec s11 = SparseVec::unit(0, f);  // E11 x (1,0)
  CHECK(D.star(s11) != s11);
}

TEST_CASE("identity map is not an involution of the matrix dialgebra") {
  FieldSpec f = FieldSpec::gfp(5);
  TableDialgebra D = matrix_dialgebra(2, 1, f);
  D.set_involution(ExactMatrix::identity(4, f));
  CheckReport r = check_involution(D);
  CHECK_FALSE(r.passed);
  CHECK(!r.failures.empty());
}

TEST_CASE("differential dialgebra") {
  FieldSpec f = FieldSpec::gfp(5);
  SUBCASE("upper triangular 2x2 with the inner derivation by E12") {
    // basis E11, E12, E22; d = [E12, -]
    std::vector<std::vector<SparseVec>> mult(3, std::vector<SparseVec>(3));
    mult[0][0] = SparseVec::unit(0, f);
    mult[0][1] = SparseVec::unit(1, f);
    mult[1][2] = SparseVec::unit(1, f);
    mult[2][2] = SparseVec::unit(2, f);
    ExactMatrix d(3, 3, f);
    d.at(1, 0) = -Scalar::one(f);
    d.at(1, 2) = Scalar::one(f);
    TableDialgebra D = differential_dialgebra(mult, d, {"E11", "E12", "E22"});
    CHECK(check_dialgebra_axioms(D).passed);
    // a -| b = a . d(b): E11 -| E22 = E11 E12 = E12
    CHECK(D.left_basis(0, 2) == SparseVec::unit(1, f));
    // a |- b = d(a) . b: E22 |- E22 = E12 E22 = E12
    CHECK(D.right_basis(2, 2) == SparseVec::unit(1, f));
  }
  SUBCASE("d = 0 gives identically zero products") {
    std::vector<std::vector<SparseVec>> mult(2, std::vector<SparseVec>(2));
    mult[0][0] = SparseVec::unit(0, f);  // unital 1*1=1, 1*t=t, t*t=0
    mult[0][1] = SparseVec::unit(1, f);
    mult[1][0] = SparseVec::unit(1, f);
    TableDialgebra D = differential_dialgebra(mult, ExactMatrix(2, 2, f));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(D.left_basis(i, j).is_zero());
        CHECK(D.right_basis(i, j).is_zero());
      }
    CHECK(check_dialgebra_axioms(D).passed);
  }
  SUBCASE("d with d^2 != 0 is rejected with a witness") {
    std::vector<std::vector<SparseVec>> mult(2, std::vector<SparseVec>(2));
    mult[0][0] = SparseVec::unit(0, f);
    mult[0][1] = SparseVec::unit(1, f);
    mult[1][0] = SparseVec::unit(1, f);
    mult[1][1] = SparseVec::unit(0, f);
    CHECK_THROWS_AS(differential_dialgebra(mult, ExactMatrix::identity(2, f)),
                    PreconditionError);
  }
  SUBCASE("the truncated polynomial line with d(t) = 1 violates the derivation rule") {
    // span{1, t}, t^2 = 0, d(1) = 0, d(t) = 1: d(t.t) = 0 but d(t)t + td(t) = 2t,
    // so in odd characteristic the input is rejected at the (t, t) pair.
    std::vector<std::vector<SparseVec>> mult(2, std::vector<SparseVec>(2));
    mult[0][0] = SparseVec::unit(0, f);
    mult[0][1] = SparseVec::unit(1, f);
    mult[1][0] = SparseVec::unit(1, f);
    ExactMatrix d(2, 2, f);
    d.at(0, 1) = Scalar::one(f);
    try {
      differential_dialgebra(mult, d, {"one", "t"});
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(e.witness == "(t, t)");
    }
  }
}

TEST_CASE("a corrupted product table fails with a witness") {
  FieldSpec f = FieldSpec::gfp(5);
  TableDialgebra D = matrix_dialgebra(2, 1, f);
  D.bump(false, 1, 2, 0, Scalar::one(f));
  CheckReport r = check_dialgebra_axioms(D);
  CHECK_FALSE(r.passed);
  REQUIRE(!r.failures.empty());
  CHECK(!r.failures[0].detail.empty());
}

TEST_CASE("derived bracket on the 2x2 matrix dialgebra") {
  FieldSpec q = FieldSpec::rational();
  TableDialgebra D = matrix_dialgebra(2, 1, q);
  BilinearTable br = dminus_bracket(D);
  // with A = ((a11,a12),(a21,a22)), B likewise:
  // [A,B] = ((0, a12 b22), (-b22 a21, 0))
  SparseVec A = vec_of(q, {1, 2, 3, 4}), B = vec_of(q, {5, 6, 7, 8});
  CHECK(br.apply(A, B) == vec_of(q, {0, 16, -24, 0}));
  // basis relations; E3 = E21 picks up the sign from -B|-A
  std::size_t e1 = 0, e2 = 1, e3 = 2, x = 3;
  CHECK(br.apply(SparseVec::unit(e1, q), SparseVec::unit(x, q)).is_zero());
  CHECK(br.apply(SparseVec::unit(e2, q), SparseVec::unit(x, q)) == SparseVec::unit(e2, q));
  SparseVec me3 = SparseVec::unit(e3, q);
  me3.negate();
  CHECK(br.apply(SparseVec::unit(e3, q), SparseVec::unit(x, q)) == me3);
}

TEST_CASE("an antisymmetrized non-associative product generically fails the Leibniz law") {
  FieldSpec f = FieldSpec::gfp(7);
  BilinearTable br;
  br.dim = 3;
  br.field = f;
  br.table.assign(3, std::vector<SparseVec>(3));
  std::mt19937_64 rng(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      SparseVec v = random_vec(3, f, rng);
      br.table[i][j] = v;
      v.negate();
      br.table[j][i] = v;
    }
  CHECK_FALSE(check_right_leibniz(br).passed);
}

TEST_CASE("derived brackets satisfy the right Leibniz law") {
  SUBCASE("matrix instance over GF(5)") {
    TableDialgebra D = matrix_dialgebra(2, 1, FieldSpec::gfp(5));
    CheckReport r = check_right_leibniz(dminus_bracket(D));
    CHECK(r.passed);
    CHECK(r.note.find("right Leibniz") != std::string::npos);
  }
  SUBCASE("free instance") {
    FreeDialgebra D(3, 3);
    CHECK(check_right_leibniz(dminus_bracket(D)).passed);
  }
  SUBCASE("a commutative associative product gives an antisymmetric bracket") {
    FieldSpec f = FieldSpec::gfp(5);
    // GF(5)[u]/(u^2): basis 1, u
    std::vector<std::vector<SparseVec>> mult(2, std::vector<SparseVec>(2));
    mult[0][0] = SparseVec::unit(0, f);
    mult[0][1] = SparseVec::unit(1, f);
    mult[1][0] = SparseVec::unit(1, f);
    TableDialgebra D = dialgebra_from_associative(mult, 2, f);
    BilinearTable br = dminus_bracket(D);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        SparseVec ji = br.table[j][i];
        ji.negate();
        CHECK(br.table[i][j] == ji);
      }
    CHECK(check_right_leibniz(br).passed);
  }
}

TEST_CASE("subalgebra closure and structure constants") {
  FieldSpec q = FieldSpec::rational();
  TableDialgebra D = matrix_dialgebra(2, 1, q);
  BilinearTable br = dminus_bracket(D);
  auto unitv = [&](std::size_t i) {
    std::vector<Scalar> v(4, Scalar::zero(q));
    v[i] = Scalar::one(q);
    return v;
  };
  SUBCASE("the documented 3-dimensional subspace is closed") {
    std::vector<Scalar> b1 = unitv(1);                       // E12
    std::vector<Scalar> b2 = unitv(2);                       // E21
    std::vector<Scalar> b3 = unitv(1);                       // E12 + E22
    b3[3] = Scalar::one(q);
    SubalgebraResult sub = subalgebra_structure_constants(br, {b1, b2, b3});
    CHECK(sub.closed_from_start);
    REQUIRE(sub.basis.size() == 3);
    auto coeff = [&](std::size_t i, std::size_t j, std::size_t k) {
      return sub.constants[i][j][k];
    };
    // [b1,b3] = b1, [b2,b3] = -b2, [b3,b3] = b1
    CHECK(coeff(0, 2, 0) == Scalar::one(q));
    CHECK(coeff(1, 2, 1) == Scalar::of_int(q, -1));
    CHECK(coeff(2, 2, 0) == Scalar::one(q));
    CHECK(coeff(2, 2, 1).is_zero());
    CHECK(coeff(2, 2, 2).is_zero());
  }
  SUBCASE("the full algebra reproduces the basis relations") {
    SubalgebraResult sub =
        subalgebra_structure_constants(br, {unitv(0), unitv(1), unitv(2), unitv(3)});
    CHECK(sub.closed_from_start);
    // [E2,X] = E2 and [E3,X] = -E3
    CHECK(sub.constants[1][3][1] == Scalar::one(q));
    CHECK(sub.constants[2][3][2] == Scalar::of_int(q, -1));
    CHECK(sub.constants[0][3] == std::vector<Scalar>(4, Scalar::zero(q)));
  }
  SUBCASE("a non-closed generating set gets extended") {
    // {E12, X}: [E12, X] = E12 ok, but [X, E12]... start from {X} alone:
    // [X,X] = 0, closed; start from {E11+E12, X}
    std::vector<Scalar> g = unitv(0);
    g[1] = Scalar::one(q);
    SubalgebraResult sub = subalgebra_structure_constants(br, {g, unitv(3)});
    CHECK_FALSE(sub.closed_from_start);
    CHECK(sub.basis.size() >= 3);
  }
  SUBCASE("zero bracket gives all-zero constants") {
    BilinearTable zero;
    zero.dim = 2;
    zero.field = q;
    zero.table.assign(2, std::vector<SparseVec>(2));
    std::vector<Scalar> g0 = {Scalar::one(q), Scalar::zero(q)};
    std::vector<Scalar> g1 = {Scalar::zero(q), Scalar::one(q)};
    SubalgebraResult sub = subalgebra_structure_constants(zero, {g0, g1});
    CHECK(sub.closed_from_start);
    for (const auto& row : sub.constants)
      for (const auto& cell : row)
        for (const auto& s : cell) CHECK(s.is_zero());
  }
}

TEST_CASE("bracket image sits in the off-diagonal blocks plus traceless lower diagonal") {
  // [A,B] = (0, u_A d_B ; -d_B l_A, [d_A, d_B]): the diagonal contribution is
  // a commutator of m1 x m1 blocks, so it vanishes exactly when m1 = 1 and is
  // traceless in general.
  FieldSpec f = FieldSpec::gfp(5);
  for (auto [m, m1] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 1}, {3, 2}}) {
    TableDialgebra D = matrix_dialgebra(m, m1, f);
    BilinearTable br = dminus_bracket(D);
    std::size_t split = m - m1;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < br.dim; ++i)
      for (std::size_t j = 0; j < br.dim; ++j)
        if (!br.table[i][j].is_zero()) rows.push_back(br.table[i][j].dense(br.dim, f));
    SpanBasis span = span_basis(rows, br.dim, f);
    std::size_t bound = 2 * m1 * (m - m1) + (m1 >= 2 ? m1 * m1 - 1 : 0);
    CHECK(span.dim() <= bound);
    for (const auto& row : rows) {
      Scalar trace = Scalar::zero(f);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          bool upper_f = r < split && c < split;
          if (upper_f) CHECK(row[r * m + c].is_zero());
          if (m1 == 1 && r >= split && c >= split) CHECK(row[r * m + c].is_zero());
          if (r == c && r >= split) trace += row[r * m + c];
        }
      CHECK(trace.is_zero());
    }
  }
}

TEST_CASE("involution checks require an involution") {
  TableDialgebra D(2, FieldSpec::gfp(5));
  CHECK_THROWS_AS(check_involution(D), Error);
}
