#ifndef TRISYS_DIEND_HPP
#define TRISYS_DIEND_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "trisys/matrix.hpp"
#include "trisys/report.hpp"
#include "trisys/trisystem.hpp"

namespace trisys {

// A di-endomorphism: a pair of linear maps with two evaluation actions.
// Matrices act on column vectors.
struct DiEndPair {
  ExactMatrix f1, f2;

  bool operator==(const DiEndPair& o) const { return f1 == o.f1 && f2 == o.f2; }
  bool operator!=(const DiEndPair& o) const { return !(*this == o); }
};

// Opposite di-endomorphisms: the pair acts on the right (row-vector
// convention), and products compose in application order.
struct OpDiEndPair {
  ExactMatrix g1, g2;

  bool operator==(const OpDiEndPair& o) const { return g1 == o.g1 && g2 == o.g2; }
  bool operator!=(const OpDiEndPair& o) const { return !(*this == o); }
};

// f -| g = (f1 g2, f2 g2) and f |- g = (f2 g1, f2 g2).
DiEndPair diend_left(const DiEndPair& f, const DiEndPair& g);
DiEndPair diend_right(const DiEndPair& f, const DiEndPair& g);
SparseVec prec(const DiEndPair& f, const SparseVec& x);  // f ≺ x = f1(x)
SparseVec succ(const DiEndPair& f, const SparseVec& x);  // f ≻ x = f2(x)

// On the opposite side the same component pattern applies with row products.
OpDiEndPair opdiend_left(const OpDiEndPair& a, const OpDiEndPair& b);
OpDiEndPair opdiend_right(const OpDiEndPair& a, const OpDiEndPair& b);
SparseVec prec(const SparseVec& x, const OpDiEndPair& a);  // x ≺ a = (x) a.g2
SparseVec succ(const SparseVec& x, const OpDiEndPair& a);  // x ≻ a = (x) a.g1

// The left/right operator families of a triple trisystem:
//   L_i(x,y) z = {x,y,z}_i   and   R_i(x,y) z = {z,x,y}_i.
struct LROperators {
  DiEndPair l_left;    // (L_1(x,y), L_3(x,y))
  DiEndPair l_right;   // (L_2(x,y), L_3(x,y))
  OpDiEndPair r_left;  // (R_2(x,y), R_1(x,y)), right action
  OpDiEndPair r_right; // (R_3(x,y), R_1(x,y))
};

LROperators lr_operators(const Trisystem& T, const SparseVec& x, const SparseVec& y);

// Columns of L_i(x,y) / rows of the right-acting R_i(x,y).
ExactMatrix l_operator(const Trisystem& T, int which, const SparseVec& x, const SparseVec& y);
ExactMatrix r_operator(const Trisystem& T, int which, const SparseVec& x, const SparseVec& y);

// The five dialgebra axioms for di-endomorphism products, on seeded random
// triples and (when dim <= 3) exhaustively over the spanning pairs
// (E_ab, 0), (0, E_ab).
CheckReport check_diend_dialgebra(std::size_t dim, const FieldSpec& f, std::uint64_t seed,
                                  std::size_t samples);

// Lemma identities relating products and actions:
//   (f |- g) ≻ x = (f -| g) ≻ x = f ≻ (g ≻ x),
//   (f |- g) ≺ x = f ≻ (g ≺ x),
//   (f -| g) ≺ x = f ≺ (g ≻ x),
// on seeded random (f, g, x).
CheckReport check_diend_action_identities(std::size_t dim, const FieldSpec& f, std::uint64_t seed,
                                          std::size_t samples);

// A random witness that f ≺ (g ≺ x) = f ≺ (g ≻ x) does NOT hold for general
// di-endomorphisms (it does hold on the L/R families of a trisystem that
// satisfies the interchange axioms).
struct PrecCounterexample {
  DiEndPair f, g;
  SparseVec x;
  std::string detail;
};
std::optional<PrecCounterexample> find_prec_counterexample(std::size_t dim, const FieldSpec& f,
                                                           std::uint64_t seed,
                                                           std::size_t max_tries);

// f ≺ (g ≺ x) = f ≺ (g ≻ x) for f, g drawn from the generated L/R operator
// families of T, over seeded random picks (basis pairs and basis x).
CheckReport check_extra_identity(const Trisystem& T, std::uint64_t seed, std::size_t samples);

DiEndPair random_diend(std::size_t dim, const FieldSpec& f, std::mt19937_64& rng);

}  // namespace trisys

#endif
