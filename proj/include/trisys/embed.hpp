#ifndef TRISYS_EMBED_HPP
#define TRISYS_EMBED_HPP

#include <memory>
#include <string>
#include <vector>

#include "trisys/diend.hpp"
#include "trisys/dialgebra.hpp"
#include "trisys/matrix.hpp"
#include "trisys/report.hpp"
#include "trisys/trisystem.hpp"

namespace trisys {

// Element of DiEnd(T) ⊕ DiEnd(T)^op: a left-acting pair and a right-acting
// pair. Products act componentwise; flattening gives 4·dim² coordinates.
struct MElem {
  DiEndPair l;
  OpDiEndPair r;

  std::vector<Scalar> flatten() const;
  static MElem zero(std::size_t dim, const FieldSpec& f);
  static MElem from_flat(const std::vector<Scalar>& v, std::size_t dim, const FieldSpec& f);

  bool operator==(const MElem& o) const { return l == o.l && r == o.r; }
  bool operator!=(const MElem& o) const { return !(*this == o); }
};

MElem m_left(const MElem& a, const MElem& b);
MElem m_right(const MElem& a, const MElem& b);

// The generators x ◁ y (kind '<') and x ▷ y (kind '>') of the operator
// module of a triple trisystem; bilinear in x and y.
MElem m_generator(const Trisystem& T, char kind, const SparseVec& x, const SparseVec& y);

// Span of all x ◁ y, x ▷ y over basis pairs, with the closed-form product
// identities verified exhaustively on basis 4-tuples:
//   (x◁y)-|(z◁u) = x◁{y,z,u}_1 = {x,y,z}_1◁u = (x◁y)-|(z▷u)
//   (x◁y)|-(z◁u) = {x,y,z}_3◁u = x▷{y,z,u}_2 = (x▷y)|-(z◁u)
//   (x▷y)-|(z◁u) = x▷{y,z,u}_1 = {x,y,z}_2◁u = (x▷y)-|(z▷u)
//   (x◁y)|-(z▷u) = {x,y,z}_3▷u = x▷{y,z,u}_3 = (x▷y)|-(z▷u)
struct MSpan {
  std::size_t base_dim = 0;
  FieldSpec field = FieldSpec::rational();
  std::unique_ptr<TrackedSpan> span;
  std::vector<MElem> basis;
  CheckReport report;  // closure + closed-form identities

  std::size_t dim() const { return basis.size(); }
};

MSpan build_M(const Trisystem& T, const EvalLimits& limits = default_limits());

struct BlockDesc {
  std::string name;
  std::size_t offset = 0;
  std::size_t dim = 0;
};

// A dialgebra assembled from operator blocks and the module, together with
// the block layout and the report of the recovery identities.
struct EmbeddingAlgebra {
  std::unique_ptr<TableDialgebra> dia;
  std::vector<BlockDesc> blocks;
  CheckReport construction;  // span closure, product expressions
  CheckReport recovery;      // triple products recovered through -| and |-
  std::string kind;          // "first" or "second"

  std::size_t block_offset(const std::string& name) const;
};

// First-kind standard embedding U = M(A,A) ⊕ A with
//   x -| y = x◁y, x |- y = x▷y,
//   (x◁y) -| z = {x,y,z}_1, (x◁y) |- z = {x,y,z}_3,
//   z -| (x◁y) = {z,x,y}_1, z |- (x◁y) = {z,x,y}_2,
//   (x▷y) -| z = {x,y,z}_2, (x▷y) |- z = {x,y,z}_3,
//   z -| (x▷y) = {z,x,y}_1, z |- (x▷y) = {z,x,y}_3,
// and recovery {x,y,z}_1 = x-|(y-|z), {x,y,z}_2 = x|-(y-|z),
// {x,y,z}_3 = x|-(y|-z).
EmbeddingAlgebra build_U(const Trisystem& T, const EvalLimits& limits = default_limits());

// Spans of the L and R operator families of a second-kind trisystem,
// with the eight closed-form product identities and the involution
// (L◁(x,y))* = L▷(y,x), (R◁(x,y))* = R▷(y,x) verified; the involution is
// checked to be well defined on linear combinations before being used.
struct LRSpans {
  std::size_t base_dim = 0;
  FieldSpec field = FieldSpec::rational();
  std::unique_ptr<TrackedSpan> lspan, rspan;
  std::vector<DiEndPair> lbasis;
  std::vector<OpDiEndPair> rbasis;
  ExactMatrix lstar, rstar;  // involution in span coordinates
  CheckReport report;

  std::size_t ldim() const { return lbasis.size(); }
  std::size_t rdim() const { return rbasis.size(); }
};

LRSpans build_L_R(const Trisystem& T, const EvalLimits& limits = default_limits());

// Second-kind standard embedding L(A,A) ⊕ A ⊕ Ā ⊕ R(A,A)^op with the
// 2x2-block products, the involution ⋆ swapping A and Ā and starring the
// operator blocks, and recovery {x,y,z}_1 = x-|(y⋆-|z),
// {x,y,z}_2 = x|-(y⋆-|z), {x,y,z}_3 = x|-(y⋆|-z).
EmbeddingAlgebra build_U2(const Trisystem& T, const EvalLimits& limits = default_limits());

}  // namespace trisys

#endif
