#ifndef TRISYS_DIALGEBRA_HPP
#define TRISYS_DIALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trisys/eval.hpp"
#include "trisys/matrix.hpp"
#include "trisys/report.hpp"
#include "trisys/sparse.hpp"

namespace trisys {

// A finite-dimensional module with two bilinear products (left, right) given
// on basis pairs, and optionally a linear involution. Products are served
// sparsely so large lazily-defined instances (the free dialgebra) fit the
// same interface as tabulated ones.
class Dialgebra {
 public:
  virtual ~Dialgebra() = default;
  virtual std::size_t dim() const = 0;
  virtual const FieldSpec& field() const = 0;
  virtual SparseVec left_basis(std::size_t i, std::size_t j) const = 0;   // e_i -| e_j
  virtual SparseVec right_basis(std::size_t i, std::size_t j) const = 0;  // e_i |- e_j
  virtual bool has_involution() const { return false; }
  virtual SparseVec star_basis(std::size_t) const { throw Error("no involution"); }
  virtual std::string label(std::size_t i) const { return "e" + std::to_string(i); }

  // bilinear / linear extensions
  SparseVec left(const SparseVec& a, const SparseVec& b) const;
  SparseVec right(const SparseVec& a, const SparseVec& b) const;
  SparseVec star(const SparseVec& a) const;

  TensorOps ops() const;  // subscript 1 -> left, 2 -> right (arity 2)
};

// Explicit product tables.
class TableDialgebra : public Dialgebra {
 public:
  TableDialgebra(std::size_t dim, const FieldSpec& f);

  std::size_t dim() const override { return dim_; }
  const FieldSpec& field() const override { return field_; }
  SparseVec left_basis(std::size_t i, std::size_t j) const override { return left_[i][j]; }
  SparseVec right_basis(std::size_t i, std::size_t j) const override { return right_[i][j]; }
  bool has_involution() const override { return involution_.has_value(); }
  SparseVec star_basis(std::size_t i) const override;
  std::string label(std::size_t i) const override;

  void set_left(std::size_t i, std::size_t j, SparseVec v) { left_[i][j] = std::move(v); }
  void set_right(std::size_t i, std::size_t j, SparseVec v) { right_[i][j] = std::move(v); }
  void set_involution(ExactMatrix m);
  void clear_involution() { involution_.reset(); }
  const std::optional<ExactMatrix>& involution() const { return involution_; }
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }
  const std::vector<std::string>& labels() const { return labels_; }

  // add delta to the coefficient of basis l in e_i op e_j (mutation testing)
  void bump(bool right_product, std::size_t i, std::size_t j, std::size_t l, const Scalar& delta);

 private:
  std::size_t dim_;
  FieldSpec field_;
  std::vector<std::vector<SparseVec>> left_, right_;
  std::optional<ExactMatrix> involution_;
  std::vector<std::string> labels_;
};

// Free dialgebra on g generators in normal form, truncated above max_degree:
// basis elements are pairs (word, center), products
//   (w,c) -| (w',c') = (ww', c),   (w,c) |- (w',c') = (ww', |w| + c'),
// and any product whose combined length exceeds max_degree is zero.
// Evaluating a multilinear identity on distinct generators here proves it
// for every dialgebra.
class FreeDialgebra : public Dialgebra {
 public:
  FreeDialgebra(std::size_t generators, std::size_t max_degree);

  std::size_t dim() const override { return dim_; }
  const FieldSpec& field() const override { return field_; }
  SparseVec left_basis(std::size_t i, std::size_t j) const override;
  SparseVec right_basis(std::size_t i, std::size_t j) const override;
  bool has_involution() const override { return true; }
  // (w, c) -> (reverse(w), |w| + 1 - c)
  SparseVec star_basis(std::size_t i) const override;
  std::string label(std::size_t i) const override;

  std::size_t generators() const { return g_; }
  std::size_t max_degree() const { return maxdeg_; }
  std::size_t generator_index(std::size_t k) const;  // basis index of (x_k, 1)
  std::vector<std::size_t> generator_indices() const;

  struct Word {
    std::vector<std::size_t> letters;
    std::size_t center;  // 1-based
  };
  Word decode(std::size_t index) const;
  std::size_t encode(const Word& w) const;

 private:
  std::size_t g_, maxdeg_, dim_;
  FieldSpec field_ = FieldSpec::rational();
  std::vector<std::size_t> offset_;  // offset_[l] = first index of length-l block
};

// The matrix dialgebra on m x m matrices split below row/column m1: products
// mask the first block column (left product) or the first block row (right
// product) and multiply; the involution is the conjugate transpose. The base
// ring is the scalar field itself, or, with complex_like, the rank-2 ring of
// pairs with swapped conjugation so the conjugate transpose is a genuinely
// nontrivial ring involution.
TableDialgebra matrix_dialgebra(std::size_t m, std::size_t m1, const FieldSpec& f,
                                bool complex_like = false);

// Dialgebra of a differential associative algebra: a -| b = a.d(b),
// a |- b = d(a).b. Preconditions (associativity, d^2 = 0, Leibniz rule for d)
// are verified on basis tuples and reported with a witness when violated.
TableDialgebra differential_dialgebra(const std::vector<std::vector<SparseVec>>& assoc_mult,
                                      const ExactMatrix& d_map,
                                      const std::vector<std::string>& labels = {});

// Both products equal to one associative product (embeds an associative
// algebra as a degenerate dialgebra).
TableDialgebra dialgebra_from_associative(const std::vector<std::vector<SparseVec>>& assoc_mult,
                                          std::size_t dim, const FieldSpec& f,
                                          const std::vector<std::string>& labels = {});

// Exhaustive checks on basis tuples (complete by multilinearity).
CheckReport check_dialgebra_axioms(const Dialgebra& D,
                                   const EvalLimits& limits = default_limits());
CheckReport check_involution(const Dialgebra& D);

// Structure table of [a,b] = a -| b - b |- a.
struct BilinearTable {
  std::size_t dim = 0;
  FieldSpec field = FieldSpec::rational();
  std::vector<std::vector<SparseVec>> table;
  std::vector<std::string> labels;

  SparseVec apply(const SparseVec& a, const SparseVec& b) const;
  std::string label(std::size_t i) const {
    return i < labels.size() ? labels[i] : "e" + std::to_string(i);
  }
};

BilinearTable dminus_bracket(const Dialgebra& D);

// Right Leibniz identity [[a,b],c] = [[a,c],b] + [a,[b,c]], checked
// exhaustively on basis triples. The report notes the convention used.
CheckReport check_right_leibniz(const BilinearTable& bracket,
                                const EvalLimits& limits = default_limits());

struct SubalgebraResult {
  bool closed_from_start = true;          // no vectors had to be added
  std::vector<std::vector<Scalar>> basis; // closure basis (generators first)
  // constants[i][j] = coordinates of [basis_i, basis_j] over basis
  std::vector<std::vector<std::vector<Scalar>>> constants;
};

// Closes the span of the generating vectors under the bracket and returns
// structure constants over the closure basis.
SubalgebraResult subalgebra_structure_constants(const BilinearTable& bracket,
                                                const std::vector<std::vector<Scalar>>& generators);

}  // namespace trisys

#endif
