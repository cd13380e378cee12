#ifndef TRISYS_TRISYSTEM_HPP
#define TRISYS_TRISYSTEM_HPP

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "trisys/catalog.hpp"
#include "trisys/dialgebra.hpp"
#include "trisys/eval.hpp"
#include "trisys/matrix.hpp"
#include "trisys/report.hpp"

namespace trisys {

// A module with three trilinear products {a,b,c}_1, {a,b,c}_2, {a,b,c}_3
// given on basis triples.
class Trisystem {
 public:
  virtual ~Trisystem() = default;
  virtual std::size_t dim() const = 0;
  virtual const FieldSpec& field() const = 0;
  virtual SparseVec t_basis(int which, std::size_t i, std::size_t j, std::size_t k) const = 0;
  virtual std::string label(std::size_t i) const { return "e" + std::to_string(i); }
  virtual std::string provenance() const { return "custom"; }

  SparseVec t(int which, const SparseVec& a, const SparseVec& b, const SparseVec& c) const;
  TensorOps ops() const;  // subscripts 1,2,3 (and 0 as an alias of 1 for ATS checks)
};

class DenseTrisystem : public Trisystem {
 public:
  DenseTrisystem(std::size_t dim, const FieldSpec& f, std::string provenance = "custom");

  std::size_t dim() const override { return dim_; }
  const FieldSpec& field() const override { return field_; }
  SparseVec t_basis(int which, std::size_t i, std::size_t j, std::size_t k) const override;
  std::string label(std::size_t i) const override;
  std::string provenance() const override { return provenance_; }

  void set(int which, std::size_t i, std::size_t j, std::size_t k, SparseVec v);
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }
  const std::vector<std::string>& labels() const { return labels_; }

  // add delta to the coefficient of basis l in {e_i,e_j,e_k}_which
  void bump(int which, std::size_t i, std::size_t j, std::size_t k, std::size_t l,
            const Scalar& delta);

 private:
  std::size_t flat(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dim_ + j) * dim_ + k;
  }
  std::size_t dim_;
  FieldSpec field_;
  std::string provenance_;
  std::array<std::vector<SparseVec>, 3> t_;
  std::vector<std::string> labels_;
};

// {a,b,c}_1 = (a -| b) -| c, {a,b,c}_2 = (a |- b) -| c, {a,b,c}_3 = (a |- b) |- c,
// computed lazily from the dialgebra (usable on the free model).
class Att1View : public Trisystem {
 public:
  explicit Att1View(const Dialgebra& D) : d_(&D) {}
  std::size_t dim() const override { return d_->dim(); }
  const FieldSpec& field() const override { return d_->field(); }
  SparseVec t_basis(int which, std::size_t i, std::size_t j, std::size_t k) const override;
  std::string label(std::size_t i) const override { return d_->label(i); }
  std::string provenance() const override { return "att1"; }
  const Dialgebra& dialgebra() const { return *d_; }

 private:
  const Dialgebra* d_;
};

// {a,b,c}_1 = a -| (b* -| c), {a,b,c}_2 = a |- (b* -| c), {a,b,c}_3 = a |- (b* |- c).
class Att2View : public Trisystem {
 public:
  explicit Att2View(const Dialgebra& D);
  std::size_t dim() const override { return d_->dim(); }
  const FieldSpec& field() const override { return d_->field(); }
  SparseVec t_basis(int which, std::size_t i, std::size_t j, std::size_t k) const override;
  std::string label(std::size_t i) const override { return d_->label(i); }
  std::string provenance() const override { return "att2"; }
  const Dialgebra& dialgebra() const { return *d_; }

 private:
  const Dialgebra* d_;
};

DenseTrisystem materialize(const Trisystem& T, std::string provenance = "");

// Materialized constructions (the view classes serve the free model).
DenseTrisystem att1_from_dialgebra(const Dialgebra& D);
DenseTrisystem att2_from_dialgebra(const Dialgebra& D);

// Derived Jordan products <a,b,c>_1 = {a,b,c}_1 + {c,b,a}_3 and
// <a,b,c>_2 = {a,b,c}_2 + {c,b,a}_2 (symmetric in its outer arguments by
// construction).
class JtdProducts {
 public:
  explicit JtdProducts(const Trisystem& T) : t_(&T) {}
  SparseVec j_basis(int which, std::size_t i, std::size_t j, std::size_t k) const;
  TensorOps ops() const;  // subscripts 1, 2
  const Trisystem& base() const { return *t_; }

 private:
  const Trisystem* t_;
};

// Derived bracket [a,b,c] = {a,b,c}_1 - {b,a,c}_2 - {c,a,b}_2 + {c,b,a}_3.
class LeibtsBracket {
 public:
  explicit LeibtsBracket(const Trisystem& T) : t_(&T) {}
  SparseVec lb_basis(std::size_t i, std::size_t j, std::size_t k) const;
  TensorOps ops() const;  // plain subscript 0
  const Trisystem& base() const { return *t_; }

 private:
  const Trisystem* t_;
};

// Runs every chain of the named set against the appropriate products of T:
// ATT1/ATT2/ATS1/ATS2 use the three (or first) triple products, JTD the
// derived Jordan pair, LEIBTS the derived bracket.
CheckReport check_variety(const Trisystem& T, AxiomSet set, const EvalMode& mode,
                          const EvalLimits& limits = default_limits());

// Same run, reported chain by chain (name, outcome).
std::vector<std::pair<std::string, CheckReport>> check_variety_chains(
    const Trisystem& T, AxiomSet set, const EvalMode& mode,
    const EvalLimits& limits = default_limits());

// Span of the vectors {a,b,c}_1 - {a,b,c}_2 and {a,b,c}_1 - {a,b,c}_3 over
// all basis triples. Empty exactly when the three products coincide.
SpanBasis ann_subspace(const Trisystem& T, const EvalLimits& limits = default_limits());

struct ComplementReport {
  CheckReport report;
  bool is_complement = false;
  bool closed = false;
  bool products_coincide = false;
  std::unique_ptr<DenseTrisystem> restricted;  // constants over the complement basis
};

// Checks that the given rows complement ann_subspace(T), that they are closed
// under all three products, that the restricted products coincide, and that
// the restriction satisfies the ATS axioms of the requested kind (1 or 2).
ComplementReport complement_closure_check(const Trisystem& T,
                                          const std::vector<std::vector<Scalar>>& complement,
                                          int ats_kind,
                                          const EvalLimits& limits = default_limits());

}  // namespace trisys

#endif
