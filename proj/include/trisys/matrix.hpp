#ifndef TRISYS_MATRIX_HPP
#define TRISYS_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trisys/scalar.hpp"
#include "trisys/sparse.hpp"

namespace trisys {

// Dense matrix over one scalar field, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
      : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

  static ExactMatrix identity(std::size_t n, const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  // column convention: (M v), v sparse over basis of size cols()
  SparseVec apply_col(const SparseVec& v) const;
  // row convention: (v M)
  SparseVec apply_row(const SparseVec& v) const;

  std::vector<Scalar> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<Scalar>& v);

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldSpec field_ = FieldSpec::rational();
  std::vector<Scalar> a_;
};

// Reduced-row-echelon basis of a span of row vectors. `rows[k]` has leading 1
// at column `pivots[k]`, zeros above and below.
struct SpanBasis {
  std::size_t width = 0;
  FieldSpec field = FieldSpec::rational();
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return rows.size(); }
};

// Echelon basis of the span of the given row vectors. Deterministic for a
// fixed input order; all vectors must share length and scalar field.
SpanBasis span_basis(const std::vector<std::vector<Scalar>>& vectors,
                     std::size_t width, const FieldSpec& f);

// Coefficients of v in an echelon basis, or nullopt when v is not in the span.
std::optional<std::vector<Scalar>> coords_in_span(const std::vector<Scalar>& v,
                                                  const SpanBasis& basis);

// Incremental span with expression tracking: every inserted vector that
// enlarges the span becomes a member of the user-facing basis, and any
// in-span vector can be written in terms of those members.
class TrackedSpan {
 public:
  TrackedSpan(std::size_t width, const FieldSpec& f) : width_(width), field_(f) {}

  // Returns true when v enlarged the span (v joins the basis).
  bool insert(const std::vector<Scalar>& v);
  std::size_t dim() const { return members_.size(); }
  const std::vector<std::vector<Scalar>>& members() const { return members_; }

  // Coefficients over members(), or nullopt if v is outside the span.
  std::optional<std::vector<Scalar>> express(const std::vector<Scalar>& v) const;

 private:
  std::size_t width_;
  FieldSpec field_;
  std::vector<std::vector<Scalar>> members_;       // original representatives
  std::vector<std::vector<Scalar>> echelon_;       // eliminated rows
  std::vector<std::vector<Scalar>> echelon_expr_;  // echelon row = expr . members
  std::vector<std::size_t> pivots_;
};

}  // namespace trisys

#endif
