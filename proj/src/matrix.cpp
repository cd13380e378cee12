#include "trisys/matrix.hpp"

#include <sstream>

namespace trisys {

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldSpec& f) {
  ExactMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (field_ != o.field_) throw KindMismatch("matrix product field mismatch");
  ExactMatrix m(rows_, o.cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        if (o.at(k, c).is_zero()) continue;
        m.at(r, c) += x * o.at(k, c);
      }
    }
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  ExactMatrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape mismatch");
  ExactMatrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

SparseVec ExactMatrix::apply_col(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, c] : v.terms()) {
    if (j >= cols_) throw DimensionMismatch("apply_col index out of range");
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& m = at(r, j);
      if (!m.is_zero()) out.add_term(r, m * c);
    }
  }
  return out;
}

SparseVec ExactMatrix::apply_row(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, c] : v.terms()) {
    if (i >= rows_) throw DimensionMismatch("apply_row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& m = at(i, j);
      if (!m.is_zero()) out.add_term(j, m * c);
    }
  }
  return out;
}

std::vector<Scalar> ExactMatrix::row(std::size_t r) const {
  return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_};
}

void ExactMatrix::set_row(std::size_t r, const std::vector<Scalar>& v) {
  if (v.size() != cols_) throw DimensionMismatch("set_row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).str();
    os << (r + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

namespace {

void check_uniform(const std::vector<std::vector<Scalar>>& vectors, std::size_t width,
                   const FieldSpec& f) {
  for (const auto& v : vectors) {
    if (v.size() != width) throw DimensionMismatch("span: row length mismatch");
    for (const auto& s : v)
      if (s.field() != f)
        throw KindMismatch("span: mixed scalar kinds (" + s.field().str() + " vs " + f.str() + ")");
  }
}

// Reduce v against echelon rows in place; returns the coefficients used.
std::vector<Scalar> reduce_row(std::vector<Scalar>& v,
                               const std::vector<std::vector<Scalar>>& rows,
                               const std::vector<std::size_t>& pivots, const FieldSpec& f) {
  std::vector<Scalar> used(rows.size(), Scalar::zero(f));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Scalar c = v[pivots[k]];  // by value: the loop below clears this slot
    if (c.is_zero()) continue;
    used[k] = c;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!rows[k][j].is_zero()) v[j] -= c * rows[k][j];
  }
  return used;
}

}  // namespace

SpanBasis span_basis(const std::vector<std::vector<Scalar>>& vectors, std::size_t width,
                     const FieldSpec& f) {
  check_uniform(vectors, width, f);
  SpanBasis b;
  b.width = width;
  b.field = f;
  for (const auto& v0 : vectors) {
    std::vector<Scalar> v = v0;
    reduce_row(v, b.rows, b.pivots, f);
    std::size_t piv = width;
    for (std::size_t j = 0; j < width; ++j)
      if (!v[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv == width) continue;
    Scalar inv = v[piv].inverse();
    for (auto& s : v) s *= inv;
    // clear this column in existing rows, keep reduced form
    for (std::size_t k = 0; k < b.rows.size(); ++k) {
      const Scalar c = b.rows[k][piv];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < width; ++j)
        if (!v[j].is_zero()) b.rows[k][j] -= c * v[j];
    }
    // insert sorted by pivot column
    std::size_t pos = 0;
    while (pos < b.pivots.size() && b.pivots[pos] < piv) ++pos;
    b.rows.insert(b.rows.begin() + pos, std::move(v));
    b.pivots.insert(b.pivots.begin() + pos, piv);
  }
  return b;
}

std::optional<std::vector<Scalar>> coords_in_span(const std::vector<Scalar>& v,
                                                  const SpanBasis& basis) {
  if (v.size() != basis.width) throw DimensionMismatch("coords_in_span length mismatch");
  std::vector<Scalar> w = v;
  std::vector<Scalar> used = reduce_row(w, basis.rows, basis.pivots, basis.field);
  for (const auto& s : w)
    if (!s.is_zero()) return std::nullopt;
  return used;
}

bool TrackedSpan::insert(const std::vector<Scalar>& v) {
  if (v.size() != width_) throw DimensionMismatch("TrackedSpan insert length mismatch");
  std::vector<Scalar> w = v;
  std::vector<Scalar> used = reduce_row(w, echelon_, pivots_, field_);
  std::size_t piv = width_;
  for (std::size_t j = 0; j < width_; ++j)
    if (!w[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv == width_) return false;
  // expression of w over members: v - sum used[k] * echelon_expr_[k], then
  // the new member is v itself.
  std::vector<Scalar> expr(members_.size() + 1, Scalar::zero(field_));
  for (std::size_t k = 0; k < used.size(); ++k)
    for (std::size_t m = 0; m < members_.size(); ++m)
      expr[m] -= used[k] * echelon_expr_[k][m];
  expr[members_.size()] = Scalar::one(field_);
  Scalar inv = w[piv].inverse();
  for (auto& s : w) s *= inv;
  for (auto& s : expr) s *= inv;
  members_.push_back(v);
  for (auto& e : echelon_expr_) e.push_back(Scalar::zero(field_));
  echelon_.push_back(std::move(w));
  echelon_expr_.push_back(std::move(expr));
  pivots_.push_back(piv);
  return true;
}

std::optional<std::vector<Scalar>> TrackedSpan::express(const std::vector<Scalar>& v) const {
  std::vector<Scalar> w = v;
  std::vector<Scalar> used = reduce_row(w, echelon_, pivots_, field_);
  for (const auto& s : w)
    if (!s.is_zero()) return std::nullopt;
  std::vector<Scalar> out(members_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < used.size(); ++k)
    for (std::size_t m = 0; m < members_.size(); ++m)
      out[m] += used[k] * echelon_expr_[k][m];
  return out;
}

}  // namespace trisys
