#ifndef TRISYS_SPARSE_HPP
#define TRISYS_SPARSE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "trisys/scalar.hpp"

namespace trisys {

// Sparse module element: sorted (basis index, coefficient) pairs, no zeros.
class SparseVec {
 public:
  using Term = std::pair<std::size_t, Scalar>;

  SparseVec() = default;
  static SparseVec unit(std::size_t i, const FieldSpec& f) {
    SparseVec v;
    v.terms_.emplace_back(i, Scalar::one(f));
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // this += c * other
  void axpy(const Scalar& c, const SparseVec& other);
  void add(const SparseVec& other);
  void sub(const SparseVec& other);
  void scale(const Scalar& c);
  void negate();
  void add_term(std::size_t i, const Scalar& c);  // single-term axpy

  Scalar coeff(std::size_t i, const FieldSpec& f) const;

  std::vector<Scalar> dense(std::size_t dim, const FieldSpec& f) const;
  static SparseVec from_dense(const std::vector<Scalar>& d);

  bool operator==(const SparseVec& o) const { return terms_ == o.terms_; }
  bool operator!=(const SparseVec& o) const { return !(*this == o); }

  friend SparseVec operator-(SparseVec a, const SparseVec& b) {
    a.sub(b);
    return a;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) {
    a.add(b);
    return a;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace trisys

#endif
