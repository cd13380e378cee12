#include "trisys/sparse.hpp"

#include <algorithm>

namespace trisys {

void SparseVec::axpy(const Scalar& c, const SparseVec& other) {
  if (c.is_zero() || other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = other.terms_.begin(), be = other.terms_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      out.push_back(std::move(*a));
      ++a;
    } else if (b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) out.push_back(std::move(*a));
  for (; b != be; ++b) out.emplace_back(b->first, c * b->second);
  terms_ = std::move(out);
}

void SparseVec::add(const SparseVec& other) {
  if (other.terms_.empty()) return;
  axpy(Scalar::one(other.terms_.front().second.field()), other);
}

void SparseVec::sub(const SparseVec& other) {
  if (other.terms_.empty()) return;
  axpy(-Scalar::one(other.terms_.front().second.field()), other);
}

void SparseVec::scale(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.second *= c;
}

void SparseVec::negate() {
  for (auto& t : terms_) t.second = -t.second;
}

void SparseVec::add_term(std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, std::size_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == i) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace(it, i, c);
  }
}

Scalar SparseVec::coeff(std::size_t i, const FieldSpec& f) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, std::size_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == i) return it->second;
  return Scalar::zero(f);
}

std::vector<Scalar> SparseVec::dense(std::size_t dim, const FieldSpec& f) const {
  std::vector<Scalar> d(dim, Scalar::zero(f));
  for (const auto& [i, c] : terms_) d.at(i) = c;
  return d;
}

SparseVec SparseVec::from_dense(const std::vector<Scalar>& d) {
  SparseVec v;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) v.terms_.emplace_back(i, d[i]);
  return v;
}

}  // namespace trisys
