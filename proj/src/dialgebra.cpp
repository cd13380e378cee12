#include "trisys/dialgebra.hpp"

#include <algorithm>

#include "trisys/catalog.hpp"

namespace trisys {

SparseVec Dialgebra::left(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) out.axpy(ci * cj, left_basis(i, j));
  return out;
}

SparseVec Dialgebra::right(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) out.axpy(ci * cj, right_basis(i, j));
  return out;
}

SparseVec Dialgebra::star(const SparseVec& a) const {
  SparseVec out;
  for (const auto& [i, c] : a.terms()) out.axpy(c, star_basis(i));
  return out;
}

TensorOps Dialgebra::ops() const {
  TensorOps o;
  o.dim = dim();
  o.arity = 2;
  o.field = field();
  o.apply = [this](int sub, const std::vector<SparseVec>& args) {
    if (args.size() != 2) throw Error("dialgebra ops need two arguments");
    switch (sub) {
      case 1: return left(args[0], args[1]);
      case 2: return right(args[0], args[1]);
      default: throw Error("dialgebra ops: unresolved subscript " + std::to_string(sub));
    }
  };
  o.label = [this](std::size_t i) { return label(i); };
  return o;
}

TableDialgebra::TableDialgebra(std::size_t dim, const FieldSpec& f)
    : dim_(dim), field_(f),
      left_(dim, std::vector<SparseVec>(dim)),
      right_(dim, std::vector<SparseVec>(dim)) {}

SparseVec TableDialgebra::star_basis(std::size_t i) const {
  if (!involution_) throw Error("no involution");
  return involution_->apply_col(SparseVec::unit(i, field_));
}

std::string TableDialgebra::label(std::size_t i) const {
  return i < labels_.size() ? labels_[i] : "e" + std::to_string(i);
}

void TableDialgebra::set_involution(ExactMatrix m) {
  if (m.rows() != dim_ || m.cols() != dim_)
    throw DimensionMismatch("involution matrix must be dim x dim");
  involution_ = std::move(m);
}

void TableDialgebra::bump(bool right_product, std::size_t i, std::size_t j, std::size_t l,
                          const Scalar& delta) {
  auto& t = right_product ? right_ : left_;
  t[i][j].add_term(l, delta);
}

// ---------------------------------------------------------------------------
// Free dialgebra

FreeDialgebra::FreeDialgebra(std::size_t generators, std::size_t max_degree)
    : g_(generators), maxdeg_(max_degree) {
  if (g_ < 1 || maxdeg_ < 1) throw Error("free dialgebra needs >= 1 generator and degree");
  offset_.assign(maxdeg_ + 2, 0);
  std::size_t count = 1;  // g^l
  for (std::size_t l = 1; l <= maxdeg_; ++l) {
    count *= g_;
    offset_[l + 1] = offset_[l] + count * l;
  }
  offset_[0] = 0;
  dim_ = offset_[maxdeg_ + 1];
}

FreeDialgebra::Word FreeDialgebra::decode(std::size_t index) const {
  std::size_t l = 1;
  while (l <= maxdeg_ && index >= offset_[l + 1]) ++l;
  std::size_t r = index - offset_[l];
  std::size_t rank = r / l;
  Word w;
  w.center = r % l + 1;
  w.letters.assign(l, 0);
  for (std::size_t t = l; t-- > 0;) {
    w.letters[t] = rank % g_;
    rank /= g_;
  }
  return w;
}

std::size_t FreeDialgebra::encode(const Word& w) const {
  std::size_t l = w.letters.size();
  std::size_t rank = 0;
  for (std::size_t t = 0; t < l; ++t) rank = rank * g_ + w.letters[t];
  return offset_[l] + rank * l + (w.center - 1);
}

SparseVec FreeDialgebra::left_basis(std::size_t i, std::size_t j) const {
  Word a = decode(i), b = decode(j);
  if (a.letters.size() + b.letters.size() > maxdeg_) return {};
  Word c;
  c.letters = a.letters;
  c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
  c.center = a.center;
  return SparseVec::unit(encode(c), field_);
}

SparseVec FreeDialgebra::right_basis(std::size_t i, std::size_t j) const {
  Word a = decode(i), b = decode(j);
  if (a.letters.size() + b.letters.size() > maxdeg_) return {};
  Word c;
  c.letters = a.letters;
  c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
  c.center = a.letters.size() + b.center;
  return SparseVec::unit(encode(c), field_);
}

SparseVec FreeDialgebra::star_basis(std::size_t i) const {
  Word a = decode(i);
  Word b;
  b.letters.assign(a.letters.rbegin(), a.letters.rend());
  b.center = a.letters.size() + 1 - a.center;
  return SparseVec::unit(encode(b), field_);
}

std::string FreeDialgebra::label(std::size_t i) const {
  Word w = decode(i);
  std::string s = "(";
  for (std::size_t t = 0; t < w.letters.size(); ++t)
    s += static_cast<char>('a' + (w.letters[t] % 26));
  s += "," + std::to_string(w.center) + ")";
  return s;
}

std::size_t FreeDialgebra::generator_index(std::size_t k) const {
  if (k >= g_) throw Error("generator index out of range");
  Word w;
  w.letters = {k};
  w.center = 1;
  return encode(w);
}

std::vector<std::size_t> FreeDialgebra::generator_indices() const {
  std::vector<std::size_t> out(g_);
  for (std::size_t k = 0; k < g_; ++k) out[k] = generator_index(k);
  return out;
}

// ---------------------------------------------------------------------------
// Matrix dialgebra

namespace {

std::string unit_label(std::size_t r, std::size_t c) {
  return "E" + std::to_string(r + 1) + std::to_string(c + 1);
}

}  // namespace

TableDialgebra matrix_dialgebra(std::size_t m, std::size_t m1, const FieldSpec& f,
                                bool complex_like) {
  if (m1 < 1 || m1 >= m) throw Error("matrix dialgebra requires 1 <= m1 < m");
  const std::size_t split = m - m1;  // first block-column / block-row width
  const std::size_t ring = complex_like ? 2 : 1;
  const std::size_t dim = m * m * ring;
  TableDialgebra D(dim, f);

  // basis index (r, c, eps); eps picks the ring component (1,0) or (0,1)
  auto idx = [&](std::size_t r, std::size_t c, std::size_t eps) {
    return (r * m + c) * ring + eps;
  };
  std::vector<std::string> labels(dim);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t eps = 0; eps < ring; ++eps)
        labels[idx(r, c, eps)] = unit_label(r, c) + (ring == 2 ? (eps ? "t" : "s") : "");
  D.set_labels(labels);

  // E_rc . E_st = delta_cs E_rt; ring components multiply componentwise
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
          if (c != s) continue;
          for (std::size_t e1 = 0; e1 < ring; ++e1)
            for (std::size_t e2 = 0; e2 < ring; ++e2) {
              if (ring == 2 && e1 != e2) continue;  // s.t = 0
              // left product masks the first block column: keep c,t >= split
              if (c >= split && t >= split)
                D.set_left(idx(r, c, e1), idx(s, t, e2),
                           SparseVec::unit(idx(r, t, e1), f));
              // right product masks the first block row: keep r,s >= split
              if (r >= split && s >= split)
                D.set_right(idx(r, c, e1), idx(s, t, e2),
                            SparseVec::unit(idx(r, t, e1), f));
            }
        }

  // conjugate transpose; conjugation swaps the two ring components
  ExactMatrix inv(dim, dim, f);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t eps = 0; eps < ring; ++eps)
        inv.at(idx(c, r, ring == 2 ? 1 - eps : eps), idx(r, c, eps)) = Scalar::one(f);
  D.set_involution(std::move(inv));
  return D;
}

// ---------------------------------------------------------------------------
// Differential dialgebra

TableDialgebra differential_dialgebra(const std::vector<std::vector<SparseVec>>& mult,
                                      const ExactMatrix& d_map,
                                      const std::vector<std::string>& labels) {
  const std::size_t n = mult.size();
  if (d_map.rows() != n || d_map.cols() != n)
    throw DimensionMismatch("d map must be dim x dim");
  const FieldSpec f = d_map.field();
  auto product = [&](const SparseVec& a, const SparseVec& b) {
    SparseVec out;
    for (const auto& [i, ci] : a.terms())
      for (const auto& [j, cj] : b.terms()) out.axpy(ci * cj, mult.at(i).at(j));
    return out;
  };
  auto name = [&](std::size_t i) {
    return i < labels.size() ? labels[i] : "e" + std::to_string(i);
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec lhs = product(mult[i][j], SparseVec::unit(k, f));
        SparseVec rhs = product(SparseVec::unit(i, f), mult[j][k]);
        if (lhs != rhs)
          throw PreconditionError("differential dialgebra: product not associative",
                                  "(" + name(i) + ", " + name(j) + ", " + name(k) + ")");
      }
  if (!(d_map * d_map).is_zero()) {
    for (std::size_t i = 0; i < n; ++i)
      if (!(d_map * d_map).apply_col(SparseVec::unit(i, f)).is_zero())
        throw PreconditionError("differential dialgebra: d^2 != 0", name(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec lhs = d_map.apply_col(mult[i][j]);
      SparseVec rhs = product(d_map.apply_col(SparseVec::unit(i, f)), SparseVec::unit(j, f));
      rhs.add(product(SparseVec::unit(i, f), d_map.apply_col(SparseVec::unit(j, f))));
      if (lhs != rhs)
        throw PreconditionError("differential dialgebra: d is not a derivation",
                                "(" + name(i) + ", " + name(j) + ")");
    }

  TableDialgebra D(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      D.set_left(i, j, product(SparseVec::unit(i, f), d_map.apply_col(SparseVec::unit(j, f))));
      D.set_right(i, j, product(d_map.apply_col(SparseVec::unit(i, f)), SparseVec::unit(j, f)));
    }
  if (!labels.empty()) D.set_labels(labels);
  return D;
}

TableDialgebra dialgebra_from_associative(const std::vector<std::vector<SparseVec>>& mult,
                                          std::size_t dim, const FieldSpec& f,
                                          const std::vector<std::string>& labels) {
  TableDialgebra D(dim, f);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      D.set_left(i, j, mult[i][j]);
      D.set_right(i, j, mult[i][j]);
    }
  if (!labels.empty()) D.set_labels(labels);
  return D;
}

// ---------------------------------------------------------------------------
// Checks

CheckReport check_dialgebra_axioms(const Dialgebra& D, const EvalLimits& limits) {
  return check_chains(axiom_set(AxiomSet::Dialgebra), D.ops(), EvalMode::exhaustive(), limits);
}

CheckReport check_involution(const Dialgebra& D) {
  if (!D.has_involution()) throw Error("check_involution: instance has no involution");
  CheckReport report;
  const FieldSpec& f = D.field();
  for (std::size_t i = 0; i < D.dim(); ++i) {
    ++report.evaluations;
    if (D.star(D.star_basis(i)) != SparseVec::unit(i, f))
      report.fail("involutive", "(" + D.label(i) + "*)* != " + D.label(i));
  }
  for (std::size_t i = 0; i < D.dim(); ++i)
    for (std::size_t j = 0; j < D.dim(); ++j) {
      ++report.evaluations;
      SparseVec lhs = D.star(D.left_basis(i, j));
      SparseVec rhs = D.right(D.star_basis(j), D.star_basis(i));
      if (lhs != rhs)
        report.fail("antiautomorphism_left",
                    "(" + D.label(i) + " -| " + D.label(j) + ")* != " + D.label(j) + "* |- " +
                        D.label(i) + "*");
      lhs = D.star(D.right_basis(i, j));
      rhs = D.left(D.star_basis(j), D.star_basis(i));
      if (lhs != rhs)
        report.fail("antiautomorphism_right",
                    "(" + D.label(i) + " |- " + D.label(j) + ")* != " + D.label(j) + "* -| " +
                        D.label(i) + "*");
    }
  return report;
}

SparseVec BilinearTable::apply(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) out.axpy(ci * cj, table.at(i).at(j));
  return out;
}

BilinearTable dminus_bracket(const Dialgebra& D) {
  BilinearTable b;
  b.dim = D.dim();
  b.field = D.field();
  b.table.assign(b.dim, std::vector<SparseVec>(b.dim));
  b.labels.resize(b.dim);
  for (std::size_t i = 0; i < b.dim; ++i) b.labels[i] = D.label(i);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      SparseVec v = D.left_basis(i, j);
      v.sub(D.right_basis(j, i));
      b.table[i][j] = std::move(v);
    }
  return b;
}

CheckReport check_right_leibniz(const BilinearTable& bracket, const EvalLimits& limits) {
  TensorOps ops;
  ops.dim = bracket.dim;
  ops.arity = 2;
  ops.field = bracket.field;
  ops.apply = [&bracket](int sub, const std::vector<SparseVec>& args) {
    if (sub != 0) throw Error("right Leibniz check uses the plain bracket only");
    return bracket.apply(args[0], args[1]);
  };
  ops.label = [&bracket](std::size_t i) { return bracket.label(i); };
  CheckReport r =
      check_chains(axiom_set(AxiomSet::RightLeibniz), ops, EvalMode::exhaustive(), limits);
  r.note = "right Leibniz convention [[a,b],c] = [[a,c],b] + [a,[b,c]]";
  return r;
}

SubalgebraResult subalgebra_structure_constants(
    const BilinearTable& bracket, const std::vector<std::vector<Scalar>>& generators) {
  TrackedSpan span(bracket.dim, bracket.field);
  SubalgebraResult res;
  for (const auto& g : generators) span.insert(g);
  // close under the bracket
  bool grew = true;
  while (grew) {
    grew = false;
    const auto members = span.members();  // copy: span may grow inside
    for (std::size_t i = 0; i < members.size() && !grew; ++i)
      for (std::size_t j = 0; j < members.size() && !grew; ++j) {
        SparseVec v = bracket.apply(SparseVec::from_dense(members[i]),
                                    SparseVec::from_dense(members[j]));
        std::vector<Scalar> dense = v.dense(bracket.dim, bracket.field);
        if (span.insert(dense)) {
          grew = true;
          res.closed_from_start = false;
        }
      }
  }
  res.basis = span.members();
  const std::size_t n = res.basis.size();
  res.constants.assign(n, std::vector<std::vector<Scalar>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec v = bracket.apply(SparseVec::from_dense(res.basis[i]),
                                  SparseVec::from_dense(res.basis[j]));
      auto coords = span.express(v.dense(bracket.dim, bracket.field));
      if (!coords) throw Error("subalgebra closure failed to express a product");
      res.constants[i][j] = *coords;
    }
  return res;
}

}  // namespace trisys
