#include "trisys/trisystem.hpp"

namespace trisys {

SparseVec Trisystem::t(int which, const SparseVec& a, const SparseVec& b,
                       const SparseVec& c) const {
  SparseVec out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      Scalar cij = ci * cj;
      for (const auto& [k, ck] : c.terms()) out.axpy(cij * ck, t_basis(which, i, j, k));
    }
  return out;
}

TensorOps Trisystem::ops() const {
  TensorOps o;
  o.dim = dim();
  o.arity = 3;
  o.field = field();
  o.apply = [this](int sub, const std::vector<SparseVec>& args) {
    if (args.size() != 3) throw Error("trisystem ops need three arguments");
    if (sub == 0) sub = 1;  // plain bracket: the (single) triple product
    if (sub < 1 || sub > 3) throw Error("trisystem ops: unresolved subscript " + std::to_string(sub));
    return t(sub, args[0], args[1], args[2]);
  };
  o.label = [this](std::size_t i) { return label(i); };
  return o;
}

DenseTrisystem::DenseTrisystem(std::size_t dim, const FieldSpec& f, std::string provenance)
    : dim_(dim), field_(f), provenance_(std::move(provenance)) {
  for (auto& t : t_) t.assign(dim_ * dim_ * dim_, SparseVec{});
}

SparseVec DenseTrisystem::t_basis(int which, std::size_t i, std::size_t j, std::size_t k) const {
  return t_.at(which - 1)[flat(i, j, k)];
}

std::string DenseTrisystem::label(std::size_t i) const {
  return i < labels_.size() ? labels_[i] : "e" + std::to_string(i);
}

void DenseTrisystem::set(int which, std::size_t i, std::size_t j, std::size_t k, SparseVec v) {
  t_.at(which - 1)[flat(i, j, k)] = std::move(v);
}

void DenseTrisystem::bump(int which, std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                          const Scalar& delta) {
  t_.at(which - 1)[flat(i, j, k)].add_term(l, delta);
}

SparseVec Att1View::t_basis(int which, std::size_t i, std::size_t j, std::size_t k) const {
  const SparseVec ek = SparseVec::unit(k, d_->field());
  switch (which) {
    case 1: return d_->left(d_->left_basis(i, j), ek);
    case 2: return d_->left(d_->right_basis(i, j), ek);
    case 3: return d_->right(d_->right_basis(i, j), ek);
    default: throw Error("triple product index must be 1, 2 or 3");
  }
}

Att2View::Att2View(const Dialgebra& D) : d_(&D) {
  if (!D.has_involution()) throw Error("att2 requires a dialgebra with involution");
}

SparseVec Att2View::t_basis(int which, std::size_t i, std::size_t j, std::size_t k) const {
  const SparseVec ei = SparseVec::unit(i, d_->field());
  const SparseVec jstar = d_->star_basis(j);
  const SparseVec ek = SparseVec::unit(k, d_->field());
  switch (which) {
    case 1: return d_->left(ei, d_->left(jstar, ek));
    case 2: return d_->right(ei, d_->left(jstar, ek));
    case 3: return d_->right(ei, d_->right(jstar, ek));
    default: throw Error("triple product index must be 1, 2 or 3");
  }
}

DenseTrisystem materialize(const Trisystem& T, std::string provenance) {
  DenseTrisystem out(T.dim(), T.field(),
                     provenance.empty() ? T.provenance() : std::move(provenance));
  std::vector<std::string> labels(T.dim());
  for (std::size_t i = 0; i < T.dim(); ++i) labels[i] = T.label(i);
  out.set_labels(std::move(labels));
  for (int w = 1; w <= 3; ++w)
    for (std::size_t i = 0; i < T.dim(); ++i)
      for (std::size_t j = 0; j < T.dim(); ++j)
        for (std::size_t k = 0; k < T.dim(); ++k) out.set(w, i, j, k, T.t_basis(w, i, j, k));
  return out;
}

DenseTrisystem att1_from_dialgebra(const Dialgebra& D) {
  return materialize(Att1View(D), "att1");
}

DenseTrisystem att2_from_dialgebra(const Dialgebra& D) {
  return materialize(Att2View(D), "att2");
}

SparseVec JtdProducts::j_basis(int which, std::size_t i, std::size_t j, std::size_t k) const {
  SparseVec v;
  if (which == 1) {
    v = t_->t_basis(1, i, j, k);
    v.add(t_->t_basis(3, k, j, i));
  } else if (which == 2) {
    v = t_->t_basis(2, i, j, k);
    v.add(t_->t_basis(2, k, j, i));
  } else {
    throw Error("Jordan product index must be 1 or 2");
  }
  return v;
}

TensorOps JtdProducts::ops() const {
  TensorOps o;
  o.dim = t_->dim();
  o.arity = 3;
  o.field = t_->field();
  // capture a copy: the wrapper is a plain pointer to the (caller-owned) base
  o.apply = [self = *this](int sub, const std::vector<SparseVec>& args) {
    if (sub != 1 && sub != 2) throw Error("JTD ops: unresolved subscript " + std::to_string(sub));
    SparseVec out;
    for (const auto& [i, ci] : args[0].terms())
      for (const auto& [j, cj] : args[1].terms()) {
        Scalar cij = ci * cj;
        for (const auto& [k, ck] : args[2].terms()) out.axpy(cij * ck, self.j_basis(sub, i, j, k));
      }
    return out;
  };
  o.label = [t = t_](std::size_t i) { return t->label(i); };
  return o;
}

SparseVec LeibtsBracket::lb_basis(std::size_t i, std::size_t j, std::size_t k) const {
  SparseVec v = t_->t_basis(1, i, j, k);
  v.sub(t_->t_basis(2, j, i, k));
  v.sub(t_->t_basis(2, k, i, j));
  v.add(t_->t_basis(3, k, j, i));
  return v;
}

TensorOps LeibtsBracket::ops() const {
  TensorOps o;
  o.dim = t_->dim();
  o.arity = 3;
  o.field = t_->field();
  o.apply = [self = *this](int sub, const std::vector<SparseVec>& args) {
    if (sub != 0) throw Error("LeibTS ops use the plain bracket only");
    SparseVec out;
    for (const auto& [i, ci] : args[0].terms())
      for (const auto& [j, cj] : args[1].terms()) {
        Scalar cij = ci * cj;
        for (const auto& [k, ck] : args[2].terms()) out.axpy(cij * ck, self.lb_basis(i, j, k));
      }
    return out;
  };
  o.label = [t = t_](std::size_t i) { return t->label(i); };
  return o;
}

namespace {

TensorOps variety_ops(const Trisystem& T, AxiomSet set) {
  switch (set) {
    case AxiomSet::ATT1:
    case AxiomSet::ATT2:
    case AxiomSet::ATS1:
    case AxiomSet::ATS2:
      return T.ops();
    case AxiomSet::JTD:
      return JtdProducts(T).ops();
    case AxiomSet::LeibTS:
      return LeibtsBracket(T).ops();
    default:
      throw Error(std::string("check_variety: set ") + axiom_set_name(set) +
                  " does not apply to a trisystem");
  }
}

}  // namespace

CheckReport check_variety(const Trisystem& T, AxiomSet set, const EvalMode& mode,
                          const EvalLimits& limits) {
  return check_chains(axiom_set(set), variety_ops(T, set), mode, limits);
}

std::vector<std::pair<std::string, CheckReport>> check_variety_chains(
    const Trisystem& T, AxiomSet set, const EvalMode& mode, const EvalLimits& limits) {
  TensorOps ops = variety_ops(T, set);
  std::vector<std::pair<std::string, CheckReport>> out;
  for (const auto& chain : axiom_set(set))
    out.emplace_back(chain.name, check_identity(chain, ops, mode, limits));
  return out;
}

SpanBasis ann_subspace(const Trisystem& T, const EvalLimits& limits) {
  const std::size_t n = T.dim();
  double total = static_cast<double>(n) * n * n;
  if (total > static_cast<double>(limits.eval_cap))
    throw Error("ann_subspace: basis-triple enumeration exceeds the evaluation cap");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec d12 = T.t_basis(1, i, j, k) - T.t_basis(2, i, j, k);
        if (!d12.is_zero()) rows.push_back(d12.dense(n, T.field()));
        SparseVec d13 = T.t_basis(1, i, j, k) - T.t_basis(3, i, j, k);
        if (!d13.is_zero()) rows.push_back(d13.dense(n, T.field()));
      }
  return span_basis(rows, n, T.field());
}

ComplementReport complement_closure_check(const Trisystem& T,
                                          const std::vector<std::vector<Scalar>>& complement,
                                          int ats_kind, const EvalLimits& limits) {
  if (ats_kind != 1 && ats_kind != 2)
    throw Error("complement_closure_check: ats_kind must be 1 or 2");
  ComplementReport out;
  const std::size_t n = T.dim();
  const FieldSpec& f = T.field();

  SpanBasis ann = ann_subspace(T, limits);
  TrackedSpan comp(n, f);
  for (const auto& v : complement)
    if (!comp.insert(v)) {
      out.report.fail("complement", "given vectors are linearly dependent");
      return out;
    }
  // direct sum test: ann + complement spans, dimensions add up
  std::vector<std::vector<Scalar>> all = ann.rows;
  for (const auto& v : complement) all.push_back(v);
  SpanBasis joint = span_basis(all, n, f);
  out.is_complement = (joint.dim() == n) && (ann.dim() + comp.dim() == n);
  if (!out.is_complement) {
    out.report.fail("complement",
                    "not a complement of the annihilator subspace (dim ann = " +
                        std::to_string(ann.dim()) + ", dim given = " + std::to_string(comp.dim()) +
                        ", joint rank = " + std::to_string(joint.dim()) + " of " +
                        std::to_string(n) + ")");
    return out;
  }

  // closure of the three products on the complement, with structure constants
  const std::size_t m = comp.dim();
  auto restricted = std::make_unique<DenseTrisystem>(m, f, "complement");
  out.closed = true;
  out.products_coincide = true;
  for (std::size_t i = 0; i < m && out.closed; ++i)
    for (std::size_t j = 0; j < m && out.closed; ++j)
      for (std::size_t k = 0; k < m && out.closed; ++k) {
        SparseVec v1;
        for (int w = 1; w <= 3; ++w) {
          SparseVec v = T.t(w, SparseVec::from_dense(complement[i]),
                            SparseVec::from_dense(complement[j]),
                            SparseVec::from_dense(complement[k]));
          ++out.report.evaluations;
          auto coords = comp.express(v.dense(n, f));
          if (!coords) {
            out.closed = false;
            out.report.fail("closure", "{b" + std::to_string(i + 1) + ",b" +
                                           std::to_string(j + 1) + ",b" + std::to_string(k + 1) +
                                           "}_" + std::to_string(w) +
                                           " leaves the complement span");
            break;
          }
          restricted->set(w, i, j, k, SparseVec::from_dense(*coords));
          if (w == 1)
            v1 = v;
          else if (v != v1)
            out.products_coincide = false;
        }
      }
  if (!out.closed) return out;
  if (!out.products_coincide)
    out.report.fail("coincide", "restricted products do not collapse to a single one");

  // ATS axioms on the restriction
  CheckReport ats = check_variety(*restricted, ats_kind == 1 ? AxiomSet::ATS1 : AxiomSet::ATS2,
                                  EvalMode::exhaustive(), limits);
  out.report.merge(ats);
  out.restricted = std::move(restricted);
  return out;
}

}  // namespace trisys
