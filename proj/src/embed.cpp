#include "trisys/embed.hpp"

namespace trisys {

namespace {

void flatten_matrix(const ExactMatrix& m, std::vector<Scalar>& out) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
}

ExactMatrix unflatten_matrix(const std::vector<Scalar>& v, std::size_t& pos, std::size_t dim,
                             const FieldSpec& f) {
  ExactMatrix m(dim, dim, f);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = v[pos++];
  return m;
}

}  // namespace

std::vector<Scalar> MElem::flatten() const {
  std::vector<Scalar> out;
  out.reserve(4 * l.f1.rows() * l.f1.cols());
  flatten_matrix(l.f1, out);
  flatten_matrix(l.f2, out);
  flatten_matrix(r.g1, out);
  flatten_matrix(r.g2, out);
  return out;
}

MElem MElem::zero(std::size_t dim, const FieldSpec& f) {
  ExactMatrix z(dim, dim, f);
  return {{z, z}, {z, z}};
}

MElem MElem::from_flat(const std::vector<Scalar>& v, std::size_t dim, const FieldSpec& f) {
  std::size_t pos = 0;
  ExactMatrix f1 = unflatten_matrix(v, pos, dim, f);
  ExactMatrix f2 = unflatten_matrix(v, pos, dim, f);
  ExactMatrix g1 = unflatten_matrix(v, pos, dim, f);
  ExactMatrix g2 = unflatten_matrix(v, pos, dim, f);
  return {{std::move(f1), std::move(f2)}, {std::move(g1), std::move(g2)}};
}

MElem m_left(const MElem& a, const MElem& b) {
  return {diend_left(a.l, b.l), opdiend_left(a.r, b.r)};
}

MElem m_right(const MElem& a, const MElem& b) {
  return {diend_right(a.l, b.l), opdiend_right(a.r, b.r)};
}

MElem m_generator(const Trisystem& T, char kind, const SparseVec& x, const SparseVec& y) {
  if (kind == '<')
    return {{l_operator(T, 1, x, y), l_operator(T, 3, x, y)},
            {r_operator(T, 2, x, y), r_operator(T, 1, x, y)}};
  if (kind == '>')
    return {{l_operator(T, 2, x, y), l_operator(T, 3, x, y)},
            {r_operator(T, 3, x, y), r_operator(T, 1, x, y)}};
  throw Error("m_generator kind must be '<' or '>'");
}

MSpan build_M(const Trisystem& T, const EvalLimits& limits) {
  MSpan out;
  const std::size_t n = T.dim();
  const FieldSpec& f = T.field();
  out.base_dim = n;
  out.field = f;
  out.span = std::make_unique<TrackedSpan>(4 * n * n, f);

  std::vector<MElem> gens;
  gens.reserve(2 * n * n);
  for (char kind : {'<', '>'})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        MElem g = m_generator(T, kind, SparseVec::unit(i, f), SparseVec::unit(j, f));
        if (out.span->insert(g.flatten())) out.basis.push_back(g);
        gens.push_back(std::move(g));
      }

  // closed-form product identities and closure, exhaustive on basis 4-tuples
  double tuples = 1;
  for (int q = 0; q < 4; ++q) tuples *= static_cast<double>(n);
  if (tuples > static_cast<double>(limits.eval_cap))
    throw Error("build_M: basis 4-tuple enumeration exceeds the evaluation cap");
  auto unit = [&](std::size_t i) { return SparseVec::unit(i, f); };
  auto gen = [&](char kind, std::size_t a, std::size_t b) {
    return gens[(kind == '<' ? 0 : n * n) + a * n + b];
  };
  auto genv = [&](char kind, const SparseVec& a, const SparseVec& b) {
    return m_generator(T, kind, a, b);
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t u = 0; u < n; ++u) {
          auto at = [&](const char* id) {
            return std::string(id) + " at (" + T.label(x) + "," + T.label(y) + "," + T.label(z) +
                   "," + T.label(u) + ")";
          };
          ++out.report.evaluations;
          MElem p1 = m_left(gen('<', x, y), gen('<', z, u));
          if (p1 != genv('<', unit(x), T.t(1, unit(y), unit(z), unit(u))) ||
              p1 != genv('<', T.t(1, unit(x), unit(y), unit(z)), unit(u)) ||
              p1 != m_left(gen('<', x, y), gen('>', z, u)))
            out.report.fail("m_product_1", at("(x<y)-|(z<u) chain"));
          MElem p2 = m_right(gen('<', x, y), gen('<', z, u));
          if (p2 != genv('<', T.t(3, unit(x), unit(y), unit(z)), unit(u)) ||
              p2 != genv('>', unit(x), T.t(2, unit(y), unit(z), unit(u))) ||
              p2 != m_right(gen('>', x, y), gen('<', z, u)))
            out.report.fail("m_product_2", at("(x<y)|-(z<u) chain"));
          MElem p3 = m_left(gen('>', x, y), gen('<', z, u));
          if (p3 != genv('>', unit(x), T.t(1, unit(y), unit(z), unit(u))) ||
              p3 != genv('<', T.t(2, unit(x), unit(y), unit(z)), unit(u)) ||
              p3 != m_left(gen('>', x, y), gen('>', z, u)))
            out.report.fail("m_product_3", at("(x>y)-|(z<u) chain"));
          MElem p4 = m_right(gen('<', x, y), gen('>', z, u));
          if (p4 != genv('>', T.t(3, unit(x), unit(y), unit(z)), unit(u)) ||
              p4 != genv('>', unit(x), T.t(3, unit(y), unit(z), unit(u))) ||
              p4 != m_right(gen('>', x, y), gen('>', z, u)))
            out.report.fail("m_product_4", at("(x<y)|-(z>u) chain"));
          if (!out.span->express(p1.flatten()) || !out.span->express(p2.flatten()) ||
              !out.span->express(p3.flatten()) || !out.span->express(p4.flatten()))
            out.report.fail("m_closure", at("product leaves the span"));
        }
  return out;
}

std::size_t EmbeddingAlgebra::block_offset(const std::string& name) const {
  for (const auto& b : blocks)
    if (b.name == name) return b.offset;
  throw Error("unknown block " + name);
}

EmbeddingAlgebra build_U(const Trisystem& T, const EvalLimits& limits) {
  EmbeddingAlgebra out;
  out.kind = "first";
  const std::size_t n = T.dim();
  const FieldSpec& f = T.field();
  MSpan M = build_M(T, limits);
  out.construction = M.report;
  const std::size_t md = M.dim();
  const std::size_t total = md + n;
  out.blocks = {{"M", 0, md}, {"A", md, n}};

  out.dia = std::make_unique<TableDialgebra>(total, f);
  TableDialgebra& U = *out.dia;
  {
    std::vector<std::string> labels(total);
    for (std::size_t i = 0; i < md; ++i) labels[i] = "m" + std::to_string(i + 1);
    for (std::size_t i = 0; i < n; ++i) labels[md + i] = T.label(i);
    U.set_labels(std::move(labels));
  }

  auto to_m = [&](const MElem& e) -> SparseVec {
    auto coords = M.span->express(e.flatten());
    if (!coords) {
      out.construction.fail("u_closure", "operator product left the span of M");
      return {};
    }
    return SparseVec::from_dense(*coords);
  };
  auto shift = [&](SparseVec v) {
    SparseVec outv;
    for (const auto& [i, c] : v.terms()) outv.add_term(md + i, c);
    return outv;
  };
  auto unit = [&](std::size_t i) { return SparseVec::unit(i, f); };

  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t j = 0; j < md; ++j) {
      U.set_left(i, j, to_m(m_left(M.basis[i], M.basis[j])));
      U.set_right(i, j, to_m(m_right(M.basis[i], M.basis[j])));
    }
  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t z = 0; z < n; ++z) {
      U.set_left(i, md + z, shift(prec(M.basis[i].l, unit(z))));
      U.set_right(i, md + z, shift(succ(M.basis[i].l, unit(z))));
      U.set_left(md + z, i, shift(prec(unit(z), M.basis[i].r)));
      U.set_right(md + z, i, shift(succ(unit(z), M.basis[i].r)));
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      U.set_left(md + x, md + y, to_m(m_generator(T, '<', unit(x), unit(y))));
      U.set_right(md + x, md + y, to_m(m_generator(T, '>', unit(x), unit(y))));
    }

  // recovery of the three triple products through the embedding
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        ++out.recovery.evaluations;
        SparseVec ux = SparseVec::unit(md + x, f), uy = SparseVec::unit(md + y, f),
                  uz = SparseVec::unit(md + z, f);
        auto where = [&](int w) {
          return "{" + T.label(x) + "," + T.label(y) + "," + T.label(z) + "}_" +
                 std::to_string(w);
        };
        if (U.left(ux, U.left(uy, uz)) != shift(T.t_basis(1, x, y, z)))
          out.recovery.fail("recovery_1", where(1) + " != x-|(y-|z)");
        if (U.right(ux, U.left(uy, uz)) != shift(T.t_basis(2, x, y, z)))
          out.recovery.fail("recovery_2", where(2) + " != x|-(y-|z)");
        if (U.right(ux, U.right(uy, uz)) != shift(T.t_basis(3, x, y, z)))
          out.recovery.fail("recovery_3", where(3) + " != x|-(y|-z)");
      }
  return out;
}

// ---------------------------------------------------------------------------
// Second kind

namespace {

std::vector<Scalar> flatten_pair(const ExactMatrix& a, const ExactMatrix& b) {
  std::vector<Scalar> out;
  out.reserve(2 * a.rows() * a.cols());
  flatten_matrix(a, out);
  flatten_matrix(b, out);
  return out;
}

// Well-definedness of a generator-defined linear map: eliminating the rows
// [gen | star(gen)], every dependency among the generators must extend to
// their images, i.e. rank[left|right] = rank[left].
bool star_well_defined(const std::vector<std::vector<Scalar>>& gens,
                       const std::vector<std::vector<Scalar>>& stars, std::size_t width,
                       const FieldSpec& f) {
  std::vector<std::vector<Scalar>> combined(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    combined[i] = gens[i];
    combined[i].insert(combined[i].end(), stars[i].begin(), stars[i].end());
  }
  SpanBasis joint = span_basis(combined, 2 * width, f);
  SpanBasis left = span_basis(gens, width, f);
  return joint.dim() == left.dim();
}

ExactMatrix star_matrix(const TrackedSpan& span, const std::vector<std::vector<Scalar>>& images,
                        const FieldSpec& f) {
  // images[k] = flat of star(member k); columns of the matrix are span coords
  const std::size_t m = span.dim();
  ExactMatrix s(m, m, f);
  for (std::size_t k = 0; k < m; ++k) {
    auto coords = span.express(images[k]);
    if (!coords) throw Error("involution image left the span");
    for (std::size_t r = 0; r < m; ++r) s.at(r, k) = (*coords)[r];
  }
  return s;
}

}  // namespace

LRSpans build_L_R(const Trisystem& T, const EvalLimits& limits) {
  LRSpans out;
  const std::size_t n = T.dim();
  const FieldSpec& f = T.field();
  out.base_dim = n;
  out.field = f;
  const std::size_t w = 2 * n * n;
  out.lspan = std::make_unique<TrackedSpan>(w, f);
  out.rspan = std::make_unique<TrackedSpan>(w, f);

  auto unit = [&](std::size_t i) { return SparseVec::unit(i, f); };
  auto lgen = [&](char kind, const SparseVec& x, const SparseVec& y) -> DiEndPair {
    if (kind == '<') return {l_operator(T, 1, x, y), l_operator(T, 3, x, y)};
    return {l_operator(T, 2, x, y), l_operator(T, 3, x, y)};
  };
  auto rgen = [&](char kind, const SparseVec& x, const SparseVec& y) -> OpDiEndPair {
    if (kind == '<') return {r_operator(T, 2, x, y), r_operator(T, 1, x, y)};
    return {r_operator(T, 3, x, y), r_operator(T, 1, x, y)};
  };

  std::vector<std::vector<Scalar>> lflats, lstars, rflats, rstars;
  for (char kind : {'<', '>'})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        char other = kind == '<' ? '>' : '<';
        DiEndPair lg = lgen(kind, unit(i), unit(j));
        DiEndPair lgs = lgen(other, unit(j), unit(i));  // (L~(x,y))* = L~'(y,x)
        std::vector<Scalar> lf = flatten_pair(lg.f1, lg.f2);
        lflats.push_back(lf);
        lstars.push_back(flatten_pair(lgs.f1, lgs.f2));
        if (out.lspan->insert(lf)) out.lbasis.push_back(lg);

        OpDiEndPair rg = rgen(kind, unit(i), unit(j));
        OpDiEndPair rgs = rgen(other, unit(j), unit(i));
        std::vector<Scalar> rf = flatten_pair(rg.g1, rg.g2);
        rflats.push_back(rf);
        rstars.push_back(flatten_pair(rgs.g1, rgs.g2));
        if (out.rspan->insert(rf)) out.rbasis.push_back(rg);
      }

  if (!star_well_defined(lflats, lstars, w, f))
    out.report.fail("lstar", "involution is not well defined on the L span");
  if (!star_well_defined(rflats, rstars, w, f))
    out.report.fail("rstar", "involution is not well defined on the R span");
  if (!out.report.passed) return out;

  std::vector<std::vector<Scalar>> limg, rimg;
  for (std::size_t k = 0; k < out.lbasis.size(); ++k) {
    // the k-th member is some generator; recover its star image by matching
    for (std::size_t g = 0; g < lflats.size(); ++g)
      if (lflats[g] == flatten_pair(out.lbasis[k].f1, out.lbasis[k].f2)) {
        limg.push_back(lstars[g]);
        break;
      }
  }
  for (std::size_t k = 0; k < out.rbasis.size(); ++k) {
    for (std::size_t g = 0; g < rflats.size(); ++g)
      if (rflats[g] == flatten_pair(out.rbasis[k].g1, out.rbasis[k].g2)) {
        rimg.push_back(rstars[g]);
        break;
      }
  }
  out.lstar = star_matrix(*out.lspan, limg, f);
  out.rstar = star_matrix(*out.rspan, rimg, f);
  if (out.lstar * out.lstar != ExactMatrix::identity(out.ldim(), f))
    out.report.fail("lstar", "L involution applied twice is not the identity");
  if (out.rstar * out.rstar != ExactMatrix::identity(out.rdim(), f))
    out.report.fail("rstar", "R involution applied twice is not the identity");

  // the eight closed-form product identities ("i" slots checked for i=1,2,3)
  double tuples = 1;
  for (int q = 0; q < 4; ++q) tuples *= static_cast<double>(n);
  if (tuples > static_cast<double>(limits.eval_cap))
    throw Error("build_L_R: basis 4-tuple enumeration exceeds the evaluation cap");
  auto t = [&](int w_, std::size_t a, std::size_t b, std::size_t c) {
    return T.t_basis(w_, a, b, c);
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t u = 0; u < n; ++u) {
          ++out.report.evaluations;
          auto at = [&](const char* id) {
            return std::string(id) + " at (" + T.label(x) + "," + T.label(y) + "," + T.label(z) +
                   "," + T.label(u) + ")";
          };
          SparseVec ux = unit(x), uy = unit(y), uz = unit(z), uu = unit(u);
          // 1. L<(x,y) -| L<(z,u) = L<(x,{u,z,y}_i) = L<({x,y,z}_1,u)
          DiEndPair p = diend_left(lgen('<', ux, uy), lgen('<', uz, uu));
          for (int i = 1; i <= 3; ++i)
            if (p != lgen('<', ux, t(i, u, z, y))) out.report.fail("lr_prod_1", at("item 1 (mid)"));
          if (p != lgen('<', t(1, x, y, z), uu)) out.report.fail("lr_prod_1", at("item 1"));
          // 2. L>(x,y) -| L<(z,u) = L>(x,{u,z,y}_3) = L<({x,y,z}_2,u)
          p = diend_left(lgen('>', ux, uy), lgen('<', uz, uu));
          if (p != lgen('>', ux, t(3, u, z, y)) || p != lgen('<', t(2, x, y, z), uu))
            out.report.fail("lr_prod_2", at("item 2"));
          // 3. L<(x,y) |- L<(z,u) = L>(x,{u,z,y}_2) = L<({x,y,z}_3,u)
          p = diend_right(lgen('<', ux, uy), lgen('<', uz, uu));
          if (p != lgen('>', ux, t(2, u, z, y)) || p != lgen('<', t(3, x, y, z), uu))
            out.report.fail("lr_prod_3", at("item 3"));
          // 4. L<(x,y) |- L>(z,u) = L>(x,{u,z,y}_1) = L>({x,y,z}_i,u)
          p = diend_right(lgen('<', ux, uy), lgen('>', uz, uu));
          if (p != lgen('>', ux, t(1, u, z, y))) out.report.fail("lr_prod_4", at("item 4"));
          for (int i = 1; i <= 3; ++i)
            if (p != lgen('>', t(i, x, y, z), uu)) out.report.fail("lr_prod_4", at("item 4 (i)"));
          // 5. R<(x,y) -| R<(z,u) = R<({z,y,x}_3,u) = R<(x,{y,z,u}_i)
          OpDiEndPair q = opdiend_left(rgen('<', ux, uy), rgen('<', uz, uu));
          if (q != rgen('<', t(3, z, y, x), uu)) out.report.fail("lr_prod_5", at("item 5"));
          for (int i = 1; i <= 3; ++i)
            if (q != rgen('<', ux, t(i, y, z, u))) out.report.fail("lr_prod_5", at("item 5 (i)"));
          // 6. R>(x,y) -| R<(z,u) = R<({z,y,x}_2,u) = R>(x,{y,z,u}_1)
          q = opdiend_left(rgen('>', ux, uy), rgen('<', uz, uu));
          if (q != rgen('<', t(2, z, y, x), uu) || q != rgen('>', ux, t(1, y, z, u)))
            out.report.fail("lr_prod_6", at("item 6"));
          // 7. R<(x,y) |- R<(z,u) = R<({z,y,x}_1,u) = R>(x,{y,z,u}_2)
          q = opdiend_right(rgen('<', ux, uy), rgen('<', uz, uu));
          if (q != rgen('<', t(1, z, y, x), uu) || q != rgen('>', ux, t(2, y, z, u)))
            out.report.fail("lr_prod_7", at("item 7"));
          // 8. R<(x,y) |- R>(z,u) = R>({z,y,x}_i,u) = R>(x,{y,z,u}_3)
          q = opdiend_right(rgen('<', ux, uy), rgen('>', uz, uu));
          if (q != rgen('>', ux, t(3, y, z, u))) out.report.fail("lr_prod_8", at("item 8"));
          for (int i = 1; i <= 3; ++i)
            if (q != rgen('>', t(i, z, y, x), uu)) out.report.fail("lr_prod_8", at("item 8 (i)"));
          // interchange relations between the two generator kinds
          if (diend_left(lgen('<', ux, uy), lgen('<', uz, uu)) !=
                  diend_left(lgen('<', ux, uy), lgen('>', uz, uu)) ||
              diend_right(lgen('<', ux, uy), lgen('<', uz, uu)) !=
                  diend_right(lgen('>', ux, uy), lgen('<', uz, uu)))
            out.report.fail("lr_remark", at("L interchange"));
          if (opdiend_left(rgen('<', ux, uy), rgen('<', uz, uu)) !=
                  opdiend_left(rgen('<', ux, uy), rgen('>', uz, uu)) ||
              opdiend_right(rgen('<', ux, uy), rgen('<', uz, uu)) !=
                  opdiend_right(rgen('>', ux, uy), rgen('<', uz, uu)))
            out.report.fail("lr_remark", at("R interchange"));
        }
  return out;
}

EmbeddingAlgebra build_U2(const Trisystem& T, const EvalLimits& limits) {
  EmbeddingAlgebra out;
  out.kind = "second";
  const std::size_t n = T.dim();
  const FieldSpec& f = T.field();
  LRSpans LR = build_L_R(T, limits);
  out.construction = LR.report;
  if (!LR.report.passed) {
    out.recovery.fail("construction", "operator spans or involution failed; no embedding built");
    out.dia = std::make_unique<TableDialgebra>(0, f);
    return out;
  }
  const std::size_t ld = LR.ldim(), rd = LR.rdim();
  const std::size_t offL = 0, offA = ld, offAbar = ld + n, offR = ld + 2 * n;
  const std::size_t total = ld + 2 * n + rd;
  out.blocks = {{"L", offL, ld}, {"A", offA, n}, {"Abar", offAbar, n}, {"R", offR, rd}};

  out.dia = std::make_unique<TableDialgebra>(total, f);
  TableDialgebra& U = *out.dia;
  {
    std::vector<std::string> labels(total);
    for (std::size_t i = 0; i < ld; ++i) labels[offL + i] = "l" + std::to_string(i + 1);
    for (std::size_t i = 0; i < n; ++i) labels[offA + i] = T.label(i);
    for (std::size_t i = 0; i < n; ++i) labels[offAbar + i] = T.label(i) + "~";
    for (std::size_t i = 0; i < rd; ++i) labels[offR + i] = "r" + std::to_string(i + 1);
    U.set_labels(std::move(labels));
  }

  auto unit = [&](std::size_t i) { return SparseVec::unit(i, f); };
  auto lgen = [&](char kind, const SparseVec& x, const SparseVec& y) -> DiEndPair {
    if (kind == '<') return {l_operator(T, 1, x, y), l_operator(T, 3, x, y)};
    return {l_operator(T, 2, x, y), l_operator(T, 3, x, y)};
  };
  auto rgen = [&](char kind, const SparseVec& x, const SparseVec& y) -> OpDiEndPair {
    if (kind == '<') return {r_operator(T, 2, x, y), r_operator(T, 1, x, y)};
    return {r_operator(T, 3, x, y), r_operator(T, 1, x, y)};
  };
  auto to_l = [&](const DiEndPair& e, std::size_t shift_to) -> SparseVec {
    auto coords = LR.lspan->express(flatten_pair(e.f1, e.f2));
    if (!coords) {
      out.construction.fail("u2_closure", "an L-block product left the span");
      return {};
    }
    SparseVec v;
    for (std::size_t k = 0; k < coords->size(); ++k) v.add_term(shift_to + k, (*coords)[k]);
    return v;
  };
  auto to_r = [&](const OpDiEndPair& e, std::size_t shift_to) -> SparseVec {
    auto coords = LR.rspan->express(flatten_pair(e.g1, e.g2));
    if (!coords) {
      out.construction.fail("u2_closure", "an R-block product left the span");
      return {};
    }
    SparseVec v;
    for (std::size_t k = 0; k < coords->size(); ++k) v.add_term(shift_to + k, (*coords)[k]);
    return v;
  };
  auto shift = [&](const SparseVec& v, std::size_t off) {
    SparseVec outv;
    for (const auto& [i, c] : v.terms()) outv.add_term(off + i, c);
    return outv;
  };
  // star of a single L-span (resp. R-span) basis element, as a DiEndPair
  auto lstar_elem = [&](std::size_t k) -> DiEndPair {
    ExactMatrix a(n, n, f), b(n, n, f);
    for (std::size_t m = 0; m < LR.ldim(); ++m) {
      const Scalar& c = LR.lstar.at(m, k);
      if (c.is_zero()) continue;
      ExactMatrix s1 = LR.lbasis[m].f1, s2 = LR.lbasis[m].f2;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t cc = 0; cc < n; ++cc) {
          a.at(r, cc) += c * s1.at(r, cc);
          b.at(r, cc) += c * s2.at(r, cc);
        }
    }
    return {a, b};
  };
  auto rstar_elem = [&](std::size_t k) -> OpDiEndPair {
    ExactMatrix a(n, n, f), b(n, n, f);
    for (std::size_t m = 0; m < LR.rdim(); ++m) {
      const Scalar& c = LR.rstar.at(m, k);
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t cc = 0; cc < n; ++cc) {
          a.at(r, cc) += c * LR.rbasis[m].g1.at(r, cc);
          b.at(r, cc) += c * LR.rbasis[m].g2.at(r, cc);
        }
    }
    return {a, b};
  };

  // L x L and R x R
  for (std::size_t i = 0; i < ld; ++i)
    for (std::size_t j = 0; j < ld; ++j) {
      U.set_left(offL + i, offL + j, to_l(diend_left(LR.lbasis[i], LR.lbasis[j]), offL));
      U.set_right(offL + i, offL + j, to_l(diend_right(LR.lbasis[i], LR.lbasis[j]), offL));
    }
  for (std::size_t i = 0; i < rd; ++i)
    for (std::size_t j = 0; j < rd; ++j) {
      U.set_left(offR + i, offR + j, to_r(opdiend_left(LR.rbasis[i], LR.rbasis[j]), offR));
      U.set_right(offR + i, offR + j, to_r(opdiend_right(LR.rbasis[i], LR.rbasis[j]), offR));
    }
  // A x Abar -> L and Abar x A -> R
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      U.set_left(offA + x, offAbar + y, to_l(lgen('<', unit(x), unit(y)), offL));
      U.set_right(offA + x, offAbar + y, to_l(lgen('>', unit(x), unit(y)), offL));
      U.set_left(offAbar + y, offA + x, to_r(rgen('<', unit(y), unit(x)), offR));
      U.set_right(offAbar + y, offA + x, to_r(rgen('>', unit(y), unit(x)), offR));
    }
  // L x A -> A and A x R -> A
  for (std::size_t i = 0; i < ld; ++i)
    for (std::size_t x = 0; x < n; ++x) {
      U.set_left(offL + i, offA + x, shift(prec(LR.lbasis[i], unit(x)), offA));
      U.set_right(offL + i, offA + x, shift(succ(LR.lbasis[i], unit(x)), offA));
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < rd; ++i) {
      U.set_left(offA + x, offR + i, shift(prec(unit(x), LR.rbasis[i]), offA));
      U.set_right(offA + x, offR + i, shift(succ(unit(x), LR.rbasis[i]), offA));
    }
  // Abar x L -> Abar:  y -|* l = l* ≻ y,  y |-* l = l* ≺ y
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t i = 0; i < ld; ++i) {
      DiEndPair ls = lstar_elem(i);
      U.set_left(offAbar + y, offL + i, shift(succ(ls, unit(y)), offAbar));
      U.set_right(offAbar + y, offL + i, shift(prec(ls, unit(y)), offAbar));
    }
  // R x Abar -> Abar:  r -|* y = y ≻ r*,  r |-* y = y ≺ r*
  for (std::size_t i = 0; i < rd; ++i)
    for (std::size_t y = 0; y < n; ++y) {
      OpDiEndPair rs = rstar_elem(i);
      U.set_left(offR + i, offAbar + y, shift(succ(unit(y), rs), offAbar));
      U.set_right(offR + i, offAbar + y, shift(prec(unit(y), rs), offAbar));
    }

  // the involution: L -> L*, A <-> Abar, R -> R*
  ExactMatrix inv(total, total, f);
  for (std::size_t i = 0; i < ld; ++i)
    for (std::size_t j = 0; j < ld; ++j) inv.at(offL + i, offL + j) = LR.lstar.at(i, j);
  for (std::size_t i = 0; i < rd; ++i)
    for (std::size_t j = 0; j < rd; ++j) inv.at(offR + i, offR + j) = LR.rstar.at(i, j);
  for (std::size_t x = 0; x < n; ++x) {
    inv.at(offAbar + x, offA + x) = Scalar::one(f);
    inv.at(offA + x, offAbar + x) = Scalar::one(f);
  }
  U.set_involution(std::move(inv));

  // recovery through -| , |- and the involution
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        ++out.recovery.evaluations;
        SparseVec ux = SparseVec::unit(offA + x, f);
        SparseVec ystar = U.star_basis(offA + y);
        SparseVec uz = SparseVec::unit(offA + z, f);
        auto where = [&](int w) {
          return "{" + T.label(x) + "," + T.label(y) + "," + T.label(z) + "}_" +
                 std::to_string(w);
        };
        if (U.left(ux, U.left(ystar, uz)) != shift(T.t_basis(1, x, y, z), offA))
          out.recovery.fail("recovery_1", where(1) + " != x-|(y*-|z)");
        if (U.right(ux, U.left(ystar, uz)) != shift(T.t_basis(2, x, y, z), offA))
          out.recovery.fail("recovery_2", where(2) + " != x|-(y*-|z)");
        if (U.right(ux, U.right(ystar, uz)) != shift(T.t_basis(3, x, y, z), offA))
          out.recovery.fail("recovery_3", where(3) + " != x|-(y*|-z)");
      }
  return out;
}

}  // namespace trisys
