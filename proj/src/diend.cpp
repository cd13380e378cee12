#include "trisys/diend.hpp"

namespace trisys {

DiEndPair diend_left(const DiEndPair& f, const DiEndPair& g) {
  return {f.f1 * g.f2, f.f2 * g.f2};
}

DiEndPair diend_right(const DiEndPair& f, const DiEndPair& g) {
  return {f.f2 * g.f1, f.f2 * g.f2};
}

SparseVec prec(const DiEndPair& f, const SparseVec& x) { return f.f1.apply_col(x); }
SparseVec succ(const DiEndPair& f, const SparseVec& x) { return f.f2.apply_col(x); }

OpDiEndPair opdiend_left(const OpDiEndPair& a, const OpDiEndPair& b) {
  return {a.g1 * b.g2, a.g2 * b.g2};
}

OpDiEndPair opdiend_right(const OpDiEndPair& a, const OpDiEndPair& b) {
  return {a.g2 * b.g1, a.g2 * b.g2};
}

SparseVec prec(const SparseVec& x, const OpDiEndPair& a) { return a.g2.apply_row(x); }
SparseVec succ(const SparseVec& x, const OpDiEndPair& a) { return a.g1.apply_row(x); }

ExactMatrix l_operator(const Trisystem& T, int which, const SparseVec& x, const SparseVec& y) {
  const std::size_t n = T.dim();
  ExactMatrix m(n, n, T.field());
  for (std::size_t j = 0; j < n; ++j) {
    SparseVec col = T.t(which, x, y, SparseVec::unit(j, T.field()));
    for (const auto& [r, c] : col.terms()) m.at(r, j) = c;
  }
  return m;
}

ExactMatrix r_operator(const Trisystem& T, int which, const SparseVec& x, const SparseVec& y) {
  const std::size_t n = T.dim();
  ExactMatrix m(n, n, T.field());
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec row = T.t(which, SparseVec::unit(i, T.field()), x, y);
    for (const auto& [c, v] : row.terms()) m.at(i, c) = v;
  }
  return m;
}

LROperators lr_operators(const Trisystem& T, const SparseVec& x, const SparseVec& y) {
  ExactMatrix l1 = l_operator(T, 1, x, y);
  ExactMatrix l2 = l_operator(T, 2, x, y);
  ExactMatrix l3 = l_operator(T, 3, x, y);
  ExactMatrix r1 = r_operator(T, 1, x, y);
  ExactMatrix r2 = r_operator(T, 2, x, y);
  ExactMatrix r3 = r_operator(T, 3, x, y);
  return {{l1, l3}, {l2, l3}, {r2, r1}, {r3, r1}};
}

DiEndPair random_diend(std::size_t dim, const FieldSpec& f, std::mt19937_64& rng) {
  auto rand_matrix = [&] {
    ExactMatrix m(dim, dim, f);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        m.at(r, c) = f.kind == FieldSpec::Kind::GFp
                         ? Scalar::gfp(f.p, rng() % f.p)
                         : Scalar::of_int(f, static_cast<long long>(rng() % 7) - 3);
    return m;
  };
  return {rand_matrix(), rand_matrix()};
}

namespace {

SparseVec random_vec(std::size_t dim, const FieldSpec& f, std::mt19937_64& rng) {
  SparseVec v;
  for (std::size_t i = 0; i < dim; ++i) {
    Scalar c = f.kind == FieldSpec::Kind::GFp
                   ? Scalar::gfp(f.p, rng() % f.p)
                   : Scalar::of_int(f, static_cast<long long>(rng() % 7) - 3);
    v.add_term(i, c);
  }
  return v;
}

void check_axioms_on(const DiEndPair& f, const DiEndPair& g, const DiEndPair& h,
                     const std::string& where, CheckReport& rep) {
  ++rep.evaluations;
  if (diend_left(diend_left(f, g), h) != diend_left(f, diend_left(g, h)))
    rep.fail("diend_axiom1", "(f-|g)-|h != f-|(g-|h) at " + where);
  if (diend_right(diend_right(f, g), h) != diend_right(f, diend_right(g, h)))
    rep.fail("diend_axiom2", "(f|-g)|-h != f|-(g|-h) at " + where);
  if (diend_left(f, diend_left(g, h)) != diend_left(f, diend_right(g, h)))
    rep.fail("diend_axiom3", "f-|(g-|h) != f-|(g|-h) at " + where);
  if (diend_left(diend_right(f, g), h) != diend_right(f, diend_left(g, h)))
    rep.fail("diend_axiom4", "(f|-g)-|h != f|-(g-|h) at " + where);
  if (diend_right(diend_right(f, g), h) != diend_right(diend_left(f, g), h))
    rep.fail("diend_axiom5", "(f|-g)|-h != (f-|g)|-h at " + where);
}

}  // namespace

CheckReport check_diend_dialgebra(std::size_t dim, const FieldSpec& f, std::uint64_t seed,
                                  std::size_t samples) {
  CheckReport rep;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    DiEndPair a = random_diend(dim, f, rng);
    DiEndPair b = random_diend(dim, f, rng);
    DiEndPair c = random_diend(dim, f, rng);
    check_axioms_on(a, b, c, "sample " + std::to_string(s), rep);
  }
  if (dim <= 3) {
    // spanning set (E_ab, 0), (0, E_ab); trilinearity extends the result
    std::vector<DiEndPair> span;
    ExactMatrix zero(dim, dim, f);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        ExactMatrix e(dim, dim, f);
        e.at(a, b) = Scalar::one(f);
        span.push_back({e, zero});
        span.push_back({zero, e});
      }
    for (std::size_t i = 0; i < span.size(); ++i)
      for (std::size_t j = 0; j < span.size(); ++j)
        for (std::size_t k = 0; k < span.size(); ++k)
          check_axioms_on(span[i], span[j], span[k],
                          "spanning triple (" + std::to_string(i) + "," + std::to_string(j) +
                              "," + std::to_string(k) + ")",
                          rep);
  }
  return rep;
}

CheckReport check_diend_action_identities(std::size_t dim, const FieldSpec& f, std::uint64_t seed,
                                          std::size_t samples) {
  CheckReport rep;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    DiEndPair a = random_diend(dim, f, rng);
    DiEndPair b = random_diend(dim, f, rng);
    SparseVec x = random_vec(dim, f, rng);
    std::string where = "sample " + std::to_string(s);
    ++rep.evaluations;
    SparseVec v1 = succ(diend_right(a, b), x);
    if (v1 != succ(diend_left(a, b), x) || v1 != succ(a, succ(b, x)))
      rep.fail("action1", "(f|-g)≻x = (f-|g)≻x = f≻(g≻x) fails at " + where);
    if (prec(diend_right(a, b), x) != succ(a, prec(b, x)))
      rep.fail("action2", "(f|-g)≺x = f≻(g≺x) fails at " + where);
    if (prec(diend_left(a, b), x) != prec(a, succ(b, x)))
      rep.fail("action3", "(f-|g)≺x = f≺(g≻x) fails at " + where);
  }
  return rep;
}

std::optional<PrecCounterexample> find_prec_counterexample(std::size_t dim, const FieldSpec& f,
                                                           std::uint64_t seed,
                                                           std::size_t max_tries) {
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < max_tries; ++s) {
    DiEndPair a = random_diend(dim, f, rng);
    DiEndPair b = random_diend(dim, f, rng);
    SparseVec x = random_vec(dim, f, rng);
    if (prec(a, prec(b, x)) != prec(a, succ(b, x))) {
      PrecCounterexample c{a, b, x,
                           "f≺(g≺x) != f≺(g≻x) at try " + std::to_string(s) + " (seed " +
                               std::to_string(seed) + ")"};
      return c;
    }
  }
  return std::nullopt;
}

CheckReport check_extra_identity(const Trisystem& T, std::uint64_t seed, std::size_t samples) {
  CheckReport rep;
  std::mt19937_64 rng(seed);
  const std::size_t n = T.dim();
  const FieldSpec& f = T.field();
  auto family_member = [&](std::size_t pick, std::size_t i, std::size_t j) -> DiEndPair {
    SparseVec x = SparseVec::unit(i, f), y = SparseVec::unit(j, f);
    switch (pick % 4) {
      case 0: return {l_operator(T, 1, x, y), l_operator(T, 3, x, y)};  // L left-kind
      case 1: return {l_operator(T, 2, x, y), l_operator(T, 3, x, y)};  // L right-kind
      // R families as plain di-endomorphisms (column-acting maps z -> {z,x,y}_i)
      case 2:
        return {r_operator(T, 2, x, y).transpose(), r_operator(T, 1, x, y).transpose()};
      default:
        return {r_operator(T, 3, x, y).transpose(), r_operator(T, 1, x, y).transpose()};
    }
  };
  for (std::size_t s = 0; s < samples; ++s) {
    DiEndPair fe = family_member(rng(), rng() % n, rng() % n);
    DiEndPair ge = family_member(rng(), rng() % n, rng() % n);
    SparseVec x = SparseVec::unit(rng() % n, f);
    ++rep.evaluations;
    if (prec(fe, prec(ge, x)) != prec(fe, succ(ge, x)))
      rep.fail("extra_identity", "f≺(g≺x) != f≺(g≻x) on family members, sample " +
                                     std::to_string(s));
  }
  return rep;
}

}  // namespace trisys
