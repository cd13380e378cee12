#include "trisys/eval.hpp"

#include <cstdlib>
#include <map>
#include <random>

namespace trisys {

EvalLimits default_limits() {
  EvalLimits l;
  if (const char* cap = std::getenv("TRISYS_EVAL_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && v >= 1) l.eval_cap = v;
  }
  return l;
}

std::string sparse_str(const SparseVec& v, const TensorOps& ops) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [i, c] : v.terms()) {
    if (!s.empty()) s += " + ";
    if (!c.is_one()) s += c.str() + "*";
    s += ops.basis_label(i);
  }
  return s;
}

namespace {

SparseVec eval_monomial(const Monomial& m, const std::map<std::string, SparseVec>& assign,
                        const TensorOps& ops) {
  if (m.is_leaf()) return assign.at(m.var());
  std::vector<SparseVec> args;
  args.reserve(m.children().size());
  for (const auto& c : m.children()) args.push_back(eval_monomial(c, assign, ops));
  return ops.apply(m.subscript(), args);
}

SparseVec eval_polynomial(const Polynomial& p, const std::map<std::string, SparseVec>& assign,
                          const TensorOps& ops) {
  SparseVec out;
  for (const auto& [m, c] : p.terms()) {
    SparseVec v = eval_monomial(m, assign, ops);
    out.axpy(Scalar::of_int(ops.field, c), v);
  }
  return out;
}

void check_assignment(const IdentityChain& id, const std::map<std::string, SparseVec>& assign,
                      const TensorOps& ops, const EvalLimits& limits,
                      const std::string& where, CheckReport& report) {
  ++report.evaluations;
  SparseVec prev = eval_polynomial(id.members[0], assign, ops);
  for (std::size_t k = 1; k < id.members.size(); ++k) {
    SparseVec cur = eval_polynomial(id.members[k], assign, ops);
    if (cur != prev) {
      if (report.failures.size() < limits.max_witnesses)
        report.fail(id.name, "members " + std::to_string(k) + "," + std::to_string(k + 1) +
                                 " differ at " + where + ": " + sparse_str(prev, ops) +
                                 " != " + sparse_str(cur, ops));
      else
        report.passed = false;
      return;
    }
    prev = std::move(cur);
  }
}

std::string tuple_str(const std::vector<std::string>& vars,
                      const std::vector<std::string>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ", ";
    s += vars[i] + "=" + values[i];
  }
  return s + ")";
}

}  // namespace

CheckReport check_identity(const IdentityChain& id, const TensorOps& ops, const EvalMode& mode,
                           const EvalLimits& limits) {
  CheckReport report;
  const std::set<std::string> var_set = id.variables();
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  const std::size_t d = vars.size();

  if (mode.type == EvalMode::Type::Exhaustive) {
    double total = 1;
    for (std::size_t k = 0; k < d; ++k) total *= static_cast<double>(ops.dim);
    if (total > static_cast<double>(limits.eval_cap))
      throw Error("exhaustive check would need " + std::to_string(total) + " evaluations (cap " +
                  std::to_string(limits.eval_cap) + "); use sampled mode or raise TRISYS_EVAL_CAP");
    if (ops.dim == 0 && d > 0) return report;  // no basis tuples to range over
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      std::map<std::string, SparseVec> assign;
      std::vector<std::string> labels;
      for (std::size_t k = 0; k < d; ++k) {
        assign[vars[k]] = SparseVec::unit(idx[k], ops.field);
        labels.push_back(ops.basis_label(idx[k]));
      }
      check_assignment(id, assign, ops, limits, tuple_str(vars, labels), report);
      std::size_t k = d;
      bool done = true;
      while (k > 0) {
        --k;
        if (++idx[k] < ops.dim) {
          done = false;
          break;
        }
        idx[k] = 0;
      }
      if (done || d == 0) break;
    }
    return report;
  }

  if (mode.type == EvalMode::Type::Generators) {
    if (mode.generator_indices.size() < d)
      throw Error("generators mode: identity '" + id.name + "' has " + std::to_string(d) +
                  " variables but only " + std::to_string(mode.generator_indices.size()) +
                  " generators were given");
    std::map<std::string, SparseVec> assign;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < d; ++k) {
      assign[vars[k]] = SparseVec::unit(mode.generator_indices[k], ops.field);
      labels.push_back(ops.basis_label(mode.generator_indices[k]));
    }
    check_assignment(id, assign, ops, limits, tuple_str(vars, labels), report);
    return report;
  }

  // Sampled: seeded random full vectors.
  std::mt19937_64 rng(mode.seed);
  for (std::size_t s = 0; s < mode.samples; ++s) {
    std::map<std::string, SparseVec> assign;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < d; ++k) {
      SparseVec v;
      for (std::size_t i = 0; i < ops.dim; ++i) {
        Scalar c = ops.field.kind == FieldSpec::Kind::GFp
                       ? Scalar::gfp(ops.field.p, rng() % ops.field.p)
                       : Scalar::of_int(ops.field, static_cast<long long>(rng() % 7) - 3);
        v.add_term(i, c);
      }
      labels.push_back("sample" + std::to_string(s) + "." + vars[k]);
      assign[vars[k]] = std::move(v);
    }
    check_assignment(id, assign, ops, limits, tuple_str(vars, labels), report);
  }
  return report;
}

CheckReport check_chains(const std::vector<IdentityChain>& chains, const TensorOps& ops,
                         const EvalMode& mode, const EvalLimits& limits) {
  CheckReport report;
  for (const auto& c : chains) report.merge(check_identity(c, ops, mode, limits));
  return report;
}

std::string CheckReport::summary() const {
  std::string s = passed ? "pass" : "FAIL";
  s += " (" + std::to_string(evaluations) + " evaluations";
  if (!failures.empty()) s += ", " + std::to_string(failures.size()) + " witnesses";
  s += ")";
  if (!note.empty()) s += " [" + note + "]";
  return s;
}

}  // namespace trisys
