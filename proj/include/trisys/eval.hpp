#ifndef TRISYS_EVAL_HPP
#define TRISYS_EVAL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trisys/identity.hpp"
#include "trisys/report.hpp"
#include "trisys/sparse.hpp"

namespace trisys {

// The multilinear operations an identity is evaluated against: one n-linear
// map per bracket subscript (0 stands for the plain, unsubscripted bracket).
// Multilinearity makes basis-tuple checking complete.
struct TensorOps {
  std::size_t dim = 0;
  int arity = 3;
  FieldSpec field = FieldSpec::rational();
  std::function<SparseVec(int sub, const std::vector<SparseVec>&)> apply;
  std::function<std::string(std::size_t)> label;

  std::string basis_label(std::size_t i) const {
    return label ? label(i) : "e" + std::to_string(i);
  }
};

struct EvalMode {
  enum class Type { Exhaustive, Sampled, Generators };
  Type type = Type::Exhaustive;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::vector<std::size_t> generator_indices;

  static EvalMode exhaustive() { return {}; }
  static EvalMode sampled(std::size_t count, std::uint64_t seed) {
    EvalMode m;
    m.type = Type::Sampled;
    m.samples = count;
    m.seed = seed;
    return m;
  }
  // Substitute the k-th variable (alphabetical order) by the k-th listed
  // basis element, once. On a free model with distinct generators this
  // constitutes a proof of the identity for the whole variety.
  static EvalMode generators(std::vector<std::size_t> idx) {
    EvalMode m;
    m.type = Type::Generators;
    m.generator_indices = std::move(idx);
    return m;
  }
};

struct EvalLimits {
  std::uint64_t eval_cap = 10'000'000;  // exhaustive-mode tuple guard
  std::size_t max_witnesses = 3;
};

// Reads TRISYS_EVAL_CAP when set.
EvalLimits default_limits();

CheckReport check_identity(const IdentityChain& id, const TensorOps& ops, const EvalMode& mode,
                           const EvalLimits& limits = default_limits());

CheckReport check_chains(const std::vector<IdentityChain>& chains, const TensorOps& ops,
                         const EvalMode& mode, const EvalLimits& limits = default_limits());

std::string sparse_str(const SparseVec& v, const TensorOps& ops);

}  // namespace trisys

#endif
