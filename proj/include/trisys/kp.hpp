#ifndef TRISYS_KP_HPP
#define TRISYS_KP_HPP

#include <string>
#include <vector>

#include "trisys/identity.hpp"

namespace trisys {

// Expansion of one multilinear identity in a single n-ary operation into
// identities in n subscripted operations.
struct KPOutput {
  std::vector<IdentityChain> part1;   // one chain per central argument, in variable order
  std::vector<IdentityChain> part2;   // interchange chains, (j, i) order
  std::vector<IdentityChain> deduped; // canonical-form-deduplicated union
  // one note per collapsed duplicate ("X duplicates Y")
  std::vector<std::string> collapse_notes;
};

// Subscript every bracket of an unsubscripted monomial by the position of the
// central variable: nodes whose j-th argument contains it get j, nodes it
// precedes get 1, nodes it follows get n.
Monomial subscript_monomial(const Monomial& m, const std::string& central);

// d output chains for a degree-d input, the i-th one taking the i-th variable
// (first-appearance order in the first chain member) as central.
std::vector<IdentityChain> kp_part1(const IdentityChain& id);

// Interchange chains: for every outer subscript j and argument position
// i != j, the chain over k = 1..n of {a1,..,{b1,..,bn}_k,..,an}_j.
// n(n-1) chains of degree 2n-1.
std::vector<IdentityChain> kp_part2(int arity);

KPOutput kp_apply(const IdentityChain& id);

// First-appearance order of the variables of the first chain member
// (monomials visited in canonical order, leaves left to right).
std::vector<std::string> central_argument_order(const IdentityChain& id);

}  // namespace trisys

#endif
