#ifndef TRISYS_IDENTITY_HPP
#define TRISYS_IDENTITY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "trisys/error.hpp"

namespace trisys {

// A multilinear monomial: a tree whose leaves are variable names and whose
// internal nodes are n-ary bracket applications, each carrying a subscript in
// [1, n] or none (subscript 0). Within one monomial every variable occurs
// exactly once and all nodes share the arity and the subscript regime.
class Monomial {
 public:
  static Monomial leaf(std::string var);
  static Monomial node(int subscript, std::vector<Monomial> children);

  bool is_leaf() const { return children_.empty(); }
  const std::string& var() const { return var_; }
  int subscript() const { return sub_; }
  const std::vector<Monomial>& children() const { return children_; }

  // Preorder serialization; doubles as the display form and as the total
  // monomial order (lexicographic comparison of keys).
  const std::string& key() const { return key_; }

  std::size_t degree() const;                 // number of leaves
  void leaves(std::vector<std::string>& out) const;
  int arity() const;                          // 0 when the monomial is a bare variable
  bool uniform_arity(int& n) const;
  // true if every node is subscripted / unsubscripted respectively
  bool all_subscripted() const;
  bool all_unsubscripted() const;

  Monomial rename(const std::map<std::string, std::string>& m) const;
  Monomial strip_subscripts() const;

  bool operator<(const Monomial& o) const { return key_ < o.key_; }
  bool operator==(const Monomial& o) const { return key_ == o.key_; }

 private:
  std::string var_;
  int sub_ = 0;
  std::vector<Monomial> children_;
  std::string key_;
};

// Formal integer combination of monomials; kept canonical (terms sorted by
// monomial key, no zero coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial monomial(const Monomial& m, long long coeff = 1);

  const std::vector<std::pair<Monomial, long long>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Polynomial& o, long long scale = 1);
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial negated() const;

  std::set<std::string> variables() const;
  Polynomial rename(const std::map<std::string, std::string>& m) const;
  Polynomial strip_subscripts() const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  bool operator<(const Polynomial& o) const;

 private:
  friend Polynomial canonicalize(const Polynomial&);
  std::vector<std::pair<Monomial, long long>> terms_;
};

// Re-normalizes (sorts, collects, drops zeros). Idempotent; Polynomial values
// built through the public interface are already canonical.
Polynomial canonicalize(const Polynomial& p);

// A chain P1 = P2 = ... = Pk of pairwise-equal polynomials, k >= 2.
struct IdentityChain {
  std::string name;
  std::vector<Polynomial> members;

  std::set<std::string> variables() const;
  std::size_t degree() const;  // number of variables
  int arity() const;           // bracket arity, 0 when no brackets appear
  IdentityChain rename(const std::map<std::string, std::string>& m) const;
  IdentityChain strip_subscripts() const;
};

// Consecutive differences P1-P2, P2-P3, ..., canonicalized. The chain holds
// under an evaluation iff every returned polynomial vanishes.
std::vector<Polynomial> chain_to_polynomials(const IdentityChain& c);

// DSL grammar (ASCII, whitespace-insensitive, "#" comments to end of line):
//   file     := identity (";" identity)* ;
//   identity := sum ("=" sum)+ ;
//   sum      := term (("+"|"-") term)* ;
//   term     := [INT "*"] atom ;
//   atom     := VAR | "{" sum ("," sum)* "}" ["_" INT] ;
//   VAR      := [a-z][a-z0-9]* ;
// A leading "-" on the first term is permitted. The literal 0 is additionally
// accepted as a term and denotes the zero polynomial.
std::vector<IdentityChain> parse(const std::string& text);

std::string format(const Monomial& m);
std::string format(const Polynomial& p);
std::string format(const IdentityChain& c);

// Dedup key of a chain: the set of sign-normalized canonical difference
// polynomials, on the chain's own variable names. Re-orderings and
// re-associations of the same chain share the key; renamed copies do not.
std::string chain_dedup_key(const IdentityChain& c);

// Canonical key of a chain: the dedup key minimized over bijective renamings
// of the variables. Two chains assert the same identities up to renaming iff
// their canonical keys are equal (used for golden-set comparison).
std::string chain_canonical_key(const IdentityChain& c);

}  // namespace trisys

#endif
