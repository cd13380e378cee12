#include "trisys/kp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trisys {

namespace {

// Positions (0-based, in leaf order) occupied by each leaf of m.
void leaf_positions(const Monomial& m, std::size_t& next,
                    std::map<const Monomial*, std::pair<std::size_t, std::size_t>>& spans,
                    std::map<std::string, std::size_t>& var_pos) {
  std::size_t start = next;
  if (m.is_leaf()) {
    var_pos[m.var()] = next++;
  } else {
    for (const auto& c : m.children()) leaf_positions(c, next, spans, var_pos);
  }
  spans[&m] = {start, next};
}

Monomial subscript_rec(const Monomial& m, std::size_t central_pos,
                       const std::map<const Monomial*, std::pair<std::size_t, std::size_t>>& spans) {
  if (m.is_leaf()) return m;
  int n = static_cast<int>(m.children().size());
  int sub;
  auto [start, end] = spans.at(&m);
  if (central_pos < start) {
    sub = 1;  // central argument written to the left of this bracket
  } else if (central_pos >= end) {
    sub = n;  // written to the right
  } else {
    sub = 0;
    for (int j = 0; j < n; ++j) {
      auto [cs, ce] = spans.at(&m.children()[j]);
      if (central_pos >= cs && central_pos < ce) {
        sub = j + 1;
        break;
      }
    }
  }
  std::vector<Monomial> ch;
  ch.reserve(m.children().size());
  for (const auto& c : m.children()) ch.push_back(subscript_rec(c, central_pos, spans));
  return Monomial::node(sub, std::move(ch));
}

}  // namespace

Monomial subscript_monomial(const Monomial& m, const std::string& central) {
  if (!m.all_unsubscripted())
    throw Error("subscript_monomial: monomial already carries subscripts: " + format(m));
  std::map<const Monomial*, std::pair<std::size_t, std::size_t>> spans;
  std::map<std::string, std::size_t> var_pos;
  std::size_t next = 0;
  leaf_positions(m, next, spans, var_pos);
  auto it = var_pos.find(central);
  if (it == var_pos.end())
    throw Error("subscript_monomial: central variable '" + central + "' absent from " + format(m));
  return subscript_rec(m, it->second, spans);
}

std::vector<std::string> central_argument_order(const IdentityChain& id) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  if (id.members.empty()) return order;
  std::vector<std::string> ls;
  for (const auto& [m, c] : id.members.front().terms()) {
    ls.clear();
    m.leaves(ls);
    for (const auto& v : ls)
      if (seen.insert(v).second) order.push_back(v);
  }
  return order;
}

std::vector<IdentityChain> kp_part1(const IdentityChain& id) {
  for (const auto& p : id.members)
    for (const auto& [m, c] : p.terms())
      if (!m.all_unsubscripted())
        throw Error("kp_part1: input must be unsubscripted: " + format(m));
  std::vector<IdentityChain> out;
  for (const auto& central : central_argument_order(id)) {
    IdentityChain chain;
    chain.name = id.name + ".central_" + central;
    for (const auto& p : id.members) {
      Polynomial q;
      for (const auto& [m, c] : p.terms())
        q.add(Polynomial::monomial(subscript_monomial(m, central), c));
      chain.members.push_back(std::move(q));
    }
    out.push_back(std::move(chain));
  }
  return out;
}

std::vector<IdentityChain> kp_part2(int arity) {
  if (arity < 2) throw Error("kp_part2: arity must be at least 2");
  std::vector<IdentityChain> out;
  for (int j = 1; j <= arity; ++j) {
    for (int i = 1; i <= arity; ++i) {
      if (i == j) continue;
      IdentityChain chain;
      chain.name = "interchange_j" + std::to_string(j) + "_i" + std::to_string(i);
      for (int k = 1; k <= arity; ++k) {
        std::vector<Monomial> inner;
        for (int t = 1; t <= arity; ++t)
          inner.push_back(Monomial::leaf("b" + std::to_string(t)));
        std::vector<Monomial> outer;
        for (int t = 1; t <= arity; ++t) {
          if (t == i)
            outer.push_back(Monomial::node(k, inner));
          else
            outer.push_back(Monomial::leaf("a" + std::to_string(t)));
        }
        chain.members.push_back(Polynomial::monomial(Monomial::node(j, std::move(outer))));
      }
      out.push_back(std::move(chain));
    }
  }
  return out;
}

KPOutput kp_apply(const IdentityChain& id) {
  KPOutput out;
  out.part1 = kp_part1(id);
  int n = id.arity();
  if (n < 2) throw Error("kp_apply: identity has no brackets of arity >= 2");
  out.part2 = kp_part2(n);
  std::map<std::string, std::string> seen;  // dedup key -> chain name
  auto consider = [&](const IdentityChain& c) {
    std::string key = chain_dedup_key(c);
    auto [it, inserted] = seen.emplace(key, c.name);
    if (inserted)
      out.deduped.push_back(c);
    else
      out.collapse_notes.push_back(c.name + " duplicates " + it->second);
  };
  for (const auto& c : out.part1) consider(c);
  for (const auto& c : out.part2) consider(c);
  return out;
}

}  // namespace trisys
