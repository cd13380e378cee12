#include <doctest.h>

#include <set>

#include "trisys/catalog.hpp"
#include "trisys/kp.hpp"

using namespace trisys;

namespace {

Monomial first_monomial(const std::string& text) {
  return parse(text + " = " + text)[0].members[0].terms().front().first;
}

std::set<std::string> keys(const std::vector<IdentityChain>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(chain_canonical_key(c));
  return out;
}

}  // namespace

TEST_CASE("subscript_monomial follows the central-argument rule") {
  CHECK(subscript_monomial(first_monomial("{{a,b},c}"), "a").key() == "{{a,b}_1,c}_1");
  CHECK(subscript_monomial(first_monomial("{a,{b,c}}"), "c").key() == "{a,{b,c}_2}_2");
  CHECK(subscript_monomial(first_monomial("{a,{b,c,d},e}"), "c").key() == "{a,{b,c,d}_2,e}_2");
  // left/right placement picks the first/last operation
  CHECK(subscript_monomial(first_monomial("{a,{b,c}}"), "a").key() == "{a,{b,c}_1}_1");
  CHECK(subscript_monomial(first_monomial("{{a,b},c}"), "c").key() == "{{a,b}_2,c}_2");
  CHECK_THROWS_AS(subscript_monomial(first_monomial("{a,b}"), "z"), Error);
}

TEST_CASE("part 1 of associativity gives the first three dialgebra axioms") {
  auto chains = kp_part1(parse(kp_input_associativity())[0]);
  REQUIRE(chains.size() == 3);
  CHECK(format(chains[0]) == "{{a,b}_1,c}_1 = {a,{b,c}_1}_1");
  CHECK(format(chains[1]) == "{{a,b}_2,c}_1 = {a,{b,c}_1}_2");
  CHECK(format(chains[2]) == "{{a,b}_2,c}_2 = {a,{b,c}_2}_2");
}

TEST_CASE("part 1 of the first-kind triple identity gives the five listed relations") {
  auto chains = kp_part1(parse(kp_input_ats1())[0]);
  REQUIRE(chains.size() == 5);
  CHECK(format(chains[0]) == "{{a,b,c}_1,d,e}_1 = {a,{b,c,d}_1,e}_1 = {a,b,{c,d,e}_1}_1");
  CHECK(format(chains[1]) == "{{a,b,c}_2,d,e}_1 = {a,{b,c,d}_1,e}_2 = {a,b,{c,d,e}_1}_2");
  CHECK(format(chains[2]) == "{{a,b,c}_3,d,e}_1 = {a,{b,c,d}_2,e}_2 = {a,b,{c,d,e}_1}_3");
  CHECK(format(chains[3]) == "{{a,b,c}_3,d,e}_2 = {a,{b,c,d}_3,e}_2 = {a,b,{c,d,e}_2}_3");
  CHECK(format(chains[4]) == "{{a,b,c}_3,d,e}_3 = {a,{b,c,d}_3,e}_3 = {a,b,{c,d,e}_3}_3");
}

TEST_CASE("part 1 of the second-kind triple identity gives the five listed relations") {
  auto chains = kp_part1(parse(kp_input_ats2())[0]);
  REQUIRE(chains.size() == 5);
  CHECK(format(chains[0]) == "{{a,b,c}_1,d,e}_1 = {a,{d,c,b}_1,e}_1 = {a,b,{c,d,e}_1}_1");
  CHECK(format(chains[1]) == "{{a,b,c}_2,d,e}_1 = {a,{d,c,b}_3,e}_2 = {a,b,{c,d,e}_1}_2");
  CHECK(format(chains[2]) == "{{a,b,c}_3,d,e}_1 = {a,{d,c,b}_2,e}_2 = {a,b,{c,d,e}_1}_3");
  CHECK(format(chains[3]) == "{{a,b,c}_3,d,e}_2 = {a,{d,c,b}_1,e}_2 = {a,b,{c,d,e}_2}_3");
  CHECK(format(chains[4]) == "{{a,b,c}_3,d,e}_3 = {a,{d,c,b}_3,e}_3 = {a,b,{c,d,e}_3}_3");
}

TEST_CASE("part 2 interchange chains") {
  SUBCASE("n = 2 gives the two binary interchange identities") {
    auto chains = kp_part2(2);
    REQUIRE(chains.size() == 2);
    CHECK(format(chains[0]) == "{a1,{b1,b2}_1}_1 = {a1,{b1,b2}_2}_1");
    CHECK(format(chains[1]) == "{{b1,b2}_1,a2}_2 = {{b1,b2}_2,a2}_2");
  }
  SUBCASE("n = 3 gives six three-member chains") {
    auto chains = kp_part2(3);
    REQUIRE(chains.size() == 6);
    for (const auto& c : chains) {
      CHECK(c.members.size() == 3);
      CHECK(c.degree() == 5);
    }
    // they are exactly the six part-2 relations in the ternary catalog
    std::vector<IdentityChain> tail(axiom_set(AxiomSet::ATT1).begin() + 5,
                                    axiom_set(AxiomSet::ATT1).end());
    CHECK(keys(chains) == keys(tail));
  }
  SUBCASE("count is n(n-1)") {
    CHECK(kp_part2(2).size() == 2);
    CHECK(kp_part2(3).size() == 6);
    CHECK(kp_part2(4).size() == 12);
    CHECK_THROWS_AS(kp_part2(1), Error);
  }
}

TEST_CASE("kp_apply reproduces the catalog axiom sets") {
  SUBCASE("associativity expands to the five dialgebra axioms") {
    KPOutput out = kp_apply(parse(kp_input_associativity())[0]);
    CHECK(out.deduped.size() == 5);
    CHECK(keys(out.deduped) == keys(axiom_set(AxiomSet::Dialgebra)));
  }
  SUBCASE("the left-symmetric identity expands to the five listed identities") {
    KPOutput out = kp_apply(parse(kp_input_left_symmetric())[0]);
    CHECK(out.part1.size() == 3);
    CHECK(out.part2.size() == 2);
    CHECK(out.deduped.size() == 5);
    CHECK(keys(out.deduped) == keys(axiom_set(AxiomSet::LeftSymmetricDi)));
  }
  SUBCASE("the first-kind triple identity expands to the eleven first-kind axioms") {
    KPOutput out = kp_apply(parse(kp_input_ats1())[0]);
    CHECK(out.deduped.size() == 11);
    CHECK(keys(out.deduped) == keys(axiom_set(AxiomSet::ATT1)));
  }
  SUBCASE("the second-kind triple identity expands to the eleven second-kind axioms") {
    KPOutput out = kp_apply(parse(kp_input_ats2())[0]);
    CHECK(out.deduped.size() == 11);
    CHECK(keys(out.deduped) == keys(axiom_set(AxiomSet::ATT2)));
  }
}

TEST_CASE("degree preservation and subscript-path properties") {
  for (const char* input : {"{{a,b},c} = {a,{b,c}}",
                            "{{a,b,c},d,e} = {a,{d,c,b},e} = {a,b,{c,d,e}}"}) {
    IdentityChain id = parse(input)[0];
    std::size_t d = id.degree();
    auto part1 = kp_part1(id);
    REQUIRE(part1.size() == d);
    for (const auto& chain : part1)
      for (const auto& member : chain.members)
        for (const auto& [m, c] : member.terms()) CHECK(m.degree() == d);
    int n = id.arity();
    for (const auto& chain : kp_part2(n))
      for (const auto& member : chain.members)
        for (const auto& [m, c] : member.terms())
          CHECK(m.degree() == static_cast<std::size_t>(2 * n - 1));
  }
}

TEST_CASE("forgetting subscripts on part 1 recovers the input") {
  for (const char* input :
       {"{{a,b},c} = {a,{b,c}}", "{a,{b,c}} - {{a,b},c} = {b,{a,c}} - {{b,a},c}",
        "{{a,b,c},d,e} = {a,{b,c,d},e} = {a,b,{c,d,e}}"}) {
    IdentityChain id = parse(input)[0];
    for (const auto& chain : kp_part1(id)) {
      IdentityChain stripped = chain.strip_subscripts();
      REQUIRE(stripped.members.size() == id.members.size());
      for (std::size_t k = 0; k < id.members.size(); ++k)
        CHECK(stripped.members[k] == id.members[k]);
    }
  }
}

namespace {

// independent walk: the subscripts along the path of nodes containing the
// central variable equal its argument position at each node
void check_central_path(const Monomial& m, const std::string& central, bool& on_path_checked) {
  if (m.is_leaf()) return;
  std::vector<std::string> ls;
  for (std::size_t j = 0; j < m.children().size(); ++j) {
    ls.clear();
    m.children()[j].leaves(ls);
    if (std::find(ls.begin(), ls.end(), central) != ls.end()) {
      CHECK(m.subscript() == static_cast<int>(j) + 1);
      on_path_checked = true;
      check_central_path(m.children()[j], central, on_path_checked);
      return;
    }
  }
}

}  // namespace

TEST_CASE("central-path subscripts match the argument positions") {
  IdentityChain id = parse(kp_input_ats1())[0];
  auto order = central_argument_order(id);
  auto part1 = kp_part1(id);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& member : part1[i].members)
      for (const auto& [m, c] : member.terms()) {
        bool checked = false;
        check_central_path(m, order[i], checked);
        CHECK(checked);
      }
}

TEST_CASE("dedup key identifies re-orderings and re-associations of a chain") {
  auto k = [](const char* s) { return chain_dedup_key(parse(s)[0]); };
  CHECK(k("{{a,b},c} = {a,{b,c}}") == k("{a,{b,c}} = {{a,b},c}"));
  CHECK(k("{{a,b},c} = {a,{b,c}}") == k("{{a,b},c} = {a,{b,c}} = {{a,b},c}"));
  // renamed copies stay distinct for dedup (but not for the canonical key)
  CHECK(k("{{a,b},c} = {a,{b,c}}") != k("{{x,y},z} = {x,{y,z}}"));
  CHECK(chain_canonical_key(parse("{{a,b},c} = {a,{b,c}}")[0]) ==
        chain_canonical_key(parse("{{x,y},z} = {x,{y,z}}")[0]));
  // none of the documented expansions collapses under the dedup key
  for (const auto& text : {kp_input_associativity(), kp_input_left_symmetric(),
                           kp_input_ats1(), kp_input_ats2()})
    CHECK(kp_apply(parse(text)[0]).collapse_notes.empty());
}

TEST_CASE("collapses are recorded when expansions coincide") {
  // a trivial input: every central argument yields a zero-difference chain,
  // so part 1 collapses to a single representative
  KPOutput out = kp_apply(parse("{a,{b,c}} = {a,{b,c}}")[0]);
  CHECK(out.part1.size() == 3);
  CHECK(out.deduped.size() == 3);  // one zero chain + the two interchange chains
  CHECK(out.collapse_notes.size() == 2);
}
