#include "trisys/catalog.hpp"

#include <algorithm>
#include <map>

#include "catalog_data.hpp"

namespace trisys {

namespace {

struct SetInfo {
  const char* name;
  const char* const* source;
  std::vector<std::string> chain_names;
};

const std::map<AxiomSet, SetInfo>& registry() {
  using detail::kAts1Ids;
  static const std::map<AxiomSet, SetInfo> reg = {
      {AxiomSet::Dialgebra,
       {"DIALGEBRA", &detail::kDialgebraIds, {"dialg1", "dialg2", "dialg3", "dialg4", "dialg5"}}},
      {AxiomSet::ATS1, {"ATS1", &detail::kAts1Ids, {"ats1"}}},
      {AxiomSet::ATS2, {"ATS2", &detail::kAts2Ids, {"ats2"}}},
      {AxiomSet::ATT1,
       {"ATT1", &detail::kAtt1Ids,
        {"att1-1", "att1-2", "att1-3", "att1-4", "att1-5", "att1-6", "att1-7", "att1-8",
         "att1-9", "att1-10", "att1-11"}}},
      {AxiomSet::ATT2,
       {"ATT2", &detail::kAtt2Ids,
        {"att2-1", "att2-2", "att2-3", "att2-4", "att2-5", "att2-6", "att2-7", "att2-8",
         "att2-9", "att2-10", "att2-11"}}},
      {AxiomSet::JTD,
       {"JTD", &detail::kJtdIds,
        {"JTD1", "JTD2", "JTD3", "JTD4", "JTD5", "JTD6", "JTD7", "JTD8"}}},
      {AxiomSet::LeibTS, {"LEIBTS", &detail::kLeibtsIds, {"LTSA", "LTSB"}}},
      {AxiomSet::LeftSymmetricDi,
       {"LEFT_SYMMETRIC_DI", &detail::kLeftSymmetricIds,
        {"lsd1", "lsd2", "lsd3", "lsd4", "lsd5"}}},
      {AxiomSet::RightLeibniz, {"RIGHT_LEIBNIZ", &detail::kRightLeibnizIds, {"right_leibniz"}}},
  };
  return reg;
}

}  // namespace

const char* axiom_set_name(AxiomSet s) { return registry().at(s).name; }

AxiomSet axiom_set_from_name(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(), ::toupper);
  for (const auto& [set, info] : registry())
    if (up == info.name) return set;
  throw Error("unknown axiom set '" + name + "'");
}

std::vector<std::string> axiom_set_names() {
  std::vector<std::string> out;
  for (const auto& [set, info] : registry()) out.push_back(info.name);
  return out;
}

const std::string& axiom_set_source(AxiomSet s) {
  static std::map<AxiomSet, std::string> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, *registry().at(s).source).first;
  return it->second;
}

const std::vector<IdentityChain>& axiom_set(AxiomSet s) {
  static std::map<AxiomSet, std::vector<IdentityChain>> cache;
  auto it = cache.find(s);
  if (it == cache.end()) {
    std::vector<IdentityChain> chains = parse(axiom_set_source(s));
    const auto& names = registry().at(s).chain_names;
    if (chains.size() != names.size())
      throw Error(std::string("catalog set ") + axiom_set_name(s) + " has " +
                  std::to_string(chains.size()) + " chains, expected " +
                  std::to_string(names.size()));
    for (std::size_t i = 0; i < chains.size(); ++i) chains[i].name = names[i];
    it = cache.emplace(s, std::move(chains)).first;
  }
  return it->second;
}

const std::string& kp_input_associativity() {
  static const std::string s = detail::kAssocInputIds;
  return s;
}

const std::string& kp_input_left_symmetric() {
  static const std::string s = detail::kLeftSymmetricInputIds;
  return s;
}

const std::string& kp_input_ats1() {
  static const std::string s = detail::kAts1Ids;
  return s;
}

const std::string& kp_input_ats2() {
  static const std::string s = detail::kAts2Ids;
  return s;
}

}  // namespace trisys
