#ifndef TRISYS_CATALOG_HPP
#define TRISYS_CATALOG_HPP

#include <string>
#include <vector>

#include "trisys/identity.hpp"

namespace trisys {

// Named axiom sets, parsed from the DSL sources under catalog/. The sources
// are compiled into the library at build time so binaries are self-contained;
// the .ids files remain the single source of truth.
enum class AxiomSet {
  Dialgebra,
  ATS1,
  ATS2,
  ATT1,
  ATT2,
  JTD,
  LeibTS,
  LeftSymmetricDi,
  RightLeibniz,
};

const char* axiom_set_name(AxiomSet s);
AxiomSet axiom_set_from_name(const std::string& name);  // case-insensitive
std::vector<std::string> axiom_set_names();

// Raw DSL text of a set.
const std::string& axiom_set_source(AxiomSet s);

// Parsed chains, with conventional names assigned (JTD1.., LTSA/LTSB, ...).
const std::vector<IdentityChain>& axiom_set(AxiomSet s);

// KP input identities shipped alongside the catalog.
const std::string& kp_input_associativity();   // {{a,b},c} = {a,{b,c}}
const std::string& kp_input_left_symmetric();  // the left-symmetric identity
const std::string& kp_input_ats1();
const std::string& kp_input_ats2();

}  // namespace trisys

#endif
