// Command-line front end: KP expansions, variety and theorem checks,
// standard embeddings, annihilator subspaces, Leibniz-algebra utilities.
//
// Exit codes: 0 all checks pass, 1 a mathematical falsifier was found,
// 2 usage or input errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "trisys/catalog.hpp"
#include "trisys/diend.hpp"
#include "trisys/embed.hpp"
#include "trisys/json_io.hpp"
#include "trisys/kp.hpp"
#include "trisys/trisystem.hpp"

using namespace trisys;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFalsifier = 1;
constexpr int kExitUsage = 2;

struct ModelOptions {
  std::string model = "matrix";
  std::size_t gens = 5, deg = 5;
  std::size_t m = 2, m1 = 1;
  std::uint64_t p = 5;
  bool complex_like = false;
  std::size_t dim = 4;
  std::string from;  // instance file
  std::string via = "first";
  std::string mode = "auto";  // auto|exhaustive|sampled|generators
  std::size_t samples = 100;
  std::int64_t seed = -1;
  std::string format = "text";
};

void add_model_options(CLI::App* cmd, ModelOptions& mo) {
  cmd->add_option("--model", mo.model, "free|matrix|assoc|differential|zero|file")
      ->default_val("matrix");
  cmd->add_option("--gens", mo.gens, "free model: number of generators");
  cmd->add_option("--deg", mo.deg, "free model: truncation degree");
  cmd->add_option("--m", mo.m, "matrix model: size m");
  cmd->add_option("--m1", mo.m1, "matrix model: block split m1");
  cmd->add_option("--p", mo.p, "odd prime modulus (matrix/differential/zero models)");
  cmd->add_flag("--complex", mo.complex_like, "matrix model: paired base ring with swapped conjugation");
  cmd->add_option("--dim", mo.dim, "zero model: dimension");
  cmd->add_option("--from", mo.from, "file model: instance JSON path");
}

void add_mode_options(CLI::App* cmd, ModelOptions& mo) {
  cmd->add_option("--mode", mo.mode, "auto|exhaustive|sampled|generators")->default_val("auto");
  cmd->add_option("--samples", mo.samples, "sampled mode: number of samples");
  cmd->add_option("--seed", mo.seed, "sampled mode: seed (required)");
  cmd->add_option("--format", mo.format, "text|json")->default_val("text");
}

std::unique_ptr<Dialgebra> make_dialgebra(const ModelOptions& mo) {
  if (mo.model == "free") return std::make_unique<FreeDialgebra>(mo.gens, mo.deg);
  FieldSpec f = FieldSpec::gfp(mo.p);
  if (mo.model == "matrix")
    return std::make_unique<TableDialgebra>(matrix_dialgebra(mo.m, mo.m1, f, mo.complex_like));
  if (mo.model == "assoc") {
    // the full m x m matrix algebra as a degenerate dialgebra (both products
    // the ordinary one) with the transpose involution
    const std::size_t m = mo.m, n = m * m;
    std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
    std::vector<std::string> labels(n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        labels[r * m + c] = "E" + std::to_string(r + 1) + std::to_string(c + 1);
        for (std::size_t t = 0; t < m; ++t)
          mult[r * m + c][c * m + t] = SparseVec::unit(r * m + t, f);
      }
    auto D = std::make_unique<TableDialgebra>(dialgebra_from_associative(mult, n, f, labels));
    ExactMatrix inv(n, n, f);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) inv.at(c * m + r, r * m + c) = Scalar::one(f);
    D->set_involution(std::move(inv));
    return D;
  }
  if (mo.model == "differential") {
    // upper triangular 2x2 matrices with d = [E12, -]; basis E11, E12, E22
    std::vector<std::vector<SparseVec>> mult(3, std::vector<SparseVec>(3));
    auto unit = [&](std::size_t i) { return SparseVec::unit(i, f); };
    mult[0][0] = unit(0);                 // E11 E11 = E11
    mult[0][1] = unit(1);                 // E11 E12 = E12
    mult[1][2] = unit(1);                 // E12 E22 = E12
    mult[2][2] = unit(2);                 // E22 E22 = E22
    ExactMatrix d(3, 3, f);
    d.at(1, 0) = -Scalar::one(f);         // d(E11) = -E12
    d.at(1, 2) = Scalar::one(f);          // d(E22) = E12
    return std::make_unique<TableDialgebra>(
        differential_dialgebra(mult, d, {"E11", "E12", "E22"}));
  }
  if (mo.model == "zero") return std::make_unique<TableDialgebra>(mo.dim, f);
  if (mo.model == "file")
    return std::make_unique<TableDialgebra>(dialgebra_from_json(load_json_file(mo.from)));
  throw Error("unknown model '" + mo.model + "'");
}

struct InstanceBundle {
  std::unique_ptr<Dialgebra> dia;   // owner when the trisystem is a view
  std::unique_ptr<Trisystem> tri;
  bool free_model = false;
};

InstanceBundle make_trisystem(const ModelOptions& mo) {
  InstanceBundle b;
  if (mo.model == "file") {
    b.tri = std::make_unique<DenseTrisystem>(trisystem_from_json(load_json_file(mo.from)));
    return b;
  }
  if (mo.model == "zero") {
    b.tri = std::make_unique<DenseTrisystem>(mo.dim, FieldSpec::gfp(mo.p), "zero");
    return b;
  }
  b.dia = make_dialgebra(mo);
  b.free_model = mo.model == "free";
  const bool second = mo.via == "second";
  if (b.free_model) {
    if (second)
      b.tri = std::make_unique<Att2View>(*b.dia);
    else
      b.tri = std::make_unique<Att1View>(*b.dia);
  } else {
    if (second)
      b.tri = std::make_unique<DenseTrisystem>(att2_from_dialgebra(*b.dia));
    else
      b.tri = std::make_unique<DenseTrisystem>(att1_from_dialgebra(*b.dia));
  }
  return b;
}

EvalMode make_mode(const ModelOptions& mo, const InstanceBundle& b, std::size_t degree) {
  std::string mode = mo.mode;
  if (mode == "auto") {
    if (b.free_model) {
      mode = "generators";
    } else {
      double total = 1;
      for (std::size_t k = 0; k < degree; ++k) total *= static_cast<double>(b.tri->dim());
      mode = total <= static_cast<double>(default_limits().eval_cap) ? "exhaustive" : "sampled";
    }
  }
  if (mode == "exhaustive") return EvalMode::exhaustive();
  if (mode == "generators") {
    if (!b.free_model) throw Error("generators mode needs the free model");
    auto* fd = dynamic_cast<const FreeDialgebra*>(b.dia.get());
    return EvalMode::generators(fd->generator_indices());
  }
  if (mode == "sampled") {
    if (mo.seed < 0) throw Error("sampled mode requires an explicit --seed");
    return EvalMode::sampled(mo.samples, static_cast<std::uint64_t>(mo.seed));
  }
  throw Error("unknown mode '" + mode + "'");
}

int report_result(const CheckReport& r, const ModelOptions& mo, const std::string& what) {
  if (mo.format == "json") {
    json j = report_to_json(r);
    j["what"] = what;
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << what << ": " << r.summary() << "\n";
    for (const auto& wtn : r.failures)
      std::cout << "  witness [" << wtn.chain << "] " << wtn.detail << "\n";
  }
  return r.passed ? kExitPass : kExitFalsifier;
}

// --------------------------------------------------------------------------
// kp

std::string latex_monomial(const Monomial& m) {
  if (m.is_leaf()) return m.var();
  std::string s = "\\{";
  for (std::size_t i = 0; i < m.children().size(); ++i) {
    if (i) s += ",";
    s += latex_monomial(m.children()[i]);
  }
  s += "\\}";
  if (m.subscript() > 0) s += "_{" + std::to_string(m.subscript()) + "}";
  return s;
}

std::string latex_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    long long a = c;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
      first = false;
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) s += std::to_string(a);
    s += latex_monomial(m);
  }
  return s;
}

std::string latex_chain(const IdentityChain& c) {
  std::string s;
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i) s += " = ";
    s += latex_polynomial(c.members[i]);
  }
  return s;
}

int run_kp(const std::string& input, int arity, const std::string& fmt,
           const std::string& golden) {
  std::ifstream in(input);
  if (!in) throw Error("cannot open " + input);
  std::stringstream ss;
  ss << in.rdbuf();
  std::vector<IdentityChain> ids = parse(ss.str());
  if (ids.empty()) throw Error("no identities in " + input);

  std::vector<KPOutput> outs;
  for (auto& id : ids) {
    if (arity > 0 && id.arity() != arity)
      throw Error("identity '" + format(id) + "' has arity " + std::to_string(id.arity()) +
                  ", expected " + std::to_string(arity));
    outs.push_back(kp_apply(id));
  }

  if (fmt == "json") {
    json j = json::array();
    for (std::size_t i = 0; i < outs.size(); ++i) {
      json o;
      o["input"] = format(ids[i]);
      auto dump = [](const std::vector<IdentityChain>& cs) {
        json a = json::array();
        for (const auto& c : cs) a.push_back(format(c));
        return a;
      };
      o["part1"] = dump(outs[i].part1);
      o["part2"] = dump(outs[i].part2);
      o["deduped"] = dump(outs[i].deduped);
      o["collapsed"] = outs[i].collapse_notes;
      j.push_back(std::move(o));
    }
    std::cout << j.dump(1) << "\n";
  } else if (fmt == "latex") {
    for (const auto& out : outs) {
      std::cout << "\\begin{align*}\n";
      for (const auto& c : out.deduped) std::cout << "& " << latex_chain(c) << ", \\\\\n";
      std::cout << "\\end{align*}\n";
    }
  } else {
    for (std::size_t i = 0; i < outs.size(); ++i) {
      std::cout << "input: " << format(ids[i]) << "\n";
      std::cout << "part 1 (" << outs[i].part1.size() << " identities):\n";
      for (const auto& c : outs[i].part1) std::cout << "  " << format(c) << "\n";
      std::cout << "part 2 (" << outs[i].part2.size() << " identities):\n";
      for (const auto& c : outs[i].part2) std::cout << "  " << format(c) << "\n";
      std::cout << "deduped (" << outs[i].deduped.size() << " identities):\n";
      for (const auto& c : outs[i].deduped) std::cout << "  " << format(c) << "\n";
      for (const auto& n : outs[i].collapse_notes) std::cout << "  note: " << n << "\n";
    }
  }

  if (!golden.empty()) {
    std::ifstream gin(golden);
    if (!gin) throw Error("cannot open " + golden);
    std::stringstream gss;
    gss << gin.rdbuf();
    std::vector<IdentityChain> want = parse(gss.str());
    std::set<std::string> want_keys, got_keys;
    for (const auto& c : want) want_keys.insert(chain_canonical_key(c));
    for (const auto& out : outs)
      for (const auto& c : out.deduped) got_keys.insert(chain_canonical_key(c));
    if (want_keys != got_keys) {
      std::cout << "golden mismatch against " << golden << "\n";
      for (const auto& c : want)
        if (!got_keys.count(chain_canonical_key(c)))
          std::cout << "  missing: " << format(c) << "\n";
      for (const auto& out : outs)
        for (const auto& c : out.deduped)
          if (!want_keys.count(chain_canonical_key(c)))
            std::cout << "  extra:   " << format(c) << "\n";
      return kExitFalsifier;
    }
    std::cout << "golden match: " << golden << " (" << want.size() << " identities)\n";
  }
  return kExitPass;
}

// --------------------------------------------------------------------------
// subspace parsing for the leibniz command

std::vector<Scalar> parse_subspace_element(const std::string& token, std::size_t m,
                                           const FieldSpec& f) {
  // sum of unit terms: "E12+E22", optional integer coefficients "2*E12";
  // B1,B2,B3 abbreviate the documented 2x2 example basis
  static const std::map<std::string, std::string> aliases = {
      {"B1", "E12"}, {"B2", "E21"}, {"B3", "E12+E22"}};
  std::string expr = token;
  auto alias = aliases.find(expr);
  if (alias != aliases.end() && m == 2) expr = alias->second;
  std::vector<Scalar> v(m * m, Scalar::zero(f));
  std::size_t pos = 0;
  while (pos < expr.size()) {
    long long coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(expr[pos]))) {
      std::size_t end = pos;
      while (end < expr.size() && std::isdigit(static_cast<unsigned char>(expr[end]))) ++end;
      coeff = std::stoll(expr.substr(pos, end - pos));
      pos = end;
      if (pos < expr.size() && expr[pos] == '*') ++pos;
    }
    if (pos + 2 >= expr.size() || expr[pos] != 'E')
      throw Error("cannot parse subspace element '" + token + "'");
    std::size_t r = static_cast<std::size_t>(expr[pos + 1] - '1');
    std::size_t c = static_cast<std::size_t>(expr[pos + 2] - '1');
    if (r >= m || c >= m) throw Error("unit " + expr.substr(pos, 3) + " out of range");
    v[r * m + c] += Scalar::of_int(f, coeff);
    pos += 3;
    if (pos < expr.size()) {
      if (expr[pos] != '+') throw Error("cannot parse subspace element '" + token + "'");
      ++pos;
    }
  }
  return v;
}

int run_leibniz(const ModelOptions& mo, const std::string& subspace) {
  auto dia = make_dialgebra(mo);
  BilinearTable bracket = dminus_bracket(*dia);
  CheckReport leib = check_right_leibniz(bracket);
  std::cout << "right Leibniz check: " << leib.summary() << "\n";
  int rc = leib.passed ? kExitPass : kExitFalsifier;

  std::vector<std::vector<Scalar>> gens;
  if (!subspace.empty()) {
    std::stringstream ss(subspace);
    std::string tok;
    while (std::getline(ss, tok, ','))
      gens.push_back(parse_subspace_element(tok, mo.m, dia->field()));
  } else {
    for (std::size_t i = 0; i < bracket.dim; ++i) {
      std::vector<Scalar> v(bracket.dim, Scalar::zero(dia->field()));
      v[i] = Scalar::one(dia->field());
      gens.push_back(std::move(v));
    }
  }
  SubalgebraResult sub = subalgebra_structure_constants(bracket, gens);
  std::cout << (sub.closed_from_start ? "span closed under the bracket\n"
                                      : "span extended to close under the bracket\n");
  std::cout << "basis size " << sub.basis.size() << "; nonzero structure constants:\n";
  for (std::size_t i = 0; i < sub.basis.size(); ++i)
    for (std::size_t j = 0; j < sub.basis.size(); ++j) {
      bool nonzero = false;
      for (const auto& s : sub.constants[i][j]) nonzero = nonzero || !s.is_zero();
      if (!nonzero) continue;
      std::cout << "  [b" << i + 1 << ",b" << j + 1 << "] =";
      for (std::size_t k = 0; k < sub.constants[i][j].size(); ++k)
        if (!sub.constants[i][j][k].is_zero())
          std::cout << " " << sub.constants[i][j][k].str() << "*b" << k + 1;
      std::cout << "\n";
    }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for dialgebras and triple trisystems"};
  app.require_subcommand(1);

  // kp
  auto* kp_cmd = app.add_subcommand("kp", "expand an identity into subscripted operations");
  std::string kp_input, kp_fmt = "text", kp_golden;
  int kp_arity = 0;
  kp_cmd->add_option("--input", kp_input, "identity file (DSL)")->required();
  kp_cmd->add_option("--arity", kp_arity, "expected bracket arity");
  kp_cmd->add_option("--format", kp_fmt, "text|json|latex")->default_val("text");
  kp_cmd->add_option("--golden", kp_golden, "catalog file the deduped output must match");

  // check
  auto* check_cmd = app.add_subcommand("check", "verify axiom sets on concrete instances");
  check_cmd->require_subcommand(1);
  ModelOptions var_mo;
  std::string var_set;
  auto* variety_cmd = check_cmd->add_subcommand("variety", "check a named axiom set");
  variety_cmd->add_option("--set", var_set, "DIALGEBRA|ATS1|ATS2|ATT1|ATT2|JTD|LEIBTS")->required();
  variety_cmd->add_option("--via", var_mo.via, "construction kind for derived sets: first|second")
      ->default_val("first");
  add_model_options(variety_cmd, var_mo);
  add_mode_options(variety_cmd, var_mo);

  ModelOptions thm_mo;
  std::string thm_name;
  auto* theorem_cmd = check_cmd->add_subcommand("theorem", "check a named construction theorem");
  theorem_cmd->add_option("--name", thm_name,
                          "asstoass|att2fromdialgebra|asstojordan|asstoleibniz")
      ->required();
  theorem_cmd->add_option("--kind", thm_mo.via, "first|second")->default_val("first");
  add_model_options(theorem_cmd, thm_mo);
  add_mode_options(theorem_cmd, thm_mo);

  ModelOptions dia_mo;
  auto* dialg_cmd = check_cmd->add_subcommand("dialgebra", "five dialgebra axioms (+ involution)");
  add_model_options(dialg_cmd, dia_mo);
  add_mode_options(dialg_cmd, dia_mo);

  ModelOptions leib_mo;
  auto* leibcheck_cmd = check_cmd->add_subcommand("leibniz", "right Leibniz law of the derived bracket");
  add_model_options(leibcheck_cmd, leib_mo);
  add_mode_options(leibcheck_cmd, leib_mo);

  // derive
  auto* derive_cmd = app.add_subcommand("derive", "materialize derived products");
  derive_cmd->require_subcommand(1);
  std::string derive_from, derive_out;
  auto* jtd_cmd = derive_cmd->add_subcommand("jtd", "Jordan pair of a trisystem");
  jtd_cmd->add_option("--from", derive_from, "trisystem JSON")->required();
  jtd_cmd->add_option("--out", derive_out, "output JSON path");
  auto* lts_cmd = derive_cmd->add_subcommand("leibts", "Leibniz bracket of a trisystem");
  lts_cmd->add_option("--from", derive_from, "trisystem JSON")->required();
  lts_cmd->add_option("--out", derive_out, "output JSON path");

  // embed
  ModelOptions emb_mo;
  std::string emb_kind = "first", emb_out;
  auto* embed_cmd = app.add_subcommand("embed", "standard embedding of a trisystem");
  embed_cmd->add_option("--kind", emb_kind, "first|second")->default_val("first");
  embed_cmd->add_option("--out", emb_out, "embedding JSON path");
  add_model_options(embed_cmd, emb_mo);
  add_mode_options(embed_cmd, emb_mo);

  // ann
  ModelOptions ann_mo;
  auto* ann_cmd = app.add_subcommand("ann", "annihilator subspace of a trisystem");
  ann_cmd->add_option("--via", ann_mo.via, "construction kind: first|second")->default_val("first");
  add_model_options(ann_cmd, ann_mo);
  add_mode_options(ann_cmd, ann_mo);

  // leibniz
  ModelOptions lz_mo;
  std::string lz_subspace;
  auto* leibniz_cmd = app.add_subcommand("leibniz", "derived Leibniz algebra of a dialgebra");
  leibniz_cmd->add_option("--subspace", lz_subspace,
                          "comma-separated basis (e.g. E12,E21,E12+E22 or B1,B2,B3)");
  add_model_options(leibniz_cmd, lz_mo);
  add_mode_options(leibniz_cmd, lz_mo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (kp_cmd->parsed()) return run_kp(kp_input, kp_arity, kp_fmt, kp_golden);

    if (variety_cmd->parsed()) {
      ModelOptions& mo = var_mo;
      AxiomSet set = axiom_set_from_name(var_set);
      if (set == AxiomSet::Dialgebra || set == AxiomSet::RightLeibniz) {
        auto dia = make_dialgebra(mo);
        CheckReport r = set == AxiomSet::Dialgebra ? check_dialgebra_axioms(*dia)
                                                   : check_right_leibniz(dminus_bracket(*dia));
        return report_result(r, mo, var_set);
      }
      InstanceBundle b = make_trisystem(mo);
      std::size_t degree = 5;
      for (const auto& c : axiom_set(set)) degree = std::max(degree, c.degree());
      auto t0 = std::chrono::steady_clock::now();
      auto chains = check_variety_chains(*b.tri, set, make_mode(mo, b, degree));
      double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      CheckReport total;
      for (const auto& [name, r] : chains) total.merge(r);
      if (mo.format == "json") {
        json j;
        j["set"] = axiom_set_name(set);
        json arr = json::array();
        for (const auto& [name, r] : chains) {
          json c;
          c["name"] = name;
          c["status"] = r.passed ? "pass" : "fail";
          json ws = json::array();
          for (const auto& w : r.failures) ws.push_back(w.detail);
          c["witnesses"] = std::move(ws);
          arr.push_back(std::move(c));
        }
        j["chains"] = std::move(arr);
        j["evaluations"] = total.evaluations;
        j["elapsed"] = elapsed;
        std::cout << j.dump(1) << "\n";
        return total.passed ? kExitPass : kExitFalsifier;
      }
      return report_result(total, mo, var_set + " on " + mo.model);
    }

    if (theorem_cmd->parsed()) {
      ModelOptions& mo = thm_mo;
      AxiomSet set;
      if (thm_name == "asstoass") {
        mo.via = "first";  // the construction this theorem is about
        set = AxiomSet::ATT1;
      } else if (thm_name == "att2fromdialgebra") {
        mo.via = "second";
        set = AxiomSet::ATT2;
      } else if (thm_name == "asstojordan") {
        set = AxiomSet::JTD;
      } else if (thm_name == "asstoleibniz") {
        set = AxiomSet::LeibTS;
      } else {
        throw Error("unknown theorem '" + thm_name + "'");
      }
      InstanceBundle b = make_trisystem(mo);
      CheckReport r = check_variety(*b.tri, set, make_mode(mo, b, 5));
      return report_result(r, mo, thm_name + " (" + mo.via + " kind, " + mo.model + ")");
    }

    if (dialg_cmd->parsed()) {
      auto dia = make_dialgebra(dia_mo);
      CheckReport r = check_dialgebra_axioms(*dia);
      if (dia->has_involution()) r.merge(check_involution(*dia));
      return report_result(r, dia_mo, "dialgebra axioms (" + dia_mo.model + ")");
    }

    if (leibcheck_cmd->parsed()) {
      auto dia = make_dialgebra(leib_mo);
      CheckReport r = check_right_leibniz(dminus_bracket(*dia));
      return report_result(r, leib_mo, "right Leibniz (" + leib_mo.model + ")");
    }

    if (jtd_cmd->parsed() || lts_cmd->parsed()) {
      DenseTrisystem T = trisystem_from_json(load_json_file(derive_from));
      json j;
      j["dim"] = T.dim();
      j["scalar"] = field_to_json(T.field());
      const std::size_t n = T.dim();
      if (jtd_cmd->parsed()) {
        JtdProducts jp(T);
        for (int w = 1; w <= 2; ++w) {
          json t = json::array();
          for (std::size_t a = 0; a < n; ++a) {
            json plane = json::array();
            for (std::size_t bq = 0; bq < n; ++bq) {
              json row = json::array();
              for (std::size_t c = 0; c < n; ++c) {
                json cell = json::array();
                auto dense = jp.j_basis(w, a, bq, c).dense(n, T.field());
                for (const auto& s : dense)
                  cell.push_back(T.field().kind == FieldSpec::Kind::GFp ? json(s.gf_value())
                                                                        : json(s.str()));
                row.push_back(std::move(cell));
              }
              plane.push_back(std::move(row));
            }
            t.push_back(std::move(plane));
          }
          j["j" + std::to_string(w)] = std::move(t);
        }
      } else {
        LeibtsBracket lb(T);
        json t = json::array();
        for (std::size_t a = 0; a < n; ++a) {
          json plane = json::array();
          for (std::size_t bq = 0; bq < n; ++bq) {
            json row = json::array();
            for (std::size_t c = 0; c < n; ++c) {
              json cell = json::array();
              auto dense = lb.lb_basis(a, bq, c).dense(n, T.field());
              for (const auto& s : dense)
                cell.push_back(T.field().kind == FieldSpec::Kind::GFp ? json(s.gf_value())
                                                                      : json(s.str()));
              row.push_back(std::move(cell));
            }
            plane.push_back(std::move(row));
          }
          t.push_back(std::move(plane));
        }
        j["lb"] = std::move(t);
      }
      if (derive_out.empty())
        std::cout << j.dump(1) << "\n";
      else
        save_json_file(derive_out, j);
      return kExitPass;
    }

    if (embed_cmd->parsed()) {
      ModelOptions& mo = emb_mo;
      mo.via = emb_kind;
      InstanceBundle b = make_trisystem(mo);
      EmbeddingAlgebra emb = emb_kind == "second" ? build_U2(*b.tri) : build_U(*b.tri);
      CheckReport axioms;
      if (emb.construction.passed) {
        axioms = check_dialgebra_axioms(*emb.dia);
        if (emb_kind == "second") axioms.merge(check_involution(*emb.dia));
      } else {
        axioms.fail("construction", "skipped: construction did not produce an algebra");
      }
      json j = embedding_to_json(emb);
      j["dialgebra_axioms"] = report_to_json(axioms);
      if (emb_out.empty()) {
        std::cout << "embedding (" << emb_kind << " kind): dim " << emb.dia->dim() << "\n";
        std::cout << "construction: " << emb.construction.summary() << "\n";
        for (const auto& w : emb.construction.failures)
          std::cout << "  witness [" << w.chain << "] " << w.detail << "\n";
        std::cout << "dialgebra axioms: " << axioms.summary() << "\n";
        std::cout << "recovery: " << emb.recovery.summary() << "\n";
        for (const auto& w : emb.recovery.failures)
          std::cout << "  witness [" << w.chain << "] " << w.detail << "\n";
      } else {
        save_json_file(emb_out, j);
        std::cout << "wrote " << emb_out << "\n";
      }
      bool ok = emb.construction.passed && emb.recovery.passed && axioms.passed;
      return ok ? kExitPass : kExitFalsifier;
    }

    if (ann_cmd->parsed()) {
      InstanceBundle b = make_trisystem(ann_mo);
      SpanBasis ann = ann_subspace(*b.tri);
      json j;
      j["dim"] = ann.dim();
      json rows = json::array();
      for (const auto& row : ann.rows) {
        json r = json::array();
        for (const auto& s : row)
          r.push_back(b.tri->field().kind == FieldSpec::Kind::GFp ? json(s.gf_value())
                                                                  : json(s.str()));
        rows.push_back(std::move(r));
      }
      j["basis"] = std::move(rows);
      std::cout << j.dump(1) << "\n";
      return kExitPass;
    }

    if (leibniz_cmd->parsed()) return run_leibniz(lz_mo, lz_subspace);
  } catch (const DslError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalsifier;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
