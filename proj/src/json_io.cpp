#include "trisys/json_io.hpp"

#include <fstream>

namespace trisys {

namespace {

json scalar_to_json(const Scalar& s) {
  if (s.field().kind == FieldSpec::Kind::GFp) return s.gf_value();
  return s.str();  // "n" or "n/d"
}

Scalar scalar_from_json(const json& j, const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::GFp) {
    if (!j.is_number_unsigned() && !j.is_number_integer())
      throw Error("GF(p) scalar must be an integer");
    long long v = j.get<long long>();
    return Scalar::of_int(f, v);
  }
  if (j.is_number_integer()) return Scalar::of_int(f, j.get<long long>());
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Scalar::rational(mpq_class(s));
  return Scalar::rational(mpq_class(s));  // gmp parses "n/d" directly
}

json vec_to_json(const SparseVec& v, std::size_t dim, const FieldSpec& f) {
  json arr = json::array();
  auto dense = v.dense(dim, f);
  for (const auto& s : dense) arr.push_back(scalar_to_json(s));
  return arr;
}

SparseVec vec_from_json(const json& j, const FieldSpec& f) {
  SparseVec v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    Scalar s = scalar_from_json(j[i], f);
    if (!s.is_zero()) v.add_term(i, s);
  }
  return v;
}

}  // namespace

json field_to_json(const FieldSpec& f) {
  json j;
  j["kind"] = f.kind == FieldSpec::Kind::Rational ? "rational" : "gfp";
  if (f.kind == FieldSpec::Kind::GFp) j["modulus"] = f.p;
  return j;
}

FieldSpec field_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "gfp") return FieldSpec::gfp(j.at("modulus").get<std::uint64_t>());
  throw Error("unknown scalar kind '" + kind + "'");
}

json dialgebra_to_json(const TableDialgebra& D) {
  const std::size_t n = D.dim();
  const FieldSpec& f = D.field();
  json j;
  j["dim"] = n;
  j["scalar"] = field_to_json(f);
  json left = json::array(), right = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json lrow = json::array(), rrow = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      lrow.push_back(vec_to_json(D.left_basis(i, k), n, f));
      rrow.push_back(vec_to_json(D.right_basis(i, k), n, f));
    }
    left.push_back(std::move(lrow));
    right.push_back(std::move(rrow));
  }
  j["left"] = std::move(left);
  j["right"] = std::move(right);
  if (D.has_involution()) {
    json inv = json::array();
    for (std::size_t r = 0; r < n; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(scalar_to_json(D.involution()->at(r, c)));
      inv.push_back(std::move(row));
    }
    j["involution"] = std::move(inv);
  }
  json labels = json::array();
  for (std::size_t i = 0; i < n; ++i) labels.push_back(D.label(i));
  j["labels"] = std::move(labels);
  return j;
}

TableDialgebra dialgebra_from_json(const json& j) {
  const std::size_t n = j.at("dim").get<std::size_t>();
  FieldSpec f = field_from_json(j.at("scalar"));
  TableDialgebra D(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      D.set_left(i, k, vec_from_json(j.at("left")[i][k], f));
      D.set_right(i, k, vec_from_json(j.at("right")[i][k], f));
    }
  if (j.contains("involution")) {
    ExactMatrix inv(n, n, f);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        inv.at(r, c) = scalar_from_json(j.at("involution")[r][c], f);
    D.set_involution(std::move(inv));
  }
  if (j.contains("labels")) {
    std::vector<std::string> labels;
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    D.set_labels(std::move(labels));
  }
  return D;
}

json trisystem_to_json(const Trisystem& T) {
  const std::size_t n = T.dim();
  const FieldSpec& f = T.field();
  json j;
  j["dim"] = n;
  j["scalar"] = field_to_json(f);
  j["provenance"] = T.provenance();
  for (int w = 1; w <= 3; ++w) {
    json t = json::array();
    for (std::size_t a = 0; a < n; ++a) {
      json plane = json::array();
      for (std::size_t b = 0; b < n; ++b) {
        json row = json::array();
        for (std::size_t c = 0; c < n; ++c)
          row.push_back(vec_to_json(T.t_basis(w, a, b, c), n, f));
        plane.push_back(std::move(row));
      }
      t.push_back(std::move(plane));
    }
    j["t" + std::to_string(w)] = std::move(t);
  }
  json labels = json::array();
  for (std::size_t i = 0; i < n; ++i) labels.push_back(T.label(i));
  j["labels"] = std::move(labels);
  return j;
}

DenseTrisystem trisystem_from_json(const json& j) {
  const std::size_t n = j.at("dim").get<std::size_t>();
  FieldSpec f = field_from_json(j.at("scalar"));
  DenseTrisystem T(n, f, j.value("provenance", "custom"));
  for (int w = 1; w <= 3; ++w) {
    const json& t = j.at("t" + std::to_string(w));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) T.set(w, a, b, c, vec_from_json(t[a][b][c], f));
  }
  if (j.contains("labels")) {
    std::vector<std::string> labels;
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    T.set_labels(std::move(labels));
  }
  return T;
}

json report_to_json(const CheckReport& r) {
  json j;
  j["status"] = r.passed ? "pass" : "fail";
  j["evaluations"] = r.evaluations;
  json fails = json::array();
  for (const auto& w : r.failures) fails.push_back({{"chain", w.chain}, {"detail", w.detail}});
  j["witnesses"] = std::move(fails);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json embedding_to_json(const EmbeddingAlgebra& e) {
  json j;
  j["kind"] = e.kind;
  json blocks = json::array();
  for (const auto& b : e.blocks)
    blocks.push_back({{"name", b.name}, {"offset", b.offset}, {"dim", b.dim}});
  j["blocks"] = std::move(blocks);
  j["dialgebra"] = dialgebra_to_json(*e.dia);
  j["construction"] = report_to_json(e.construction);
  j["recovery"] = report_to_json(e.recovery);
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace trisys
