#ifndef TRISYS_JSON_IO_HPP
#define TRISYS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "trisys/dialgebra.hpp"
#include "trisys/embed.hpp"
#include "trisys/report.hpp"
#include "trisys/trisystem.hpp"

namespace trisys {

using nlohmann::json;

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

// {dim, scalar, left, right, involution?, labels}; left[i][j] and right[i][j]
// are dense coordinate vectors (rationals as strings, GF(p) values as ints).
json dialgebra_to_json(const TableDialgebra& D);
TableDialgebra dialgebra_from_json(const json& j);

// {dim, scalar, t1, t2, t3, provenance, labels}; t[i][j][k] dense.
json trisystem_to_json(const Trisystem& T);
DenseTrisystem trisystem_from_json(const json& j);

json report_to_json(const CheckReport& r);
json embedding_to_json(const EmbeddingAlgebra& e);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace trisys

#endif
