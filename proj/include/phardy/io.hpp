#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "phardy/almansi.hpp"
#include "phardy/bvp.hpp"
#include "phardy/cubature.hpp"
#include "phardy/hardy.hpp"
#include "phardy/interp.hpp"

namespace phardy::io {

using Json = nlohmann::json;

/// Malformed or unreadable input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path);
/// Writes with two-space indentation and a trailing newline. Doubles use the
/// shortest representation that reads back to the same value.
void write_json(const std::string& path, const Json& j);

/// %.17g.
std::string format_double(double v);

Json to_json(const SphereRule& rule);
Json to_json(const AlmansiTable& table);
Json to_json(const BoundaryTable& table);
Json to_json(const BoundaryData& data);
Json to_json(const PseudoPositiveMeasure& mu);

AlmansiTable almansi_from_json(const Json& j);
BoundaryTable boundary_table_from_json(const Json& j);
BoundaryData boundary_data_from_json(const Json& j);
/// Component form, or the product form with "spherical": "uniform", whose
/// only component is (0, 1).
PseudoPositiveMeasure measure_from_json(const Json& j);
/// {"d": 3, "terms": [{"alpha": [2, 0, 1], "c": [re, im]}]}
MultiPoly multipoly_from_json(const Json& j);
/// {"b": 0.5, "nodes": [...], "per_mode": [{"k", "l", "nodes"}]}
NodeSet nodeset_from_json(const Json& j);
Json to_json(const NodeSet& ns);

/// Comma-separated numeric rows; blank lines and lines starting with '#' or
/// a letter (headers) are skipped.
std::vector<std::vector<double>> read_csv(const std::string& path);

}  // namespace phardy::io
