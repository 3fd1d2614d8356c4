#include "phardy/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace phardy::io {

namespace {

Json complex_json(Complex v) { return Json::array({v.real(), v.imag()}); }

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InputError("complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw InputError(std::string("missing array \"") + key + "\"");
  }
  return j.at(key);
}

ModeIndex mode_from(const Json& j) {
  return {field<int>(j, "k"), field<int>(j, "l")};
}

}  // namespace

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const SphereRule& rule) {
  Json nodes = Json::array();
  for (const auto& x : rule.nodes) nodes.push_back(x);
  return {{"d", rule.d},
          {"exact_degree", rule.exact_degree},
          {"nodes", nodes},
          {"weights", rule.weights}};
}

Json to_json(const AlmansiTable& table) {
  Json modes = Json::array();
  for (const auto& [mode, c] : table.entries()) {
    Json coeffs = Json::array();
    for (const auto& v : c) coeffs.push_back(complex_json(v));
    modes.push_back({{"k", mode.k}, {"l", mode.l}, {"coeffs", coeffs}});
  }
  return {{"d", table.dimension()}, {"modes", modes}};
}

Json to_json(const BoundaryTable& table) {
  Json entries = Json::array();
  for (const auto& [key, v] : table.entries()) {
    entries.push_back({{"j", key.j},
                       {"k", key.mode.k},
                       {"l", key.mode.l},
                       {"v", complex_json(v)}});
  }
  return {{"d", table.dimension()}, {"entries", entries}};
}

Json to_json(const BoundaryData& data) {
  Json g = Json::array();
  for (std::size_t m = 0; m < data.g.size(); ++m) {
    Json modes = Json::array();
    for (const auto& [mode, v] : data.g[m]) {
      modes.push_back({{"k", mode.k}, {"l", mode.l}, {"v", complex_json(v)}});
    }
    g.push_back({{"m", static_cast<int>(m)}, {"modes", modes}});
  }
  return {{"d", data.d}, {"N", data.N}, {"g", g}};
}

Json to_json(const PseudoPositiveMeasure& mu) {
  Json components = Json::array();
  for (const auto& [mode, m] : mu.components) {
    Json atoms = Json::array();
    for (const auto& [r, w] : m.atoms) atoms.push_back(Json::array({r, w}));
    components.push_back({{"k", mode.k}, {"l", mode.l}, {"atoms", atoms}});
  }
  return {{"d", mu.d}, {"b", mu.b}, {"components", components}};
}

Json to_json(const NodeSet& ns) {
  Json per_mode = Json::array();
  for (const auto& [mode, nodes] : ns.per_mode) {
    per_mode.push_back({{"k", mode.k}, {"l", mode.l}, {"nodes", nodes}});
  }
  Json j = {{"b", ns.b}, {"nodes", ns.shared}};
  if (!per_mode.empty()) j["per_mode"] = per_mode;
  return j;
}

AlmansiTable almansi_from_json(const Json& j) {
  AlmansiTable table(field<int>(j, "d"));
  for (const auto& m : array_field(j, "modes")) {
    std::vector<Complex> c;
    for (const auto& v : array_field(m, "coeffs")) c.push_back(complex_from(v));
    table.set(mode_from(m), std::move(c));
  }
  return table;
}

BoundaryTable boundary_table_from_json(const Json& j) {
  BoundaryTable table(field<int>(j, "d"));
  for (const auto& e : array_field(j, "entries")) {
    table.set({field<int>(e, "j"), mode_from(e)}, complex_from(e.at("v")));
  }
  return table;
}

BoundaryData boundary_data_from_json(const Json& j) {
  BoundaryData data;
  data.d = field<int>(j, "d");
  data.N = field<int>(j, "N");
  if (data.N < 1) throw InputError("BoundaryData: N must be >= 1");
  data.g.assign(data.N, {});
  for (const auto& entry : array_field(j, "g")) {
    const int m = field<int>(entry, "m");
    if (m < 0 || m >= data.N) throw InputError("BoundaryData: m out of range");
    for (const auto& mode : array_field(entry, "modes")) {
      const ModeIndex idx = mode_from(mode);
      check_mode(data.d, idx);
      data.g[m][idx] = complex_from(mode.at("v"));
    }
  }
  return data;
}

PseudoPositiveMeasure measure_from_json(const Json& j) {
  PseudoPositiveMeasure mu;
  mu.d = field<int>(j, "d");
  mu.b = j.contains("b") ? field<double>(j, "b") : 1.0;
  auto atoms_from = [](const Json& list) {
    RadialMeasure m;
    for (const auto& a : list) {
      if (!a.is_array() || a.size() != 2) {
        throw InputError("radial atom must be [r, w]");
      }
      const double r = a[0].get<double>();
      if (!(r >= 0.0 && r < 1.0)) throw InputError("radial atom outside [0, 1)");
      m.atoms.emplace_back(r, a[1].get<double>());
    }
    return m;
  };
  if (j.contains("product")) {
    const Json& p = j.at("product");
    if (field<std::string>(p, "spherical") != "uniform") {
      throw InputError("product measure: only \"uniform\" is supported");
    }
    ProductMeasure pm{mu.d, atoms_from(array_field(p, "radial_atoms")).atoms, {}};
    RadialMeasure m = component_measure(pm, {0, 1}, SphereRule{}, false);
    if (!m.atoms.empty()) mu.components[{0, 1}] = std::move(m);
    return mu;
  }
  for (const auto& c : array_field(j, "components")) {
    const ModeIndex mode = mode_from(c);
    check_mode(mu.d, mode);
    RadialMeasure m = atoms_from(array_field(c, "atoms"));
    auto& slot = mu.components[mode];
    slot.atoms.insert(slot.atoms.end(), m.atoms.begin(), m.atoms.end());
  }
  return mu;
}

MultiPoly multipoly_from_json(const Json& j) {
  MultiPoly p(field<int>(j, "d"));
  for (const auto& t : array_field(j, "terms")) {
    p.add_term(field<std::vector<int>>(t, "alpha"), complex_from(t.at("c")));
  }
  return p;
}

NodeSet nodeset_from_json(const Json& j) {
  NodeSet ns;
  ns.b = field<double>(j, "b");
  if (j.contains("nodes")) ns.shared = field<std::vector<double>>(j, "nodes");
  if (j.contains("per_mode")) {
    for (const auto& e : array_field(j, "per_mode")) {
      ns.per_mode[mode_from(e)] = field<std::vector<double>>(e, "nodes");
    }
  }
  return ns;
}

std::vector<std::vector<double>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' ||
        std::isalpha(static_cast<unsigned char>(line[first]))) {
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw InputError(path + ":" + std::to_string(line_no) +
                         ": not a number: " + cell);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace phardy::io
