#include "jtl/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace jtl {

namespace {

using ordered_json = nlohmann::ordered_json;

nlohmann::json parse(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ShapeError("invalid JSON");
  return j;
}

std::vector<std::vector<Elem>> parse_table(const nlohmann::json& j,
                                           const std::string& field) {
  if (!j.contains(field) || !j[field].is_array())
    throw ShapeError("missing or non-array field '" + field + "'");
  std::vector<std::vector<Elem>> out;
  for (const auto& row : j[field]) {
    if (!row.is_array()) throw ShapeError("'" + field + "' rows must be arrays");
    std::vector<Elem> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw ShapeError("'" + field + "' entries must be integers");
      r.push_back(v.get<Elem>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

int parse_int(const nlohmann::json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw ShapeError("missing or non-integer field '" + field + "'");
  return j[field].get<int>();
}

std::string parse_str(const nlohmann::json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_string())
    throw ShapeError("missing or non-string field '" + field + "'");
  return j[field].get<std::string>();
}

ordered_json table_json(const std::vector<Elem>& flat, int rows, int cols) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < cols; ++j)
      row.push_back(flat[static_cast<std::size_t>(i) * cols + j]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::string json_kind(const std::string& text) {
  nlohmann::json j = parse(text);
  return parse_str(j, "kind");
}

RingData parse_ring_json(const std::string& text) {
  nlohmann::json j = parse(text);
  if (parse_str(j, "kind") != "ring")
    throw ShapeError("expected kind \"ring\"");
  RingData d;
  d.name = parse_str(j, "name");
  d.size = parse_int(j, "size");
  d.one = parse_int(j, "one");
  d.add = parse_table(j, "add");
  d.mul = parse_table(j, "mul");
  return d;
}

std::string ring_to_json(const FiniteRing& r) {
  ordered_json j;
  j["kind"] = "ring";
  j["name"] = r.name();
  j["size"] = r.size();
  j["one"] = r.one();
  j["add"] = table_json(r.add_table(), r.size(), r.size());
  j["mul"] = table_json(r.mul_table(), r.size(), r.size());
  return j.dump();
}

ModuleData parse_module_json(const std::string& text) {
  nlohmann::json j = parse(text);
  if (parse_str(j, "kind") != "module")
    throw ShapeError("expected kind \"module\"");
  ModuleData d;
  d.name = parse_str(j, "name");
  d.ring = parse_str(j, "ring");
  d.size = parse_int(j, "size");
  d.add = parse_table(j, "add");
  d.act = parse_table(j, "act");
  return d;
}

std::string module_to_json(const FiniteModule& m) {
  ordered_json j;
  j["kind"] = "module";
  j["name"] = m.name();
  j["ring"] = m.ring()->name();
  j["size"] = m.size();
  j["add"] = table_json(m.add_table(), m.size(), m.size());
  j["act"] = table_json(m.act_table(), m.ring()->size(), m.size());
  return j.dump();
}

std::string reject_to_json(const RejectResult& result) {
  ordered_json j;
  j["kind"] = to_string(result.kind);
  j["module"] = result.module->name();
  if (result.class_is_ring) {
    j["class"] = "ring";
  } else {
    ordered_json cls = ordered_json::array();
    for (const auto& u : result.class_used) cls.push_back(u->name());
    j["class"] = std::move(cls);
  }
  j["members"] = result.members.elements();
  if (result.kind == RejectKind::nilrej)
    j["is_submodule"] = result.is_submodule;
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ShapeError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace jtl
