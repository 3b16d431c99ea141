#include "beal/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "beal/error.hpp"

namespace beal {

namespace {

std::vector<std::string> string_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

AlgebraDocument parse_algebra_document(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("table")) {
    throw InputError("algebra document needs \"elements\" and \"table\"");
  }
  AlgebraDocument doc;
  doc.elements = string_array(j.at("elements"), "elements");
  const auto& rows = j.at("table");
  if (!rows.is_array()) throw InputError("table must be an array of rows");
  for (const auto& row : rows) doc.table.push_back(string_array(row, "table row"));
  return doc;
}

Json algebra_to_json(const BEAlgebra& a) {
  Json table = Json::array();
  for (Element x = 0; x < a.size(); ++x) {
    Json row = Json::array();
    for (Element y = 0; y < a.size(); ++y) row.push_back(a.name(a.mul(x, y)));
    table.push_back(std::move(row));
  }
  return Json{{"elements", a.names()}, {"table", std::move(table)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw InputError("expected an exact number as a string (\"-0.7\" or \"-7/10\"), got " + j.dump());
}

NFunction parse_function_document(const BEAlgebra& a, const Json& j) {
  if (!j.is_object() || !j.contains("function") || !j.at("function").is_object()) {
    throw InputError("function document needs a \"function\" object");
  }
  std::vector<std::optional<Rational>> values(a.size());
  for (const auto& [label, value] : j.at("function").items()) {
    const auto idx = a.index_of(label);
    if (!idx) throw InputError("function assigns unknown element '" + label + "'");
    if (values[*idx]) throw InputError("function assigns element '" + label + "' twice");
    values[*idx] = rational_from_json(value);
  }
  std::vector<Rational> out;
  for (Element x = 0; x < a.size(); ++x) {
    if (!values[x]) throw InputError("function has no value for element '" + a.name(x) + "'");
    out.push_back(*values[x]);
  }
  return NFunction(std::move(out));
}

Json function_to_json(const BEAlgebra& a, const NFunction& f) {
  Json values = Json::object();
  for (Element x = 0; x < a.size(); ++x) values[a.name(x)] = f(x).str();
  return Json{{"function", std::move(values)}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

BEAlgebra load_algebra(const std::filesystem::path& path) {
  const auto doc = parse_algebra_document(read_json_file(path));
  return BEAlgebra::from_labels(doc.elements, doc.table);
}

NFunction load_function(const BEAlgebra& a, const std::filesystem::path& path) {
  return parse_function_document(a, read_json_file(path));
}

}  // namespace beal
