#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hecketree/cli.hpp"

namespace hecketree::cli {

namespace {

using nlohmann::json;

Integer to_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument(where + ": expected an integer");
}

IntegerMatrix to_matrix(const json& m, const std::string& where, std::size_t cols_if_empty) {
  if (!m.is_array()) throw std::invalid_argument(where + " is not an array");
  std::vector<std::vector<Integer>> rows;
  for (const json& row : m) {
    if (!row.is_array()) throw std::invalid_argument(where + " has a non-array row");
    std::vector<Integer> r;
    for (const json& v : row) r.push_back(to_integer(v, where));
    rows.push_back(std::move(r));
  }
  return IntegerMatrix::from_rows(rows, cols_if_empty);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("Bratteli JSON does not parse: ") + e.what());
  }
}

BratteliDiagram diagram_from(const json& doc) {
  if (!doc.is_object() || !doc.contains("levels") || !doc.contains("maps"))
    throw std::invalid_argument("Bratteli JSON needs \"levels\" and \"maps\"");
  if (!doc["levels"].is_array() || !doc["maps"].is_array())
    throw std::invalid_argument("\"levels\" and \"maps\" must be arrays");
  BratteliDiagram d;
  for (std::size_t k = 0; k < doc["levels"].size(); ++k) {
    const json& level = doc["levels"][k];
    if (!level.is_array()) throw std::invalid_argument("level " + std::to_string(k) + " is not an array");
    std::vector<Integer> ns;
    for (const json& n : level) ns.push_back(to_integer(n, "level " + std::to_string(k)));
    d.levels.push_back(std::move(ns));
  }
  for (std::size_t k = 0; k < doc["maps"].size(); ++k) {
    const std::size_t cols = k < d.levels.size() ? d.levels[k].size() : 0;
    d.maps.push_back(to_matrix(doc["maps"][k], "map " + std::to_string(k), cols));
  }
  d.validate();
  return d;
}

}  // namespace

BratteliDiagram parse_bratteli_json(std::string_view text) {
  return diagram_from(parse_document(text));
}

KtheoryInput parse_ktheory_json(std::string_view text) {
  const json doc = parse_document(text);
  KtheoryInput in{diagram_from(doc), std::nullopt, std::nullopt};
  if (doc.contains("alpha")) in.alpha = to_matrix(doc["alpha"], "alpha", 0);
  if (doc.contains("inclusion")) in.inclusion = to_matrix(doc["inclusion"], "inclusion", 0);
  if (in.inclusion && !in.alpha)
    throw std::invalid_argument("\"inclusion\" given without \"alpha\"");
  return in;
}

std::string bratteli_to_json(const BratteliDiagram& d) {
  json doc = json::object();
  doc["levels"] = json::array();
  for (const auto& level : d.levels) {
    json l = json::array();
    for (const Integer& n : level) l.push_back(n.get_si());
    doc["levels"].push_back(l);
  }
  doc["maps"] = json::array();
  for (const auto& m : d.maps) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
      rows.push_back(row);
    }
    doc["maps"].push_back(rows);
  }
  return doc.dump();
}

}  // namespace hecketree::cli
