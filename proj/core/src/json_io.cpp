#include "nflab/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace nflab {

namespace {

using nlohmann::json;

int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("JSON parse error at line " +
                     std::to_string(line_of_byte(text, e.byte)) + ": " +
                     e.what());
  }
}

}  // namespace

FunctionSet parse_function_set_json(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) throw InputError("function set document must be an object");
  if (!doc.contains("domain_size") || !doc["domain_size"].is_number_integer())
    throw InputError("missing integer field: domain_size");
  if (!doc.contains("codomain") || !doc["codomain"].is_array())
    throw InputError("missing array field: codomain");
  if (!doc.contains("functions") || !doc["functions"].is_array())
    throw InputError("missing array field: functions");

  SearchSpace space = SearchSpace::indexed(doc["domain_size"].get<int>());
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw InputError("labels must be an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw InputError("labels must be strings");
      space.labels.push_back(l.get<std::string>());
    }
  }

  CostDomain domain;
  for (const auto& v : doc["codomain"]) {
    if (!v.is_string()) throw InputError("codomain entries must be rational strings");
    domain.values.push_back(parse_rational(v.get<std::string>()));
  }
  domain.validate();

  std::vector<std::vector<int>> tables;
  if (doc["functions"].empty())
    throw InputError("functions array must be non-empty");
  for (const auto& row : doc["functions"]) {
    if (!row.is_array()) throw InputError("each function must be an array");
    std::vector<int> t;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw InputError("function entries must be cost indices");
      t.push_back(v.get<int>());
    }
    tables.push_back(std::move(t));
  }
  return make_function_set(std::move(space), std::move(domain), std::move(tables));
}

std::string function_set_to_json(const FunctionSet& set) {
  json doc;
  doc["domain_size"] = set.space.size;
  json codomain = json::array();
  for (const auto& v : set.domain.values) codomain.push_back(rational_wire(v));
  doc["codomain"] = std::move(codomain);
  json functions = json::array();
  for (const auto& t : set.tables) functions.push_back(t);
  doc["functions"] = std::move(functions);
  if (!set.space.labels.empty()) doc["labels"] = set.space.labels;
  return doc.dump(2) + "\n";
}

std::vector<Rational> parse_weights_json(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_array())
    throw InputError("weights document needs a weights array");
  std::vector<Rational> weights;
  for (const auto& w : doc["weights"]) {
    if (!w.is_string()) throw InputError("weights must be rational strings");
    weights.push_back(parse_rational(w.get<std::string>()));
  }
  if (weights.empty()) throw InputError("weights array must be non-empty");
  return weights;
}

NeighborhoodRelation parse_neighborhood_json(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string())
    throw InputError("neighborhood document needs a type string");
  const std::string type = doc["type"].get<std::string>();
  if (type == "hypercube" || type == "ring") {
    if (!doc.contains("param") || !doc["param"].is_number_integer())
      throw InputError(type + " neighborhood needs an integer param");
    const int param = doc["param"].get<int>();
    return type == "hypercube" ? make_hypercube(param) : make_ring(param);
  }
  if (type == "custom") {
    if (!doc.contains("edges") || !doc["edges"].is_array())
      throw InputError("custom neighborhood needs an edges array");
    std::vector<std::pair<int, int>> edges;
    int max_index = -1;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw InputError("edges must be [i, j] integer pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      max_index = std::max({max_index, edges.back().first, edges.back().second});
    }
    int size = max_index + 1;
    if (doc.contains("size")) {
      if (!doc["size"].is_number_integer())
        throw InputError("size must be an integer");
      size = doc["size"].get<int>();
    }
    if (size < 1) throw InputError("custom neighborhood needs a positive size");
    return make_custom(size, std::move(edges));
  }
  throw InputError("unknown neighborhood type: " + type);
}

std::string neighborhood_to_json(const NeighborhoodRelation& n) {
  json doc;
  doc["type"] = "custom";
  doc["size"] = n.size;
  doc["name"] = n.name;
  json edges = json::array();
  for (const auto& [a, b] : n.edges()) edges.push_back(json::array({a, b}));
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

}  // namespace nflab
