#include "liewild/algebra_json.hpp"

#include <map>

namespace liewild {

using nlohmann::json;

AlgebraDocument parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_algebra_doc(doc);
}

AlgebraDocument parse_algebra_doc(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
    const std::string name = doc.value("name", "");
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
      throw ParseError("missing or invalid 'dim'");
    const std::size_t dim = doc["dim"].get<std::size_t>();
    if (!doc.contains("basis") || !doc["basis"].is_array())
      throw ParseError("missing 'basis' array");

    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
    for (const auto& b : doc["basis"]) {
      if (!b.is_string()) throw ParseError("basis labels must be strings");
      const std::string label = b.get<std::string>();
      if (index.count(label)) throw ParseError("duplicate basis label '" + label + "'");
      index[label] = labels.size();
      labels.push_back(label);
    }
    if (labels.size() != dim) throw ParseError("'dim' does not match the basis size");

    auto lookup = [&](const json& j) -> std::size_t {
      if (!j.is_string()) throw ParseError("bracket labels must be strings");
      auto it = index.find(j.get<std::string>());
      if (it == index.end())
        throw ParseError("undeclared basis label '" + j.get<std::string>() + "'");
      return it->second;
    };

    StructureConstants sc(dim, labels);
    for (const auto& br : doc.value("brackets", json::array())) {
      const std::size_t i = lookup(br.at("left"));
      const std::size_t j = lookup(br.at("right"));
      StructureConstants::Terms terms;
      for (const auto& term : br.value("result", json::array())) {
        const std::size_t k = lookup(term.at("basis"));
        if (!term.at("coeff").is_string())
          throw ParseError("coefficients must be \"p/q\" strings");
        terms.emplace_back(k, rat_parse(term.at("coeff").get<std::string>()));
      }
      sc.set(i, j, std::move(terms));
    }
    try {
      return AlgebraDocument{name, LieAlgebra::validate(std::move(sc))};
    } catch (const JacobiViolation& e) {
      throw ValidationError(e.what());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra document: ") + e.what());
  }
}

json to_document(const LieAlgebra& l, const std::string& name) {
  json doc;
  doc["name"] = name;
  doc["dim"] = l.dim();
  doc["basis"] = json::array();
  for (std::size_t i = 0; i < l.dim(); ++i) doc["basis"].push_back(l.name_of(i));
  doc["brackets"] = json::array();
  for (const auto& [key, terms] : l.sc().table) {
    json entry;
    entry["left"] = l.name_of(key.first);
    entry["right"] = l.name_of(key.second);
    entry["result"] = json::array();
    for (const auto& [k, c] : terms)
      entry["result"].push_back({{"basis", l.name_of(k)}, {"coeff", rat_str(c)}});
    doc["brackets"].push_back(entry);
  }
  return doc;
}

}  // namespace liewild
