#include "orbi/action_json.hpp"

#include <json.hpp>

#include "orbi/error.hpp"

namespace orbi {

namespace {

using nlohmann::json;

std::vector<Permutation> read_list(const json& doc, const char* key,
                                   std::size_t degree) {
  std::vector<Permutation> out;
  if (!doc.contains(key)) return out;
  const json& list = doc.at(key);
  if (!list.is_array()) {
    throw InvalidInput(std::string("action field '") + key + "' must be an array");
  }
  for (const json& entry : list) {
    if (!entry.is_array()) {
      throw InvalidInput(std::string("action field '") + key +
                         "' must hold permutation arrays");
    }
    std::vector<std::int64_t> images;
    for (const json& v : entry) {
      if (!v.is_number_integer()) {
        throw InvalidInput("permutation images must be integers");
      }
      images.push_back(v.get<std::int64_t>());
    }
    if (images.size() != degree) {
      throw InvalidInput(std::string("permutation in '") + key + "' has " +
                         std::to_string(images.size()) + " images, degree is " +
                         std::to_string(degree));
    }
    out.push_back(Permutation::from_one_based(images));
  }
  return out;
}

}  // namespace

PermutationAction parse_action_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed action JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") ||
      !doc.at("degree").is_number_integer() || doc.at("degree").get<std::int64_t>() < 1) {
    throw InvalidInput("action JSON needs a positive integer 'degree'");
  }
  PermutationAction action;
  action.degree = doc.at("degree").get<std::size_t>();
  action.a = read_list(doc, "a", action.degree);
  action.b = read_list(doc, "b", action.degree);
  action.c = read_list(doc, "c", action.degree);
  return action;
}

std::string action_to_json(const PermutationAction& action) {
  auto list = [](const std::vector<Permutation>& perms) {
    json out = json::array();
    for (const auto& p : perms) out.push_back(p.one_based());
    return out;
  };
  json doc;
  doc["degree"] = action.degree;
  doc["a"] = list(action.a);
  doc["b"] = list(action.b);
  doc["c"] = list(action.c);
  return doc.dump();
}

}  // namespace orbi
