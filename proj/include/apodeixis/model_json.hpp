#pragma once

// Model JSON codec. The canonical text layout is
//
//   { "t_count": 2, "world_sizes": [2,1],
//     "individuals": [[0,0],[1,0]],
//     "concepts": { "A": [[1],[0]], "B": [[0],[0]], "C": [[0],[0]] } }
//
// followed by a newline. Extents are ascending, individuals lexicographic,
// and unknown fields are rejected.

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "apodeixis/error.hpp"
#include "apodeixis/model.hpp"

namespace apodeixis {

namespace detail {

inline std::string json_list(const std::vector<std::uint32_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

inline std::string json_list_of_lists(const std::vector<std::vector<std::uint32_t>>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += json_list(v[i]);
  }
  return s + "]";
}

}  // namespace detail

inline std::string encode_model(const Model& model) {
  if (auto v = validate(model); !v.empty()) throw Error("cannot encode an invalid model: " + v.front());
  const Model m = normalized(model);
  std::string out = "{ \"t_count\": " + std::to_string(m.t_count) +
                    ", \"world_sizes\": " + detail::json_list(m.world_sizes) + ",\n";
  out += "  \"individuals\": " + detail::json_list_of_lists(m.individuals) + ",\n";
  out += "  \"concepts\": {";
  bool first = true;
  for (const auto& [name, extents] : m.concepts) {
    out += first ? " " : ", ";
    first = false;
    out += std::string("\"") + name + "\": " + detail::json_list_of_lists(extents);
  }
  out += first ? "} }\n" : " } }\n";
  return out;
}

/// The same model as a JSON value, for embedding in reports.
inline nlohmann::ordered_json model_to_json(const Model& model) {
  const Model m = normalized(model);
  nlohmann::ordered_json j;
  j["t_count"] = m.t_count;
  j["world_sizes"] = m.world_sizes;
  j["individuals"] = m.individuals;
  nlohmann::ordered_json concepts = nlohmann::ordered_json::object();
  for (const auto& [name, extents] : m.concepts) concepts[std::string(1, name)] = extents;
  j["concepts"] = concepts;
  return j;
}

namespace detail {

inline std::uint32_t json_u32(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw SchemaError(path, "expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > std::numeric_limits<std::uint32_t>::max()) throw SchemaError(path, "integer out of range");
  return static_cast<std::uint32_t>(v);
}

inline const nlohmann::json& json_array(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

}  // namespace detail

inline Model decode_model(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "t_count" && key != "world_sizes" && key != "individuals" && key != "concepts") {
      throw SchemaError("$." + key, "unknown field");
    }
  }
  for (const char* key : {"t_count", "world_sizes", "individuals", "concepts"}) {
    if (!doc.contains(key)) throw SchemaError(std::string("$.") + key, "missing field");
  }

  Model m;
  m.t_count = detail::json_u32(doc["t_count"], "$.t_count");
  if (m.t_count < 1) throw SchemaError("$.t_count", "must be at least 1");

  const auto& sizes = detail::json_array(doc["world_sizes"], "$.world_sizes");
  if (sizes.size() != m.t_count) throw SchemaError("$.world_sizes", "length must equal t_count");
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    const auto path = "$.world_sizes[" + std::to_string(t) + "]";
    const auto w = detail::json_u32(sizes[t], path);
    if (w == 0) throw SchemaError(path, "world size must be positive");
    m.world_sizes.push_back(w);
  }

  const auto& individuals = detail::json_array(doc["individuals"], "$.individuals");
  for (std::size_t i = 0; i < individuals.size(); ++i) {
    const auto path = "$.individuals[" + std::to_string(i) + "]";
    const auto& tuple = detail::json_array(individuals[i], path);
    if (tuple.size() != m.t_count) throw SchemaError(path, "tuple length must equal t_count");
    Individual x;
    for (std::size_t t = 0; t < tuple.size(); ++t) {
      const auto cpath = path + "[" + std::to_string(t) + "]";
      const auto e = detail::json_u32(tuple[t], cpath);
      if (e >= m.world_sizes[t]) throw SchemaError(cpath, "element outside W_" + std::to_string(t));
      x.push_back(e);
    }
    if (!m.individuals.empty()) {
      if (x == m.individuals.back()) throw SchemaError(path, "duplicate individual");
      if (x < m.individuals.back()) throw SchemaError(path, "individuals are not sorted");
    }
    m.individuals.push_back(std::move(x));
  }

  const auto& concepts = doc["concepts"];
  if (!concepts.is_object()) throw SchemaError("$.concepts", "expected an object");
  for (const auto& [name, value] : concepts.items()) {
    const auto path = "$.concepts." + name;
    if (name.size() != 1 || name[0] < 'A' || name[0] > 'Z') {
      throw SchemaError(path, "concept names are single uppercase letters");
    }
    const auto& extents = detail::json_array(value, path);
    if (extents.size() != m.t_count) throw SchemaError(path, "needs one extent per parameter");
    std::vector<Extent> family;
    for (std::size_t t = 0; t < extents.size(); ++t) {
      const auto epath = path + "[" + std::to_string(t) + "]";
      const auto& ext = detail::json_array(extents[t], epath);
      Extent out;
      for (std::size_t k = 0; k < ext.size(); ++k) {
        const auto vpath = epath + "[" + std::to_string(k) + "]";
        const auto e = detail::json_u32(ext[k], vpath);
        if (e >= m.world_sizes[t]) throw SchemaError(vpath, "element outside W_" + std::to_string(t));
        if (!out.empty() && e <= out.back()) throw SchemaError(vpath, "extent is not strictly ascending");
        out.push_back(e);
      }
      family.push_back(std::move(out));
    }
    m.concepts[name[0]] = std::move(family);
  }
  return m;
}

}  // namespace apodeixis
