#ifndef CIST_IO_FAMILY_JSON_HPP
#define CIST_IO_FAMILY_JSON_HPP

// Family document (JSON):
//
//   {
//     "format": "cist-family",
//     "version": 1,
//     "dim": 7,
//     "k": 3,
//     "verified": true,                 // optional
//     "trees": [
//       {
//         "edges": [[0, 2], [0, 8], ...],
//         "diameter": 15,               // optional
//         "internal_count": 44,         // optional
//         "join_history": [17]          // optional, copy-0 join vertex per lift
//       }, ...
//     ]
//   }
//
// Optional metadata is recomputed on parse; disagreement is a warning.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cist/errors.hpp"
#include "cist/family.hpp"
#include "cist/tree.hpp"

namespace cist::io {

/// Structural problem in a family document; `path()` is a JSON pointer.
class FamilyFormatError : public std::runtime_error {
public:
  FamilyFormatError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

inline nlohmann::json family_to_json(const CistFamily& f, bool with_metadata = true) {
  nlohmann::json doc;
  doc["format"] = "cist-family";
  doc["version"] = 1;
  doc["dim"] = f.dim();
  doc["k"] = f.size();
  if (with_metadata && f.status() != CistFamily::Status::unchecked)
    doc["verified"] = f.status() == CistFamily::Status::accepted;
  auto& trees = doc["trees"] = nlohmann::json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& t = f.tree(i);
    nlohmann::json entry;
    auto& edges = entry["edges"] = nlohmann::json::array();
    for (const auto& e : t.edges()) edges.push_back({e.lo, e.hi});
    if (with_metadata) {
      entry["diameter"] = t.diameter();
      entry["internal_count"] = t.internal_vertices().size();
      entry["join_history"] = f.join_history(i);
    }
    trees.push_back(std::move(entry));
  }
  return doc;
}

inline std::string render_family_json(const CistFamily& f, bool with_metadata = true) {
  return family_to_json(f, with_metadata).dump(2) + "\n";
}

struct ParsedFamily {
  CistFamily family;
  std::vector<std::string> warnings;
};

namespace detail {

inline const nlohmann::json& member(const nlohmann::json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw FamilyFormatError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw FamilyFormatError(path + "/" + key, "missing");
  return *it;
}

inline std::uint64_t unsigned_at(const nlohmann::json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw FamilyFormatError(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

} // namespace detail

/// Parses and validates a family document. The returned family is certified
/// whenever it has two or more trees.
inline ParsedFamily parse_family_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FamilyFormatError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FamilyFormatError("", "expected an object");
  if (const auto it = doc.find("format"); it != doc.end() && *it != "cist-family")
    throw FamilyFormatError("/format", "expected \"cist-family\"");
  if (const auto it = doc.find("version"); it != doc.end() && *it != 1)
    throw FamilyFormatError("/version", "unsupported version");

  const auto dim = detail::unsigned_at(detail::member(doc, "dim", ""), "/dim");
  if (dim < 1 || dim > kMaxDim) throw FamilyFormatError("/dim", "dimension out of range");
  const auto& trees_json = detail::member(doc, "trees", "");
  if (!trees_json.is_array() || trees_json.empty()) throw FamilyFormatError("/trees", "expected a non-empty array");

  std::vector<SpanningTree> trees;
  std::vector<std::vector<Vertex>> joins;
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < trees_json.size(); ++i) {
    const std::string path = "/trees/" + std::to_string(i);
    const auto& entry = trees_json[i];
    const auto& edges_json = detail::member(entry, "edges", path);
    if (!edges_json.is_array()) throw FamilyFormatError(path + "/edges", "expected an array");
    std::vector<LabelPair> edges;
    edges.reserve(edges_json.size());
    for (std::size_t j = 0; j < edges_json.size(); ++j) {
      const std::string epath = path + "/edges/" + std::to_string(j);
      const auto& e = edges_json[j];
      if (!e.is_array() || e.size() != 2) throw FamilyFormatError(epath, "expected a [u, v] pair");
      edges.emplace_back(detail::unsigned_at(e[0], epath + "/0"), detail::unsigned_at(e[1], epath + "/1"));
    }
    auto built = SpanningTree::from_edges(static_cast<int>(dim), edges);
    if (!built.ok()) throw FamilyFormatError(path, InvalidTree(built.defects).what());
    const auto& t = *built.tree;

    if (const auto it = entry.find("diameter"); it != entry.end()) {
      const auto stored = detail::unsigned_at(*it, path + "/diameter");
      if (stored != t.diameter())
        warnings.push_back(path + "/diameter: stored " + std::to_string(stored) + " but recomputed " +
                           std::to_string(t.diameter()));
    }
    if (const auto it = entry.find("internal_count"); it != entry.end()) {
      const auto stored = detail::unsigned_at(*it, path + "/internal_count");
      const auto actual = t.internal_vertices().size();
      if (stored != actual)
        warnings.push_back(path + "/internal_count: stored " + std::to_string(stored) + " but recomputed " +
                           std::to_string(actual));
    }
    std::vector<Vertex> history;
    if (const auto it = entry.find("join_history"); it != entry.end()) {
      if (!it->is_array()) throw FamilyFormatError(path + "/join_history", "expected an array");
      for (std::size_t j = 0; j < it->size(); ++j) {
        const auto v = detail::unsigned_at((*it)[j], path + "/join_history/" + std::to_string(j));
        if (v >= t.vertex_count()) throw FamilyFormatError(path + "/join_history/" + std::to_string(j), "label out of range");
        history.push_back(static_cast<Vertex>(v));
      }
    }
    trees.push_back(std::move(*built.tree));
    joins.push_back(std::move(history));
  }

  if (const auto it = doc.find("k"); it != doc.end()) {
    const auto stored = detail::unsigned_at(*it, "/k");
    if (stored != trees.size())
      warnings.push_back("/k: stored " + std::to_string(stored) + " but document has " + std::to_string(trees.size()) + " trees");
  }

  CistFamily family(std::move(trees), std::move(joins));
  if (family.size() >= 2) {
    const bool accepted = family.certify().accepted();
    if (const auto it = doc.find("verified"); it != doc.end()) {
      if (!it->is_boolean()) throw FamilyFormatError("/verified", "expected a boolean");
      if (it->get<bool>() != accepted)
        warnings.push_back(std::string("/verified: stored ") + (it->get<bool>() ? "true" : "false") +
                           " but recomputed " + (accepted ? "true" : "false"));
    }
  }
  return {std::move(family), std::move(warnings)};
}

} // namespace cist::io

#endif // CIST_IO_FAMILY_JSON_HPP
