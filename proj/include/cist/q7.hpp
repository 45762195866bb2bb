#ifndef CIST_Q7_HPP
#define CIST_Q7_HPP

#include <algorithm>
#include <array>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cist/family.hpp"
#include "cist/io/edge_list.hpp"
#include "cist/q7_resources.hpp"
#include "cist/tree.hpp"

namespace cist {

/// The known three-tree family of Q_7: edge lists (data/q7_t*.edges,
/// compiled in) and the listed internal-vertex sets.
struct Q7Archive {
  struct Erratum {
    int tree = 0; // 1-based, 0 for family-wide findings
    std::string description;
  };

  std::array<std::string_view, 3> edge_text;
  std::array<std::vector<Vertex>, 3> inv;
  std::vector<Vertex> leaf_only; // internal in no tree
  std::vector<Erratum> errata;
};

inline Q7Archive q7_archive() {
  Q7Archive a;
  a.edge_text = {resources::q7_t1_edges, resources::q7_t2_edges, resources::q7_t3_edges};
  a.inv[0] = {0,  6,  7,  8,  15, 16, 17,  21,  23,  24,  31,  35,  38,  40,  44,  45,  51,  54,  55,  59,  63,  64,
              71, 72, 74, 77, 79, 80, 82,  85,  88,  91,  92,  97,  99,  100, 102, 110, 111, 113, 115, 122, 123, 124};
  a.inv[1] = {3,  4,  11, 12, 13, 18, 22, 28, 30, 36, 37, 41,  42,  43,  49,  53,  56,  58,  60,  61,  65,
              67, 68, 70, 75, 76, 81, 86, 87, 89, 94, 95, 98, 101, 106, 109, 114, 117, 119, 120, 127};
  a.inv[2] = {1,  2,  5,  9,  10, 14, 19, 20, 25, 26, 27, 29,  32,  33,  34,  39,  46,  47,  48,  50,  52,
              57, 62, 66, 69, 73, 78, 83, 84, 90, 93, 96, 103, 104, 105, 107, 108, 112, 118, 121, 125, 126};
  a.leaf_only = {116};
  return a;
}

struct Q7Data {
  std::vector<SpanningTree> trees;
  std::array<std::vector<Vertex>, 3> internal;
};

class TranscriptionError : public std::runtime_error {
public:
  explicit TranscriptionError(std::vector<Q7Archive::Erratum> errata)
      : std::runtime_error(describe(errata)), errata_(std::move(errata)) {}

  const std::vector<Q7Archive::Erratum>& errata() const noexcept { return errata_; }

private:
  static std::string describe(const std::vector<Q7Archive::Erratum>& errata) {
    std::string s = "Q_7 data failed validation:";
    for (const auto& e : errata) s += "\n  T_" + std::to_string(e.tree) + ": " + e.description;
    return s;
  }

  std::vector<Q7Archive::Erratum> errata_;
};

namespace detail {

inline std::string join_labels(const std::vector<Vertex>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

inline std::vector<Vertex> minus(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

} // namespace detail

/// Checks every archive invariant, appending to `archive.errata`. Returns
/// the parsed trees when all three edge lists form spanning trees.
inline std::vector<SpanningTree> validate_q7(Q7Archive& archive) {
  auto note = [&](int tree, std::string what) { archive.errata.push_back({tree, std::move(what)}); };
  std::vector<SpanningTree> trees;

  for (int i = 0; i < 3; ++i) {
    try {
      const auto doc = io::parse_edge_list(archive.edge_text[i]);
      if (doc.dim != 7) note(i + 1, "header declares dim " + std::to_string(doc.dim));
      auto built = SpanningTree::from_edges(doc.dim, doc.edges);
      for (const auto& d : built.defects) note(i + 1, d.message());
      if (!built.ok()) continue;
      const auto& t = *built.tree;
      const auto computed = t.internal_vertices();
      if (auto missing = detail::minus(archive.inv[i], computed); !missing.empty())
        note(i + 1, "listed internal but computed leaf: " + detail::join_labels(missing));
      if (auto extra = detail::minus(computed, archive.inv[i]); !extra.empty())
        note(i + 1, "computed internal but not listed: " + detail::join_labels(extra));
      trees.push_back(std::move(*built.tree));
    } catch (const ParseError& e) {
      note(i + 1, std::string("malformed edge list: ") + e.what());
    }
  }

  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      auto both = detail::minus(archive.inv[i], detail::minus(archive.inv[i], archive.inv[j]));
      if (!both.empty())
        note(0, "InV(T_" + std::to_string(i + 1) + ") and InV(T_" + std::to_string(j + 1) +
                    ") share " + detail::join_labels(both));
    }

  std::vector<Vertex> covered = archive.leaf_only;
  for (const auto& s : archive.inv) covered.insert(covered.end(), s.begin(), s.end());
  std::vector<Vertex> all(128);
  for (Vertex v = 0; v < 128; ++v) all[v] = v;
  if (auto gap = detail::minus(all, covered); !gap.empty())
    note(0, "labels in no internal set and not recorded leaf-only: " + detail::join_labels(gap));

  if (trees.size() != 3) return trees;
  for (const Vertex v : archive.leaf_only)
    for (int i = 0; i < 3; ++i)
      if (trees[i].is_internal(v)) note(i + 1, "recorded leaf-only vertex " + std::to_string(v) + " is internal");

  const CistFamily family(trees);
  if (const auto verdict = verify_criterion(family); !verdict.accepted())
    note(0, "family rejected: " + verdict.violation->describe());
  return trees;
}

/// Validated once per process; throws TranscriptionError on any erratum.
inline const Q7Data& load_q7() {
  static const Q7Data data = [] {
    auto archive = q7_archive();
    auto trees = validate_q7(archive);
    if (!archive.errata.empty()) throw TranscriptionError(archive.errata);
    Q7Data d{std::move(trees), {}};
    for (int i = 0; i < 3; ++i) d.internal[i] = d.trees[i].internal_vertices();
    return d;
  }();
  return data;
}

/// The Q_7 family, already certified.
inline CistFamily q7_family() {
  CistFamily f(load_q7().trees);
  f.certify();
  return f;
}

} // namespace cist

#endif // CIST_Q7_HPP
