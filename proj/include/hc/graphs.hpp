#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hc/group.hpp"
#include "hc/subgroup.hpp"

namespace hc {

// An undirected labeled edge inside a window/graph; u < v slots, label is a
// generator index (the lex-least name of the {s, s^-1} pair for display).
struct LEdge {
  int u, v, label;
  bool operator==(const LEdge& o) const { return u == o.u && v == o.v; }
};

// Finite induced ball of a Cayley graph, radius r around the identity.
struct GraphWindow {
  GroupHandle group;
  int radius = 0;
  std::vector<Element> verts;  // BFS discovery order (shortlex-least words)
  std::vector<int> dist;
  std::vector<LEdge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge idx)
  std::unordered_map<Element, int, ElementHash> index;

  int find(const Element& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
  }
  bool boundary(int v) const { return dist[v] == radius; }
  int interior_radius(int margin) const { return radius - margin; }
};

// Plain finite graph with labeled, folded edges (Schreier / quotient graphs).
struct FiniteGraph {
  std::vector<std::string> names;
  std::vector<LEdge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<std::string> labels;  // label id -> name

  int order() const { return static_cast<int>(names.size()); }
  void add_edge(int u, int v, int label);
};

struct EdgeCut {
  enum class Kind { Shell, Label };
  Kind kind = Kind::Shell;
  int shell = 0;          // defining shell index (Shell cuts)
  std::vector<LEdge> edges;
  std::vector<int> side;  // vertex slots of the separated component
  std::string note;
};

GraphWindow cayley_window(const GroupHandle& G, int r);

// Schreier graph on cosets of H (right cosets by default so that walking a
// word multiplies on the right).
FiniteGraph schreier_graph(const GroupHandle& G, const SubgroupSpec& H, Side side = Side::Right,
                           int max_cosets = 4096);

FiniteGraph finite_cayley_graph(const GroupHandle& G);  // FiniteFam whole graph

struct ConnectivityEvidence {
  bool supported = false;
  std::vector<int> cut;                 // separating vertex set, if refuted
  std::optional<LEdge> bridge;          // a cut edge witness when one exists
  std::string note;                     // window evidence disclaimer
};

ConnectivityEvidence is_k_connected_window(const GraphWindow& w, int k);

struct CutsHint {
  bool two_ended = true;
  int label = -1;  // for label cuts: generator index of the cutting label
};

std::vector<EdgeCut> defining_cut_sequence(const GraphWindow& w, const CutsHint& hint);

std::string to_dot(const GraphWindow& w, const std::vector<LEdge>& highlight = {});
std::string window_dump(const GraphWindow& w);

// connected components of a window after deleting `removed_edges`
// (and optionally vertices); component id per vertex, -1 for removed
std::vector<int> components_without(const GraphWindow& w, const std::vector<LEdge>& removed_edges,
                                    const std::vector<int>& removed_verts = {});

}  // namespace hc
