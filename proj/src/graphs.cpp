#include "hc/graphs.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace hc {

void FiniteGraph::add_edge(int u, int v, int label) {
  if (u == v) return;
  int a = std::min(u, v), b = std::max(u, v);
  for (const LEdge& e : edges)
    if (e.u == a && e.v == b) return;
  adj.resize(order());
  edges.push_back(LEdge{a, b, label});
  adj[a].emplace_back(b, static_cast<int>(edges.size()) - 1);
  adj[b].emplace_back(a, static_cast<int>(edges.size()) - 1);
}

namespace {

// display label: the lex-least name of {s, s^-1}
int fold_label(const GroupHandle& G, int gi) {
  int gj = G.inverse_gen(gi);
  return G.gen(gj).name < G.gen(gi).name ? gj : gi;
}

}  // namespace

GraphWindow cayley_window(const GroupHandle& G, int r) {
  if (r < 0) fail(Err::BadParameters, "radius must be >= 0");
  GraphWindow w{G, 0, {}, {}, {}, {}, {}};
  w.radius = r;
  w.verts.push_back(G.identity());
  w.dist.push_back(0);
  w.index[G.identity()] = 0;
  std::deque<int> q{0};
  while (!q.empty()) {
    int ui = q.front();
    q.pop_front();
    if (w.dist[ui] == r) continue;
    for (int gi = 0; gi < static_cast<int>(G.gens().size()); ++gi) {
      Element v = G.mul(w.verts[ui], G.gen(gi).elt);
      if (w.index.find(v) == w.index.end()) {
        w.index[v] = static_cast<int>(w.verts.size());
        w.verts.push_back(v);
        w.dist.push_back(w.dist[ui] + 1);
        q.push_back(w.index[v]);
      }
    }
  }
  // edge set: all generator edges with both endpoints inside the ball
  w.adj.resize(w.verts.size());
  std::set<std::pair<int, int>> seen;
  for (int ui = 0; ui < static_cast<int>(w.verts.size()); ++ui) {
    for (int gi = 0; gi < static_cast<int>(G.gens().size()); ++gi) {
      Element v = G.mul(w.verts[ui], G.gen(gi).elt);
      int vi = w.find(v);
      if (vi < 0 || vi == ui) continue;
      int a = std::min(ui, vi), b = std::max(ui, vi);
      if (!seen.insert({a, b}).second) continue;
      w.edges.push_back(LEdge{a, b, fold_label(G, gi)});
      int ei = static_cast<int>(w.edges.size()) - 1;
      w.adj[a].emplace_back(b, ei);
      w.adj[b].emplace_back(a, ei);
    }
  }
  return w;
}

FiniteGraph schreier_graph(const GroupHandle& G, const SubgroupSpec& H, Side side, int max_cosets) {
  Transversal t = coset_transversal(G, H, side, max_cosets);
  FiniteGraph fg;
  for (const Element& rep : t.reps) fg.names.push_back(G.name_of(rep));
  for (const auto& g : G.gens()) fg.labels.push_back(g.name);
  fg.adj.resize(fg.order());
  for (int i = 0; i < static_cast<int>(t.reps.size()); ++i) {
    for (int gi = 0; gi < static_cast<int>(G.gens().size()); ++gi) {
      Element v = side == Side::Right ? G.mul(t.reps[i], G.gen(gi).elt)
                                      : G.mul(G.gen(gi).elt, t.reps[i]);
      int j = coset_index(G, H, t, v);
      if (j < 0) fail(Err::Undecided, "coset of neighbor not identified");
      fg.add_edge(i, j, fold_label(G, gi));
    }
  }
  return fg;
}

FiniteGraph finite_cayley_graph(const GroupHandle& G) {
  const auto& t = G.as<FiniteFam>().table;
  FiniteGraph fg;
  for (int i = 0; i < t.order(); ++i) fg.names.push_back("g" + std::to_string(i));
  for (const auto& g : G.gens()) fg.labels.push_back(g.name);
  fg.adj.resize(fg.order());
  for (int i = 0; i < t.order(); ++i)
    for (int gi = 0; gi < static_cast<int>(G.gens().size()); ++gi)
      fg.add_edge(i, t.mul[i][std::get<TableElt>(G.gen(gi).elt).idx], fold_label(G, gi));
  return fg;
}

std::vector<int> components_without(const GraphWindow& w, const std::vector<LEdge>& removed_edges,
                                    const std::vector<int>& removed_verts) {
  int n = static_cast<int>(w.verts.size());
  std::vector<int> comp(n, -2);
  for (int v : removed_verts) comp[v] = -1;
  auto removed = [&](int u, int v) {
    for (const LEdge& e : removed_edges)
      if ((e.u == std::min(u, v)) && (e.v == std::max(u, v))) return true;
    return false;
  };
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -2) continue;
    comp[s] = c;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (auto [v, ei] : w.adj[u]) {
        if (comp[v] != -2 || removed(u, v)) continue;
        comp[v] = c;
        q.push_back(v);
      }
    }
    ++c;
  }
  return comp;
}

ConnectivityEvidence is_k_connected_window(const GraphWindow& w, int k) {
  if (k != 2 && k != 3) fail(Err::BadParameters, "k must be 2 or 3");
  if (w.radius < 2) fail(Err::WindowTooSmall, "connectivity evidence needs radius >= 2");
  ConnectivityEvidence ev;
  ev.note = "window evidence only; no claim about the infinite graph";
  int n = static_cast<int>(w.verts.size());
  auto interior = [&](int v) { return w.dist[v] < w.radius; };
  auto separated = [&](const std::vector<int>& cut) -> bool {
    std::vector<int> comp = components_without(w, {}, cut);
    // two interior vertices in different components?
    std::set<int> comps;
    for (int v = 0; v < n; ++v)
      if (comp[v] >= 0 && interior(v)) comps.insert(comp[v]);
    return comps.size() >= 2;
  };
  for (int v = 0; v < n; ++v) {
    if (separated({v})) {
      ev.supported = false;
      ev.cut = {v};
      // bridge witness when a single incident edge already disconnects
      for (auto [u, ei] : w.adj[v]) {
        std::vector<int> comp = components_without(w, {w.edges[ei]});
        std::set<int> comps;
        for (int x = 0; x < n; ++x)
          if (interior(x)) comps.insert(comp[x]);
        if (comps.size() >= 2) {
          ev.bridge = w.edges[ei];
          break;
        }
      }
      return ev;
    }
  }
  if (k == 3) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (separated({a, b})) {
          ev.supported = false;
          ev.cut = {a, b};
          return ev;
        }
  }
  ev.supported = true;
  return ev;
}

namespace {

// Unit-capacity max-flow giving a minimal edge cut between a source vertex
// set and a sink vertex set inside the window.
std::vector<LEdge> min_edge_cut(const GraphWindow& w, const std::vector<char>& source,
                                const std::vector<char>& sink) {
  int n = static_cast<int>(w.verts.size());
  int m = static_cast<int>(w.edges.size());
  // residual capacity per edge and direction (u->v is dir 0 with u = e.u)
  std::vector<std::array<int, 2>> cap(m, {1, 1});
  auto bfs_augment = [&]() -> bool {
    std::vector<std::pair<int, int>> par(n, {-1, -1});  // (prev vertex, edge)
    std::deque<int> q;
    std::vector<char> vis(n, 0);
    for (int v = 0; v < n; ++v)
      if (source[v]) {
        q.push_back(v);
        vis[v] = 1;
      }
    int hit = -1;
    while (!q.empty() && hit < 0) {
      int u = q.front();
      q.pop_front();
      for (auto [v, ei] : w.adj[u]) {
        int dir = w.edges[ei].u == u ? 0 : 1;
        if (vis[v] || cap[ei][dir] == 0) continue;
        vis[v] = 1;
        par[v] = {u, ei};
        if (sink[v]) {
          hit = v;
          break;
        }
        q.push_back(v);
      }
    }
    if (hit < 0) return false;
    int v = hit;
    while (par[v].first >= 0) {
      auto [u, ei] = par[v];
      int dir = w.edges[ei].u == u ? 0 : 1;
      cap[ei][dir] -= 1;
      cap[ei][1 - dir] += 1;
      v = u;
    }
    return true;
  };
  int guard = 0;
  while (bfs_augment() && ++guard < 64) {
  }
  // cut = saturated edges leaving the residual-reachable region
  std::vector<char> reach(n, 0);
  std::deque<int> q;
  for (int v = 0; v < n; ++v)
    if (source[v]) {
      reach[v] = 1;
      q.push_back(v);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (auto [v, ei] : w.adj[u]) {
      int dir = w.edges[ei].u == u ? 0 : 1;
      if (!reach[v] && cap[ei][dir] > 0) {
        reach[v] = 1;
        q.push_back(v);
      }
    }
  }
  std::vector<LEdge> cut;
  for (int ei = 0; ei < m; ++ei) {
    const LEdge& e = w.edges[ei];
    if (reach[e.u] != reach[e.v]) cut.push_back(e);
  }
  return cut;
}

// Minimal one-sided cuts between the ball of radius i and each outer
// boundary component beyond it, one cut per side, nested over i. Sides are
// detected by deleting the whole vertex ball: word metrics with stride-only
// generating sets keep low-norm elements far out, and mere shell-edge
// removal would let the two ends touch around the ball.
std::vector<EdgeCut> shell_cuts(const GraphWindow& w) {
  int n = static_cast<int>(w.verts.size());
  std::vector<EdgeCut> cuts;
  for (int i = 2; i + 1 < w.radius; ++i) {
    std::vector<int> ball;
    for (int v = 0; v < n; ++v)
      if (w.dist[v] <= i) ball.push_back(v);
    std::vector<int> comp = components_without(w, {}, ball);
    std::set<int> outer;
    for (int v = 0; v < n; ++v)
      if (w.boundary(v) && comp[v] >= 0) outer.insert(comp[v]);
    if (outer.size() != 2) continue;  // the ends are not separated yet
    for (int oc : outer) {
      // sink: a two-shell band at the window rim, so ragged word-metric
      // fringes cannot offer spuriously cheap cuts
      std::vector<char> source(n, 0), sink(n, 0);
      for (int v = 0; v < n; ++v) {
        if (w.dist[v] <= i) source[v] = 1;
        if (comp[v] == oc && w.dist[v] >= w.radius - 1) sink[v] = 1;
      }
      std::vector<LEdge> mc = min_edge_cut(w, source, sink);
      if (mc.empty()) continue;
      EdgeCut cut;
      cut.kind = EdgeCut::Kind::Shell;
      cut.shell = i;
      cut.edges = mc;
      std::vector<int> comp2 = components_without(w, mc);
      std::set<int> side_comps;
      for (int v = 0; v < n; ++v)
        if (sink[v]) side_comps.insert(comp2[v]);
      for (int v = 0; v < n; ++v)
        if (side_comps.count(comp2[v])) cut.side.push_back(v);
      cut.note = "shell " + std::to_string(i);
      cuts.push_back(std::move(cut));
    }
  }
  return cuts;
}

// Cuts of two `label` edges around translates of the square 1[a,b,a,b], with
// a, b the two commuting involutions distinct from the cutting label.
std::vector<EdgeCut> label_cuts(const GraphWindow& w, int label) {
  const GroupHandle& G = w.group;
  std::vector<int> others;
  for (int gi = 0; gi < static_cast<int>(G.gens().size()); ++gi)
    if (gi != label && G.inverse_gen(gi) == gi) others.push_back(gi);
  if (others.size() < 2) fail(Err::HintUnsupported, "label cuts need two involutions besides the label");
  int a = others[0], b = others[1];
  std::vector<EdgeCut> cuts;
  std::set<std::set<int>> seen_squares;
  for (int v = 0; v < static_cast<int>(w.verts.size()); ++v) {
    // square v, va, vab, vb
    GenWord path{a, b, a, b};
    std::vector<int> sq{v};
    Element cur = w.verts[v];
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      cur = G.mul(cur, G.gen(path[i]).elt);
      int vi = w.find(cur);
      if (vi < 0) {
        ok = false;
        break;
      }
      sq.push_back(vi);
    }
    if (!ok) continue;
    std::set<int> key(sq.begin(), sq.end());
    if (key.size() != 4 || !seen_squares.insert(key).second) continue;
    // the label edges leaving the square
    std::vector<LEdge> lab_edges;
    bool interior_square = true;
    for (int u : sq) {
      Element nb = G.mul(w.verts[u], G.gen(label).elt);
      int ni = w.find(nb);
      if (ni < 0) {
        interior_square = false;
        break;
      }
      lab_edges.push_back(LEdge{std::min(u, ni), std::max(u, ni), fold_label(G, label)});
    }
    if (!interior_square) continue;
    std::vector<int> comp = components_without(w, lab_edges, sq);
    // group the label edges by the component of their far endpoint
    std::map<int, std::vector<LEdge>> by_comp;
    for (size_t i = 0; i < sq.size(); ++i) {
      const LEdge& e = lab_edges[i];
      int far = (e.u == sq[i]) ? e.v : e.u;
      if (std::find(sq.begin(), sq.end(), far) != sq.end()) continue;
      by_comp[comp[far]].push_back(e);
    }
    for (auto& [c, es] : by_comp) {
      bool touches_boundary = false;
      std::vector<int> side;
      for (int x = 0; x < static_cast<int>(w.verts.size()); ++x)
        if (comp[x] == c) {
          side.push_back(x);
          if (w.boundary(x)) touches_boundary = true;
        }
      if (!touches_boundary || es.size() != 2) continue;
      EdgeCut cut;
      cut.kind = EdgeCut::Kind::Label;
      cut.edges = es;
      cut.side = side;
      cut.note = "label cut at square " + G.name_of(w.verts[v]);
      cuts.push_back(std::move(cut));
    }
  }
  // keep a nested chain: order by side size, keep cuts whose sides are
  // strictly nested in the previous kept side
  std::sort(cuts.begin(), cuts.end(),
            [](const EdgeCut& x, const EdgeCut& y) { return x.side.size() > y.side.size(); });
  std::vector<EdgeCut> chain;
  for (auto& c : cuts) {
    if (chain.empty()) {
      chain.push_back(c);
      continue;
    }
    const auto& prev = chain.back().side;
    std::set<int> prevset(prev.begin(), prev.end());
    bool nested = c.side.size() < prev.size();
    for (int v : c.side)
      if (!prevset.count(v)) {
        nested = false;
        break;
      }
    if (nested) chain.push_back(c);
  }
  return chain;
}

}  // namespace

std::vector<EdgeCut> defining_cut_sequence(const GraphWindow& w, const CutsHint& hint) {
  if (w.radius < 4) fail(Err::WindowTooSmall, "defining cuts need radius >= 4");
  if (hint.two_ended) return shell_cuts(w);
  if (hint.label < 0) fail(Err::HintUnsupported, "label hint without a label");
  return label_cuts(w, hint.label);
}

std::string to_dot(const GraphWindow& w, const std::vector<LEdge>& highlight) {
  std::ostringstream os;
  os << "graph cayley_window {\n";
  for (int v = 0; v < static_cast<int>(w.verts.size()); ++v) {
    os << "  n" << v << " [label=\"" << w.group.name_of(w.verts[v]) << "\"";
    if (w.boundary(v)) os << " shape=diamond";
    os << "];\n";
  }
  auto hl = [&](const LEdge& e) {
    for (const LEdge& h : highlight)
      if (h.u == e.u && h.v == e.v) return true;
    return false;
  };
  for (const LEdge& e : w.edges) {
    os << "  n" << e.u << " -- n" << e.v << " [label=\"" << w.group.gen(e.label).name << "\"";
    if (hl(e)) os << " color=red penwidth=2";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string window_dump(const GraphWindow& w) {
  std::ostringstream os;
  os << "window radius " << w.radius << " vertices " << w.verts.size() << " edges "
     << w.edges.size() << "\n";
  for (int v = 0; v < static_cast<int>(w.verts.size()); ++v)
    os << v << " " << w.group.name_of(w.verts[v]) << " dist " << w.dist[v] << "\n";
  for (const LEdge& e : w.edges)
    os << e.u << " -- " << e.v << " " << w.group.gen(e.label).name << "\n";
  return os.str();
}

}  // namespace hc
