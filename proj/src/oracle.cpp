#include "hc/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace hc {

namespace {

struct Searcher {
  const FiniteGraph& g;
  const SearchBudget& budget;
  bool cycle;
  int start = 0;
  int64_t nodes = 0;
  bool blown = false;
  std::vector<int> path;
  std::vector<char> used;
  std::vector<std::vector<std::pair<int, int>>> adj;  // label-sorted branching order
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  Searcher(const FiniteGraph& g, const SearchBudget& b, bool cycle)
      : g(g), budget(b), cycle(cycle), used(g.order(), 0), adj(g.adj) {
    for (auto& nb : adj)
      std::sort(nb.begin(), nb.end(), [&](const auto& a, const auto& b2) {
        return std::make_pair(g.edges[a.second].label, a.first) <
               std::make_pair(g.edges[b2.second].label, b2.first);
      });
  }

  bool over_budget() {
    if (++nodes > budget.node_limit) return blown = true;
    if ((nodes & 0xfff) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      if (ms > budget.time_limit_ms) return blown = true;
    }
    return false;
  }

  bool adjacent(int u, int v) const {
    for (auto [w, e] : adj[u])
      if (w == v) return true;
    return false;
  }

  // prune: every unused vertex still needs >= 2 free slots for a cycle
  // (>= 1 for a path end); cheap degree argument only
  bool feasible() const {
    for (int v = 0; v < g.order(); ++v) {
      if (used[v]) continue;
      int free = 0;
      for (auto [u, e] : adj[v])
        if (!used[u] || u == path.back() || (cycle && u == start)) ++free;
      if (free < (cycle ? 2 : 1)) return false;
    }
    return true;
  }

  bool dfs() {
    if (over_budget()) return false;
    if (static_cast<int>(path.size()) == g.order())
      return !cycle || adjacent(path.back(), start);
    if (!feasible()) return false;
    int u = path.back();
    for (auto [v, e] : adj[u]) {
      if (used[v]) continue;
      used[v] = 1;
      path.push_back(v);
      if (dfs()) return true;
      if (blown) return false;
      path.pop_back();
      used[v] = 0;
    }
    return false;
  }

  SearchResult run_from(int s) {
    start = s;
    path = {s};
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    SearchResult r;
    if (dfs()) {
      r.outcome = SearchOutcome::Found;
      r.seq = path;
    } else {
      r.outcome = blown ? SearchOutcome::BudgetExceeded : SearchOutcome::None;
    }
    r.nodes = nodes;
    return r;
  }
};

int lowest_degree_vertex(const FiniteGraph& g) {
  int best = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.adj[v].size() < g.adj[best].size()) best = v;
  return best;
}

}  // namespace

SearchResult hamilton_cycle(const FiniteGraph& g, const SearchBudget& b) {
  if (g.order() < 3) fail(Err::BadParameters, "cycles need at least 3 vertices");
  Searcher s(g, b, true);
  return s.run_from(lowest_degree_vertex(g));
}

SearchResult hamilton_path(const FiniteGraph& g, const SearchBudget& b) {
  if (g.order() < 1) fail(Err::BadParameters, "empty graph");
  if (g.order() == 1) return SearchResult{SearchOutcome::Found, {0}, 0};
  Searcher s(g, b, false);
  // deterministic: try every start in index order
  for (int v = 0; v < g.order(); ++v) {
    SearchResult r = s.run_from(v);
    if (r.outcome != SearchOutcome::None) return r;
  }
  SearchResult r;
  r.outcome = SearchOutcome::None;
  r.nodes = s.nodes;
  return r;
}

SearchResult hamilton_path_from(const FiniteGraph& g, int start, const SearchBudget& b) {
  if (g.order() == 1) return SearchResult{SearchOutcome::Found, {start}, 0};
  Searcher s(g, b, false);
  return s.run_from(start);
}

bool validate_path(const FiniteGraph& g, const std::vector<int>& seq) {
  if (static_cast<int>(seq.size()) != g.order()) return false;
  std::vector<char> seen(g.order(), 0);
  for (int v : seq) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    bool adj = false;
    for (auto [w, e] : g.adj[seq[i]])
      if (w == seq[i + 1]) adj = true;
    if (!adj) return false;
  }
  return true;
}

bool validate_cycle(const FiniteGraph& g, const std::vector<int>& seq) {
  if (!validate_path(g, seq)) return false;
  for (auto [w, e] : g.adj[seq.back()])
    if (w == seq.front()) return true;
  return false;
}

namespace {

// all inverse pairs {x, x^-1} of non-identity elements, ordered by least member
std::vector<std::pair<int, int>> inverse_pairs(const CayleyTable& t) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<char> done(t.order(), 0);
  for (int x = 1; x < t.order(); ++x) {
    if (done[x]) continue;
    done[x] = done[t.inv[x]] = 1;
    pairs.emplace_back(x, t.inv[x]);
  }
  return pairs;
}

bool generates(const CayleyTable& t, const std::vector<int>& gens) {
  std::vector<char> have(t.order(), 0);
  have[0] = 1;
  std::vector<int> q{0};
  int count = 1;
  while (!q.empty()) {
    int u = q.back();
    q.pop_back();
    for (int s : gens) {
      for (int v : {t.mul[u][s], t.mul[u][t.inv[s]]}) {
        if (!have[v]) {
          have[v] = 1;
          ++count;
          q.push_back(v);
        }
      }
    }
  }
  return count == t.order();
}

FiniteGraph cayley_of(const CayleyTable& t, const std::vector<int>& gens) {
  FiniteGraph g;
  for (int i = 0; i < t.order(); ++i) g.names.push_back("g" + std::to_string(i));
  g.adj.resize(t.order());
  for (size_t s = 0; s < gens.size(); ++s) {
    g.labels.push_back("s" + std::to_string(s));
    for (int i = 0; i < t.order(); ++i) g.add_edge(i, t.mul[i][gens[s]], static_cast<int>(s));
  }
  return g;
}

}  // namespace

GensetSearchResult genset_search(const CayleyTable& t, int max_pairs, Require require,
                                 const SearchBudget& b) {
  if (t.order() < 3) fail(Err::BadParameters, "group order must be >= 3");
  auto pairs = inverse_pairs(t);
  int np = static_cast<int>(pairs.size());
  GensetSearchResult out;
  std::vector<int> pick;
  int64_t nodes_used = 0;
  bool blown = false;

  std::function<bool(int, int)> choose = [&](int next, int remaining) -> bool {
    if (remaining == 0) {
      std::vector<int> gens;
      for (int i : pick) gens.push_back(pairs[i].first);
      if (!generates(t, gens)) return false;
      FiniteGraph g = cayley_of(t, gens);
      SearchBudget sub = b;
      sub.node_limit = b.node_limit - nodes_used;
      SearchResult r = require == Require::Cycle ? hamilton_cycle(g, sub) : hamilton_path(g, sub);
      nodes_used += r.nodes;
      if (r.outcome == SearchOutcome::BudgetExceeded) {
        blown = true;
        return true;  // stop search
      }
      if (r.found()) {
        out.outcome = SearchOutcome::Found;
        out.gens = gens;
        out.pairs = static_cast<int>(gens.size());
        out.witness = r.seq;
        return true;
      }
      return false;
    }
    for (int i = next; i <= np - remaining; ++i) {
      pick.push_back(i);
      if (choose(i + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };

  for (int k = 1; k <= std::min(max_pairs, np); ++k) {
    pick.clear();
    if (choose(0, k)) {
      if (blown) {
        out.outcome = SearchOutcome::BudgetExceeded;
        return out;
      }
      return out;
    }
  }
  out.outcome = blown ? SearchOutcome::BudgetExceeded : SearchOutcome::None;
  return out;
}

}  // namespace hc
