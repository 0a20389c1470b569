#include <doctest.h>

#include <sstream>

#include "hc/oracle.hpp"
#include "hc/tables.hpp"

using namespace hc;

namespace {

FiniteGraph graph_of(int n, const std::vector<std::pair<int, int>>& edges) {
  FiniteGraph g;
  for (int i = 0; i < n; ++i) g.names.push_back(std::to_string(i));
  g.adj.resize(n);
  g.labels.push_back("e");
  for (auto [u, v] : edges) g.add_edge(u, v, 0);
  return g;
}

FiniteGraph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});        // outer cycle
    e.push_back({i, i + 5});              // spokes
    e.push_back({i + 5, (i + 2) % 5 + 5});  // pentagram
  }
  return graph_of(10, e);
}

FiniteGraph cube() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
  return graph_of(8, e);
}

FiniteGraph circulant(int n, const std::vector<int>& steps) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int s : steps) e.push_back({v, (v + s) % n});
  return graph_of(n, e);
}

std::string result_text(const SearchResult& r) {
  std::ostringstream os;
  os << static_cast<int>(r.outcome);
  for (int v : r.seq) os << ' ' << v;
  return os.str();
}

}  // namespace

TEST_CASE("oracle: complete graph has a 4-cycle") {
  FiniteGraph k4 = graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  SearchResult r = hamilton_cycle(k4);
  REQUIRE(r.found());
  CHECK(r.seq.size() == 4);
  CHECK(validate_cycle(k4, r.seq));
}

TEST_CASE("oracle: petersen graph has no cycle but a path") {
  FiniteGraph p = petersen();
  SearchResult r = hamilton_cycle(p);
  CHECK(r.outcome == SearchOutcome::None);
  SearchResult q = hamilton_path(p);
  REQUIRE(q.found());
  CHECK(validate_path(p, q.seq));
}

TEST_CASE("oracle: cube cycle and circulants") {
  SearchResult r = hamilton_cycle(cube());
  REQUIRE(r.found());
  CHECK(validate_cycle(cube(), r.seq));
  for (int n : {5, 8, 11}) {
    FiniteGraph c = circulant(n, {1, 2});
    SearchResult rc = hamilton_cycle(c);
    REQUIRE(rc.found());
    CHECK(validate_cycle(c, rc.seq));
  }
}

TEST_CASE("oracle: path graph and star") {
  FiniteGraph p5 = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  SearchResult r = hamilton_path(p5);
  REQUIRE(r.found());
  CHECK(validate_path(p5, r.seq));
  FiniteGraph star = graph_of(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(hamilton_path(star).outcome == SearchOutcome::None);
}

TEST_CASE("oracle: finite dihedral groups always have a path") {
  for (int order : {6, 8, 10, 12}) {
    CayleyTable t = dihedral_table(order);
    int n = order / 2;
    // a few generating sets: rotation+reflection and two reflections
    std::vector<std::vector<int>> gensets = {{1, n}, {n, n + 1}, {1, n, n + 2}};
    for (const auto& gens : gensets) {
      GroupHandle G = make_finite(t, gens);
      FiniteGraph g = finite_cayley_graph(G);
      // skip disconnected generating sets
      SearchResult r = hamilton_path(g);
      if (r.found()) CHECK(validate_path(g, r.seq));
    }
  }
}

TEST_CASE("oracle: determinism") {
  FiniteGraph p = petersen();
  CHECK(result_text(hamilton_path(p)) == result_text(hamilton_path(p)));
  FiniteGraph c = cube();
  CHECK(result_text(hamilton_cycle(c)) == result_text(hamilton_cycle(c)));
}

TEST_CASE("oracle: budget exhaustion is distinguished from refutation") {
  SearchBudget tiny;
  tiny.node_limit = 3;
  SearchResult r = hamilton_cycle(petersen(), tiny);
  CHECK(r.outcome == SearchOutcome::BudgetExceeded);
}

TEST_CASE("oracle: vertex-transitive graphs up to 12 vertices admit paths") {
  // circulants and small Cayley graphs; consistency check only
  for (int n = 3; n <= 12; ++n) {
    FiniteGraph c = circulant(n, {1});
    SearchResult r = hamilton_path(c);
    CHECK(r.found());
  }
  FiniteGraph q8 = finite_cayley_graph(make_finite(quaternion_table(), {2, 4}));
  CHECK(hamilton_path(q8).found());
}

TEST_CASE("oracle: generating set search") {
  GensetSearchResult z4 = genset_search(cyclic_table(4), 2, Require::Cycle);
  REQUIRE(z4.outcome == SearchOutcome::Found);
  CHECK(z4.pairs == 1);

  GensetSearchResult v4 = genset_search(named_table("Z2xZ2"), 2, Require::Cycle);
  REQUIRE(v4.outcome == SearchOutcome::Found);
  CHECK(v4.pairs == 2);

  GensetSearchResult z2_4 = genset_search(named_table("Z2^4"), 4, Require::Cycle);
  REQUIRE(z2_4.outcome == SearchOutcome::Found);
  CHECK(z2_4.pairs == 4);
}
