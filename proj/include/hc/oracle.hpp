#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hc/graphs.hpp"

namespace hc {

struct SearchBudget {
  int64_t node_limit = 50'000'000;
  int64_t time_limit_ms = 60'000;
};

enum class SearchOutcome { Found, None, BudgetExceeded };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::None;
  std::vector<int> seq;  // vertex sequence; for cycles the closing edge is implicit
  int64_t nodes = 0;

  bool found() const { return outcome == SearchOutcome::Found; }
};

// Exhaustive backtracking, deterministic branching (lowest-degree start, then
// neighbor order). Distinguishes a proven None from a blown budget.
SearchResult hamilton_cycle(const FiniteGraph& g, const SearchBudget& b = {});
SearchResult hamilton_path(const FiniteGraph& g, const SearchBudget& b = {});

// Hamilton path with a fixed first vertex.
SearchResult hamilton_path_from(const FiniteGraph& g, int start, const SearchBudget& b = {});

bool validate_cycle(const FiniteGraph& g, const std::vector<int>& seq);
bool validate_path(const FiniteGraph& g, const std::vector<int>& seq);

// Enumerates symmetric generating sets of a finite table group by increasing
// pair count; returns the first whose Cayley graph satisfies `require`.
enum class Require { Cycle, Path };

struct GensetSearchResult {
  SearchOutcome outcome = SearchOutcome::None;
  std::vector<int> gens;  // table element indices (one per inverse pair)
  int pairs = 0;
  std::vector<int> witness;  // the certified cycle/path
};

GensetSearchResult genset_search(const CayleyTable& t, int max_pairs, Require require,
                                 const SearchBudget& b = {});

}  // namespace hc
