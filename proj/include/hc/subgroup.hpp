#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hc/group.hpp"

namespace hc {

enum class Tri { Yes, No, Undecided };

enum class SubKind {
  GeneratedBy,
  AmalgamCore,  // the C of an Amalgam / HNN family
  EvenWord,     // preimage of the index-2 subgroup of the Z-or-Dinf quotient
};

struct SubgroupSpec {
  SubKind kind = SubKind::GeneratedBy;
  std::vector<Element> gens;
  std::optional<int> declared_rank;
  // search radius for Presented-family membership fallback
  int search_radius = 8;

  static SubgroupSpec generated_by(std::vector<Element> g) {
    SubgroupSpec s;
    s.gens = std::move(g);
    return s;
  }
  static SubgroupSpec core() {
    SubgroupSpec s;
    s.kind = SubKind::AmalgamCore;
    return s;
  }
  static SubgroupSpec even_word() {
    SubgroupSpec s;
    s.kind = SubKind::EvenWord;
    return s;
  }
};

Tri subgroup_membership(const GroupHandle& G, const SubgroupSpec& H, const Element& g);

enum class Side { Left, Right };

struct Transversal {
  std::vector<Element> reps;  // reps[0] is the identity
  Side side = Side::Left;
};

// BFS over generator words from the identity, keeping the first (shortlex
// least) representative per coset. Throws InfiniteIndex past the cap.
Transversal coset_transversal(const GroupHandle& G, const SubgroupSpec& H, Side side = Side::Left,
                              int max_cosets = 4096);

// index of the coset of g in a transversal, -1 if not matched
int coset_index(const GroupHandle& G, const SubgroupSpec& H, const Transversal& t, const Element& g);

struct QuotientResult {
  GroupHandle quotient;
  std::function<Element(const Element&)> project;
  std::vector<int> gen_map;   // G-generator -> quotient generator index (-1 dropped)
  std::vector<int> lift_gen;  // quotient generator -> designated G-generator index
};

QuotientResult quotient(const GroupHandle& G, const SubgroupSpec& N);

SubgroupSpec index_two_subgroup(const GroupHandle& G);

// Conjugates core generators by every element of the radius-4 ball.
bool check_amalgam_core_normal(const GroupHandle& G);

// verified normality by conjugating subgroup generators with group generators
Tri check_normal(const GroupHandle& G, const SubgroupSpec& H);

struct VirtuallyFreeParams {
  int index = 0;
  int rank = 0;
};
VirtuallyFreeParams virtually_free_params(const GroupHandle& G, const SubgroupSpec& F);

// true if the element provably has infinite order in its family
bool infinite_order(const GroupHandle& G, const Element& g);

}  // namespace hc
