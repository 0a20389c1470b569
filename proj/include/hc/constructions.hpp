#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hc/oracle.hpp"
#include "hc/rays.hpp"
#include "hc/verify.hpp"

namespace hc {

// Route record emitted alongside every construction.
struct Certificate {
  std::string theorem_id;
  std::string route;
  std::vector<std::string> hypotheses;
  int symbol_count = 0;
  int pair_count = 0;
  std::vector<int> verified_radii;
  std::vector<std::string> notes;

  std::string to_text() const;
};

struct RayResult {
  DoubleRay ray;
  Certificate cert;
};

struct CircleResult {
  CircleDescription circle;
  Certificate cert;
};

using ConstructionObject = std::variant<DoubleRay, CircleDescription, HamiltonCover>;

struct CoverResult {
  ConstructionObject object;
  Certificate cert;
};

// --- line groups -------------------------------------------------------------

// Hamilton double ray of any Cayley graph of Z (recursive zig-zag over the
// index of the subgroup spanned by the remaining generators).
RayResult double_ray_Z(const GroupHandle& Z);

// Hamilton circle of a Cayley graph of Z with at least two generator pairs:
// a boustrophedon ray over all but the top slab level plus a shifted line.
CircleResult circle_Z(const GroupHandle& Z);

// --- infinite dihedral -------------------------------------------------------

RayResult double_ray_Dinf(const GroupHandle& D);
CircleResult circle_Dinf(const GroupHandle& D);

// --- index-2 lifting ---------------------------------------------------------

// The graph of H on the generating set gS = {g s : s in S}, symmetrized, with
// each inner generator carrying its two-letter expansion into G's alphabet.
struct GsContext {
  GroupHandle inner;                          // Z-model of H (Integers family)
  std::vector<std::pair<int, int>> expansion; // inner gen -> two outer letters
  std::vector<int> inner_inv;                 // inner gen -> inner inverse
  std::vector<int> outer_inv;                 // outer gen -> outer inverse
  int g_index = 0;                            // the fixed g in S
  std::function<Element(const Element&)> embed;  // inner element -> G element
};

// Builds the gS context for an index-2 subgroup H (with S cap H empty) whose
// intersection pattern admits a Z model: d,Z <= Z, rotations of Dinf, or the
// <t>-line of an HNN family.
GsContext make_gs_context(const GroupHandle& G, const SubgroupSpec& H);

RayResult lift_index2_ray(const GroupHandle& G, const SubgroupSpec& H, const GsContext& ctx,
                          const DoubleRay& inner);
CircleResult lift_index2_circle(const GroupHandle& G, const SubgroupSpec& H, const GsContext& ctx,
                                const CircleDescription& inner);

// convenience: build the inner object internally
RayResult lift_index2_auto_ray(const GroupHandle& G, const SubgroupSpec& H);
CircleResult lift_index2_auto_circle(const GroupHandle& G, const SubgroupSpec& H);

// --- cylinders ---------------------------------------------------------------

// A finite window of a two-ended cylinder: consecutive finite blocks, a
// Hamilton cycle (or K2) per block, perfect matchings between neighbors, and
// a translation rule making the window periodic.
struct CylinderInput {
  std::vector<std::vector<Element>> blocks;
  std::vector<std::vector<int>> cycles;     // per block: cyclic order of block indices
  std::vector<std::vector<int>> matching;   // matching[m][j]: partner slot in block m+1
  int locality = 2;
  int base_block = 0;   // block index holding the circle base (middle of window)
  int period_hint = 1;  // structural repeat of the blocks, in block counts
};

CircleResult cylinder_circle(const GroupHandle& G, const CylinderInput& c);

// --- splittings over Z_p -----------------------------------------------------

CircleResult circle_split_Zp(const GroupHandle& G);
CircleResult circle_split_Z2(const GroupHandle& G);

// --- kappa = 2 presentations -------------------------------------------------

// case 1: <a,b,c | a2,b2,c2,(ab)2,(abc)^m>; case 2: ... (ac)^m
GroupHandle rapaport_group(int case_no, int m);

struct RapaportResult {
  GroupHandle group;
  CircleResult circle;
};
RapaportResult rapaport_k2_circle(int case_no, int m);

// --- added generators ----------------------------------------------------------

struct TwistVector {
  std::vector<int> signs;  // per quotient-cycle letter: a x = x a^sign
};

struct AddGenResult {
  GroupHandle extended;  // S cup {a^pm}
  int a_index = 0;
  CircleDescription circle;
  TwistVector twists;
  Certificate cert;
};

AddGenResult add_generator_circle(const GroupHandle& G, const Element& a);

// --- factor group lifting ------------------------------------------------------

struct FactorLiftResult {
  std::variant<FiniteCycle, DoubleRay> object;
  Element product;  // x1 ... xn
  Certificate cert;
};

FactorLiftResult factor_group_lift(const GroupHandle& G, const SubgroupSpec& H,
                                   const GenWord& schreier_cycle);

CoverResult hamilton_cover_from_factor(const GroupHandle& G, const SubgroupSpec& H,
                                       const Element& a, const GenWord& schreier_cycle);

// --- generating sets -----------------------------------------------------------

struct PakResult {
  GroupHandle group;  // finite table with the found generating set
  std::vector<int> gens;
  int pairs = 0;
  std::vector<int> cycle;  // oracle witness
  Certificate cert;
};

PakResult pak_genset(const CayleyTable& t, const SearchBudget& b = {});

// T = {s_i, s_i^2, s_1 s_j}; |T| = 3r-1 and the symmetric closure has 6r-2
// symbols.
struct FreeGensetResult {
  GroupHandle group;
  int symbols = 0;
  Certificate cert;
};
FreeGensetResult free_group_genset(int rank);

struct SizeReport {
  int pairs = 0;
  int symbols = 0;
  std::string branch;
  double branch_bound = 0;
  double theorem_bound = 0;  // log2(m) + 1 + 6r(6r+1)
};

struct ContextFreeResult {
  GroupHandle group;  // new generating set on G
  SizeReport report;
  std::optional<CircleResult> circle;  // virtually-Z routes construct one
  Certificate cert;
};

ContextFreeResult context_free_genset(const GroupHandle& G, const SubgroupSpec& F);

// --- product cylinders over arbitrary base graphs ------------------------------

// Window-level assembly: k disjoint copies of a base window, fiber edge (k=2)
// or fiber cycle (k>=3) per base vertex, and a base circle given as disjoint
// paths covering the base window.
struct InfCylinderInput {
  const GraphWindow* base = nullptr;
  std::vector<std::vector<int>> base_paths;
  int k = 2;
  int locality = 1;
};

struct WindowRaySet {
  std::vector<std::vector<std::pair<int, int>>> paths;  // (base vertex, copy)
  bool covers_all = false;
  bool disjoint = false;
  bool degrees_ok = false;
  std::string note;
};

WindowRaySet inf_cylinder_circle(const InfCylinderInput& in);

// Schreier-cycle helper: extracts letters for a Hamilton cycle of the coset
// graph whose product generates H, if one exists within the budget.
std::optional<GenWord> find_schreier_cycle(const GroupHandle& G, const SubgroupSpec& H,
                                           const SearchBudget& b = {});

}  // namespace hc
