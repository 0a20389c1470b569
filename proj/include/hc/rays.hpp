#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hc/group.hpp"
#include "hc/subgroup.hpp"

namespace hc {

// One-sided infinite ray: base, then prefix letters, then the period forever.
struct EventuallyPeriodicRay {
  GenWord prefix;
  GenWord period;  // nonempty

  int letter(int64_t n) const;  // n >= 0, the n-th letter of prefix.period^w
};

// [..., s_-2, s_-1] base [s_1, s_2, ...]; both sides share the base vertex.
struct DoubleRay {
  Element base;
  EventuallyPeriodicRay neg;
  EventuallyPeriodicRay pos;
};

struct FiniteCycle {
  Element base;
  GenWord word;
};

struct TwoRayCircle {
  DoubleRay r1, r2;
};

// {g . template : g over a transversal of span}; copies are enumerated
// lazily against a window.
struct RayFamily {
  DoubleRay templ;
  SubgroupSpec span;
};

using CircleDescription = std::variant<FiniteCycle, TwoRayCircle, RayFamily>;

struct HamiltonCover {
  std::vector<DoubleRay> rays;
  int order() const { return static_cast<int>(rays.size()); }
};

// First `steps` vertices of a ray from `base` (the base is the first vertex),
// or the 2*steps+1 vertices of a double ray centered on its base.
std::vector<Element> unroll_ray(const GroupHandle& G, const Element& base,
                                const EventuallyPeriodicRay& r, int steps);
std::vector<Element> unroll(const GroupHandle& G, const DoubleRay& r, int steps);

// the walk after the base: `steps` vertices, base excluded
std::vector<Element> ray_vertices_after(const GroupHandle& G, const Element& base,
                                        const EventuallyPeriodicRay& r, int steps);

// Inserts `interleave` before every letter on both sides; prefix and period
// lengths double.
DoubleRay concatenate_lift(const DoubleRay& r, int interleave, const GroupHandle& G);

// Replaces every letter by a two-letter block, orientation-aware: positive
// letters expand via `expand`, negative letters via the reversed inverse of
// their inverse letter's expansion, so the lifted object walks each inner
// edge through its canonical midpoint.
DoubleRay expand_letters(const DoubleRay& r,
                         const std::vector<std::pair<int, int>>& expand,
                         const std::vector<int>& inner_inverse,
                         const std::vector<int>& outer_inverse);

DoubleRay translate(const GroupHandle& G, const DoubleRay& r, const Element& g);

}  // namespace hc
