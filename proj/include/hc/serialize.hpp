#pragma once

#include <string>

#include "hc/constructions.hpp"
#include "hc/group.hpp"
#include "hc/rays.hpp"

namespace hc {

// Group spec text format, one directive per line ('#' comments):
//   family integers            gens 2 -2 3 -3
//   family dinf                gens r1 f0 f2
//   family finite Z6           gens 1 5
//   family free 2              gens x1 x2 x1x2
//   family amalgam Z4 Z4 core 2 ; embed-left 0 2 ; embed-right 0 2
//                              gens l1 r1 k1
//   family hnn 3 2             gens k t
//   family presented gen: a b c ; rel: a^2, b^2, c^2, (a b)^2, (a b c)^2
//                              gens a b c
GroupHandle parse_group_spec(const std::string& text);

std::string ray_to_text(const GroupHandle& G, const DoubleRay& r);
std::string circle_to_text(const GroupHandle& G, const CircleDescription& c);
std::string cover_to_text(const GroupHandle& G, const HamiltonCover& h);

}  // namespace hc
