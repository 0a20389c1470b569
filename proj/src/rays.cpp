#include "hc/rays.hpp"

namespace hc {

int EventuallyPeriodicRay::letter(int64_t n) const {
  if (n < static_cast<int64_t>(prefix.size())) return prefix[n];
  if (period.empty()) fail(Err::BadParameters, "ray with empty period");
  return period[(n - prefix.size()) % period.size()];
}

std::vector<Element> ray_vertices_after(const GroupHandle& G, const Element& base,
                                        const EventuallyPeriodicRay& r, int steps) {
  if (steps < 0) fail(Err::BadParameters, "steps must be >= 0");
  std::vector<Element> out;
  out.reserve(steps);
  Element cur = base;
  for (int i = 0; i < steps; ++i) {
    cur = G.mul(cur, G.gen(r.letter(i)).elt);
    out.push_back(cur);
  }
  return out;
}

std::vector<Element> unroll_ray(const GroupHandle& G, const Element& base,
                                const EventuallyPeriodicRay& r, int steps) {
  if (steps <= 0) return {};
  std::vector<Element> out{base};
  std::vector<Element> rest = ray_vertices_after(G, base, r, steps - 1);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<Element> unroll(const GroupHandle& G, const DoubleRay& r, int steps) {
  std::vector<Element> neg = ray_vertices_after(G, r.base, r.neg, steps);
  std::vector<Element> out(neg.rbegin(), neg.rend());
  out.push_back(r.base);
  std::vector<Element> pos = ray_vertices_after(G, r.base, r.pos, steps);
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

namespace {

GenWord interleave_before(const GenWord& w, int s) {
  GenWord out;
  out.reserve(2 * w.size());
  for (int x : w) {
    out.push_back(s);
    out.push_back(x);
  }
  return out;
}

}  // namespace

DoubleRay concatenate_lift(const DoubleRay& r, int interleave, const GroupHandle& G) {
  G.gen(interleave);  // label check
  DoubleRay out;
  out.base = r.base;
  out.pos.prefix = interleave_before(r.pos.prefix, interleave);
  out.pos.period = interleave_before(r.pos.period, interleave);
  out.neg.prefix = interleave_before(r.neg.prefix, interleave);
  out.neg.period = interleave_before(r.neg.period, interleave);
  return out;
}

DoubleRay expand_letters(const DoubleRay& r, const std::vector<std::pair<int, int>>& expand,
                         const std::vector<int>& inner_inverse,
                         const std::vector<int>& outer_inverse) {
  auto pos_block = [&](int x, GenWord& dst) {
    dst.push_back(expand[x].first);
    dst.push_back(expand[x].second);
  };
  // A negative-side letter y walks its stream edge backwards. Expanding with
  // the reversed inverse of expand(y^-1) walks the same two-letter path
  // through the same midpoint, just in the other direction.
  auto neg_block = [&](int y, GenWord& dst) {
    auto [u1, u2] = expand[inner_inverse[y]];
    dst.push_back(outer_inverse[u2]);
    dst.push_back(outer_inverse[u1]);
  };
  DoubleRay out;
  out.base = r.base;
  for (int x : r.pos.prefix) pos_block(x, out.pos.prefix);
  for (int x : r.pos.period) pos_block(x, out.pos.period);
  for (int y : r.neg.prefix) neg_block(y, out.neg.prefix);
  for (int y : r.neg.period) neg_block(y, out.neg.period);
  return out;
}

DoubleRay translate(const GroupHandle& G, const DoubleRay& r, const Element& g) {
  DoubleRay out = r;
  out.base = G.mul(g, r.base);
  return out;
}

}  // namespace hc
