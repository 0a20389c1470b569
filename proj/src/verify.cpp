#include "hc/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hc {

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "object: " << object_kind << "\n";
  os << "radius: " << radius << " margin: " << margin << "\n";
  os << "coverage: " << (coverage_exact ? "exact" : "violated " + coverage_witness) << "\n";
  os << "injectivity: " << (injective ? "pass" : "collision " + collision_witness) << "\n";
  os << "degrees: " << (degrees_ok ? "all-2" : "violation " + degree_witness) << "\n";
  for (const auto& c : crossings)
    os << "cut " << c.cut_id << ": crossings " << c.count
       << (c.tails_split ? "" : " (tails on one side)") << "\n";
  os << "tails: " << (tails_ok ? "pass" : "fail " + tail_witness) << "\n";
  os << "verdict: " << (consistent ? "ConsistentWithHamiltonCircle" : "Refuted(" + reason + ")")
     << "\n";
  return os.str();
}

namespace {

int ray_margin(const DoubleRay& r) {
  size_t m = std::max(r.pos.period.size(), r.neg.period.size());
  m = std::max({m, r.pos.prefix.size(), r.neg.prefix.size(), size_t{1}});
  return static_cast<int>(m);
}

struct Unrolled {
  std::vector<Element> line;  // neg-reversed + base + pos
  int base_at = 0;
  bool escaped = true;
  std::string err;
};

Unrolled unroll_adaptive(const GraphWindow& w, const DoubleRay& r) {
  const GroupHandle& G = w.group;
  Unrolled u;
  auto escape_steps = [&](const EventuallyPeriodicRay& ray) -> int {
    // period product must have infinite order for the tail to escape
    Element q = G.identity();
    for (int gi : ray.period) q = G.mul(q, G.gen(gi).elt);
    if (!infinite_order(G, q)) return -1;
    int L = static_cast<int>(ray.prefix.size() + ray.period.size());
    int steps = static_cast<int>(ray.prefix.size()) +
                static_cast<int>(ray.period.size()) * (4 * w.radius + 16);
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::vector<Element> v = ray_vertices_after(G, r.base, ray, steps);
      bool out = true;
      for (int i = std::max(0, steps - L); i < steps; ++i)
        if (w.find(v[i]) >= 0) out = false;
      if (out) return steps;
      steps *= 3;
    }
    return -2;
  };
  int sp = escape_steps(r.pos), sn = escape_steps(r.neg);
  if (sp == -1 || sn == -1) {
    u.escaped = false;
    u.err = "period product has finite order";
  } else if (sp == -2 || sn == -2) {
    u.escaped = false;
    u.err = "tail did not leave the window";
  }
  if (!u.escaped) {
    sp = std::max(sp, 4 * w.radius + 16);
    sn = std::max(sn, 4 * w.radius + 16);
  }
  std::vector<Element> neg = ray_vertices_after(w.group, r.base, r.neg, sn);
  u.line.assign(neg.rbegin(), neg.rend());
  u.base_at = static_cast<int>(u.line.size());
  u.line.push_back(r.base);
  std::vector<Element> pos = ray_vertices_after(w.group, r.base, r.pos, sp);
  u.line.insert(u.line.end(), pos.begin(), pos.end());
  return u;
}

struct CutCheck {
  int count = 0;
  int first_side = -1, last_side = -1;  // 1 = in cut's outer side, 0 = not
};

CutCheck crossings_of(const GraphWindow& w, const EdgeCut& cut, const std::vector<Element>& line) {
  std::set<std::pair<int, int>> cut_edges;
  for (const LEdge& e : cut.edges) cut_edges.insert({e.u, e.v});
  std::set<int> side(cut.side.begin(), cut.side.end());
  CutCheck cc;
  int prev = -1;
  for (const Element& e : line) {
    int vi = w.find(e);
    if (vi >= 0) {
      int s = side.count(vi) ? 1 : 0;
      if (cc.first_side < 0) cc.first_side = s;
      cc.last_side = s;
    }
    if (prev >= 0 && vi >= 0) {
      auto key = std::minmax(prev, vi);
      if (cut_edges.count({key.first, key.second})) ++cc.count;
    }
    prev = vi;
  }
  return cc;
}

// Tail evidence: which side of the cut each unrolled direction eventually
// stays on, read off the last window vertex of that direction. A circle has
// four ray tails; each side of every deep cut must receive exactly two.
int tail_side(const GraphWindow& w, const EdgeCut& cut, const std::vector<Element>& line,
              int from, int to, int step) {
  std::set<int> side(cut.side.begin(), cut.side.end());
  int last = -1;
  for (int i = from; i != to; i += step) {
    int vi = w.find(line[i]);
    if (vi >= 0) last = vi;
  }
  if (last < 0) return -1;
  return side.count(last) ? 1 : 0;
}

// vertices covered exactly once over a collection of unrolled lines
struct CoverageCheck {
  bool injective = true;
  std::string collision;
  bool exact = true;
  std::string missing;
  std::unordered_map<Element, int, ElementHash> count;
};

CoverageCheck coverage_of(const GraphWindow& w, const std::vector<std::vector<Element>>& lines,
                          int interior_radius) {
  CoverageCheck c;
  for (const auto& line : lines)
    for (const Element& e : line) {
      if (++c.count[e] > 1 && c.injective) {
        c.injective = false;
        c.collision = w.group.name_of(e);
      }
    }
  for (int v = 0; v < static_cast<int>(w.verts.size()); ++v) {
    if (w.dist[v] > interior_radius) continue;
    if (!c.count.count(w.verts[v])) {
      c.exact = false;
      c.missing = w.group.name_of(w.verts[v]);
      break;
    }
  }
  return c;
}

// every interior vertex meets exactly two traversed edges
bool degrees_two(const GraphWindow& w, const std::vector<std::vector<Element>>& lines,
                 int interior_radius, std::string* witness) {
  std::unordered_map<Element, int, ElementHash> deg;
  for (const auto& line : lines)
    for (size_t i = 0; i + 1 < line.size(); ++i) {
      deg[line[i]] += 1;
      deg[line[i + 1]] += 1;
    }
  for (int v = 0; v < static_cast<int>(w.verts.size()); ++v) {
    if (w.dist[v] > interior_radius) continue;
    auto it = deg.find(w.verts[v]);
    int d = it == deg.end() ? 0 : it->second;
    if (d != 2) {
      *witness = w.group.name_of(w.verts[v]) + " degree " + std::to_string(d);
      return false;
    }
  }
  return true;
}

std::vector<EdgeCut> default_two_ended_cuts(const GraphWindow& w) {
  CutsHint hint;
  hint.two_ended = true;
  return defining_cut_sequence(w, hint);
}

}  // namespace

std::vector<Element> unroll_past_window(const GraphWindow& w, const DoubleRay& r,
                                        std::string* error) {
  Unrolled u = unroll_adaptive(w, r);
  if (!u.escaped) {
    if (error) {
      *error = u.err;
      return u.line;
    }
    fail(Err::UnrollTooShort, u.err);
  }
  return u.line;
}

VerificationReport verify_double_ray(const GraphWindow& w, const DoubleRay& r, int locality) {
  VerificationReport rep;
  rep.object_kind = "double-ray";
  rep.radius = w.radius;
  // cap the margin: the unrolled line is exhaustive inside the window, so a
  // tighter interior stays sound while keeping small windows verifiable
  rep.margin = std::min(std::max(ray_margin(r), locality), std::max(1, (w.radius - 1) / 2));
  if (w.radius <= rep.margin)
    fail(Err::UnrollTooShort, "window radius too small for the ray's period");
  Unrolled u = unroll_adaptive(w, r);
  int ir = w.interior_radius(rep.margin);

  CoverageCheck cov = coverage_of(w, {u.line}, ir);
  rep.injective = cov.injective && u.escaped;
  rep.collision_witness = cov.injective ? u.err : cov.collision;
  rep.coverage_exact = cov.exact;
  rep.coverage_witness = cov.missing;
  std::string dw;
  rep.degrees_ok = degrees_two(w, {u.line}, ir, &dw);
  rep.degree_witness = dw;

  // tail evidence only on cuts deep enough that excursions past the window
  // rim cannot skip a crossing
  rep.tails_ok = true;
  int maxper = std::max(ray_margin(r), locality);
  auto cuts = default_two_ended_cuts(w);
  for (size_t ci = 0; ci < cuts.size(); ++ci) {
    if (cuts[ci].shell > w.radius - maxper - 1) continue;
    CutCheck cc = crossings_of(w, cuts[ci], u.line);
    bool split = cc.first_side != cc.last_side;
    rep.crossings.push_back({static_cast<int>(ci), cc.count, split});
    if (cc.count % 2 == 0 || !split) {
      rep.tails_ok = false;
      rep.tail_witness = "cut " + std::to_string(ci);
    }
  }

  rep.consistent = rep.injective && rep.coverage_exact && rep.degrees_ok && rep.tails_ok;
  if (!rep.consistent)
    rep.reason = !rep.injective   ? "injectivity"
                 : !rep.coverage_exact ? "coverage"
                 : !rep.degrees_ok     ? "degree"
                                       : "tails";
  return rep;
}

namespace {

// enumerate family copies meeting the window: classify window vertices into
// left cosets of the span via a generated ball of the span subgroup
std::vector<DoubleRay> instantiate_family(const GraphWindow& w, const RayFamily& fam) {
  const GroupHandle& G = w.group;
  // ball of span-subgroup elements deep enough to decide window cosets
  std::unordered_set<Element, ElementHash> span_ball{G.identity()};
  {
    std::vector<Element> frontier{G.identity()};
    int depth = 2 * w.radius + 6;
    for (int d = 0; d < depth; ++d) {
      std::vector<Element> next;
      for (const Element& u : frontier)
        for (const Element& s : fam.span.gens)
          for (const Element& v : {G.mul(u, s), G.mul(u, G.inv(s))})
            if (span_ball.insert(v).second) next.push_back(v);
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
  }
  std::vector<DoubleRay> copies;
  std::vector<char> claimed(w.verts.size(), 0);
  for (int v = 0; v < static_cast<int>(w.verts.size()); ++v) {
    if (claimed[v]) continue;
    // mark the whole coset of verts[v] inside the window
    for (int u = v; u < static_cast<int>(w.verts.size()); ++u) {
      if (claimed[u]) continue;
      if (span_ball.count(G.mul(G.inv(w.verts[v]), w.verts[u]))) claimed[u] = 1;
    }
    copies.push_back(translate(G, fam.templ, w.verts[v]));
  }
  return copies;
}

}  // namespace

VerificationReport verify_circle(const GraphWindow& w, const CircleDescription& c,
                                 const std::vector<EdgeCut>& cuts, int locality) {
  VerificationReport rep;
  rep.radius = w.radius;

  if (std::holds_alternative<FiniteCycle>(c)) {
    const auto& fc = std::get<FiniteCycle>(c);
    rep.object_kind = "finite-cycle";
    rep.margin = 0;
    std::vector<Element> verts;
    Element cur = fc.base;
    bool closes = true;
    for (int gi : fc.word) {
      verts.push_back(cur);
      cur = w.group.mul(cur, w.group.gen(gi).elt);
    }
    closes = (cur == fc.base);
    std::unordered_set<Element, ElementHash> seen;
    rep.injective = true;
    for (const Element& e : verts)
      if (!seen.insert(e).second) {
        rep.injective = false;
        rep.collision_witness = w.group.name_of(e);
      }
    rep.coverage_exact = seen.size() == w.verts.size();
    if (!rep.coverage_exact) rep.coverage_witness = "cycle misses vertices";
    for (const Element& e : verts)
      if (w.find(e) < 0) {
        rep.coverage_exact = false;
        rep.coverage_witness = "cycle leaves the window";
      }
    rep.degrees_ok = closes;
    if (!closes) rep.degree_witness = "cycle does not close";
    rep.tails_ok = true;
    rep.consistent = rep.injective && rep.coverage_exact && rep.degrees_ok;
    if (!rep.consistent)
      rep.reason = !rep.injective ? "injectivity" : !rep.coverage_exact ? "coverage" : "closure";
    return rep;
  }

  std::vector<DoubleRay> rays;
  if (std::holds_alternative<TwoRayCircle>(c)) {
    rep.object_kind = "two-ray-circle";
    rays = {std::get<TwoRayCircle>(c).r1, std::get<TwoRayCircle>(c).r2};
  } else {
    rep.object_kind = "ray-family";
    rays = instantiate_family(w, std::get<RayFamily>(c));
    if (cuts.empty()) fail(Err::CutsMissing, "ray families need labeled cuts");
  }

  int maxper = locality;
  for (const auto& r : rays) maxper = std::max(maxper, ray_margin(r));
  int margin = std::min(maxper, std::max(1, (w.radius - 1) / 2));
  rep.margin = margin;
  if (w.radius <= margin) fail(Err::UnrollTooShort, "window radius too small");
  int ir = w.interior_radius(margin);

  std::vector<Unrolled> unrolled;
  std::vector<std::vector<Element>> lines;
  bool escaped = true;
  std::string esc_err;
  for (const auto& r : rays) {
    Unrolled u = unroll_adaptive(w, r);
    if (!u.escaped) {
      escaped = false;
      esc_err = u.err;
    }
    lines.push_back(u.line);
    unrolled.push_back(std::move(u));
  }

  CoverageCheck cov = coverage_of(w, lines, ir);
  rep.injective = cov.injective && escaped;
  rep.collision_witness = cov.injective ? esc_err : cov.collision;
  rep.coverage_exact = cov.exact;
  rep.coverage_witness = cov.missing;
  std::string dw;
  rep.degrees_ok = degrees_two(w, lines, ir, &dw);
  rep.degree_witness = dw;

  // closure-connectivity evidence. Label cuts: the object uses exactly the
  // two cut edges. Shell cuts (restricted to depths a period cannot skip
  // over): every ray runs from side to side with odd crossing parity, and
  // each side of the cut receives exactly two of the four ray tails.
  std::vector<EdgeCut> use_cuts = cuts.empty() ? default_two_ended_cuts(w) : cuts;
  rep.tails_ok = true;
  for (size_t ci = 0; ci < use_cuts.size(); ++ci) {
    const EdgeCut& cut = use_cuts[ci];
    bool split_ok = true;
    int evidence = 0;
    if (cut.kind == EdgeCut::Kind::Label) {
      for (const auto& line : lines) evidence += crossings_of(w, cut, line).count;
      if (evidence != 2) split_ok = false;
    } else {
      if (cut.shell > w.radius - maxper - 1) continue;
      for (const auto& u : unrolled) {
        if (std::holds_alternative<TwoRayCircle>(c)) {
          CutCheck cc = crossings_of(w, cut, u.line);
          if (cc.count % 2 == 0) split_ok = false;
        }
        int n = static_cast<int>(u.line.size());
        int tp = tail_side(w, cut, u.line, u.base_at, n, 1);
        int tn = tail_side(w, cut, u.line, u.base_at, -1, -1);
        if (tp == 1) ++evidence;
        if (tn == 1) ++evidence;
        if (std::holds_alternative<TwoRayCircle>(c) && tp == tn) split_ok = false;
      }
      if (evidence != 2) split_ok = false;
    }
    rep.crossings.push_back({static_cast<int>(ci), evidence, split_ok});
    if (!split_ok) {
      rep.tails_ok = false;
      rep.tail_witness = "cut " + std::to_string(ci) + " evidence " + std::to_string(evidence);
    }
  }

  rep.consistent = rep.injective && rep.coverage_exact && rep.degrees_ok && rep.tails_ok;
  if (!rep.consistent)
    rep.reason = !rep.injective          ? "injectivity"
                 : !rep.coverage_exact   ? "coverage"
                 : !rep.degrees_ok       ? "degree"
                                         : "closure-connectivity: " + rep.tail_witness;
  return rep;
}

VerificationReport verify_cover(const GraphWindow& w, const HamiltonCover& h, int locality) {
  VerificationReport rep;
  rep.object_kind = "hamilton-cover(" + std::to_string(h.order()) + ")";
  rep.radius = w.radius;
  int margin = locality;
  for (const auto& r : h.rays) margin = std::max(margin, ray_margin(r));
  margin = std::min(margin, std::max(1, (w.radius - 1) / 2));
  rep.margin = margin;
  if (w.radius <= margin) fail(Err::UnrollTooShort, "window radius too small");
  int ir = w.interior_radius(margin);

  std::vector<std::vector<Element>> lines;
  bool escaped = true;
  std::string esc_err;
  for (const auto& r : h.rays) {
    Unrolled u = unroll_adaptive(w, r);
    if (!u.escaped) {
      escaped = false;
      esc_err = u.err;
    }
    lines.push_back(std::move(u.line));
  }
  CoverageCheck cov = coverage_of(w, lines, ir);
  rep.injective = cov.injective && escaped;
  rep.collision_witness = cov.injective ? esc_err : cov.collision;
  rep.coverage_exact = cov.exact;
  rep.coverage_witness = cov.missing;
  std::string dw;
  rep.degrees_ok = degrees_two(w, lines, ir, &dw);
  rep.degree_witness = dw;
  rep.tails_ok = true;
  rep.consistent = rep.injective && rep.coverage_exact && rep.degrees_ok;
  if (!rep.consistent)
    rep.reason =
        !rep.injective ? "injectivity" : !rep.coverage_exact ? "coverage" : "degree";
  return rep;
}

RapaportReport check_rapaport_hypotheses(const GraphWindow& w, const std::vector<BasedCycle>& R,
                                         const std::vector<BasedCycle>& S4) {
  RapaportReport rep;
  const GroupHandle& G = w.group;

  struct Inst {
    std::vector<int> verts;
    std::set<std::pair<int, int>> edges;
  };
  auto instantiate = [&](const BasedCycle& c, bool require_4) -> std::optional<Inst> {
    if (c.word.empty()) fail(Err::MalformedCycle, "empty cycle word");
    if (require_4 && c.word.size() != 4) fail(Err::MalformedCycle, "4-cycle word of length != 4");
    Inst inst;
    Element cur = c.base;
    for (int gi : c.word) {
      int vi = w.find(cur);
      if (vi < 0) return std::nullopt;  // not fully inside the window
      inst.verts.push_back(vi);
      Element nxt = G.mul(cur, G.gen(gi).elt);
      int ni = w.find(nxt);
      if (ni < 0) return std::nullopt;
      inst.edges.insert(std::minmax(vi, ni));
      cur = nxt;
    }
    if (!(cur == c.base)) fail(Err::MalformedCycle, "cycle word does not close");
    std::set<int> uniq(inst.verts.begin(), inst.verts.end());
    if (uniq.size() != inst.verts.size()) fail(Err::MalformedCycle, "cycle revisits a vertex");
    return inst;
  };

  std::vector<Inst> Ri, Si;
  for (const auto& c : R)
    if (auto i = instantiate(c, false)) Ri.push_back(std::move(*i));
  for (const auto& c : S4)
    if (auto i = instantiate(c, true)) Si.push_back(std::move(*i));

  // margin 2: cycles through a vertex this deep lie fully inside the window
  int ir = w.radius - 2;
  auto interior = [&](int v) { return w.dist[v] <= ir; };

  // R-cycles pairwise disjoint and covering
  std::vector<int> rcover(w.verts.size(), 0);
  for (const auto& i : Ri)
    for (int v : i.verts) rcover[v]++;
  for (int v = 0; v < static_cast<int>(w.verts.size()); ++v) {
    if (rcover[v] > 1) {
      rep.reason = "R-cycles overlap";
      rep.witnesses.push_back(G.name_of(w.verts[v]));
      return rep;
    }
    if (interior(v) && rcover[v] == 0) {
      rep.reason = "R-cycles miss a vertex";
      rep.witnesses.push_back(G.name_of(w.verts[v]));
      return rep;
    }
  }
  // S-cycles cover
  std::vector<int> scover(w.verts.size(), 0);
  for (const auto& i : Si)
    for (int v : i.verts) scover[v]++;
  for (int v = 0; v < static_cast<int>(w.verts.size()); ++v)
    if (interior(v) && scover[v] == 0) {
      rep.reason = "4-cycles miss a vertex";
      rep.witnesses.push_back(G.name_of(w.verts[v]));
      return rep;
    }
  // pairwise S intersections are single vertices
  for (size_t i = 0; i < Si.size(); ++i)
    for (size_t j = i + 1; j < Si.size(); ++j) {
      std::set<int> a(Si[i].verts.begin(), Si[i].verts.end());
      int common = 0;
      bool shared_edge = false;
      for (int v : Si[j].verts) common += a.count(v);
      for (const auto& e : Si[j].edges) shared_edge |= Si[i].edges.count(e) > 0;
      if (common > 1 || shared_edge) {
        rep.reason = "two 4-cycles intersect in more than a vertex";
        return rep;
      }
    }
  // R vs S intersections are single common edges
  for (const auto& r : Ri)
    for (const auto& s : Si) {
      std::set<int> a(r.verts.begin(), r.verts.end());
      int common = 0;
      for (int v : s.verts) common += a.count(v);
      if (common == 0) continue;
      int shared_edges = 0;
      for (const auto& e : s.edges) shared_edges += r.edges.count(e);
      if (!(shared_edges == 1 && common == 2)) {
        rep.reason = "an R-cycle and a 4-cycle intersect but not in a single edge";
        return rep;
      }
    }
  // every interior edge lies on an R- or S-cycle
  for (const LEdge& e : w.edges) {
    if (!interior(e.u) || !interior(e.v)) continue;
    auto key = std::minmax(e.u, e.v);
    bool covered = false;
    for (const auto& r : Ri) covered |= r.edges.count({key.first, key.second}) > 0;
    for (const auto& s : Si) covered |= s.edges.count({key.first, key.second}) > 0;
    if (!covered) {
      rep.reason = "edge on neither cycle family";
      rep.witnesses.push_back(G.name_of(w.verts[e.u]) + " -- " + G.name_of(w.verts[e.v]));
      return rep;
    }
  }
  rep.pass = true;
  rep.reason = "all conditions hold on the window";
  return rep;
}

}  // namespace hc
