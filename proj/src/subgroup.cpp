#include "hc/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace hc {

namespace {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

Tri membership_integers(const SubgroupSpec& H, const Element& g) {
  int64_t d = 0;
  for (const Element& e : H.gens) d = gcd64(d, std::get<IntElt>(e).v);
  int64_t v = std::get<IntElt>(g).v;
  if (d == 0) return v == 0 ? Tri::Yes : Tri::No;
  return v % d == 0 ? Tri::Yes : Tri::No;
}

// Subgroup of the infinite dihedral group generated by rotations a^{r_i} and
// reflections a^{s_j} b: rotations in H are multiples of d = gcd(r_i, s_j - s_0),
// reflections are those with offset congruent to s_0 mod d.
Tri membership_dinf(const SubgroupSpec& H, const Element& g) {
  int64_t d = 0;
  std::optional<int64_t> refl;
  for (const Element& e : H.gens) {
    const auto& x = std::get<DihElt>(e);
    if (x.eps == 0) {
      d = gcd64(d, x.k);
    } else if (!refl) {
      refl = x.k;
    } else {
      d = gcd64(d, x.k - *refl);
    }
  }
  const auto& t = std::get<DihElt>(g);
  auto in_class = [&](int64_t v, int64_t base) {
    if (d == 0) return v == base;
    return (v - base) % d == 0;
  };
  if (t.eps == 0) return in_class(t.k, 0) ? Tri::Yes : Tri::No;
  if (!refl) return Tri::No;
  return in_class(t.k, *refl) ? Tri::Yes : Tri::No;
}

Tri membership_table(const GroupHandle& G, const SubgroupSpec& H, const Element& g) {
  // finite closure
  std::set<int> have{0};
  std::deque<int> q{0};
  std::vector<int> gens;
  for (const Element& e : H.gens) gens.push_back(std::get<TableElt>(e).idx);
  const auto& t = G.as<FiniteFam>().table;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int s : gens) {
      for (int v : {t.mul[u][s], t.mul[u][t.inv[s]]}) {
        if (have.insert(v).second) q.push_back(v);
      }
    }
  }
  return have.count(std::get<TableElt>(g).idx) ? Tri::Yes : Tri::No;
}

Tri membership_free(const SubgroupSpec& H, const Element& g) {
  const auto& w = std::get<FreeElt>(g).w;
  // single-letter generators: membership is letter support
  bool all_single = !H.gens.empty();
  std::set<int> letters;
  for (const Element& e : H.gens) {
    const auto& u = std::get<FreeElt>(e).w;
    if (u.size() != 1) {
      all_single = false;
      break;
    }
    letters.insert(std::abs(u[0]));
  }
  if (all_single) {
    for (auto c : w)
      if (!letters.count(std::abs(c))) return Tri::No;
    return Tri::Yes;
  }
  if (H.gens.size() == 1) {  // powers of one word
    const auto& u = std::get<FreeElt>(H.gens[0]).w;
    if (u.empty()) return w.empty() ? Tri::Yes : Tri::No;
    std::vector<int16_t> acc;
    int bound = static_cast<int>(w.size() / std::max<size_t>(1, u.size())) + 2;
    for (int m = 0; m <= bound; ++m) {
      if (acc == w) return Tri::Yes;
      std::vector<int16_t> next = acc;
      for (auto c : u) {
        if (!next.empty() && next.back() == -c)
          next.pop_back();
        else
          next.push_back(c);
      }
      acc = next;
    }
    acc.clear();
    std::vector<int16_t> ui;
    for (auto it = u.rbegin(); it != u.rend(); ++it) ui.push_back(-*it);
    for (int m = 0; m <= bound; ++m) {
      if (acc == w) return Tri::Yes;
      std::vector<int16_t> next = acc;
      for (auto c : ui) {
        if (!next.empty() && next.back() == -c)
          next.pop_back();
        else
          next.push_back(c);
      }
      acc = next;
    }
    return Tri::No;
  }
  return Tri::Undecided;
}

// H <= Z_p x| Z: split H as (H n core) . <h0> with h0 of minimal positive
// t-level d; H n core is the closure of the generators' core defects under
// the level-d twist.
struct HnnSub {
  int d = 0;              // level gcd (0: H inside the core)
  int64_t core_mask = 0;  // bitset of core members
  HnnElt h0{0, 0};
};

HnnSub hnn_subgroup_shape(const GroupHandle& G, const SubgroupSpec& H) {
  const auto& f = G.as<HnnFam>();
  HnnSub sh;
  int64_t d = 0;
  for (const Element& e : H.gens) d = gcd64(d, std::get<HnnElt>(e).m);
  sh.d = static_cast<int>(d);
  std::set<int> core{0};
  if (sh.d != 0) {
    // realize an element of level d by an extended-gcd walk over generators
    Element h0 = G.identity();
    int64_t cur = 0;
    for (const Element& e : H.gens) {
      int64_t m = std::get<HnnElt>(e).m;
      if (m == 0) continue;
      // replace (cur, h0) by gcd combination of cur and m
      Element other = e;
      int64_t om = m;
      while (om != 0) {
        if (cur == 0) {
          std::swap(h0, other);
          std::swap(cur, om);
          continue;
        }
        // reduce the larger level modulo the smaller
        if (std::abs(om) >= std::abs(cur)) {
          int64_t q = om / cur;
          Element adj = other;
          for (int64_t i = 0; i < std::abs(q); ++i)
            adj = G.mul(adj, q > 0 ? G.inv(h0) : h0);
          other = adj;
          om = om - q * cur;
        } else {
          std::swap(h0, other);
          std::swap(cur, om);
        }
      }
    }
    if (cur < 0) {
      h0 = G.inv(h0);
      cur = -cur;
    }
    sh.h0 = std::get<HnnElt>(h0);
    // core defects of the generators
    for (const Element& e : H.gens) {
      const auto& x = std::get<HnnElt>(e);
      Element defect = e;
      int64_t lev = x.m / sh.d;
      for (int64_t i = 0; i < std::abs(lev); ++i)
        defect = G.mul(defect, lev > 0 ? G.inv(h0) : h0);
      core.insert(std::get<HnnElt>(defect).i);
    }
  } else {
    for (const Element& e : H.gens) core.insert(std::get<HnnElt>(e).i);
  }
  // close under addition and the twist by s^d (and s^-d)
  bool changed = true;
  int64_t sd = 1;
  {
    int64_t s = f.s % f.p;
    int dd = sh.d == 0 ? 1 : sh.d;
    for (int i = 0; i < dd; ++i) sd = sd * s % f.p;
  }
  while (changed) {
    changed = false;
    std::set<int> next = core;
    for (int a : core)
      for (int b : core)
        next.insert((a + b) % f.p);
    for (int a : core) next.insert(static_cast<int>(a * sd % f.p));
    if (next != core) {
      core = next;
      changed = true;
    }
  }
  for (int c : core) sh.core_mask |= (1ll << c);
  return sh;
}

Tri membership_hnn(const GroupHandle& G, const SubgroupSpec& H, const Element& g) {
  HnnSub sh = hnn_subgroup_shape(G, H);
  const auto& x = std::get<HnnElt>(g);
  if (sh.d == 0) {
    if (x.m != 0) return Tri::No;
    return (sh.core_mask >> x.i) & 1 ? Tri::Yes : Tri::No;
  }
  if (x.m % sh.d != 0) return Tri::No;
  Element defect = g;
  int64_t lev = x.m / sh.d;
  Element h0 = Element{sh.h0};
  for (int64_t i = 0; i < std::abs(lev); ++i)
    defect = G.mul(defect, lev > 0 ? G.inv(h0) : h0);
  const auto& dfx = std::get<HnnElt>(defect);
  return (sh.core_mask >> dfx.i) & 1 ? Tri::Yes : Tri::No;
}

// Bounded BFS over products of subgroup generators: Yes if found, else
// Undecided (never a definitive No).
Tri membership_bfs(const GroupHandle& G, const SubgroupSpec& H, const Element& g) {
  std::unordered_set<Element, ElementHash> ball{G.identity()};
  std::deque<std::pair<Element, int>> q{{G.identity(), 0}};
  while (!q.empty()) {
    auto [u, d] = q.front();
    q.pop_front();
    if (u == g) return Tri::Yes;
    if (d >= H.search_radius) continue;
    for (const Element& s : H.gens) {
      for (const Element& v : {G.mul(u, s), G.mul(u, G.inv(s))}) {
        if (ball.insert(v).second) q.emplace_back(v, d + 1);
      }
    }
  }
  return Tri::Undecided;
}

// Presented family. If the subgroup is generated by whole letters and the
// rule set maps pure words to pure words, normal forms decide membership;
// otherwise fall back to a bounded product search.
Tri membership_presented(const GroupHandle& G, const SubgroupSpec& H, const Element& g) {
  const auto& fam = G.as<PresentedFam>();
  const RewriteSystem& rs = *fam.rs;
  std::set<int> letter_gens;
  bool letters_only = !H.gens.empty();
  for (const Element& e : H.gens) {
    const auto& w = std::get<WordElt>(e).w;
    if (w.size() != 1) {
      letters_only = false;
      break;
    }
    letter_gens.insert(sym_gen(w[0]));
  }
  if (letters_only) {
    auto pure = [&](const Word& w) {
      for (Sym s : w)
        if (!letter_gens.count(sym_gen(s))) return false;
      return true;
    };
    bool closed = true;
    for (const Rule& r : rs.rules)
      if (pure(r.lhs) && !pure(r.rhs)) {
        closed = false;
        break;
      }
    if (closed) return pure(std::get<WordElt>(g).w) ? Tri::Yes : Tri::No;
  }
  return membership_bfs(G, H, g);
}

}  // namespace

Tri subgroup_membership(const GroupHandle& G, const SubgroupSpec& H, const Element& g) {
  switch (H.kind) {
    case SubKind::AmalgamCore:
      if (G.is<AmalgamFam>()) return std::get<AmalgamElt>(g).reps.empty() ? Tri::Yes : Tri::No;
      if (G.is<HnnFam>()) return std::get<HnnElt>(g).m == 0 ? Tri::Yes : Tri::No;
      fail(Err::FamilyMismatch, "core subgroup needs an amalgam or HNN family");
    case SubKind::EvenWord:
      if (G.is<AmalgamFam>())
        return std::get<AmalgamElt>(g).reps.size() % 2 == 0 ? Tri::Yes : Tri::No;
      if (G.is<HnnFam>()) return std::get<HnnElt>(g).m % 2 == 0 ? Tri::Yes : Tri::No;
      fail(Err::FamilyMismatch, "even-word subgroup needs an amalgam or HNN family");
    case SubKind::GeneratedBy:
      break;
  }
  if (G.is<IntegersFam>()) return membership_integers(H, g);
  if (G.is<DihedralFam>()) return membership_dinf(H, g);
  if (G.is<FiniteFam>()) return membership_table(G, H, g);
  if (G.is<FreeFam>()) return membership_free(H, g);
  if (G.is<HnnFam>()) return membership_hnn(G, H, g);
  if (G.is<PresentedFam>()) return membership_presented(G, H, g);
  if (G.is<AmalgamFam>()) return membership_bfs(G, H, g);
  return Tri::Undecided;
}

Transversal coset_transversal(const GroupHandle& G, const SubgroupSpec& H, Side side,
                              int max_cosets) {
  Transversal t;
  t.side = side;
  t.reps.push_back(G.identity());
  std::deque<int> q{0};
  auto same_coset = [&](const Element& rep, const Element& g) -> Tri {
    Element d = side == Side::Left ? G.mul(G.inv(rep), g) : G.mul(g, G.inv(rep));
    return subgroup_membership(G, H, d);
  };
  while (!q.empty()) {
    int ui = q.front();
    q.pop_front();
    for (int gi = 0; gi < static_cast<int>(G.gens().size()); ++gi) {
      Element v = G.mul(t.reps[ui], G.gen(gi).elt);
      bool found = false;
      for (const Element& rep : t.reps) {
        Tri r = same_coset(rep, v);
        if (r == Tri::Undecided) fail(Err::Undecided, "coset identity undecided");
        if (r == Tri::Yes) {
          found = true;
          break;
        }
      }
      if (!found) {
        if (static_cast<int>(t.reps.size()) >= max_cosets)
          fail(Err::InfiniteIndex, "coset enumeration exceeded cap");
        t.reps.push_back(v);
        q.push_back(static_cast<int>(t.reps.size()) - 1);
      }
    }
  }
  return t;
}

int coset_index(const GroupHandle& G, const SubgroupSpec& H, const Transversal& t,
                const Element& g) {
  for (size_t i = 0; i < t.reps.size(); ++i) {
    Element d = t.side == Side::Left ? G.mul(G.inv(t.reps[i]), g) : G.mul(g, G.inv(t.reps[i]));
    if (subgroup_membership(G, H, d) == Tri::Yes) return static_cast<int>(i);
  }
  return -1;
}

Tri check_normal(const GroupHandle& G, const SubgroupSpec& H) {
  if (H.kind == SubKind::EvenWord) return Tri::Yes;  // index-2 kernel
  std::vector<Element> ngens = H.gens;
  if (H.kind == SubKind::AmalgamCore) {
    if (G.is<AmalgamFam>())
      ngens = {amalgam_core(G, 1)};
    else if (G.is<HnnFam>())
      ngens = {HnnElt{1, 0}};
  }
  for (const Element& n : ngens) {
    for (const auto& g : G.gens()) {
      Element c = G.mul(G.mul(g.elt, n), G.inv(g.elt));
      Tri r = subgroup_membership(G, H, c);
      if (r != Tri::Yes) return r;
    }
  }
  return Tri::Yes;
}

QuotientResult quotient(const GroupHandle& G, const SubgroupSpec& N) {
  Tri nrm = check_normal(G, N);
  if (nrm == Tri::No) fail(Err::NotNormal, "subgroup is not normal");
  if (nrm == Tri::Undecided) fail(Err::Undecided, "normality undecided");

  // Two-ended family modulo its finite core: quotient is Z or Dinf.
  if (N.kind == SubKind::AmalgamCore && G.is<AmalgamFam>()) {
    const auto& f = G.as<AmalgamFam>();
    if (!amalgam_two_ended(f)) fail(Err::UnsupportedQuotient, "amalgam factors must have index 2");
    auto project = [](const Element& e) -> Element {
      const auto& a = std::get<AmalgamElt>(e);
      DihElt d{0, 0};
      for (auto& [side, slot] : a.reps) {
        DihElt refl{side == 0 ? 0 : 1, 1};
        // d := d * refl
        d = d.eps == 0 ? DihElt{d.k + refl.k, 1} : DihElt{d.k - refl.k, 0};
      }
      return d;
    };
    std::vector<DihElt> qgens;
    std::vector<int> gen_map(G.gens().size(), -1), lift;
    std::vector<Element> qelems;
    for (size_t i = 0; i < G.gens().size(); ++i) {
      Element img = project(G.gen(static_cast<int>(i)).elt);
      if (std::get<DihElt>(img) == DihElt{0, 0}) continue;
      bool found = false;
      for (size_t j = 0; j < qelems.size(); ++j)
        if (qelems[j] == img) {
          gen_map[i] = static_cast<int>(j);
          found = true;
          break;
        }
      if (!found) {
        gen_map[i] = static_cast<int>(qelems.size());
        qelems.push_back(img);
        qgens.push_back(std::get<DihElt>(img));
        lift.push_back(static_cast<int>(i));
      }
    }
    return QuotientResult{make_dinf(qgens), project, gen_map, lift};
  }
  if (N.kind == SubKind::AmalgamCore && G.is<HnnFam>()) {
    auto project = [](const Element& e) -> Element { return IntElt{std::get<HnnElt>(e).m}; };
    std::vector<int64_t> qgens;
    std::vector<int> gen_map(G.gens().size(), -1), lift;
    for (size_t i = 0; i < G.gens().size(); ++i) {
      int64_t m = std::get<HnnElt>(G.gen(static_cast<int>(i)).elt).m;
      if (m == 0) continue;
      bool found = false;
      for (size_t j = 0; j < qgens.size(); ++j)
        if (qgens[j] == m) {
          gen_map[i] = static_cast<int>(j);
          found = true;
          break;
        }
      if (!found) {
        gen_map[i] = static_cast<int>(qgens.size());
        qgens.push_back(m);
        lift.push_back(static_cast<int>(i));
      }
    }
    return QuotientResult{make_integers(qgens), project, gen_map, lift};
  }

  // finite-index case: quotient as a multiplication table over coset reps
  Transversal t = coset_transversal(G, N, Side::Left);
  int n = static_cast<int>(t.reps.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = coset_index(G, N, t, G.mul(t.reps[i], t.reps[j]));
      if (k < 0) fail(Err::UnsupportedQuotient, "coset product escaped the transversal");
      mul[i][j] = k;
    }
  CayleyTable table = CayleyTable::from_mul("quotient", std::move(mul));
  // N normal makes coset multiplication well-defined; from_mul checked shape.
  GroupHandle Gcopy = G;
  SubgroupSpec Ncopy = N;
  Transversal tcopy = t;
  auto project = [Gcopy, Ncopy, tcopy](const Element& e) -> Element {
    int k = coset_index(Gcopy, Ncopy, tcopy, e);
    if (k < 0) fail(Err::UnsupportedQuotient, "element outside enumerated cosets");
    return TableElt{k};
  };
  std::vector<int> qgens;
  std::vector<int> gen_map(G.gens().size(), -1), lift;
  for (size_t i = 0; i < G.gens().size(); ++i) {
    int img = std::get<TableElt>(project(G.gen(static_cast<int>(i)).elt)).idx;
    if (img == 0) continue;
    bool found = false;
    for (size_t j = 0; j < qgens.size(); ++j)
      if (qgens[j] == img) {
        gen_map[i] = static_cast<int>(j);
        found = true;
        break;
      }
    if (!found) {
      gen_map[i] = static_cast<int>(qgens.size());
      qgens.push_back(img);
      lift.push_back(static_cast<int>(i));
    }
  }
  return QuotientResult{make_finite(std::move(table), qgens), project, gen_map, lift};
}

SubgroupSpec index_two_subgroup(const GroupHandle& G) {
  if (G.is<IntegersFam>()) return SubgroupSpec::generated_by({IntElt{2}});
  if (G.is<DihedralFam>()) return SubgroupSpec::generated_by({dih_a(1)});
  if (G.is<AmalgamFam>()) {
    if (!amalgam_two_ended(G.as<AmalgamFam>())) fail(Err::NotTwoEnded, "amalgam is not two-ended");
    return SubgroupSpec::even_word();
  }
  if (G.is<HnnFam>()) return SubgroupSpec::even_word();
  fail(Err::NotTwoEnded, "family has no canonical index-2 subgroup");
}

bool check_amalgam_core_normal(const GroupHandle& G) {
  if (!G.is<AmalgamFam>() && !G.is<HnnFam>())
    fail(Err::FamilyMismatch, "need an amalgam or HNN family");
  if (G.is<AmalgamFam>() && !amalgam_two_ended(G.as<AmalgamFam>()))
    fail(Err::NotTwoEnded, "amalgam factor index differs from 2");
  SubgroupSpec core = SubgroupSpec::core();
  Element k = G.is<AmalgamFam>() ? Element{amalgam_core(G, 1)} : Element{HnnElt{1, 0}};
  // ball of radius 4
  std::unordered_set<Element, ElementHash> ball{G.identity()};
  std::deque<std::pair<Element, int>> q{{G.identity(), 0}};
  while (!q.empty()) {
    auto [u, d] = q.front();
    q.pop_front();
    if (d == 4) continue;
    for (const auto& g : G.gens()) {
      Element v = G.mul(u, g.elt);
      if (ball.insert(v).second) q.emplace_back(v, d + 1);
    }
  }
  for (const Element& g : ball) {
    Element c = G.mul(G.mul(g, k), G.inv(g));
    if (subgroup_membership(G, core, c) != Tri::Yes) return false;
  }
  return true;
}

VirtuallyFreeParams virtually_free_params(const GroupHandle& G, const SubgroupSpec& F) {
  for (const Element& g : F.gens)
    if (!infinite_order(G, g)) fail(Err::NotFree, "designated generator has finite order");
  Transversal t = coset_transversal(G, F, Side::Left);
  VirtuallyFreeParams out;
  out.index = static_cast<int>(t.reps.size());
  out.rank = F.declared_rank.value_or(static_cast<int>(F.gens.size()));
  return out;
}

bool infinite_order(const GroupHandle& G, const Element& g) {
  if (G.is<FiniteFam>()) return false;
  if (G.is<IntegersFam>()) return std::get<IntElt>(g).v != 0;
  if (G.is<DihedralFam>()) {
    const auto& d = std::get<DihElt>(g);
    return d.eps == 0 && d.k != 0;
  }
  if (G.is<FreeFam>()) return !std::get<FreeElt>(g).w.empty();
  if (G.is<HnnFam>()) return std::get<HnnElt>(g).m != 0;
  if (G.is<AmalgamFam>()) {
    // torsion elements are conjugates of factor elements; words of even
    // length >= 2 starting and ending on different sides have infinite order,
    // and a bounded power walk settles the rest at desk scale
    Element p = g;
    for (int i = 0; i < 2 * 24; ++i) {
      if (G.is_identity(p)) return false;
      p = G.mul(p, g);
    }
    return true;
  }
  // presented: bounded power walk
  Element p = g;
  for (int i = 0; i < 48; ++i) {
    if (G.is_identity(p)) return false;
    p = G.mul(p, g);
  }
  return true;
}

}  // namespace hc
