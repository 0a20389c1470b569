#include "hc/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hc/group_build.hpp"

namespace hc {

size_t ElementHash::operator()(const Element& e) const {
  size_t h = e.index() * 0x9e3779b97f4a7c15ull;
  auto mix = [&h](uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntElt>) {
          mix(static_cast<uint64_t>(x.v));
        } else if constexpr (std::is_same_v<T, TableElt>) {
          mix(static_cast<uint64_t>(x.idx));
        } else if constexpr (std::is_same_v<T, DihElt>) {
          mix(static_cast<uint64_t>(x.k));
          mix(x.eps);
        } else if constexpr (std::is_same_v<T, FreeElt>) {
          for (auto c : x.w) mix(static_cast<uint64_t>(static_cast<int64_t>(c) + 40000));
        } else if constexpr (std::is_same_v<T, AmalgamElt>) {
          mix(static_cast<uint64_t>(x.core));
          for (auto& r : x.reps) mix((uint64_t(r.first) << 32) | r.second);
        } else if constexpr (std::is_same_v<T, HnnElt>) {
          mix(static_cast<uint64_t>(x.i));
          mix(static_cast<uint64_t>(x.m));
        } else if constexpr (std::is_same_v<T, WordElt>) {
          for (Sym s : x.w) mix(s);
        }
      },
      e);
  return h;
}

CayleyTable CayleyTable::from_mul(std::string name, std::vector<std::vector<int>> mul) {
  CayleyTable t;
  t.name = std::move(name);
  t.mul = std::move(mul);
  int n = t.order();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t.mul[i].size()) != n) fail(Err::BadParameters, "ragged table");
    if (t.mul[0][i] != i || t.mul[i][0] != i) fail(Err::BadParameters, "element 0 is not an identity");
  }
  t.inv.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.mul[i][j] == 0) t.inv[i] = j;
  for (int i = 0; i < n; ++i)
    if (t.inv[i] < 0) fail(Err::BadParameters, "table element without inverse");
  return t;
}

namespace {

int64_t ipow_mod(int64_t base, int64_t exp, int64_t mod) {
  int64_t r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

int inverse_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  fail(Err::BadParameters, "no modular inverse");
}

// --- amalgam internals -----------------------------------------------------

void amalgam_derive(AmalgamFam& f) {
  if (f.p < 1) fail(Err::BadParameters, "core order must be >= 1");
  if (static_cast<int>(f.embed_left.size()) != f.p || static_cast<int>(f.embed_right.size()) != f.p)
    fail(Err::BadParameters, "core embedding must list p element images");
  for (int side = 0; side < 2; ++side) {
    const CayleyTable& t = side == 0 ? f.left : f.right;
    const std::vector<int>& emb = side == 0 ? f.embed_left : f.embed_right;
    if (emb[0] != 0) fail(Err::BadParameters, "core power 0 must embed to the identity");
    // verify the embedding is a homomorphism from Z_p
    for (int a = 0; a < f.p; ++a)
      for (int b = 0; b < f.p; ++b)
        if (t.mul[emb[a]][emb[b]] != emb[(a + b) % f.p])
          fail(Err::BadParameters, "core embedding is not a homomorphism");
    std::vector<int> core_pow(t.order(), -1);
    for (int c = 0; c < f.p; ++c) {
      if (core_pow[emb[c]] != -1) fail(Err::BadParameters, "core embedding not injective");
      core_pow[emb[c]] = c;
    }
    std::vector<int> coset(t.order(), -1);
    std::vector<int> reps;
    reps.push_back(0);  // slot 0: the core itself
    for (int c = 0; c < f.p; ++c) coset[emb[c]] = 0;
    for (int x = 0; x < t.order(); ++x) {
      if (coset[x] != -1) continue;
      int slot = static_cast<int>(reps.size());
      reps.push_back(x);
      for (int c = 0; c < f.p; ++c) coset[t.mul[emb[c]][x]] = slot;
    }
    if (side == 0) {
      f.reps_left = reps;
      f.coset_of_left = coset;
      f.core_pow_left = core_pow;
    } else {
      f.reps_right = reps;
      f.coset_of_right = coset;
      f.core_pow_right = core_pow;
    }
  }
}

struct AmalgamOps {
  const AmalgamFam& f;

  const CayleyTable& tab(int side) const { return side == 0 ? f.left : f.right; }
  const std::vector<int>& emb(int side) const { return side == 0 ? f.embed_left : f.embed_right; }
  const std::vector<int>& reps(int side) const { return side == 0 ? f.reps_left : f.reps_right; }
  const std::vector<int>& coset(int side) const {
    return side == 0 ? f.coset_of_left : f.coset_of_right;
  }
  const std::vector<int>& corepow(int side) const {
    return side == 0 ? f.core_pow_left : f.core_pow_right;
  }

  // a := a * k^c (right multiplication by a core element)
  void mul_core(AmalgamElt& a, int c) const {
    c %= f.p;
    if (c < 0) c += f.p;
    if (c == 0) return;
    for (int i = static_cast<int>(a.reps.size()) - 1; i >= 0; --i) {
      int side = a.reps[i].first;
      int r = reps(side)[a.reps[i].second];
      int x = tab(side).mul[r][emb(side)[c]];  // r * k^c = k^c' * r'
      int slot = coset(side)[x];
      int rnew = reps(side)[slot];
      int cnew = corepow(side)[tab(side).mul[x][tab(side).inv[rnew]]];
      a.reps[i].second = static_cast<uint16_t>(slot);
      c = cnew;
      if (c == 0) return;
    }
    a.core = (a.core + c) % f.p;
  }

  // a := a * r where r = transversal slot `slot` of `side` (slot >= 1)
  void mul_rep(AmalgamElt& a, int side, int slot) const {
    if (!a.reps.empty() && a.reps.back().first == side) {
      int r1 = reps(side)[a.reps.back().second];
      int r2 = reps(side)[slot];
      int x = tab(side).mul[r1][r2];
      a.reps.pop_back();
      int cp = corepow(side)[x];
      if (cp >= 0) {
        mul_core(a, cp);
        return;
      }
      int s2 = coset(side)[x];
      int rnew = reps(side)[s2];
      int c = corepow(side)[tab(side).mul[x][tab(side).inv[rnew]]];
      mul_core(a, c);
      a.reps.emplace_back(static_cast<uint8_t>(side), static_cast<uint16_t>(s2));
      return;
    }
    a.reps.emplace_back(static_cast<uint8_t>(side), static_cast<uint16_t>(slot));
  }

  // a := a * x for an arbitrary element x of factor `side`
  void mul_factor(AmalgamElt& a, int side, int x) const {
    int cp = corepow(side)[x];
    if (cp >= 0) {
      mul_core(a, cp);
      return;
    }
    int slot = coset(side)[x];
    int rnew = reps(side)[slot];
    int c = corepow(side)[tab(side).mul[x][tab(side).inv[rnew]]];
    mul_core(a, c);
    mul_rep(a, side, slot);
  }

  AmalgamElt mul(const AmalgamElt& a, const AmalgamElt& b) const {
    AmalgamElt r = a;
    mul_core(r, b.core);
    for (auto& [side, slot] : b.reps) mul_rep(r, side, slot);
    return r;
  }

  AmalgamElt inv(const AmalgamElt& a) const {
    AmalgamElt r;  // identity
    for (auto it = a.reps.rbegin(); it != a.reps.rend(); ++it) {
      int side = it->first;
      int x = tab(side).inv[reps(side)[it->second]];
      mul_factor(r, side, x);
    }
    mul_core(r, (f.p - a.core) % f.p);
    return r;
  }
};

std::vector<int16_t> free_mul(const std::vector<int16_t>& a, const std::vector<int16_t>& b) {
  std::vector<int16_t> r = a;
  for (int16_t c : b) {
    if (!r.empty() && r.back() == -c)
      r.pop_back();
    else
      r.push_back(c);
  }
  return r;
}

}  // namespace

GroupHandle::GroupHandle(Family fam, std::vector<Generator> gens)
    : fam_(std::move(fam)), gens_(std::move(gens)) {
  for (auto& g : gens_) {
    if (is_identity(g.elt)) fail(Err::BadParameters, "generator '" + g.name + "' is the identity");
    if (g.inv < 0 || g.inv >= static_cast<int>(gens_.size()))
      fail(Err::BadParameters, "generator '" + g.name + "' lacks an inverse slot");
  }
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (!(mul(gens_[i].elt, gens_[gens_[i].inv].elt) == identity()))
      fail(Err::BadParameters, "generating set is not symmetric at '" + gens_[i].name + "'");
  }
}

const Generator& GroupHandle::gen(int i) const {
  if (i < 0 || i >= static_cast<int>(gens_.size())) fail(Err::UnknownGenerator, "generator index");
  return gens_[i];
}

int GroupHandle::find_gen(const Element& e) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].elt == e) return static_cast<int>(i);
  return -1;
}

Element GroupHandle::identity() const {
  return std::visit(
      [&](const auto& f) -> Element {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, IntegersFam>) return IntElt{0};
        else if constexpr (std::is_same_v<T, FiniteFam>) return TableElt{0};
        else if constexpr (std::is_same_v<T, DihedralFam>) return DihElt{0, 0};
        else if constexpr (std::is_same_v<T, FreeFam>) return FreeElt{};
        else if constexpr (std::is_same_v<T, AmalgamFam>) return AmalgamElt{};
        else if constexpr (std::is_same_v<T, HnnFam>) return HnnElt{0, 0};
        else return WordElt{};
      },
      fam_);
}

bool GroupHandle::is_identity(const Element& e) const { return e == identity(); }

Element GroupHandle::mul(const Element& a, const Element& b) const {
  if (a.index() != b.index()) fail(Err::FamilyMismatch, "elements of different families");
  return std::visit(
      [&](const auto& f) -> Element {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, IntegersFam>) {
          return IntElt{std::get<IntElt>(a).v + std::get<IntElt>(b).v};
        } else if constexpr (std::is_same_v<T, FiniteFam>) {
          return TableElt{f.table.mul[std::get<TableElt>(a).idx][std::get<TableElt>(b).idx]};
        } else if constexpr (std::is_same_v<T, DihedralFam>) {
          const auto& x = std::get<DihElt>(a);
          const auto& y = std::get<DihElt>(b);
          if (x.eps == 0) return DihElt{x.k + y.k, y.eps};
          return DihElt{x.k - y.k, static_cast<uint8_t>(1 ^ y.eps)};
        } else if constexpr (std::is_same_v<T, FreeFam>) {
          return FreeElt{free_mul(std::get<FreeElt>(a).w, std::get<FreeElt>(b).w)};
        } else if constexpr (std::is_same_v<T, AmalgamFam>) {
          return AmalgamOps{f}.mul(std::get<AmalgamElt>(a), std::get<AmalgamElt>(b));
        } else if constexpr (std::is_same_v<T, HnnFam>) {
          const auto& x = std::get<HnnElt>(a);
          const auto& y = std::get<HnnElt>(b);
          int64_t sm = x.m >= 0 ? ipow_mod(f.s, x.m, f.p) : ipow_mod(inverse_mod(f.s, f.p), -x.m, f.p);
          int i = static_cast<int>((x.i + y.i * sm) % f.p);
          if (i < 0) i += f.p;
          return HnnElt{i, x.m + y.m};
        } else {
          const auto& rs = *f.rs;
          return WordElt{normalize(rs, word_concat(std::get<WordElt>(a).w, std::get<WordElt>(b).w))};
        }
      },
      fam_);
}

Element GroupHandle::inv(const Element& a) const {
  return std::visit(
      [&](const auto& f) -> Element {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, IntegersFam>) {
          return IntElt{-std::get<IntElt>(a).v};
        } else if constexpr (std::is_same_v<T, FiniteFam>) {
          return TableElt{f.table.inv[std::get<TableElt>(a).idx]};
        } else if constexpr (std::is_same_v<T, DihedralFam>) {
          const auto& x = std::get<DihElt>(a);
          if (x.eps == 0) return DihElt{-x.k, 0};
          return x;
        } else if constexpr (std::is_same_v<T, FreeFam>) {
          const auto& w = std::get<FreeElt>(a).w;
          std::vector<int16_t> r;
          for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
          return FreeElt{std::move(r)};
        } else if constexpr (std::is_same_v<T, AmalgamFam>) {
          return AmalgamOps{f}.inv(std::get<AmalgamElt>(a));
        } else if constexpr (std::is_same_v<T, HnnFam>) {
          const auto& x = std::get<HnnElt>(a);
          int64_t smi =
              x.m >= 0 ? ipow_mod(inverse_mod(f.s, f.p), x.m, f.p) : ipow_mod(f.s, -x.m, f.p);
          int i = static_cast<int>((-x.i * smi) % f.p);
          if (i < 0) i += f.p;
          return HnnElt{i, -x.m};
        } else {
          return WordElt{normalize(*f.rs, word_inverse(std::get<WordElt>(a).w))};
        }
      },
      fam_);
}

Element GroupHandle::evaluate(const GenWord& w) const { return evaluate_from(identity(), w); }

Element GroupHandle::evaluate_from(const Element& base, const GenWord& w) const {
  Element e = base;
  for (int gi : w) e = mul(e, gen(gi).elt);
  return e;
}

int GroupHandle::pair_count() const {
  int invol = 0;
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].inv == static_cast<int>(i)) ++invol;
  return invol + (static_cast<int>(gens_.size()) - invol) / 2;
}

std::string GroupHandle::name_of(const Element& e) const {
  std::ostringstream os;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntElt>) {
          os << x.v;
        } else if constexpr (std::is_same_v<T, TableElt>) {
          os << 'g' << x.idx;
        } else if constexpr (std::is_same_v<T, DihElt>) {
          os << (x.eps ? 'f' : 'r') << x.k;
        } else if constexpr (std::is_same_v<T, FreeElt>) {
          if (x.w.empty()) os << '1';
          for (auto c : x.w) {
            os << 'x' << (c > 0 ? c : -c);
            if (c < 0) os << '\'';
          }
        } else if constexpr (std::is_same_v<T, AmalgamElt>) {
          os << 'k' << x.core;
          for (auto& [side, slot] : x.reps) os << (side == 0 ? ".l" : ".r") << slot;
        } else if constexpr (std::is_same_v<T, HnnElt>) {
          os << 'k' << x.i << 't' << x.m;
        } else if constexpr (std::is_same_v<T, WordElt>) {
          if (x.w.empty()) {
            os << '1';
          } else if (is<PresentedFam>()) {
            const auto& p = as<PresentedFam>().rs->pres;
            bool first = true;
            for (Sym s : x.w) {
              if (!first) os << '.';
              first = false;
              os << p.gen_names[sym_gen(s)];
              if (sym_is_inverse(s)) os << '\'';
            }
          }
        }
      },
      e);
  return os.str();
}

// --- builders ---------------------------------------------------------------

namespace {

// Appends missing inverses and wires `inv` slots. Names of appended inverses
// get a trailing apostrophe.
std::vector<Generator> symmetrize(const GroupHandle& probe, std::vector<Generator> gens) {
  // probe is a handle with the same family and an empty genset, used for mul.
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = 0; j < gens.size(); ++j) {
      if (probe.mul(gens[i].elt, gens[j].elt) == probe.identity()) {
        gens[i].inv = static_cast<int>(j);
        break;
      }
    }
    if (gens[i].inv < 0) {
      Generator g;
      g.name = gens[i].name + "'";
      g.elt = probe.inv(gens[i].elt);
      g.inv = static_cast<int>(i);
      gens[i].inv = static_cast<int>(gens.size());
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

GroupHandle build(Family fam, std::vector<Generator> named) {
  GroupHandle probe(fam, {});
  return GroupHandle(std::move(fam), symmetrize(probe, std::move(named)));
}

}  // namespace

GroupHandle make_integers(const std::vector<int64_t>& steps) {
  std::vector<Generator> gens;
  std::set<int64_t> seen;
  for (int64_t s : steps) {
    if (s == 0) fail(Err::BadParameters, "zero step");
    if (!seen.insert(s).second) continue;
    gens.push_back(Generator{std::to_string(s), IntElt{s}, -1, std::nullopt});
  }
  return build(IntegersFam{}, std::move(gens));
}

GroupHandle make_finite(CayleyTable t, const std::vector<int>& gen_idx) {
  std::vector<Generator> gens;
  std::set<int> seen;
  for (int i : gen_idx) {
    if (i <= 0 || i >= t.order()) fail(Err::BadParameters, "bad table generator index");
    if (!seen.insert(i).second) continue;
    gens.push_back(Generator{"g" + std::to_string(i), TableElt{i}, -1, std::nullopt});
  }
  return build(FiniteFam{std::move(t)}, std::move(gens));
}

GroupHandle make_dinf(const std::vector<DihElt>& dgens) {
  std::vector<Generator> gens;
  std::set<std::pair<int64_t, int>> seen;
  for (const DihElt& d : dgens) {
    if (!seen.insert({d.k, d.eps}).second) continue;
    std::string nm = (d.eps ? "f" : "r") + std::to_string(d.k);
    gens.push_back(Generator{nm, d, -1, std::nullopt});
  }
  return build(DihedralFam{}, std::move(gens));
}

GroupHandle make_free(int rank, const std::vector<FreeElt>& fgens) {
  if (rank < 1) fail(Err::BadRank, "rank must be positive");
  std::vector<Generator> gens;
  GroupHandle probe(FreeFam{rank}, {});
  for (const FreeElt& f : fgens) {
    for (int16_t c : f.w)
      if (c == 0 || std::abs(c) > rank) fail(Err::BadParameters, "letter outside rank");
    gens.push_back(Generator{probe.name_of(f), f, -1, std::nullopt});
  }
  return build(FreeFam{rank}, std::move(gens));
}

GroupHandle make_free_standard(int rank) {
  std::vector<FreeElt> gens;
  for (int i = 1; i <= rank; ++i) gens.push_back(FreeElt{{static_cast<int16_t>(i)}});
  return make_free(rank, gens);
}

GroupHandle make_amalgam(CayleyTable left, CayleyTable right, int p, std::vector<int> embed_left,
                         std::vector<int> embed_right, const std::vector<AmalgamGenSpec>& specs) {
  AmalgamFam fam;
  fam.left = std::move(left);
  fam.right = std::move(right);
  fam.p = p;
  fam.embed_left = std::move(embed_left);
  fam.embed_right = std::move(embed_right);
  amalgam_derive(fam);
  GroupHandle probe(fam, {});
  std::vector<Generator> gens;
  for (const auto& sp : specs) {
    AmalgamElt e;
    std::string nm;
    if (sp.side == 2) {
      AmalgamOps{std::get<AmalgamFam>(probe.family())}.mul_core(e, sp.val);
      nm = "k" + std::to_string(sp.val);
    } else {
      AmalgamOps{std::get<AmalgamFam>(probe.family())}.mul_factor(e, sp.side, sp.val);
      nm = (sp.side == 0 ? "a" : "b") + std::to_string(sp.val);
    }
    gens.push_back(Generator{nm, e, -1, std::nullopt});
  }
  return build(fam, std::move(gens));
}

GroupHandle make_hnn(int p, int s, const std::vector<HnnElt>& hgens) {
  if (p < 2) fail(Err::BadParameters, "core order must be >= 2");
  if (std::gcd(s, p) != 1) fail(Err::BadParameters, "automorphism exponent not a unit");
  std::vector<Generator> gens;
  for (const HnnElt& h : hgens) {
    std::string nm = "k" + std::to_string(h.i) + "t" + std::to_string(h.m);
    if (h.i == 0 && h.m == 1) nm = "t";
    if (h.i == 1 && h.m == 0) nm = "k";
    gens.push_back(Generator{nm, h, -1, std::nullopt});
  }
  return build(HnnFam{p, s}, std::move(gens));
}

GroupHandle make_presented(const RewriteSystem& rs, const std::vector<Word>& gwords) {
  if (!rs.complete()) fail(Err::IncompleteSystem, "presented groups need a complete system");
  auto shared = std::make_shared<RewriteSystem>(rs);
  std::vector<Generator> gens;
  for (const Word& w : gwords) {
    Word nf = normalize(rs, w);
    gens.push_back(Generator{word_to_string(w, rs.pres.gen_names), WordElt{nf}, -1, std::nullopt});
  }
  return build(PresentedFam{shared}, std::move(gens));
}

GroupHandle make_presented(const RewriteSystem& rs) {
  std::vector<Word> gens;
  for (int g = 0; g < rs.pres.num_gens(); ++g) gens.push_back(Word{sym_base(g)});
  return make_presented(rs, gens);
}

AmalgamElt amalgam_core(const GroupHandle& g, int power) {
  AmalgamElt e;
  AmalgamOps{g.as<AmalgamFam>()}.mul_core(e, power);
  return e;
}

AmalgamElt amalgam_factor(const GroupHandle& g, int side, int elt_index) {
  AmalgamElt e;
  AmalgamOps{g.as<AmalgamFam>()}.mul_factor(e, side, elt_index);
  return e;
}

bool amalgam_two_ended(const AmalgamFam& f) {
  return amalgam_factor_index(f, 0) == 2 && amalgam_factor_index(f, 1) == 2;
}

int amalgam_factor_index(const AmalgamFam& f, int side) {
  const CayleyTable& t = side == 0 ? f.left : f.right;
  return t.order() / f.p;
}

Element dih_a(int64_t k) { return DihElt{k, 0}; }
Element dih_refl(int64_t k) { return DihElt{k, 1}; }

}  // namespace hc
