#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hc/element.hpp"
#include "hc/error.hpp"
#include "hc/rewrite.hpp"

namespace hc {

// Finite group as a multiplication table; element 0 is the identity.
struct CayleyTable {
  std::string name;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;

  int order() const { return static_cast<int>(mul.size()); }
  static CayleyTable from_mul(std::string name, std::vector<std::vector<int>> mul);
};

struct IntegersFam {};
struct FiniteFam {
  CayleyTable table;
};
struct DihedralFam {};
struct FreeFam {
  int rank = 2;
};
// G1 *_C G2 with C cyclic of order p, embedded into both finite factors.
struct AmalgamFam {
  CayleyTable left, right;
  int p = 2;
  std::vector<int> embed_left;   // image of core generator powers 0..p-1
  std::vector<int> embed_right;
  // derived:
  std::vector<int> reps_left;    // right-coset representatives, reps[0] = identity
  std::vector<int> reps_right;
  std::vector<int> coset_of_left;   // element -> rep slot
  std::vector<int> coset_of_right;
  std::vector<int> core_pow_left;   // element -> core power if in core else -1
  std::vector<int> core_pow_right;
};
// <k, t | k^p = 1, t k t^-1 = k^s> with gcd(s, p) = 1
struct HnnFam {
  int p = 2;
  int s = 1;
};
struct PresentedFam {
  std::shared_ptr<RewriteSystem> rs;
};

using Family =
    std::variant<IntegersFam, FiniteFam, DihedralFam, FreeFam, AmalgamFam, HnnFam, PresentedFam>;

// One member of a symmetric generating set. `inv` is the index of the inverse
// generator in the same set (possibly its own). Lifted generating sets carry
// a two-letter expansion into the ambient group's alphabet.
struct Generator {
  std::string name;
  Element elt;
  int inv = -1;
  std::optional<std::pair<int, int>> expansion;
};

using GenWord = std::vector<int>;  // generator indices

class GroupHandle {
 public:
  GroupHandle() : fam_(IntegersFam{}) {}
  GroupHandle(Family fam, std::vector<Generator> gens);

  const Family& family() const { return fam_; }
  const std::vector<Generator>& gens() const { return gens_; }
  const Generator& gen(int i) const;
  int find_gen(const Element& e) const;  // -1 if absent
  int inverse_gen(int i) const { return gen(i).inv; }

  Element identity() const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element evaluate(const GenWord& w) const;
  Element evaluate_from(const Element& base, const GenWord& w) const;
  bool is_identity(const Element& e) const;
  std::string name_of(const Element& e) const;

  // symbol count / pair count of the generating set (involutions count once
  // in both conventions; a non-involution pair counts 2 symbols, 1 pair)
  int symbol_count() const { return static_cast<int>(gens_.size()); }
  int pair_count() const;

  bool same_family_shape(const GroupHandle& o) const { return fam_.index() == o.fam_.index(); }

  template <class F>
  bool is() const {
    return std::holds_alternative<F>(fam_);
  }
  template <class F>
  const F& as() const {
    if (!std::holds_alternative<F>(fam_)) fail(Err::FamilyMismatch, "wrong group family");
    return std::get<F>(fam_);
  }

 private:
  Family fam_;
  std::vector<Generator> gens_;
};

// Generating-set builders. Each symmetrizes the set (missing inverses are
// appended with derived names) and rejects identity generators.
GroupHandle make_integers(const std::vector<int64_t>& steps);
GroupHandle make_finite(CayleyTable t, const std::vector<int>& gens);
GroupHandle make_dinf(const std::vector<DihElt>& gens);
GroupHandle make_free(int rank, const std::vector<FreeElt>& gens);
GroupHandle make_free_standard(int rank);
struct AmalgamGenSpec;  // see group_build.hpp
GroupHandle make_amalgam(CayleyTable left, CayleyTable right, int p, std::vector<int> embed_left,
                         std::vector<int> embed_right, const std::vector<AmalgamGenSpec>& gens);
GroupHandle make_hnn(int p, int s, const std::vector<HnnElt>& gens);
GroupHandle make_presented(const RewriteSystem& rs, const std::vector<Word>& gens);
GroupHandle make_presented(const RewriteSystem& rs);  // one generator per presentation symbol

// helpers for building amalgam generators
AmalgamElt amalgam_core(const GroupHandle& g, int power);
AmalgamElt amalgam_factor(const GroupHandle& g, int side, int elt_index);

// Amalgam two-endedness: both factor indices equal 2.
bool amalgam_two_ended(const AmalgamFam& f);
int amalgam_factor_index(const AmalgamFam& f, int side);

Element dih_a(int64_t k);
Element dih_refl(int64_t k);

}  // namespace hc
