#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hc/words.hpp"

namespace hc {

// Canonical forms, one flavor per group family.

struct IntElt {
  int64_t v = 0;
  auto operator<=>(const IntElt&) const = default;
};

struct TableElt {
  int idx = 0;
  auto operator<=>(const TableElt&) const = default;
};

// a^k b^eps in the infinite dihedral group
struct DihElt {
  int64_t k = 0;
  uint8_t eps = 0;
  auto operator<=>(const DihElt&) const = default;
};

// reduced word over +/-(i+1) for generator i of a free group
struct FreeElt {
  std::vector<int16_t> w;
  auto operator<=>(const FreeElt&) const = default;
};

// h * r1 r2 ... rn with h in the core and ri alternating coset representatives
struct AmalgamElt {
  int core = 0;                         // power of the core generator
  std::vector<std::pair<uint8_t, uint16_t>> reps;  // (side 0|1, rep index >= 1)
  auto operator<=>(const AmalgamElt&) const = default;
};

// k^i t^m in an HNN extension of a finite cyclic group
struct HnnElt {
  int i = 0;
  int64_t m = 0;
  auto operator<=>(const HnnElt&) const = default;
};

// shortlex normal form in a presented group
struct WordElt {
  Word w;
  auto operator<=>(const WordElt&) const = default;
};

using Element = std::variant<IntElt, TableElt, DihElt, FreeElt, AmalgamElt, HnnElt, WordElt>;

struct ElementHash {
  size_t operator()(const Element& e) const;
};

}  // namespace hc
