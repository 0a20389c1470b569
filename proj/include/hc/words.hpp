#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hc {

// Symbols of a monoid alphabet. Generator i of a presentation occupies two
// slots: base symbol 2*i and its formal inverse 2*i+1. Shortlex over symbol
// ids therefore realizes "declaration order, inverses right after the base".
using Sym = uint16_t;
using Word = std::vector<Sym>;

inline Sym sym_base(int gen) { return static_cast<Sym>(2 * gen); }
inline Sym sym_inv_of(Sym s) { return s ^ 1u; }
inline int sym_gen(Sym s) { return s / 2; }
inline bool sym_is_inverse(Sym s) { return (s & 1u) != 0; }

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);

// true iff a < b in shortlex (length first, then symbol order).
bool shortlex_less(const Word& a, const Word& b);

std::string word_to_string(const Word& w, const std::vector<std::string>& gen_names);

}  // namespace hc
