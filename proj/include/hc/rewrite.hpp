#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hc/error.hpp"
#include "hc/words.hpp"

namespace hc {

// A group presentation over named generators. Every generator gets a formal
// inverse symbol; free reduction is implicit and added as rules on completion.
struct Presentation {
  std::vector<std::string> gen_names;   // declaration order
  std::vector<Word> relators;           // words over the doubled alphabet

  int num_gens() const { return static_cast<int>(gen_names.size()); }
  int num_syms() const { return 2 * num_gens(); }
  std::string sym_name(Sym s) const;
  void validate() const;  // throws IllFormedPresentation
};

struct Rule {
  Word lhs, rhs;
  bool active = true;
};

enum class CompletionStatus { Complete, Capped };

// A shortlex string-rewriting system. When status == Complete the system is
// locally confluent and normalize() computes canonical forms; a capped system
// may only be used for sound-but-incomplete equality testing.
struct RewriteSystem {
  Presentation pres;
  std::vector<Rule> rules;  // active rules only after completion
  CompletionStatus status = CompletionStatus::Capped;

  bool complete() const { return status == CompletionStatus::Complete; }
};

struct CompletionCaps {
  int max_rules = 10000;
  int max_len = 64;
};

RewriteSystem complete(const Presentation& p, CompletionCaps caps = {});

// Rewrites w to its shortlex normal form. Requires rs.complete().
Word normalize(const RewriteSystem& rs, const Word& w);

// Rewrites to a fixed point without requiring completeness (sound for
// equality only in one direction).
Word reduce(const RewriteSystem& rs, const Word& w);

// Re-derives all critical pairs and checks joinability; used by tests as an
// independent confluence check.
bool check_local_confluence(const RewriteSystem& rs);

// Text format: "gen: a b c ; rel: a^2, b^2, (a b)^3, a^-1 b a b"
Presentation parse_presentation(const std::string& text);

std::string presentation_to_string(const Presentation& p);

}  // namespace hc
