#include "hc/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace hc {

const char* to_string(Err e) {
  switch (e) {
    case Err::IllFormedPresentation: return "IllFormedPresentation";
    case Err::IncompleteSystem: return "IncompleteSystem";
    case Err::FamilyMismatch: return "FamilyMismatch";
    case Err::UnknownGenerator: return "UnknownGenerator";
    case Err::Undecided: return "Undecided";
    case Err::InfiniteIndex: return "InfiniteIndex";
    case Err::NotNormal: return "NotNormal";
    case Err::UnsupportedQuotient: return "UnsupportedQuotient";
    case Err::NotTwoEnded: return "NotTwoEnded";
    case Err::NotFree: return "NotFree";
    case Err::NotGenerating: return "NotGenerating";
    case Err::TooFewGenerators: return "TooFewGenerators";
    case Err::HypothesisViolated: return "HypothesisViolated";
    case Err::InnerInvalid: return "InnerInvalid";
    case Err::NotAMatching: return "NotAMatching";
    case Err::BlockNotHamiltonian: return "BlockNotHamiltonian";
    case Err::CoreNotMet: return "CoreNotMet";
    case Err::NotMinimal: return "NotMinimal";
    case Err::CoreNotZ2: return "CoreNotZ2";
    case Err::CompletionFailed: return "CompletionFailed";
    case Err::BadParameters: return "BadParameters";
    case Err::QuotientNotHamiltonian: return "QuotientNotHamiltonian";
    case Err::NotInfiniteOrder: return "NotInfiniteOrder";
    case Err::ProductDoesNotGenerate: return "ProductDoesNotGenerate";
    case Err::NotHamiltonInSchreier: return "NotHamiltonInSchreier";
    case Err::SearchExhausted: return "SearchExhausted";
    case Err::BadRank: return "BadRank";
    case Err::FiberMissing: return "FiberMissing";
    case Err::LocalityViolated: return "LocalityViolated";
    case Err::UnsupportedTwistPattern: return "UnsupportedTwistPattern";
    case Err::UnrollTooShort: return "UnrollTooShort";
    case Err::CutsMissing: return "CutsMissing";
    case Err::WindowTooSmall: return "WindowTooSmall";
    case Err::HintUnsupported: return "HintUnsupported";
    case Err::MalformedCycle: return "MalformedCycle";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(sym_inv_of(*it));
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string word_to_string(const Word& w, const std::vector<std::string>& gen_names) {
  if (w.empty()) return "1";
  std::string out;
  for (Sym s : w) {
    if (!out.empty()) out += ' ';
    out += gen_names[sym_gen(s)];
    if (sym_is_inverse(s)) out += "^-1";
  }
  return out;
}

std::string Presentation::sym_name(Sym s) const {
  std::string n = gen_names[sym_gen(s)];
  if (sym_is_inverse(s)) n += "^-1";
  return n;
}

void Presentation::validate() const {
  if (gen_names.empty()) fail(Err::IllFormedPresentation, "no generators");
  std::set<std::string> seen;
  for (const auto& n : gen_names) {
    if (n.empty()) fail(Err::IllFormedPresentation, "empty generator name");
    if (!seen.insert(n).second) fail(Err::IllFormedPresentation, "duplicate generator " + n);
  }
  for (const Word& r : relators)
    for (Sym s : r)
      if (sym_gen(s) >= num_gens()) fail(Err::IllFormedPresentation, "relator uses undeclared symbol");
}

namespace {

// Leftmost occurrence of `pat` in `w` at or after `from`, or -1.
int find_sub(const Word& w, const Word& pat, size_t from = 0) {
  if (pat.empty() || pat.size() > w.size()) return -1;
  for (size_t i = from; i + pat.size() <= w.size(); ++i) {
    bool hit = true;
    for (size_t j = 0; j < pat.size(); ++j)
      if (w[i + j] != pat[j]) { hit = false; break; }
    if (hit) return static_cast<int>(i);
  }
  return -1;
}

Word rewrite_fixpoint(const std::vector<Rule>& rules, Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : rules) {
      if (!r.active) continue;
      int pos = find_sub(w, r.lhs);
      if (pos < 0) continue;
      Word next;
      next.reserve(w.size() - r.lhs.size() + r.rhs.size());
      next.insert(next.end(), w.begin(), w.begin() + pos);
      next.insert(next.end(), r.rhs.begin(), r.rhs.end());
      next.insert(next.end(), w.begin() + pos + r.lhs.size(), w.end());
      w = std::move(next);
      changed = true;
    }
  }
  return w;
}

struct Completer {
  CompletionCaps caps;
  std::vector<Rule> rules;
  std::deque<std::pair<Word, Word>> pending;
  bool capped = false;

  Word nf(const Word& w) const { return rewrite_fixpoint(rules, w); }

  void push_equation(Word a, Word b) { pending.emplace_back(std::move(a), std::move(b)); }

  int active_count() const {
    int n = 0;
    for (const auto& r : rules) n += r.active ? 1 : 0;
    return n;
  }

  void add_rule(Word lhs, Word rhs) {
    if (static_cast<int>(lhs.size()) > caps.max_len || static_cast<int>(rhs.size()) > caps.max_len) {
      capped = true;
      return;
    }
    if (active_count() >= caps.max_rules) {
      capped = true;
      return;
    }
    Rule nr{std::move(lhs), std::move(rhs), true};
    // Interreduce: any rule whose lhs contains the new lhs is re-derived;
    // reducible right-hand sides are rewritten in place.
    std::vector<std::pair<Word, Word>> requeue;
    for (Rule& r : rules) {
      if (!r.active) continue;
      if (find_sub(r.lhs, nr.lhs) >= 0) {
        r.active = false;
        requeue.emplace_back(r.lhs, r.rhs);
      }
    }
    rules.push_back(nr);
    for (Rule& r : rules) {
      if (!r.active || r.lhs == nr.lhs) continue;
      if (find_sub(r.rhs, nr.lhs) >= 0) r.rhs = nf(r.rhs);
    }
    for (auto& e : requeue) push_equation(std::move(e.first), std::move(e.second));
    // Critical pairs of the new rule against every active rule (both roles).
    size_t self = rules.size() - 1;
    for (size_t i = 0; i < rules.size(); ++i) {
      if (!rules[i].active || !rules[self].active) continue;
      overlap(rules[self], rules[i]);
      if (i != self) overlap(rules[i], rules[self]);
    }
  }

  // Enqueue critical pairs arising from r1's lhs overlapping r2's lhs:
  // either r2.lhs inside r1.lhs, or a proper suffix of r1.lhs equal to a
  // proper prefix of r2.lhs.
  void overlap(const Rule& r1, const Rule& r2) {
    const Word& l1 = r1.lhs;
    const Word& l2 = r2.lhs;
    for (int pos = find_sub(l1, l2); pos >= 0; pos = find_sub(l1, l2, pos + 1)) {
      Word a = r1.rhs;
      Word b;
      b.insert(b.end(), l1.begin(), l1.begin() + pos);
      b.insert(b.end(), r2.rhs.begin(), r2.rhs.end());
      b.insert(b.end(), l1.begin() + pos + l2.size(), l1.end());
      push_equation(std::move(a), std::move(b));
    }
    size_t maxov = std::min(l1.size(), l2.size()) - 1;
    for (size_t k = 1; k <= maxov; ++k) {
      bool match = true;
      for (size_t j = 0; j < k; ++j)
        if (l1[l1.size() - k + j] != l2[j]) { match = false; break; }
      if (!match) continue;
      // overlapped word: l1 + tail(l2)
      Word a = r1.rhs;
      a.insert(a.end(), l2.begin() + k, l2.end());
      Word b(l1.begin(), l1.end() - k);
      b.insert(b.end(), r2.rhs.begin(), r2.rhs.end());
      push_equation(std::move(a), std::move(b));
    }
  }

  void run() {
    while (!pending.empty() && !capped) {
      auto [a, b] = pending.front();
      pending.pop_front();
      Word na = nf(a), nb = nf(b);
      if (na == nb) continue;
      if (shortlex_less(na, nb)) std::swap(na, nb);
      add_rule(std::move(na), std::move(nb));
    }
  }
};

}  // namespace

RewriteSystem complete(const Presentation& p, CompletionCaps caps) {
  p.validate();
  if (caps.max_rules <= 0 || caps.max_len <= 0) fail(Err::BadParameters, "caps must be positive");
  Completer c;
  c.caps = caps;
  for (int g = 0; g < p.num_gens(); ++g) {
    c.add_rule(Word{sym_base(g), sym_inv_of(sym_base(g))}, Word{});
    c.add_rule(Word{sym_inv_of(sym_base(g)), sym_base(g)}, Word{});
  }
  for (const Word& r : p.relators) c.push_equation(r, Word{});
  c.run();

  RewriteSystem rs;
  rs.pres = p;
  for (Rule& r : c.rules)
    if (r.active) rs.rules.push_back(std::move(r));
  rs.status = c.capped ? CompletionStatus::Capped : CompletionStatus::Complete;
  return rs;
}

Word normalize(const RewriteSystem& rs, const Word& w) {
  if (!rs.complete()) fail(Err::IncompleteSystem, "normalize requires a complete system");
  return rewrite_fixpoint(rs.rules, w);
}

Word reduce(const RewriteSystem& rs, const Word& w) { return rewrite_fixpoint(rs.rules, w); }

bool check_local_confluence(const RewriteSystem& rs) {
  Completer c;
  c.caps.max_rules = 1 << 20;
  c.caps.max_len = 1 << 20;
  c.rules = rs.rules;
  for (size_t i = 0; i < rs.rules.size(); ++i)
    for (size_t j = 0; j < rs.rules.size(); ++j) c.overlap(rs.rules[i], rs.rules[j]);
  while (!c.pending.empty()) {
    auto [a, b] = c.pending.front();
    c.pending.pop_front();
    if (c.nf(a) != c.nf(b)) return false;
  }
  return true;
}

namespace {

struct Tok {
  std::vector<std::string> items;
  size_t pos = 0;
  bool done() const { return pos >= items.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : items[pos];
  }
  std::string next() {
    if (done()) fail(Err::ParseError, "unexpected end of presentation text");
    return items[pos++];
  }
};

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (ch == '(' || ch == ')' || ch == ',' || ch == ';' || ch == '^') {
      flush();
      out.push_back(std::string(1, ch));
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

int gen_index(const Presentation& p, const std::string& name) {
  for (int i = 0; i < p.num_gens(); ++i)
    if (p.gen_names[i] == name) return i;
  fail(Err::ParseError, "unknown generator '" + name + "'");
}

Word word_pow(const Word& w, long long e) {
  Word base = e >= 0 ? w : word_inverse(w);
  long long n = e >= 0 ? e : -e;
  Word out;
  for (long long i = 0; i < n; ++i) out = word_concat(out, base);
  return out;
}

Word parse_word(Tok& t, const Presentation& p);

Word parse_atom(Tok& t, const Presentation& p) {
  Word w;
  if (t.peek() == "(") {
    t.next();
    w = parse_word(t, p);
    if (t.next() != ")") fail(Err::ParseError, "expected ')'");
  } else {
    std::string name = t.next();
    bool inv = false;
    if (name.size() > 1 && name.back() == '\'') {
      inv = true;
      name.pop_back();
    }
    Sym s = sym_base(gen_index(p, name));
    if (inv) s = sym_inv_of(s);
    w = Word{s};
  }
  if (t.peek() == "^") {
    t.next();
    std::string e = t.next();
    try {
      w = word_pow(w, std::stoll(e));
    } catch (const std::invalid_argument&) {
      fail(Err::ParseError, "bad exponent '" + e + "'");
    }
  }
  return w;
}

Word parse_word(Tok& t, const Presentation& p) {
  Word w;
  while (!t.done() && t.peek() != ")" && t.peek() != "," && t.peek() != ";")
    w = word_concat(w, parse_atom(t, p));
  return w;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Tok t{split_tokens(text)};
  Presentation p;
  if (t.next() != "gen:") fail(Err::ParseError, "expected 'gen:'");
  while (!t.done() && t.peek() != ";") p.gen_names.push_back(t.next());
  if (!t.done()) {
    t.next();  // ';'
    if (t.next() != "rel:") fail(Err::ParseError, "expected 'rel:'");
    while (!t.done()) {
      Word r = parse_word(t, p);
      if (!r.empty()) p.relators.push_back(r);
      if (!t.done()) {
        if (t.next() != ",") fail(Err::ParseError, "expected ',' between relators");
      }
    }
  }
  p.validate();
  return p;
}

std::string presentation_to_string(const Presentation& p) {
  std::ostringstream os;
  os << "gen:";
  for (const auto& n : p.gen_names) os << ' ' << n;
  os << " ; rel:";
  for (size_t i = 0; i < p.relators.size(); ++i) {
    os << (i ? ", " : " ") << word_to_string(p.relators[i], p.gen_names);
  }
  return os.str();
}

}  // namespace hc
