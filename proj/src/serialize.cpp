#include "hc/serialize.hpp"

#include <sstream>

#include "hc/group_build.hpp"
#include "hc/tables.hpp"

namespace hc {

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

std::vector<std::string> words_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

DihElt parse_dih_token(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != 'r' && tok[0] != 'f'))
    fail(Err::ParseError, "dihedral generator must look like r2 or f-1");
  return DihElt{std::stoll(tok.substr(1)), static_cast<uint8_t>(tok[0] == 'f' ? 1 : 0)};
}

FreeElt parse_free_token(const std::string& tok, int rank) {
  // x1x2'x1 ...
  FreeElt e;
  size_t i = 0;
  while (i < tok.size()) {
    if (tok[i] != 'x') fail(Err::ParseError, "free generator tokens use x<i> with optional '");
    size_t j = i + 1;
    while (j < tok.size() && isdigit(static_cast<unsigned char>(tok[j]))) ++j;
    int idx = std::stoi(tok.substr(i + 1, j - i - 1));
    if (idx < 1 || idx > rank) fail(Err::ParseError, "letter outside rank");
    bool inv = j < tok.size() && tok[j] == '\'';
    e.w.push_back(static_cast<int16_t>(inv ? -idx : idx));
    i = inv ? j + 1 : j;
  }
  return e;
}

HnnElt parse_hnn_token(const std::string& tok) {
  if (tok == "k") return HnnElt{1, 0};
  if (tok == "t") return HnnElt{0, 1};
  if (tok == "t'") return HnnElt{0, -1};
  // k<i>t<m>
  auto tpos = tok.find('t');
  if (tok[0] != 'k' || tpos == std::string::npos) fail(Err::ParseError, "hnn token k<i>t<m>");
  return HnnElt{std::stoi(tok.substr(1, tpos - 1)), std::stoll(tok.substr(tpos + 1))};
}

}  // namespace

GroupHandle parse_group_spec(const std::string& text) {
  auto lines = lines_of(text);
  if (lines.empty()) fail(Err::ParseError, "empty group spec");
  std::string family_line, gens_line, presentation_line;
  std::vector<std::string> embed_lines;
  for (const auto& l : lines) {
    auto ws = words_of(l);
    if (ws.empty()) continue;
    if (ws[0] == "family")
      family_line = l;
    else if (ws[0] == "gens")
      gens_line = l;
    else if (ws[0] == "embed-left" || ws[0] == "embed-right")
      embed_lines.push_back(l);
    else if (ws[0] == "presentation")
      presentation_line = l.substr(l.find("presentation") + 12);
  }
  if (family_line.empty()) fail(Err::ParseError, "missing family line");
  auto fw = words_of(family_line);
  auto gw = words_of(gens_line);
  if (!gw.empty()) gw.erase(gw.begin());  // drop "gens"

  const std::string& fam = fw.at(1);
  if (fam == "integers") {
    std::vector<int64_t> steps;
    for (const auto& t : gw) steps.push_back(std::stoll(t));
    return make_integers(steps);
  }
  if (fam == "dinf") {
    std::vector<DihElt> gens;
    for (const auto& t : gw) gens.push_back(parse_dih_token(t));
    return make_dinf(gens);
  }
  if (fam == "finite") {
    CayleyTable t = named_table(fw.at(2));
    std::vector<int> gens;
    for (const auto& g : gw) gens.push_back(std::stoi(g));
    return make_finite(std::move(t), gens);
  }
  if (fam == "free") {
    int rank = std::stoi(fw.at(2));
    std::vector<FreeElt> gens;
    for (const auto& t : gw) gens.push_back(parse_free_token(t, rank));
    return make_free(rank, gens);
  }
  if (fam == "amalgam") {
    // family amalgam <LeftTable> <RightTable> core <p>
    CayleyTable left = named_table(fw.at(2));
    CayleyTable right = named_table(fw.at(3));
    if (fw.size() < 6 || fw.at(4) != "core") fail(Err::ParseError, "amalgam needs 'core <p>'");
    int p = std::stoi(fw.at(5));
    std::vector<int> el, er;
    for (const auto& l : embed_lines) {
      auto ws = words_of(l);
      std::vector<int>& dst = ws[0] == "embed-left" ? el : er;
      for (size_t i = 1; i < ws.size(); ++i) dst.push_back(std::stoi(ws[i]));
    }
    if (el.empty() || er.empty()) fail(Err::ParseError, "amalgam needs embed-left and embed-right");
    std::vector<AmalgamGenSpec> gens;
    for (const auto& t : gw) {
      if (t[0] == 'l') gens.push_back({0, std::stoi(t.substr(1))});
      else if (t[0] == 'r') gens.push_back({1, std::stoi(t.substr(1))});
      else if (t[0] == 'k') gens.push_back({2, std::stoi(t.substr(1))});
      else fail(Err::ParseError, "amalgam generator tokens are l<i>, r<i>, k<j>");
    }
    return make_amalgam(std::move(left), std::move(right), p, el, er, gens);
  }
  if (fam == "hnn") {
    int p = std::stoi(fw.at(2));
    int s = std::stoi(fw.at(3));
    std::vector<HnnElt> gens;
    for (const auto& t : gw) gens.push_back(parse_hnn_token(t));
    return make_hnn(p, s, gens);
  }
  if (fam == "presented") {
    if (presentation_line.empty()) fail(Err::ParseError, "presented family needs a presentation line");
    Presentation p = parse_presentation(presentation_line);
    RewriteSystem rs = complete(p);
    if (!rs.complete()) fail(Err::CompletionFailed, "presentation did not complete");
    std::vector<Word> gens;
    for (const auto& t : gw) {
      // single-letter tokens with optional '
      std::string name = t;
      bool inv = false;
      if (name.size() > 1 && name.back() == '\'') {
        inv = true;
        name.pop_back();
      }
      int gi = -1;
      for (int i = 0; i < p.num_gens(); ++i)
        if (p.gen_names[i] == name) gi = i;
      if (gi < 0) fail(Err::ParseError, "unknown presented generator " + name);
      Sym s = sym_base(gi);
      gens.push_back(Word{inv ? sym_inv_of(s) : s});
    }
    return make_presented(rs, gens);
  }
  fail(Err::ParseError, "unknown family '" + fam + "'");
}

namespace {

std::string genword_to_text(const GroupHandle& G, const GenWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += G.gen(w[i]).name;
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::string ray_to_text(const GroupHandle& G, const DoubleRay& r) {
  std::ostringstream os;
  os << "double-ray\n";
  os << "base: " << G.name_of(r.base) << "\n";
  os << "pos-prefix: " << genword_to_text(G, r.pos.prefix) << "\n";
  os << "pos-period: " << genword_to_text(G, r.pos.period) << "\n";
  os << "neg-prefix: " << genword_to_text(G, r.neg.prefix) << "\n";
  os << "neg-period: " << genword_to_text(G, r.neg.period) << "\n";
  return os.str();
}

std::string circle_to_text(const GroupHandle& G, const CircleDescription& c) {
  std::ostringstream os;
  if (std::holds_alternative<FiniteCycle>(c)) {
    const auto& fc = std::get<FiniteCycle>(c);
    os << "finite-cycle\n";
    os << "base: " << G.name_of(fc.base) << "\n";
    os << "word: " << genword_to_text(G, fc.word) << "\n";
  } else if (std::holds_alternative<TwoRayCircle>(c)) {
    const auto& two = std::get<TwoRayCircle>(c);
    os << "two-ray-circle\n";
    os << "ray-1:\n" << ray_to_text(G, two.r1);
    os << "ray-2:\n" << ray_to_text(G, two.r2);
  } else {
    const auto& fam = std::get<RayFamily>(c);
    os << "ray-family\n";
    os << "template:\n" << ray_to_text(G, fam.templ);
    os << "span-generators:";
    for (const Element& e : fam.span.gens) os << ' ' << G.name_of(e);
    os << "\n";
  }
  return os.str();
}

std::string cover_to_text(const GroupHandle& G, const HamiltonCover& h) {
  std::ostringstream os;
  os << "hamilton-cover order " << h.order() << "\n";
  for (const auto& r : h.rays) os << ray_to_text(G, r);
  return os.str();
}

}  // namespace hc
