// Command-line front end: build groups, run constructions, verify windows,
// search finite graphs, emit DOT and certificates.
//
// Exit codes: 0 success / consistent, 1 usage error, 2 refuted / none,
// 3 budget exceeded / undecided.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <unordered_set>
#include <sstream>

#include "hc/constructions.hpp"
#include "hc/serialize.hpp"
#include "hc/tables.hpp"

using namespace hc;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kRefuted = 2;
constexpr int kBudget = 3;

SearchBudget env_budget() {
  SearchBudget b;
  if (const char* ms = std::getenv("HC_BUDGET_MS")) b.time_limit_ms = std::atoll(ms);
  return b;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
}

GroupHandle group_from_options(const std::string& spec_path, const std::string& family,
                               const std::string& gens) {
  if (!spec_path.empty()) return parse_group_spec(slurp(spec_path));
  std::string text = "family " + family + "\ngens";
  std::istringstream is(gens);
  std::string tok;
  while (std::getline(is, tok, ',')) text += " " + tok;
  text += "\n";
  return parse_group_spec(text);
}

FiniteGraph graph_from_file(const std::string& path) {
  // vertex count on the first line, then "u v" edges
  std::istringstream is(slurp(path));
  int n = 0;
  is >> n;
  FiniteGraph g;
  for (int i = 0; i < n; ++i) g.names.push_back(std::to_string(i));
  g.adj.resize(n);
  g.labels.push_back("e");
  int u, v;
  while (is >> u >> v) g.add_edge(u, v, 0);
  return g;
}

// Subgroup generators: generator names of G, or family element tokens
// (integers: 5 / dinf: r2 / hnn: k1t0 ...) resolved through a probe handle.
std::vector<Element> subgroup_elements(const GroupHandle& G, const std::string& family,
                                       const std::string& tokens) {
  std::vector<Element> sub;
  std::string unresolved;
  std::istringstream is(tokens);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    bool found = false;
    for (const auto& g : G.gens())
      if (g.name == tok) {
        sub.push_back(g.elt);
        found = true;
        break;
      }
    if (!found) unresolved += (unresolved.empty() ? "" : ",") + tok;
  }
  if (!unresolved.empty()) {
    GroupHandle probe = group_from_options("", family, unresolved);
    for (size_t i = 0; i < probe.gens().size(); ++i) {
      // keep only the explicitly listed tokens, not appended inverses
      if (probe.gen(static_cast<int>(i)).name.back() == '\'') continue;
      sub.push_back(probe.gen(static_cast<int>(i)).elt);
    }
  }
  return sub;
}

int finish_construction(const GroupHandle& G, const CircleDescription* circle,
                        const DoubleRay* ray, const HamiltonCover* cover, const Certificate& cert,
                        int radius, bool do_verify, const std::string& out,
                        const std::string& dot_out, const std::vector<EdgeCut>& cuts = {}) {
  std::ostringstream artifact;
  if (circle) artifact << circle_to_text(G, *circle);
  if (ray) artifact << ray_to_text(G, *ray);
  if (cover) artifact << cover_to_text(G, *cover);
  artifact << cert.to_text();

  if (do_verify) {
    GraphWindow w = cayley_window(G, radius);
    VerificationReport report;
    if (circle)
      report = verify_circle(w, *circle, cuts);
    else if (ray)
      report = verify_double_ray(w, *ray);
    else
      report = verify_cover(w, *cover);
    artifact << report.to_text();
    if (!report.consistent) {
      // never write a refuted construction artifact
      std::cout << report.to_text();
      return kRefuted;
    }
  }
  emit(out, artifact.str());
  if (!dot_out.empty()) {
    GraphWindow w = cayley_window(G, radius);
    std::vector<LEdge> highlight;
    std::vector<DoubleRay> rays;
    if (ray) rays.push_back(*ray);
    if (cover)
      for (const auto& r : cover->rays) rays.push_back(r);
    if (circle && std::holds_alternative<TwoRayCircle>(*circle)) {
      rays.push_back(std::get<TwoRayCircle>(*circle).r1);
      rays.push_back(std::get<TwoRayCircle>(*circle).r2);
    }
    if (circle && std::holds_alternative<RayFamily>(*circle)) {
      // one copy per window coset of the span subgroup
      const auto& fam = std::get<RayFamily>(*circle);
      std::unordered_set<Element, ElementHash> span_ball{G.identity()};
      std::vector<Element> frontier{G.identity()};
      for (int d = 0; d < 2 * radius + 6 && !frontier.empty(); ++d) {
        std::vector<Element> next;
        for (const Element& u : frontier)
          for (const Element& e : fam.span.gens)
            for (const Element& v : {G.mul(u, e), G.mul(u, G.inv(e))})
              if (span_ball.insert(v).second) next.push_back(v);
        frontier = std::move(next);
      }
      std::vector<char> claimed(w.verts.size(), 0);
      for (int v = 0; v < static_cast<int>(w.verts.size()); ++v) {
        if (claimed[v]) continue;
        for (int u = v; u < static_cast<int>(w.verts.size()); ++u)
          if (!claimed[u] && span_ball.count(G.mul(G.inv(w.verts[v]), w.verts[u]))) claimed[u] = 1;
        rays.push_back(translate(G, fam.templ, w.verts[v]));
      }
    }
    for (const auto& r : rays) {
      std::vector<Element> line = unroll(G, r, 4 * radius + 8);
      int prev = -1;
      for (const Element& e : line) {
        int vi = w.find(e);
        if (prev >= 0 && vi >= 0)
          highlight.push_back(LEdge{std::min(prev, vi), std::max(prev, vi), 0});
        prev = vi;
      }
    }
    emit(dot_out, to_dot(w, highlight));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamilton circles in infinite Cayley graphs"};
  app.require_subcommand(1);

  std::string spec_path, family, gens, out, dot_out, graph_path;
  int radius = 8;
  bool do_verify = false;

  auto add_group_opts = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "group spec file");
    cmd->add_option("--family", family, "inline family tag");
    cmd->add_option("--gens", gens, "comma-separated generator tokens");
    cmd->add_option("--radius", radius, "window radius");
    cmd->add_option("--out", out, "artifact output path ('-' for stdout)");
    cmd->add_option("--dot", dot_out, "DOT output path");
    cmd->add_flag("--verify", do_verify, "verify on the window before writing");
  };

  auto* info = app.add_subcommand("group", "group utilities");
  auto* info_show = info->add_subcommand("info", "print the generating set");
  add_group_opts(info_show);

  auto* window = app.add_subcommand("window", "emit a Cayley window");
  add_group_opts(window);
  std::string window_format = "text";
  window->add_option("--format", window_format, "text|dot");

  auto* construct = app.add_subcommand("construct", "run a construction");
  std::string theorem;
  std::string case_opt = "i";
  int m_param = 2, rank = 2;
  int k_copies = 2;
  std::string a_token, subgroup_tokens;
  construct
      ->add_option("id", theorem,
                   "arcZ|arcDinf|dinf-circle|lift-index2|cylinder|split-zp|split-z2|"
                   "rapaport-k2|add-gen|factor-lift|cover|pak|free-genset|cf-genset|"
                   "inf-cylinder")
      ->required();
  add_group_opts(construct);
  construct->add_option("--case", case_opt, "presentation case: i|ii (or 1|2)");
  construct->add_option("--m", m_param, "presentation parameter m");
  construct->add_option("--rank", rank, "free group rank");
  construct->add_option("--added", a_token, "added generator token");
  construct->add_option("--subgroup", subgroup_tokens, "comma-separated subgroup tokens");
  construct->add_option("--k", k_copies, "copies for the product cylinder");
  std::string table_name = "Z6";
  construct->add_option("--table", table_name, "named finite table");

  auto* verify_cmd = app.add_subcommand("verify", "verify a serialized double ray");
  add_group_opts(verify_cmd);
  std::string ray_path;
  verify_cmd->add_option("--ray", ray_path, "ray file: pos/neg period token lines")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "finite Hamilton search");
  std::string oracle_kind = "cycle";
  oracle_cmd->add_option("kind", oracle_kind, "cycle|path")->required();
  oracle_cmd->add_option("--graph", graph_path, "edge-list file")->required();
  oracle_cmd->add_option("--out", out, "output path");

  auto* genset_cmd = app.add_subcommand("genset", "generating-set searches");
  std::string genset_kind = "pak";
  genset_cmd->add_option("kind", genset_kind, "pak|free|context-free")->required();
  genset_cmd->add_option("--table", table_name, "named finite table");
  genset_cmd->add_option("--rank", rank, "free group rank");
  add_group_opts(genset_cmd);
  genset_cmd->add_option("--subgroup", subgroup_tokens, "designated free subgroup tokens");

  auto* schreier_cmd = app.add_subcommand("schreier", "coset graph of a subgroup");
  add_group_opts(schreier_cmd);
  schreier_cmd->add_option("--subgroup", subgroup_tokens, "comma-separated subgroup tokens");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info_show->parsed()) {
      GroupHandle G = group_from_options(spec_path, family, gens);
      std::ostringstream os;
      os << "symbols: " << G.symbol_count() << " pairs: " << G.pair_count() << "\n";
      for (const auto& g : G.gens())
        os << g.name << " -> " << G.name_of(g.elt) << " inverse " << G.gens()[g.inv].name << "\n";
      emit(out, os.str());
      return kOk;
    }
    if (window->parsed()) {
      GroupHandle G = group_from_options(spec_path, family, gens);
      GraphWindow w = cayley_window(G, radius);
      emit(out, window_format == "dot" ? to_dot(w) : window_dump(w));
      return kOk;
    }
    if (oracle_cmd->parsed()) {
      FiniteGraph g = graph_from_file(graph_path);
      SearchResult r =
          oracle_kind == "cycle" ? hamilton_cycle(g, env_budget()) : hamilton_path(g, env_budget());
      if (r.outcome == SearchOutcome::BudgetExceeded) {
        std::cout << "budget exceeded\n";
        return kBudget;
      }
      if (!r.found()) {
        std::cout << "none\n";
        return kRefuted;
      }
      std::ostringstream os;
      for (size_t i = 0; i < r.seq.size(); ++i) os << (i ? " " : "") << r.seq[i];
      os << "\n";
      emit(out, os.str());
      return kOk;
    }
    if (genset_cmd->parsed()) {
      if (genset_kind == "pak") {
        PakResult r = pak_genset(named_table(table_name), env_budget());
        std::ostringstream os;
        os << r.cert.to_text() << "generators:";
        for (int g : r.gens) os << " g" << g;
        os << "\n";
        emit(out, os.str());
        return kOk;
      }
      if (genset_kind == "free") {
        FreeGensetResult r = free_group_genset(rank);
        emit(out, r.cert.to_text());
        return kOk;
      }
      if (genset_kind == "context-free") {
        GroupHandle G = group_from_options(spec_path, family, gens);
        ContextFreeResult r =
            context_free_genset(G, SubgroupSpec::generated_by(subgroup_elements(G, family, subgroup_tokens)));
        std::ostringstream os;
        os << r.cert.to_text();
        os << "branch: " << r.report.branch << "\n";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4f", r.report.branch_bound);
        os << "branch-bound: " << buf << "\n";
        std::snprintf(buf, sizeof buf, "%.4f", r.report.theorem_bound);
        os << "theorem-bound: " << buf << "\n";
        if (r.circle) {
          GraphWindow w = cayley_window(r.group, radius);
          VerificationReport rep = verify_circle(w, r.circle->circle, {});
          os << rep.to_text();
          if (!rep.consistent) {
            std::cout << os.str();
            return kRefuted;
          }
        }
        emit(out, os.str());
        return kOk;
      }
      std::cerr << "unknown genset kind\n";
      return kUsage;
    }
    if (schreier_cmd->parsed()) {
      GroupHandle G = group_from_options(spec_path, family, gens);
      FiniteGraph fg = schreier_graph(G, SubgroupSpec::generated_by(subgroup_elements(G, family, subgroup_tokens)));
      std::ostringstream os;
      os << "vertices " << fg.order() << "\n";
      for (const LEdge& e : fg.edges) os << fg.names[e.u] << " -- " << fg.names[e.v] << "\n";
      emit(out, os.str());
      return kOk;
    }
    if (verify_cmd->parsed()) {
      GroupHandle G = group_from_options(spec_path, family, gens);
      std::istringstream is(slurp(ray_path));
      auto parse_line = [&](GenWord& dst) {
        std::string line;
        if (!std::getline(is, line)) fail(Err::ParseError, "ray file needs two lines");
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
          bool found = false;
          for (int i = 0; i < static_cast<int>(G.gens().size()); ++i)
            if (G.gen(i).name == tok) {
              dst.push_back(i);
              found = true;
              break;
            }
          if (!found) fail(Err::ParseError, "unknown generator " + tok);
        }
      };
      DoubleRay r;
      r.base = G.identity();
      parse_line(r.pos.period);
      parse_line(r.neg.period);
      GraphWindow w = cayley_window(G, radius);
      VerificationReport rep = verify_double_ray(w, r);
      emit(out, rep.to_text());
      return rep.consistent ? kOk : kRefuted;
    }
    if (construct->parsed()) {
      if (theorem == "arcZ") {
        GroupHandle G = group_from_options(spec_path, family.empty() ? "integers" : family, gens);
        RayResult r = double_ray_Z(G);
        return finish_construction(G, nullptr, &r.ray, nullptr, r.cert, radius, do_verify, out,
                                   dot_out);
      }
      if (theorem == "arcDinf") {
        GroupHandle G = group_from_options(spec_path, family.empty() ? "dinf" : family, gens);
        RayResult r = double_ray_Dinf(G);
        return finish_construction(G, nullptr, &r.ray, nullptr, r.cert, radius, do_verify, out,
                                   dot_out);
      }
      if (theorem == "dinf-circle") {
        GroupHandle G = group_from_options(spec_path, family.empty() ? "dinf" : family, gens);
        CircleResult r = circle_Dinf(G);
        return finish_construction(G, &r.circle, nullptr, nullptr, r.cert, radius, do_verify, out,
                                   dot_out);
      }
      if (theorem == "lift-index2") {
        GroupHandle G = group_from_options(spec_path, family, gens);
        SubgroupSpec H = index_two_subgroup(G);
        RayResult r = lift_index2_auto_ray(G, H);
        return finish_construction(G, nullptr, &r.ray, nullptr, r.cert, radius, do_verify, out,
                                   dot_out);
      }
      if (theorem == "split-zp") {
        GroupHandle G = group_from_options(spec_path, family, gens);
        CircleResult r = circle_split_Zp(G);
        return finish_construction(G, &r.circle, nullptr, nullptr, r.cert, radius, do_verify, out,
                                   dot_out);
      }
      if (theorem == "split-z2") {
        GroupHandle G = group_from_options(spec_path, family, gens);
        CircleResult r = circle_split_Z2(G);
        return finish_construction(G, &r.circle, nullptr, nullptr, r.cert, radius, do_verify, out,
                                   dot_out);
      }
      if (theorem == "rapaport-k2") {
        int case_no = (case_opt == "ii" || case_opt == "2") ? 2 : 1;
        RapaportResult r = rapaport_k2_circle(case_no, m_param);
        std::vector<EdgeCut> cuts;
        if (std::holds_alternative<RayFamily>(r.circle.circle)) {
          GraphWindow wc = cayley_window(r.group, radius);
          CutsHint hint;
          hint.two_ended = false;
          hint.label = case_no == 1 ? 2 : 1;
          cuts = defining_cut_sequence(wc, hint);
        }
        return finish_construction(r.group, &r.circle.circle, nullptr, nullptr, r.circle.cert,
                                   radius, do_verify, out, dot_out, cuts);
      }
      if (theorem == "add-gen") {
        GroupHandle G = group_from_options(spec_path, family, gens);
        GroupHandle probe = group_from_options("", family, a_token);
        AddGenResult r = add_generator_circle(G, probe.gen(0).elt);
        return finish_construction(r.extended, &r.circle, nullptr, nullptr, r.cert, radius,
                                   do_verify, out, dot_out);
      }
      if (theorem == "factor-lift" || theorem == "cover") {
        GroupHandle G = group_from_options(spec_path, family, gens);
        SubgroupSpec H = SubgroupSpec::generated_by(subgroup_elements(G, family, subgroup_tokens));
        auto cycle = find_schreier_cycle(G, H);
        if (!cycle) {
          std::cout << "no coset cycle with a generating label product\n";
          return kRefuted;
        }
        if (theorem == "factor-lift") {
          FactorLiftResult r = factor_group_lift(G, H, *cycle);
          if (std::holds_alternative<DoubleRay>(r.object)) {
            DoubleRay dr = std::get<DoubleRay>(r.object);
            return finish_construction(G, nullptr, &dr, nullptr, r.cert, radius, do_verify, out,
                                       dot_out);
          }
          CircleDescription fc = std::get<FiniteCycle>(r.object);
          return finish_construction(G, &fc, nullptr, nullptr, r.cert, radius, do_verify, out,
                                     dot_out);
        }
        if (a_token.empty()) fail(Err::BadParameters, "cover needs --added for the fiber generator");
        GroupHandle probe = group_from_options("", family, a_token);
        CoverResult r = hamilton_cover_from_factor(G, H, probe.gen(0).elt, *cycle);
        if (std::holds_alternative<DoubleRay>(r.object)) {
          DoubleRay dr = std::get<DoubleRay>(r.object);
          return finish_construction(G, nullptr, &dr, nullptr, r.cert, radius, do_verify, out,
                                     dot_out);
        }
        if (std::holds_alternative<CircleDescription>(r.object)) {
          CircleDescription c = std::get<CircleDescription>(r.object);
          return finish_construction(G, &c, nullptr, nullptr, r.cert, radius, do_verify, out,
                                     dot_out);
        }
        HamiltonCover hc = std::get<HamiltonCover>(r.object);
        return finish_construction(G, nullptr, nullptr, &hc, r.cert, radius, do_verify, out,
                                   dot_out);
      }
      if (theorem == "cylinder") {
        // core-coset cylinder along the quotient ray of an amalgam or HNN
        // family, without the splitting hypotheses
        GroupHandle G = group_from_options(spec_path, family, gens);
        CircleResult r = circle_split_Zp(G);
        r.cert.theorem_id = "cylinder";
        return finish_construction(G, &r.circle, nullptr, nullptr, r.cert, radius, do_verify, out,
                                   dot_out);
      }
      if (theorem == "inf-cylinder") {
        GroupHandle G = group_from_options(spec_path, family, gens);
        GraphWindow w = cayley_window(G, radius);
        InfCylinderInput in;
        in.base = &w;
        in.k = k_copies;
        // greedy path decomposition stands in for the base circle trace
        std::vector<char> used(w.verts.size(), 0);
        for (int v = 0; v < static_cast<int>(w.verts.size()); ++v) {
          if (used[v]) continue;
          std::vector<int> path{v};
          used[v] = 1;
          bool grew = true;
          while (grew) {
            grew = false;
            for (auto [u, ei] : w.adj[path.back()])
              if (!used[u]) {
                used[u] = 1;
                path.push_back(u);
                grew = true;
                break;
              }
          }
          in.base_paths.push_back(path);
        }
        WindowRaySet ray_set = inf_cylinder_circle(in);
        std::ostringstream os;
        os << "paths: " << ray_set.paths.size() << "\ncovers-all: " << ray_set.covers_all
           << "\ndisjoint: " << ray_set.disjoint << "\ndegrees-ok: " << ray_set.degrees_ok << "\n"
           << ray_set.note << "\n";
        emit(out, os.str());
        return ray_set.covers_all && ray_set.disjoint && ray_set.degrees_ok ? kOk : kRefuted;
      }
      if (theorem == "cf-genset") {
        GroupHandle G = group_from_options(spec_path, family, gens);
        ContextFreeResult r =
            context_free_genset(G, SubgroupSpec::generated_by(subgroup_elements(G, family, subgroup_tokens)));
        std::ostringstream os;
        os << r.cert.to_text() << "branch: " << r.report.branch << "\n";
        emit(out, os.str());
        return kOk;
      }
      if (theorem == "pak") {
        PakResult r = pak_genset(named_table(table_name));
        emit(out, r.cert.to_text());
        return kOk;
      }
      if (theorem == "free-genset") {
        FreeGensetResult r = free_group_genset(rank);
        emit(out, r.cert.to_text());
        return kOk;
      }
      std::cerr << "unknown construction id: " << theorem << "\n";
      return kUsage;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case Err::BudgetExceeded:
      case Err::Undecided:
        return kBudget;
      case Err::ParseError:
      case Err::BadParameters:
        return kUsage;
      default:
        return kRefuted;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
