#include "recon/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "recon/deck.hpp"
#include "recon/errors.hpp"
#include "recon/recognizer.hpp"

namespace recon::cli {
namespace {

struct RunConfig {
  std::string graph;
  std::string input;
  std::string input2;
  std::string output;
  std::optional<int> k;
  std::optional<int> l;
  std::optional<int> n;
  std::optional<int> j;
  std::uint64_t cap = SearchOptions{}.cap;
  bool status_verdict = false;
  bool forests = false;
  int min_girth = 0;
  bool restricted = false;
  bool force = false;
  int jobs = 1;
  std::string family;
};

int default_jobs() {
  if (const char* env = std::getenv("RECON_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error("cannot read " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

Deck load_deck(const std::string& path, std::istream& in) { return read_deck_string(read_all(path, in)); }

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : target_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw Error("cannot write " + path);
      target_ = &file_;
    }
  }
  std::ostream& stream() { return *target_; }

 private:
  std::ofstream file_;
  std::ostream* target_;
};

std::vector<Graph> load_graphs(const RunConfig& c, std::istream& in) {
  if (!c.graph.empty()) return {parse_graph6(c.graph)};
  std::istringstream text(read_all(c.input, in));
  auto graphs = read_graph6_stream(text);
  if (graphs.empty()) throw Error("no graph given");
  return graphs;
}

int cmd_deck(const RunConfig& c, std::istream& in, std::ostream& out) {
  if (c.k.has_value() == c.l.has_value()) throw Error("give exactly one of --k and --l");
  Output sink(c.output, out);
  bool first = true;
  for (const Graph& g : load_graphs(c, in)) {
    const int k = c.k ? *c.k : g.order() - *c.l;
    if (!first) sink.stream() << '\n';
    first = false;
    write_deck(sink.stream(), compute_deck(g, k));
  }
  return 0;
}

int cmd_subdeck(const RunConfig& c, std::istream& in, std::ostream& out) {
  Output sink(c.output, out);
  write_deck(sink.stream(), subdeck(load_deck(c.input, in), *c.j));
  return 0;
}

int cmd_compare(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Deck a = load_deck(c.input, in);
  const Deck b = load_deck(c.input2, in);
  Output sink(c.output, out);
  auto& o = sink.stream();
  if (deck_equal(a, b)) {
    o << "equal\n";
    return 0;
  }
  o << "unequal\n";
  if (a.card_order != b.card_order) {
    o << "card_order\t" << a.card_order << '\t' << b.card_order << '\n';
    return 0;
  }
  std::map<CanonicalCode, std::pair<std::uint64_t, std::uint64_t>> diff;
  for (const auto& [code, m] : a.cards) diff[code].first = m;
  for (const auto& [code, m] : b.cards) diff[code].second = m;
  for (const auto& [code, pair] : diff) {
    if (pair.first != pair.second) o << code.bytes << '\t' << pair.first << '\t' << pair.second << '\n';
  }
  return 0;
}

int cmd_recognize(const RunConfig& c, std::istream& in, std::ostream& out) {
  const RecognitionReport report = recognize(load_deck(c.input, in), {c.cap});
  Output sink(c.output, out);
  sink.stream() << format_report(report);
  return c.status_verdict && report.verdict.kind == VerdictKind::Cyclic ? 1 : 0;
}

int cmd_reconstruct(const RunConfig& c, std::istream& in, std::ostream& out) {
  GraphFilter filter;
  if (c.forests) filter = filters::forests();
  if (c.min_girth > 0) {
    auto girth_filter = filters::min_girth(c.min_girth);
    filter = filter ? GraphFilter([=](const Graph& g) { return filter(g) && girth_filter(g); })
                    : girth_filter;
  }
  const ReconstructionSearchResult r = reconstruct_all(load_deck(c.input, in), filter, c.cap);
  Output sink(c.output, out);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  sink.stream() << "matches=" << r.matches.size() << " acyclic=" << yes(r.acyclic_found)
                << " cyclic=" << yes(r.cyclic_found) << " exhausted=" << yes(r.exhausted) << '\n';
  for (const auto& m : r.matches) sink.stream() << m.bytes << '\n';
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const int n = *c.n;
  const int l = *c.l;
  if (n - l < 2 || l < 0) throw Error("verify needs n - l >= 2");
  const int limit = c.restricted ? 12 : 9;
  if (n > limit && !c.force) {
    throw Error("verify beyond n = " + std::to_string(limit) + " needs --force");
  }
  const std::vector<Graph> source = c.restricted ? recognizability_source(n, l) : enumerate_graphs(n);
  Output sink(c.output, out);
  sink.stream() << format_summary(verify_recognizability(n, l, source, c.jobs));
  return 0;
}

int cmd_pairs(const RunConfig& c, std::ostream& out) {
  Output sink(c.output, out);
  bool any = false;
  for (const SameDeckPair& p : same_deck_pairs(*c.l)) {
    if (!c.family.empty() && c.family != p.name) continue;
    any = true;
    sink.stream() << p.name << '\t' << p.card_order << '\t' << write_graph6(p.first) << '\t'
                  << write_graph6(p.second) << '\n';
  }
  if (!any) throw Error("no pair family matches");
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decks of small graphs and acyclicity recognition", "recon"};
  app.require_subcommand(1);
  RunConfig c;
  c.jobs = default_jobs();

  auto* deck = app.add_subcommand("deck", "graph6 -> deck file");
  deck->add_option("graph", c.graph, "graph6 text");
  deck->add_option("--input,-i", c.input, "file of graph6 lines ('-' for stdin)");
  deck->add_option("--k", c.k, "card order");
  deck->add_option("--l", c.l, "number of deleted vertices");
  deck->add_option("--output,-o", c.output);

  auto* sub = app.add_subcommand("subdeck", "deck file -> smaller deck");
  sub->add_option("deck", c.input)->required();
  sub->add_option("--j", c.j)->required();
  sub->add_option("--output,-o", c.output);

  auto* compare = app.add_subcommand("compare", "compare two deck files");
  compare->add_option("first", c.input)->required();
  compare->add_option("second", c.input2)->required();
  compare->add_option("--output,-o", c.output);

  auto* recognize_cmd = app.add_subcommand("recognize", "deck file -> acyclicity report");
  recognize_cmd->add_option("deck", c.input)->required();
  recognize_cmd->add_option("--cap", c.cap, "search node cap");
  recognize_cmd->add_flag("--status-verdict", c.status_verdict, "exit 1 on a Cyclic verdict");
  recognize_cmd->add_option("--output,-o", c.output);

  auto* reconstruct = app.add_subcommand("reconstruct", "deck file -> all reconstructions");
  reconstruct->add_option("deck", c.input)->required();
  reconstruct->add_flag("--forests", c.forests, "only forests");
  reconstruct->add_option("--min-girth", c.min_girth, "only graphs of at least this girth");
  reconstruct->add_option("--cap", c.cap, "search node cap");
  reconstruct->add_option("--output,-o", c.output);

  auto* verify = app.add_subcommand("verify", "exhaustive acyclicity-recognizability check");
  verify->add_option("--n", c.n)->required();
  verify->add_option("--l", c.l)->required();
  verify->add_flag("--restricted", c.restricted, "only forests and graphs of girth > n-l");
  verify->add_flag("--force", c.force, "allow larger n");
  verify->add_option("--jobs,-j", c.jobs, "worker threads (default $RECON_JOBS or 1)");
  verify->add_option("--output,-o", c.output);

  auto* pairs = app.add_subcommand("pairs", "emit same-deck graph pairs as graph6");
  pairs->add_option("--l", c.l)->required();
  pairs->add_option("--family", c.family, "path-cycle, nydl, path-split, exception, cycle-split");
  pairs->add_option("--output,-o", c.output);

  std::vector<const char*> argv{"recon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (deck->parsed()) return cmd_deck(c, in, out);
    if (sub->parsed()) return cmd_subdeck(c, in, out);
    if (compare->parsed()) return cmd_compare(c, in, out);
    if (recognize_cmd->parsed()) return cmd_recognize(c, in, out);
    if (reconstruct->parsed()) return cmd_reconstruct(c, in, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (pairs->parsed()) return cmd_pairs(c, out);
  } catch (const std::exception& e) {
    err << "recon: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace recon::cli
