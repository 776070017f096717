#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fbc/bracketing.hpp"
#include "fbc/growth.hpp"
#include "fbc/powers.hpp"
#include "fbc/random.hpp"
#include "fbc/spec_io.hpp"
#include "fbc/stack.hpp"
#include "fbc/torus.hpp"

namespace fbc::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Options shared by several subcommands; which ones apply depends on the
// subcommand.
struct RunConfig {
  std::string phi_path;
  std::string graph_path;
  std::string word;
  std::string words_file;
  std::string path;
  std::string emit;
  std::string output;
  std::string mode = "cyclic";
  std::string k_text;
  std::size_t steps = 4;
  // Defaults depend on the growth mode: table 10, oracle 6/8, corpus 30/12.
  std::optional<std::size_t> horizon;
  std::optional<std::size_t> max_len;
  std::size_t depth = kDefaultBccDepth;
  std::size_t p = 2;
  std::size_t count = 100;
  std::size_t length = 40;
  double t_density = 0.3;
  std::optional<std::uint64_t> seed;
  bool oracle = false;
  bool brinkmann = false;
};

std::uint64_t work_cap() {
  if (const char* env = std::getenv("TORUS_WORK_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("TORUS_WORK_CAP must be a non-negative integer");
    }
  }
  return kDefaultWorkCap;
}

Automorphism need_phi(const RunConfig& c) {
  if (c.phi_path.empty()) throw UsageError("--phi is required");
  return load_phi(c.phi_path);
}

GraphMap need_map(const RunConfig& c) {
  if (!c.phi_path.empty() && !c.graph_path.empty())
    throw UsageError("give exactly one of --phi and --graph");
  if (!c.graph_path.empty()) return load_graph_map(c.graph_path);
  if (!c.phi_path.empty()) return rose_of(load_phi(c.phi_path));
  throw UsageError("one of --phi or --graph is required");
}

std::vector<std::string> input_words(const RunConfig& c) {
  if (c.word.empty() == c.words_file.empty())
    throw UsageError("give exactly one of --word and --words-file");
  if (!c.word.empty()) return {c.word};
  std::vector<std::string> out;
  std::istringstream in(read_file(c.words_file));
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().starts_with("#")) continue;
    out.push_back(line);
  }
  return out;
}

void check_emit(const std::string& emit,
                std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (emit == a) return;
  throw UsageError("unsupported --emit '" + emit + "'");
}

GrowthMode parse_mode(const std::string& m) {
  if (m == "based") return GrowthMode::based;
  if (m == "cyclic") return GrowthMode::cyclic;
  throw UsageError("--mode must be based or cyclic");
}

const char* mode_name(GrowthMode m) {
  return m == GrowthMode::based ? "based" : "cyclic";
}

json lengths_json(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

// ---- check -----------------------------------------------------------------

std::string cmd_check(const RunConfig& c) {
  check_emit(c.emit.empty() ? "text" : c.emit, {"text", "json"});
  auto phi = need_phi(c);
  auto words = input_words(c);
  std::ostringstream out;
  json results = json::array();
  for (const auto& text : words) {
    auto w = parse_group_word(phi.alphabet(), text);
    auto run = solve(w, phi);
    auto nf = format_normal_form(phi.alphabet(), run.result);
    if (c.emit == "json") {
      results.push_back({{"word", format_group_word(phi.alphabet(), w)},
                         {"normal_form", nf},
                         {"t_exponent", run.result.t_exponent},
                         {"tail", phi.alphabet().format(run.result.tail)},
                         {"identity", run.result.is_identity()},
                         {"peak_tail", run.peak_tail}});
    } else {
      out << nf << "\n";
    }
  }
  if (c.emit == "json") out << json{{"results", results}}.dump(2) << "\n";
  return out.str();
}

// ---- bracket ---------------------------------------------------------------

json brackets_json(const Alphabet& a, const Bracketing& b) {
  json arr = json::array();
  for (const auto& x : b.brackets)
    arr.push_back({{"open", x.open},
                   {"close", x.close},
                   {"content", a.format(x.content_value)}});
  return arr;
}

json bracket_one(const Automorphism& phi, const std::string& text,
                 bool oracle) {
  auto w = parse_group_word(phi.alphabet(), text);
  auto b = canonical_bracketing(w, phi);
  auto report = validate(b, phi);
  json j;
  j["word"] = format_group_word(phi.alphabet(), w);
  j["brackets"] = brackets_json(phi.alphabet(), b);
  j["ratio"] = w.empty() ? std::string("0") : to_string(content_bound_ratio(b));
  j["valid"] = report.ok();
  if (oracle) {
    auto o = optimal_bracketing_oracle(w, phi);
    j["oracle"] = {{"brackets", brackets_json(phi.alphabet(), o.best)},
                   {"ratio", to_string(o.ratio)},
                   {"matchings", o.matchings}};
  }
  return j;
}

std::string cmd_bracket(const RunConfig& c) {
  check_emit(c.emit.empty() ? "json" : c.emit, {"json"});
  auto phi = need_phi(c);
  auto words = input_words(c);
  json doc;
  if (!c.word.empty()) {
    doc = bracket_one(phi, words.front(), c.oracle);
  } else {
    doc["results"] = json::array();
    for (const auto& w : words)
      doc["results"].push_back(bracket_one(phi, w, c.oracle));
  }
  return doc.dump(2) + "\n";
}

// ---- stack -----------------------------------------------------------------

std::vector<EdgePath> parse_segments(const GraphMap& f,
                                     const std::string& text) {
  const auto& g = f.graph();
  std::vector<EdgePath> segs;
  std::size_t at = SIZE_MAX;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto bar = text.find('|', start);
    auto piece = text.substr(start, bar == std::string::npos
                                        ? std::string::npos
                                        : bar - start);
    auto raw = g.edge_alphabet().parse_raw(piece);
    if (raw.empty()) throw PreconditionError("empty segment in --path");
    if (at == SIZE_MAX) at = g.origin(raw.front());
    check_composable(g, at, raw);
    Word w(raw);
    if (w.size() != raw.size())
      throw PreconditionError("segment '" + piece + "' is not tight");
    segs.push_back({at, w});
    at = path_terminus(g, segs.back());
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return segs;
}

std::string stack_json(const GraphMap& f, const StackDiagram& d,
                       std::size_t steps) {
  const auto& names = f.graph().edge_alphabet();
  json j;
  j["steps"] = steps;
  j["colours"] = d.colour_count();
  j["lipschitz"] = d.lipschitz();
  json edges = json::array();
  for (const auto& e : d.edges()) {
    edges.push_back({{"id", e.id},
                     {"label", names.format(e.label)},
                     {"colour", e.colour},
                     {"ancestor", e.ancestor ? json(*e.ancestor) : json(nullptr)},
                     {"layer", e.layer},
                     {"cancelled", e.cancelled}});
  }
  j["edges"] = edges;
  json rows = json::array();
  for (std::size_t k = 0; k < d.rows().size(); ++k) {
    const auto& r = d.rows()[k];
    json log = json::array();
    for (const auto& p : r.log)
      log.push_back({{"left", p.left},
                     {"right", p.right},
                     {"left_pos", p.left_pos},
                     {"right_pos", p.right_pos},
                     {"phase", p.phase == CancelPhase::within_colour
                                   ? "within_colour"
                                   : "across_colours"},
                     {"same_colour", p.same_colour}});
    json intervals = json::array();
    for (const auto& ci : colour_intervals(d, k))
      intervals.push_back(
          {{"colour", ci.colour}, {"first", ci.first}, {"last", ci.last}});
    json dying = json::array();
    for (auto [a, b] : dying_intervals(d, k)) dying.push_back({a, b});
    rows.push_back({{"bottom", r.bottom},
                    {"naive_top", r.naive_top},
                    {"top", r.top},
                    {"bottom_label", names.format(Word(d.layer_labels(k)))},
                    {"top_label", names.format(Word(d.layer_labels(k + 1)))},
                    {"colour_intervals", intervals},
                    {"dying_intervals", dying},
                    {"log", log}});
  }
  j["rows"] = rows;
  auto cl = corridor_lengths(d);
  j["corridor_lengths"] = lengths_json(cl.per_row);
  j["max_corridor_length"] = cl.max;
  return j.dump(2) + "\n";
}

std::string stack_dot(const GraphMap& f, const StackDiagram& d) {
  static const char* palette[] = {"#fbb4ae", "#b3cde3", "#ccebc5", "#decbe4",
                                  "#fed9a6", "#ffffcc", "#e5d8bd", "#fddaec"};
  const auto& names = f.graph().edge_alphabet();
  std::ostringstream o;
  o << "digraph stack {\n  rankdir=BT;\n  node [shape=box, style=filled];\n";
  for (std::size_t k = 0; k < d.layer_count(); ++k) {
    o << "  subgraph layer" << k << " {\n    rank=same;\n";
    for (auto id : d.layer(k)) {
      const auto& e = d.edge(id);
      o << "    e" << id << " [label=\"" << names.format(e.label)
        << "\", fillcolor=\"" << palette[e.colour % 8] << "\"];\n";
    }
    const auto& ids = d.layer(k);
    for (std::size_t i = 1; i < ids.size(); ++i)
      o << "    e" << ids[i - 1] << " -> e" << ids[i]
        << " [style=invis];\n";
    o << "  }\n";
  }
  for (const auto& e : d.edges())
    if (e.ancestor && !e.cancelled)
      o << "  e" << *e.ancestor << " -> e" << e.id << " [color=gray];\n";
  for (std::size_t k = 0; k < d.rows().size(); ++k) {
    for (const auto& p : d.rows()[k].log) {
      const auto& a = d.edge(p.left);
      const auto& b = d.edge(p.right);
      o << "  c" << p.left << " [label=\"" << names.format(a.label)
        << "\", shape=plaintext, style=\"\"];\n";
      o << "  c" << p.right << " [label=\"" << names.format(b.label)
        << "\", shape=plaintext, style=\"\"];\n";
      o << "  c" << p.left << " -> c" << p.right
        << " [dir=none, color=red, constraint=false, label=\"row " << k
        << "\"];\n";
    }
  }
  o << "}\n";
  return o.str();
}

std::string cmd_stack(const RunConfig& c) {
  const std::string emit = c.emit.empty() ? "json" : c.emit;
  check_emit(emit, {"json", "dot", "tsv"});
  if (c.path.empty()) throw UsageError("--path is required");
  auto f = need_map(c);
  auto segs = parse_segments(f, c.path);
  auto d = build_stack(f, segs, c.steps);
  if (emit == "dot") return stack_dot(f, d);
  if (emit == "tsv") {
    std::ostringstream o;
    o << "row\tbottom_len\ttop_len\tcancelled_pairs\tcolours\n";
    for (std::size_t k = 0; k < d.rows().size(); ++k) {
      const auto& r = d.rows()[k];
      o << k << "\t" << r.bottom.size() << "\t" << r.top.size() << "\t"
        << r.log.size() << "\t" << colour_intervals(d, k).size() << "\n";
    }
    return o.str();
  }
  return stack_json(f, d, c.steps);
}

// ---- growth ----------------------------------------------------------------

std::string cmd_growth(const RunConfig& c) {
  auto phi = need_phi(c);
  auto mode = parse_mode(c.mode);
  int selected = (!c.word.empty()) + c.oracle + c.brinkmann;
  if (selected != 1)
    throw UsageError("give exactly one of --word, --oracle, --brinkmann");

  if (c.oracle) {
    const std::string emit = c.emit.empty() ? "text" : c.emit;
    check_emit(emit, {"text", "json"});
    const std::size_t max_len = c.max_len.value_or(6);
    const std::size_t horizon = c.horizon.value_or(8);
    auto k = k_exhaustive(phi, max_len, horizon, mode, work_cap());
    if (emit == "text") return to_string(k) + "\n";
    json j{{"k_exhaustive", to_string(k)},
           {"max_len", max_len},
           {"horizon", horizon},
           {"mode", mode_name(mode)}};
    return j.dump(2) + "\n";
  }

  if (c.brinkmann) {
    const std::string emit = c.emit.empty() ? "json" : c.emit;
    check_emit(emit, {"json"});
    if (!c.seed) throw UsageError("--seed is required for --brinkmann");
    if (c.k_text.empty()) throw UsageError("--K is required for --brinkmann");
    Rational K;
    try {
      K = parse_rational(c.k_text);
    } catch (const std::exception&) {
      throw UsageError("--K must be a rational like 55/28");
    }
    CorpusSpec spec{*c.seed, c.count, c.max_len.value_or(30),
                    c.horizon.value_or(12)};
    auto r = check_brinkmann(phi, K, spec, mode);
    json wit = json::array();
    for (const auto& v : r.witnesses)
      wit.push_back({{"corpus_index", v.corpus_index},
                     {"word", phi.alphabet().format(v.word)},
                     {"i", v.i},
                     {"N", v.horizon},
                     {"lhs", v.lhs},
                     {"endpoints", v.endpoints}});
    json j{{"K", to_string(r.K)},
           {"mode", mode_name(mode)},
           {"seed", *c.seed},
           {"words_checked", r.words_checked},
           {"inequalities_checked", r.inequalities_checked},
           {"violations", r.violation_count},
           {"witnesses", wit}};
    return j.dump(2) + "\n";
  }

  const std::string emit = c.emit.empty() ? "tsv" : c.emit;
  check_emit(emit, {"tsv", "json"});
  auto w = phi.alphabet().parse(c.word);
  auto t = growth_table(phi, w, c.horizon.value_or(10), mode);
  if (emit == "tsv") {
    std::ostringstream o;
    o << "i\tbased_len\tcyclic_len\n";
    for (std::size_t i = 0; i <= t.horizon; ++i)
      o << i << "\t" << t.based_lengths[i] << "\t" << t.cyclic_lengths[i]
        << "\n";
    return o.str();
  }
  json j{{"word", phi.alphabet().format(w)},
         {"horizon", t.horizon},
         {"mode", mode_name(mode)},
         {"based_lengths", lengths_json(t.based_lengths)},
         {"cyclic_lengths", lengths_json(t.cyclic_lengths)},
         {"k_emp", to_string(t.k_emp)}};
  return j.dump(2) + "\n";
}

// ---- power -----------------------------------------------------------------

std::string cmd_power(const RunConfig& c) {
  check_emit(c.emit.empty() ? "json" : c.emit, {"json"});
  auto phi = need_phi(c);
  if (c.word.empty()) throw UsageError("--word is required");
  const auto& a = phi.alphabet();
  auto w = parse_group_word(a, c.word);
  auto r = rewrite_power(w, phi, c.p);
  auto d = lattice_decompose(w, c.p);
  json pieces = json::array();
  for (const auto& piece : d.pieces)
    pieces.push_back(
        {{"kind", to_string(piece.kind)},
         {"begin", piece.begin},
         {"end", piece.end},
         {"start_height", piece.start_height},
         {"end_height", piece.end_height},
         {"subword", format_group_word(a, w.slice(piece.begin, piece.end))}});
  json j{{"word", format_group_word(a, w)},
         {"p", c.p},
         {"pieces", pieces},
         {"tilde", format_group_word(a, r.tilde)},
         {"result", format_group_word(a, r.result, "tau")},
         {"lengths",
          {{"original", w.size()},
           {"tilde", r.tilde.size()},
           {"result", r.result.size()},
           {"bound", r.length_bound}}},
         {"lipschitz", r.lipschitz},
         {"corridor_bound", r.corridor_bound},
         {"verified",
          {{"equal_in_group", r.equal_in_group}, {"length_bound", r.length_ok}}}};
  return j.dump(2) + "\n";
}

// ---- bcc -------------------------------------------------------------------

std::string cmd_bcc(const RunConfig& c) {
  const std::string emit = c.emit.empty() ? "json" : c.emit;
  check_emit(emit, {"json", "text"});
  if (c.depth == 0) throw UsageError("--depth must be at least 1");
  auto f = need_map(c);
  // Paths of length <= depth from every oriented edge.
  double paths = 0;
  const double branching = 2.0 * static_cast<double>(f.graph().edge_count());
  for (std::size_t k = 0, layer = 1; k < c.depth; ++k) {
    paths += branching * static_cast<double>(layer);
    layer = static_cast<std::size_t>(std::max(1.0, branching - 1)) * layer;
  }
  if (paths > static_cast<double>(work_cap()))
    throw WorkCapExceeded("bcc enumeration at depth " +
                          std::to_string(c.depth) + " exceeds the work cap");
  auto est = estimate_bcc(f, c.depth);
  if (emit == "text") return std::to_string(est.value()) + "\n";
  json j{{"depth", c.depth},
         {"by_depth", lengths_json(est.by_depth)},
         {"value", est.value()},
         {"stabilized", est.stabilized()},
         {"stabilized_at",
          est.stabilized_at ? json(*est.stabilized_at) : json(nullptr)}};
  return j.dump(2) + "\n";
}

// ---- corpus ----------------------------------------------------------------

std::string cmd_corpus(const RunConfig& c) {
  const std::string emit = c.emit.empty() ? "text" : c.emit;
  check_emit(emit, {"text", "json"});
  if (!c.seed) throw UsageError("--seed is required for corpus");
  if (c.t_density < 0 || c.t_density > 1)
    throw UsageError("--t-density must lie in [0, 1]");
  auto phi = need_phi(c);
  Rng seeds(*c.seed);
  std::ostringstream o;
  json words = json::array();
  for (std::size_t i = 0; i < c.count; ++i) {
    auto w = random_null_word(phi, seeds.next(), {c.length, c.t_density});
    auto text = format_group_word(phi.alphabet(), w);
    if (emit == "json")
      words.push_back(text);
    else
      o << text << "\n";
  }
  if (emit == "json")
    o << json{{"seed", *c.seed}, {"count", c.count}, {"words", words}}.dump(2)
      << "\n";
  return o.str();
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw SpecError("cannot write '" + tmp.string() + "'");
    f << content;
    if (!f) throw SpecError("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig c;
  CLI::App app{"Computations in free-by-cyclic groups F x|_phi Z", "torus"};
  app.require_subcommand(1);

  auto add_phi = [&](CLI::App* s) {
    s->add_option("--phi", c.phi_path, "Automorphism spec (JSON)");
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("--emit", c.emit, "Output format");
    s->add_option("--output,-o", c.output, "Write output to this file");
  };

  auto* check = app.add_subcommand("check", "Normal form t^s . u of a word");
  add_phi(check);
  check->add_option("--word", c.word, "Word over generators and t");
  check->add_option("--words-file", c.words_file, "One word per line");
  add_common(check);

  auto* bracket = app.add_subcommand("bracket", "t-complete bracketing");
  add_phi(bracket);
  bracket->add_option("--word", c.word);
  bracket->add_option("--words-file", c.words_file);
  bracket->add_flag("--oracle", c.oracle, "Also run the exhaustive oracle");
  add_common(bracket);

  auto* stack = app.add_subcommand("stack", "Corridor stack diagram");
  add_phi(stack);
  stack->add_option("--graph", c.graph_path, "Graph-map spec (JSON)");
  stack->add_option("--path", c.path, "Coloured path, segments split by |");
  stack->add_option("--steps", c.steps, "Index l of the last corridor");
  add_common(stack);

  auto* growth = app.add_subcommand("growth", "Orbit growth and Brinkmann checks");
  add_phi(growth);
  growth->add_option("--word", c.word);
  growth->add_option("--horizon", c.horizon, "N");
  growth->add_option("--mode", c.mode, "based or cyclic");
  growth->add_flag("--oracle", c.oracle, "Exhaustive k over short words");
  growth->add_option("--max-len", c.max_len);
  growth->add_flag("--brinkmann", c.brinkmann, "Check the inequality on a corpus");
  growth->add_option("--K", c.k_text, "Constant for --brinkmann");
  growth->add_option("--seed", c.seed);
  growth->add_option("--count", c.count);
  add_common(growth);

  auto* power = app.add_subcommand("power", "Rewrite a word for tau = t^p");
  add_phi(power);
  power->add_option("--word", c.word);
  power->add_option("--p", c.p)->check(CLI::PositiveNumber);
  add_common(power);

  auto* bcc = app.add_subcommand("bcc", "Bounded-cancellation estimate");
  add_phi(bcc);
  bcc->add_option("--graph", c.graph_path);
  bcc->add_option("--depth", c.depth);
  add_common(bcc);

  auto* corpus = app.add_subcommand("corpus", "Seeded null-homotopic words");
  add_phi(corpus);
  corpus->add_option("--seed", c.seed);
  corpus->add_option("--count", c.count);
  corpus->add_option("--length", c.length, "Length budget per word");
  corpus->add_option("--t-density", c.t_density);
  add_common(corpus);

  std::vector<std::string> argv_store{"torus"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "torus: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string result;
    if (*check) result = cmd_check(c);
    else if (*bracket) result = cmd_bracket(c);
    else if (*stack) result = cmd_stack(c);
    else if (*growth) result = cmd_growth(c);
    else if (*power) result = cmd_power(c);
    else if (*bcc) result = cmd_bcc(c);
    else if (*corpus) result = cmd_corpus(c);
    if (c.output.empty())
      out << result;
    else
      write_atomically(c.output, result);
  } catch (const UsageError& e) {
    err << "torus: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "torus: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace fbc::cli
