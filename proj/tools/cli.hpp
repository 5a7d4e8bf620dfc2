// Copyright 2026 The convexham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVEXHAM_TOOLS_CLI_HPP
#define CONVEXHAM_TOOLS_CLI_HPP

// Command-line front end. Exit codes: 0 found/holds, 1 not found, fails or
// refused (a witness is printed), 2 input error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "convexham/convexham.hpp"
#include "json.hpp"

namespace convexham::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInput = 2;

inline constexpr const char* kSchema = "convexham.result";
inline constexpr int kSchemaVersion = 1;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string format = "text";
  std::string out;
  int exact_cap = kDefaultExactCap;
  std::uint64_t seed = 1;
  bool path = false;   // oracle
  bool trace = false;  // hc
  // gen
  std::string gen_kind;
  int n = 0;
  int ny = -1;
  int k = 0;
  int widen = 0;
  int max_tries = 100000;
  // bench
  std::vector<int> sizes{20000, 40000, 80000, 160000};
  int repeats = 3;
};

// Collects one result in both renderings.
struct Record {
  json doc;
  std::vector<std::string> lines;
  void line(std::string s) { lines.push_back(std::move(s)); }
};

inline int env_exact_cap() {
  if (const char* v = std::getenv("CONVEXHAM_EXACT_CAP")) {
    char* end = nullptr;
    const long cap = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && cap >= 1 && cap <= 64) return static_cast<int>(cap);
  }
  return kDefaultExactCap;
}

inline ConvexBipartiteGraph load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string window_list(const std::vector<std::pair<int, int>>& ws) {
  std::string s;
  for (const auto& [p, q] : ws) {
    if (!s.empty()) s += ' ';
    s += "[" + std::to_string(p) + "," + std::to_string(q) + "]";
  }
  return s;
}

inline json to_json(const Violation& v) {
  json ws = json::array();
  for (const auto& [p, q] : v.windows) ws.push_back({p, q});
  return {{"kind", to_string(v.kind)},
          {"measure", to_string(v.measure)},
          {"windows", ws},
          {"observed", v.observed},
          {"bound", v.bound}};
}

inline std::string describe(const Violation& v) {
  return std::string(to_string(v.kind)) + " " + to_string(v.measure) + " on " + window_list(v.windows) +
         ": observed " + std::to_string(v.observed) + ", bound " + std::to_string(v.bound);
}

inline std::string describe(const ConvexBipartiteGraph& g, const NonMonotoneReason& r) {
  if (const auto* ip = std::get_if<InteriorPendant>(&r)) {
    return "InteriorPendant(" + g.y(ip->y).label + "," + std::to_string(ip->x) + ")";
  }
  const auto& ms = std::get<MaximalSet>(r);
  return "MaximalSet(" + std::to_string(ms.p) + "," + std::to_string(ms.q) + ")";
}

inline json to_json(const ConvexBipartiteGraph& g, const NonMonotoneReason& r) {
  if (const auto* ip = std::get_if<InteriorPendant>(&r)) {
    return {{"reason", "InteriorPendant"}, {"y", g.y(ip->y).label}, {"x", ip->x}};
  }
  const auto& ms = std::get<MaximalSet>(r);
  return {{"reason", "MaximalSet"}, {"p", ms.p}, {"q", ms.q}};
}

inline json to_json(const ConvexBipartiteGraph& g, const HamSequence& s) {
  json vs = json::array();
  for (const auto& v : s.vertices) {
    if (v.is_x()) {
      vs.push_back(v.index);
    } else {
      vs.push_back(g.y(v.index).label);
    }
  }
  json doc{{"kind", s.kind == SequenceKind::Cycle ? "cycle" : "path"}, {"vertices", vs},
           {"text", format_sequence(g, s)}};
  if (auto e = s.endpoints()) doc["endpoints"] = std::string(to_string(*e));
  return doc;
}

inline CheckOptions check_options(const ConvexBipartiteGraph& g, const Options& o) {
  return {g.n() <= o.exact_cap ? CheckMode::Exact : CheckMode::Fast, o.exact_cap};
}

inline void add_verdict(Record& rec, const char* name, const PropertyVerdict& v) {
  rec.doc["verdicts"][name] = {{"holds", v.holds}};
  rec.line(std::string(name) + ": " + (v.holds ? "holds" : "fails"));
  if (v.witness) {
    rec.doc["verdicts"][name]["witness"] = to_json(*v.witness);
    rec.line("  witness: " + describe(*v.witness));
  }
}

inline void add_classification(Record& rec, const ConvexBipartiteGraph& g, const Classification& c) {
  json reasons = json::array();
  for (const auto& r : c.reasons) reasons.push_back(to_json(g, r));
  rec.doc["classification"] = {{"kind", to_string(c.kind)}, {"reasons", reasons}};
  rec.line(std::string("classification: ") + to_string(c.kind));
  for (const auto& r : c.reasons) rec.line("  reason: " + describe(g, r));
  if (c.witness) {
    rec.doc["classification"]["witness"] = to_json(*c.witness);
    rec.line("  witness: " + describe(*c.witness));
  }
}

inline int cmd_check(const Options& o, Record& rec) {
  const auto g = load(o.file);
  const auto opt = check_options(g, o);
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = check_property_A(g, opt);
  const auto b = check_property_B(g, opt);
  const auto c = classify(g, opt);
  rec.doc["timing_ms"] = ms_since(t0);
  rec.doc["mode"] = opt.mode == CheckMode::Exact ? "exact" : "fast";
  rec.line(std::string("mode: ") + (opt.mode == CheckMode::Exact ? "exact" : "fast"));
  add_verdict(rec, "property_A", a);
  add_verdict(rec, "property_B", b);
  add_classification(rec, g, c);
  return a.holds && b.holds ? kExitOk : kExitNo;
}

inline int cmd_classify(const Options& o, Record& rec) {
  const auto g = load(o.file);
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = classify(g, check_options(g, o));
  rec.doc["timing_ms"] = ms_since(t0);
  add_classification(rec, g, c);
  return c.kind == ClassKind::Monotone ? kExitOk : kExitNo;
}

inline int cmd_hc(const Options& o, Record& rec) {
  const auto g = load(o.file);
  CycleTrace trace;
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = ham_cycle(g, o.trace ? &trace : nullptr);
  rec.doc["timing_ms"] = ms_since(t0);
  if (o.trace) {
    json steps = json::array();
    for (const auto& st : trace.steps) {
      const HamSequence partial{SequenceKind::Path, st.path};
      steps.push_back({{"i", st.i}, {"path", format_sequence(g, partial)}});
      rec.line("step " + std::to_string(st.i) + ": " + format_sequence(g, partial));
    }
    rec.doc["trace"] = steps;
  }
  if (const auto* cyc = std::get_if<HamSequence>(&res)) {
    rec.doc["found"] = true;
    rec.doc["sequence"] = to_json(g, *cyc);
    rec.line("cycle: " + format_sequence(g, *cyc));
    return kExitOk;
  }
  const auto& w = std::get<NoCycleWitness>(res);
  rec.doc["found"] = false;
  json wd{{"reason", to_string(w.reason)}};
  std::string text = std::string("no cycle: ") + to_string(w.reason);
  if (w.reason == NoCycleReason::StuckPrefix) {
    wd["stuck_at"] = w.stuck_at;
    text += " at " + std::to_string(w.stuck_at);
  }
  if (w.y >= 0) {
    wd["y"] = g.y(w.y).label;
    text += " (" + g.y(w.y).label + ")";
  }
  rec.line(text);
  if (w.violated) {
    wd["violated"] = to_json(*w.violated);
    rec.line("  witness: " + describe(*w.violated));
  }
  rec.doc["witness"] = wd;
  return kExitNo;
}

inline int cmd_hp(const Options& o, Record& rec) {
  const auto g = load(o.file);
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = ham_path_monotone(g, check_options(g, o));
  rec.doc["timing_ms"] = ms_since(t0);
  if (const auto* p = std::get_if<HamSequence>(&res)) {
    rec.doc["found"] = true;
    rec.doc["sequence"] = to_json(g, *p);
    rec.line("path: " + format_sequence(g, *p));
    rec.line(std::string("endpoints: ") + std::string(to_string(*p->endpoints())));
    return kExitOk;
  }
  const auto& r = std::get<HamPathRefusal>(res);
  rec.doc["found"] = false;
  json reasons = json::array();
  for (const auto& x : r.reasons) reasons.push_back(to_json(g, x));
  rec.doc["refusal"] = {{"kind", to_string(r.kind)}, {"reasons", reasons}};
  rec.line(std::string("refused: ") + to_string(r.kind));
  for (const auto& x : r.reasons) rec.line("  reason: " + describe(g, x));
  if (r.witness) {
    rec.doc["refusal"]["witness"] = to_json(*r.witness);
    rec.line("  witness: " + describe(*r.witness));
  }
  return kExitNo;
}

inline int cmd_oracle(const Options& o, Record& rec) {
  const auto g = load(o.file);
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = o.path ? brute_ham_path(g) : brute_ham_cycle(g);
  rec.doc["timing_ms"] = ms_since(t0);
  rec.doc["target"] = o.path ? "path" : "cycle";
  rec.doc["found"] = res.has_value();
  if (res) {
    rec.doc["sequence"] = to_json(g, *res);
    rec.line(std::string(o.path ? "path: " : "cycle: ") + format_sequence(g, *res));
    return kExitOk;
  }
  rec.line(std::string("no ") + (o.path ? "path" : "cycle"));
  return kExitNo;
}

inline int cmd_chvatal(const Options& o, Record& rec) {
  const auto g = load(o.file);
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = chvatal_holds(g);
  const bool two_conn = is_two_connected(g);
  rec.doc["timing_ms"] = ms_since(t0);
  const HamSequence cut{SequenceKind::Path, r.cut};
  rec.doc["holds"] = r.holds;
  rec.doc["two_connected"] = two_conn;
  rec.doc["cut"] = to_json(g, cut)["vertices"];
  rec.doc["components"] = r.components;
  rec.line(std::string("chvatal: ") + (r.holds ? "holds" : "fails"));
  rec.line(std::string(r.holds ? "worst cut: " : "cut: ") + format_sequence(g, cut) + " -> " +
           std::to_string(r.components) + " components");
  rec.line(std::string("two-connected: ") + (two_conn ? "yes" : "no"));
  return r.holds ? kExitOk : kExitNo;
}

inline int cmd_gen(const Options& o, Record& rec, std::string& instance) {
  ConvexBipartiteGraph g;
  if (o.gen_kind == "random") {
    g = gen_random(o.n, o.ny < 0 ? o.n : o.ny, o.seed);
  } else if (o.gen_kind == "monotone") {
    auto s = gen_monotone(o.n, o.seed, o.max_tries);
    rec.doc["tries"] = s.tries;
    g = std::move(s.graph);
  } else if (o.gen_kind == "counterexample") {
    g = gen_counterexample_family(o.k);
  } else if (o.gen_kind == "planted") {
    g = o.path ? gen_planted_hp(o.n, o.seed, o.widen) : gen_planted_hc(o.n, o.seed, o.widen);
  } else {
    throw InputError("unknown generator '" + o.gen_kind + "'");
  }
  instance = serialize_graph(g);
  rec.doc["generator"] = o.gen_kind;
  rec.doc["n"] = g.n();
  rec.doc["y_count"] = g.y_count();
  rec.line("generated " + o.gen_kind + ": n=" + std::to_string(g.n()) + " |Y|=" + std::to_string(g.y_count()));
  return kExitOk;
}

template <class F>
double best_of(int repeats, F&& f) {
  double best = 0;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double t = ms_since(t0);
    if (r == 0 || t < best) best = t;
  }
  return best;
}

inline int cmd_bench(const Options& o, Record& rec) {
  json rows = json::array();
  std::ostringstream head;
  head << std::setw(10) << "n" << std::setw(12) << "hc_ms" << std::setw(9) << "ratio" << std::setw(12) << "hp_ms"
       << std::setw(9) << "ratio";
  rec.line(head.str());
  double prev_hc = 0, prev_hp = 0;
  bool ok = true;
  for (std::size_t k = 0; k < o.sizes.size(); ++k) {
    const int n = o.sizes[k];
    const auto hc_graph = gen_planted_hc(n, o.seed, o.widen);
    const auto hp_graph = gen_planted_hp(n, o.seed, o.widen);
    const double hc = best_of(o.repeats, [&] { ok = std::holds_alternative<HamSequence>(ham_cycle(hc_graph)) && ok; });
    const double hp = best_of(o.repeats, [&] {
      ok = std::holds_alternative<HamSequence>(ham_path_monotone(hp_graph, {CheckMode::Fast, o.exact_cap})) && ok;
    });
    json row{{"n", n}, {"hc_ms", hc}, {"hp_ms", hp}};
    std::ostringstream line;
    line << std::fixed << std::setprecision(3) << std::setw(10) << n << std::setw(12) << hc;
    if (k) {
      row["hc_ratio"] = hc / prev_hc;
      line << std::setw(9) << hc / prev_hc;
    } else {
      line << std::setw(9) << "-";
    }
    line << std::setw(12) << hp;
    if (k) {
      row["hp_ratio"] = hp / prev_hp;
      line << std::setw(9) << hp / prev_hp;
    } else {
      line << std::setw(9) << "-";
    }
    rows.push_back(row);
    rec.line(line.str());
    prev_hc = hc;
    prev_hp = hp;
  }
  rec.doc["rows"] = rows;
  rec.doc["repeats"] = o.repeats;
  rec.doc["widen"] = o.widen;
  rec.doc["all_found"] = ok;
  return ok ? kExitOk : kExitNo;
}

/// Entry point shared by the binary and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  o.exact_cap = env_exact_cap();

  CLI::App app{"Hamiltonian cycles and paths in convex bipartite graphs", "convexham"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--exact-cap", o.exact_cap, "Largest n checked by enumeration")->check(CLI::Range(1, 64));
  app.add_option("--seed", o.seed, "Generator seed");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--out", o.out, "Write the result (or generated instance) to FILE");

  auto* check = app.add_subcommand("check", "Property A/B verdicts and classification");
  auto* hc = app.add_subcommand("hc", "Hamiltonian cycle by the clique sweep");
  auto* hp = app.add_subcommand("hp", "Hamiltonian path for monotone graphs");
  auto* oracle = app.add_subcommand("oracle", "Exhaustive cycle or path search");
  auto* chv = app.add_subcommand("chvatal", "Cut condition c(G - S) <= |S|");
  auto* cls = app.add_subcommand("classify", "Monotone / non-monotone classification");
  for (auto* sub : {check, hc, hp, oracle, chv, cls}) sub->add_option("file", o.file, "Graph file")->required();
  hc->add_flag("--trace", o.trace, "Print the labelled path after each step");
  oracle->add_flag("--path", o.path, "Search for a path instead of a cycle");

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("kind", o.gen_kind, "random|monotone|counterexample|planted")
      ->required()
      ->check(CLI::IsMember({"random", "monotone", "counterexample", "planted"}));
  gen->add_option("--n", o.n, "|X|");
  gen->add_option("--ny", o.ny, "|Y| for random (default n)");
  gen->add_option("--k", o.k, "Family index for counterexample");
  gen->add_option("--widen", o.widen, "Widening for planted");
  gen->add_option("--max-tries", o.max_tries, "Rejection budget for monotone");
  gen->add_flag("--path", o.path, "Planted path instead of cycle");

  auto* bench = app.add_subcommand("bench", "Timing table over planted instances of doubling sizes");
  bench->add_option("--sizes", o.sizes, "Sizes n")->expected(1, -1);
  bench->add_option("--widen", o.widen, "Widening")->default_val(2);
  bench->add_option("--repeats", o.repeats, "Runs per size; the best is kept")->check(CLI::Range(1, 100));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Record rec;
  std::vector<std::string> echo(argv + 1, argv + argc);
  rec.doc["schema"] = kSchema;
  rec.doc["version"] = kSchemaVersion;
  rec.doc["command"] = echo;
  std::string instance;
  int code = kExitInput;
  try {
    if (*check) code = cmd_check(o, rec);
    if (*hc) code = cmd_hc(o, rec);
    if (*hp) code = cmd_hp(o, rec);
    if (*oracle) code = cmd_oracle(o, rec);
    if (*chv) code = cmd_chvatal(o, rec);
    if (*cls) code = cmd_classify(o, rec);
    if (*gen) code = cmd_gen(o, rec, instance);
    if (*bench) code = cmd_bench(o, rec);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GraphError& e) {
    err << "invalid graph: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "too large: " << e.what() << '\n';
    return kExitInput;
  } catch (const GenerationExhausted& e) {
    err << "generator: " << e.what() << '\n';
    return kExitNo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  rec.doc["exit_code"] = code;

  std::ostringstream body;
  if (o.format == "machine") {
    body << rec.doc.dump(2) << '\n';
  } else {
    for (const auto& l : rec.lines) body << l << '\n';
  }

  if (*gen) {
    // The instance is the product; the record only goes out when the
    // instance went to a file.
    if (o.out.empty()) {
      out << instance;
      return code;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << instance)) {
      err << "error: cannot write '" << o.out << "'\n";
      return kExitInput;
    }
    out << body.str();
    return code;
  }
  if (o.out.empty()) {
    out << body.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << body.str())) {
      err << "error: cannot write '" << o.out << "'\n";
      return kExitInput;
    }
  }
  return code;
}

}  // namespace convexham::cli

#endif  // CONVEXHAM_TOOLS_CLI_HPP
