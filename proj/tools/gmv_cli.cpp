// gmv command-line front end. Talks to the library only through gmv.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmv/gmv.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitBadInput = 3;

struct GraphDeleter {
  void operator()(gmv_graph* g) const { gmv_graph_free(g); }
};
struct ReportDeleter {
  void operator()(gmv_report* r) const { gmv_report_free(r); }
};
using GraphPtr = std::unique_ptr<gmv_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<gmv_report, ReportDeleter>;

// Status failure carrying the exit code it maps to.
struct Failure {
  int exit_code;
  std::string message;
};

void check(gmv_status s, const std::string& context) {
  if (s == GMV_OK) return;
  const int code = (s == GMV_ERR_INTERNAL || s == GMV_ERR_IO) ? kExitUsage : kExitBadInput;
  throw Failure{code, context + ": " + gmv_last_error()};
}

struct Options {
  std::string graph6;
  std::string file;
  std::string edges;
  int n = 0;
  std::string random;  // "n,p"
  std::string mode = "both";
  std::string deleted;
  bool single_deletions = false;
  double tol = 1e-7;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out;
  std::string format = "json";
  std::string out_dir;
  bool no_gm = false;
  bool decompose = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitBadInput, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

gmv_format parse_format(const std::string& f) {
  if (f == "json") return GMV_FORMAT_JSON;
  if (f == "csv") return GMV_FORMAT_CSV;
  return GMV_FORMAT_TEXT;
}

gmv_mode parse_mode(const std::string& m) {
  if (m == "theorem") return GMV_MODE_THEOREM;
  if (m == "dt") return GMV_MODE_DT;
  return GMV_MODE_BOTH;
}

// Graphs named by whichever single input source was given.
std::vector<GraphPtr> load_graphs(const Options& o, bool trees) {
  std::vector<GraphPtr> graphs;
  gmv_graph* g = nullptr;
  if (!o.graph6.empty()) {
    check(gmv_graph_from_graph6(o.graph6.c_str(), &g), "--graph6");
    graphs.emplace_back(g);
  } else if (!o.edges.empty()) {
    check(gmv_graph_from_edge_list(read_file(o.edges).c_str(), &g), o.edges);
    graphs.emplace_back(g);
  } else if (!o.file.empty()) {
    std::istringstream in(read_file(o.file));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line == "\r" || line == ">>graph6<<") continue;
      check(gmv_graph_from_graph6(line.c_str(), &g), o.file);
      graphs.emplace_back(g);
    }
  } else if (!o.random.empty()) {
    const auto comma = o.random.find(',');
    if (comma == std::string::npos) throw Failure{kExitUsage, "--random expects n,p"};
    int n = 0;
    double p = 0.0;
    try {
      n = std::stoi(o.random.substr(0, comma));
      p = std::stod(o.random.substr(comma + 1));
    } catch (const std::exception&) {
      throw Failure{kExitUsage, "--random expects n,p"};
    }
    check(gmv_graph_random(n, p, o.seed, &g), "--random");
    graphs.emplace_back(g);
  } else if (o.n > 0) {
    std::size_t count = 0;
    check(trees ? gmv_tree_count(o.n, &count) : gmv_class_count(o.n, &count), "--n");
    for (std::size_t i = 0; i < count; ++i) {
      check(trees ? gmv_tree_at(o.n, i, &g) : gmv_class_at(o.n, i, &g), "--n");
      graphs.emplace_back(g);
    }
  }
  return graphs;
}

int input_source_count(const Options& o) {
  return !o.graph6.empty() + !o.file.empty() + !o.edges.empty() + !o.random.empty() + (o.n > 0);
}

struct Output {
  std::string text;
  bool counterexample = false;
  bool first = true;
  gmv_format format = GMV_FORMAT_JSON;

  void add(gmv_report* raw) {
    ReportPtr r(raw);
    std::string t = gmv_report_text(r.get());
    if (format == GMV_FORMAT_CSV && !first) t = t.substr(t.find('\n') + 1);
    if (!t.empty() && t.back() != '\n') t += '\n';
    text += t;
    first = false;
    counterexample = counterexample || gmv_report_counterexample(r.get());
  }
};

int run(const std::string& command, const Options& o) {
  const int sources = input_source_count(o);
  if (sources != 1) throw Failure{kExitUsage, "exactly one input source is required"};
  if (o.tol < 0) throw Failure{kExitUsage, "--tol must be non-negative"};

  Output out;
  out.format = parse_format(o.format);
  gmv_report* r = nullptr;

  if (command == "census" || command == "sweep") {
    if (o.n <= 0) throw Failure{kExitUsage, command + " needs --n"};
    if (command == "census") {
      check(gmv_report_census(o.n, parse_mode(o.mode), o.tol, o.workers, out.format, &r), "census");
    } else {
      check(gmv_report_sweep(o.n, !o.no_gm, o.decompose, o.workers, o.tol,
                             o.out_dir.empty() ? nullptr : o.out_dir.c_str(), out.format, &r),
            "sweep");
      std::cerr << "sweep wall time: " << gmv_report_wall_time(r) << " s\n";
    }
    out.add(r);
  } else if (command == "threshold" && o.n > 0) {
    check(gmv_report_threshold_all(o.n, o.tol, out.format, &r), "threshold");
    out.add(r);
  } else {
    for (const GraphPtr& g : load_graphs(o, command == "tree-cert")) {
      if (command == "spectrum") {
        check(gmv_report_spectrum(g.get(), out.format, &r), command);
      } else if (command == "gm") {
        check(gmv_report_gm(g.get(), o.tol, out.format, &r), command);
      } else if (command == "decompose") {
        check(gmv_report_decompose(g.get(), parse_mode(o.mode), o.tol, out.format, &r), command);
      } else if (command == "tree-cert") {
        check(gmv_report_tree_certificate(g.get(), o.tol, out.format, &r), command);
      } else if (command == "dirichlet") {
        if (o.single_deletions) {
          check(gmv_report_single_deletions(g.get(), o.tol, out.format, &r), command);
        } else {
          std::uint64_t deleted = 0;
          check(gmv_parse_vertex_set(o.deleted.c_str(), gmv_graph_order(g.get()), &deleted), "--deleted");
          check(gmv_report_dirichlet(g.get(), deleted, o.tol, out.format, &r), command);
        }
      } else if (command == "threshold") {
        check(gmv_report_threshold(g.get(), o.tol, out.format, &r), command);
      } else {
        throw Failure{kExitUsage, "unknown subcommand " + command};
      }
      out.add(r);
    }
  }

  if (o.out.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw Failure{kExitUsage, "cannot write " + o.out};
    file << out.text;
  }
  return out.counterexample ? kExitCounterexample : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gmv: Grone-Merris majorization verification toolkit"};
  app.require_subcommand(1);

  Options o;
  if (const char* env = std::getenv("GM_WORKERS")) {
    try {
      o.workers = static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed GM_WORKERS\n";
    }
  }

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"spectrum", "Laplacian spectrum"},
      {"gm", "check lambda(G) majorized by d^T(G)"},
      {"decompose", "search for an (A+B) u C decomposition"},
      {"tree-cert", "build and verify a tree certificate"},
      {"dirichlet", "Dirichlet pair report and reduction chain"},
      {"census", "decomposability census of all classes on n vertices"},
      {"sweep", "GM sweep over all classes on n vertices"},
      {"threshold", "threshold recognition, or all creation sequences with --n"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--graph6", o.graph6, "graph6 string");
    sub->add_option("--file", o.file, "file of graph6 lines");
    sub->add_option("--edges", o.edges, "edge-list file ('n m' then 'i j' lines)");
    sub->add_option("--n", o.n, "vertex count for generated inputs");
    sub->add_option("--random", o.random, "random graph 'n,p' (see --seed)");
    sub->add_option("--mode", o.mode, "decomposition mode")->check(CLI::IsMember({"theorem", "dt", "both"}));
    sub->add_option("--deleted", o.deleted, "deleted vertices: 0b/0x bitmask or 0-based list '1,3'");
    sub->add_flag("--single-deletions", o.single_deletions, "report every single-vertex deletion");
    sub->add_option("--tol", o.tol, "majorization tolerance");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--workers", o.workers, "worker threads (default $GM_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "write the report to this file");
    sub->add_option("--out-dir", o.out_dir, "sweep: directory for shards and merged results");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--no-gm", o.no_gm, "sweep: skip the GM check");
    sub->add_flag("--decompose", o.decompose, "sweep: also search decompositions");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const Failure& f) {
    std::cerr << "gmv: " << f.message << "\n";
    return f.exit_code;
  }
}
