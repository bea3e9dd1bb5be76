#include "gmv/gmv.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

#include "gmv/decomposition.hpp"
#include "gmv/dirichlet.hpp"
#include "gmv/enumeration.hpp"
#include "gmv/error.hpp"
#include "gmv/gm.hpp"
#include "gmv/graph.hpp"
#include "gmv/report.hpp"
#include "gmv/spectra.hpp"

struct gmv_graph {
  gmv::Graph g;
};

struct gmv_report {
  std::string text;
  bool counterexample = false;
  double wall_time = 0.0;
};

namespace {

thread_local std::string last_error;

gmv_status fail(gmv_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps exceptions escaping the C++ core onto status codes.
template <typename Fn>
gmv_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const gmv::ParseError& e) {
    return fail(GMV_ERR_PARSE, e.what());
  } catch (const std::out_of_range& e) {
    return fail(GMV_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GMV_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(GMV_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GMV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GMV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GMV_ERR_INTERNAL, "unknown error");
  }
}

gmv::Format to_format(gmv_format f) {
  switch (f) {
    case GMV_FORMAT_JSON: return gmv::Format::json;
    case GMV_FORMAT_CSV: return gmv::Format::csv;
    case GMV_FORMAT_TEXT: return gmv::Format::text;
  }
  throw std::invalid_argument("unknown output format");
}

void check_tolerance(double tolerance) {
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance))
    throw std::invalid_argument("tolerance must be a finite non-negative number");
}

gmv_status emit_graph(gmv::Graph g, gmv_graph** out) {
  if (!out) throw std::invalid_argument("null output pointer");
  *out = new gmv_graph{std::move(g)};
  return GMV_OK;
}

gmv_status emit_report(std::string text, bool counterexample, gmv_report** out, double wall = 0.0) {
  if (!out) throw std::invalid_argument("null output pointer");
  *out = new gmv_report{std::move(text), counterexample, wall};
  return GMV_OK;
}

const gmv::Graph& graph_of(const gmv_graph* g) {
  if (!g) throw std::invalid_argument("null graph handle");
  return g->g;
}

gmv_shortcut to_c(gmv::Shortcut s) {
  switch (s) {
    case gmv::Shortcut::none: return GMV_SHORTCUT_NONE;
    case gmv::Shortcut::regular: return GMV_SHORTCUT_REGULAR;
    case gmv::Shortcut::nearly_regular: return GMV_SHORTCUT_NEARLY_REGULAR;
    case gmv::Shortcut::max_degree_le_3: return GMV_SHORTCUT_MAX_DEGREE_LE_3;
    case gmv::Shortcut::complement_reduced: return GMV_SHORTCUT_COMPLEMENT_REDUCED;
  }
  return GMV_SHORTCUT_NONE;
}

void fill(const gmv::GmReport& r, gmv_gm_result* out) {
  out->holds = r.holds ? 1 : 0;
  out->equality = r.equality ? 1 : 0;
  out->shortcut = to_c(r.shortcut);
  out->first_violation = r.first_violation.value_or(0);
}

double max_deviation(const gmv::GmReport& r) {
  double dev = 0.0;
  for (std::size_t i = 0; i < r.spectrum.size(); ++i)
    dev = std::max(dev, std::abs(r.spectrum.values[i] - r.conjugate_degrees[i]));
  return dev;
}

std::string join_lines(const std::vector<std::string>& parts, gmv::Format f) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string p = parts[i];
    if (f == gmv::Format::csv && i > 0) p = p.substr(p.find('\n') + 1);
    out += p;
    if (f == gmv::Format::json) out += "\n";
  }
  return out;
}

}  // namespace

extern "C" {

const char* gmv_version(void) { return "1.0.0"; }

const char* gmv_last_error(void) { return last_error.c_str(); }

double gmv_default_tolerance(void) { return gmv::kDefaultTolerance; }

gmv_status gmv_graph_from_graph6(const char* text, gmv_graph** out) {
  return guarded([&] {
    if (!text) throw std::invalid_argument("null graph6 text");
    return emit_graph(gmv::parse_graph6(text), out);
  });
}

gmv_status gmv_graph_from_edge_list(const char* text, gmv_graph** out) {
  return guarded([&] {
    if (!text) throw std::invalid_argument("null edge list");
    return emit_graph(gmv::parse_edge_list(text), out);
  });
}

gmv_status gmv_graph_from_edges(int n, const int* pairs, size_t edge_count, gmv_graph** out) {
  return guarded([&] {
    if (edge_count && !pairs) throw std::invalid_argument("null edge array");
    gmv::Graph g(n);
    for (size_t e = 0; e < edge_count; ++e) g.add_edge(pairs[2 * e], pairs[2 * e + 1]);
    return emit_graph(std::move(g), out);
  });
}

gmv_status gmv_graph_threshold(const int* creation, size_t length, gmv_graph** out) {
  return guarded([&] {
    if (length && !creation) throw std::invalid_argument("null creation sequence");
    return emit_graph(gmv::threshold_graph(std::span<const int>(creation, length)), out);
  });
}

gmv_status gmv_graph_from_prufer(const int* sequence, size_t length, gmv_graph** out) {
  return guarded([&] {
    if (length && !sequence) throw std::invalid_argument("null Pruefer sequence");
    return emit_graph(gmv::tree_from_prufer(std::span<const int>(sequence, length)), out);
  });
}

gmv_status gmv_graph_random(int n, double edge_probability, uint64_t seed, gmv_graph** out) {
  return guarded([&] { return emit_graph(gmv::random_graph(n, edge_probability, seed), out); });
}

gmv_status gmv_graph_complement(const gmv_graph* g, gmv_graph** out) {
  return guarded([&] { return emit_graph(gmv::complement(graph_of(g)), out); });
}

gmv_status gmv_class_count(int n, size_t* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = gmv::all_graphs(n).size();
    return GMV_OK;
  });
}

gmv_status gmv_class_at(int n, size_t index, gmv_graph** out) {
  return guarded([&] { return emit_graph(gmv::all_graphs(n).at(index), out); });
}

gmv_status gmv_tree_count(int n, size_t* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = gmv::all_trees(n).size();
    return GMV_OK;
  });
}

gmv_status gmv_tree_at(int n, size_t index, gmv_graph** out) {
  return guarded([&] { return emit_graph(gmv::all_trees(n).at(index), out); });
}

void gmv_graph_free(gmv_graph* g) { delete g; }

int gmv_graph_order(const gmv_graph* g) { return g ? g->g.order() : 0; }

size_t gmv_graph_edge_count(const gmv_graph* g) { return g ? g->g.edge_count() : 0; }

gmv_status gmv_graph_to_graph6(const gmv_graph* g, char* buffer, size_t capacity, size_t* needed) {
  return guarded([&] {
    const std::string s = gmv::write_graph6(graph_of(g));
    if (needed) *needed = s.size() + 1;
    if (!buffer || capacity < s.size() + 1) return fail(GMV_ERR_BUFFER_TOO_SMALL, "graph6 buffer too small");
    std::memcpy(buffer, s.c_str(), s.size() + 1);
    return GMV_OK;
  });
}

gmv_status gmv_graph_degree_sequence(const gmv_graph* g, int* out, size_t capacity) {
  return guarded([&] {
    const gmv::Partition d = gmv::degree_sequence(graph_of(g));
    if (!out || capacity < d.size()) return fail(GMV_ERR_BUFFER_TOO_SMALL, "degree buffer too small");
    std::copy(d.parts().begin(), d.parts().end(), out);
    return GMV_OK;
  });
}

gmv_status gmv_graph_laplacian_spectrum(const gmv_graph* g, double* out, size_t capacity) {
  return guarded([&] {
    const gmv::Spectrum s = gmv::laplacian_spectrum(graph_of(g));
    if (!out || capacity < s.values.size()) return fail(GMV_ERR_BUFFER_TOO_SMALL, "spectrum buffer too small");
    std::copy(s.values.values.begin(), s.values.values.end(), out);
    return GMV_OK;
  });
}

gmv_status gmv_graph_is_threshold(const gmv_graph* g, int* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = gmv::is_threshold(graph_of(g)) ? 1 : 0;
    return GMV_OK;
  });
}

gmv_status gmv_graph_gm_check(const gmv_graph* g, double tolerance, gmv_gm_result* out) {
  return guarded([&] {
    check_tolerance(tolerance);
    if (!out) throw std::invalid_argument("null output pointer");
    fill(gmv::gm_check(graph_of(g), tolerance), out);
    return GMV_OK;
  });
}

gmv_status gmv_pair_gm_check(const gmv_graph* g, uint64_t deleted, double tolerance, gmv_gm_result* out) {
  return guarded([&] {
    check_tolerance(tolerance);
    if (!out) throw std::invalid_argument("null output pointer");
    fill(gmv::pair_gm_check(gmv::VertexPair(graph_of(g), deleted), tolerance), out);
    return GMV_OK;
  });
}

gmv_status gmv_parse_vertex_set(const char* text, int n, uint64_t* out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    std::string s(text);
    uint64_t mask = 0;
    auto parse_digits = [&](const std::string& digits, int base) {
      if (digits.empty()) throw gmv::ParseError("empty vertex bitmask");
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(digits, &used, base);
      } catch (const std::exception&) {
        throw gmv::ParseError("bad vertex bitmask '" + s + "'");
      }
      if (used != digits.size()) throw gmv::ParseError("bad vertex bitmask '" + s + "'");
      return static_cast<uint64_t>(v);
    };
    if (s.starts_with("0b") || s.starts_with("0B")) {
      mask = parse_digits(s.substr(2), 2);
    } else if (s.starts_with("0x") || s.starts_with("0X")) {
      mask = parse_digits(s.substr(2), 16);
    } else {
      std::size_t pos = 0;
      while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string tok = s.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
          throw gmv::ParseError("bad vertex list '" + s + "'");
        const unsigned long v = std::stoul(tok);
        if (v >= 64) throw gmv::ParseError("vertex " + tok + " out of range");
        mask |= uint64_t{1} << v;
        pos = comma + 1;
      }
    }
    const uint64_t all = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    if (mask & ~all) throw gmv::ParseError("vertex set names a vertex outside the graph");
    *out = mask;
    return GMV_OK;
  });
}

gmv_status gmv_report_spectrum(const gmv_graph* g, gmv_format format, gmv_report** out) {
  return guarded([&] {
    const gmv::Graph& graph = graph_of(g);
    return emit_report(gmv::render_spectrum(graph, gmv::laplacian_spectrum(graph), to_format(format)),
                       false, out);
  });
}

gmv_status gmv_report_gm(const gmv_graph* g, double tolerance, gmv_format format, gmv_report** out) {
  return guarded([&] {
    check_tolerance(tolerance);
    const gmv::GmReport r = gmv::gm_check(graph_of(g), tolerance);
    return emit_report(gmv::render_gm(r, to_format(format)), !r.holds, out);
  });
}

gmv_status gmv_report_decompose(const gmv_graph* g, gmv_mode mode, double tolerance, gmv_format format,
                                gmv_report** out) {
  return guarded([&] {
    check_tolerance(tolerance);
    const gmv::Format f = to_format(format);
    std::vector<std::string> parts;
    for (gmv::DecomposeMode m : {gmv::DecomposeMode::theorem, gmv::DecomposeMode::dt}) {
      if (mode == GMV_MODE_THEOREM && m != gmv::DecomposeMode::theorem) continue;
      if (mode == GMV_MODE_DT && m != gmv::DecomposeMode::dt) continue;
      parts.push_back(gmv::render_decomposition(graph_of(g), m, gmv::decompose_search(graph_of(g), m, tolerance), f));
    }
    return emit_report(join_lines(parts, f), false, out);
  });
}

gmv_status gmv_report_tree_certificate(const gmv_graph* g, double tolerance, gmv_format format,
                                       gmv_report** out) {
  return guarded([&] {
    check_tolerance(tolerance);
    const gmv::Certificate cert = gmv::tree_certificate(graph_of(g));
    const bool verified = gmv::verify_certificate(cert, tolerance);
    return emit_report(gmv::render_certificate(cert, verified, to_format(format)), !verified, out);
  });
}

gmv_status gmv_report_dirichlet(const gmv_graph* g, uint64_t deleted, double tolerance, gmv_format format,
                                gmv_report** out) {
  return guarded([&] {
    check_tolerance(tolerance);
    const gmv::VertexPair pair(graph_of(g), deleted);
    const gmv::ReductionChainReport r = gmv::reduction_chain_check(pair, tolerance);
    const gmv::GmReport pr = gmv::pair_gm_check(pair, tolerance);
    const bool ok = r.link1 && r.link2 && r.link3 && r.final && r.identity_check &&
                    r.laplacian_identity && r.deleted_edges_irrelevant;
    return emit_report(gmv::render_reduction(r, pr, to_format(format)), !ok, out);
  });
}

gmv_status gmv_report_single_deletions(const gmv_graph* g, double tolerance, gmv_format format,
                                       gmv_report** out) {
  return guarded([&] {
    check_tolerance(tolerance);
    const gmv::Format f = to_format(format);
    const gmv::Graph& graph = graph_of(g);
    std::vector<std::string> parts;
    bool counterexample = false;
    for (int v = 0; v < graph.order() && graph.order() >= 2; ++v) {
      const gmv::VertexPair pair(graph, uint64_t{1} << v);
      const gmv::ReductionChainReport r = gmv::reduction_chain_check(pair, tolerance);
      const gmv::GmReport pr = gmv::pair_gm_check(pair, tolerance);
      counterexample = counterexample || !r.final;
      parts.push_back(gmv::render_reduction(r, pr, f));
    }
    return emit_report(join_lines(parts, f), counterexample, out);
  });
}

gmv_status gmv_report_threshold(const gmv_graph* g, double tolerance, gmv_format format, gmv_report** out) {
  return guarded([&] {
    check_tolerance(tolerance);
    const gmv::Graph& graph = graph_of(g);
    const auto creation = gmv::threshold_creation_sequence(graph);
    const gmv::GmReport r = gmv::gm_check(graph, tolerance);
    std::string seq;
    if (creation)
      for (int b : *creation) seq += static_cast<char>('0' + b);
    const bool bad = !r.holds || (creation && !r.equality);
    std::string text;
    switch (to_format(format)) {
      case gmv::Format::json:
        text = nlohmann::json{{"graph6", r.graph6},
                              {"threshold", creation.has_value()},
                              {"creation", seq},
                              {"equality", r.equality},
                              {"max_deviation", gmv::round_sig(max_deviation(r))}}
                   .dump();
        break;
      case gmv::Format::csv:
        text = "graph6,threshold,creation,equality\n" + r.graph6 + "," + (creation ? "true" : "false") +
               "," + seq + "," + (r.equality ? "true" : "false") + "\n";
        break;
      case gmv::Format::text:
        text = std::string("threshold: ") + (creation ? "yes, creation " + seq : "no") + "\n" +
               gmv::render_gm(r, gmv::Format::text);
        break;
    }
    return emit_report(std::move(text), bad, out);
  });
}

gmv_status gmv_report_threshold_all(int n, double tolerance, gmv_format format, gmv_report** out) {
  return guarded([&] {
    check_tolerance(tolerance);
    if (n < 1 || n > 20) throw std::out_of_range("threshold sweep supports 1 <= n <= 20");
    const uint64_t count = uint64_t{1} << (n - 1);
    double worst = 0.0;
    uint64_t failures = 0;
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (uint64_t code = 0; code < count; ++code) {
      bits[0] = 0;
      for (int v = 1; v < n; ++v) bits[static_cast<std::size_t>(v)] = static_cast<int>((code >> (v - 1)) & 1U);
      const gmv::GmReport r = gmv::gm_check(gmv::threshold_graph(bits), tolerance);
      worst = std::max(worst, max_deviation(r));
      if (!r.equality) ++failures;
    }
    std::string text;
    switch (to_format(format)) {
      case gmv::Format::json:
        text = nlohmann::json{{"n", n},
                              {"sequences", count},
                              {"all_equal", failures == 0},
                              {"failures", failures},
                              {"max_deviation", gmv::round_sig(worst, 3)}}
                   .dump();
        break;
      case gmv::Format::csv:
        text = "n,sequences,all_equal,max_deviation\n" + std::to_string(n) + "," + std::to_string(count) +
               "," + (failures == 0 ? "true" : "false") + "," + std::to_string(gmv::round_sig(worst, 3)) + "\n";
        break;
      case gmv::Format::text:
        text = "threshold graphs n=" + std::to_string(n) + ": " + std::to_string(count) +
               " creation sequences, lambda = d^T for " + std::to_string(count - failures) +
               ", max |lambda_i - d^T_i| = " + std::to_string(worst) + "\n";
        break;
    }
    return emit_report(std::move(text), failures != 0, out);
  });
}

gmv_status gmv_report_census(int n, gmv_mode mode, double tolerance, unsigned workers, gmv_format format,
                             gmv_report** out) {
  return guarded([&] {
    check_tolerance(tolerance);
    gmv::CensusResult c = gmv::census(n, tolerance, workers);
    std::erase_if(c.modes, [&](const gmv::CensusModeResult& m) {
      return (mode == GMV_MODE_THEOREM && m.mode != gmv::DecomposeMode::theorem) ||
             (mode == GMV_MODE_DT && m.mode != gmv::DecomposeMode::dt);
    });
    bool counterexample = false;
    for (const auto& m : c.modes) counterexample = counterexample || !m.residual_gm_pass;
    return emit_report(gmv::render_census(c, to_format(format)), counterexample, out);
  });
}

gmv_status gmv_report_sweep(int n, int check_gm, int check_decompose, unsigned workers, double tolerance,
                            const char* out_dir, gmv_format format, gmv_report** out) {
  return guarded([&] {
    check_tolerance(tolerance);
    std::optional<std::filesystem::path> dir;
    if (out_dir && *out_dir) dir = std::filesystem::path(out_dir);
    const gmv::SweepReport r =
        gmv::sweep(n, gmv::SweepChecks{check_gm != 0, check_decompose != 0}, workers, tolerance, dir);
    return emit_report(gmv::render_sweep(r, to_format(format)), !r.counterexamples.empty(), out,
                       r.wall_time_seconds);
  });
}

const char* gmv_report_text(const gmv_report* r) { return r ? r->text.c_str() : ""; }

size_t gmv_report_size(const gmv_report* r) { return r ? r->text.size() : 0; }

int gmv_report_counterexample(const gmv_report* r) { return r && r->counterexample ? 1 : 0; }

double gmv_report_wall_time(const gmv_report* r) { return r ? r->wall_time : 0.0; }

void gmv_report_free(gmv_report* r) { delete r; }

}  // extern "C"
