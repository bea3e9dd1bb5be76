#include "gmv/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace gmv {

using nlohmann::json;

double round_sig(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json rounded_array(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(round_sig(v));
  return arr;
}

namespace {

std::string fixed(double x, int prec = 6) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(prec) << round_sig(x);
  return o.str();
}

std::string csv_quote(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

std::string join_doubles(const std::vector<double>& v, char sep) {
  std::ostringstream o;
  o << std::setprecision(12);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) o << sep;
    o << round_sig(v[i]);
  }
  return o.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string text_row(const std::string& label, const std::vector<std::string>& cells) {
  std::ostringstream o;
  o << std::left << std::setw(8) << label;
  for (const auto& c : cells) o << std::right << std::setw(12) << c;
  return o.str() + "\n";
}

}  // namespace

std::string render_spectrum(const Graph& g, const Spectrum& s, Format f) {
  switch (f) {
    case Format::json:
      return json{{"graph6", write_graph6(g)},
                  {"n", g.order()},
                  {"spectrum", rounded_array(s.values.values)},
                  {"residual", round_sig(s.residual, 3)}}
                 .dump();
    case Format::csv:
      return "graph6,n,spectrum\n" + write_graph6(g) + "," + std::to_string(g.order()) + "," +
             csv_quote(join_doubles(s.values.values, ',')) + "\n";
    case Format::text: {
      std::vector<std::string> idx, vals;
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        idx.push_back(std::to_string(i + 1));
        vals.push_back(fixed(s.values.values[i]));
      }
      return "graph " + write_graph6(g) + " (n=" + std::to_string(g.order()) +
             ", m=" + std::to_string(g.edge_count()) + ")\n" + text_row("i", idx) +
             text_row("lambda", vals);
    }
  }
  return {};
}

json to_json(const GmReport& r) {
  return json{{"graph6", r.graph6},
              {"holds", r.holds},
              {"equality", r.equality},
              {"margins", rounded_array(r.prefix_margins)},
              {"tight", r.tight_prefixes},
              {"shortcut", std::string(to_string(r.shortcut))}};
}

std::string render_gm(const GmReport& r, Format f) {
  switch (f) {
    case Format::json:
      return to_json(r).dump();
    case Format::csv: {
      std::string tight;
      for (std::size_t i = 0; i < r.tight_prefixes.size(); ++i)
        tight += (i ? ";" : "") + std::to_string(r.tight_prefixes[i]);
      return "graph6,holds,equality,margins,tight,shortcut\n" + r.graph6 + "," +
             (r.holds ? "true" : "false") + "," + (r.equality ? "true" : "false") + "," +
             join_doubles(r.prefix_margins, ';') + "," + tight + "," +
             std::string(to_string(r.shortcut)) + "\n";
    }
    case Format::text: {
      const std::size_t n = r.prefix_margins.size();
      std::vector<std::string> idx, lam, dt, mar;
      for (std::size_t i = 0; i < n; ++i) {
        idx.push_back(std::to_string(i + 1));
        lam.push_back(fixed(i < r.spectrum.size() ? r.spectrum.values[i] : 0.0));
        dt.push_back(std::to_string(r.conjugate_degrees[i]));
        mar.push_back(fixed(r.prefix_margins[i]));
      }
      std::string out = "graph " + r.graph6 + "\n";
      out += text_row("k", idx) + text_row("lambda", lam) + text_row("d^T", dt) +
             text_row("margin", mar);
      out += std::string("verdict: ") + (r.holds ? "holds" : "COUNTEREXAMPLE") +
             (r.equality ? " (equality)" : "") + "  shortcut: " + std::string(to_string(r.shortcut)) + "\n";
      return out;
    }
  }
  return {};
}

json to_json(const HypothesisReport& r) {
  return json{{"gm_A", r.gm_a},           {"gm_B", r.gm_b},
              {"gm_C", r.gm_c},           {"cond_cle", r.cond_cle},
              {"cond_order", r.cond_order}, {"cond_dt", r.cond_dt},
              {"m", r.m},                 {"theorem_applies", r.theorem_applies}};
}

std::string render_decomposition(const Graph& h, DecomposeMode mode,
                                 const std::optional<Decomposition>& d, Format f) {
  const std::string g6 = write_graph6(h);
  switch (f) {
    case Format::json: {
      json j{{"graph6", g6}, {"mode", std::string(to_string(mode))}, {"decomposable", d.has_value()}};
      if (d) {
        j["cut"] = json{{"VA", d->cut.va}};
        j["A"] = write_graph6(d->cut.a);
        j["B"] = write_graph6(d->cut.b);
        j["C"] = write_graph6(d->cut.c);
        j["report"] = to_json(d->report);
      }
      return j.dump();
    }
    case Format::csv:
      return "graph6,decomposable,mode,cut_mask\n" + g6 + "," + (d ? "true" : "false") + "," +
             std::string(to_string(mode)) + "," + (d ? std::to_string(d->cut.va) : "") + "\n";
    case Format::text: {
      std::string out = "graph " + g6 + "  mode " + std::string(to_string(mode)) + "\n";
      if (!d) return out + "no qualifying cut\n";
      std::string va;
      for (int v : mask_vertices(d->cut.va)) va += (va.empty() ? "v" : ", v") + std::to_string(v + 1);
      const auto& r = d->report;
      out += "V_A = {" + va + "}\n";
      out += "A " + write_graph6(d->cut.a) + "  B " + write_graph6(d->cut.b) + "  C " +
             write_graph6(d->cut.c) + "  m = " + std::to_string(r.m) + "\n";
      out += "GM(A) " + yes_no(r.gm_a) + "  GM(B) " + yes_no(r.gm_b) + "  GM(C) " + yes_no(r.gm_c) +
             "  d^T(C) <= d^T(A),d^T(B) " + yes_no(r.cond_cle) + "  d^T_1(B) <= d^T_m(A) " +
             yes_no(r.cond_order) + "  dt " + yes_no(r.cond_dt) + "\n";
      return out;
    }
  }
  return {};
}

json to_json(const Certificate& c) {
  json j{{"kind", std::string(to_string(c.kind))}, {"graph6", write_graph6(c.graph)}};
  if (c.kind == Certificate::Kind::abc_node) j["cut"] = json{{"VA", c.va}};
  json children = json::array();
  for (const auto& child : c.children) children.push_back(to_json(child));
  j["children"] = std::move(children);
  return j;
}

namespace {

void certificate_text(const Certificate& c, int depth, std::string& out) {
  out += std::string(static_cast<std::size_t>(depth) * 2, ' ') + std::string(to_string(c.kind)) + " " +
         write_graph6(c.graph);
  if (c.kind == Certificate::Kind::abc_node) out += "  VA=" + std::to_string(c.va);
  out += "\n";
  for (const auto& child : c.children) certificate_text(child, depth + 1, out);
}

void certificate_rows(const Certificate& c, const std::string& path, std::string& out) {
  out += path + "," + std::string(to_string(c.kind)) + "," + write_graph6(c.graph) + "," +
         (c.kind == Certificate::Kind::abc_node ? std::to_string(c.va) : "") + "\n";
  for (std::size_t i = 0; i < c.children.size(); ++i)
    certificate_rows(c.children[i], path + "." + std::to_string(i), out);
}

}  // namespace

std::string render_certificate(const Certificate& c, bool verified, Format f) {
  switch (f) {
    case Format::json: {
      json j = to_json(c);
      j["verified"] = verified;
      return j.dump();
    }
    case Format::csv: {
      std::string out = "node,kind,graph6,cut_mask\n";
      certificate_rows(c, "0", out);
      return out;
    }
    case Format::text: {
      std::string out;
      certificate_text(c, 0, out);
      return out + "verified: " + yes_no(verified) + "\n";
    }
  }
  return {};
}

json to_json(const ReductionChainReport& r) {
  return json{{"graph6", r.graph6},
              {"deleted", r.deleted},
              {"link1", r.link1},
              {"link2", r.link2},
              {"link3", r.link3},
              {"final", r.final},
              {"identity_check", r.identity_check},
              {"laplacian_identity", r.laplacian_identity},
              {"deleted_edges_irrelevant", r.deleted_edges_irrelevant}};
}

std::string render_reduction(const ReductionChainReport& r, const GmReport& pair, Format f) {
  switch (f) {
    case Format::json: {
      json j = to_json(r);
      j["pair"] = to_json(pair);
      return j.dump();
    }
    case Format::csv:
      return "graph6,deleted,link1,link2,link3,final,identity_check\n" + r.graph6 + "," +
             std::to_string(r.deleted) + "," + (r.link1 ? "true" : "false") + "," +
             (r.link2 ? "true" : "false") + "," + (r.link3 ? "true" : "false") + "," +
             (r.final ? "true" : "false") + "," + (r.identity_check ? "true" : "false") + "\n";
    case Format::text: {
      std::string d;
      for (int v : mask_vertices(r.deleted)) d += (d.empty() ? "v" : ", v") + std::to_string(v + 1);
      std::string out = "pair " + r.graph6 + "  D = {" + d + "}\n";
      out += "s(E,D) <= s(G|U) + b      " + yes_no(r.link1) + "\n";
      out += "b <= a^T                  " + yes_no(r.link2) + "\n";
      out += "s(G|U) <= d^T(G|U)        " + yes_no(r.link3) + "\n";
      out += "s(E,D) <= d^T(E,D)        " + yes_no(r.final) + "\n";
      out += "d^T(E,D) = d^T(G|U) + a^T " + yes_no(r.identity_check) + "\n";
      out += render_gm(pair, Format::text);
      return out;
    }
  }
  return {};
}

std::string mode_label(const CensusModeResult& m) {
  return std::string(to_string(m.mode)) + (m.closure ? "+closure" : "");
}

json to_json(const CensusResult& c) {
  json modes = json::object();
  json reproducing = json::array();
  for (const auto& m : c.modes) {
    modes[mode_label(m)] = json{{"decomposable", m.decomposable},
                                {"residual", m.residual},
                                {"residual_gm_pass", m.residual_gm_pass}};
    if (c.n == 6 && m.decomposable == kReferenceDecomposableSix) reproducing.push_back(mode_label(m));
  }
  json j{{"n", c.n}, {"total_classes", c.total_classes}, {"modes", modes}};
  if (c.n == 6) {
    j["reference_decomposable"] = kReferenceDecomposableSix;
    j["reproducing_modes"] = reproducing;
    json discrepancy = json::array();
    for (const auto& m : c.modes)
      if (m.decomposable != kReferenceDecomposableSix)
        discrepancy.push_back(json{{"mode", mode_label(m)}, {"decomposable", m.decomposable}});
    j["discrepancies"] = discrepancy;
  }
  return j;
}

std::string render_census(const CensusResult& c, Format f) {
  switch (f) {
    case Format::json:
      return to_json(c).dump();
    case Format::csv: {
      std::string out = "graph6,decomposable,mode,cut_mask\n";
      for (const auto& m : c.modes) {
        std::size_t r = 0;
        for (std::size_t i = 0; i < c.classes.size(); ++i) {
          const bool residual = r < m.residual.size() && m.residual[r] == c.classes[i];
          if (residual) ++r;
          out += c.classes[i] + "," + (residual ? "false" : "true") + "," + mode_label(m) + "," +
                 (m.cut_masks[i] ? std::to_string(m.cut_masks[i]) : "") + "\n";
        }
      }
      return out;
    }
    case Format::text: {
      std::string out = "census n=" + std::to_string(c.n) + ": " + std::to_string(c.total_classes) +
                        " isomorphism classes\n";
      for (const auto& m : c.modes) {
        out += "  " + mode_label(m) + ": " + std::to_string(m.decomposable) + " decomposable, " +
               std::to_string(m.residual.size()) + " residual (GM on residual: " +
               (m.residual_gm_pass ? "pass" : "FAIL") + ")";
        if (c.n == 6)
          out += m.decomposable == kReferenceDecomposableSix ? "  [matches reference 146]" : "";
        out += "\n";
      }
      return out;
    }
  }
  return {};
}

json summary_json(const SweepReport& r) {
  json checks = json::array();
  if (r.checks.gm) checks.push_back("gm");
  if (r.checks.decompose) checks.push_back("decompose");
  json counterexamples = json::array();
  for (const auto& c : r.counterexamples)
    counterexamples.push_back(json{{"graph6", c.graph6}, {"margins", rounded_array(c.margins)}});
  json j{{"n", r.n},
         {"checks", checks},
         {"tolerance", r.tolerance},
         {"input_hash", r.input_hash},
         {"total_classes", r.total_classes},
         {"gm_holds_count", r.gm_holds_count},
         {"gm_equality_count", r.gm_equality_count},
         {"shortcuts", r.shortcut_histogram},
         {"counterexamples", counterexamples}};
  if (r.decomposable_theorem)
    j["decomposable"] = json{{"theorem", *r.decomposable_theorem},
                             {"dt", *r.decomposable_dt},
                             {"theorem+closure", *r.decomposable_theorem_closure},
                             {"dt+closure", *r.decomposable_dt_closure}};
  return j;
}

std::string render_sweep(const SweepReport& r, Format f) {
  switch (f) {
    case Format::json:
      return summary_json(r).dump();
    case Format::csv: {
      std::string out = sweep_csv_header() + "\n";
      for (const auto& row : r.rows) out += sweep_csv_row(row) + "\n";
      return out;
    }
    case Format::text: {
      std::string out = "sweep n=" + std::to_string(r.n) + ": " + std::to_string(r.total_classes) +
                        " classes, GM holds " + std::to_string(r.gm_holds_count) + ", equality " +
                        std::to_string(r.gm_equality_count) + "\n";
      if (r.decomposable_theorem)
        out += "decomposable: theorem " + std::to_string(*r.decomposable_theorem) + ", dt " +
               std::to_string(*r.decomposable_dt) + ", theorem+closure " +
               std::to_string(*r.decomposable_theorem_closure) + ", dt+closure " +
               std::to_string(*r.decomposable_dt_closure) + "\n";
      for (const auto& [k, v] : r.shortcut_histogram) out += "  " + k + ": " + std::to_string(v) + "\n";
      for (const auto& c : r.counterexamples) out += "COUNTEREXAMPLE " + c.graph6 + "\n";
      return out;
    }
  }
  return {};
}

}  // namespace gmv
