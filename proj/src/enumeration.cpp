#include "gmv/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gmv/decomposition.hpp"
#include "gmv/error.hpp"
#include "gmv/report.hpp"

namespace gmv {

namespace {

// Every graph on k vertices is a graph on k - 1 vertices plus one vertex, so
// extending one representative per class by every neighbourhood reaches
// every class on k vertices.
std::vector<Graph> extend_classes(const std::vector<Graph>& smaller, bool leaves_only) {
  std::map<std::string, Graph> seen;
  for (const Graph& g : smaller) {
    const int k = g.order() + 1;
    const VertexMask limit = VertexMask{1} << g.order();
    for (VertexMask nb = leaves_only ? 1 : 0; nb < limit; leaves_only ? nb <<= 1 : ++nb) {
      Graph h(k);
      for (auto [i, j] : g.edges()) h.add_edge(i, j);
      for (int v : mask_vertices(nb)) h.add_edge(v, k - 1);
      Graph canon = canonical_graph(h);
      seen.try_emplace(write_graph6(canon), std::move(canon));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

const std::vector<Graph>& memo_levels(std::map<int, std::vector<Graph>>& cache, std::mutex& mu,
                                      int n, bool trees) {
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (cache.empty()) cache.emplace(1, std::vector<Graph>{Graph(1)});
  int have = cache.rbegin()->first;
  while (have < n) {
    cache.emplace(have + 1, extend_classes(cache.at(have), trees));
    ++have;
  }
  return cache.at(n);
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("all_graphs supports 1 <= n <= 8");
  static std::map<int, std::vector<Graph>> cache;
  static std::mutex mu;
  return memo_levels(cache, mu, n, false);
}

const std::vector<Graph>& all_trees(int n) {
  if (n < 2 || n > 10) throw std::invalid_argument("all_trees supports 2 <= n <= 10");
  static std::map<int, std::vector<Graph>> cache;
  static std::mutex mu;
  return memo_levels(cache, mu, n, true);
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_probability) g.add_edge(i, j);
  return g;
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string sweep_csv_header() {
  return "graph6,gm_holds,gm_equality,shortcut,decomposable_theorem,decomposable_dt,cut_mask";
}

namespace {

std::string bool_field(bool b) { return b ? "true" : "false"; }

std::string opt_bool_field(const std::optional<bool>& b) { return b ? bool_field(*b) : ""; }

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError("sweep csv: bad boolean '" + s + "'");
}

Shortcut parse_shortcut(const std::string& s) {
  for (Shortcut k : {Shortcut::none, Shortcut::regular, Shortcut::nearly_regular,
                     Shortcut::max_degree_le_3, Shortcut::complement_reduced})
    if (to_string(k) == s) return k;
  throw ParseError("sweep csv: bad shortcut '" + s + "'");
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::string sweep_csv_row(const SweepRow& row) {
  return row.graph6 + "," + bool_field(row.gm_holds) + "," + bool_field(row.gm_equality) + "," +
         std::string(to_string(row.shortcut)) + "," + opt_bool_field(row.decomposable_theorem) +
         "," + opt_bool_field(row.decomposable_dt) + "," +
         (row.cut_mask ? std::to_string(*row.cut_mask) : "");
}

SweepRow parse_sweep_csv_row(const std::string& line) {
  const auto f = split_csv(line);
  if (f.size() != 7) throw ParseError("sweep csv: expected 7 fields");
  SweepRow row;
  row.graph6 = f[0];
  row.gm_holds = parse_bool(f[1]);
  row.gm_equality = parse_bool(f[2]);
  row.shortcut = parse_shortcut(f[3]);
  if (!f[4].empty()) row.decomposable_theorem = parse_bool(f[4]);
  if (!f[5].empty()) row.decomposable_dt = parse_bool(f[5]);
  if (!f[6].empty()) row.cut_mask = std::stoull(f[6]);
  return row;
}

namespace {

SweepRow evaluate_class(const Graph& g, SweepChecks checks, double tolerance) {
  SweepRow row;
  row.graph6 = write_graph6(g);
  row.shortcut = shortcut_check(g);
  if (checks.gm) {
    const GmReport r = gm_check(g, tolerance);
    row.gm_holds = r.holds;
    row.gm_equality = r.equality;
  }
  if (checks.decompose) {
    const auto t = decompose_search(g, DecomposeMode::theorem, tolerance);
    const auto d = decompose_search(g, DecomposeMode::dt, tolerance);
    row.decomposable_theorem = t.has_value();
    row.decomposable_dt = d.has_value();
    if (t) row.cut_mask = t->cut.va;
    else if (d) row.cut_mask = d->cut.va;
  }
  return row;
}

std::string input_fingerprint(int n, SweepChecks checks, double tolerance,
                              const std::vector<Graph>& classes) {
  std::ostringstream key;
  key << "gmv-sweep-v1;n=" << n << ";gm=" << checks.gm << ";decompose=" << checks.decompose
      << ";tol=" << round_sig(tolerance) << ";classes=";
  for (const Graph& g : classes) key << write_graph6(g) << ' ';
  return fnv1a_hex(key.str());
}

// Shard line: "<index>,<csv row>". The first line is "# <hash>".
void load_shards(const std::filesystem::path& dir, const std::string& hash,
                 std::vector<std::optional<SweepRow>>& rows) {
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!name.starts_with("shard-") || !name.ends_with(".csv")) continue;
    std::ifstream in(entry.path());
    std::string line;
    if (!std::getline(in, line) || line != "# " + hash) {
      in.close();
      std::filesystem::remove(entry.path());
      continue;
    }
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      if (comma == std::string::npos) continue;  // torn final line
      try {
        const std::size_t idx = std::stoul(line.substr(0, comma));
        if (idx < rows.size()) rows[idx] = parse_sweep_csv_row(line.substr(comma + 1));
      } catch (const std::exception&) {
        // torn final line from an interrupted run; recomputed below
      }
    }
  }
}

bool load_finished(const std::filesystem::path& dir, const std::string& hash,
                   std::vector<std::optional<SweepRow>>& rows) {
  std::ifstream summary(dir / "summary.json");
  if (!summary) return false;
  try {
    const auto j = nlohmann::json::parse(summary);
    if (j.value("input_hash", "") != hash) return false;
  } catch (const std::exception&) {
    return false;
  }
  std::ifstream csv(dir / "sweep.csv");
  std::string line;
  if (!std::getline(csv, line) || line != sweep_csv_header()) return false;
  std::vector<std::optional<SweepRow>> loaded;
  while (std::getline(csv, line)) loaded.push_back(parse_sweep_csv_row(line));
  if (loaded.size() != rows.size()) return false;
  rows = std::move(loaded);
  return true;
}

}  // namespace

SweepReport sweep(int n, SweepChecks checks, unsigned workers, double tolerance,
                  const std::optional<std::filesystem::path>& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Graph>& classes = all_graphs(n);

  SweepReport report;
  report.n = n;
  report.checks = checks;
  report.tolerance = tolerance;
  report.total_classes = classes.size();
  report.input_hash = input_fingerprint(n, checks, tolerance, classes);

  std::vector<std::optional<SweepRow>> rows(classes.size());
  bool finished = false;
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    finished = load_finished(*out_dir, report.input_hash, rows);
    if (!finished) load_shards(*out_dir, report.input_hash, rows);
  }

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i]) todo.push_back(i);

  workers = std::max(1U, workers);
  std::vector<std::unique_ptr<std::ofstream>> shards;
  std::vector<std::mutex> shard_mu(workers);
  if (out_dir && !todo.empty()) {
    for (unsigned w = 0; w < workers; ++w) {
      const auto path = *out_dir / ("shard-" + std::to_string(w) + ".csv");
      const bool fresh = !std::filesystem::exists(path);
      auto out = std::make_unique<std::ofstream>(path, std::ios::app);
      if (!*out) throw std::runtime_error("cannot write shard " + path.string());
      if (fresh) *out << "# " << report.input_hash << "\n" << std::flush;
      shards.push_back(std::move(out));
    }
  }

  parallel_for(todo.size(), workers, [&](std::size_t t) {
    const std::size_t idx = todo[t];
    SweepRow row = evaluate_class(classes[idx], checks, tolerance);
    if (!shards.empty()) {
      const std::size_t w = idx % shards.size();
      std::lock_guard lock(shard_mu[w]);
      *shards[w] << idx << ',' << sweep_csv_row(row) << '\n' << std::flush;
    }
    rows[idx] = std::move(row);
  });
  shards.clear();

  std::map<std::string, std::size_t> index_of;
  if (checks.decompose)
    for (std::size_t i = 0; i < classes.size(); ++i) index_of[rows[i]->graph6] = i;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& row = *rows[i];
    report.rows.push_back(row);
    if (checks.gm) {
      if (row.gm_holds) {
        ++report.gm_holds_count;
      } else {
        report.counterexamples.push_back({row.graph6, gm_check(classes[i], tolerance).prefix_margins});
      }
      if (row.gm_equality) ++report.gm_equality_count;
    }
    ++report.shortcut_histogram[std::string(to_string(row.shortcut))];
    if (checks.decompose) {
      report.decomposable_theorem = report.decomposable_theorem.value_or(0) + (*row.decomposable_theorem ? 1 : 0);
      report.decomposable_dt = report.decomposable_dt.value_or(0) + (*row.decomposable_dt ? 1 : 0);
      const SweepRow& co = *rows[index_of.at(canonical_form(complement(classes[i])))];
      const bool shortcut = row.shortcut != Shortcut::none;
      const bool t = shortcut || *row.decomposable_theorem || *co.decomposable_theorem;
      const bool d = shortcut || *row.decomposable_dt || *co.decomposable_dt;
      report.decomposable_theorem_closure = report.decomposable_theorem_closure.value_or(0) + (t ? 1 : 0);
      report.decomposable_dt_closure = report.decomposable_dt_closure.value_or(0) + (d ? 1 : 0);
    }
  }

  if (out_dir && !finished) {
    {
      std::ofstream csv(*out_dir / "sweep.csv", std::ios::trunc);
      csv << sweep_csv_header() << "\n";
      for (const SweepRow& row : report.rows) csv << sweep_csv_row(row) << "\n";
      std::ofstream summary(*out_dir / "summary.json", std::ios::trunc);
      summary << summary_json(report).dump(2) << "\n";
    }
    for (const auto& entry : std::filesystem::directory_iterator(*out_dir)) {
      const std::string name = entry.path().filename().string();
      if (name.starts_with("shard-") && name.ends_with(".csv")) std::filesystem::remove(entry.path());
    }
  }

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace gmv
