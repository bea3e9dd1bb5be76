#pragma once

// Exhaustive and random graph generation, and the parallel census sweep.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmv/gm.hpp"
#include "gmv/graph.hpp"

namespace gmv {

/// One canonical representative per isomorphism class, sorted by graph6.
/// Throws std::invalid_argument unless 1 <= n <= 8.
const std::vector<Graph>& all_graphs(int n);

/// One canonical representative per unlabeled tree, sorted by graph6.
/// Throws std::invalid_argument unless 2 <= n <= 10.
const std::vector<Graph>& all_trees(int n);

/// Each pair joined independently with the given probability.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

/// Runs fn(i) for i in [0, count) on up to `workers` threads. The first
/// exception thrown by any call is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

struct SweepChecks {
  bool gm = true;
  bool decompose = false;
};

struct SweepRow {
  std::string graph6;
  bool gm_holds = false;
  bool gm_equality = false;
  Shortcut shortcut = Shortcut::none;
  std::optional<bool> decomposable_theorem;
  std::optional<bool> decomposable_dt;
  std::optional<VertexMask> cut_mask;  // theorem cut if any, else dt cut
};

struct Counterexample {
  std::string graph6;
  std::vector<double> margins;
};

struct SweepReport {
  int n = 0;
  SweepChecks checks;
  double tolerance = kDefaultTolerance;
  std::string input_hash;
  std::size_t total_classes = 0;
  std::size_t gm_holds_count = 0;
  std::size_t gm_equality_count = 0;
  std::optional<std::size_t> decomposable_theorem;
  std::optional<std::size_t> decomposable_dt;
  // Counted with complement and degree-shortcut closure.
  std::optional<std::size_t> decomposable_theorem_closure;
  std::optional<std::size_t> decomposable_dt_closure;
  std::map<std::string, std::size_t> shortcut_histogram;
  std::vector<Counterexample> counterexamples;
  std::vector<SweepRow> rows;
  double wall_time_seconds = 0.0;  // not part of any persisted output
};

/// Sweeps every class on n vertices. With `out_dir`, rows are appended to
/// per-worker shard files as they finish, then merged into sweep.csv and
/// summary.json; a rerun with the same inputs resumes from what exists.
SweepReport sweep(int n, SweepChecks checks, unsigned workers,
                  double tolerance = kDefaultTolerance,
                  const std::optional<std::filesystem::path>& out_dir = std::nullopt);

/// CSV schema: graph6,gm_holds,gm_equality,shortcut,decomposable_theorem,
/// decomposable_dt,cut_mask
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);
SweepRow parse_sweep_csv_row(const std::string& line);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace gmv
