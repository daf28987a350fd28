#pragma once

#include <utility>
#include <vector>

#include "circmin/circuits.hpp"

namespace circmin {

/// A verified circulant contraction minor: surviving columns (the bullets),
/// removed columns, and the recognized parameters.
struct MinorWitness {
  std::vector<int> bullets;  // ascending
  std::vector<int> removed;  // ascending
  int order = 0;             // s
  int weight = 0;            // p
  int circuit_count = 0;     // gcd(order, weight)
};

/// One row of the windowing table: the window ending at `bullet`, its
/// candidate rows, the selected row (minimal offset from the bullet to the
/// row's upper endpoint), and the rewritten bullet.
struct WindowSelection {
  int index = 0;    // 1-based position within the bullet list
  int bullet = 0;
  std::vector<int> candidates;  // ascending row indices
  int row = 0;
  int offset = 0;
  int rewritten = 0;
};

/// Ledger of the reverse construction, reported by the CLI.
struct SynthesisTrace {
  std::vector<int> bullets;             // input, ascending
  std::vector<int> normalized;          // ascending
  std::vector<WindowSelection> table;   // first pass over the input bullets
  int passes = 1;                       // rewriting passes until stable
  std::vector<Arc> selected_row_arcs;           // one per normalized bullet
  std::vector<int> forward_join_indices;        // 1-based positions
  std::vector<int> forward_join_vertices;
  std::vector<std::vector<Arc>> forward_paths;  // aligned with the indices
  std::vector<int> reverse_join_indices;
  std::vector<int> reverse_join_vertices;
  std::vector<std::vector<Arc>> reverse_paths;
};

/// Forward direction: a bad-arc-free family yields the minor at its pooled
/// essential bullets.
MinorWitness circuits_to_minor(const CircularMatrix& a,
                               const CircuitFamily& f);

/// Candidate rows per window: entry j-1 lists the rows whose trace on the
/// bullets is exactly the p-window ending at bullet j. Bullets ascending;
/// the minor at them must already be verified.
std::vector<std::vector<int>> window_rows(const CircularMatrix& a,
                                          const std::vector<int>& bullets,
                                          int weight);

/// The unique candidate row of window j (1-based) minimizing the circular
/// distance from the window's last bullet to the row's upper endpoint.
int select_window_row(const CircularMatrix& a, const std::vector<int>& bullets,
                      int weight, int j);

/// Rewrite each bullet to the adjacent endpoint position that makes the
/// reverse circuit construction possible, preserving the minor.
std::vector<int> normalize_bullets(const CircularMatrix& a,
                                   const std::vector<int>& bullets,
                                   int weight);

/// Reverse direction: from a verified circulant minor to a disjoint circuit
/// family whose pooled essential bullets are the normalized bullet set.
std::pair<CircuitFamily, SynthesisTrace> minor_to_circuits(
    const CircularMatrix& a, const std::vector<int>& bullets, int weight);

}  // namespace circmin
