#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circmin/cyclic.hpp"

namespace circmin {

/// Parameters of a circulant matrix: n rows/columns, row i supported on
/// [i, i+weight)_n. Requires 2 <= weight <= order-1.
struct CirculantPattern {
  int order;
  int weight;

  bool operator==(const CirculantPattern&) const = default;
};

/// A 0/1 matrix whose row i is the incidence vector of a circular interval
/// [lo_i, hi_i]_n. Construction validates: every row has at least two ones,
/// no row dominates another, and every column is covered.
class CircularMatrix {
 public:
  /// Build from 1-based inclusive interval endpoints. With drop_dominated,
  /// dominating rows are removed (keeping the smallest index among
  /// duplicates) instead of rejected.
  static CircularMatrix from_intervals(
      int n, const std::vector<std::pair<int, int>>& rows,
      bool drop_dominated = false);

  /// Build from dense 0/1 row vectors; every support must be a circular
  /// interval.
  static CircularMatrix from_dense(const std::vector<std::vector<int>>& rows,
                                   bool drop_dominated = false);

  /// The circulant matrix with given order and row weight.
  static CircularMatrix circulant(int n, int k);

  const GroundSet& ground() const { return g_; }
  int column_count() const { return g_.size(); }
  int row_count() const { return static_cast<int>(rows_.size()); }

  /// Row interval, 1-based row index.
  const CircularInterval& row(int i) const;
  int lower(int i) const { return row(i).lo; }
  int upper(int i) const { return row(i).hi; }
  std::vector<int> row_support(int i) const;

  const std::vector<CircularInterval>& rows() const { return rows_; }
  const std::optional<CirculantPattern>& pattern() const { return pattern_; }

 private:
  CircularMatrix(GroundSet g, std::vector<CircularInterval> rows,
                 std::optional<CirculantPattern> pattern);

  GroundSet g_;
  std::vector<CircularInterval> rows_;
  std::optional<CirculantPattern> pattern_;
};

enum class MinorKind { Contraction, Deletion };

/// Result of a contraction or deletion: the surviving columns in cyclic
/// order, one trace per kept row, and the originating row per trace.
struct Minor {
  std::vector<int> columns;               // ascending
  std::vector<std::vector<int>> traces;   // each in traversal order
  MinorKind kind = MinorKind::Contraction;
  std::vector<int> source_rows;           // 1-based, aligned with traces
};

/// Intersection of row i with the kept columns, in traversal order from the
/// row's lower endpoint. `kept` must be ascending.
std::vector<int> trace(const CircularMatrix& a, int i,
                       const std::vector<int>& kept);

/// Contraction minor: drop the columns in `removed`, keep the
/// inclusion-minimal distinct traces.
Minor contract(const CircularMatrix& a, const std::vector<int>& removed);

/// Deletion minor: drop the columns in `removed` and every row meeting them.
Minor delete_columns(const CircularMatrix& a, const std::vector<int>& removed);

/// Decide whether a contraction minor is a circulant matrix: as many traces
/// as columns, all traces of one size p with 2 <= p <= s-1, and every cyclic
/// p-window of the surviving columns present.
std::optional<CirculantPattern> recognize_circulant(const Minor& m);

}  // namespace circmin
