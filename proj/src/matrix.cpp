#include "circmin/matrix.hpp"

#include <algorithm>
#include <string>

namespace circmin {

namespace {

std::string row_label(int i) { return "row " + std::to_string(i); }

/// Keep row i iff no other row's interval is strictly contained in it and no
/// earlier row equals it.
std::vector<int> dominating_rows(const std::vector<CircularInterval>& rows,
                                 const GroundSet& g) {
  std::vector<int> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool dominating = false;
    for (std::size_t j = 0; j < rows.size() && !dominating; ++j) {
      if (i == j) continue;
      if (!interval_contains_interval(rows[i], rows[j], g)) continue;
      bool equal = interval_contains_interval(rows[j], rows[i], g);
      if (!equal || j < i) dominating = true;
    }
    if (dominating) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

CircularMatrix::CircularMatrix(GroundSet g, std::vector<CircularInterval> rows,
                               std::optional<CirculantPattern> pattern)
    : g_(g), rows_(std::move(rows)), pattern_(pattern) {}

CircularMatrix CircularMatrix::from_intervals(
    int n, const std::vector<std::pair<int, int>>& raw, bool drop_dominated) {
  GroundSet g(n);
  if (raw.empty()) {
    throw DomainError(ErrorCode::ZeroRowOrColumn, "matrix has no rows");
  }
  std::vector<CircularInterval> rows;
  rows.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [lo, hi] = raw[i];
    g.check(lo);
    g.check(hi);
    if (lo == hi) {
      throw DomainError(ErrorCode::RowTooSmall,
                        row_label(static_cast<int>(i) + 1) + " has a single 1");
    }
    rows.push_back({lo, hi});
  }

  auto dominating = dominating_rows(rows, g);
  if (!dominating.empty()) {
    if (!drop_dominated) {
      throw DomainError(ErrorCode::DominatingRow,
                        row_label(dominating.front() + 1) +
                            " dominates another row");
    }
    for (auto it = dominating.rbegin(); it != dominating.rend(); ++it) {
      rows.erase(rows.begin() + *it);
    }
    if (rows.empty()) {
      throw DomainError(ErrorCode::ZeroRowOrColumn,
                        "all rows removed as dominating");
    }
  }

  std::vector<char> covered(n + 1, 0);
  for (const auto& r : rows) {
    for (int x : interval_members(r, g)) covered[x] = 1;
  }
  for (int c = 1; c <= n; ++c) {
    if (!covered[c]) {
      throw DomainError(ErrorCode::ZeroRowOrColumn,
                        "column " + std::to_string(c) + " is all zeros");
    }
  }
  return CircularMatrix(g, std::move(rows), std::nullopt);
}

CircularMatrix CircularMatrix::from_dense(
    const std::vector<std::vector<int>>& dense, bool drop_dominated) {
  if (dense.empty()) {
    throw DomainError(ErrorCode::ZeroRowOrColumn, "matrix has no rows");
  }
  int n = static_cast<int>(dense.front().size());
  GroundSet g(n);
  std::vector<std::pair<int, int>> rows;
  rows.reserve(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    const auto& row = dense[i];
    if (static_cast<int>(row.size()) != n) {
      throw DomainError(ErrorCode::NonCircularRow,
                        row_label(static_cast<int>(i) + 1) +
                            " has wrong length");
    }
    int ones = 0;
    for (int v : row) {
      if (v != 0 && v != 1) {
        throw DomainError(ErrorCode::NonCircularRow,
                          row_label(static_cast<int>(i) + 1) +
                              " has an entry outside {0,1}");
      }
      ones += v;
    }
    if (ones == 0) {
      throw DomainError(ErrorCode::ZeroRowOrColumn,
                        row_label(static_cast<int>(i) + 1) + " is all zeros");
    }
    if (ones == 1) {
      throw DomainError(ErrorCode::RowTooSmall,
                        row_label(static_cast<int>(i) + 1) + " has a single 1");
    }
    if (ones == n) {
      rows.emplace_back(1, n);
      continue;
    }
    // A support that is a circular interval has exactly one rising edge.
    int start = 0;
    int starts = 0;
    for (int c = 1; c <= n; ++c) {
      int prev = row[g.prev(c) - 1];
      if (row[c - 1] == 1 && prev == 0) {
        start = c;
        ++starts;
      }
    }
    if (starts != 1) {
      throw DomainError(ErrorCode::NonCircularRow,
                        row_label(static_cast<int>(i) + 1) +
                            " support is not a circular interval");
    }
    rows.emplace_back(start, g.add(start, ones - 1));
  }
  return from_intervals(n, rows, drop_dominated);
}

CircularMatrix CircularMatrix::circulant(int n, int k) {
  if (n < 4) {
    throw DomainError(ErrorCode::ParameterOutOfRange,
                      "circulant matrix needs n >= 4, got " +
                          std::to_string(n));
  }
  if (k < 2 || k > n - 1) {
    throw DomainError(ErrorCode::ParameterOutOfRange,
                      "circulant weight must satisfy 2 <= k <= n-1, got k=" +
                          std::to_string(k));
  }
  GroundSet g(n);
  std::vector<CircularInterval> rows;
  rows.reserve(n);
  for (int i = 1; i <= n; ++i) rows.push_back({i, g.add(i, k - 1)});
  return CircularMatrix(g, std::move(rows), CirculantPattern{n, k});
}

const CircularInterval& CircularMatrix::row(int i) const {
  if (i < 1 || i > row_count()) {
    throw DomainError(ErrorCode::IndexOutOfRange,
                      "row index " + std::to_string(i) + " outside [1," +
                          std::to_string(row_count()) + "]");
  }
  return rows_[i - 1];
}

std::vector<int> CircularMatrix::row_support(int i) const {
  return interval_members(row(i), g_);
}

std::vector<int> trace(const CircularMatrix& a, int i,
                       const std::vector<int>& kept) {
  const GroundSet& g = a.ground();
  std::vector<char> keep(g.size() + 1, 0);
  for (int c : kept) {
    g.check(c);
    keep[c] = 1;
  }
  std::vector<int> out;
  for (int x : interval_members(a.row(i), g)) {
    if (keep[x]) out.push_back(x);
  }
  return out;
}

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> complement(const GroundSet& g, const std::vector<int>& cols) {
  std::vector<char> in(g.size() + 1, 0);
  for (int c : cols) {
    g.check(c);
    in[c] = 1;
  }
  std::vector<int> out;
  for (int c = 1; c <= g.size(); ++c) {
    if (!in[c]) out.push_back(c);
  }
  return out;
}

}  // namespace

Minor contract(const CircularMatrix& a, const std::vector<int>& removed) {
  const GroundSet& g = a.ground();
  std::vector<int> kept = complement(g, removed);
  if (kept.empty()) {
    throw DomainError(ErrorCode::ParameterOutOfRange,
                      "contraction would remove every column");
  }

  std::vector<std::vector<int>> traces;
  std::vector<std::vector<int>> sorted_traces;
  traces.reserve(a.row_count());
  for (int i = 1; i <= a.row_count(); ++i) {
    traces.push_back(trace(a, i, kept));
    auto s = traces.back();
    std::sort(s.begin(), s.end());
    sorted_traces.push_back(std::move(s));
  }

  Minor m;
  m.columns = kept;
  m.kind = MinorKind::Contraction;
  bool all_full = true;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    if (sorted_traces[i].size() != kept.size()) all_full = false;
    bool keep_row = true;
    for (std::size_t j = 0; j < traces.size() && keep_row; ++j) {
      if (i == j) continue;
      if (!subset_of(sorted_traces[j], sorted_traces[i])) continue;
      bool equal = sorted_traces[j].size() == sorted_traces[i].size();
      if (!equal || j < i) keep_row = false;
    }
    if (keep_row) {
      m.traces.push_back(traces[i]);
      m.source_rows.push_back(static_cast<int>(i) + 1);
    }
  }
  if (all_full) {
    throw DomainError(ErrorCode::EmptyResult,
                      "every trace equals the surviving column set; the "
                      "contraction collapses to an all-ones row");
  }
  return m;
}

Minor delete_columns(const CircularMatrix& a, const std::vector<int>& removed) {
  const GroundSet& g = a.ground();
  std::vector<int> kept = complement(g, removed);
  if (kept.empty()) {
    throw DomainError(ErrorCode::ParameterOutOfRange,
                      "deletion would remove every column");
  }
  std::vector<char> gone(g.size() + 1, 0);
  for (int c : removed) gone[c] = 1;

  Minor m;
  m.columns = kept;
  m.kind = MinorKind::Deletion;
  for (int i = 1; i <= a.row_count(); ++i) {
    bool hit = false;
    auto support = a.row_support(i);
    for (int x : support) {
      if (gone[x]) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      m.traces.push_back(std::move(support));
      m.source_rows.push_back(i);
    }
  }
  return m;
}

std::optional<CirculantPattern> recognize_circulant(const Minor& m) {
  int s = static_cast<int>(m.columns.size());
  if (static_cast<int>(m.traces.size()) != s || s < 3) return std::nullopt;
  int p = static_cast<int>(m.traces.front().size());
  if (p < 2 || p > s - 1) return std::nullopt;
  for (const auto& t : m.traces) {
    if (static_cast<int>(t.size()) != p) return std::nullopt;
  }

  // Every cyclic p-window of the surviving columns must appear as a trace.
  std::vector<std::vector<int>> windows;
  windows.reserve(s);
  for (int j = 0; j < s; ++j) {
    std::vector<int> w;
    for (int t = 0; t < p; ++t) w.push_back(m.columns[(j + t) % s]);
    std::sort(w.begin(), w.end());
    windows.push_back(std::move(w));
  }
  std::sort(windows.begin(), windows.end());

  std::vector<std::vector<int>> sorted;
  sorted.reserve(s);
  for (const auto& t : m.traces) {
    auto v = t;
    std::sort(v.begin(), v.end());
    sorted.push_back(std::move(v));
  }
  std::sort(sorted.begin(), sorted.end());
  if (sorted != windows) return std::nullopt;
  return CirculantPattern{s, p};
}

}  // namespace circmin
