#include "circmin/synthesis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace circmin {

namespace {

std::string set_text(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

std::vector<int> complement(const GroundSet& g, const std::vector<int>& in) {
  std::vector<char> mark(g.size() + 1, 0);
  for (int x : in) mark[x] = 1;
  std::vector<int> out;
  for (int v = 1; v <= g.size(); ++v) {
    if (!mark[v]) out.push_back(v);
  }
  return out;
}

/// The bullet list is positional (b_1 < ... < b_s), so callers may pass any
/// order but the machinery works on the ascending form.
std::vector<int> ascending(const GroundSet& g, std::vector<int> bullets) {
  for (int b : bullets) g.check(b);
  std::sort(bullets.begin(), bullets.end());
  bullets.erase(std::unique(bullets.begin(), bullets.end()), bullets.end());
  return bullets;
}

/// Contract at the bullets and require the minor to be the expected
/// circulant.
void require_minor(const CircularMatrix& a, const std::vector<int>& bullets,
                   int weight) {
  auto rec = recognize_circulant(contract(a, complement(a.ground(), bullets)));
  int s = static_cast<int>(bullets.size());
  if (!rec || rec->order != s || rec->weight != weight) {
    throw DomainError(ErrorCode::NotCirculantMinor,
                      "contraction at " + set_text(bullets) +
                          " is not a circulant minor with order " +
                          std::to_string(s) + " and weight " +
                          std::to_string(weight));
  }
}

struct WindowTable {
  std::vector<std::vector<int>> candidates;  // per window, ascending rows
  std::vector<int> selected;                 // r(j), 1-based rows
  std::vector<int> offsets;                  // h_j
};

WindowTable build_window_table(const CircularMatrix& a,
                               const std::vector<int>& bullets, int weight) {
  const GroundSet& g = a.ground();
  int s = static_cast<int>(bullets.size());
  std::vector<std::vector<int>> windows(s);
  for (int j = 0; j < s; ++j) {
    for (int t = weight - 1; t >= 0; --t) {
      windows[j].push_back(bullets[((j - t) % s + s) % s]);
    }
    std::sort(windows[j].begin(), windows[j].end());
  }

  WindowTable wt;
  wt.candidates.assign(s, {});
  for (int i = 1; i <= a.row_count(); ++i) {
    auto tr = trace(a, i, bullets);
    if (static_cast<int>(tr.size()) != weight) continue;
    std::sort(tr.begin(), tr.end());
    for (int j = 0; j < s; ++j) {
      if (tr == windows[j]) {
        wt.candidates[j].push_back(i);
        break;
      }
    }
  }

  wt.selected.assign(s, 0);
  wt.offsets.assign(s, 0);
  for (int j = 0; j < s; ++j) {
    if (wt.candidates[j].empty()) {
      throw DomainError(ErrorCode::EmptyWindow,
                        "no row traces the window ending at bullet " +
                            std::to_string(bullets[j]));
    }
    int best = 0, best_offset = 0;
    bool tie = false;
    for (int i : wt.candidates[j]) {
      int off = circ_dist(bullets[j], a.upper(i), g);
      if (best == 0 || off < best_offset) {
        best = i;
        best_offset = off;
        tie = false;
      } else if (off == best_offset) {
        tie = true;
      }
    }
    if (tie) {
      throw DomainError(ErrorCode::VerificationFailed,
                        "two candidate rows share an upper endpoint, which "
                        "only mutually dominating rows could");
    }
    wt.selected[j] = best;
    wt.offsets[j] = best_offset;
  }
  return wt;
}

/// One rewriting pass: each bullet moves to the selected row's upper
/// endpoint, or one before the next window row's lower endpoint when that
/// endpoint falls inside the reachable stretch.
std::vector<int> rewrite_pass(const CircularMatrix& a,
                              const std::vector<int>& bullets, int weight,
                              const WindowTable& wt,
                              std::vector<WindowSelection>* table) {
  const GroundSet& g = a.ground();
  int s = static_cast<int>(bullets.size());
  std::vector<int> rewritten(s, 0);
  for (int j = 0; j < s; ++j) {
    int up = a.upper(wt.selected[j]);
    int lo_next = a.lower(wt.selected[(j + weight) % s]);
    int to_lower = circ_dist(bullets[j], lo_next, g);
    int to_upper = circ_dist(bullets[j], up, g);
    // (bullets[j], up] is empty when the offsets coincide at zero.
    bool inside = to_lower >= 1 && to_lower <= to_upper;
    rewritten[j] = inside ? g.prev(lo_next) : up;
    if (table) {
      table->push_back({j + 1, bullets[j], wt.candidates[j], wt.selected[j],
                        wt.offsets[j], rewritten[j]});
    }
  }
  std::sort(rewritten.begin(), rewritten.end());
  if (std::adjacent_find(rewritten.begin(), rewritten.end()) !=
      rewritten.end()) {
    throw DomainError(ErrorCode::VerificationFailed,
                      "bullet rewriting collapsed two bullets");
  }
  return rewritten;
}

struct Normalization {
  std::vector<int> bullets;  // fixpoint, ascending
  std::vector<WindowSelection> table;
  int passes = 1;
};

Normalization normalize_impl(const CircularMatrix& a,
                             const std::vector<int>& bullets, int weight) {
  Normalization norm;
  WindowTable wt = build_window_table(a, bullets, weight);
  norm.bullets = rewrite_pass(a, bullets, weight, wt, &norm.table);

  const GroundSet& g = a.ground();
  int n = g.size();
  for (int pass = 1;; ++pass) {
    WindowTable cur = build_window_table(a, norm.bullets, weight);
    // Stability: every bullet already sits at one of the two endpoints the
    // rewriting rule can produce.
    bool stable = true;
    int s = static_cast<int>(norm.bullets.size());
    for (int j = 0; j < s && stable; ++j) {
      int up = a.upper(cur.selected[j]);
      int before_lower = g.prev(a.lower(cur.selected[(j + weight) % s]));
      stable = norm.bullets[j] == up || norm.bullets[j] == before_lower;
    }
    if (stable) break;
    if (pass >= n) {
      throw DomainError(ErrorCode::NotAFixpoint,
                        "bullet rewriting did not stabilize after " +
                            std::to_string(n) + " passes");
    }
    norm.bullets = rewrite_pass(a, norm.bullets, weight, cur, nullptr);
    norm.passes = pass + 1;
  }
  return norm;
}

}  // namespace

std::vector<std::vector<int>> window_rows(const CircularMatrix& a,
                                          const std::vector<int>& bullets,
                                          int weight) {
  auto sorted = ascending(a.ground(), bullets);
  require_minor(a, sorted, weight);
  return build_window_table(a, sorted, weight).candidates;
}

int select_window_row(const CircularMatrix& a, const std::vector<int>& bullets,
                      int weight, int j) {
  auto sorted = ascending(a.ground(), bullets);
  int s = static_cast<int>(sorted.size());
  if (j < 1 || j > s) {
    throw DomainError(ErrorCode::IndexOutOfRange,
                      "window index " + std::to_string(j) + " outside [1," +
                          std::to_string(s) + "]");
  }
  require_minor(a, sorted, weight);
  return build_window_table(a, sorted, weight).selected[j - 1];
}

std::vector<int> normalize_bullets(const CircularMatrix& a,
                                   const std::vector<int>& bullets,
                                   int weight) {
  auto sorted = ascending(a.ground(), bullets);
  require_minor(a, sorted, weight);
  auto norm = normalize_impl(a, sorted, weight);
  require_minor(a, norm.bullets, weight);
  return norm.bullets;
}

MinorWitness circuits_to_minor(const CircularMatrix& a,
                               const CircuitFamily& f) {
  ArcDigraph d = ArcDigraph::for_matrix(a);
  auto bad = bad_arcs(d, f);
  if (!bad.empty()) {
    throw DomainError(ErrorCode::BadArcPresent,
                      "row arc " + std::to_string(bad.front().arc.tail) +
                          " -> " + std::to_string(bad.front().arc.head) +
                          " jumps one essential bullet too few");
  }
  MinorWitness w;
  w.bullets = f.classes.essential_bullets;
  w.removed = complement(a.ground(), w.bullets);
  w.order = f.row_arc_total;
  w.weight = f.winding_total;
  w.circuit_count = f.size();
  if (w.weight < 2) {
    throw DomainError(ErrorCode::NotCirculantMinor,
                      "pooled winding 1 yields an identity minor, not a "
                      "circulant one");
  }
  if (w.weight >= w.order) {
    throw DomainError(ErrorCode::NotCirculantMinor,
                      "pooled winding equals the bullet count; the minor "
                      "collapses to all-ones rows");
  }
  auto rec = recognize_circulant(contract(a, w.removed));
  if (!rec || rec->order != w.order || rec->weight != w.weight) {
    throw DomainError(ErrorCode::VerificationFailed,
                      "family bullets " + set_text(w.bullets) +
                          " did not produce the predicted circulant minor");
  }
  return w;
}

std::pair<CircuitFamily, SynthesisTrace> minor_to_circuits(
    const CircularMatrix& a, const std::vector<int>& bullets, int weight) {
  const GroundSet& g = a.ground();
  auto sorted = ascending(g, bullets);
  require_minor(a, sorted, weight);

  SynthesisTrace trace;
  trace.bullets = sorted;
  auto norm = normalize_impl(a, sorted, weight);
  trace.normalized = norm.bullets;
  trace.table = std::move(norm.table);
  trace.passes = norm.passes;

  const std::vector<int>& nb = trace.normalized;
  int s = static_cast<int>(nb.size());
  WindowTable wt = build_window_table(a, nb, weight);

  std::vector<Arc> arcs;
  for (int j = 0; j < s; ++j) {
    int row = wt.selected[j];
    Arc ra{g.prev(a.lower(row)), a.upper(row), ArcKind::Row, row};
    trace.selected_row_arcs.push_back(ra);
    arcs.push_back(ra);
  }
  for (int j = 0; j < s; ++j) {
    int up = a.upper(wt.selected[j]);
    int before_lower = g.prev(a.lower(wt.selected[(j + weight) % s]));
    if (nb[j] != before_lower) {
      trace.forward_join_indices.push_back(j + 1);
      trace.forward_join_vertices.push_back(nb[j]);
      std::vector<Arc> path;
      for (int x = nb[j]; x != before_lower; x = g.next(x)) {
        path.push_back({x, g.next(x), ArcKind::Forward, 0});
      }
      arcs.insert(arcs.end(), path.begin(), path.end());
      trace.forward_paths.push_back(std::move(path));
    } else if (nb[j] != up) {
      trace.reverse_join_indices.push_back(j + 1);
      trace.reverse_join_vertices.push_back(nb[j]);
      std::vector<Arc> path;
      for (int x = up; x != nb[j]; x = g.prev(x)) {
        path.push_back({x, g.prev(x), ArcKind::Reverse, 0});
      }
      arcs.insert(arcs.end(), path.begin(), path.end());
      trace.reverse_paths.push_back(std::move(path));
    }
  }

  // The arc union must be a disjoint union of circuits: one arc out of and
  // into every touched vertex.
  std::map<int, const Arc*> out_arc;
  std::map<int, int> in_degree;
  for (const Arc& a2 : arcs) {
    if (!out_arc.emplace(a2.tail, &a2).second) {
      throw DomainError(ErrorCode::DecompositionMismatch,
                        "vertex " + std::to_string(a2.tail) +
                            " has two outgoing arcs in the construction");
    }
    ++in_degree[a2.head];
  }
  for (const auto& [v, deg] : in_degree) {
    if (deg != 1 || !out_arc.count(v)) {
      throw DomainError(ErrorCode::DecompositionMismatch,
                        "vertex " + std::to_string(v) +
                            " is unbalanced in the construction");
    }
  }

  ArcDigraph d = ArcDigraph::for_matrix(a);
  std::vector<Circuit> circuits;
  std::vector<char> visited(g.size() + 1, 0);
  for (const auto& [start, first] : out_arc) {
    if (visited[start]) continue;
    std::vector<Arc> walk;
    int v = start;
    do {
      visited[v] = 1;
      const Arc* a2 = out_arc.at(v);
      walk.push_back(*a2);
      v = a2->head;
    } while (v != start);
    circuits.push_back(validate_circuit(d, walk));
  }

  int expected = std::gcd(s, weight);
  if (static_cast<int>(circuits.size()) != expected) {
    throw DomainError(ErrorCode::DecompositionMismatch,
                      "construction produced " +
                          std::to_string(circuits.size()) + " circuits, "
                          "expected " + std::to_string(expected));
  }

  CircuitFamily family = validate_family(d, std::move(circuits));
  if (family.classes.essential_bullets != nb) {
    throw DomainError(ErrorCode::VerificationFailed,
                      "constructed family has essential bullets " +
                          set_text(family.classes.essential_bullets) +
                          ", expected " + set_text(nb));
  }
  if (!bad_arcs(d, family).empty()) {
    throw DomainError(ErrorCode::VerificationFailed,
                      "constructed family has a bad arc");
  }
  return {std::move(family), std::move(trace)};
}

}  // namespace circmin
