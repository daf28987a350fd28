#include "circmin/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

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

/// Canonical comparison key: sorted vertex list, then the arc walk.
std::vector<int> circuit_key(const Circuit& c) {
  std::vector<int> key = c.sorted_vertices();
  key.push_back(-1);
  for (const Arc& a : c.arcs) {
    key.push_back(a.tail);
    key.push_back(a.head);
    key.push_back(static_cast<int>(a.kind));
  }
  return key;
}

}  // namespace

CircuitEnumeration enumerate_circuits(const ArcDigraph& d,
                                      const OracleLimits& limits) {
  const GroundSet& g = d.ground();
  int n = g.size();
  if (n > 64) {
    throw DomainError(ErrorCode::BoundExceeded,
                      "circuit enumeration supports n <= 64");
  }
  CircuitEnumeration out;
  bool keep_all = d.flavor() == DigraphFlavor::Jump;

  std::vector<Arc> path;
  std::vector<char> on_path(n + 1, 0);

  // Each simple circuit is reported exactly once, rooted at its smallest
  // vertex; the search only descends into larger vertices.
  auto record = [&]() {
    long total = 0;
    Circuit c;
    c.arcs = path;
    for (const Arc& a : path) {
      c.vertices.push_back(a.tail);
      total += d.signed_length(a);
      if (a.kind == ArcKind::Row) ++c.row_arc_count;
      if (a.kind == ArcKind::Long) ++c.long_arc_count;
    }
    c.winding = static_cast<int>(total / n);
    if (keep_all || (c.row_arc_count >= 1 && c.winding >= 1)) {
      out.circuits.push_back(std::move(c));
    }
  };

  auto dfs = [&](auto&& self, int v, int root) -> bool {
    if (static_cast<long>(out.circuits.size()) >= limits.max_circuits) {
      out.capped = true;
      return false;
    }
    for (int id : d.out_arcs(v)) {
      const Arc& a = d.arcs()[id];
      if (a.head == root) {
        path.push_back(a);
        record();
        path.pop_back();
        if (out.capped) return false;
      } else if (a.head > root && !on_path[a.head]) {
        path.push_back(a);
        on_path[a.head] = 1;
        bool ok = self(self, a.head, root);
        on_path[a.head] = 0;
        path.pop_back();
        if (!ok) return false;
      }
    }
    return true;
  };

  for (int root = 1; root <= n && !out.capped; ++root) {
    on_path[root] = 1;
    dfs(dfs, root, root);
    on_path[root] = 0;
  }

  std::sort(out.circuits.begin(), out.circuits.end(),
            [](const Circuit& x, const Circuit& y) {
              return circuit_key(x) < circuit_key(y);
            });
  return out;
}

FamilyEnumeration enumerate_families(const ArcDigraph& d,
                                     const OracleLimits& limits) {
  CircuitEnumeration ce = enumerate_circuits(d, limits);
  FamilyEnumeration out;
  out.capped = ce.capped;

  std::vector<std::uint64_t> masks;
  masks.reserve(ce.circuits.size());
  for (const Circuit& c : ce.circuits) {
    std::uint64_t m = 0;
    for (int v : c.vertices) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }

  bool jump = d.flavor() == DigraphFlavor::Jump;
  std::vector<int> chosen;
  auto emit = [&]() {
    std::vector<Circuit> members;
    members.reserve(chosen.size());
    for (int i : chosen) members.push_back(ce.circuits[i]);
    if (jump) {
      const Circuit& first = members.front();
      for (const Circuit& c : members) {
        if (c.row_arc_count != first.row_arc_count ||
            c.long_arc_count != first.long_arc_count ||
            c.winding != first.winding) {
          return;  // only uniform jump families are meaningful
        }
      }
    }
    CircuitFamily f = validate_family(d, std::move(members));
    if (!jump && !bad_arcs(d, f).empty()) return;
    out.families.push_back(std::move(f));
  };

  auto extend = [&](auto&& self, std::size_t start,
                    std::uint64_t used) -> bool {
    for (std::size_t i = start; i < ce.circuits.size(); ++i) {
      if (masks[i] & used) continue;
      if (static_cast<long>(out.families.size()) >= limits.max_families) {
        out.capped = true;
        return false;
      }
      chosen.push_back(static_cast<int>(i));
      emit();
      bool ok = self(self, i + 1, used | masks[i]);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  extend(extend, 0, 0);
  return out;
}

std::vector<MinorHit> brute_minors(const CircularMatrix& a,
                                   const OracleLimits& limits) {
  int n = a.column_count();
  if (n > limits.max_columns || n > 30) {
    throw DomainError(ErrorCode::BoundExceeded,
                      "matrix has " + std::to_string(n) +
                          " columns, oracle bound is " +
                          std::to_string(std::min(limits.max_columns, 30)));
  }
  std::vector<MinorHit> hits;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size < 3 || size > n - 1) continue;
    std::vector<int> bullets;
    bullets.reserve(size);
    for (int v = 1; v <= n; ++v) {
      if (mask & (std::uint32_t{1} << (v - 1))) bullets.push_back(v);
    }
    std::optional<CirculantPattern> rec;
    try {
      rec = recognize_circulant(contract(a, complement(a.ground(), bullets)));
    } catch (const DomainError&) {
      continue;  // degenerate all-ones contraction
    }
    if (!rec) continue;
    MinorHit hit;
    hit.bullets = bullets;
    hit.normalized = normalize_bullets(a, bullets, rec->weight);
    hit.order = rec->order;
    hit.weight = rec->weight;
    hits.push_back(std::move(hit));
  }
  std::sort(hits.begin(), hits.end(), [](const MinorHit& x, const MinorHit& y) {
    return x.bullets < y.bullets;
  });
  return hits;
}

std::optional<CirculantPattern> circulant_isomorphic(const Minor& m) {
  int s = static_cast<int>(m.columns.size());
  if (static_cast<int>(m.traces.size()) != s || s < 3 || s > 8) {
    return std::nullopt;
  }
  int p = static_cast<int>(m.traces.front().size());
  if (p < 2 || p > s - 1) return std::nullopt;
  for (const auto& t : m.traces) {
    if (static_cast<int>(t.size()) != p) return std::nullopt;
  }
  // Column sums survive any permutation, and in the target they are all p.
  {
    std::map<int, int> frequency;
    for (const auto& t : m.traces) {
      for (int x : t) ++frequency[x];
    }
    for (int c : m.columns) {
      if (frequency[c] != p) return std::nullopt;
    }
  }

  // Positions of the columns under a candidate relabeling.
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);

  std::set<std::vector<int>> target;
  for (int j = 0; j < s; ++j) {
    std::vector<int> w;
    for (int t = 0; t < p; ++t) w.push_back((j + t) % s);
    std::sort(w.begin(), w.end());
    target.insert(std::move(w));
  }

  std::vector<std::vector<int>> trace_cols;
  for (const auto& t : m.traces) {
    std::vector<int> cols;
    for (int x : t) {
      auto it = std::lower_bound(m.columns.begin(), m.columns.end(), x);
      cols.push_back(static_cast<int>(it - m.columns.begin()));
    }
    trace_cols.push_back(std::move(cols));
  }

  do {
    std::set<std::vector<int>> got;
    for (const auto& cols : trace_cols) {
      std::vector<int> w;
      for (int c : cols) w.push_back(perm[c]);
      std::sort(w.begin(), w.end());
      got.insert(std::move(w));
    }
    if (got == target) return CirculantPattern{s, p};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

CircularMatrix random_circular_matrix(std::mt19937_64& rng, int min_n,
                                      int max_n) {
  for (;;) {
    int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
    int target = std::uniform_int_distribution<int>(3, n)(rng);
    std::vector<std::pair<int, int>> rows;
    rows.reserve(target);
    for (int i = 0; i < target; ++i) {
      int lo = std::uniform_int_distribution<int>(1, n)(rng);
      int len = std::uniform_int_distribution<int>(2, n - 1)(rng);
      int hi = (lo - 1 + len - 1) % n + 1;
      rows.emplace_back(lo, hi);
    }
    try {
      return CircularMatrix::from_intervals(n, rows, /*drop_dominated=*/true);
    } catch (const DomainError&) {
      continue;  // uncovered column; redraw
    }
  }
}

CrossReport cross_validate(const CircularMatrix& a,
                           const OracleLimits& limits) {
  const GroundSet& g = a.ground();
  int n = g.size();
  CrossReport report;
  report.columns = n;
  report.rows = a.row_count();

  report.subset_hits = brute_minors(a, limits);

  ArcDigraph d = ArcDigraph::for_matrix(a);
  FamilyEnumeration fe = enumerate_families(d, limits);
  report.capped = fe.capped;
  if (fe.capped) {
    report.discrepancies.push_back(
        "enumeration capped; family side is incomplete");
  }

  std::map<std::vector<int>, FamilyRecord> family_sets;
  for (const CircuitFamily& f : fe.families) {
    const auto& bullets = f.classes.essential_bullets;
    if (f.winding_total < 2 || f.winding_total >= f.row_arc_total ||
        static_cast<int>(bullets.size()) > n - 1) {
      ++report.boundary_families;
      continue;
    }
    auto [it, fresh] = family_sets.try_emplace(
        bullets,
        FamilyRecord{bullets, f.row_arc_total, f.winding_total, 0});
    ++it->second.family_count;
    if (!fresh && (it->second.order != f.row_arc_total ||
                   it->second.weight != f.winding_total)) {
      report.discrepancies.push_back(
          "families at " + set_text(bullets) + " disagree on parameters");
    }
  }
  for (auto& [bullets, rec] : family_sets) {
    report.family_sets.push_back(rec);
    ++report.counts[{rec.order, rec.weight}];
  }

  std::set<std::vector<int>> normalized_sets;
  for (const MinorHit& hit : report.subset_hits) {
    normalized_sets.insert(hit.normalized);
  }

  for (const auto& bullets : normalized_sets) {
    if (!family_sets.count(bullets)) {
      report.discrepancies.push_back("normalized bullet set " +
                                     set_text(bullets) +
                                     " has no circuit family");
    }
  }
  for (const auto& [bullets, rec] : family_sets) {
    if (!normalized_sets.count(bullets)) {
      report.discrepancies.push_back("family bullet set " +
                                     set_text(bullets) +
                                     " was not found by subset enumeration");
    }
  }

  // Round-trip every subset hit through the reverse construction.
  for (const MinorHit& hit : report.subset_hits) {
    try {
      auto [family, trace] = minor_to_circuits(a, hit.bullets, hit.weight);
      if (family.classes.essential_bullets != hit.normalized) {
        report.discrepancies.push_back(
            "construction at " + set_text(hit.bullets) +
            " landed on " + set_text(family.classes.essential_bullets) +
            " instead of " + set_text(hit.normalized));
      }
      MinorWitness w = circuits_to_minor(a, family);
      if (w.bullets != hit.normalized || w.order != hit.order ||
          w.weight != hit.weight) {
        report.discrepancies.push_back("round trip at " +
                                       set_text(hit.bullets) +
                                       " changed the witness");
      }
    } catch (const DomainError& e) {
      report.discrepancies.push_back("construction at " +
                                     set_text(hit.bullets) + " failed: " +
                                     e.what());
    }
  }
  return report;
}

std::vector<JumpFamilyInstance> enumerate_jump_families(
    int n, int k, const OracleLimits& limits) {
  ArcDigraph d = ArcDigraph::circulant_jump(n, k);
  FamilyEnumeration fe = enumerate_families(d, limits);
  std::vector<JumpFamilyInstance> out;
  for (const CircuitFamily& f : fe.families) {
    const Circuit& first = f.circuits.front();
    JumpFamilyParams params{f.size(), first.winding, first.row_arc_count,
                            first.long_arc_count};
    if (std::gcd(params.winding,
                 std::gcd(params.short_jumps, params.long_jumps)) != 1) {
      continue;
    }
    if (params.count * (params.short_jumps + params.long_jumps) > n - 2 ||
        params.count * params.winding > k - 1) {
      continue;
    }
    std::vector<int> vertices;
    for (const Circuit& c : f.circuits) {
      vertices.insert(vertices.end(), c.vertices.begin(), c.vertices.end());
    }
    std::sort(vertices.begin(), vertices.end());
    out.push_back({params, std::move(vertices)});
  }
  return out;
}

std::vector<std::string> jump_reverse_correspondence(
    int n, int k, const OracleLimits& limits) {
  std::vector<std::string> issues;
  GroundSet g(n);

  ArcDigraph dr = ArcDigraph::circulant_reverse(n, k);
  FamilyEnumeration re = enumerate_families(dr, limits);
  auto jumps = enumerate_jump_families(n, k, limits);
  if (re.capped) issues.push_back("reverse-side enumeration capped");

  // Jump side -> reverse side: the complement of the jump family's vertices
  // must be realized as essential bullets with the translated parameters.
  for (const JumpFamilyInstance& jf : jumps) {
    int d = jf.params.count;
    int a = std::gcd(k - d * jf.params.winding,
                     n - d * (jf.params.short_jumps + jf.params.long_jumps));
    int s = (n - d * (jf.params.short_jumps + jf.params.long_jumps)) / a;
    int p = (k - d * jf.params.winding) / a;
    std::vector<int> expected = complement(g, jf.vertices);
    bool found = false;
    for (const CircuitFamily& f : re.families) {
      if (f.classes.essential_bullets == expected && f.size() == a &&
          f.circuits.front().row_arc_count == s &&
          f.circuits.front().winding == p) {
        found = true;
        break;
      }
    }
    if (!found) {
      issues.push_back("no reverse family with bullets " +
                       set_text(expected) + " for jump family on " +
                       set_text(jf.vertices));
    }
  }

  // Reverse side -> jump side, where the translated parameters are defined.
  for (const CircuitFamily& f : re.families) {
    int a = f.size();
    int s = f.circuits.front().row_arc_count;
    int p = f.circuits.front().winding;
    if (a * p > k - 1) continue;  // no jump counterpart with positive winding
    if (static_cast<int>(f.classes.essential_bullets.size()) > n - 1) {
      continue;
    }
    int x1 = k - a * p;
    int x2 = n * (a * p + 1) - a * s * (k + 1);
    int x3 = a * (s * k - n * p);
    int d = std::gcd(x1, std::gcd(x2, x3));
    std::vector<int> expected = complement(g, f.classes.essential_bullets);
    bool found = false;
    for (const JumpFamilyInstance& jf : jumps) {
      if (jf.vertices == expected && jf.params.count == d &&
          jf.params.winding == x1 / d && jf.params.short_jumps == x2 / d &&
          jf.params.long_jumps == x3 / d) {
        found = true;
        break;
      }
    }
    if (!found) {
      issues.push_back("no jump family on " + set_text(expected) +
                       " for reverse family with bullets " +
                       set_text(f.classes.essential_bullets));
    }
  }
  return issues;
}

}  // namespace circmin
