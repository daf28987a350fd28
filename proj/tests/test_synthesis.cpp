#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "circmin/oracle.hpp"
#include "circmin/synthesis.hpp"
#include "helpers.hpp"

using namespace circmin;
using namespace circmin::testing;

TEST_CASE("forward direction on the worked circuits") {
  auto a = example_matrix();
  auto d = ArcDigraph::for_matrix(a);

  auto single = validate_family(d, {clean_circuit(d)});
  MinorWitness w = circuits_to_minor(a, single);
  CHECK(w.bullets == std::vector<int>{2, 5, 9, 10, 12});
  CHECK(w.order == 5);
  CHECK(w.weight == 2);
  CHECK(w.circuit_count == 1);
  CHECK(w.removed == std::vector<int>{1, 3, 4, 6, 7, 8, 11});

  auto pair = validate_family(d, two_circuit_family(d));
  MinorWitness w2 = circuits_to_minor(a, pair);
  CHECK(w2.bullets == std::vector<int>{1, 4, 6, 9, 10, 12});
  CHECK(w2.order == 6);
  CHECK(w2.weight == 2);
  CHECK(w2.circuit_count == 2);
}

TEST_CASE("forward direction rejects bad arcs") {
  auto a = example_matrix();
  auto d = ArcDigraph::for_matrix(a);
  auto family = validate_family(d, {five_arc_circuit(d)});
  try {
    circuits_to_minor(a, family);
    FAIL("expected BadArcPresent");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::BadArcPresent);
  }
}

TEST_CASE("window candidate rows") {
  auto a = example_matrix();

  auto rows = window_rows(a, {2, 5, 8, 10, 12}, 2);
  REQUIRE(rows.size() == 5);
  CHECK(rows[1] == std::vector<int>{1});  // window ending at 5
  CHECK(rows[2] == std::vector<int>{3});  // window ending at 8
  CHECK(rows[0] == std::vector<int>{6});
  CHECK(rows[3] == std::vector<int>{4});
  CHECK(rows[4] == std::vector<int>{5});

  auto rows2 = window_rows(a, {2, 5, 9, 10, 12}, 2);
  CHECK(rows2[1] == std::vector<int>{1, 2});
}

TEST_CASE("window row selection minimizes the upper offset") {
  auto a = example_matrix();
  CHECK(select_window_row(a, {2, 5, 8, 10, 12}, 2, 3) == 3);
  CHECK(select_window_row(a, {2, 5, 8, 10, 12}, 2, 5) == 5);
  CHECK(select_window_row(a, {2, 5, 9, 10, 12}, 2, 2) == 1);
}

TEST_CASE("bullet rewriting") {
  auto a = example_matrix();
  CHECK(normalize_bullets(a, {2, 5, 8, 10, 12}, 2) ==
        std::vector<int>{2, 5, 9, 10, 12});
  CHECK(normalize_bullets(a, {2, 5, 9, 10, 12}, 2) ==
        std::vector<int>{2, 5, 9, 10, 12});
  CHECK(normalize_bullets(a, {2, 5, 7, 10, 12}, 2) ==
        std::vector<int>{2, 5, 9, 10, 12});
  CHECK(normalize_bullets(a, {1, 4, 6, 9, 10, 12}, 2) ==
        std::vector<int>{1, 4, 6, 9, 10, 12});
}

TEST_CASE("bullet order does not matter") {
  auto a = example_matrix();
  CHECK(normalize_bullets(a, {12, 10, 2, 8, 5}, 2) ==
        std::vector<int>{2, 5, 9, 10, 12});
  auto [family, tr] = minor_to_circuits(a, {10, 2, 12, 5, 8}, 2);
  CHECK(tr.bullets == std::vector<int>{2, 5, 8, 10, 12});
  CHECK(tr.normalized == std::vector<int>{2, 5, 9, 10, 12});
}

TEST_CASE("rewriting a non-minor is rejected") {
  auto a = example_matrix();
  try {
    normalize_bullets(a, {1, 2, 3}, 2);
    FAIL("expected NotCirculantMinor");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NotCirculantMinor);
  }
}

TEST_CASE("reverse construction reproduces the worked example") {
  auto a = example_matrix();
  auto [family, trace] = minor_to_circuits(a, {2, 5, 9, 10, 12}, 2);

  CHECK(trace.normalized == std::vector<int>{2, 5, 9, 10, 12});
  CHECK(trace.passes == 1);

  std::vector<std::pair<int, int>> selected;
  for (const Arc& t : trace.selected_row_arcs) {
    selected.emplace_back(t.tail, t.head);
  }
  std::sort(selected.begin(), selected.end());
  CHECK(selected == std::vector<std::pair<int, int>>{
                        {4, 9}, {6, 10}, {9, 12}, {11, 2}, {12, 5}});

  CHECK(trace.forward_join_indices == std::vector<int>{1, 2, 4});
  CHECK(trace.forward_join_vertices == std::vector<int>{2, 5, 10});
  CHECK(trace.reverse_join_indices.empty());

  REQUIRE(trace.forward_paths.size() == 3);
  auto path_pairs = [](const std::vector<Arc>& arcs) {
    std::vector<std::pair<int, int>> out;
    for (const Arc& a2 : arcs) out.emplace_back(a2.tail, a2.head);
    return out;
  };
  CHECK(path_pairs(trace.forward_paths[0]) ==
        std::vector<std::pair<int, int>>{{2, 3}, {3, 4}});
  CHECK(path_pairs(trace.forward_paths[1]) ==
        std::vector<std::pair<int, int>>{{5, 6}});
  CHECK(path_pairs(trace.forward_paths[2]) ==
        std::vector<std::pair<int, int>>{{10, 11}});

  CHECK(family.size() == 1);
  CHECK(family.circuits.front().row_arc_count == 5);
  CHECK(family.circuits.front().winding == 2);
  CHECK(family.classes.essential_bullets == std::vector<int>{2, 5, 9, 10, 12});
}

TEST_CASE("reverse construction splits into two circuits") {
  auto a = example_matrix();
  auto [family, trace] = minor_to_circuits(a, {1, 4, 6, 9, 10, 12}, 2);
  CHECK(family.size() == 2);
  for (const Circuit& c : family.circuits) {
    CHECK(c.row_arc_count == 3);
    CHECK(c.winding == 1);
  }
  CHECK(family.classes.essential_bullets ==
        std::vector<int>{1, 4, 6, 9, 10, 12});
  CHECK(trace.reverse_join_indices == std::vector<int>{1, 2, 3});
  CHECK(trace.forward_join_indices == std::vector<int>{5});
}

TEST_CASE("reverse construction goes through rewriting") {
  auto a = example_matrix();
  auto [family, trace] = minor_to_circuits(a, {2, 5, 7, 10, 12}, 2);
  CHECK(trace.normalized == std::vector<int>{2, 5, 9, 10, 12});
  CHECK(family.classes.essential_bullets == std::vector<int>{2, 5, 9, 10, 12});
  CHECK(family.size() == 1);
}

TEST_CASE("join index sets are disjoint") {
  auto a = example_matrix();
  for (const auto& bullets :
       {std::vector<int>{2, 5, 8, 10, 12}, std::vector<int>{2, 5, 9, 10, 12},
        std::vector<int>{1, 4, 6, 9, 10, 12}}) {
    auto [family, trace] = minor_to_circuits(a, bullets, 2);
    for (int j : trace.forward_join_indices) {
      CHECK(std::find(trace.reverse_join_indices.begin(),
                      trace.reverse_join_indices.end(),
                      j) == trace.reverse_join_indices.end());
    }
  }
}

TEST_CASE("selected row arcs avoid the join stretches") {
  auto a = example_matrix();
  auto [family, tr] = minor_to_circuits(a, {2, 5, 8, 10, 12}, 2);
  std::vector<int> endpoints;
  for (const Arc& t : tr.selected_row_arcs) {
    endpoints.push_back(t.tail);
    endpoints.push_back(t.head);
  }
  auto check_path_interior = [&](const std::vector<Arc>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      CHECK(std::find(endpoints.begin(), endpoints.end(), path[i].head) ==
            endpoints.end());
    }
  };
  for (const auto& p : tr.forward_paths) check_path_interior(p);
  for (const auto& p : tr.reverse_paths) check_path_interior(p);
}

TEST_CASE("round trips across the brute catalog") {
  auto a = example_matrix();
  for (const MinorHit& hit : brute_minors(a)) {
    auto [family, trace] = minor_to_circuits(a, hit.bullets, hit.weight);
    CHECK(family.classes.essential_bullets == hit.normalized);

    MinorWitness w = circuits_to_minor(a, family);
    CHECK(w.bullets == hit.normalized);
    CHECK(w.order == hit.order);
    CHECK(w.weight == hit.weight);

    // Rewriting is idempotent on its own output.
    CHECK(normalize_bullets(a, hit.normalized, hit.weight) == hit.normalized);
  }
}

TEST_CASE("selection obeys the lower endpoint shortcut") {
  // Whenever some row starts right after the window's entry bullet, that row
  // is the selected one.
  auto a = example_matrix();
  const GroundSet& g = a.ground();
  for (const MinorHit& hit : brute_minors(a)) {
    int s = static_cast<int>(hit.bullets.size());
    for (int j = 1; j <= s; ++j) {
      int entry = hit.bullets[((j - 1 - hit.weight) % s + s) % s];
      for (int i = 1; i <= a.row_count(); ++i) {
        if (a.lower(i) != g.next(entry)) continue;
        CHECK(select_window_row(a, hit.bullets, hit.weight, j) == i);
      }
    }
  }
}

TEST_CASE("rewritten traces mirror the original ones") {
  // Rewriting moves each bullet without changing which rows cover it. The
  // identity holds for every row whose trace is exactly a window; a row
  // strictly dominating a window can lose a moved bullet (row 2 at bullets
  // {2,5,7,10,12} contains 7 but not its rewrite 9) without affecting the
  // contraction, which stays the same circulant either way.
  auto a = example_matrix();
  const GroundSet& g = a.ground();
  for (const MinorHit& hit : brute_minors(a)) {
    auto [family, tr] = minor_to_circuits(a, hit.bullets, hit.weight);
    REQUIRE(tr.passes == 1);
    std::map<int, int> moved;
    for (const WindowSelection& ws : tr.table) {
      moved[ws.bullet] = ws.rewritten;
    }
    std::set<int> window_rows_flat;
    for (const auto& rows : window_rows(a, hit.bullets, hit.weight)) {
      window_rows_flat.insert(rows.begin(), rows.end());
    }
    CHECK(!window_rows_flat.empty());
    for (int i : window_rows_flat) {
      std::vector<int> lhs = trace(a, i, tr.normalized);
      std::sort(lhs.begin(), lhs.end());
      std::vector<int> rhs;
      for (int b : hit.bullets) {
        if (interval_contains(a.row(i), b, g)) rhs.push_back(moved.at(b));
      }
      std::sort(rhs.begin(), rhs.end());
      CHECK(lhs == rhs);
    }
    // The conclusion that matters: the rewritten set carries the same minor.
    CHECK(normalize_bullets(a, hit.bullets, hit.weight) == tr.normalized);
  }
}
