#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "circmin/circuits.hpp"
#include "helpers.hpp"

using namespace circmin;
using namespace circmin::testing;

namespace {

const Block& block_at(const Classification& cl, int bullet) {
  for (const Block& b : cl.blocks) {
    if (b.bullet == bullet) return b;
  }
  REQUIRE(false);
  return cl.blocks.front();
}

/// Row arcs must connect leave_tail of one block to enter_head of the block
/// the pooled winding number ahead.
void check_reconstruction(const CircuitFamily& f) {
  const auto& blocks = f.classes.blocks;
  int s = static_cast<int>(blocks.size());
  int p = f.winding_total;
  std::vector<std::pair<int, int>> expected;
  for (int i = 0; i < s; ++i) {
    expected.emplace_back(blocks[i].leave_tail,
                          blocks[(i + p) % s].enter_head);
  }
  std::sort(expected.begin(), expected.end());
  std::vector<std::pair<int, int>> got;
  for (const Circuit& c : f.circuits) {
    for (const Arc& a : c.arcs) {
      if (a.kind == ArcKind::Row) got.emplace_back(a.tail, a.head);
    }
  }
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

}  // namespace

TEST_CASE("five row arc circuit validates with winding two") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  Circuit c = five_arc_circuit(d);
  CHECK(c.row_arc_count == 5);
  CHECK(c.winding == 2);
  CHECK(c.vertices.size() == 11);
}

TEST_CASE("three row arc circuit has winding one") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  Circuit c = validate_circuit(
      d, {row(4, 9), row(9, 12), row(12, 5), rev(5, 4)});
  CHECK(c.row_arc_count == 3);
  CHECK(c.winding == 1);
}

TEST_CASE("circuit validation failures") {
  auto d = ArcDigraph::for_matrix(example_matrix());

  try {
    validate_circuit(d, {fwd(2, 3), rev(3, 2)});
    FAIL("expected ZeroWinding");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::ZeroWinding);
  }

  try {
    std::vector<Arc> loop;
    for (int j = 1; j <= 12; ++j) loop.push_back(fwd(j, j % 12 + 1));
    validate_circuit(d, loop);
    FAIL("expected NoRowArc");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NoRowArc);
  }

  try {
    validate_circuit(d, {fwd(2, 3), fwd(3, 4)});
    FAIL("expected NotClosed");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
  }

  try {
    validate_circuit(d, {row(4, 9), rev(9, 8), fwd(8, 9), row(9, 12),
                         row(12, 5), rev(5, 4)});
    FAIL("expected RepeatedVertex");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::RepeatedVertex);
  }

  try {
    validate_circuit(d, {row(4, 10), rev(10, 4)});
    FAIL("expected UnknownArc");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::UnknownArc);
  }
}

TEST_CASE("vertex shorthand resolves unambiguous steps") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  Circuit c = clean_circuit(d);
  CHECK(c.row_arc_count == 5);
  CHECK(c.winding == 2);

  // A row of cardinality n-1 shares endpoints with a reverse short arc.
  auto tricky = CircularMatrix::from_intervals(6, {{1, 5}, {5, 1}});
  auto dt = ArcDigraph::for_matrix(tricky);
  try {
    circuit_from_vertices(dt, {6, 5, 6});
    FAIL("expected AmbiguousStep");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::AmbiguousStep);
  }
}

TEST_CASE("classification of the five row arc circuit") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  Classification cl = classify(d.ground(), five_arc_circuit(d));
  CHECK(cl.circles == std::vector<int>{1, 3, 4, 11});
  CHECK(cl.crosses == std::vector<int>{7, 8});
  CHECK(cl.bullets == std::vector<int>{2, 5, 6, 9, 10, 12});
  CHECK(cl.essential_bullets == std::vector<int>{2, 6, 9, 10, 12});

  REQUIRE(cl.blocks.size() == 5);
  const Block& b1 = block_at(cl, 2);
  CHECK(b1.end == 4);
  CHECK(b1.kind == BlockKind::Circle);
  CHECK(b1.enter_head == 2);
  const Block& b2 = block_at(cl, 6);
  CHECK(b2.end == 8);
  CHECK(b2.kind == BlockKind::Cross);
  CHECK(b2.enter_head == 8);
  const Block& b3 = block_at(cl, 9);
  CHECK(b3.end == 9);
  CHECK(b3.kind == BlockKind::Bullet);
  const Block& b4 = block_at(cl, 10);
  CHECK(b4.end == 11);
  CHECK(b4.kind == BlockKind::Circle);
  const Block& b5 = block_at(cl, 12);
  CHECK(b5.end == 1);
  CHECK(b5.kind == BlockKind::Circle);
}

TEST_CASE("pooled classification of the two circuit family") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  auto family = validate_family(d, two_circuit_family(d));
  CHECK(family.classes.essential_bullets ==
        std::vector<int>{1, 4, 6, 9, 10, 12});
  CHECK(family.size() == 2);
  CHECK(family.row_arc_total == 6);
  CHECK(family.winding_total == 2);
  for (const Circuit& c : family.circuits) {
    CHECK(c.row_arc_count == 3);
    CHECK(c.winding == 1);
  }
}

TEST_CASE("bad arcs") {
  auto a = example_matrix();
  auto d = ArcDigraph::for_matrix(a);

  auto bad = bad_arcs(d, five_arc_circuit(d));
  REQUIRE(bad.size() == 1);
  CHECK(bad.front().arc.tail == 12);
  CHECK(bad.front().arc.head == 5);
  CHECK(bad.front().jumped == 1);

  CHECK(bad_arcs(d, clean_circuit(d)).empty());

  auto family = validate_family(d, two_circuit_family(d));
  CHECK(bad_arcs(d, family).empty());
}

TEST_CASE("bad arc structure") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  Circuit c = five_arc_circuit(d);
  Classification cl = classify(d.ground(), c);
  for (const BadArc& b : bad_arcs(d, c)) {
    bool tail_in_circle_block = false;
    for (const Block& blk : cl.blocks) {
      if (blk.kind != BlockKind::Circle) continue;
      if (interval_contains({blk.bullet, blk.end}, b.arc.tail, d.ground())) {
        tail_in_circle_block = true;
      }
    }
    CHECK(tail_in_circle_block);
    bool head_circle = std::binary_search(cl.circles.begin(), cl.circles.end(),
                                          b.arc.head);
    bool head_off = std::find(c.vertices.begin(), c.vertices.end(),
                              b.arc.head) == c.vertices.end();
    CHECK((head_circle || head_off));
  }
}

TEST_CASE("family validation failures") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  auto shared = validate_circuit(
      d, {row(4, 9), row(9, 12), row(12, 5), rev(5, 4)});
  try {
    validate_family(d, {shared, shared});
    FAIL("expected Overlap");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::Overlap);
  }
}

TEST_CASE("family row arcs jump distinct pooled sets") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  auto family = validate_family(d, two_circuit_family(d));
  std::vector<std::vector<int>> sets;
  for (const Circuit& c : family.circuits) {
    for (const Arc& a : c.arcs) {
      if (a.kind != ArcKind::Row) continue;
      auto js = d.jumped(a, family.classes.essential_bullets);
      CHECK(static_cast<int>(js.size()) == family.winding_total);
      sets.push_back(js);
    }
  }
  std::sort(sets.begin(), sets.end());
  CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
}

TEST_CASE("row arc reconstruction from blocks") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  check_reconstruction(validate_family(d, {clean_circuit(d)}));
  check_reconstruction(validate_family(d, {five_arc_circuit(d)}));
  check_reconstruction(validate_family(d, two_circuit_family(d)));
}

TEST_CASE("jump counts stay within one of the winding number") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  for (const Circuit& c :
       {five_arc_circuit(d), clean_circuit(d)}) {
    Classification cl = classify(d.ground(), c);
    auto vs = c.sorted_vertices();
    for (const Arc& ra : d.row_arcs()) {
      int count = static_cast<int>(d.jumped(ra, cl.essential_bullets).size());
      CHECK(count >= c.winding - 1);
      CHECK(count <= c.winding + 1);
      if (count == c.winding - 1) {
        CHECK(std::binary_search(vs.begin(), vs.end(), ra.tail));
      }
      if (count == c.winding + 1) {
        CHECK(std::binary_search(vs.begin(), vs.end(), ra.head));
      }
    }
  }
}

TEST_CASE("per circuit parameters are coprime") {
  auto d = ArcDigraph::for_matrix(example_matrix());
  for (const Circuit& c : {five_arc_circuit(d), clean_circuit(d)}) {
    CHECK(std::gcd(c.row_arc_count, c.winding) == 1);
  }
}
