#include "doctest.h"

#include <nlohmann/json.hpp>

#include "circmin/io.hpp"
#include "helpers.hpp"

using namespace circmin;
using namespace circmin::testing;

TEST_CASE("matrix documents parse in both forms") {
  auto a = matrix_from_json(load_json(fixture("eq1.json")));
  auto b = matrix_from_json(load_json(fixture("eq1_dense.json")));
  CHECK(a.rows() == b.rows());
  CHECK(a.column_count() == 12);
}

TEST_CASE("matrix document errors") {
  CHECK_THROWS_AS(matrix_from_json(load_json(fixture("dominated.json"))),
                  DomainError);
  CHECK_THROWS_AS(matrix_from_json(load_json(fixture("noncircular.json"))),
                  DomainError);
  CHECK_THROWS_AS(load_json(fixture("broken.json")), ParseError);
  CHECK_THROWS_AS(load_json(fixture("missing.json")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json{{"n", 12}}), ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(json{{"n", 12},
                            {"rows", json::array({json::array({1, 5})})},
                            {"dense", json::array()}}),
      ParseError);
}

TEST_CASE("circuit documents accept arcs and vertex shorthand") {
  auto a = matrix_from_json(load_json(fixture("eq1.json")));
  auto d = ArcDigraph::for_matrix(a);
  auto circuits = circuits_from_json(d, load_json(fixture("family_two.json")));
  REQUIRE(circuits.size() == 2);
  CHECK(circuits[0].row_arc_count == 3);
  CHECK(circuits[0].winding == 1);
  CHECK(circuits[1].row_arc_count == 3);

  auto family = validate_family(d, circuits);
  CHECK(family.classes.essential_bullets ==
        std::vector<int>{1, 4, 6, 9, 10, 12});
}

TEST_CASE("json dumps round trip byte for byte") {
  auto a = example_matrix();
  auto report = cross_report_to_json(cross_validate(a));
  std::string once = dump_json(report);
  std::string twice = dump_json(json::parse(once));
  CHECK(once == twice);

  auto [family, tr] = minor_to_circuits(a, {2, 5, 8, 10, 12}, 2);
  std::string t1 = dump_json(trace_to_json(tr));
  CHECK(t1 == dump_json(json::parse(t1)));
}

namespace {

void collect_leaves(const json& j, std::vector<std::string>& out) {
  if (j.is_object() || j.is_array()) {
    for (const auto& child : j) collect_leaves(child, out);
    return;
  }
  if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else {
    out.push_back(j.dump());
  }
}

}  // namespace

TEST_CASE("text rendering carries every fact of the json report") {
  auto a = example_matrix();
  auto [family, tr] = minor_to_circuits(a, {2, 5, 8, 10, 12}, 2);

  json report;
  report["command"] = "to-circuits";
  report["trace"] = trace_to_json(tr);
  report["classification"] = classification_to_json(family.classes);
  report["report"] = cross_report_to_json(cross_validate(a));

  std::string text = render_text(report);
  std::vector<std::string> leaves;
  collect_leaves(report, leaves);
  CHECK(leaves.size() > 50);
  for (const auto& leaf : leaves) {
    CAPTURE(leaf);
    CHECK(text.find(leaf) != std::string::npos);
  }
}

TEST_CASE("witness and minor serialization") {
  auto a = example_matrix();
  auto d = ArcDigraph::for_matrix(a);
  auto family = validate_family(d, two_circuit_family(d));
  auto w = circuits_to_minor(a, family);
  json jw = witness_to_json(w);
  CHECK(jw["order"] == 6);
  CHECK(jw["weight"] == 2);
  CHECK(jw["bullets"] == json::array({1, 4, 6, 9, 10, 12}));

  json jm = minor_to_json(contract(a, w.removed));
  CHECK(jm["columns"] == json::array({1, 4, 6, 9, 10, 12}));
  CHECK(jm["traces"].size() == 6);
}
