#pragma once

#include <string>
#include <vector>

#include "circmin/circuits.hpp"
#include "circmin/matrix.hpp"

namespace circmin::testing {

/// The 6x12 running example used throughout the suites.
inline CircularMatrix example_matrix() {
  return CircularMatrix::from_intervals(
      12, {{1, 5}, {2, 8}, {5, 9}, {7, 10}, {10, 12}, {12, 2}});
}

inline Arc row_arc(const ArcDigraph& d, int tail, int head) {
  auto a = d.find_arc(tail, head, ArcKind::Row);
  REQUIRE(a.has_value());
  return *a;
}

inline Arc fwd(int tail, int head) { return {tail, head, ArcKind::Forward, 0}; }
inline Arc rev(int tail, int head) { return {tail, head, ArcKind::Reverse, 0}; }
inline Arc row(int tail, int head) { return {tail, head, ArcKind::Row, 0}; }

/// Circuit with five row arcs and winding two whose bad arc is (12,5).
inline Circuit five_arc_circuit(const ArcDigraph& d) {
  return validate_circuit(
      d, {fwd(2, 3), fwd(3, 4), row(4, 9), row(9, 12), fwd(12, 1), row(1, 8),
          rev(8, 7), rev(7, 6), row(6, 10), fwd(10, 11), row(11, 2)});
}

/// Circuit of the worked minor at bullets {2,5,9,10,12}.
inline Circuit clean_circuit(const ArcDigraph& d) {
  return circuit_from_vertices(d, {2, 3, 4, 9, 12, 5, 6, 10, 11, 2});
}

/// The two-circuit family with pooled bullets {1,4,6,9,10,12}.
inline std::vector<Circuit> two_circuit_family(const ArcDigraph& d) {
  Circuit first = circuit_from_vertices(d, {1, 8, 7, 6, 10, 11, 2, 1});
  Circuit second = circuit_from_vertices(d, {4, 9, 12, 5, 4});
  return {first, second};
}

/// True when the trace occupies cyclically consecutive positions of the
/// survivor list.
inline bool is_cyclic_run(const std::vector<int>& trace,
                          const std::vector<int>& survivors) {
  if (trace.empty()) return true;
  int s = static_cast<int>(survivors.size());
  std::vector<char> in(s, 0);
  int members = 0;
  for (int x : trace) {
    for (int i = 0; i < s; ++i) {
      if (survivors[i] == x) {
        in[i] = 1;
        ++members;
      }
    }
  }
  if (members != static_cast<int>(trace.size())) return false;
  if (members == s) return true;
  int switches = 0;
  for (int i = 0; i < s; ++i) {
    if (in[i] && !in[(i + 1) % s]) ++switches;
  }
  return switches == 1;
}

inline std::string fixture(const std::string& name) {
  return std::string(CIRCMIN_TEST_DATA) + "/" + name;
}

}  // namespace circmin::testing
