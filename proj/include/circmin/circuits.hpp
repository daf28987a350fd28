#pragma once

#include <span>
#include <vector>

#include "circmin/digraph.hpp"

namespace circmin {

/// A simple directed circuit: arcs chain head-to-tail, all vertices
/// distinct. For matrix and reverse flavors it has at least one row arc and
/// positive winding number.
struct Circuit {
  std::vector<Arc> arcs;      // traversal order
  std::vector<int> vertices;  // tails in traversal order
  int row_arc_count = 0;
  int long_arc_count = 0;
  int winding = 0;

  std::vector<int> sorted_vertices() const;
};

/// Check an arc sequence against the digraph and build the circuit.
Circuit validate_circuit(const ArcDigraph& d, const std::vector<Arc>& arcs);

/// Vertex-sequence shorthand; each consecutive step must name exactly one
/// arc of the digraph.
Circuit circuit_from_vertices(const ArcDigraph& d,
                              const std::vector<int>& vertices);

enum class BlockKind { Circle, Cross, Bullet };

std::string_view to_string(BlockKind kind);

/// Maximal segment [bullet, end]_n starting at an essential bullet and
/// running through a homogeneous stretch of circles or crosses.
struct Block {
  int bullet = 0;      // the essential bullet opening the block
  int end = 0;         // last vertex of the block
  BlockKind kind = BlockKind::Bullet;
  int leave_tail = 0;  // tail of the row arc leaving the block
  int enter_head = 0;  // head of the row arc entering the block
  int member = 0;      // 0-based circuit index within the family
};

/// Vertex partition induced by a circuit or circuit family, with the block
/// decomposition of the circuit vertices. Essential bullets are the bullets
/// the circuits actually visit, in ascending order.
struct Classification {
  std::vector<int> circles;
  std::vector<int> crosses;
  std::vector<int> bullets;
  std::vector<int> essential_bullets;
  std::vector<Block> blocks;  // ascending by bullet
};

Classification classify(const GroundSet& g, const Circuit& c);
Classification classify(const GroundSet& g, std::span<const Circuit> circuits);

/// Pairwise vertex-disjoint circuits with pooled parameters. All members
/// share the same per-circuit parameters and the member count equals
/// gcd(row_arc_total, winding_total).
struct CircuitFamily {
  std::vector<Circuit> circuits;
  int row_arc_total = 0;
  int winding_total = 0;
  Classification classes;

  int size() const { return static_cast<int>(circuits.size()); }
};

CircuitFamily validate_family(const ArcDigraph& d,
                              std::vector<Circuit> circuits);

/// A row arc of the digraph jumping one less than the winding number of some
/// member, recorded with that member and the jumped count.
struct BadArc {
  Arc arc;
  int member = 0;  // 0-based
  int jumped = 0;
};

std::vector<BadArc> bad_arcs(const ArcDigraph& d, const CircuitFamily& f);
std::vector<BadArc> bad_arcs(const ArcDigraph& d, const Circuit& c);

}  // namespace circmin
