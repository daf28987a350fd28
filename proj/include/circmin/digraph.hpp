#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circmin/matrix.hpp"

namespace circmin {

enum class ArcKind {
  Row,      // (lo_i - 1, hi_i) for row i
  Forward,  // (j-1, j)
  Reverse,  // (j, j-1)
  Long,     // (i, i+k+1) in the jump digraph
};

std::string_view to_string(ArcKind kind);

/// Kinds are stored explicitly: a row arc and a reverse short arc may share
/// endpoints when a single row has n-1 ones, so endpoints alone do not
/// identify an arc.
struct Arc {
  int tail = 0;
  int head = 0;
  ArcKind kind = ArcKind::Forward;
  int row = 0;  // 1-based originating row for Row arcs, else 0

  bool operator==(const Arc& o) const {
    return tail == o.tail && head == o.head && kind == o.kind;
  }
};

/// Total order by (tail, head, kind), the dump order.
bool arc_less(const Arc& a, const Arc& b);

enum class DigraphFlavor {
  Matrix,   // row arcs of a circular matrix plus both short arcs everywhere
  Reverse,  // circulant case: arcs (i, i+k) and (i, i-1)
  Jump,     // circulant case: arcs (i, i+k) and (i, i+k+1)
};

std::string_view to_string(DigraphFlavor flavor);

class ArcDigraph {
 public:
  /// Row arcs (lo_i - 1, hi_i) for every row, plus forward and reverse short
  /// arcs at every vertex.
  static ArcDigraph for_matrix(const CircularMatrix& a);

  /// Arcs (i, i+k) and (i, i-1) for all i; equals for_matrix(circulant(n,k))
  /// minus the forward short arcs.
  static ArcDigraph circulant_reverse(int n, int k);

  /// Arcs (i, i+k) and (i, i+k+1) for all i. Needs 1 <= k <= n-1.
  static ArcDigraph circulant_jump(int n, int k);

  const GroundSet& ground() const { return g_; }
  DigraphFlavor flavor() const { return flavor_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::vector<Arc> row_arcs() const;

  /// Arc ids leaving a vertex, in (head, kind) order.
  const std::vector<int>& out_arcs(int v) const;

  std::optional<Arc> find_arc(int tail, int head, ArcKind kind) const;
  /// All arcs with the given endpoints (used to resolve vertex-sequence
  /// shorthand).
  std::vector<Arc> find_arcs(int tail, int head) const;

  /// Signed length: circular distance for row and long arcs, +1 forward,
  /// -1 reverse.
  int signed_length(const Arc& a) const;

  /// Vertices of S jumped over by the arc: S cap (tail, head]_n for row and
  /// long arcs, the head for a forward arc, the tail for a reverse arc.
  /// S must be ascending; the result is ascending.
  std::vector<int> jumped(const Arc& a, const std::vector<int>& s) const;

  /// Textual arc list, "tail -> head [row=i|fwd|rev|long]", sorted by
  /// (tail, head, kind).
  std::vector<std::string> dump() const;

 private:
  ArcDigraph(GroundSet g, DigraphFlavor flavor, std::vector<Arc> arcs);

  GroundSet g_;
  DigraphFlavor flavor_;
  std::vector<Arc> arcs_;             // sorted by arc_less
  std::vector<std::vector<int>> out_; // per-vertex arc ids
};

}  // namespace circmin
