#include "circmin/digraph.hpp"

#include <algorithm>

namespace circmin {

std::string_view to_string(ArcKind kind) {
  switch (kind) {
    case ArcKind::Row: return "row";
    case ArcKind::Forward: return "fwd";
    case ArcKind::Reverse: return "rev";
    case ArcKind::Long: return "long";
  }
  return "?";
}

std::string_view to_string(DigraphFlavor flavor) {
  switch (flavor) {
    case DigraphFlavor::Matrix: return "matrix";
    case DigraphFlavor::Reverse: return "circulant-reverse";
    case DigraphFlavor::Jump: return "circulant-jump";
  }
  return "?";
}

bool arc_less(const Arc& a, const Arc& b) {
  if (a.tail != b.tail) return a.tail < b.tail;
  if (a.head != b.head) return a.head < b.head;
  return static_cast<int>(a.kind) < static_cast<int>(b.kind);
}

ArcDigraph::ArcDigraph(GroundSet g, DigraphFlavor flavor, std::vector<Arc> arcs)
    : g_(g), flavor_(flavor), arcs_(std::move(arcs)), out_(g.size() + 1) {
  std::sort(arcs_.begin(), arcs_.end(), arc_less);
  for (std::size_t id = 0; id < arcs_.size(); ++id) {
    out_[arcs_[id].tail].push_back(static_cast<int>(id));
  }
}

ArcDigraph ArcDigraph::for_matrix(const CircularMatrix& a) {
  const GroundSet& g = a.ground();
  std::vector<Arc> arcs;
  arcs.reserve(a.row_count() + 2 * g.size());
  for (int i = 1; i <= a.row_count(); ++i) {
    arcs.push_back({g.prev(a.lower(i)), a.upper(i), ArcKind::Row, i});
  }
  for (int j = 1; j <= g.size(); ++j) {
    arcs.push_back({g.prev(j), j, ArcKind::Forward, 0});
    arcs.push_back({j, g.prev(j), ArcKind::Reverse, 0});
  }
  return ArcDigraph(g, DigraphFlavor::Matrix, std::move(arcs));
}

ArcDigraph ArcDigraph::circulant_reverse(int n, int k) {
  if (k < 2 || k > n - 1) {
    throw DomainError(ErrorCode::ParameterOutOfRange,
                      "reverse digraph needs 2 <= k <= n-1, got k=" +
                          std::to_string(k));
  }
  GroundSet g(n);
  std::vector<Arc> arcs;
  arcs.reserve(2 * n);
  for (int i = 1; i <= n; ++i) {
    // (i, i+k) is the row arc of row i+1 of the circulant matrix.
    arcs.push_back({i, g.add(i, k), ArcKind::Row, g.next(i)});
    arcs.push_back({i, g.prev(i), ArcKind::Reverse, 0});
  }
  return ArcDigraph(g, DigraphFlavor::Reverse, std::move(arcs));
}

ArcDigraph ArcDigraph::circulant_jump(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw DomainError(ErrorCode::ParameterOutOfRange,
                      "jump digraph needs 1 <= k <= n-1, got k=" +
                          std::to_string(k));
  }
  GroundSet g(n);
  std::vector<Arc> arcs;
  arcs.reserve(2 * n);
  for (int i = 1; i <= n; ++i) {
    arcs.push_back({i, g.add(i, k), ArcKind::Row, g.next(i)});
    arcs.push_back({i, g.add(i, k + 1), ArcKind::Long, 0});
  }
  return ArcDigraph(g, DigraphFlavor::Jump, std::move(arcs));
}

std::vector<Arc> ArcDigraph::row_arcs() const {
  std::vector<Arc> out;
  for (const Arc& a : arcs_) {
    if (a.kind == ArcKind::Row) out.push_back(a);
  }
  return out;
}

const std::vector<int>& ArcDigraph::out_arcs(int v) const {
  g_.check(v);
  return out_[v];
}

std::optional<Arc> ArcDigraph::find_arc(int tail, int head,
                                        ArcKind kind) const {
  if (!g_.contains(tail) || !g_.contains(head)) return std::nullopt;
  for (int id : out_[tail]) {
    const Arc& a = arcs_[id];
    if (a.head == head && a.kind == kind) return a;
  }
  return std::nullopt;
}

std::vector<Arc> ArcDigraph::find_arcs(int tail, int head) const {
  std::vector<Arc> out;
  if (!g_.contains(tail) || !g_.contains(head)) return out;
  for (int id : out_[tail]) {
    if (arcs_[id].head == head) out.push_back(arcs_[id]);
  }
  return out;
}

int ArcDigraph::signed_length(const Arc& a) const {
  switch (a.kind) {
    case ArcKind::Forward: return 1;
    case ArcKind::Reverse: return -1;
    case ArcKind::Row:
    case ArcKind::Long: return circ_dist(a.tail, a.head, g_);
  }
  return 0;
}

std::vector<int> ArcDigraph::jumped(const Arc& a,
                                    const std::vector<int>& s) const {
  std::vector<int> out;
  switch (a.kind) {
    case ArcKind::Forward:
      if (std::binary_search(s.begin(), s.end(), a.head)) out.push_back(a.head);
      break;
    case ArcKind::Reverse:
      if (std::binary_search(s.begin(), s.end(), a.tail)) out.push_back(a.tail);
      break;
    case ArcKind::Row:
    case ArcKind::Long: {
      CircularInterval iv{a.tail, a.head};
      for (int x : s) {
        if (x != a.tail && interval_contains(iv, x, g_)) out.push_back(x);
      }
      break;
    }
  }
  return out;
}

std::vector<std::string> ArcDigraph::dump() const {
  std::vector<std::string> lines;
  lines.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    std::string kind{to_string(a.kind)};
    if (a.kind == ArcKind::Row) kind += "=" + std::to_string(a.row);
    lines.push_back(std::to_string(a.tail) + " -> " + std::to_string(a.head) +
                    " [" + kind + "]");
  }
  return lines;
}

}  // namespace circmin
