#include "circmin/bridge.hpp"

#include <numeric>
#include <string>

namespace circmin {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw DomainError(ErrorCode::ParameterOutOfRange, what);
  }
}

int gcd3(int a, int b, int c) { return std::gcd(a, std::gcd(b, c)); }

}  // namespace

std::vector<std::vector<int>> decompose_shift_digraph(int s, int p) {
  require(s >= 2, "shift digraph needs s >= 2");
  require(p >= 1 && p <= s - 1, "shift must satisfy 1 <= p <= s-1");
  int g = std::gcd(s, p);
  std::vector<std::vector<int>> circuits;
  circuits.reserve(g);
  for (int start = 1; start <= g; ++start) {
    std::vector<int> c;
    int v = start;
    do {
      c.push_back(v);
      v = (v - 1 + p) % s + 1;
    } while (v != start);
    circuits.push_back(std::move(c));
  }
  return circuits;
}

JumpFamilyParams translate_reverse_to_jump(int n, int k, int count,
                                           int row_arcs, int winding) {
  require(n >= 4 && k >= 2 && k <= n - 1, "need n >= 4 and 2 <= k <= n-1");
  require(count >= 1 && row_arcs >= 1 && winding >= 1,
          "family parameters must be positive");
  require(std::gcd(row_arcs, winding) == 1,
          "per-member row arcs and winding must be coprime");
  int steps = row_arcs * k - winding * n;
  require(steps >= 0, "winding*n may not exceed row_arcs*k");
  require(count * (row_arcs + steps) <= n - 2,
          "family would touch more than n-2 vertices");
  require(count * winding <= k - 1, "pooled winding must be at most k-1");

  int a = count, s = row_arcs, p = winding;
  int x1 = k - a * p;
  int x2 = n * (a * p + 1) - a * s * (k + 1);
  int x3 = a * (s * k - n * p);
  int d = gcd3(x1, x2, x3);
  JumpFamilyParams out{d, x1 / d, x2 / d, x3 / d};
  // Exact closed form: the two families wind compatibly around the circle.
  if (x1 * n != x2 * k + x3 * (k + 1)) {
    throw DomainError(ErrorCode::VerificationFailed,
                      "translation identity failed");
  }
  return out;
}

ReverseTranslation translate_jump_to_reverse(int n, int k, int count,
                                             int winding, int short_jumps,
                                             int long_jumps) {
  require(n >= 4 && k >= 2 && k <= n - 1, "need n >= 4 and 2 <= k <= n-1");
  require(count >= 1 && winding >= 1, "family parameters must be positive");
  require(short_jumps >= 0 && long_jumps >= 0 &&
              short_jumps + long_jumps >= 1,
          "jump counts must be non-negative and not both zero");
  require(gcd3(winding, short_jumps, long_jumps) == 1,
          "per-member jump parameters must be coprime");
  require(winding * n == short_jumps * k + long_jumps * (k + 1),
          "winding does not match the jump counts");
  require(count * (short_jumps + long_jumps) <= n - 2,
          "family would touch more than n-2 vertices");
  require(count * winding <= k - 1, "pooled winding must be at most k-1");

  int d = count;
  int y1 = k - d * winding;
  int y2 = n - d * (short_jumps + long_jumps);
  int a = std::gcd(y1, y2);
  ReverseTranslation out;
  out.params = {a, y2 / a, y1 / a, 0};
  out.params.reverse_steps =
      out.params.row_arcs * k - out.params.winding * n;
  out.pooled_order = y2;
  out.pooled_weight = y1;
  if (y1 * n != y2 * k - d * long_jumps) {
    throw DomainError(ErrorCode::VerificationFailed,
                      "translation identity failed");
  }
  return out;
}

std::optional<ReverseFamilyParams> reverse_family_exists(int n, int k,
                                                         int count) {
  if (n < 4 || k < 2 || k > n - 1 || count < 1) return std::nullopt;
  for (int steps = 1; count * steps <= n - 2; ++steps) {
    for (int winding = 1; count * winding <= k - 1; ++winding) {
      int total = winding * n + steps;
      if (total % k != 0) continue;
      int row_arcs = total / k;
      if (std::gcd(row_arcs, winding) != 1) continue;
      if (count * (row_arcs + steps) > n - 2) continue;
      return ReverseFamilyParams{count, row_arcs, winding, steps};
    }
  }
  return std::nullopt;
}

std::optional<JumpFamilyParams> jump_family_exists(int n, int k, int count) {
  if (n < 4 || k < 1 || k > n - 1 || count < 1) return std::nullopt;
  for (int winding = 1; count * winding <= k - 1; ++winding) {
    for (int longs = 1; count * longs <= n - 2; ++longs) {
      int rest = winding * n - longs * (k + 1);
      if (rest < k || rest % k != 0) continue;
      int shorts = rest / k;
      if (gcd3(winding, shorts, longs) != 1) continue;
      if (count * (shorts + longs) > n - 2) continue;
      return JumpFamilyParams{count, winding, shorts, longs};
    }
  }
  return std::nullopt;
}

std::vector<ReverseFamilyParams> reverse_family_boundary(int n, int k,
                                                         int count) {
  std::vector<ReverseFamilyParams> out;
  if (n < 4 || k < 2 || k > n - 1 || count < 1) return out;
  for (int winding = 1; count * winding <= k - 1; ++winding) {
    if ((winding * n) % k != 0) continue;
    int row_arcs = winding * n / k;
    if (std::gcd(row_arcs, winding) != 1) continue;
    if (count * row_arcs > n - 2) continue;
    out.push_back(ReverseFamilyParams{count, row_arcs, winding, 0});
  }
  return out;
}

}  // namespace circmin
