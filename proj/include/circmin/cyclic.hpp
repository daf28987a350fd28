#pragma once

#include <vector>

#include "circmin/errors.hpp"

namespace circmin {

/// The ground set {1, ..., n} with addition modulo n. Indices are 1-based
/// everywhere in the public interface; n stands for itself, never 0.
class GroundSet {
 public:
  explicit GroundSet(int n) : n_(n) {
    if (n < 3) {
      throw DomainError(ErrorCode::ParameterOutOfRange,
                        "ground set needs n >= 3, got " + std::to_string(n));
    }
  }

  int size() const { return n_; }

  bool contains(int x) const { return x >= 1 && x <= n_; }

  void check(int x) const {
    if (!contains(x)) {
      throw DomainError(ErrorCode::IndexOutOfRange,
                        "index " + std::to_string(x) + " outside [1," +
                            std::to_string(n_) + "]");
    }
  }

  /// Wrap an arbitrary integer into {1, ..., n}.
  int wrap(int x) const {
    int r = (x - 1) % n_;
    if (r < 0) r += n_;
    return r + 1;
  }

  int add(int x, int steps) const { return wrap(x + steps); }
  int next(int x) const { return add(x, 1); }
  int prev(int x) const { return add(x, -1); }

  bool operator==(const GroundSet&) const = default;

 private:
  int n_;
};

/// Minimum t >= 0 with a + t = b (mod n).
int circ_dist(int a, int b, const GroundSet& g);

/// A circular interval [lo, hi]_n. Always nonempty in closed form; the size
/// is circ_dist(lo, hi) + 1, so [a, a-1]_n is the whole ground set.
struct CircularInterval {
  int lo;
  int hi;

  bool operator==(const CircularInterval&) const = default;
};

enum class Closure {
  Closed,         // [lo, hi]
  HalfOpenLeft,   // (lo, hi]
  HalfOpenRight,  // [lo, hi)
  Open,           // (lo, hi)
};

/// Members in traversal order from lo; the half-open/open variants drop the
/// corresponding endpoints and may be empty.
std::vector<int> interval_members(const CircularInterval& iv,
                                  const GroundSet& g,
                                  Closure closure = Closure::Closed);

/// Size of the closed interval.
int interval_size(const CircularInterval& iv, const GroundSet& g);

/// x in [lo, hi]_n.
bool interval_contains(const CircularInterval& iv, int x, const GroundSet& g);

/// inner subseteq outer, both closed.
bool interval_contains_interval(const CircularInterval& outer,
                                const CircularInterval& inner,
                                const GroundSet& g);

}  // namespace circmin
