#include "circmin/cyclic.hpp"

namespace circmin {

int circ_dist(int a, int b, const GroundSet& g) {
  g.check(a);
  g.check(b);
  int d = (b - a) % g.size();
  if (d < 0) d += g.size();
  return d;
}

std::vector<int> interval_members(const CircularInterval& iv,
                                  const GroundSet& g, Closure closure) {
  g.check(iv.lo);
  g.check(iv.hi);
  int span = circ_dist(iv.lo, iv.hi, g);
  std::vector<int> out;
  out.reserve(span + 1);
  for (int t = 0; t <= span; ++t) out.push_back(g.add(iv.lo, t));
  switch (closure) {
    case Closure::Closed:
      break;
    case Closure::HalfOpenLeft:
      out.erase(out.begin());
      break;
    case Closure::HalfOpenRight:
      out.pop_back();
      break;
    case Closure::Open:
      out.erase(out.begin());
      if (!out.empty()) out.pop_back();
      break;
  }
  return out;
}

int interval_size(const CircularInterval& iv, const GroundSet& g) {
  return circ_dist(iv.lo, iv.hi, g) + 1;
}

bool interval_contains(const CircularInterval& iv, int x, const GroundSet& g) {
  return circ_dist(iv.lo, x, g) <= circ_dist(iv.lo, iv.hi, g);
}

bool interval_contains_interval(const CircularInterval& outer,
                                const CircularInterval& inner,
                                const GroundSet& g) {
  if (interval_size(outer, g) == g.size()) return true;
  int offset = circ_dist(outer.lo, inner.lo, g);
  return offset + circ_dist(inner.lo, inner.hi, g) <=
         circ_dist(outer.lo, outer.hi, g);
}

}  // namespace circmin
