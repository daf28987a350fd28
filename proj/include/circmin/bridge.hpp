#pragma once

#include <optional>
#include <vector>

#include "circmin/errors.hpp"

namespace circmin {

/// Per-member parameters of a circuit family in the reverse digraph
/// D(n,k): `count` disjoint circuits, each with `row_arcs` arcs of length k,
/// winding `winding`, and `reverse_steps` = row_arcs*k - winding*n reverse
/// arcs.
struct ReverseFamilyParams {
  int count = 0;          // a
  int row_arcs = 0;       // per member, gcd(row_arcs, winding) = 1
  int winding = 0;
  int reverse_steps = 0;  // per member
};

/// Per-member parameters of a circuit family in the jump digraph G(n,k):
/// `count` disjoint circuits, each with `short_jumps` arcs of length k,
/// `long_jumps` arcs of length k+1, and winding `winding`.
struct JumpFamilyParams {
  int count = 0;        // d
  int winding = 0;      // n1
  int short_jumps = 0;  // n2
  int long_jumps = 0;   // n3
};

/// The translated pair: per-member parameters with gcd 1, plus the pooled
/// minor parameters (count*row_arcs, count*winding).
struct ReverseTranslation {
  ReverseFamilyParams params;
  int pooled_order = 0;
  int pooled_weight = 0;
};

/// Decompose the digraph on [s] with arcs (i, i+p) into its gcd(s,p)
/// circuits; each traversal starts at its smallest vertex.
std::vector<std::vector<int>> decompose_shift_digraph(int s, int p);

/// Reverse-side family parameters to jump-side family parameters.
JumpFamilyParams translate_reverse_to_jump(int n, int k, int count,
                                           int row_arcs, int winding);

/// Jump-side family parameters to reverse-side family parameters.
ReverseTranslation translate_jump_to_reverse(int n, int k, int count,
                                             int winding, int short_jumps,
                                             int long_jumps);

/// Smallest witness (by reverse steps, then winding) of `count` disjoint
/// circuits in D(n,k), or nothing.
std::optional<ReverseFamilyParams> reverse_family_exists(int n, int k,
                                                         int count);

/// Smallest witness (by winding, then long jumps) of `count` disjoint
/// circuits in G(n,k), or nothing.
std::optional<JumpFamilyParams> jump_family_exists(int n, int k, int count);

/// Witnesses that satisfy everything except strict positivity of the
/// reverse-step count (boundary cases reported separately).
std::vector<ReverseFamilyParams> reverse_family_boundary(int n, int k,
                                                         int count);

}  // namespace circmin
