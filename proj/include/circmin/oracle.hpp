#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "circmin/bridge.hpp"
#include "circmin/synthesis.hpp"

namespace circmin {

struct OracleLimits {
  int max_columns = 14;
  long max_circuits = 2'000'000;
  long max_families = 2'000'000;
};

/// A circulant minor found by subset enumeration: the raw bullet set, its
/// normalized form, and the recognized parameters.
struct MinorHit {
  std::vector<int> bullets;
  std::vector<int> normalized;
  int order = 0;
  int weight = 0;
};

/// Try every column subset of size 3..n-1 as a surviving set.
std::vector<MinorHit> brute_minors(const CircularMatrix& a,
                                   const OracleLimits& limits = {});

struct CircuitEnumeration {
  std::vector<Circuit> circuits;  // lexicographic by sorted vertex list
  bool capped = false;
};

/// All simple circuits, depth-first; for matrix and reverse flavors only
/// circuits with a row arc and positive winding are kept.
CircuitEnumeration enumerate_circuits(const ArcDigraph& d,
                                      const OracleLimits& limits = {});

struct FamilyEnumeration {
  std::vector<CircuitFamily> families;
  bool capped = false;
};

/// All pairwise vertex-disjoint combinations of the enumerated circuits.
/// For matrix and reverse flavors the result is filtered to bad-arc-free
/// families; for the jump flavor, to families with uniform member
/// parameters.
FamilyEnumeration enumerate_families(const ArcDigraph& d,
                                     const OracleLimits& limits = {});

/// Deduplicated bullet set of one or more enumerated families.
struct FamilyRecord {
  std::vector<int> bullets;
  int order = 0;
  int weight = 0;
  int family_count = 0;
};

/// Cross-validation of the two characterizations on one matrix.
struct CrossReport {
  int columns = 0;
  int rows = 0;
  std::vector<MinorHit> subset_hits;
  std::vector<FamilyRecord> family_sets;        // proper, weight >= 2
  std::vector<std::string> discrepancies;
  std::map<std::pair<int, int>, int> counts;    // (order, weight) -> sets
  int boundary_families = 0;  // identity-weight or non-proper bullet sets
  bool capped = false;
};

/// Compare {normalized bullet sets from subset enumeration} with {pooled
/// essential bullet sets of enumerated families}, and round-trip every
/// subset hit through the reverse construction.
CrossReport cross_validate(const CircularMatrix& a,
                           const OracleLimits& limits = {});

/// Brute-force isomorphism to a circulant matrix by column permutation
/// search; validation oracle for recognize_circulant, minors up to 8
/// columns.
std::optional<CirculantPattern> circulant_isomorphic(const Minor& m);

/// Seeded generator of valid circular matrices with 5 <= n <= max_n.
CircularMatrix random_circular_matrix(std::mt19937_64& rng, int min_n,
                                      int max_n);

/// One enumerated family in the jump digraph, with uniform per-member
/// parameters.
struct JumpFamilyInstance {
  JumpFamilyParams params;
  std::vector<int> vertices;  // pooled, ascending
};

/// Enumerated families of G(n,k) whose per-member parameters are uniform
/// with coprime components and within the size bounds.
std::vector<JumpFamilyInstance> enumerate_jump_families(
    int n, int k, const OracleLimits& limits = {});

/// Check, for every in-scope jump family, that a reverse family exists whose
/// essential bullets are the complement of the jump family's vertices with
/// translated parameters, and conversely. Returns human-readable
/// discrepancies (empty = pass).
std::vector<std::string> jump_reverse_correspondence(
    int n, int k, const OracleLimits& limits = {});

}  // namespace circmin
