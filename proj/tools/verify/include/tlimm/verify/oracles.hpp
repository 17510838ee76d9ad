#pragma once

// Brute-force reference computations.  Each one is written from the
// definitions alone and shares no code path with the library routine it checks.

#include <cstdint>
#include <vector>

#include "tlimm/perm.hpp"

namespace tlimm::verify {

// Some i < j < k has w(i) > w(j) > w(k).
bool has_decreasing_triple(const Permutation& w);

// Pattern containment by scanning every position subset of the pattern's size.
bool contains_by_subsets(const Permutation& w, const Permutation& pattern);

// C(2n, n) / (n + 1).
std::int64_t catalan(int n);

// A compatible (colouring, matching) pair on circular positions 1..2n.
struct ColoredMatching {
  int n = 0;
  std::vector<bool> black;   // index 0 unused
  std::vector<int> partner;  // index 0 unused

  int count_black(int lo, int hi) const;
  bool all(int lo, int hi, bool is_black) const;
  bool has_internal_pair(const std::vector<int>& positions) const;
};

// Every non-crossing perfect matching of 2n circular points, built by
// pairing the first free point with each admissible partner, times every
// choice of which endpoint of each chord is black.
std::vector<ColoredMatching> all_colored_matchings(int n);

// Positions of unprimed vertices lo..hi and primed vertices plo'..phi'.
std::vector<int> vertex_positions(int n, int lo, int hi, int plo, int phi);

// All solutions of each unique-matching problem, by filtering `pool`.
std::vector<ColoredMatching> brute_simple(const std::vector<ColoredMatching>& pool, int A, int B, int C);
std::vector<ColoredMatching> brute_general(const std::vector<ColoredMatching>& pool, int a, int b, int c, int d,
                                           int e);
std::vector<ColoredMatching> brute_case1(const std::vector<ColoredMatching>& pool, int a, int b, int c, int d,
                                         int e);
std::vector<ColoredMatching> brute_case2(const std::vector<ColoredMatching>& pool, int a, int e, int b, int c,
                                         int f, int d);

// Classes of the closure of "swap the values at positions j < k when some
// earlier entry is below both and some later entry is above both", each
// sorted, classes ordered by first member.
std::vector<std::vector<Permutation>> neighbour_closure_classes(int n);

}  // namespace tlimm::verify
