#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlimm/perm.hpp"
#include "tlimm/tl.hpp"

namespace tlimm {

/// Two-colouring of a diagram's vertices, stored as (I, J): I lists the black
/// unprimed vertices and J the white primed ones.
struct Coloring {
  int n = 0;
  IndexSet black_unprimed;  // I
  IndexSet white_primed;    // J

  bool is_black(Vertex v) const;

  /// "I={1,4} J={1,4}"
  std::string str() const;
  static Coloring parse(int n, std::string_view text);

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Colouring of circular positions 1..2n; position p holds vertex_at(n, p).
struct CircularColoring {
  int n = 0;
  std::vector<bool> black;  // index 0 unused

  std::string str() const;  // 2n characters of B/W
  static CircularColoring parse(std::string_view text);
  Coloring to_coloring() const;
  static CircularColoring from_coloring(const Coloring& c);

  friend bool operator==(const CircularColoring&, const CircularColoring&) = default;
};

bool is_compatible(const NonCrossingMatching& m, const Coloring& c);

/// 321-avoiding w whose diagram is compatible with c, in lexicographic order.
std::vector<Permutation> compatible_permutations(const Coloring& c);

/// i and w(i)' black/white when w(i) >= i, white/black otherwise.
Coloring canonical_coloring(const Permutation& w);

bool has_internal_pairing(const NonCrossingMatching& m, const std::vector<Vertex>& vertices);

struct CircularSolution {
  CircularColoring coloring;
  NonCrossingMatching matching;
};

struct Solution {
  Coloring coloring;
  NonCrossingMatching matching;
};

/// Circular positions [1,A] carry no internal pair, [A+1,A+B] are black and
/// the rest white; A + B + C = 2n with A, B, C <= n.
CircularSolution unique_matching_simple(int A, int B, int C);

/// Four arcs around the circle: all black, then a black and b white with no
/// internal pair, then all white, then d black and c white with no internal pair.
CircularSolution unique_matching_general(int a, int b, int c, int d, int e);

Solution unique_matching_case1(int a, int b, int c, int d, int e);
Solution unique_matching_case2(int a, int e, int b, int c, int f, int d);

}  // namespace tlimm
