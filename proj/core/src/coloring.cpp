#include "tlimm/coloring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "tlimm/error.hpp"
#include "tlimm/limits.hpp"

namespace tlimm {

namespace {

bool contains(const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

std::string set_str(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(s[k]);
  }
  return out + "}";
}

IndexSet parse_set(std::string_view text, int n, std::string_view whole) {
  auto fail = [&] { return ParseError("invalid colouring '" + std::string(whole) + "'"); };
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw fail();
  text = text.substr(1, text.size() - 2);
  IndexSet out;
  std::size_t start = 0;
  while (!text.empty() && start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(start, end - start);
    if (tok.empty()) throw fail();
    int v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw fail();
      v = v * 10 + (ch - '0');
      if (v > n) throw fail();
    }
    if (v < 1) throw fail();
    out.push_back(v);
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw fail();
  return out;
}

}  // namespace

bool Coloring::is_black(Vertex v) const {
  return v.primed ? !contains(white_primed, v.label) : contains(black_unprimed, v.label);
}

std::string Coloring::str() const { return "I=" + set_str(black_unprimed) + " J=" + set_str(white_primed); }

Coloring Coloring::parse(int n, std::string_view text) {
  auto fail = [&] { return ParseError("invalid colouring '" + std::string(text) + "'"); };
  auto space = text.find(' ');
  if (space == std::string_view::npos) throw fail();
  auto lhs = text.substr(0, space), rhs = text.substr(space + 1);
  while (!rhs.empty() && rhs.front() == ' ') rhs.remove_prefix(1);
  if (lhs.substr(0, 2) != "I=" || rhs.substr(0, 2) != "J=") throw fail();
  return Coloring{n, parse_set(lhs.substr(2), n, text), parse_set(rhs.substr(2), n, text)};
}

std::string CircularColoring::str() const {
  std::string out;
  for (int p = 1; p <= 2 * n; ++p) out.push_back(black[static_cast<std::size_t>(p)] ? 'B' : 'W');
  return out;
}

CircularColoring CircularColoring::parse(std::string_view text) {
  if (text.empty() || text.size() % 2 != 0) throw ParseError("circular colouring needs 2n characters");
  CircularColoring out{static_cast<int>(text.size() / 2), std::vector<bool>(text.size() + 1, false)};
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != 'B' && text[k] != 'W') throw ParseError("circular colouring uses only B and W");
    out.black[k + 1] = text[k] == 'B';
  }
  return out;
}

Coloring CircularColoring::to_coloring() const {
  Coloring c{n, {}, {}};
  for (int i = 1; i <= n; ++i) {
    if (black[static_cast<std::size_t>(circular_position(n, Vertex{i, false}))]) c.black_unprimed.push_back(i);
    if (!black[static_cast<std::size_t>(circular_position(n, Vertex{i, true}))]) c.white_primed.push_back(i);
  }
  return c;
}

CircularColoring CircularColoring::from_coloring(const Coloring& c) {
  CircularColoring out{c.n, std::vector<bool>(static_cast<std::size_t>(2 * c.n + 1), false)};
  for (int p = 1; p <= 2 * c.n; ++p) out.black[static_cast<std::size_t>(p)] = c.is_black(vertex_at(c.n, p));
  return out;
}

bool is_compatible(const NonCrossingMatching& m, const Coloring& c) {
  if (m.size() != c.n) throw PreconditionError("is_compatible: size mismatch");
  for (const auto& [u, v] : m.pairs())
    if (c.is_black(u) == c.is_black(v)) return false;
  return true;
}

std::vector<Permutation> compatible_permutations(const Coloring& c) {
  if (c.black_unprimed.size() != c.white_primed.size()) return {};
  require_within(c.n, max_n(), "compatible_permutations");
  std::vector<Permutation> out;
  for (const auto& m : all_matchings(c.n))
    if (is_compatible(m, c)) out.push_back(beta_inv(m));
  std::sort(out.begin(), out.end());
  return out;
}

Coloring canonical_coloring(const Permutation& w) {
  if (!avoids_321(w)) throw PreconditionError("canonical_coloring: " + w.str() + " contains 321");
  Coloring c{w.size(), {}, {}};
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) >= i) {
      c.black_unprimed.push_back(i);
      c.white_primed.push_back(w(i));
    }
  }
  std::sort(c.white_primed.begin(), c.white_primed.end());
  return c;
}

bool has_internal_pairing(const NonCrossingMatching& m, const std::vector<Vertex>& vertices) {
  std::set<Vertex> inside(vertices.begin(), vertices.end());
  for (const auto& [u, v] : m.pairs())
    if (inside.contains(u) && inside.contains(v)) return true;
  return false;
}

namespace {

// Accumulates colours and partners over circular positions while the
// inductive constructions peel off outer pairs.
struct Builder {
  explicit Builder(int n)
      : n(n), black(static_cast<std::size_t>(2 * n + 1), false), partner(static_cast<std::size_t>(2 * n + 1), 0) {}

  void pair(int black_pos, int white_pos, bool flipped) {
    black[static_cast<std::size_t>(black_pos)] = !flipped;
    black[static_cast<std::size_t>(white_pos)] = flipped;
    partner[static_cast<std::size_t>(black_pos)] = white_pos;
    partner[static_cast<std::size_t>(white_pos)] = black_pos;
  }

  CircularSolution finish() const {
    return {CircularColoring{n, black}, NonCrossingMatching::from_circular(n, partner)};
  }

  int n;
  std::vector<bool> black;
  std::vector<int> partner;
};

using Seq = std::vector<int>;

Seq reversed(Seq::const_iterator first, Seq::const_iterator last) {
  Seq out(first, last);
  std::reverse(out.begin(), out.end());
  return out;
}

Seq concat(std::initializer_list<Seq> parts) {
  Seq out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// `seq` lists positions in circular order: a zone of A, then B black, then C white.
void solve_simple(Seq seq, int A, int B, int C, bool flipped, Builder& out) {
  for (;;) {
    if (A == 0) {
      if (B != C) throw std::logic_error("simple matching: unbalanced base case");
      for (int k = 0; k < B; ++k)
        out.pair(seq[static_cast<std::size_t>(k)], seq[static_cast<std::size_t>(B + C - 1 - k)], flipped);
      return;
    }
    if (B <= C) {
      out.pair(seq.front(), seq.back(), flipped);
      seq = Seq(seq.begin() + 1, seq.end() - 1);
      --A;
      --C;
    } else {
      // Reflect the circle and swap colours so that the black run is the shorter one.
      const auto z = seq.begin() + A, b = z + B;
      seq = concat({reversed(seq.begin(), z), reversed(b, seq.end()), reversed(z, b)});
      std::swap(B, C);
      flipped = !flipped;
    }
  }
}

void solve_general(Seq seq, int a, int b, int c, int d, int e, bool flipped, Builder& out) {
  for (;;) {
    const auto black_end = seq.begin() + (b + c + e);
    const auto zone_end = black_end + (a + b);
    const auto white_end = zone_end + (a + d + e);
    if (c == 0 && d == 0) {
      solve_simple(concat({reversed(black_end, zone_end), reversed(seq.begin(), black_end),
                           reversed(zone_end, seq.end())}),
                   a + b, b + e, a + e, flipped, out);
      return;
    }
    if (c >= d) {
      out.pair(seq.front(), seq.back(), flipped);
      seq = Seq(seq.begin() + 1, seq.end() - 1);
      --c;
    } else {
      seq = concat({reversed(zone_end, white_end), reversed(black_end, zone_end),
                    reversed(seq.begin(), black_end), reversed(white_end, seq.end())});
      std::swap(a, b);
      std::swap(c, d);
      flipped = !flipped;
    }
  }
}

Seq positions(int n) {
  Seq s(static_cast<std::size_t>(2 * n));
  for (int p = 1; p <= 2 * n; ++p) s[static_cast<std::size_t>(p - 1)] = p;
  return s;
}

void require_nonnegative(std::initializer_list<int> values, const char* what) {
  for (int v : values)
    if (v < 0) throw PreconditionError(std::string(what) + ": negative parameter");
}

// Pulls a solution on relabelled circular positions back to diagram vertices.
Solution pull_back(const CircularSolution& sol, int n, const std::function<int(Vertex)>& label_of) {
  std::vector<Vertex> at(static_cast<std::size_t>(2 * n + 1));
  for (int i = 1; i <= n; ++i)
    for (bool primed : {false, true}) at[static_cast<std::size_t>(label_of(Vertex{i, primed}))] = Vertex{i, primed};
  std::vector<NonCrossingMatching::Pair> pairs;
  Coloring col{n, {}, {}};
  for (int x = 1; x <= 2 * n; ++x) {
    const Vertex v = at[static_cast<std::size_t>(x)];
    const int y = sol.matching.circular_partner(x);
    if (x < y) pairs.emplace_back(v, at[static_cast<std::size_t>(y)]);
    const bool is_black = sol.coloring.black[static_cast<std::size_t>(x)];
    if (!v.primed && is_black) col.black_unprimed.push_back(v.label);
    if (v.primed && !is_black) col.white_primed.push_back(v.label);
  }
  std::sort(col.black_unprimed.begin(), col.black_unprimed.end());
  std::sort(col.white_primed.begin(), col.white_primed.end());
  return {std::move(col), NonCrossingMatching::from_pairs(n, pairs)};
}

}  // namespace

CircularSolution unique_matching_simple(int A, int B, int C) {
  require_nonnegative({A, B, C}, "unique_matching_simple");
  const int total = A + B + C;
  if (total == 0 || total % 2 != 0) throw PreconditionError("unique_matching_simple: A + B + C must be 2n > 0");
  const int n = total / 2;
  if (A > n || B > n || C > n) throw PreconditionError("unique_matching_simple: each of A, B, C must be at most n");
  Builder out(n);
  solve_simple(positions(n), A, B, C, false, out);
  return out.finish();
}

CircularSolution unique_matching_general(int a, int b, int c, int d, int e) {
  require_nonnegative({a, b, c, d, e}, "unique_matching_general");
  const int n = a + b + c + d + e;
  if (n == 0) throw PreconditionError("unique_matching_general: parameters sum to zero");
  Builder out(n);
  solve_general(positions(n), a, b, c, d, e, false, out);
  return out.finish();
}

Solution unique_matching_case1(int a, int b, int c, int d, int e) {
  if (a < 1 || b < 1 || c < 1 || d < 1 || e < 0) throw PreconditionError("unique_matching_case1: bad parameters");
  const int n = a + b + c + d + e;
  auto sol = unique_matching_general(a, b, c, d, e);
  return pull_back(sol, n, [&](Vertex v) {
    if (v.primed) return v.label + n - d;
    return v.label <= n - d ? n - d + 1 - v.label : 3 * n - d + 1 - v.label;
  });
}

Solution unique_matching_case2(int a, int e, int b, int c, int f, int d) {
  if (a < 1 || b < 1 || c < 1 || d < 1 || e < 0 || f < 0 || std::max(e, f) < 1)
    throw PreconditionError("unique_matching_case2: bad parameters");
  const int n = a + b + c + d + e + f;
  auto sol = unique_matching_general(d, a, b, c, e + f);
  return pull_back(sol, n, [&](Vertex v) {
    if (v.primed) return a + e + v.label;
    return v.label <= a + e ? a + e + 1 - v.label : 2 * n + a + e + 1 - v.label;
  });
}

}  // namespace tlimm
