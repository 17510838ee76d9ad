#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlimm/perm.hpp"

namespace tlimm {

/// A boundary vertex of a TL diagram: i (unprimed) or i' (primed).
struct Vertex {
  int label = 1;
  bool primed = false;

  std::string str() const;
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex&, const Vertex&) = default;
};

/// Perfect non-crossing matching on 1..n and 1'..n'.
///
/// Circular layout: i sits at position i, i' at position 2n+1-i.
class NonCrossingMatching {
 public:
  using Pair = std::pair<Vertex, Vertex>;

  NonCrossingMatching() = default;

  /// All strands i - i'.
  static NonCrossingMatching identity(int n);

  /// Validates perfectness and planarity.
  static NonCrossingMatching from_pairs(int n, const std::vector<Pair>& pairs);

  /// Builds from partners over circular positions 1..2n (index 0 unused).
  static NonCrossingMatching from_circular(int n, const std::vector<int>& partner);

  /// "1-3' 2-4' 3-4 1'-2'"; pair order and endpoint order are free.
  static NonCrossingMatching parse(std::string_view text);

  int size() const noexcept { return n_; }
  Vertex partner(Vertex v) const;
  int circular_partner(int position) const;

  /// Pairs in canonical order: by first endpoint, unprimed before primed.
  std::vector<Pair> pairs() const;
  std::string str() const;

  friend bool operator==(const NonCrossingMatching&, const NonCrossingMatching&) = default;
  friend std::strong_ordering operator<=>(const NonCrossingMatching&, const NonCrossingMatching&) = default;

 private:
  // Slot k < n is vertex k+1; slot n+k is vertex (k+1)'.
  NonCrossingMatching(int n, std::vector<std::uint8_t> link) : n_(n), link_(std::move(link)) {}

  int slot(Vertex v) const { return v.primed ? n_ + v.label - 1 : v.label - 1; }
  Vertex vertex(int slot) const { return slot < n_ ? Vertex{slot + 1, false} : Vertex{slot - n_ + 1, true}; }

  int n_ = 0;
  std::vector<std::uint8_t> link_;

  friend std::pair<NonCrossingMatching, int> multiply(const NonCrossingMatching&, const NonCrossingMatching&);
};

int circular_position(int n, Vertex v);
Vertex vertex_at(int n, int position);

/// Diagram of t_i.
NonCrossingMatching generator(int n, int i);

/// x·y as diagrams: the result's unprimed boundary is y's, its primed boundary
/// is x's, with y's primed side glued to x's unprimed side.  Returns the
/// resulting diagram and the number of closed loops removed.
std::pair<NonCrossingMatching, int> multiply(const NonCrossingMatching& x, const NonCrossingMatching& y);

/// Every non-crossing perfect matching of size n, sorted.
std::vector<NonCrossingMatching> all_matchings(int n);

/// Integer combination of TL diagrams with loop value 2.
class TLElement {
 public:
  using Terms = std::map<NonCrossingMatching, std::int64_t>;

  explicit TLElement(int n) : n_(n) {}
  static TLElement one(int n);
  static TLElement basis(const NonCrossingMatching& m, std::int64_t coeff = 1);

  int size() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::int64_t coeff(const NonCrossingMatching& m) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const NonCrossingMatching& m, std::int64_t coeff);
  TLElement& operator+=(const TLElement& other);
  TLElement& operator-=(const TLElement& other);

  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  int n_;
  Terms terms_;
};

TLElement operator+(TLElement x, const TLElement& y);
TLElement operator-(TLElement x, const TLElement& y);
TLElement operator*(const TLElement& x, const TLElement& y);
TLElement operator*(std::int64_t c, const TLElement& x);

/// θ(u) = Π (t_i - 1) over a reduced word of u.
TLElement theta(const Permutation& u);

/// Diagram of t_{i_1}···t_{i_k} over a reduced word of a 321-avoiding w.
NonCrossingMatching beta(const Permutation& w);

/// Inverse of beta on all valid matchings.
Permutation beta_inv(const NonCrossingMatching& m);

/// Coefficient of beta(w) in theta(u).
std::int64_t f_coeff(const Permutation& w, const Permutation& u);

/// θ(u) for every u in S_n.
class ThetaTable {
 public:
  explicit ThetaTable(int n);

  int size() const noexcept { return n_; }
  const TLElement& at(const Permutation& u) const;
  const std::map<Permutation, TLElement>& entries() const noexcept { return table_; }

  /// Coefficient of beta(w) in θ(u); w must be 321-avoiding.
  std::int64_t coeff(const Permutation& w, const Permutation& u) const;

 private:
  int n_;
  std::map<Permutation, TLElement> table_;
};

/// Process-wide shared table, built on first use per n; safe across threads.
const ThetaTable& theta_table(int n);

}  // namespace tlimm
