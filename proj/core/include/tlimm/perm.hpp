#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tlimm {

// Sorted list of 1-based indices.
using IndexSet = std::vector<int>;

/// A permutation of [n] in one-line notation.
///
/// Indexing is 1-based: `w(i)` is the image of i.  Values are immutable once
/// constructed and cheap to copy for the small n used here (n <= 255).
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a rearrangement of 1..n.
  explicit Permutation(const std::vector<int>& images);

  static Permutation identity(int n);

  /// Accepts "2143" (one digit per entry) or "2,1,4,3".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const noexcept { return images_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> images() const;

  /// Compact digits when n <= 9, comma separated otherwise.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<std::uint8_t> images, Unchecked) : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend struct std::hash<Permutation>;
};

/// (v·w)(i) = v(w(i)).
Permutation compose(const Permutation& v, const Permutation& w);
Permutation inverse(const Permutation& w);
Permutation longest_word(int n);
/// The adjacent transposition s_i of S_n.
Permutation simple_reflection(int n, int i);
/// w0·w·w0.
Permutation w0_conjugate(const Permutation& w);

int length(const Permutation& w);
int sign(const Permutation& w);

/// Indices i_1..i_k with s_{i_1}···s_{i_k} = w and k = length(w).
std::vector<int> reduced_word(const Permutation& w);

/// Flattening of w to the positions in `positions`.
Permutation restriction(const Permutation& w, const IndexSet& positions);

bool contains_pattern(const Permutation& w, const Permutation& pattern);
inline bool avoids(const Permutation& w, const Permutation& pattern) {
  return !contains_pattern(w, pattern);
}
bool avoids_321(const Permutation& w);

bool bruhat_leq(const Permutation& u, const Permutation& v);

struct Block {
  int value_rank;
  int length;
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockStructure {
  std::vector<Block> blocks;
  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

/// Coarsest split into runs of consecutive increasing values.
BlockStructure block_structure(const Permutation& w);

bool is_1324_adjacent(const Permutation& w, const Permutation& w2);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace tlimm

template <>
struct std::hash<tlimm::Permutation> {
  std::size_t operator()(const tlimm::Permutation& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : w.images_) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};
