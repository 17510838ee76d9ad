#include "tlimm/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include "tlimm/error.hpp"

namespace tlimm {

namespace {

constexpr int kMaxSize = 255;

void require_same_size(const Permutation& a, const Permutation& b, const char* op) {
  if (a.size() != b.size()) {
    throw PreconditionError(std::string(op) + ": size mismatch (" + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

Permutation::Permutation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n > kMaxSize) throw PreconditionError("permutation too large");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  images_.reserve(images.size());
  for (int x : images) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      throw PreconditionError("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(x)] = true;
    images_.push_back(static_cast<std::uint8_t>(x));
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0 || n > kMaxSize) throw PreconditionError("bad permutation size");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), std::uint8_t{1});
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  auto fail = [&] { return ParseError("invalid permutation '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw fail();
      images.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto token = text.substr(start, end - start);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) throw fail();
      images.push_back(value);
      start = end + 1;
    }
  }
  try {
    return Permutation(images);
  } catch (const PreconditionError&) {
    throw fail();
  }
}

std::vector<int> Permutation::images() const { return {images_.begin(), images_.end()}; }

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (auto x : images_) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation compose(const Permutation& v, const Permutation& w) {
  require_same_size(v, w, "compose");
  std::vector<std::uint8_t> img(w.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = v.images_[w.images_[i] - 1U];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& w) {
  std::vector<std::uint8_t> img(w.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[w.images_[i] - 1U] = static_cast<std::uint8_t>(i + 1);
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation longest_word(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return Permutation(img);
}

Permutation simple_reflection(int n, int i) {
  if (i < 1 || i >= n) throw PreconditionError("generator index out of range");
  auto img = Permutation::identity(n).images();
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
  return Permutation(img);
}

Permutation w0_conjugate(const Permutation& w) {
  const int n = w.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = n + 1 - w(n + 1 - i);
  return Permutation(img);
}

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

int sign(const Permutation& w) { return length(w) % 2 == 0 ? 1 : -1; }

std::vector<int> reduced_word(const Permutation& w) {
  // Sort w to the identity by moving 1, 2, ... leftwards; each swap of
  // positions p, p+1 is right multiplication by s_p, so the word read
  // backwards expresses w.
  auto img = w.images();
  std::vector<int> swaps;
  for (int value = 1; value <= w.size(); ++value) {
    auto pos = static_cast<int>(std::find(img.begin(), img.end(), value) - img.begin());
    for (; pos > value - 1; --pos) {
      std::swap(img[static_cast<std::size_t>(pos - 1)], img[static_cast<std::size_t>(pos)]);
      swaps.push_back(pos);
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Permutation restriction(const Permutation& w, const IndexSet& positions) {
  if (positions.empty()) throw PreconditionError("restriction: empty index set");
  std::vector<int> values;
  values.reserve(positions.size());
  int prev = 0;
  for (int i : positions) {
    if (i <= prev || i > w.size()) throw PreconditionError("restriction: bad index set");
    prev = i;
    values.push_back(w(i));
  }
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (int& x : values)
    x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1;
  return Permutation(values);
}

namespace {

// Depth-first matching of pattern letters left to right.  Each new letter
// must land strictly between the host values already chosen for its nearest
// pattern neighbours below and above; failed states are memoized.
class PatternSearch {
 public:
  PatternSearch(const Permutation& host, const Permutation& pattern)
      : host_(host), k_(pattern.size()), below_(static_cast<std::size_t>(k_), -1),
        above_(static_cast<std::size_t>(k_), -1), chosen_(static_cast<std::size_t>(k_), 0) {
    for (int t = 0; t < k_; ++t) {
      int lo = 0, hi = k_ + 1;
      for (int s = 0; s < t; ++s) {
        int v = pattern(s + 1);
        if (v < pattern(t + 1) && v > lo) {
          lo = v;
          below_[static_cast<std::size_t>(t)] = s;
        }
        if (v > pattern(t + 1) && v < hi) {
          hi = v;
          above_[static_cast<std::size_t>(t)] = s;
        }
      }
    }
  }

  bool run() { return search(0, 0); }

 private:
  bool search(int pos, int t) {
    if (t == k_) return true;
    if (host_.size() - pos < k_ - t) return false;
    std::string key;
    key.push_back(static_cast<char>(pos));
    key.push_back(static_cast<char>(t));
    for (int s = 0; s < t; ++s) key.push_back(static_cast<char>(chosen_[static_cast<std::size_t>(s)]));
    if (failed_.contains(key)) return false;

    const int b = below_[static_cast<std::size_t>(t)];
    const int a = above_[static_cast<std::size_t>(t)];
    const int lo = b < 0 ? 0 : chosen_[static_cast<std::size_t>(b)];
    const int hi = a < 0 ? host_.size() + 1 : chosen_[static_cast<std::size_t>(a)];
    for (int p = pos; p < host_.size(); ++p) {
      const int x = host_(p + 1);
      if (x <= lo || x >= hi) continue;
      chosen_[static_cast<std::size_t>(t)] = x;
      if (search(p + 1, t + 1)) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const Permutation& host_;
  int k_;
  std::vector<int> below_, above_, chosen_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
  if (pattern.size() > w.size()) throw PreconditionError("pattern longer than host");
  return PatternSearch(w, pattern).run();
}

bool avoids_321(const Permutation& w) {
  // A 321 exists iff some entry has a larger entry before it and a smaller one after it.
  const int n = w.size();
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
  for (int i = n; i >= 1; --i)
    suffix_min[static_cast<std::size_t>(i)] = std::min(suffix_min[static_cast<std::size_t>(i) + 1], w(i));
  int prefix_max = 0;
  for (int i = 1; i <= n; ++i) {
    if (prefix_max > w(i) && suffix_min[static_cast<std::size_t>(i) + 1] < w(i)) return false;
    prefix_max = std::max(prefix_max, w(i));
  }
  return true;
}

namespace {

// rank[i][j] = |w([1,i]) ∩ [1,j]| for 0 <= i, j <= n.
std::vector<int> rank_matrix(const Permutation& w) {
  const int n = w.size();
  const auto stride = static_cast<std::size_t>(n + 1);
  std::vector<int> rank(stride * stride, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      rank[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)] =
          rank[static_cast<std::size_t>(i - 1) * stride + static_cast<std::size_t>(j)] + (w(i) <= j ? 1 : 0);
  return rank;
}

}  // namespace

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  require_same_size(u, v, "bruhat_leq");
  auto ru = rank_matrix(u);
  auto rv = rank_matrix(v);
  for (std::size_t k = 0; k < ru.size(); ++k)
    if (ru[k] < rv[k]) return false;
  return true;
}

BlockStructure block_structure(const Permutation& w) {
  const int n = w.size();
  std::vector<int> starts;  // first position of each run
  for (int i = 1; i <= n; ++i)
    if (i == 1 || w(i) != w(i - 1) + 1) starts.push_back(i);

  std::vector<int> mins;
  for (int s : starts) mins.push_back(w(s));
  std::vector<int> sorted = mins;
  std::sort(sorted.begin(), sorted.end());

  BlockStructure out;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const int end = k + 1 < starts.size() ? starts[k + 1] : n + 1;
    const int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), mins[k]) - sorted.begin()) + 1;
    out.blocks.push_back({rank, end - starts[k]});
  }
  return out;
}

bool is_1324_adjacent(const Permutation& w, const Permutation& w2) {
  require_same_size(w, w2, "is_1324_adjacent");
  const int n = w.size();
  int first = 0, second = 0, diffs = 0;
  for (int i = 1; i <= n; ++i) {
    if (w(i) == w2(i)) continue;
    if (++diffs > 2) return false;
    (first == 0 ? first : second) = i;
  }
  if (diffs != 2 || w(first) != w2(second) || w(second) != w2(first)) return false;
  const int lo = std::min(w(first), w(second));
  const int hi = std::max(w(first), w(second));
  bool left = false, right = false;
  for (int c = 1; c < first && !left; ++c) left = w(c) < lo;
  for (int d = second + 1; d <= n && !right; ++d) right = w(d) > hi;
  return left && right;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace tlimm
