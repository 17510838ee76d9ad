#include "tlimm/verify/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tlimm::verify {

bool has_decreasing_triple(const Permutation& w) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (w(i) > w(j) && w(j) > w(k)) return true;
  return false;
}

bool contains_by_subsets(const Permutation& w, const Permutation& pattern) {
  const int n = w.size();
  const int k = pattern.size();
  if (k > n) return false;
  std::vector<bool> choose(static_cast<std::size_t>(n), false);
  std::fill(choose.begin(), choose.begin() + k, true);
  do {
    std::vector<int> values;
    for (int i = 0; i < n; ++i)
      if (choose[static_cast<std::size_t>(i)]) values.push_back(w(i + 1));
    bool match = true;
    for (int x = 0; x < k && match; ++x)
      for (int y = x + 1; y < k && match; ++y)
        match = (values[static_cast<std::size_t>(x)] < values[static_cast<std::size_t>(y)]) ==
                (pattern(x + 1) < pattern(y + 1));
    if (match) return true;
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return false;
}

std::int64_t catalan(int n) {
  std::int64_t c = 1;  // C_0
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

int ColoredMatching::count_black(int lo, int hi) const {
  int k = 0;
  for (int p = lo; p <= hi; ++p) k += black[static_cast<std::size_t>(p)] ? 1 : 0;
  return k;
}

bool ColoredMatching::all(int lo, int hi, bool is_black) const {
  for (int p = lo; p <= hi; ++p)
    if (black[static_cast<std::size_t>(p)] != is_black) return false;
  return true;
}

bool ColoredMatching::has_internal_pair(const std::vector<int>& positions) const {
  for (int p : positions)
    if (std::find(positions.begin(), positions.end(), partner[static_cast<std::size_t>(p)]) != positions.end())
      return true;
  return false;
}

namespace {

void pair_up(int n, std::vector<int>& partner, std::vector<std::vector<int>>& out) {
  const int size = 2 * n;
  int p = 1;
  while (p <= size && partner[static_cast<std::size_t>(p)] != 0) ++p;
  if (p > size) {
    out.push_back(partner);
    return;
  }
  for (int q = p + 1; q <= size; ++q) {
    if (partner[static_cast<std::size_t>(q)] != 0) continue;
    bool crosses = false;
    for (int x = 1; x <= size && !crosses; ++x) {
      const int y = partner[static_cast<std::size_t>(x)];
      if (y == 0 || y < x) continue;
      const bool x_in = p < x && x < q;
      const bool y_in = p < y && y < q;
      crosses = x_in != y_in;
    }
    if (crosses) continue;
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
    pair_up(n, partner, out);
    partner[static_cast<std::size_t>(p)] = 0;
    partner[static_cast<std::size_t>(q)] = 0;
  }
}

}  // namespace

std::vector<ColoredMatching> all_colored_matchings(int n) {
  std::vector<std::vector<int>> partners;
  std::vector<int> scratch(static_cast<std::size_t>(2 * n + 1), 0);
  pair_up(n, scratch, partners);

  std::vector<ColoredMatching> out;
  for (const auto& partner : partners) {
    std::vector<int> lows;
    for (int p = 1; p <= 2 * n; ++p)
      if (partner[static_cast<std::size_t>(p)] > p) lows.push_back(p);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ColoredMatching cm{n, std::vector<bool>(static_cast<std::size_t>(2 * n + 1), false), partner};
      for (int k = 0; k < n; ++k) {
        const int lo = lows[static_cast<std::size_t>(k)];
        const bool lo_black = (mask >> k) & 1u;
        cm.black[static_cast<std::size_t>(lo)] = lo_black;
        cm.black[static_cast<std::size_t>(partner[static_cast<std::size_t>(lo)])] = !lo_black;
      }
      out.push_back(std::move(cm));
    }
  }
  return out;
}

std::vector<int> vertex_positions(int n, int lo, int hi, int plo, int phi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  for (int i = plo; i <= phi; ++i) out.push_back(2 * n + 1 - i);
  return out;
}

namespace {

std::vector<int> span(int lo, int hi) {
  std::vector<int> out;
  for (int p = lo; p <= hi; ++p) out.push_back(p);
  return out;
}

int black_among(const ColoredMatching& cm, const std::vector<int>& positions) {
  int k = 0;
  for (int p : positions) k += cm.black[static_cast<std::size_t>(p)] ? 1 : 0;
  return k;
}

template <class Pred>
std::vector<ColoredMatching> filter(const std::vector<ColoredMatching>& pool, Pred pred) {
  std::vector<ColoredMatching> out;
  for (const auto& cm : pool)
    if (pred(cm)) out.push_back(cm);
  return out;
}

}  // namespace

std::vector<ColoredMatching> brute_simple(const std::vector<ColoredMatching>& pool, int A, int B, int C) {
  const auto zone = span(1, A);
  return filter(pool, [&](const ColoredMatching& cm) {
    return cm.n * 2 == A + B + C && !cm.has_internal_pair(zone) && cm.all(A + 1, A + B, true) &&
           cm.all(A + B + 1, A + B + C, false);
  });
}

std::vector<ColoredMatching> brute_general(const std::vector<ColoredMatching>& pool, int a, int b, int c, int d,
                                           int e) {
  const int n = a + b + c + d + e;
  const auto second = span(b + c + e + 1, a + 2 * b + c + e);
  const auto fourth = span(a + b + e + n + 1, 2 * n);
  return filter(pool, [&](const ColoredMatching& cm) {
    return cm.n == n && cm.all(1, b + c + e, true) && black_among(cm, second) == a &&
           !cm.has_internal_pair(second) && cm.all(a + 2 * b + c + e + 1, a + b + e + n, false) &&
           black_among(cm, fourth) == d && !cm.has_internal_pair(fourth);
  });
}

std::vector<ColoredMatching> brute_case1(const std::vector<ColoredMatching>& pool, int a, int b, int c, int d,
                                         int e) {
  const int n = a + b + c + d + e;
  const auto fixed_black = vertex_positions(n, a + 1, n - d, 1, 0);
  const auto fixed_white = vertex_positions(n, 1, 0, b + 1, n - c);
  const auto head = vertex_positions(n, 1, a, 1, b);
  const auto tail = vertex_positions(n, n - d + 1, n, n - c + 1, n);
  return filter(pool, [&](const ColoredMatching& cm) {
    return cm.n == n && black_among(cm, fixed_black) == static_cast<int>(fixed_black.size()) &&
           black_among(cm, fixed_white) == 0 && black_among(cm, head) == a && black_among(cm, tail) == d &&
           !cm.has_internal_pair(head) && !cm.has_internal_pair(tail);
  });
}

std::vector<ColoredMatching> brute_case2(const std::vector<ColoredMatching>& pool, int a, int e, int b, int c,
                                         int f, int d) {
  const int n = a + e + b + c + f + d;
  const auto black_top = vertex_positions(n, 1, a + e, 1, 0);
  const auto white_top = vertex_positions(n, a + e + b + c + 1, n, 1, 0);
  const auto black_bottom = vertex_positions(n, 1, 0, 1, b + f);
  const auto white_bottom = vertex_positions(n, 1, 0, b + f + a + d + 1, n);
  const auto top_zone = vertex_positions(n, a + e + 1, a + e + b + c, 1, 0);
  const auto bottom_zone = vertex_positions(n, 1, 0, b + f + 1, b + f + a + d);
  return filter(pool, [&](const ColoredMatching& cm) {
    return cm.n == n && black_among(cm, black_top) == static_cast<int>(black_top.size()) &&
           black_among(cm, white_top) == 0 && black_among(cm, black_bottom) == static_cast<int>(black_bottom.size()) &&
           black_among(cm, white_bottom) == 0 && black_among(cm, top_zone) == c &&
           black_among(cm, bottom_zone) == d && !cm.has_internal_pair(top_zone) &&
           !cm.has_internal_pair(bottom_zone);
  });
}

std::vector<std::vector<Permutation>> neighbour_closure_classes(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> perms;
  std::map<Permutation, std::size_t> index;
  do {
    index.emplace(Permutation(img), perms.size());
    perms.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  std::vector<std::size_t> parent(perms.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t idx = 0; idx < perms.size(); ++idx) {
    const auto v = perms[idx].images();
    for (int j = 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int lo = std::min(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(k)]);
        const int hi = std::max(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(k)]);
        bool below = false, above = false;
        for (int i = 0; i < j; ++i) below = below || v[static_cast<std::size_t>(i)] < lo;
        for (int l = k + 1; l < n; ++l) above = above || v[static_cast<std::size_t>(l)] > hi;
        if (!below || !above) continue;
        auto swapped = v;
        std::swap(swapped[static_cast<std::size_t>(j)], swapped[static_cast<std::size_t>(k)]);
        const auto other = index.at(Permutation(swapped));
        parent[find(idx)] = find(other);
      }
  }

  std::map<std::size_t, std::vector<Permutation>> groups;
  for (std::size_t idx = 0; idx < perms.size(); ++idx) groups[find(idx)].push_back(perms[idx]);
  std::vector<std::vector<Permutation>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

}  // namespace tlimm::verify
