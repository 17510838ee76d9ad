#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "tlimm/error.hpp"
#include "tlimm/perm.hpp"
#include "tlimm/verify/oracles.hpp"

using namespace tlimm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

Permutation transposition(int n, int i, int j) {
  auto img = Permutation::identity(n).images();
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(j - 1)]);
  return Permutation(img);
}

Permutation random_perm(int n, std::mt19937_64& rng) {
  auto img = Permutation::identity(n).images();
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

int inversions(const Permutation& w) {
  int k = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j) k += w(i) > w(j) ? 1 : 0;
  return k;
}

// Everything below v: closure of w -> w·t for transpositions t that lower the length.
std::set<Permutation> bruhat_down_set(const Permutation& v) {
  const int n = v.size();
  std::set<Permutation> seen{v};
  std::queue<Permutation> todo;
  todo.push(v);
  while (!todo.empty()) {
    const auto w = todo.front();
    todo.pop();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (w(i) < w(j)) continue;
        auto lower = compose(w, transposition(n, i, j));
        if (seen.insert(lower).second) todo.push(lower);
      }
  }
  return seen;
}

}  // namespace

TEST(PermParse, AcceptsCompactAndCommaForms) {
  EXPECT_EQ(P("2143"), P("2,1,4,3"));
  EXPECT_EQ(P("10,1,2,3,4,5,6,7,8,9").size(), 10);
  EXPECT_EQ(P("10,1,2,3,4,5,6,7,8,9").str(), "10,1,2,3,4,5,6,7,8,9");
  EXPECT_EQ(P("2143").str(), "2143");
}

TEST(PermParse, RejectsMalformedInput) {
  for (const char* bad : {"", "2243", "0123", "21a", "1,,2", "1,3", "5"}) EXPECT_THROW(P(bad), ParseError) << bad;
}

TEST(PermExamples, Compose) {
  EXPECT_EQ(compose(P("213"), P("132")), P("231"));
  EXPECT_EQ(compose(P("3142"), Permutation::identity(4)), P("3142"));
  EXPECT_EQ(compose(longest_word(4), longest_word(4)), P("1234"));
  EXPECT_THROW(compose(P("21"), P("123")), PreconditionError);
}

TEST(PermExamples, Inverse) {
  EXPECT_EQ(inverse(P("2341")), P("4123"));
  EXPECT_EQ(inverse(Permutation::identity(5)), Permutation::identity(5));
  EXPECT_EQ(inverse(P("21")), P("21"));
}

TEST(PermExamples, LongestWordLengthSign) {
  EXPECT_EQ(longest_word(4), P("4321"));
  EXPECT_EQ(longest_word(1), P("1"));
  EXPECT_EQ(length(longest_word(4)), 6);
  EXPECT_EQ(length(P("2143")), 2);
  EXPECT_EQ(sign(P("2143")), 1);
  EXPECT_EQ(length(Permutation::identity(6)), 0);
  EXPECT_EQ(sign(Permutation::identity(6)), 1);
  EXPECT_EQ(sign(P("4321")), 1);
  EXPECT_EQ(sign(P("4123")), -1);
}

TEST(PermExamples, ReducedWord) {
  EXPECT_EQ(reduced_word(P("2341")), (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(reduced_word(Permutation::identity(4)).empty());
  EXPECT_EQ(reduced_word(P("21")), (std::vector<int>{1}));
}

TEST(PermExamples, Restriction) {
  EXPECT_EQ(restriction(P("31524"), {2, 4, 5}), P("123"));
  EXPECT_EQ(restriction(P("31524"), {1, 2, 3, 4, 5}), P("31524"));
  EXPECT_EQ(restriction(P("56123784"), {1, 2, 3}), P("231"));
  EXPECT_THROW(restriction(P("312"), {2, 1}), PreconditionError);
}

TEST(PermExamples, Patterns) {
  EXPECT_TRUE(contains_pattern(P("31524"), P("123")));
  EXPECT_FALSE(contains_pattern(P("31524"), P("321")));
  EXPECT_TRUE(contains_pattern(P("2143"), P("2143")));
  EXPECT_TRUE(avoids(P("2143"), P("321")));
  EXPECT_FALSE(avoids_321(P("4321")));
}

TEST(PermExamples, Bruhat) {
  EXPECT_TRUE(bruhat_leq(P("1423"), P("2431")));
  EXPECT_TRUE(bruhat_leq(P("2431"), P("2431")));
  EXPECT_FALSE(bruhat_leq(P("2143"), P("1234")));
}

TEST(PermExamples, BlockStructure) {
  const auto b = block_structure(P("56123784"));
  ASSERT_EQ(b.blocks.size(), 4u);
  const std::vector<Block> expected{{3, 2}, {1, 3}, {4, 2}, {2, 1}};
  EXPECT_EQ(b.blocks, expected);
  EXPECT_EQ(block_structure(Permutation::identity(5)).blocks, (std::vector<Block>{{1, 5}}));
  EXPECT_EQ(block_structure(P("2143")).blocks, (std::vector<Block>{{2, 1}, {1, 1}, {4, 1}, {3, 1}}));
}

TEST(PermExamples, Adjacency) {
  EXPECT_TRUE(is_1324_adjacent(P("14235"), P("13245")));
  EXPECT_TRUE(is_1324_adjacent(P("13245"), P("14235")));
  EXPECT_FALSE(is_1324_adjacent(P("14235"), P("14235")));
  EXPECT_FALSE(is_1324_adjacent(P("2143"), P("2413")));
}

TEST(PermProperties, ContainmentAgreesWithSubsetScan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const auto w = random_perm(n, rng);
    const auto v = random_perm(k, rng);
    ASSERT_EQ(contains_pattern(w, v), verify::contains_by_subsets(w, v)) << w.str() << " " << v.str();
  }
}

TEST(PermProperties, AvoidanceOf321MatchesTripleScan) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n)) ASSERT_EQ(avoids_321(w), !verify::has_decreasing_triple(w)) << w.str();
}

TEST(PermProperties, PatternSymmetryUnderInverseAndRotation) {
  for (int n = 1; n <= 6; ++n) {
    const auto ws = all_permutations(n);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (int k = 1; k <= std::min(n, 4); ++k)
      for (const auto& v : all_permutations(k))
        for (int trial = 0; trial < 40; ++trial) {
          const auto& w = ws[rng() % ws.size()];
          const bool base = contains_pattern(w, v);
          ASSERT_EQ(base, contains_pattern(inverse(w), inverse(v))) << w.str() << " " << v.str();
          ASSERT_EQ(base, contains_pattern(w0_conjugate(w), w0_conjugate(v))) << w.str() << " " << v.str();
        }
  }
}

TEST(PermProperties, CatalanCountOf321Avoiders) {
  const std::int64_t expected[] = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    const auto all = all_permutations(n);
    const auto count = std::count_if(all.begin(), all.end(), [](const Permutation& w) { return avoids_321(w); });
    EXPECT_EQ(count, expected[n - 1]) << n;
  }
}

TEST(PermProperties, ReducedWordRoundTrip) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto word = reduced_word(w);
      ASSERT_EQ(static_cast<int>(word.size()), inversions(w)) << w.str();
      ASSERT_EQ(length(w), inversions(w));
      auto product = Permutation::identity(n);
      for (int i : word) product = compose(product, simple_reflection(n, i));
      ASSERT_EQ(product, w);
      ASSERT_EQ(sign(w), inversions(w) % 2 == 0 ? 1 : -1);
    }
}

TEST(PermProperties, BruhatMatchesTranspositionClosure) {
  for (int n = 1; n <= 4; ++n) {
    const auto all = all_permutations(n);
    for (const auto& v : all) {
      const auto below = bruhat_down_set(v);
      for (const auto& u : all) ASSERT_EQ(bruhat_leq(u, v), below.contains(u)) << u.str() << " " << v.str();
    }
  }
}

TEST(PermProperties, BruhatIsGraded) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = all_permutations(n);
    for (const auto& u : all)
      for (const auto& v : all)
        if (bruhat_leq(u, v)) {
          ASSERT_LE(length(u), length(v)) << u.str() << " " << v.str();
        }
  }
}

TEST(PermProperties, InversionsDescend) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (w(i) < w(j)) continue;
          const auto lower = compose(w, transposition(n, i, j));
          ASSERT_TRUE(bruhat_leq(lower, w)) << w.str();
          ASSERT_LT(length(lower), length(w));
        }
}

TEST(PermProperties, RestrictionMonotonicity) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto w = random_perm(n, rng);
    const auto v = random_perm(n, rng);
    IndexSet I;
    for (int i = 1; i <= n; ++i)
      if (w(i) != v(i) || rng() % 2 == 0) I.push_back(i);
    if (I.empty()) continue;
    if (bruhat_leq(restriction(w, I), restriction(v, I))) {
      ASSERT_TRUE(bruhat_leq(w, v)) << w.str() << " " << v.str();
    }
  }
}

TEST(PermProperties, AdjacencyIsSymmetricAndPreservesSign) {
  for (int n = 4; n <= 5; ++n) {
    const auto all = all_permutations(n);
    for (const auto& w : all)
      for (const auto& w2 : all)
        if (is_1324_adjacent(w, w2)) {
          ASSERT_TRUE(is_1324_adjacent(w2, w));
          ASSERT_EQ(sign(w), -sign(w2));
        }
  }
}

TEST(PermProperties, HashDistinguishesSmallPermutations) {
  std::set<std::size_t> hashes;
  const auto all = all_permutations(6);
  for (const auto& w : all) hashes.insert(std::hash<Permutation>{}(w));
  EXPECT_EQ(hashes.size(), all.size());
}
