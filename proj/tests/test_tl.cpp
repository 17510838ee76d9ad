#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tlimm/coloring.hpp"
#include "tlimm/error.hpp"
#include "tlimm/perm.hpp"
#include "tlimm/tl.hpp"
#include "tlimm/verify/oracles.hpp"

using namespace tlimm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
NonCrossingMatching M(const char* s) { return NonCrossingMatching::parse(s); }

TLElement t(int n, int i) { return TLElement::basis(generator(n, i)); }

std::vector<Permutation> avoiders(int n) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n))
    if (avoids_321(w)) out.push_back(w);
  return out;
}

bool parity_ok(const NonCrossingMatching& m) {
  for (int p = 1; p <= 2 * m.size(); ++p)
    if ((m.circular_partner(p) - p) % 2 == 0) return false;
  return true;
}

}  // namespace

TEST(Matching, ParseAndPrint) {
  const auto m = M("1-3' 2-4' 3-4 1'-2'");
  EXPECT_EQ(m.size(), 4);
  EXPECT_EQ(m.str(), "1-3' 2-4' 3-4 1'-2'");
  EXPECT_EQ(M("4-3  2'-1' 4'-2 3'-1"), m);
  EXPECT_EQ(m.partner({3, true}), (Vertex{1, false}));
  EXPECT_THROW(M("1-2' 2-1'"), ParseError);  // crossing
  EXPECT_THROW(M("1-1"), ParseError);
  EXPECT_THROW(M("1-x"), ParseError);
  EXPECT_THROW(M(""), ParseError);
}

TEST(Matching, CircularLayout) {
  EXPECT_EQ(circular_position(4, {1, false}), 1);
  EXPECT_EQ(circular_position(4, {1, true}), 8);
  EXPECT_EQ(vertex_at(4, 5), (Vertex{4, true}));
  for (const auto& m : all_matchings(5)) EXPECT_TRUE(parity_ok(m));
}

TEST(Generators, Examples) {
  EXPECT_EQ(generator(2, 1), M("1-2 1'-2'"));
  EXPECT_EQ(generator(3, 2), M("1-1' 2-3 2'-3'"));
  const auto g = generator(4, 1);
  EXPECT_EQ(g.partner({3, false}), (Vertex{3, true}));
  EXPECT_EQ(g.partner({4, false}), (Vertex{4, true}));
  EXPECT_THROW(generator(3, 3), PreconditionError);
}

TEST(Generators, Relations) {
  EXPECT_EQ(t(2, 1) * t(2, 1), 2 * t(2, 1));
  EXPECT_EQ(t(4, 1) * t(4, 3), t(4, 3) * t(4, 1));
  EXPECT_EQ(t(3, 1) * t(3, 2) * t(3, 1), t(3, 1));
  EXPECT_EQ(t(3, 2) * t(3, 1) * t(3, 2), t(3, 2));
  EXPECT_EQ(TLElement::one(3) * t(3, 2), t(3, 2));
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(Permutation::identity(3)), TLElement::one(3));
  EXPECT_EQ(theta(P("21")), t(2, 1) - TLElement::one(2));
  const auto expected = t(3, 1) + t(3, 2) - t(3, 1) * t(3, 2) - t(3, 2) * t(3, 1) - TLElement::one(3);
  EXPECT_EQ(theta(P("321")), expected);
  EXPECT_EQ(theta(P("321")).terms().size(), 5u);
}

TEST(Theta, TableExamples) {
  const auto& t2 = theta_table(2);
  EXPECT_EQ(t2.entries().size(), 2u);
  EXPECT_EQ(t2.at(P("12")), TLElement::one(2));
  EXPECT_EQ(t2.at(P("21")), t(2, 1) - TLElement::one(2));
  EXPECT_EQ(theta_table(3).at(P("321")), theta(P("321")));
  EXPECT_EQ(theta_table(4).entries().size(), 24u);
  EXPECT_EQ(&theta_table(4), &theta_table(4));
}

TEST(Beta, Examples) {
  EXPECT_EQ(beta(Permutation::identity(4)), NonCrossingMatching::identity(4));
  EXPECT_EQ(beta(P("2341")).str(), "1-3' 2-4' 3-4 1'-2'");
  EXPECT_EQ(beta(P("21")), M("1-2 1'-2'"));
  EXPECT_EQ(beta_inv(NonCrossingMatching::identity(5)), Permutation::identity(5));
  EXPECT_EQ(beta_inv(M("1-2 1'-2'")), P("21"));
  EXPECT_THROW(beta(P("321")), PreconditionError);
}

TEST(Beta, RoundTripAndBasisCount) {
  const std::size_t catalan[] = {1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 7; ++n) {
    std::set<NonCrossingMatching> images;
    for (const auto& w : avoiders(n)) {
      const auto m = beta(w);
      ASSERT_EQ(beta_inv(m), w) << w.str();
      images.insert(m);
    }
    const auto all = all_matchings(n);
    EXPECT_EQ(images.size(), catalan[n - 1]);
    EXPECT_EQ(images, std::set<NonCrossingMatching>(all.begin(), all.end()));
  }
}

TEST(Beta, ColoringLaw) {
  // Every pair of beta(w) joins a black vertex to a white one whose label is
  // at least the black label.
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : avoiders(n)) {
      const auto m = beta(w);
      const auto c = canonical_coloring(w);
      ASSERT_TRUE(is_compatible(m, c)) << w.str();
      for (const auto& [x, y] : m.pairs()) {
        const auto& black = c.is_black(x) ? x : y;
        const auto& white = c.is_black(x) ? y : x;
        ASSERT_NE(c.is_black(x), c.is_black(y));
        ASSERT_LE(black.label, white.label) << w.str() << " " << m.str();
      }
    }
}

TEST(Coefficients, Examples) {
  for (const auto& w : avoiders(5)) EXPECT_EQ(f_coeff(w, w), 1) << w.str();
  EXPECT_EQ(f_coeff(P("2143"), P("4321")), 2);
  EXPECT_EQ(std::abs(f_coeff(P("231564"), P("654321"))), 3);
  EXPECT_THROW(f_coeff(P("21"), P("123")), PreconditionError);
}

TEST(Coefficients, VanishOutsideBruhatInterval) {
  for (int n = 1; n <= 5; ++n) {
    const auto& table = theta_table(n);
    for (const auto& w : avoiders(n))
      for (const auto& u : all_permutations(n))
        if (!bruhat_leq(w, u)) {
          ASSERT_EQ(table.coeff(w, u), 0) << w.str() << " " << u.str();
        }
  }
}

TEST(Coefficients, SymmetryRandomizedAtSix) {
  const auto& table = theta_table(6);
  const auto ws = avoiders(6);
  const auto us = all_permutations(6);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto& w = ws[rng() % ws.size()];
    const auto& u = us[rng() % us.size()];
    const auto base = table.coeff(w, u);
    ASSERT_EQ(base, table.coeff(inverse(w), inverse(u)));
    ASSERT_EQ(base, table.coeff(w0_conjugate(w), w0_conjugate(u)));
  }
}

TEST(Algebra, ThetaIsMultiplicativeExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    const auto all = all_permutations(n);
    for (const auto& u : all)
      for (const auto& v : all) ASSERT_EQ(theta(u) * theta(v), theta(compose(u, v))) << u.str() << " " << v.str();
  }
}

TEST(Algebra, ThetaIsMultiplicativeRandomized) {
  std::mt19937_64 rng(56);
  for (int n = 5; n <= 6; ++n) {
    const auto all = all_permutations(n);
    const auto& table = theta_table(n);
    for (int trial = 0; trial < 150; ++trial) {
      const auto& u = all[rng() % all.size()];
      const auto& v = all[rng() % all.size()];
      ASSERT_EQ(table.at(u) * table.at(v), table.at(compose(u, v))) << u.str() << " " << v.str();
    }
  }
}

TEST(Algebra, MultiplicationIsAssociativeAndKeepsParity) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_matchings(n);
    for (int trial = 0; trial < 200; ++trial) {
      const auto& x = all[rng() % all.size()];
      const auto& y = all[rng() % all.size()];
      const auto& z = all[rng() % all.size()];
      const auto [xy, l1] = multiply(x, y);
      const auto [yz, l2] = multiply(y, z);
      const auto [left, l3] = multiply(xy, z);
      const auto [right, l4] = multiply(x, yz);
      ASSERT_EQ(left, right);
      ASSERT_EQ(l1 + l3, l2 + l4);
      ASSERT_TRUE(parity_ok(xy));
      ASSERT_TRUE(parity_ok(left));
    }
  }
}

TEST(Algebra, IdentityIsNeutralAndLoopsCounted) {
  const auto g = generator(3, 1);
  EXPECT_EQ(multiply(g, g).second, 1);
  EXPECT_EQ(multiply(g, g).first, g);
  EXPECT_EQ(multiply(NonCrossingMatching::identity(3), g).first, g);
  EXPECT_EQ(multiply(g, NonCrossingMatching::identity(3)).second, 0);
}
