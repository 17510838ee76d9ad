#include <gtest/gtest.h>

#include "tlimm/classify.hpp"
#include "tlimm/error.hpp"
#include "tlimm/tl.hpp"

using namespace tlimm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

bool has(const Permutation& w, const char* p) {
  const auto v = P(p);
  return v.size() <= w.size() && contains_pattern(w, v);
}

std::vector<Permutation> avoiders(int n) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n))
    if (avoids_321(w)) out.push_back(w);
  return out;
}

// Case-1 count B under the unadjusted reading: positions j <= b
// with u(j) among the last d values.
int literal_b(const Permutation& u, int b, int d) {
  const int n = u.size();
  int k = 0;
  for (int j = 1; j <= b; ++j) k += u(j) >= n + 1 - d ? 1 : 0;
  return k;
}

}  // namespace

TEST(Corners, Examples) {
  EXPECT_EQ(corner_params(P("2143")), (CornerParams{1, 1, 1, 1}));
  EXPECT_EQ(corner_params(P("1234")), (CornerParams{0, 0, 0, 0}));
  EXPECT_EQ(corner_params(P("31524")), (CornerParams{1, 2, 1, 2}));
}

TEST(MainPatterns, Examples) {
  EXPECT_TRUE(avoids_main_patterns(P("2143")));
  EXPECT_FALSE(avoids_main_patterns(P("24153")));
  EXPECT_FALSE(avoids_main_patterns(P("231564")));
  EXPECT_FALSE(avoids_main_patterns(P("1324")));
  EXPECT_THROW(avoids_main_patterns(P("321")), PreconditionError);
}

TEST(Blocks, ClassifyExamples) {
  EXPECT_EQ(classify_2143(P("2143")), CaseParams(Case1Params{1, 1, 0, 1, 1}));
  EXPECT_EQ(classify_2143(P("24153")), CaseParams(Case2Params{1, 1, 1, 1, 0, 1}));
  EXPECT_EQ(classify_2143(P("231564")), CaseParams(Case1Params{2, 1, 0, 2, 1}));
  EXPECT_EQ(to_string(classify_2143(P("2143"))), "Case1(a=1,b=1,e=0,c=1,d=1)");
  EXPECT_THROW(classify_2143(P("1234")), PreconditionError);
  EXPECT_THROW(classify_2143(P("13254")), PreconditionError);
}

TEST(Blocks, BuildExamples) {
  EXPECT_EQ(build_case1(1, 1, 0, 1, 1), P("2143"));
  EXPECT_EQ(build_case2(1, 1, 1, 1, 0, 1), P("24153"));
  EXPECT_EQ(build_case2(1, 0, 1, 1, 1, 1), P("31524"));
  EXPECT_THROW(build_case1(0, 1, 0, 1, 1), PreconditionError);
  EXPECT_THROW(build_case2(1, 0, 1, 1, 0, 1), PreconditionError);
}

TEST(Blocks, RoundTripUpToEight) {
  for (int n = 4; n <= 8; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; a + b <= n; ++b)
        for (int c = 1; a + b + c <= n; ++c)
          for (int d = 1; a + b + c + d <= n; ++d) {
            const int rest = n - a - b - c - d;
            const Case1Params p1{a, b, rest, c, d};
            ASSERT_EQ(classify_2143(build(p1)), CaseParams(p1));
            for (int e = 0; e <= rest; ++e) {
              const Case2Params p2{a, e, b, c, rest - e, d};
              if (std::max(p2.e, p2.f) < 1) continue;
              ASSERT_EQ(classify_2143(build(p2)), CaseParams(p2));
            }
          }
}

TEST(Blocks, EveryApplicablePermutationIsBuilt) {
  for (int n = 4; n <= 7; ++n)
    for (const auto& w : avoiders(n)) {
      if (has(w, "1324") || !has(w, "2143")) continue;
      const auto p = classify_2143(w);
      ASSERT_EQ(build(p), w);
      if (const auto* q = std::get_if<Case2Params>(&p)) {
        if (q->e >= 1) {
          ASSERT_TRUE(has(w, "24153")) << w.str();
        }
        if (q->f >= 1) {
          ASSERT_TRUE(has(w, "31524")) << w.str();
        }
      }
    }
}

TEST(Blocks, CornerOrderingFor2143Containing) {
  for (int n = 4; n <= 7; ++n)
    for (const auto& w : avoiders(n)) {
      if (!has(w, "2143")) continue;
      const auto inv = inverse(w);
      ASSERT_LT(w(1), w(n)) << w.str();
      ASSERT_LT(inv(1), inv(n)) << w.str();
    }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_coeff(P("2143"), P("2143")), 1);
  EXPECT_EQ(closed_form_coeff(P("2143"), P("2134")), 0);
  EXPECT_EQ(closed_form_coeff(P("2143"), P("4321")), 2);
  EXPECT_EQ(antidiag_coeff(P("2143")), 2);
  EXPECT_EQ(antidiag_coeff(P("231564")), 3);
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_THROW(closed_form_coeff(P("1324"), P("1234")), PreconditionError);
  EXPECT_THROW(closed_form_coeff(P("21"), P("123")), PreconditionError);
}

// Regression fixture for the two readings of the Case-1 count B.
TEST(ClosedForm, LiteralReadingOfBDisagreesWithOracle) {
  const auto w = P("2143");
  const auto u = P("4123");
  const auto [a, b, e, c, d] = std::get<Case1Params>(classify_2143(w));
  EXPECT_EQ(e, 0);
  const int n = w.size();
  int A = 0;
  for (int i = 1; i <= a; ++i) A += u(i) >= n + 1 - c ? 1 : 0;
  const int s = sign(w) * sign(u);
  const auto literal = s * binomial(A + literal_b(u, b, d), A);
  EXPECT_EQ(f_coeff(w, u), -1);
  EXPECT_EQ(literal, -2);
  EXPECT_EQ(closed_form_coeff(w, u), f_coeff(w, u));
}

TEST(ClosedForm, MatchesOracleExhaustivelyUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const auto& table = theta_table(n);
    for (const auto& w : avoiders(n)) {
      if (has(w, "1324")) continue;
      for (const auto& u : all_permutations(n)) ASSERT_EQ(closed_form_coeff(w, u), table.coeff(w, u)) << w.str() << " " << u.str();
    }
  }
}

TEST(Expansions, SignedCmFor2143) {
  const std::vector<CmTerm> expected{{1, {}, {}}, {-1, {1}, {1}}, {-1, {4}, {4}}, {1, {1, 4}, {1, 4}}};
  EXPECT_EQ(cm_expansion(P("2143")), expected);
  Immanant sum(4);
  for (const auto& t : expected) sum = add(sum, scale(cm_immanant(4, t.I, t.J), std::int64_t{t.sign}));
  EXPECT_EQ(sum.coeff(P("4321")), 2);
}

TEST(Expansions, SignedCmFor24153) {
  const std::vector<CmTerm> expected{{1, {1, 2, 3}, {2, 4, 5}},
                                     {1, {1, 2, 3}, {3, 4, 5}},
                                     {1, {1, 2, 4}, {2, 4, 5}},
                                     {1, {1, 2, 4}, {3, 4, 5}}};
  EXPECT_EQ(cm_expansion(P("24153")), expected);
}

TEST(Expansions, Rectangle) {
  const std::vector<RectTerm> expected{{{2, 4}, {1, 2}}, {{3, 4}, {1, 2}}};
  EXPECT_EQ(rect_cm_expansion(P("3142")), expected);
  EXPECT_EQ(rect_cm_expansion(P("1234")), (std::vector<RectTerm>{{{1, 2, 3, 4}, {1, 2, 3, 4}}}));
  EXPECT_THROW(rect_cm_expansion(P("2143")), PreconditionError);
  EXPECT_THROW(rect_cm_expansion(P("2314")), PreconditionError);  // not in normal form
}

TEST(Expansions, ReduceToSpecial) {
  const auto r1 = reduce_to_special(P("1342"));
  EXPECT_EQ(r1.reduced, P("1342"));
  EXPECT_TRUE(r1.transforms.empty());
  const auto r2 = reduce_to_special(P("2314"));
  EXPECT_EQ(r2.reduced, w0_conjugate(P("2314")));
  EXPECT_EQ(r2.transforms, std::vector<Transform>{Transform::T});
  const auto r3 = reduce_to_special(P("3142"));
  EXPECT_EQ(r3.reduced, P("3142"));
  EXPECT_TRUE(r3.transforms.empty());
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : avoiders(n)) {
      if (has(w, "1324") || has(w, "2143")) continue;
      const auto r = reduce_to_special(w);
      ASSERT_TRUE(r.reduced(1) == 1 || r.reduced(1) == r.reduced(n) + 1) << w.str();
      auto back = r.reduced;
      for (auto it = r.transforms.rbegin(); it != r.transforms.rend(); ++it) back = apply(*it, back);
      ASSERT_EQ(back, w);
    }
}

TEST(Decompose, Examples) {
  const auto one = decompose(P("1234"));
  EXPECT_EQ(one.kind, Decomposition::Kind::One);
  EXPECT_EQ(one.shapes, std::vector<SkewShape>{SkewShape::full(4)});

  const auto two = decompose(P("2143"));
  EXPECT_EQ(two.kind, Decomposition::Kind::Two);
  EXPECT_EQ(two.sign, 1);
  const std::vector<SkewShape> shapes{SkewShape(4, {4, 4, 4, 3}, {1, 0, 0, 0}), SkewShape(4, {4, 4, 4, 3}, {3, 1, 1, 0})};
  EXPECT_EQ(two.shapes, shapes);

  EXPECT_EQ(decompose(P("24153")).kind, Decomposition::Kind::None);
  EXPECT_THROW(decompose(P("321")), PreconditionError);
}

TEST(Decompose, ShapeSumsMatchUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : avoiders(n)) {
      const auto d = decompose(w, {.validate = false});
      ASSERT_EQ(d.kind != Decomposition::Kind::None, avoids_main_patterns(w)) << w.str();
      if (d.kind == Decomposition::Kind::None) continue;
      Immanant sum(n);
      for (const auto& s : d.shapes) sum = add(sum, percent_immanant(s));
      ASSERT_EQ(sum, scale(tl_immanant(w), std::int64_t{d.sign})) << w.str();
    }
}

TEST(Decompose, LargerSizesSkipTheOracle) {
  // n = 7 is past the default oracle size; the shapes are still produced.
  const auto d = decompose(build_case1(1, 1, 3, 1, 1), {.validate = true, .oracle_limit = 6});
  EXPECT_EQ(d.kind, Decomposition::Kind::Two);
  EXPECT_EQ(d.shapes.size(), 2u);
}
