#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "tlimm/error.hpp"
#include "tlimm/io/json.hpp"
#include "tlimm/io/render.hpp"
#include "tlimm/tl.hpp"

using namespace tlimm;
using io::Json;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST(JsonRoundTrip, Immanants) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      if (!avoids_321(w)) continue;
      const auto f = tl_immanant(w);
      const auto text = io::to_json(f).dump();
      EXPECT_EQ(io::immanant_from_json(io::parse_json(text)), f);
    }
  const auto j = io::to_json(tl_immanant(P("21")));
  EXPECT_EQ(j.dump(), R"({"n":2,"terms":[{"perm":"21","coeff":"1"}]})");
}

TEST(JsonRoundTrip, ShapesAndDecompositions) {
  for (const char* w : {"1234", "2143", "24153", "231564", "3142"}) {
    const auto d = decompose(P(w));
    const auto back = io::decomposition_from_json(io::parse_json(io::to_json(d).dump()));
    EXPECT_EQ(back.kind, d.kind);
    EXPECT_EQ(back.sign, d.sign);
    EXPECT_EQ(back.shapes, d.shapes);
    const auto h = hull(P(w));
    EXPECT_EQ(io::shape_from_json(io::to_json(h)), h);
  }
  EXPECT_EQ(io::to_json(decompose(P("24153"))).dump(), R"({"kind":"none"})");
  EXPECT_EQ(io::to_json(hull(P("2143"))).dump(), R"({"n":4,"lambda":[4,4,4,3],"mu":[1,0,0,0]})");
}

TEST(JsonRoundTrip, CaseParams) {
  for (const CaseParams p : {CaseParams(Case1Params{2, 1, 0, 2, 1}), CaseParams(Case2Params{1, 1, 1, 1, 0, 1})}) {
    EXPECT_EQ(io::case_params_from_json(io::to_json(p)), p);
  }
  EXPECT_EQ(io::to_json(CaseParams(Case1Params{1, 1, 0, 1, 1})).dump(),
            R"({"case":"case1","a":1,"b":1,"e":0,"c":1,"d":1})");
}

TEST(JsonRoundTrip, MatricesAndBasisTerms) {
  std::mt19937_64 rng(5);
  RationalMatrix m(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) m(i, j) = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 4));
  const auto back = io::matrix_from_json(io::to_json(m));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(back(i, j), m(i, j));
  EXPECT_EQ(io::matrix_from_json(io::parse_json(R"([[1, "1/2"], ["-3/6", 0]])"))(2, 1), Rational(-1, 2));

  const auto terms = percent_basis_decompose(determinant_immanant(4));
  EXPECT_EQ(io::basis_terms_from_json(io::to_json(terms)), terms);
}

TEST(JsonErrors, MalformedInputIsParseError) {
  EXPECT_THROW(io::parse_json("{"), ParseError);
  EXPECT_THROW(io::immanant_from_json(io::parse_json(R"({"terms":[]})")), ParseError);
  EXPECT_THROW(io::immanant_from_json(io::parse_json(R"({"n":2,"terms":[{"perm":"123","coeff":"1"}]})")), ParseError);
  EXPECT_THROW(io::immanant_from_json(io::parse_json(R"({"n":2,"terms":[{"perm":"12","coeff":"x"}]})")), ParseError);
  EXPECT_THROW(io::immanant_from_json(io::parse_json(R"({"n":2,"terms":[{"perm":"22","coeff":"1"}]})")), ParseError);
  EXPECT_THROW(io::shape_from_json(io::parse_json(R"({"n":2,"lambda":[1,2],"mu":[0,0]})")), ParseError);
  EXPECT_THROW(io::decomposition_from_json(io::parse_json(R"({"kind":"three"})")), ParseError);
  EXPECT_THROW(io::case_params_from_json(io::parse_json(R"({"case":"case3"})")), ParseError);
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"([[1,2],[3]])")), ParseError);
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"([["1/0"]])")), ParseError);
}

TEST(Render, MatchingAscii) {
  const std::string expected =
      "1 o-----+ +-o 1'\n"
      "        | |\n"
      "2 o---+ | +-o 2'\n"
      "      | |\n"
      "3 o-+ | +---o 3'\n"
      "    | |\n"
      "4 o-+ +-----o 4'\n";
  EXPECT_EQ(io::render_ascii(beta(P("2341"))), expected);
  EXPECT_EQ(io::render_ascii(NonCrossingMatching::identity(2)), "1 o-----o 1'\n\n2 o-----o 2'\n");
}

// Follows each drawn strand from its left endpoint and checks it ends at the
// partner vertex; any crossing would corrupt a glyph and break the walk.
TEST(Render, TracedStrandsMatchPairs) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& m : all_matchings(n)) {
      std::vector<std::string> grid;
      std::istringstream in(io::render_ascii(m));
      for (std::string line; std::getline(in, line);) grid.push_back(line);
      auto at = [&](int x, int y) -> char {
        if (y < 0 || y >= static_cast<int>(grid.size()) || x < 0 || x >= static_cast<int>(grid[y].size())) return ' ';
        return grid[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
      };
      const int x_left = static_cast<int>(grid[0].find('o'));
      const int x_right = static_cast<int>(grid[0].rfind('o'));
      auto vertex = [&](int x, int y) { return Vertex{y / 2 + 1, x == x_right}; };
      auto trace = [&](int x, int y, int dx, int dy) {
        for (int steps = 0; steps < 10000; ++steps) {
          x += dx, y += dy;
          const char ch = at(x, y);
          if (ch == 'o') return vertex(x, y);
          if (ch == '+') {
            const int pdx = dy, pdy = dx;  // one perpendicular; try both signs
            if (at(x + pdx, y + pdy) != ' ' && !(pdx == -dx && pdy == -dy)) dx = pdx, dy = pdy;
            else dx = -pdx, dy = -pdy;
          } else if (ch == ' ') {
            return Vertex{0, false};
          }
        }
        return Vertex{0, false};
      };
      for (int i = 1; i <= n; ++i) {
        const int y = 2 * (i - 1);
        ASSERT_EQ(trace(x_left, y, 1, 0), m.partner({i, false})) << m.str();
        ASSERT_EQ(trace(x_right, y, -1, 0), m.partner({i, true})) << m.str();
      }
    }
}

TEST(Render, ShapesAndSvg) {
  EXPECT_EQ(io::render_ascii(hull(P("2143")), P("2143")), ". * # #\n* # # #\n# # # *\n# # * .\n");
  EXPECT_EQ(io::render_ascii(SkewShape(2, {2, 1}, {1, 0})), ". #\n# .\n");
  const auto svg = io::render_svg(beta(P("2341")));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const auto shape_svg = io::render_svg(hull(P("2143")), P("2143"));
  EXPECT_EQ(std::count(shape_svg.begin(), shape_svg.end(), '\n'), 2 + 16 + 4);
}
