#include <gtest/gtest.h>

#include <stdexcept>

#include "tlimm/error.hpp"
#include "tlimm/perm.hpp"
#include "tlimm/verify/oracles.hpp"
#include "tlimm/verify/suites.hpp"

using namespace tlimm;

TEST(Oracles, Catalan) {
  const std::int64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(verify::catalan(n), expected[n]);
}

TEST(Oracles, SubsetContainment) {
  const auto w = Permutation::parse("24153");
  EXPECT_TRUE(verify::contains_by_subsets(w, Permutation::parse("2143")));
  EXPECT_TRUE(verify::contains_by_subsets(w, Permutation::parse("132")));
  EXPECT_FALSE(verify::contains_by_subsets(w, Permutation::parse("321")));
  EXPECT_FALSE(verify::has_decreasing_triple(w));
  EXPECT_TRUE(verify::has_decreasing_triple(Permutation::parse("1432")));
}

TEST(Oracles, ColoredMatchingPoolSize) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(static_cast<std::int64_t>(verify::all_colored_matchings(n).size()), verify::catalan(n) << n);
}

TEST(Oracles, NeighbourClassesPartitionEverything) {
  for (int n = 1; n <= 5; ++n) {
    std::size_t total = 0;
    for (const auto& cls : verify::neighbour_closure_classes(n)) total += cls.size();
    EXPECT_EQ(total, all_permutations(n).size());
  }
}

TEST(Suites, Catalogue) {
  EXPECT_EQ(verify::suite_ids().size(), 10u);
  EXPECT_TRUE(verify::is_suite("A7"));
  EXPECT_FALSE(verify::is_suite("A11"));
  EXPECT_EQ(verify::default_n("A6"), 8);
  EXPECT_THROW(verify::run_suite("B1", {}), std::invalid_argument);
  EXPECT_THROW(verify::run_suite("A1", {.n = 9}), LimitError);
}

TEST(Suites, ResultsIndependentOfThreadCount) {
  for (const char* id : {"A1", "A4", "A7", "A9"}) {
    const auto serial = verify::run_suite(id, {.n = 5, .jobs = 1});
    const auto parallel = verify::run_suite(id, {.n = 5, .jobs = 4});
    EXPECT_TRUE(serial.ok()) << id;
    EXPECT_EQ(serial.checks, parallel.checks) << id;
    EXPECT_EQ(serial.failures.size(), parallel.failures.size()) << id;
    EXPECT_EQ(serial.notes, parallel.notes) << id;
  }
}
