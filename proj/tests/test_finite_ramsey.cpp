#include <gtest/gtest.h>

#include "support.hpp"

using namespace pcalc;
using pcalc::testing::brute_force_arrow;

namespace {

std::vector<std::size_t> clique_of(const CliqueVerdict& v) {
  if (const auto* r = std::get_if<RedClique>(&v)) return r->vertices;
  if (const auto* b = std::get_if<BlueClique>(&v)) return b->vertices;
  return {};
}

}  // namespace

TEST(Coloring, EdgeOrderAndString) {
  EXPECT_EQ(edge_index(0, 1), 0u);
  EXPECT_EQ(edge_index(0, 2), 1u);
  EXPECT_EQ(edge_index(2, 1), 2u);
  EXPECT_EQ(edge_index(0, 3), 3u);
  Coloring c(4);
  c.set(1, 3, Color::Blue);
  EXPECT_EQ(c.edge_string(), "RRRRBR");
  EXPECT_EQ(Coloring::from_edge_string(4, "RRRRBR"), c);
  EXPECT_THROW(Coloring::from_edge_string(4, "RRR"), std::invalid_argument);
  EXPECT_THROW(Coloring::from_edge_string(3, "RXR"), std::invalid_argument);
  EXPECT_THROW(c.at(2, 2), std::out_of_range);
}

TEST(Coloring, Pentagon) {
  auto p = pentagon_witness();
  EXPECT_EQ(p.at(0, 1), Color::Red);
  EXPECT_EQ(p.at(0, 2), Color::Blue);
  EXPECT_EQ(p.at(4, 0), Color::Red);
  EXPECT_TRUE(std::holds_alternative<NoClique>(verify_coloring(p, 3, 3)));
}

TEST(Coloring, VerifyExamples) {
  auto red = verify_coloring(Coloring(3, Color::Red), 3, 3);
  ASSERT_TRUE(std::holds_alternative<RedClique>(red));
  EXPECT_EQ(clique_of(red), (std::vector<std::size_t>{0, 1, 2}));

  auto blue = verify_coloring(Coloring(4, Color::Blue), 5, 3);
  ASSERT_TRUE(std::holds_alternative<BlueClique>(blue));
  EXPECT_EQ(clique_of(blue), (std::vector<std::size_t>{0, 1, 2}));

  EXPECT_THROW(verify_coloring(Coloring(3), 0, 2), ContractViolation);
}

TEST(Coloring, DotAndTikz) {
  auto dot = to_dot(pentagon_witness());
  std::size_t red = 0, blue = 0;
  for (std::size_t p = 0; (p = dot.find("color=red", p)) != std::string::npos; ++p) ++red;
  for (std::size_t p = 0; (p = dot.find("color=blue", p)) != std::string::npos; ++p) ++blue;
  EXPECT_EQ(red, 5u);
  EXPECT_EQ(blue, 5u);
  auto single = to_dot(Coloring(1));
  EXPECT_NE(single.find("  0;"), std::string::npos);
  EXPECT_EQ(single.find("--"), std::string::npos);
  EXPECT_NE(to_tikz(pentagon_witness()).find("\\draw[red]"), std::string::npos);
}

TEST(FiniteArrow, Examples) {
  auto five = decide_arrow_finite(5, 3, 3);
  ASSERT_FALSE(holds(five));
  EXPECT_TRUE(avoids(std::get<ArrowFails>(five).witness, 3, 3));
  EXPECT_TRUE(holds(decide_arrow_finite(6, 3, 3)));
  EXPECT_TRUE(holds(decide_arrow_finite(10, 4, 3)));
}

TEST(FiniteArrow, PentagonIsTheOnlyShape) {
  // every 5-vertex witness for (3,3) is a 5-cycle in each color
  auto w = std::get<ArrowFails>(decide_arrow_finite(5, 3, 3)).witness;
  for (std::size_t v = 0; v < 5; ++v) {
    int red = 0;
    for (std::size_t u = 0; u < 5; ++u)
      if (u != v && w.at(u, v) == Color::Red) ++red;
    EXPECT_EQ(red, 2);
  }
}

TEST(FiniteArrow, LimitsAndContracts) {
  EXPECT_THROW(decide_arrow_finite(14, 3, 3), ResourceLimit);
  SearchOptions wide;
  wide.max_vertices = 14;
  EXPECT_TRUE(holds(decide_arrow_finite(14, 3, 3, wide)));
  EXPECT_THROW(decide_arrow_finite(5, 0, 3), ContractViolation);
  EXPECT_THROW(ramsey_number(3, 3, 20), ResourceLimit);
}

TEST(FiniteArrow, TrivialCases) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t a = 1; a <= 5; ++a) {
      EXPECT_TRUE(holds(decide_arrow_finite(n, a, 1)));
      EXPECT_TRUE(holds(decide_arrow_finite(n, 1, a)));
      auto r = decide_arrow_finite(n, a, 2);
      EXPECT_EQ(holds(r), n >= a) << n << " " << a;
      if (!holds(r)) EXPECT_EQ(std::get<ArrowFails>(r).witness, Coloring(n, Color::Red));
    }
}

TEST(FiniteArrow, AgreesWithBruteForce) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t a = 1; a <= 4; ++a)
      for (std::size_t b = 1; b <= 4; ++b)
        EXPECT_EQ(holds(decide_arrow_finite(n, a, b)), brute_force_arrow(n, a, b)) << n << "," << a << "," << b;
}

TEST(FiniteArrow, MonotoneAndSymmetric) {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) {
      bool before = false;
      for (std::size_t n = 1; n <= 9; ++n) {
        auto r = decide_arrow_finite(n, a, b);
        auto s = decide_arrow_finite(n, b, a);
        if (before) EXPECT_TRUE(holds(r)) << n << "," << a << "," << b;
        before = holds(r);
        EXPECT_EQ(holds(r), holds(s));
        if (!holds(r)) {
          EXPECT_TRUE(avoids(std::get<ArrowFails>(r).witness, a, b));
          EXPECT_TRUE(avoids(std::get<ArrowFails>(s).witness.swapped(), a, b));
        }
      }
    }
}

TEST(FiniteArrow, ParallelMatchesSequential) {
  SearchOptions par;
  par.threads = 4;
  for (auto [n, a, b] : std::vector<std::array<std::size_t, 3>>{{5, 3, 3}, {8, 4, 3}, {8, 3, 4}, {9, 4, 3}, {7, 3, 4}}) {
    auto s = decide_arrow_finite(n, a, b);
    auto p = decide_arrow_finite(n, a, b, par);
    ASSERT_EQ(holds(s), holds(p));
    if (!holds(s)) EXPECT_EQ(std::get<ArrowFails>(s).witness, std::get<ArrowFails>(p).witness);
  }
}

TEST(RamseyNumber, Examples) {
  auto r33 = ramsey_number(3, 3, 10);
  ASSERT_TRUE(r33.value);
  EXPECT_EQ(*r33.value, 6u);
  ASSERT_TRUE(r33.witness_below);
  EXPECT_EQ(r33.witness_below->vertices(), 5u);
  EXPECT_TRUE(avoids(*r33.witness_below, 3, 3));

  auto r43 = ramsey_number(4, 3, 12);
  ASSERT_TRUE(r43.value);
  EXPECT_EQ(*r43.value, 9u);
  EXPECT_TRUE(avoids(*r43.witness_below, 4, 3));

  EXPECT_EQ(ramsey_number(2, 2, 5).value, 2u);
  EXPECT_EQ(ramsey_number(2, 5, 13).value, 5u);
  EXPECT_EQ(ramsey_number(4, 4, 10).value, std::nullopt);
}
