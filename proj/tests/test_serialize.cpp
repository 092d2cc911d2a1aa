#include <gtest/gtest.h>

#include "support.hpp"

using namespace pcalc;
using pcalc::testing::corpus;

namespace {

NormalTerm nf(std::string_view s) { return normalize(parse(s)); }

}  // namespace

TEST(Serialize, ColoringRecord) {
  auto j = to_json(pentagon_witness());
  EXPECT_EQ(j.dump(), R"({"kind":"coloring","n":5,"edges":"RBRBBRRBBR"})");
  EXPECT_EQ(coloring_from_json(json::parse(j.dump())), pentagon_witness());
  EXPECT_THROW(coloring_from_json(json{{"kind", "coloring"}, {"n", 3}, {"edges", "RR"}}), ConsistencyError);
  EXPECT_THROW(coloring_from_json(json{{"kind", "realization"}}), ConsistencyError);
}

TEST(Serialize, PartitionWitnessRoundTrip) {
  for (const auto& n : corpus(200)) {
    if (decide_pigeonhole_Z(n, 2).holds) continue;
    auto w = witness_partition(n);
    auto j = to_json(w);
    auto back = partition_witness_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.subject, w.subject);
    EXPECT_EQ(back.a_leaves, w.a_leaves);
    EXPECT_EQ(back.b_leaves, w.b_leaves);
    EXPECT_EQ(to_json(back), j);
  }
}

TEST(Serialize, TamperedWitnessIsRejected) {
  auto j = to_json(witness_partition(nf("w*+w")));
  j["aLeaves"] = json::array({1});
  j["bLeaves"] = json::array({0});
  EXPECT_THROW(partition_witness_from_json(j), ConsistencyError);
  j["aTerm"] = "w";
  j["bTerm"] = "w*";
  EXPECT_THROW(partition_witness_from_json(j), ConsistencyError);
}

TEST(Serialize, RealizationRoundTrip) {
  auto r = realize(nf("(w+w*).w*"), 2);
  auto j = to_json(r);
  auto back = realization_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.size(), r.size());
  EXPECT_EQ(to_json(back), j);
}

TEST(Serialize, ZDecisionRecordsAreStable) {
  for (const auto& n : corpus(200)) {
    for (std::uint64_t k : {0u, 1u, 2u, 3u, 5u}) {
      auto j = to_json(decide_arrow_Z(n, k));
      auto again = to_json(decide_arrow_Z(normalize(parse(j.at("term").get<std::string>())), j.at("n").get<std::uint64_t>()));
      EXPECT_EQ(j, again) << j.dump();
      EXPECT_EQ(j.at("holds").get<bool>(), decide_arrow_Z(n, k).holds);
    }
  }
}

TEST(Serialize, SeparationRecordCarriesColoring) {
  auto d = decide_arrow_Z(nf("w*+w"), 3);
  auto j = to_json(d, 3);
  EXPECT_EQ(j.at("certificateKind"), "SeparationCert");
  auto g = coloring_from_json(j.at("certificateBody").at("coloring"));
  EXPECT_EQ(g.vertices(), 6u);
  EXPECT_EQ(j.at("certificateBody").at("coloringRecipe"), "red within parts, blue across");
}

TEST(Serialize, FiniteArrowRecord) {
  auto r = decide_arrow_finite(5, 3, 3);
  auto j = to_json(r, 5, 3, 3);
  EXPECT_FALSE(j.at("holds").get<bool>());
  EXPECT_TRUE(avoids(coloring_from_json(j.at("witness")), 3, 3));
  EXPECT_TRUE(to_json(decide_arrow_finite(6, 3, 3), 6, 3, 3).contains("proofNote"));
}
