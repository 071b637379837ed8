#include "hsh/serialization.hpp"

#include <gtest/gtest.h>

namespace hsh {
namespace {

TEST(MultiIndexJson, RoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    for (const MultiIndex& idx : enumerate_indices(n, 3)) {
      EXPECT_EQ(multi_index_from_json(to_json(idx)), idx);
      EXPECT_EQ(parse_multi_index(to_json(idx).dump()), idx);
    }
  }
}

TEST(MultiIndexJson, WireFormat) {
  const nlohmann::ordered_json j = to_json(MultiIndex({1, 2, 2}, Branch::minus));
  EXPECT_EQ(j.dump(), R"({"N":3,"l":[1,2,2],"branch":"-"})");
}

TEST(MultiIndexJson, BranchDefaultsToPlus) {
  EXPECT_EQ(parse_multi_index(R"({"N":2,"l":[1,3]})").branch(), Branch::plus);
}

TEST(MultiIndexJson, RejectsMalformedInput) {
  const std::vector<std::string> bad{
      "",
      "{",
      "[1,2]",
      R"({"l":[0,1],"branch":"+"})",
      R"({"N":2,"branch":"+"})",
      R"({"N":"2","l":[0,1]})",
      R"({"N":2.5,"l":[0,1]})",
      R"({"N":3,"l":[0,1]})",
      R"({"N":2,"l":[0,1.5]})",
      R"({"N":2,"l":"01"})",
      R"({"N":2,"l":[2,1]})",
      R"({"N":2,"l":[-1,1]})",
      R"({"N":0,"l":[]})",
      R"({"N":2,"l":[0,1],"branch":"*"})",
      R"({"N":2,"l":[0,1],"branch":1})",
  };
  for (const std::string& text : bad) {
    EXPECT_THROW(parse_multi_index(text), InvalidMultiIndex) << text;
  }
}

TEST(ReportJson, Fields) {
  VerificationReport report{MultiIndex({0, 1}), 2.0, 1e-9, 2e-15, 0.0, true};
  const nlohmann::ordered_json j = to_json(report);
  EXPECT_EQ(j["index"], to_json(MultiIndex({0, 1})));
  EXPECT_EQ(j["lambda"], 2.0);
  EXPECT_EQ(j["eigen_residual_max"], 1e-9);
  EXPECT_EQ(j["norm_relerr"], 2e-15);
  EXPECT_EQ(j["ortho_max"], 0.0);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j.size(), 6u);
}

}  // namespace
}  // namespace hsh
