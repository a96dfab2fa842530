#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ncpoisson_tools/commands.hpp"

namespace {

using namespace ncpoisson::tools;

TEST(Config, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(validate(c));
  c.n_list = {0};
  try {
    validate(c);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("n must be"), std::string::npos);
  }
  c = RunConfig{};
  c.vars = 3;
  EXPECT_THROW(validate(c), ConfigError);
  c = RunConfig{};
  c.cap = 0;
  EXPECT_THROW(validate(c), ConfigError);
  c = RunConfig{};
  c.tol = 0.0;
  EXPECT_THROW(validate(c), ConfigError);
  c = RunConfig{};
  c.samples = 0;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Verify, SmallRunPasses) {
  RunConfig c;
  c.n_list = {2};
  c.samples = 10;
  c.seed = 7;
  const Report r = cmd_verify(c);
  EXPECT_TRUE(r.ok());
  const auto j = r.to_json(c);
  EXPECT_EQ(j["results"]["2"]["der_dim"], 3);
  EXPECT_FALSE(j["records"][0].contains("runtime_ms"));
}

TEST(Verify, RecordsAreSortedAndAnchored) {
  RunConfig c;
  c.n_list = {1, 2};
  c.samples = 5;
  const Report r = cmd_verify(c);
  const auto j = r.to_json(c);
  std::string prev;
  for (const auto& rec : j["records"]) {
    const std::string name = rec["name"];
    EXPECT_LT(prev, name);
    prev = name;
    EXPECT_TRUE(anchor_index().count(rec["anchor"].get<std::string>())) << rec["anchor"];
  }
  EXPECT_TRUE(r.ok());
}

TEST(Verify, AnchorsDocumented) {
  std::ifstream doc(std::string(NCPOISSON_SOURCE_DIR) + "/docs/anchors.md");
  ASSERT_TRUE(doc.good());
  std::stringstream ss;
  ss << doc.rdbuf();
  for (const auto& [anchor, text] : anchor_index()) {
    EXPECT_NE(ss.str().find("`" + anchor + "`"), std::string::npos) << anchor;
  }
}

TEST(Verify, TinyToleranceIsReportedAsError) {
  RunConfig c;
  c.n_list = {2};
  c.samples = 5;
  c.tol = 1e-30;
  const Report r = cmd_verify(c);
  EXPECT_FALSE(r.ok());
  bool saw = false;
  for (const auto& [name, rec] : r.records()) {
    saw = saw || rec.diagnostic.find("ToleranceUnachievable") != std::string::npos;
  }
  EXPECT_TRUE(saw);
}

TEST(Verify, Deterministic) {
  RunConfig c;
  c.n_list = {2, 3};
  c.vars = 2;
  c.samples = 5;
  c.seed = 123;
  EXPECT_EQ(cmd_verify(c).to_json(c).dump(2), cmd_verify(c).to_json(c).dump(2));
}

TEST(Classify, MatrixAndBundle) {
  RunConfig c;
  c.n_list = {1, 2, 3};
  const auto j = cmd_classify(c).to_json(c);
  EXPECT_EQ(j["results"]["1"]["space_dim"], 0);
  EXPECT_EQ(j["results"]["2"]["space_dim"], 1);
  EXPECT_EQ(j["results"]["3"]["space_dim"], 1);
  c.n_list = {2};
  c.bundle = true;
  c.cap = 3;
  c.seed = 11;
  const Report b = cmd_classify(c);
  EXPECT_TRUE(b.ok());
  EXPECT_LT(b.to_json(c)["results"]["2"]["bundle_max_error"].get<double>(), 1e-8);
}

}  // namespace
