#include <gtest/gtest.h>

#include "isoschub/verify.hpp"

using namespace isoschub;

TEST(Verify, EverySuitePassesAtDefaultSize) {
  for (const auto& id : suite_ids()) {
    SuiteReport r = run_suite(id);
    EXPECT_TRUE(r.ok()) << id << ": " << r.summary();
    EXPECT_GT(r.cases, 0) << id;
  }
  EXPECT_EQ(suite_ids().size(), 25u);
}

TEST(Verify, OrthogonalityReport) {
  SuiteParams p;
  p.n = 3;
  p.geometry = Geometry::Lagrangian;
  EXPECT_EQ(run_suite("orthogonality", p).summary(), "64/64 pairs OK");
  p.n = 2;
  EXPECT_EQ(run_suite("thm-5-23", p).summary(), "16/16 pairs OK");
}

TEST(Verify, FixedRankAndSizes) {
  SuiteParams p;
  p.n = 4;
  SuiteReport r = run_suite("pieri", p);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.cases, 2 * 16 * 4);
}

TEST(Verify, UnknownSuiteThrows) {
  EXPECT_THROW(run_suite("no-such-suite"), std::invalid_argument);
  SuiteParams bad;
  bad.max_n = 0;
  EXPECT_THROW(run_suite("pieri", bad), std::invalid_argument);
}

TEST(Verify, FailureSummaryFormat) {
  SuiteReport r;
  r.unit = "pairs";
  r.cases = 4;
  r.passed = 3;
  r.first_failure = "n=2 I=(1)";
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.summary(), "3/4 pairs FAILED (first: n=2 I=(1))");
}
