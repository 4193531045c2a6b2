#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>
#include <numbers>

#include "abpair/errors.hpp"
#include "abpair/verify.hpp"

using namespace abpair;

TEST(Verify, DefaultSuitePasses) {
  const auto reports = run_verify_suite();
  ASSERT_EQ(reports.size(), 5u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << r.identity_name << " " << r.max_rel_residual;
    EXPECT_GT(r.samples, 0);
    EXPECT_LE(r.max_rel_residual, r.tolerance);
  }
}

TEST(Verify, ImpossibleToleranceFailsCleanly) {
  VerifyOptions opt;
  opt.tolerance = 1e-15;
  const auto reports = run_verify_suite(opt);
  ASSERT_EQ(reports.size(), 5u);
  for (const auto& r : reports) {
    EXPECT_FALSE(r.passed) << r.identity_name;
    EXPECT_TRUE(std::isfinite(r.max_abs_residual));
  }
}

TEST(Verify, OtherSeedStillPasses) {
  VerifyOptions a, b;
  b.seed = 42;
  const auto ra = run_verify_suite(a), rb = run_verify_suite(b);
  bool differ = false;
  for (std::size_t i = 0; i < rb.size(); ++i) {
    EXPECT_TRUE(rb[i].passed) << rb[i].identity_name;
    differ = differ || ra[i].max_abs_residual != rb[i].max_abs_residual;
  }
  EXPECT_TRUE(differ);
}

TEST(Verify, ReproducibleAndJobsIndependent) {
  VerifyOptions one, four;
  four.jobs = 4;
  const auto a = run_verify_suite(one), b = run_verify_suite(four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].identity_name, b[i].identity_name);
    EXPECT_EQ(a[i].max_abs_residual, b[i].max_abs_residual);
  }
  EXPECT_EQ(report_json(a), report_json(b));
}

TEST(Verify, JsonReport) {
  const auto reports = run_verify_suite();
  const auto j = nlohmann::json::parse(report_json(reports));
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_TRUE(j.at("all_passed").get<bool>());
  ASSERT_EQ(j.at("identities").size(), 5u);
  for (const auto& id : j.at("identities")) {
    for (const char* key : {"identity_name", "max_abs_residual", "max_rel_residual", "samples",
                            "passed"}) {
      EXPECT_TRUE(id.contains(key)) << key;
    }
  }
  const std::string table = report_table(reports);
  EXPECT_NE(table.find("PASS"), std::string::npos);
}

TEST(Verify, ClosedIntegralDiagnostics) {
  const auto grid = default_closed_grid(kDefaultSeed);
  const IdentityReport r = check_closed_integral(grid);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.extra("a_at_pi_6"), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.extra("D_at_pi_6"), 2.0, 1e-15);
  // The sin(mu pi) variant only matches when mu - nu is odd.
  EXPECT_GT(r.extra("sin_mu_form_max_rel_residual"), 1e-3);
  EXPECT_TRUE(std::isnan(r.extra("no_such_key")));
}

TEST(Verify, VanishingGridGuards) {
  const VanishingPoint bad[] = {{1, 2, 3, 0.5, 0.6, 1.0}};
  EXPECT_THROW(check_vanishing_integral(bad), std::invalid_argument);
  const auto grid = default_vanishing_grid(kDefaultSeed);
  ASSERT_EQ(grid.size(), 20u);
  for (const auto& p : grid) EXPECT_GT(p.c, p.b1 + p.b2);
}

TEST(Verify, PhiIntegralPhase) {
  const double z[] = {2.0};
  const IdentityReport r = check_phi_integral(-4, 4, z);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.extra("fitted_phase"), 0.0, 1e-10);
}

TEST(Verify, ResummationRate) {
  const int schedule[] = {5, 10, 20, 40};
  const IdentityReport r = check_geometric_resummation(KinematicPoint{}, schedule);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.extra("rate"), r.extra("max_ab"), 0.02);
}

// a, b close to one: convergence is slow, the reported rate still tracks
// max(a, b).
TEST(Verify, ResummationStress) {
  KinematicPoint p;
  p.mass = 0.1;
  p.k_perp = 1.4;
  p.k3 = 0.0;
  const int schedule[] = {20, 40, 80, 160};
  const IdentityReport r = check_geometric_resummation(p, schedule, 1e-6, 0.02);
  EXPECT_GT(r.extra("max_ab"), 0.8);
  EXPECT_NEAR(r.extra("rate"), r.extra("max_ab"), 0.02);
}
