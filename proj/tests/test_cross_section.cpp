#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abpair/amplitude.hpp"
#include "abpair/cross_section.hpp"
#include "abpair/errors.hpp"
#include "points.hpp"

using namespace abpair;
using fixtures::generic_point;
using fixtures::random_point;
using fixtures::Sample;
constexpr double pi = std::numbers::pi;

namespace {

StructureParams params_of(const Sample& s) {
  return structure_params(s.pair.k_perp, s.pair.kp_perp, s.photon.kappa,
                          s.pair.phi_perp, s.pair.phip_perp, s.photon.phi_k);
}

PhotonIn ur_photon(double kappa, double phi) {
  PhotonIn ph;
  ph.kappa = kappa;
  ph.phi_k = phi;
  return ph;
}

PairOut ur_pair(double kappa, double phi, double k3 = 3.0) {
  const double eps = 0.3 * kappa;
  return solve_pair(kappa, std::sqrt(eps * eps - k3 * k3 - 1.0), k3, 1.0, phi, phi);
}

PairOut nr_pair(double excess) {
  const double kappa = 2.0 * (1.0 + excess);
  const double pt = std::sqrt(0.25 * kappa * kappa - 1.0);
  return solve_pair(kappa, 0.6 * pt, 0.3 * pt, 1.0, 0.4, 2.1);
}

}  // namespace

TEST(Density, MatchesProjectedAmplitude) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Sample s = random_point(rng, 0.05 + 0.0045 * i);
    const PolarizationDensity a = polarization_density(params_of(s), s.pair, s.flux);
    const PolarizationDensity b =
        projected_density(closed_form_amplitude(s.flux, s.photon, s.pair), s.pair);
    EXPECT_NEAR(a.lambda_s, b.lambda_s, 1e-11 * b.lambda_s);
    EXPECT_NEAR(a.lambda_p, b.lambda_p, 1e-11 * b.lambda_p + 1e-300);
  }
}

TEST(Density, Positive) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(0, 1);
  for (int i = 0; i < 10000; ++i) {
    const Sample s = random_point(rng, 4 * U(rng) - 2, 2.05, 40.0);
    const PolarizationDensity r = polarization_density(params_of(s), s.pair, s.flux);
    ASSERT_GE(r.lambda_s, 0.0);
    ASSERT_GE(r.lambda_p, 0.0);
    ASSERT_TRUE(std::isfinite(r.lambda_s) && std::isfinite(r.lambda_p));
  }
}

TEST(Density, IntegerFluxAndNoZMomentum) {
  const Sample s = generic_point(2.0);
  const PolarizationDensity r = polarization_density(params_of(s), s.pair, s.flux);
  EXPECT_EQ(r.lambda_s, 0.0);
  EXPECT_EQ(r.lambda_p, 0.0);
  Sample t = generic_point(0.3);
  t.pair = solve_pair(3.0, 0.8, 0.0, 1.0, 0.4, 2.1);
  const PolarizationDensity q = polarization_density(params_of(t), t.pair, t.flux);
  EXPECT_EQ(q.lambda_p, 0.0);
  EXPECT_GT(q.lambda_s, 0.0);
}

// |mode_plus + e^{-2 i pi delta} ...|^2 quotient forms written out directly.
TEST(Density, QuotientForms) {
  const Sample s = generic_point(0.37);
  const StructureParams sp = params_of(s);
  const double u = s.pair.phi_perp - s.photon.phi_k, v = s.pair.phip_perp - s.photon.phi_k;
  const double a = sp.a, b = sp.b;
  const double qp = 1.0 / ((1 - 2 * a * std::cos(u) + a * a) * (1 - 2 * b * std::cos(v) + b * b));
  EXPECT_NEAR(std::norm(sp.mode_plus), qp, 1e-13 * qp);
  EXPECT_NEAR(std::norm(sp.mode_minus), a * a * b * b * qp, 1e-13 * qp);
}

TEST(Xsec, Formula) {
  const Sample s = generic_point();
  const PolarizationDensity r = polarization_density(params_of(s), s.pair, s.flux);
  const XsecPoint x = differential_xsec(s.flux, s.photon, s.pair);
  const double ref = kFineStructure / s.photon.kappa / std::pow(2 * pi, 3) * s.pair.k_perp *
                     s.pair.kp_perp * r.lambda_s;
  EXPECT_NEAR(x.value, ref, 1e-15 * ref);
  EXPECT_GT(x.value, 0);
  Sample p = s;
  p.photon.polarization = Polarization::P;
  EXPECT_NEAR(differential_xsec(p.flux, p.photon, p.pair).value,
              xsec_from_density(r.lambda_p, p.pair, p.photon.kappa), 1e-15 * ref);
  EXPECT_THROW(differential_xsec(s.flux, s.photon, s.pair, 0.0), PhysicsError);
}

// End to end through the quadrature oracle.
TEST(Xsec, TierBEndToEnd) {
  const Sample s = generic_point(0.6);
  OracleOptions opt;
  opt.jobs = 4;
  const OracleResult o = oracle_amplitude(s.flux, s.photon, s.pair, 14, OracleTier::B, opt);
  const PolarizationDensity r = projected_density(o.amplitude, s.pair);
  const double x = xsec_from_density(r.lambda_s, s.pair, s.photon.kappa);
  const double ref = differential_xsec(s.flux, s.photon, s.pair).value;
  EXPECT_NEAR(x, ref, 1e-6 * ref + 2 * o.truncation_bound * ref);
}

TEST(Xsec, PeriodicInAzimuth) {
  Sample s = generic_point();
  const double a = differential_xsec(s.flux, s.photon, s.pair).value;
  s.pair.phi_perp += 2 * pi;
  s.pair.phip_perp -= 4 * pi;
  s.photon.phi_k += 2 * pi;
  EXPECT_NEAR(differential_xsec(s.flux, s.photon, s.pair).value, a, 1e-12 * a);
}

TEST(Nr, ConvergesTowardsThreshold) {
  const FluxParam flux = decompose_flux(0.3);
  double prev_s = 1e9, prev_p = 1e9;
  for (double e : {1e-2, 1e-3, 1e-4}) {
    const PairOut pair = nr_pair(e);
    PhotonIn ph = ur_photon(pair.eps + pair.eps_bar, 1.0);
    const StructureParams sp = structure_params(pair.k_perp, pair.kp_perp, ph.kappa,
                                                pair.phi_perp, pair.phip_perp, ph.phi_k);
    const PolarizationDensity full = polarization_density(sp, pair, flux);
    const NrLimit nr = nr_limit(flux, ph, pair);
    EXPECT_TRUE(nr.warnings.empty());
    EXPECT_EQ(nr.amplitude.d2, 0.0);
    const double ds = std::abs(full.lambda_s / nr.density.lambda_s - 1);
    const double dp = std::abs(full.lambda_p / nr.density.lambda_p - 1);
    EXPECT_LT(ds, prev_s);
    EXPECT_LT(dp, prev_p);
    prev_s = ds;
    prev_p = dp;
  }
  EXPECT_LT(prev_s, 0.05);
}

TEST(Nr, RegimeGuards) {
  const FluxParam flux = decompose_flux(0.3);
  const PairOut warm = solve_pair(10.0, 1.0, 0.5, 1.0);
  const NrLimit w = nr_limit(flux, ur_photon(10.0, 0.0), warm);
  EXPECT_EQ(w.warnings.size(), 1u);
  const PairOut hot = solve_pair(30.0, 1.0, 0.5, 1.0);
  try {
    nr_limit(flux, ur_photon(30.0, 0.0), hot);
    FAIL();
  } catch (const PhysicsError& e) {
    EXPECT_EQ(e.violation(), Violation::regime);
  }
}

TEST(Ur, CollinearAgreement) {
  for (double f : {0.1, 0.3, 0.7}) {
    const FluxParam flux = decompose_flux(f);
    const PairOut pair = ur_pair(1000.0, 0.7);
    const PhotonIn ph = ur_photon(1000.0, 0.7);
    const StructureParams sp = structure_params(pair.k_perp, pair.kp_perp, 1000.0, 0.7, 0.7, 0.7);
    const PolarizationDensity full = polarization_density(sp, pair, flux);
    const UrLimit ur = ur_limit(sp, pair, ph, flux);
    EXPECT_TRUE(ur.warnings.empty());
    EXPECT_NEAR(ur.sigma_minus / ur.sigma_plus, sp.a / sp.b, 1e-12);
    EXPECT_NEAR(full.lambda_s / ur.density.lambda_s, 1.0, 0.01) << f;
    EXPECT_NEAR(full.lambda_p / ur.density.lambda_p, 1.0, 0.01) << f;
  }
}

TEST(Ur, RegimeGuards) {
  const FluxParam flux = decompose_flux(0.3);
  {
    const PairOut pair = ur_pair(100.0, 0.7, 1.0);
    const StructureParams sp = structure_params(pair.k_perp, pair.kp_perp, 100.0, 0.7, 0.7, 0.7);
    EXPECT_EQ(ur_limit(sp, pair, ur_photon(100.0, 0.7), flux).warnings.size(), 1u);
  }
  {
    const PairOut pair = ur_pair(1000.0, 0.7);
    PairOut off = pair;
    off.phip_perp = 0.8;
    const StructureParams sp = structure_params(pair.k_perp, pair.kp_perp, 1000.0, 0.7, 0.8, 0.7);
    EXPECT_EQ(ur_limit(sp, off, ur_photon(1000.0, 0.7), flux).warnings.size(), 1u);
  }
  {
    const PairOut pair = solve_pair(10.0, 2.0, 0.5, 1.0);
    const StructureParams sp = structure_params(pair.k_perp, pair.kp_perp, 10.0, 0, 0, 0);
    EXPECT_THROW(ur_limit(sp, pair, ur_photon(10.0, 0.0), flux), PhysicsError);
  }
}
