// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "abpair/amplitude.hpp"
#include "abpair/cross_section.hpp"
#include "abpair/errors.hpp"
#include "abpair/kinematics.hpp"
#include "abpair/specfun.hpp"
#include "abpair/verify.hpp"
#include "points.hpp"

using namespace abpair;
using abpair::fixtures::random_point;
using abpair::fixtures::Sample;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double component_rel(const AmplitudeVector& ref, const AmplitudeVector& got) {
  const double scale = ref.norm();
  const cplx r[3] = {ref.d1, ref.d2, ref.dz};
  const cplx g[3] = {got.d1, got.d2, got.dz};
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    // Components below 1e-8 |d| are treated as zero and compared absolutely.
    if (std::abs(r[i]) > 1e-8 * scale) {
      worst = std::max(worst, std::abs(r[i] - g[i]) / std::abs(r[i]));
    } else {
      worst = std::max(worst, std::abs(r[i] - g[i]) / std::max(scale, 1e-300));
    }
  }
  return worst;
}

AmplitudeVector diff(const AmplitudeVector& a, const AmplitudeVector& b) {
  return {a.d1 - b.d1, a.d2 - b.d2, a.dz - b.dz};
}

constexpr std::uint64_t kSeed = kDefaultSeed;

// 1. delta = 0: amplitude and cross section vanish.
Outcome c1() {
  std::mt19937_64 rng(kSeed + 1);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    Sample s = random_point(rng, static_cast<double>(i % 7 - 3));
    s.photon.polarization = i % 2 ? Polarization::P : Polarization::S;
    const AmplitudeVector d = closed_form_amplitude(s.flux, s.photon, s.pair);
    const double x = differential_xsec(s.flux, s.photon, s.pair).value;
    worst = std::max({worst, d.norm(), std::abs(x)});
  }
  return {worst <= 1e-14, fmt("100 points, max |d|, |dsigma| = %.3g", worst)};
}

// 2. Closed form vs tier A oracle.
Outcome c2() {
  std::mt19937_64 rng(kSeed + 2);
  const double deltas[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  double worst = 0;
  int max_m = 0;
  for (int i = 0; i < 100; ++i) {
    const Sample s = random_point(rng, deltas[i % 5] + (i % 3) - 1);
    const AmplitudeVector c = closed_form_amplitude(s.flux, s.photon, s.pair);
    const OracleResult o = oracle_amplitude(s.flux, s.photon, s.pair, 0, OracleTier::A);
    worst = std::max(worst, component_rel(c, o.amplitude));
    max_m = std::max(max_m, o.m_max);
  }
  return {worst < 1e-10,
          fmt("100 points, max rel dev %.3g (m_max up to %.0f)", worst, max_m)};
}

// 3. Tier B (quadrature) vs tier A (analytic integrals) at equal m_max.
Outcome c3() {
  std::mt19937_64 rng(kSeed + 3);
  double worst = 0;
  OracleOptions opt;
  opt.jobs = 4;
  for (int i = 0; i < 10; ++i) {
    const Sample s = random_point(rng, 0.15 + 0.08 * i, 2.5, 5.0);
    const OracleResult a = oracle_amplitude(s.flux, s.photon, s.pair, 16, OracleTier::A);
    const OracleResult b = oracle_amplitude(s.flux, s.photon, s.pair, 16, OracleTier::B, opt);
    worst = std::max(worst, diff(a.amplitude, b.amplitude).norm() / a.amplitude.norm());
  }
  return {worst < 1e-6, fmt("10 points at m_max 16, max rel dev %.3g", worst)};
}

// 4. Vanishing triple-Bessel integral.
Outcome c4() {
  const auto grid = default_vanishing_grid(kSeed);
  const IdentityReport r = check_vanishing_integral(grid);
  return {r.passed, fmt("%.0f points incl. c = 1.001 (b1+b2), max |I| = %.3g",
                        r.samples, r.max_abs_residual)};
}

// 5. Closed-form triple-Bessel integral and the pi/6 structure values.
Outcome c5() {
  const auto grid = default_closed_grid(kSeed);
  const IdentityReport r = check_closed_integral(grid);
  const double a = r.extra("a_at_pi_6"), b = r.extra("b_at_pi_6"), D = r.extra("D_at_pi_6");
  const double inv = 1.0 / std::sqrt(3.0);
  const double trig = std::max({std::abs(a - inv) / inv, std::abs(b - inv) / inv,
                                std::abs(D - 2.0) / 2.0});
  return {r.passed && trig <= 1e-15,
          fmt("max rel residual %.3g, pi/6 values off by %.3g", r.max_rel_residual, trig)};
}

// 6. Angular integral against the Bessel reference.
Outcome c6() {
  const double z[] = {0.5, 2.0, 10.0};
  const IdentityReport r = check_phi_integral(-10, 10, z);
  return {r.passed, fmt("63 points, max rel residual %.3g, fitted phase %.3g",
                        r.max_rel_residual, r.extra("fitted_phase"))};
}

// 7. Sector selection: T1, T3, T4 of G1 and the forbidden full terms vanish.
Outcome c7() {
  const Sample s = abpair::fixtures::generic_point();
  const int M = 8;
  double g1a = 0, g1b = 0;
  for (long m = -M; m <= M; ++m) {
    for (long mp = -M; mp <= M; ++mp) {
      if (classify_term(m, mp) == TermClass::T2) continue;
      g1a = std::max(g1a, std::abs(g1_term(s.flux, s.photon, s.pair, m, mp, OracleTier::A)));
      if (std::abs(m) <= 4 && std::abs(mp) <= 4) {
        g1b = std::max(g1b, std::abs(g1_term(s.flux, s.photon, s.pair, m, mp, OracleTier::B)));
      }
    }
  }
  double fa = 0, fb = 0;
  OracleOptions opt;
  opt.jobs = 4;
  for (const auto& t : oracle_terms(s.flux, s.photon, s.pair, M, OracleTier::A)) {
    if (!selection_rule(t.m_bar, t.mp_bar)) fa = std::max(fa, t.value.norm());
  }
  for (const auto& t : oracle_terms(s.flux, s.photon, s.pair, 6, OracleTier::B, opt)) {
    if (!selection_rule(t.m_bar, t.mp_bar)) fb = std::max(fb, t.value.norm());
  }
  const bool pass = g1a == 0.0 && fa == 0.0 && g1b < 1e-8 && fb < 1e-8;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "tier A max %.3g (G1) %.3g (T1/T4); tier B max %.3g (G1) %.3g (T1/T4)",
                g1a, fa, g1b, fb);
  return {pass, buf};
}

// 8. Geometric resummation of the G1 T2 sector.
Outcome c8() {
  const int schedule[] = {5, 10, 20, 40};
  const IdentityReport r = check_geometric_resummation(KinematicPoint{}, schedule);
  return {r.passed, fmt("rel err at m=40 %.3g, rate %.4f vs max(a,b) %.4f",
                        r.max_rel_residual, r.extra("rate"), r.extra("max_ab"))};
}

// 9. Structure-function consistency.
Outcome c9() {
  const IdentityReport r = check_structure_consistency(kSeed, 100);
  return {r.passed, fmt("100 points, max rel residual %.3g", r.max_rel_residual)};
}

// 10. Non-relativistic limit.
Outcome c10() {
  const FluxParam flux = decompose_flux(0.3);
  std::vector<double> dev_s, dev_p, dev_ratio, d2;
  for (double e : {1e-2, 1e-3, 1e-4}) {
    const double kappa = 2.0 * (1.0 + e);
    const double pt = std::sqrt(0.25 * kappa * kappa - 1.0);
    PhotonIn ph;
    ph.kappa = kappa;
    ph.phi_k = 1.0;
    const PairOut pair = solve_pair(kappa, 0.6 * pt, 0.3 * pt, 1.0, 0.4, 2.1);
    const StructureParams sp = structure_params(pair.k_perp, pair.kp_perp, kappa,
                                                pair.phi_perp, pair.phip_perp, ph.phi_k);
    const PolarizationDensity full = polarization_density(sp, pair, flux);
    const AmplitudeVector d = closed_form_amplitude(flux, ph, pair);
    const NrLimit nr = nr_limit(flux, ph, pair);
    if (nr.amplitude.d2 != 0.0) return {false, "NR amplitude has d2 != 0"};
    dev_s.push_back(std::abs(full.lambda_s / nr.density.lambda_s - 1.0));
    dev_p.push_back(std::abs(full.lambda_p / nr.density.lambda_p - 1.0));
    const double rf = full.lambda_p / full.lambda_s / (pair.k3 * pair.k3);
    const double rn = nr.density.lambda_p / nr.density.lambda_s / (pair.k3 * pair.k3);
    dev_ratio.push_back(std::abs(rf / rn - 1.0));
    d2.push_back(std::abs(d.d2) / d.norm());
  }
  bool mono = true;
  for (std::size_t i = 1; i < dev_s.size(); ++i) {
    mono = mono && dev_s[i] < dev_s[i - 1] && dev_p[i] < dev_p[i - 1] &&
           dev_ratio[i] < dev_ratio[i - 1] && d2[i] < d2[i - 1];
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "dev_s %.3g > %.3g > %.3g, dev_p %.3g > %.3g > %.3g, |d2|/|d| %.3g at 1e-4",
                dev_s[0], dev_s[1], dev_s[2], dev_p[0], dev_p[1], dev_p[2], d2[2]);
  return {mono && d2.back() < 1e-3, buf};
}

// 11. Ultra-relativistic collinear limit at kappa = 1000 M.
Outcome c11() {
  const FluxParam flux = decompose_flux(0.3);
  const double kappa = 1000.0, phi = 0.7, k3 = 3.0;
  const double eps = 0.3 * kappa;
  PhotonIn ph;
  ph.kappa = kappa;
  ph.phi_k = phi;
  const PairOut pair =
      solve_pair(kappa, std::sqrt(eps * eps - k3 * k3 - 1.0), k3, 1.0, phi, phi);
  const StructureParams sp =
      structure_params(pair.k_perp, pair.kp_perp, kappa, phi, phi, phi);
  const PolarizationDensity full = polarization_density(sp, pair, flux);
  const UrLimit ur = ur_limit(sp, pair, ph, flux);
  const double ratio_full = std::abs(sp.sigma_minus / sp.sigma_plus);
  const double ratio_dev = std::abs(ratio_full / (sp.a / sp.b) - 1.0);
  const double ratio_ur = std::abs(ur.sigma_minus / ur.sigma_plus / (sp.a / sp.b) - 1.0);
  const double ds = std::abs(full.lambda_s / ur.density.lambda_s - 1.0);
  const double dp = std::abs(full.lambda_p / ur.density.lambda_p - 1.0);
  const bool pass = std::max(ratio_dev, ratio_ur) < 1e-3 && ds < 0.01 && dp < 0.01;
  return {pass, fmt("sigma ratio vs a/b off by %.3g, Lambda_s dev %.3g, Lambda_p dev %.3g",
                    std::max(ratio_dev, ratio_ur), ds, dp)};
}

// 12. Bessel recurrence and Wronskian.
Outcome c12() {
  double rec = 0, wr = 0;
  int n = 0;
  for (int i = 0; i <= 240; ++i) {
    const double nu = -30.0 + 0.25 * i + 0.0371;  // mostly non-integer orders
    for (int j = 0; j <= 60; ++j) {
      const double x = 0.01 * std::pow(1e4, j / 60.0);
      if (std::abs(nu) > 30.0) continue;
      const double jm = bessel_j(nu - 1, x), j0 = bessel_j(nu, x), jp = bessel_j(nu + 1, x);
      rec = std::max(rec, std::abs(jm + jp - 2.0 * nu / x * j0) / std::max(1.0, std::abs(j0)));
      const double lhs = j0 * bessel_j_prime(-nu, x) - bessel_j(-nu, x) * bessel_j_prime(nu, x);
      const double rhs = -2.0 * std::sin(nu * std::numbers::pi) / (std::numbers::pi * x);
      wr = std::max(wr, std::abs(lhs - rhs) / std::abs(rhs));
      ++n;
    }
  }
  return {rec < 1e-9 && wr < 1e-9,
          fmt("%.0f samples, recurrence %.3g, Wronskian %.3g", n, rec, wr)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget;  // seconds
  };
  const std::vector<Criterion> criteria = {
      {"delta=0 vanishing", c1, 1},
      {"closed form vs tier A", c2, 30},
      {"tier B vs tier A", c3, 120},
      {"vanishing triple integral", c4, 60},
      {"closed triple integral", c5, 60},
      {"angular integral", c6, 10},
      {"sector selection", c7, 30},
      {"geometric resummation", c8, 5},
      {"structure consistency", c9, 1},
      {"NR limit", c10, 10},
      {"UR limit", c11, 10},
      {"Bessel invariants", c12, 10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt <= criteria[i].budget;
    if (!o.pass || !in_time) ++failed;
    std::printf("criterion %2zu %-26s %s  %s (%.2fs of %.0fs)\n", i + 1, criteria[i].name,
                o.pass && in_time ? "PASS" : "FAIL", o.detail.c_str(), dt, criteria[i].budget);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
