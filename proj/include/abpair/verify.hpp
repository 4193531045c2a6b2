#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abpair/amplitude.hpp"
#include "abpair/specfun.hpp"

namespace abpair {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct IdentityReport {
  std::string identity_name;
  double max_abs_residual = 0;
  double max_rel_residual = 0;
  int samples = 0;
  bool passed = false;
  double tolerance = 0;
  // Diagnostics that do not enter the verdict (fitted phase, rates, ...).
  std::vector<std::pair<std::string, double>> extras;
  std::vector<std::string> notes;

  double extra(const std::string& key) const;  // NaN when absent
};

// int x J_mu(b1 x) J_nu(b2 x) J_lam(c x) dx with lam = mu + nu.
struct VanishingPoint {
  double mu, nu, lam, b1, b2, c;
};

// b1 = c sin(eta) cos(zeta), b2 = c cos(eta) sin(zeta), third order mu - nu.
struct ClosedPoint {
  double eta, zeta, mu, nu, c;
};

// 20 points: the (1, 2, 3; 0.3, 0.4, 1) case, a c = 1.001 (b1 + b2) stress
// point, the rest random.
std::vector<VanishingPoint> default_vanishing_grid(std::uint64_t seed);

// 20 points: eta = zeta = pi/6 with (0.7, 0.3), an integer-mu point, the rest
// random with (eta, zeta) in (0.1, 0.6)^2.
std::vector<ClosedPoint> default_closed_grid(std::uint64_t seed);

// Passes when every |I| < tol. Rejects points with c <= b1 + b2.
IdentityReport check_vanishing_integral(std::span<const VanishingPoint> grid,
                                        const QuadratureConfig& cfg = {},
                                        double tol = 1e-8);

// Reference value -(2 / (pi c^2)) sin(nu pi) a^mu b^nu D with
// a = sin(eta)/cos(zeta), b = sin(zeta)/cos(eta),
// D = 1 / (cos(eta + zeta) cos(eta - zeta)). The residual of the
// sin(mu pi) form is reported as an extra.
IdentityReport check_closed_integral(std::span<const ClosedPoint> grid,
                                     const QuadratureConfig& cfg = {},
                                     double tol = 1e-6);

// Quadrature of int exp(i q chi + i z cos chi) against 2 pi e^{-i q pi/2}
// J_{-q}(z) after fitting one global phase (reported as "fitted_phase").
IdentityReport check_phi_integral(int q_min, int q_max,
                                  std::span<const double> z_values,
                                  const QuadratureConfig& cfg = {},
                                  double tol = 1e-10);

struct KinematicPoint {
  double flux = 0.3;
  double kappa = 3.0;
  double k_perp = 0.8;
  double k3 = 0.2;
  double mass = 1.0;
  double phi_perp = 0.4;
  double phip_perp = 2.1;
  double phi_k = 1.0;
};

// Truncated T2 sector of G1 against its geometric closed form. The residual
// is the relative error at the last schedule entry; the fitted convergence
// rate must lie within rate_tol of max(a, b).
IdentityReport check_geometric_resummation(const KinematicPoint& point,
                                           std::span<const int> schedule,
                                           double tol = 1e-12,
                                           double rate_tol = 0.02);

// D from the structure functions against the trigonometric D on random
// (eta, zeta) with eta + zeta < pi/2.
IdentityReport check_structure_consistency(std::uint64_t seed, int samples = 100,
                                           double tol = 1e-12);

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  QuadratureConfig quad;
  double tolerance = 0;  // > 0 overrides every check's tolerance
  int jobs = 1;
};

// All five checks, in a fixed order.
std::vector<IdentityReport> run_verify_suite(const VerifyOptions& opt = {});

std::string report_json(const std::vector<IdentityReport>& reports);
std::string report_table(const std::vector<IdentityReport>& reports);

}  // namespace abpair
