#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "abpair/kinematics.hpp"

namespace abpair::fixtures {

struct Sample {
  FluxParam flux;
  PhotonIn photon;
  PairOut pair;
};

// Random on-shell point at normal incidence with kappa in [kmin, kmax] M.
inline Sample random_point(std::mt19937_64& rng, double flux, double kmin = 2.5,
                           double kmax = 8.0, double mass = 1.0) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  while (true) {
    const double kappa = mass * (kmin + (kmax - kmin) * U(rng));
    const double eps = mass + (0.1 + 0.8 * U(rng)) * (kappa - 2.0 * mass);
    const double p = std::sqrt(eps * eps - mass * mass);
    const double k3 = (1.4 * U(rng) - 0.7) * p;
    const double k_perp = std::sqrt(p * p - k3 * k3);
    const double eps_bar = kappa - eps;
    if (eps_bar * eps_bar - mass * mass - k3 * k3 <= 1e-3 * mass * mass) continue;
    if (k_perp < 1e-3 * mass) continue;
    Sample s;
    s.flux = decompose_flux(flux);
    s.photon.kappa = kappa;
    s.photon.phi_k = two_pi * U(rng);
    s.pair = solve_pair(kappa, k_perp, k3, mass, two_pi * U(rng), two_pi * U(rng));
    return s;
  }
}

// The generic point used throughout the tests.
inline Sample generic_point(double flux = 0.3) {
  Sample s;
  s.flux = decompose_flux(flux);
  s.photon.kappa = 3.0;
  s.photon.phi_k = 1.0;
  s.pair = solve_pair(3.0, 0.8, 0.2, 1.0, 0.4, 2.1);
  return s;
}

}  // namespace abpair::fixtures
