#pragma once

#include <numbers>

namespace abpair {

// Flux in units of the flux quantum, split as f = int_part + delta.
struct FluxParam {
  double f = 0;
  long int_part = 0;
  double delta = 0;  // in [0, 1)
};

FluxParam decompose_flux(double f);

enum class Polarization { S, P };

struct PhotonIn {
  double kappa = 0;  // momentum magnitude (natural units, hbar = c = 1)
  double theta_k = std::numbers::pi / 2;
  double phi_k = 0;
  Polarization polarization = Polarization::S;
};

// Created pair. Unprimed quantities belong to the particle, primed ones
// (kp_*, phip_perp, eps_bar) to the antiparticle.
struct PairOut {
  double k_perp = 0;
  double phi_perp = 0;
  double k3 = 0;
  double kp_perp = 0;
  double phip_perp = 0;
  double kp3 = 0;
  double eps = 0;
  double eps_bar = 0;
  double mass = 1;
};

// Fixes the antiparticle from energy conservation eps + eps_bar = kappa and
// kp3 = -k3. Throws PhysicsError (below_threshold, no_pair_solution,
// parameter_domain).
PairOut solve_pair(double kappa, double k_perp, double k3, double mass,
                   double phi_perp = 0, double phip_perp = 0);

// kappa sin(theta_k) > k_perp + kp_perp
bool momentum_excess_ok(const PairOut& pair, const PhotonIn& photon);

// Throws PhysicsError naming the first violated condition among: positive
// photon momentum, normal incidence, kp3 = -k3, energy conservation and the
// momentum excess.
void require_closed_form_kinematics(const PairOut& pair,
                                    const PhotonIn& photon);

}  // namespace abpair
