#include "abpair/kinematics.hpp"

#include <cmath>
#include <string>

#include "abpair/errors.hpp"

namespace abpair {

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::below_threshold: return "below threshold";
    case Violation::no_pair_solution: return "no pair solution";
    case Violation::momentum_excess: return "momentum excess";
    case Violation::normal_incidence: return "normal incidence";
    case Violation::z_momentum: return "z momentum";
    case Violation::parameter_domain: return "parameter domain";
    case Violation::regime: return "regime";
  }
  return "unknown";
}

FluxParam decompose_flux(double f) {
  if (!std::isfinite(f)) {
    throw PhysicsError(Violation::parameter_domain, "flux must be finite");
  }
  FluxParam out;
  out.f = f;
  const double fl = std::floor(f);
  out.int_part = static_cast<long>(fl);
  out.delta = f - fl;
  if (out.delta >= 1.0) {  // f just below an integer, rounded up
    out.delta = 0.0;
    out.int_part += 1;
  }
  return out;
}

PairOut solve_pair(double kappa, double k_perp, double k3, double mass,
                   double phi_perp, double phip_perp) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw PhysicsError(Violation::parameter_domain, "mass must be > 0");
  }
  if (!(k_perp > 0.0) || !std::isfinite(k_perp) || !std::isfinite(k3)) {
    throw PhysicsError(Violation::parameter_domain,
                       "particle momentum: k_perp must be > 0 and finite");
  }
  if (!(kappa > 2.0 * mass)) {
    throw PhysicsError(Violation::below_threshold,
                       "below threshold: kappa = " + std::to_string(kappa) +
                           " <= 2M = " + std::to_string(2.0 * mass));
  }
  PairOut p;
  p.mass = mass;
  p.k_perp = k_perp;
  p.k3 = k3;
  p.kp3 = -k3;
  p.phi_perp = phi_perp;
  p.phip_perp = phip_perp;
  p.eps = std::sqrt(k_perp * k_perp + k3 * k3 + mass * mass);
  const double rest = kappa - p.eps;
  if (!(rest > mass)) {
    throw PhysicsError(Violation::no_pair_solution,
                       "no pair solution: particle energy leaves no room for "
                       "the antiparticle");
  }
  // (rest - m)(rest + m) - k3^2 avoids one cancellation near the boundary.
  const double radicand = (rest - mass) * (rest + mass) - k3 * k3;
  if (!(radicand > 0.0)) {
    throw PhysicsError(Violation::no_pair_solution,
                       "no pair solution: antiparticle transverse momentum "
                       "would not be real and positive");
  }
  p.kp_perp = std::sqrt(radicand);
  p.eps_bar = std::sqrt(p.kp_perp * p.kp_perp + k3 * k3 + mass * mass);
  return p;
}

bool momentum_excess_ok(const PairOut& pair, const PhotonIn& photon) {
  return photon.kappa * std::sin(photon.theta_k) > pair.k_perp + pair.kp_perp;
}

void require_closed_form_kinematics(const PairOut& pair,
                                    const PhotonIn& photon) {
  if (!(photon.kappa > 0.0)) {
    throw PhysicsError(Violation::parameter_domain, "kappa must be > 0");
  }
  if (std::abs(photon.theta_k - std::numbers::pi / 2) > 1e-12) {
    throw PhysicsError(Violation::normal_incidence,
                       "normal incidence required: theta_k must be pi/2");
  }
  const double scale = std::max(1.0, std::abs(pair.k3));
  if (std::abs(pair.k3 + pair.kp3) > 1e-12 * scale) {
    throw PhysicsError(Violation::z_momentum, "z momenta must satisfy kp3 = -k3");
  }
  if (!(pair.k_perp > 0.0) || !(pair.kp_perp > 0.0) || !(pair.mass > 0.0)) {
    throw PhysicsError(Violation::parameter_domain,
                       "transverse momenta and mass must be > 0");
  }
  if (std::abs(pair.eps + pair.eps_bar - photon.kappa) > 1e-10 * photon.kappa) {
    throw PhysicsError(Violation::no_pair_solution,
                       "energy conservation eps + eps_bar = kappa violated");
  }
  if (!momentum_excess_ok(pair, photon)) {
    throw PhysicsError(Violation::momentum_excess,
                       "momentum excess kappa_perp > k_perp + kp_perp violated");
  }
}

}  // namespace abpair
