#include "abpair/cross_section.hpp"

#include <cmath>
#include <numbers>

#include "abpair/errors.hpp"

namespace abpair {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// Squared projections can come out as -1e-30 through cancellation.
double clamp_roundoff(double v, double scale) {
  if (v < 0.0 && v > -1e-12 * scale) return 0.0;
  return v;
}

double angle_gap(double x, double y) {
  const double d = std::remainder(x - y, 2.0 * kPi);
  return std::abs(d);
}

}  // namespace

PolarizationDensity polarization_density(const StructureParams& sp,
                                         const PairOut& pair,
                                         const FluxParam& flux) {
  const double s = sin_pi(flux.delta);
  if (s == 0.0) return {};
  const double kappa = pair.eps + pair.eps_bar;
  const double d = flux.delta, ab = sp.a * sp.b;
  const double pre =
      sp.D * sp.D * s * s / std::pow(kappa, 4) / (pair.eps * pair.eps_bar);
  const double sq_plus = std::norm(sp.mode_plus);
  const double sq_minus = std::norm(sp.mode_minus);
  const double w_plus = std::pow(ab, 2.0 * d) * sq_plus;
  const double w_minus = std::pow(ab, -2.0 * d) * sq_minus;
  const double cross =
      2.0 * std::real(std::exp(kI * (2.0 * kPi * d)) * sp.mode_plus *
                      std::conj(sp.mode_minus));
  const double kz = pair.k3 - pair.kp3;
  const double scale = w_plus + w_minus;
  PolarizationDensity out;
  out.lambda_s = pre * sp.A * sp.A * clamp_roundoff(scale + cross, scale);
  out.lambda_p = pre * 4.0 * kz * kz * clamp_roundoff(scale - cross, scale);
  return out;
}

PolarizationDensity projected_density(const AmplitudeVector& d,
                                      const PairOut& pair) {
  const double e = pair.eps * pair.eps_bar;
  return {std::norm(d.d1) / e, std::norm(d.dz) / e};
}

double xsec_from_density(double lambda, const PairOut& pair, double kappa,
                         double alpha) {
  return alpha / kappa / (8.0 * kPi * kPi * kPi) * pair.k_perp * pair.kp_perp *
         lambda;
}

XsecPoint differential_xsec(const FluxParam& flux, const PhotonIn& photon,
                            const PairOut& pair, double alpha) {
  if (!(alpha > 0.0)) {
    throw PhysicsError(Violation::parameter_domain, "alpha must be > 0");
  }
  require_closed_form_kinematics(pair, photon);
  const StructureParams sp =
      structure_params(pair.k_perp, pair.kp_perp, photon.kappa, pair.phi_perp,
                       pair.phip_perp, photon.phi_k);
  const PolarizationDensity rho = polarization_density(sp, pair, flux);
  XsecPoint out;
  out.polarization = photon.polarization;
  out.kinematics = pair;
  out.photon = photon;
  const double lambda =
      photon.polarization == Polarization::S ? rho.lambda_s : rho.lambda_p;
  out.value = xsec_from_density(lambda, pair, photon.kappa, alpha);
  return out;
}

NrLimit nr_limit(const FluxParam& flux, const PhotonIn& photon,
                 const PairOut& pair) {
  require_closed_form_kinematics(pair, photon);
  const double M = pair.mass, kappa = photon.kappa;
  NrLimit out;
  if (kappa > 21.0 * M) {
    throw PhysicsError(Violation::regime,
                       "non-relativistic limit: kappa far above threshold "
                       "(kappa > 21M)");
  }
  if (kappa > 2.1 * M) {
    out.warnings.push_back(
        "non-relativistic limit used more than 5% above threshold");
  }
  const double s = sin_pi(flux.delta);
  if (s == 0.0) return out;
  const double X = pair.k_perp * pair.kp_perp / (4.0 * M * M);
  const double dphi = pair.phip_perp - pair.phi_perp;
  const cplx phase = std::exp(kI * (static_cast<double>(flux.int_part) * dphi));
  const cplx ed = std::exp(kI * (kPi * flux.delta));
  const cplx first = ed * std::pow(X, flux.delta);
  const cplx second = std::pow(X, 1.0 - flux.delta) * std::exp(kI * dphi) / ed;
  const cplx xp = first + second, xm = first - second;
  out.amplitude.d1 = kI / M * s * phase * xp;
  out.amplitude.d2 = 0.0;
  out.amplitude.dz = -(pair.k3 - pair.kp3) / (2.0 * M * M) * s * phase * xm;
  // eps eps_bar ~ M^2 at threshold
  out.density.lambda_s = std::norm(out.amplitude.d1) / (M * M);
  out.density.lambda_p = std::norm(out.amplitude.dz) / (M * M);
  return out;
}

UrLimit ur_limit(const StructureParams& sp, const PairOut& pair,
                 const PhotonIn& photon, const FluxParam& flux) {
  const double M = pair.mass, kappa = photon.kappa;
  UrLimit out;
  if (kappa < 20.0 * M) {
    throw PhysicsError(Violation::regime,
                       "ultrarelativistic limit: kappa < 20M");
  }
  if (kappa < 200.0 * M) {
    out.warnings.push_back("ultrarelativistic limit used below kappa = 200M");
  }
  const double gap = std::max({angle_gap(pair.phi_perp, photon.phi_k),
                               angle_gap(pair.phip_perp, photon.phi_k),
                               angle_gap(pair.phi_perp, pair.phip_perp)});
  if (gap > 0.01) {
    out.warnings.push_back(
        "ultrarelativistic limit assumes collinear azimuths");
  }
  const double a = sp.a, b = sp.b, d = flux.delta;
  out.sigma_plus = b / ((1.0 - b) * (1.0 - a));
  out.sigma_minus = a / b * out.sigma_plus;
  const double s = sin_pi(d);
  if (s == 0.0) return out;
  const double ab = a * b, r = a / b;
  const double k_tot = std::hypot(pair.k_perp, pair.k3);
  const double kp_tot = std::hypot(pair.kp_perp, pair.kp3);
  const double pre = sp.D * sp.D * s * s / (k_tot * kp_tot * std::pow(kappa, 4)) *
                     out.sigma_plus * out.sigma_plus;
  const double squares = std::pow(ab, 2.0 * d) + r * r * std::pow(ab, -2.0 * d);
  const double cross = 2.0 * r * cos_pi(2.0 * d);
  const double kz = pair.k3 - pair.kp3;
  out.density.lambda_s = pre * sp.A * sp.A * (squares + cross);
  out.density.lambda_p = pre * 4.0 * kz * kz * (squares - cross);
  return out;
}

}  // namespace abpair
