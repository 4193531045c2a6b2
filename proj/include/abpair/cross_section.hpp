#pragma once

#include <string>
#include <vector>

#include "abpair/amplitude.hpp"
#include "abpair/kinematics.hpp"

namespace abpair {

inline constexpr double kFineStructure = 1.0 / 137.035999;

// L^4 Lambda for s and p polarization, i.e. |d_red . e|^2 / (eps eps_bar).
struct PolarizationDensity {
  double lambda_s = 0;
  double lambda_p = 0;
};

// From the structure functions (cross-term form).
PolarizationDensity polarization_density(const StructureParams& sp,
                                         const PairOut& pair,
                                         const FluxParam& flux);

// Direct projection of an amplitude: s along e1, p along e_z.
PolarizationDensity projected_density(const AmplitudeVector& d,
                                      const PairOut& pair);

struct XsecPoint {
  double value = 0;  // d sigma / (dk_perp dphi_perp dkp_perp dphip_perp dkp3)
  Polarization polarization = Polarization::S;
  PairOut kinematics;
  PhotonIn photon;
};

XsecPoint differential_xsec(const FluxParam& flux, const PhotonIn& photon,
                            const PairOut& pair, double alpha = kFineStructure);

// (alpha / kappa) (2 pi)^-3 k_perp kp_perp lambda
double xsec_from_density(double lambda, const PairOut& pair, double kappa,
                         double alpha = kFineStructure);

struct NrLimit {
  PolarizationDensity density;
  AmplitudeVector amplitude;
  std::vector<std::string> warnings;
};

// Near threshold: a = k/kappa, b = k'/kappa, D = 1, A = -2 kappa, B = 0 and
// kappa = 2M. Warns for 2.1M < kappa <= 21M, throws PhysicsError(regime)
// beyond.
NrLimit nr_limit(const FluxParam& flux, const PhotonIn& photon,
                 const PairOut& pair);

struct UrLimit {
  PolarizationDensity density;
  double sigma_plus = 0;
  double sigma_minus = 0;
  std::vector<std::string> warnings;
};

// Forward, collinear emission with eps ~ |k|, eps_bar ~ |k'|. Warns for
// 20M <= kappa < 200M or when the azimuths differ by more than 0.01 rad,
// throws PhysicsError(regime) for kappa < 20M.
UrLimit ur_limit(const StructureParams& sp, const PairOut& pair,
                 const PhotonIn& photon, const FluxParam& flux);

}  // namespace abpair
