#pragma once

#include <complex>
#include <vector>

#include "abpair/kinematics.hpp"
#include "abpair/specfun.hpp"

namespace abpair {

using cplx = std::complex<double>;

// Building blocks of the closed-form amplitude.
//
// sigma_plus / sigma_minus are the two angular sums in the form used by the
// limiting expressions; mode_plus / mode_minus are the double geometric sums
// of the surviving partial-wave sectors,
//   mode_plus  = 1 / ((1 - a e^{iu})(1 - b e^{-iv}))
//   mode_minus = ab e^{-iu} e^{iv} / ((1 - a e^{-iu})(1 - b e^{iv}))
// with u = phi_perp - phi_k, v = phip_perp - phi_k. They are related by
//   sigma_plus = b e^{-iv} mode_plus,  sigma_minus = mode_minus / (b e^{iv}).
struct StructureParams {
  double a = 0;
  double b = 0;
  double D = 0;
  double A = 0;  // k(a - 1/a) + k'(b - 1/b) = -2 kappa / D
  double B = 0;  // k(a + 1/a) - k'(b + 1/b) = 2 (k^2 - k'^2) / kappa
  cplx sigma_plus;
  cplx sigma_minus;
  cplx mode_plus;
  cplx mode_minus;
};

// Throws PhysicsError(momentum_excess) unless kappa_perp > k_perp + kp_perp.
StructureParams structure_params(double k_perp, double kp_perp,
                                 double kappa_perp, double phi_perp,
                                 double phip_perp, double phi_k);

// Reduced amplitude d * L^2 sqrt(eps eps_bar). d1 lies along
// (-sin phi_k, cos phi_k, 0), d2 along the in-plane photon direction
// (cos phi_k, sin phi_k, 0), dz along the flux line.
struct AmplitudeVector {
  cplx d1;
  cplx d2;
  cplx dz;

  double norm() const;
  AmplitudeVector& operator+=(const AmplitudeVector& o);
};

AmplitudeVector closed_form_amplitude(const FluxParam& flux,
                                      const PhotonIn& photon,
                                      const PairOut& pair);

//---------------------------------------------------------------------------//
// Partial-wave oracle
//---------------------------------------------------------------------------//

// Sectors by sign of (m_bar, mp_bar): T1 (-,-), T2 (-,+), T3 (+,-), T4 (+,+),
// where "+" includes zero.
enum class TermClass { T1, T2, T3, T4 };

TermClass classify_term(long m_bar, long mp_bar);

// True iff the term can contribute: exactly one of m_bar, mp_bar negative.
bool selection_rule(long m_bar, long mp_bar);

// Labels: m_bar = m + [f] gives the particle order |m_bar + delta|;
// mp_bar = m' - [f] - 1 gives the antiparticle order |mp_bar + 1 - delta|,
// so that sgn of the antiparticle order is + exactly when mp_bar >= 0.
struct PartialWaveTerm {
  long m_bar = 0;
  long mp_bar = 0;
  cplx c_m;
  cplx c_mp;
  TermClass term_class = TermClass::T1;
  AmplitudeVector value;
};

enum class OracleTier { A, B };

struct OracleOptions {
  QuadratureConfig quad;
  int jobs = 1;
  // When > 0, throw NumericalError if the truncation bound exceeds
  // tolerance * |d|.
  double tolerance = 0;
};

struct OracleResult {
  AmplitudeVector amplitude;
  double truncation_bound = 0;
  int m_max = 0;
};

// Smallest m with max(a,b)^m < 1e-14 (1 - max(a,b)).
int default_m_max(const StructureParams& sp);

// Upper bound on |d(all m) - d(|m_bar|, |mp_bar| <= m_max)|.
double truncation_bound(const FluxParam& flux, const PhotonIn& photon,
                        const PairOut& pair, int m_max);

// Every term with m_bar, mp_bar in [-m_max, m_max], row-major in m_bar.
std::vector<PartialWaveTerm> oracle_terms(const FluxParam& flux,
                                          const PhotonIn& photon,
                                          const PairOut& pair, int m_max,
                                          OracleTier tier,
                                          const OracleOptions& opt = {});

// m_max <= 0 selects default_m_max.
OracleResult oracle_amplitude(const FluxParam& flux, const PhotonIn& photon,
                              const PairOut& pair, int m_max, OracleTier tier,
                              const OracleOptions& opt = {});

//---------------------------------------------------------------------------//
// The G1 sample sum
//   sum c_m^* c_m' e^{-iq(phi_k - pi/2)} [sgn - 1] W(|m~|-1, |m~'|, q+1)
// used to check the sector analysis and the geometric resummation.
//---------------------------------------------------------------------------//

cplx g1_term(const FluxParam& flux, const PhotonIn& photon,
             const PairOut& pair, long m_bar, long mp_bar, OracleTier tier,
             const QuadratureConfig& quad = {});

// T2 sector truncated to m_bar in [-m_max, -1], mp_bar in [0, m_max]
// (tier A values).
cplx g1_t2_partial_sum(const FluxParam& flux, const PhotonIn& photon,
                       const PairOut& pair, int m_max);

cplx g1_t2_closed_form(const FluxParam& flux, const PhotonIn& photon,
                       const PairOut& pair);

}  // namespace abpair
