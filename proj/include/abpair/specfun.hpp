#pragma once

#include <complex>
#include <span>
#include <vector>

namespace abpair {

inline constexpr double kMaxBesselOrder = 200.0;

// How the oscillatory tail of a triple-Bessel integral beyond X0 is handled.
//   asymptotic: Hankel expansion of each factor, integrated term by term in
//               closed form (generalized exponential integral).
//   damped:     multiply by exp(-eps (x - X0)) for each eps in the damping
//               sequence and extrapolate eps -> 0 with Neville's scheme.
enum class TailMethod { asymptotic, damped };

struct QuadratureConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-8;
  int max_subdivisions = 20000;
  std::vector<double> damping_sequence{0.1, 0.05, 0.025, 0.0125};
  TailMethod tail = TailMethod::asymptotic;

  // Throws std::invalid_argument when an invariant does not hold.
  void validate() const;
};

//---------------------------------------------------------------------------//
// Bessel functions of the first kind, real order |nu| <= 200, real x >= 0.
//---------------------------------------------------------------------------//

double bessel_j(double nu, double x);

// J'_nu(x) from the three-term recurrence.
double bessel_j_prime(double nu, double x);

// out[k] = J_{nu0 + k}(x) for k = 0 .. out.size()-1; requires nu0 > -1.
void bessel_j_sequence(double nu0, double x, std::span<double> out);

// sin(pi t), cos(pi t) with exact zeros at integers and half-integers.
double sin_pi(double t);
double cos_pi(double t);

//---------------------------------------------------------------------------//
// Integrals
//---------------------------------------------------------------------------//

// Direct quadrature of  int_{-pi}^{pi} exp(i q chi + i z cos chi) dchi.
std::complex<double> phi_integral(double q, double z,
                                  const QuadratureConfig& cfg = {});

struct TripleIntegral {
  double value = 0;
  double error = 0;  // estimated absolute error
  double x0 = 0;     // split point between panel quadrature and tail
  double tail = 0;   // contribution from [x0, inf)
};

// int_0^inf x J_mu(b1 x) J_nu(b2 x) J_lam(c x) dx  for c > b1 + b2.
TripleIntegral triple_bessel_integral_ex(double mu, double nu, double lam,
                                         double b1, double b2, double c,
                                         const QuadratureConfig& cfg = {});

double triple_bessel_integral(double mu, double nu, double lam, double b1,
                              double b2, double c,
                              const QuadratureConfig& cfg = {});

//---------------------------------------------------------------------------//
// Many triple-Bessel integrals with shared arguments (b1, b2, c).
//
// Bessel values are tabulated once per distinct order on a common node set,
// so each integral costs a dot product plus its tail.
//---------------------------------------------------------------------------//
class TripleBesselBatch {
 public:
  struct Orders {
    double mu, nu, lam;
  };

  TripleBesselBatch(double b1, double b2, double c,
                    const QuadratureConfig& cfg = {});

  // Evaluates all requests; results come back in request order. The work is
  // split over `jobs` threads, the result does not depend on it.
  std::vector<double> evaluate(std::span<const Orders> requests,
                               int jobs = 1) const;

 private:
  double b_[3];
  QuadratureConfig cfg_;
};

}  // namespace abpair
