#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "abpair/specfun.hpp"

namespace abpair {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIntegerTol = 1e-12;
constexpr double kBig = 1e250;
constexpr double kSmall = 1e-250;

bool near_integer(double nu, double& n) {
  const double r = std::round(nu);
  if (std::abs(nu - r) < kIntegerTol) {
    n = r;
    return true;
  }
  return false;
}

void check_arguments(double nu, double x) {
  if (!std::isfinite(nu) || std::abs(nu) > kMaxBesselOrder) {
    throw std::invalid_argument("bessel_j: order " + std::to_string(nu) +
                                " outside |nu| <= 200");
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("bessel_j: argument must be finite and >= 0");
  }
}

bool series_regime(double nu, double x) {
  return x <= 8.0 || x * x <= 4.0 * (nu + 1.0);
}

bool asymptotic_regime(double nu, double x) {
  return x >= std::max(30.0, 0.5 * nu * nu);
}

// Ascending series, nu >= 0, x > 0.
double series_j(double nu, double x) {
  const double h = 0.5 * x;
  double term;
  if (nu < 150.0) {
    term = std::pow(h, nu) / std::tgamma(nu + 1.0);
  } else {
    term = std::exp(nu * std::log(h) - std::lgamma(nu + 1.0));
  }
  if (term == 0.0) return 0.0;
  double sum = term;
  const double h2 = h * h;
  for (int k = 1; k < 1000; ++k) {
    term *= -h2 / (k * (k + nu));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Hankel expansion, valid for x >= max(30, nu^2/2).
double asymptotic_j(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0, term = 1.0;
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * x);
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (std::abs(term) < 1e-17) break;
  }
  const double t = 0.5 * nu + 0.25;
  const double cx = std::cos(x), sx = std::sin(x);
  const double ct = cos_pi(t), st = sin_pi(t);
  const double cw = cx * ct + sx * st;  // cos(x - t pi)
  const double sw = sx * ct - cx * st;  // sin(x - t pi)
  return std::sqrt(2.0 / (kPi * x)) * (p * cw - q * sw);
}

int miller_start(double nu_top, double x) {
  return static_cast<int>(
      std::ceil(std::max(nu_top, x) + 30.0 + 10.0 * std::cbrt(x)));
}

// Backward recurrence for orders nu0 + k, nu0 in [0, 1). Writes the
// normalized values for k in [lo, hi) to out. Normalization uses
//   (x/2)^nu0 = sum_l (nu0 + 2l) Gamma(nu0 + l) / l! * J_{nu0 + 2l}(x).
void miller_core(double nu0, double x, int lo, int hi, double* out) {
  const int top = std::max(hi + 1, miller_start(nu0 + hi, x));
  int gl = top / 2;
  double g = std::exp(std::lgamma(nu0 + gl) - std::lgamma(gl + 1.0));
  double jp = 0.0, j = 1.0, s = 0.0;
  for (int k = top; k >= 0; --k) {
    if (k >= lo && k < hi) out[k - lo] = j;
    if (k % 2 == 0) {
      const int l = k / 2;
      if (l == 0) {
        s += std::tgamma(nu0 + 1.0) * j;
      } else {
        while (gl > l) {
          g *= gl / (nu0 + gl - 1.0);
          --gl;
        }
        s += (nu0 + 2.0 * l) * g * j;
      }
    }
    if (k == 0) break;
    const double jm = 2.0 * (nu0 + k) / x * j - jp;
    jp = j;
    j = jm;
    if (std::abs(j) > kBig) {
      j *= kSmall;
      jp *= kSmall;
      s *= kSmall;
      for (int i = std::max(k, lo); i < hi; ++i) out[i - lo] *= kSmall;
    }
  }
  const double norm = std::pow(0.5 * x, nu0) / s;
  for (int i = 0; i < hi - lo; ++i) out[i] *= norm;
}

// nu >= 0, x > 0
double positive_order_j(double nu, double x) {
  if (series_regime(nu, x)) return series_j(nu, x);
  if (asymptotic_regime(nu, x)) return asymptotic_j(nu, x);
  const double n = std::floor(nu);
  double value;
  const int k = static_cast<int>(n);
  miller_core(nu - n, x, k, k + 1, &value);
  return value;
}

// Negative non-integer order: step down from the pair (nu0, nu0 + 1) with
// nu0 in (0, 1). Recurrence toward negative orders follows the dominant
// solution and is stable.
double negative_order_j(double nu, double x) {
  if (x == 0.0) {
    return std::copysign(std::numeric_limits<double>::infinity(),
                         std::tgamma(nu + 1.0));
  }
  const int steps = static_cast<int>(std::ceil(-nu));
  const double nu0 = nu + steps;
  double hi = positive_order_j(nu0 + 1.0, x);
  double cur = positive_order_j(nu0, x);
  double order = nu0;
  for (int i = 0; i < steps; ++i) {
    const double lower = 2.0 * order / x * cur - hi;
    hi = cur;
    cur = lower;
    order -= 1.0;
  }
  return cur;
}

double bessel_j_unchecked(double nu, double x) {
  double n;
  if (near_integer(nu, n)) {
    const double an = std::abs(n);
    if (x == 0.0) return an == 0.0 ? 1.0 : 0.0;
    const double v = positive_order_j(an, x);
    const bool flip = n < 0 && std::fmod(an, 2.0) == 1.0;
    return flip ? -v : v;
  }
  if (nu > 0.0) {
    if (x == 0.0) return 0.0;
    return positive_order_j(nu, x);
  }
  return negative_order_j(nu, x);
}

}  // namespace

double sin_pi(double t) {
  double r = std::fmod(t, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  if (r == 0.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double t) {
  double r = std::fmod(std::abs(t), 2.0);
  if (r > 1.0) r = 2.0 - r;
  return sin_pi(0.5 - r);
}

double bessel_j(double nu, double x) {
  check_arguments(nu, x);
  return bessel_j_unchecked(nu, x);
}

double bessel_j_prime(double nu, double x) {
  check_arguments(nu, x);
  return 0.5 * (bessel_j_unchecked(nu - 1.0, x) -
                bessel_j_unchecked(nu + 1.0, x));
}

void bessel_j_sequence(double nu0, double x, std::span<double> out) {
  if (out.empty()) return;
  const double top = nu0 + static_cast<double>(out.size() - 1);
  if (!(nu0 > -1.0) || top > kMaxBesselOrder + 2.0) {
    throw std::invalid_argument("bessel_j_sequence: orders out of range");
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("bessel_j_sequence: bad argument");
  }
  const std::size_t n = out.size();
  if (x == 0.0 || x < 1e-40) {
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = bessel_j_unchecked(nu0 + static_cast<double>(k), x);
    }
    return;
  }
  if (nu0 < 0.0) {
    std::vector<double> shifted(n + 1);
    bessel_j_sequence(nu0 + 1.0, x, shifted);
    out[0] = 2.0 * (nu0 + 1.0) / x * shifted[0] - shifted[1];
    for (std::size_t k = 1; k < n; ++k) out[k] = shifted[k - 1];
    return;
  }
  double whole = std::floor(nu0);
  double frac = nu0 - whole;
  double ni;
  if (near_integer(nu0, ni)) {
    whole = ni;
    frac = 0.0;
  }
  if (top < x && asymptotic_regime(nu0 + 1.0, x)) {
    // Forward recurrence is stable below the turning point.
    double a = asymptotic_j(nu0, x);
    out[0] = a;
    if (n == 1) return;
    double b = asymptotic_j(nu0 + 1.0, x);
    out[1] = b;
    for (std::size_t k = 2; k < n; ++k) {
      const double order = nu0 + static_cast<double>(k - 1);
      const double c = 2.0 * order / x * b - a;
      out[k] = c;
      a = b;
      b = c;
    }
    return;
  }
  const int lo = static_cast<int>(whole);
  miller_core(frac, x, lo, lo + static_cast<int>(n), out.data());
}

}  // namespace abpair
