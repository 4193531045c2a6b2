#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>

#include "abpair/errors.hpp"
#include "abpair/specfun.hpp"

namespace abpair {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

//---------------------------------------------------------------------------//
// Fixed rules
//---------------------------------------------------------------------------//

struct GaussLegendre {
  static constexpr int n = 20;
  std::array<double, n> x{}, w{};

  GaussLegendre() {
    for (int i = 0; i < n; ++i) {
      double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule;
  return rule;
}

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  cplx value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment kronrod15(F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const cplx fc = f(c);
  cplx k = fc * kWgk[7];
  cplx g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const cplx f1 = f(c - h * kXgk[j]);
    const cplx f2 = f(c + h * kXgk[j]);
    k += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) g += kWg[j / 2] * (f1 + f2);
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

template <class F>
cplx adaptive_kronrod(F f, double a, double b, const QuadratureConfig& cfg) {
  std::priority_queue<Segment> queue;
  Segment first = kronrod15(f, a, b);
  cplx total = first.value;
  double error = first.error;
  queue.push(first);
  int count = 1;
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (count >= cfg.max_subdivisions) {
      throw NumericalError("adaptive quadrature did not converge within " +
                           std::to_string(cfg.max_subdivisions) +
                           " subdivisions");
    }
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = kronrod15(f, worst.a, mid);
    const Segment right = kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++count;
  }
  return total;
}

//---------------------------------------------------------------------------//
// Generalized exponential integral E_s(z) for real s > 0 and z = -i y.
//---------------------------------------------------------------------------//
cplx expint_imag(double s, double y) {
  const cplx z(0.0, -y);
  if (std::abs(y) >= 2.0) {
    // Modified Lentz evaluation of the continued fraction.
    const double tiny = 1e-300;
    cplx b = z + s;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < 100000; ++i) {
      const double an = -i * (s - 1.0 + i);
      b += 2.0;
      d = 1.0 / (an * d + b);
      c = b + an / c;
      const cplx del = c * d;
      h *= del;
      if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-z);
    }
    throw NumericalError("exponential integral continued fraction diverged");
  }
  // Series, s not an integer.
  cplx sum = 0.0;
  cplx term = 1.0;  // (-z)^k / k!
  for (int k = 0; k < 200; ++k) {
    if (k > 0) term *= -z / static_cast<double>(k);
    const cplx add = term / (1.0 - s + k);
    sum += add;
    if (k > 2 && std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return std::tgamma(1.0 - s) * std::pow(z, s - 1.0) - sum;
}

// int_{x0}^inf x^{-s} e^{i w x} dx, w != 0.
cplx power_exp_tail(double s, double w, double x0) {
  const cplx e = expint_imag(s, std::abs(w) * x0) * std::pow(x0, 1.0 - s);
  return w > 0 ? e : std::conj(e);
}

//---------------------------------------------------------------------------//
// Triple-Bessel machinery
//---------------------------------------------------------------------------//

// Leading small-x exponent of J_nu.
double origin_exponent(double nu) {
  const double r = std::round(nu);
  if (std::abs(nu - r) < 1e-12 && r < 0) return -r;
  return nu;
}

double zmin(double nu) { return std::max(32.0, 0.5 * nu * nu + 8.0); }

// Hankel coefficients i^k a_k(nu) / b^k, truncated once below `cut`
// relative to 1 at x = x0.
std::vector<cplx> hankel_coefficients(double nu, double b, double x0) {
  std::vector<cplx> out{1.0};
  const double mu = 4.0 * nu * nu;
  double a = 1.0;
  double prev = 1.0;
  const cplx ipow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    a *= (mu - odd * odd) / (8.0 * k * b);
    if (a == 0.0) break;
    const double size = std::abs(a) / std::pow(x0, k);
    if (size > prev && size > 1e-18) {
      throw NumericalError("asymptotic tail expansion does not converge at x0");
    }
    out.push_back(ipow[k % 4] * a);
    if (size < 1e-19) break;
    prev = size;
  }
  return out;
}

std::vector<cplx> multiply(const std::vector<cplx>& p,
                           const std::vector<cplx>& q) {
  std::vector<cplx> r(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

std::vector<cplx> conjugated(std::vector<cplx> p) {
  for (auto& v : p) v = std::conj(v);
  return p;
}

// Closed-form integral of the Hankel expansion of the product over
// [x0, inf), for each of the four frequency combinations.
class AsymptoticTail {
 public:
  AsymptoticTail(const double* b, double x0) : x0_(x0) {
    for (int k = 0; k < 3; ++k) b_[k] = b[k];
    for (int combo = 0; combo < 4; ++combo) {
      const double s2 = (combo & 1) ? -1.0 : 1.0;
      const double s3 = (combo & 2) ? -1.0 : 1.0;
      omega_[combo] = b[0] + s2 * b[1] + s3 * b[2];
    }
  }

  // Returns {value, error estimate}.
  std::pair<double, double> evaluate(
      const double* nu, const std::vector<cplx>* coeff) const {
    cplx total = 0.0;
    double err = 0.0;
    for (int combo = 0; combo < 4; ++combo) {
      const double s2 = (combo & 1) ? -1.0 : 1.0;
      const double s3 = (combo & 2) ? -1.0 : 1.0;
      const auto c2 = s2 > 0 ? coeff[1] : conjugated(coeff[1]);
      const auto c3 = s3 > 0 ? coeff[2] : conjugated(coeff[2]);
      const auto poly = multiply(multiply(coeff[0], c2), c3);
      const double t = -0.5 * (nu[0] + s2 * nu[1] + s3 * nu[2]) -
                       0.25 * (1.0 + s2 + s3);
      const cplx phase(cos_pi(t), sin_pi(t));
      cplx part = 0.0;
      for (std::size_t n = 0; n < poly.size(); ++n) {
        const cplx term = poly[n] * integral(combo, n);
        part += term;
        if (n + 1 == poly.size()) err += std::abs(term);
      }
      total += phase * part;
    }
    const double pref = std::pow(2.0 / kPi, 1.5) /
                        std::sqrt(b_[0] * b_[1] * b_[2]) * 0.25;
    return {pref * total.real(), pref * (err + 1e-16 * std::abs(total))};
  }

 private:
  cplx integral(int combo, std::size_t n) const {
    auto& cache = cache_[combo];
    while (cache.size() <= n) {
      cache.push_back(
          power_exp_tail(0.5 + static_cast<double>(cache.size()),
                         omega_[combo], x0_));
    }
    return cache[n];
  }

  double b_[3];
  double x0_;
  double omega_[4];
  mutable std::vector<cplx> cache_[4];
};

struct Grid {
  std::vector<double> x;
  std::vector<double> wx;     // weight * x
  std::size_t head_end = 0;   // nodes [0, head_end) lie in [0, x0]
  double x_inner = 0;         // below this the power law is integrated
  double x0 = 0;
};

// Graded panels toward the origin, then uniform panels of width h up to
// x_end. Node 0 is x_inner itself with zero weight.
Grid make_grid(double h, double x0, double x_end) {
  const auto& gl = gauss_legendre();
  Grid g;
  const int levels = 40;
  g.x_inner = h * std::ldexp(1.0, -levels);
  g.x.push_back(g.x_inner);
  g.wx.push_back(0.0);
  auto panel = [&](double a, double b) {
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    for (int i = 0; i < GaussLegendre::n; ++i) {
      const double xi = c + r * gl.x[i];
      g.x.push_back(xi);
      g.wx.push_back(r * gl.w[i] * xi);
    }
  };
  for (int j = levels; j > 0; --j) {
    panel(h * std::ldexp(1.0, -j), h * std::ldexp(1.0, -j + 1));
  }
  const long n0 = std::max(1L, std::lround(std::ceil(x0 / h)));
  g.x0 = h * static_cast<double>(n0);
  for (long p = 1; p < n0; ++p) panel(h * p, h * (p + 1));
  g.head_end = g.x.size();
  const long n1 = std::lround(std::ceil(x_end / h));
  for (long p = n0; p < n1; ++p) panel(h * p, h * (p + 1));
  return g;
}

// Bessel values on the grid for every distinct order of one argument.
class OrderTable {
 public:
  // Registers an order, returns its slot.
  int add(double nu) {
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (orders_[i] == nu) return static_cast<int>(i);
    }
    orders_.push_back(nu);
    return static_cast<int>(orders_.size() - 1);
  }

  void tabulate(double b, const Grid& grid, int jobs) {
    // Group orders sharing a fractional part so one recurrence serves all.
    struct Group {
      double base;
      int count;
      std::vector<std::pair<int, int>> members;  // (slot, offset)
      std::vector<double> sign;
    };
    std::vector<Group> groups;
    std::map<long long, int> by_key;
    for (std::size_t s = 0; s < orders_.size(); ++s) {
      const double nu = orders_[s];
      const double r = std::round(nu);
      const bool integer = std::abs(nu - r) < 1e-12;
      double vbase = integer ? 0.0 : nu - std::floor(nu);
      if (!integer && nu < -1.0) {
        throw std::invalid_argument(
            "triple-Bessel batch: non-integer order below -1");
      }
      const long long key =
          integer ? -1LL : std::llround(vbase * 1e12);
      auto it = by_key.find(key);
      if (it == by_key.end()) {
        it = by_key.emplace(key, static_cast<int>(groups.size())).first;
        groups.push_back({integer ? 0.0 : nu, 0, {}, {}});
      }
      Group& gr = groups[it->second];
      if (!integer) gr.base = std::min(gr.base, nu);
    }
    for (std::size_t s = 0; s < orders_.size(); ++s) {
      const double nu = orders_[s];
      const double r = std::round(nu);
      const bool integer = std::abs(nu - r) < 1e-12;
      const long long key =
          integer ? -1LL : std::llround((nu - std::floor(nu)) * 1e12);
      Group& gr = groups[by_key.at(key)];
      int offset;
      double sign = 1.0;
      if (integer) {
        const long n = std::lround(r);
        offset = static_cast<int>(std::abs(n));
        if (n < 0 && (offset % 2 == 1)) sign = -1.0;
      } else {
        offset = static_cast<int>(std::lround(nu - gr.base));
      }
      gr.members.emplace_back(static_cast<int>(s), offset);
      gr.sign.push_back(sign);
      gr.count = std::max(gr.count, offset + 1);
    }
    const std::size_t nodes = grid.x.size();
    n_ = nodes;
    values_.assign(orders_.size() * nodes, 0.0);
    auto work = [&](std::size_t lo, std::size_t hi) {
      std::vector<double> seq;
      for (std::size_t i = lo; i < hi; ++i) {
        const double arg = b * grid.x[i];
        for (const Group& gr : groups) {
          seq.resize(static_cast<std::size_t>(gr.count));
          bessel_j_sequence(gr.base, arg, seq);
          for (std::size_t m = 0; m < gr.members.size(); ++m) {
            const auto [slot, off] = gr.members[m];
            values_[static_cast<std::size_t>(slot) * nodes + i] =
                gr.sign[m] * seq[static_cast<std::size_t>(off)];
          }
        }
      }
    };
    run_chunked(nodes, jobs, work);
  }

  const double* row(int slot) const {
    return values_.data() + static_cast<std::size_t>(slot) * n_;
  }
  double order(int slot) const { return orders_[static_cast<std::size_t>(slot)]; }
  double max_abs_order() const {
    double m = 0;
    for (double o : orders_) m = std::max(m, std::abs(o));
    return m;
  }

  template <class Work>
  static void run_chunked(std::size_t n, int jobs, Work&& work) {
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (threads == 1) {
      work(std::size_t{0}, n);
      return;
    }
    std::vector<std::thread> pool;
    const std::size_t step = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(n, t * step);
      const std::size_t hi = std::min(n, lo + step);
      pool.emplace_back([&work, lo, hi] { work(lo, hi); });
    }
    for (auto& th : pool) th.join();
  }

 private:
  std::vector<double> orders_;
  std::vector<double> values_;
  std::size_t n_ = 0;
};

void validate_arguments(double b1, double b2, double c) {
  if (!(b1 > 0.0) || !(b2 > 0.0) || !(c > 0.0) || !std::isfinite(b1 + b2 + c)) {
    throw PhysicsError(Violation::parameter_domain,
                       "triple-Bessel integral: arguments must be positive");
  }
  if (!(c > b1 + b2)) {
    throw PhysicsError(Violation::momentum_excess,
                       "triple-Bessel integral: requires c > b1 + b2");
  }
}

void validate_orders(const TripleBesselBatch::Orders& o) {
  for (double v : {o.mu, o.nu, o.lam}) {
    if (!std::isfinite(v) || std::abs(v) > kMaxBesselOrder) {
      throw std::invalid_argument("triple-Bessel integral: order out of range");
    }
  }
  const double s = origin_exponent(o.mu) + origin_exponent(o.nu) +
                   origin_exponent(o.lam);
  if (!(s > -1.0)) {
    throw std::invalid_argument(
        "triple-Bessel integral: sum of orders must exceed -1 at the origin");
  }
}

double neville_at_zero(const std::vector<double>& x, std::vector<double> y) {
  const std::size_t n = x.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      y[i] = (x[i + m] * y[i] - x[i] * y[i + 1]) / (x[i + m] - x[i]);
    }
  }
  return y[0];
}

struct Evaluated {
  std::vector<double> value;
  std::vector<double> error;
  std::vector<double> tail;
  double x0 = 0;
};

// Core evaluation shared by the single-integral and batch entry points.
Evaluated evaluate_requests(const double* b,
                            std::span<const TripleBesselBatch::Orders> reqs,
                            const QuadratureConfig& cfg, double refine,
                            int jobs) {
  OrderTable tables[3];
  std::vector<std::array<int, 3>> slots(reqs.size());
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    validate_orders(reqs[r]);
    slots[r] = {tables[0].add(reqs[r].mu), tables[1].add(reqs[r].nu),
                tables[2].add(reqs[r].lam)};
  }
  double x0 = 0;
  for (int k = 0; k < 3; ++k) {
    x0 = std::max(x0, zmin(tables[k].max_abs_order()) / b[k]);
  }
  const double h = std::min(1.0, kPi / (b[0] + b[1] + b[2])) / refine;
  const bool damped = cfg.tail == TailMethod::damped;
  const double eps_min =
      damped ? cfg.damping_sequence.back() : 0.0;
  const double x_end = damped ? x0 + 40.0 / eps_min : x0;
  const Grid grid = make_grid(h, x0, x_end);
  for (int k = 0; k < 3; ++k) tables[k].tabulate(b[k], grid, jobs);

  Evaluated out;
  out.value.assign(reqs.size(), 0.0);
  out.error.assign(reqs.size(), 0.0);
  out.tail.assign(reqs.size(), 0.0);
  out.x0 = grid.x0;

  // Coefficients for the tail, one vector per slot.
  std::vector<std::vector<cplx>> coeff[3];
  if (!damped) {
    for (int k = 0; k < 3; ++k) {
      std::size_t count = 0;
      for (const auto& s : slots) count = std::max<std::size_t>(count, s[k] + 1);
      coeff[k].resize(count);
      for (std::size_t s = 0; s < count; ++s) {
        coeff[k][s] =
            hankel_coefficients(tables[k].order(static_cast<int>(s)), b[k],
                                grid.x0);
      }
    }
  }
  const AsymptoticTail tail(b, grid.x0);

  auto work = [&](std::size_t lo, std::size_t hi) {
    AsymptoticTail local = tail;  // private cache per thread
    for (std::size_t r = lo; r < hi; ++r) {
      const double* j1 = tables[0].row(slots[r][0]);
      const double* j2 = tables[1].row(slots[r][1]);
      const double* j3 = tables[2].row(slots[r][2]);
      double head = 0.0;
      for (std::size_t i = 1; i < grid.head_end; ++i) {
        head += grid.wx[i] * j1[i] * j2[i] * j3[i];
      }
      // Power-law piece on [0, x_inner].
      const double p = 1.0 + origin_exponent(reqs[r].mu) +
                       origin_exponent(reqs[r].nu) +
                       origin_exponent(reqs[r].lam);
      head += grid.x[0] * j1[0] * j2[0] * j3[0] * grid.x[0] / (p + 1.0);
      double tail_value = 0.0, tail_error = 0.0;
      if (!damped) {
        const double nu[3] = {reqs[r].mu, reqs[r].nu, reqs[r].lam};
        const std::vector<cplx> c[3] = {coeff[0][slots[r][0]],
                                        coeff[1][slots[r][1]],
                                        coeff[2][slots[r][2]]};
        std::tie(tail_value, tail_error) = local.evaluate(nu, c);
      } else {
        const auto& eps = cfg.damping_sequence;
        std::vector<double> g(eps.size(), 0.0);
        for (std::size_t i = grid.head_end; i < grid.x.size(); ++i) {
          const double f = grid.wx[i] * j1[i] * j2[i] * j3[i];
          const double dx = grid.x[i] - grid.x0;
          for (std::size_t e = 0; e < eps.size(); ++e) {
            g[e] += f * std::exp(-eps[e] * dx);
          }
        }
        tail_value = neville_at_zero(eps, g);
        if (eps.size() > 1) {
          std::vector<double> e1(eps.begin() + 1, eps.end());
          std::vector<double> g1(g.begin() + 1, g.end());
          tail_error = std::abs(tail_value - neville_at_zero(e1, g1));
        }
      }
      out.value[r] = head + tail_value;
      out.error[r] = tail_error;
      out.tail[r] = tail_value;
    }
  };
  OrderTable::run_chunked(reqs.size(), jobs, work);
  return out;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw std::invalid_argument("QuadratureConfig: tolerances must be > 0");
  }
  if (max_subdivisions < 1) {
    throw std::invalid_argument("QuadratureConfig: max_subdivisions < 1");
  }
  if (damping_sequence.empty()) {
    throw std::invalid_argument("QuadratureConfig: empty damping sequence");
  }
  for (std::size_t i = 0; i < damping_sequence.size(); ++i) {
    if (!(damping_sequence[i] > 0.0) ||
        (i > 0 && !(damping_sequence[i] < damping_sequence[i - 1]))) {
      throw std::invalid_argument(
          "QuadratureConfig: damping sequence must be positive and strictly "
          "decreasing");
    }
  }
}

std::complex<double> phi_integral(double q, double z,
                                  const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(q) || !std::isfinite(z)) {
    throw std::invalid_argument("phi_integral: non-finite input");
  }
  // For integer q the integrand is entire and 2 pi periodic, so the line can
  // be moved to Im chi = y. Through the saddle (cosh y = |q|/z) the integrand
  // no longer cancels down to a tiny J_q(z).
  double y = 0.0;
  if (q == std::round(q) && z > 0.0 && std::abs(q) > z) {
    y = std::copysign(std::acosh(std::abs(q) / z), q);
  }
  auto f = [q, z, y](double chi) {
    const cplx w(chi, y);
    return std::exp(cplx(0.0, q) * w + cplx(0.0, z) * std::cos(w));
  };
  return adaptive_kronrod(f, -kPi, kPi, cfg);
}

TripleIntegral triple_bessel_integral_ex(double mu, double nu, double lam,
                                         double b1, double b2, double c,
                                         const QuadratureConfig& cfg) {
  cfg.validate();
  validate_arguments(b1, b2, c);
  const double b[3] = {b1, b2, c};
  const TripleBesselBatch::Orders req{mu, nu, lam};
  const std::span<const TripleBesselBatch::Orders> reqs(&req, 1);

  // Panel refinement until two successive head estimates agree.
  double refine = 1.0;
  Evaluated prev = evaluate_requests(b, reqs, cfg, refine, 1);
  const double h0 = std::min(1.0, kPi / (b1 + b2 + c));
  while (true) {
    refine *= 2.0;
    if (prev.x0 / (h0 / refine) > cfg.max_subdivisions) {
      throw NumericalError(
          "triple-Bessel integral: panel refinement exceeded max_subdivisions");
    }
    Evaluated next = evaluate_requests(b, reqs, cfg, refine, 1);
    const double diff = std::abs(next.value[0] - prev.value[0]);
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(next.value[0]));
    if (diff <= tol) {
      TripleIntegral out;
      out.value = next.value[0];
      out.error = diff + next.error[0];
      out.x0 = next.x0;
      out.tail = next.tail[0];
      if (next.error[0] > tol) {
        throw NumericalError(
            "triple-Bessel integral: tail extrapolation residual " +
            std::to_string(next.error[0]) + " above tolerance " +
            std::to_string(tol));
      }
      return out;
    }
    prev = std::move(next);
  }
}

double triple_bessel_integral(double mu, double nu, double lam, double b1,
                              double b2, double c,
                              const QuadratureConfig& cfg) {
  return triple_bessel_integral_ex(mu, nu, lam, b1, b2, c, cfg).value;
}

TripleBesselBatch::TripleBesselBatch(double b1, double b2, double c,
                                     const QuadratureConfig& cfg)
    : b_{b1, b2, c}, cfg_(cfg) {
  cfg_.validate();
  validate_arguments(b1, b2, c);
}

std::vector<double> TripleBesselBatch::evaluate(std::span<const Orders> requests,
                                                int jobs) const {
  if (requests.empty()) return {};
  return evaluate_requests(b_, requests, cfg_, 1.0, jobs).value;
}

}  // namespace abpair
