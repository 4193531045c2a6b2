#include "abpair/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "abpair/errors.hpp"
#include "abpair/kinematics.hpp"

namespace abpair {
namespace {

constexpr double kPi = std::numbers::pi;

void finish(IdentityReport& r, double residual) {
  r.passed = r.notes.empty() && residual <= r.tolerance;
}

struct Trig {
  double b1, b2, a, b, D;
};

Trig trig_params(double eta, double zeta, double c) {
  Trig t;
  t.b1 = c * std::sin(eta) * std::cos(zeta);
  t.b2 = c * std::cos(eta) * std::sin(zeta);
  t.a = std::sin(eta) / std::cos(zeta);
  t.b = std::sin(zeta) / std::cos(eta);
  t.D = 1.0 / (std::cos(eta + zeta) * std::cos(eta - zeta));
  return t;
}

// (eta, zeta) uniform on the triangle eta, zeta > lo, eta + zeta < hi.
std::pair<double, double> sample_angles(std::mt19937_64& rng, double lo,
                                        double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  while (true) {
    const double e = u(rng), z = u(rng);
    if (e + z < hi) return {e, z};
  }
}

}  // namespace

double IdentityReport::extra(const std::string& key) const {
  for (const auto& [k, v] : extras) {
    if (k == key) return v;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<VanishingPoint> default_vanishing_grid(std::uint64_t seed) {
  std::vector<VanishingPoint> g;
  g.push_back({1, 2, 3, 0.3, 0.4, 1.0});
  g.push_back({1, 2, 3, 0.3, 0.4, 1.001 * 0.7});
  g.push_back({0.3, 0.7, 1.0, 0.5, 0.2, 1.0});
  g.push_back({0.0, 0.0, 0.0, 0.25, 0.35, 0.9});
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> order(0.0, 4.0), frac(0.1, 0.9),
      margin(1.05, 2.5);
  while (g.size() < 20) {
    const double mu = order(rng), nu = order(rng);
    const double b1 = frac(rng), b2 = frac(rng);
    g.push_back({mu, nu, mu + nu, b1, b2, margin(rng) * (b1 + b2)});
  }
  return g;
}

std::vector<ClosedPoint> default_closed_grid(std::uint64_t seed) {
  std::vector<ClosedPoint> g;
  g.push_back({kPi / 6, kPi / 6, 0.7, 0.3, 1.0});
  g.push_back({kPi / 6, 0.4, 2.0, 0.6, 1.3});
  std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ULL);
  std::uniform_real_distribution<double> ang(0.1, 0.6), order(0.1, 1.9),
      scale(0.5, 3.0);
  while (g.size() < 20) {
    const double eta = ang(rng), zeta = ang(rng);
    const double mu = order(rng), nu = order(rng);
    if (mu - nu <= -0.95) continue;  // keep the third order above -1
    g.push_back({eta, zeta, mu, nu, scale(rng)});
  }
  return g;
}

IdentityReport check_vanishing_integral(std::span<const VanishingPoint> grid,
                                        const QuadratureConfig& cfg,
                                        double tol) {
  IdentityReport r;
  r.identity_name = "vanishing_integral";
  r.tolerance = tol;
  for (const auto& p : grid) {
    if (!(p.c > p.b1 + p.b2)) {
      throw std::invalid_argument(
          "check_vanishing_integral: grid point with c <= b1 + b2");
    }
    try {
      const double v =
          triple_bessel_integral(p.mu, p.nu, p.lam, p.b1, p.b2, p.c, cfg);
      r.max_abs_residual = std::max(r.max_abs_residual, std::abs(v));
    } catch (const NumericalError& e) {
      r.notes.push_back(std::string("quadrature failed: ") + e.what());
    }
    ++r.samples;
  }
  // No nonzero reference: the relative residual is the absolute one.
  r.max_rel_residual = r.max_abs_residual;
  finish(r, r.max_abs_residual);
  return r;
}

IdentityReport check_closed_integral(std::span<const ClosedPoint> grid,
                                     const QuadratureConfig& cfg, double tol) {
  IdentityReport r;
  r.identity_name = "closed_integral";
  r.tolerance = tol;
  double sin_mu_rel = 0.0;
  for (const auto& p : grid) {
    const Trig t = trig_params(p.eta, p.zeta, p.c);
    const double pre = 2.0 / (kPi * p.c * p.c) * std::pow(t.a, p.mu) *
                       std::pow(t.b, p.nu) * t.D;
    const double ref = -pre * sin_pi(p.nu);
    const double sin_mu_form = pre * sin_pi(p.mu);
    try {
      const double v = triple_bessel_integral(p.mu, p.nu, p.mu - p.nu, t.b1,
                                              t.b2, p.c, cfg);
      const double err = std::abs(v - ref);
      r.max_abs_residual = std::max(r.max_abs_residual, err);
      r.max_rel_residual =
          std::max(r.max_rel_residual, err / std::max(std::abs(ref), 1e-300));
      sin_mu_rel = std::max(sin_mu_rel, std::abs(v - sin_mu_form) /
                                              std::max(std::abs(v), 1e-300));
    } catch (const NumericalError& e) {
      r.notes.push_back(std::string("quadrature failed: ") + e.what());
    }
    ++r.samples;
  }
  const Trig t6 = trig_params(kPi / 6, kPi / 6, 1.0);
  r.extras.emplace_back("a_at_pi_6", t6.a);
  r.extras.emplace_back("b_at_pi_6", t6.b);
  r.extras.emplace_back("D_at_pi_6", t6.D);
  r.extras.emplace_back("sin_mu_form_max_rel_residual", sin_mu_rel);
  finish(r, r.max_rel_residual);
  return r;
}

IdentityReport check_phi_integral(int q_min, int q_max,
                                  std::span<const double> z_values,
                                  const QuadratureConfig& cfg, double tol) {
  IdentityReport r;
  r.identity_name = "phi_integral";
  r.tolerance = tol;
  QuadratureConfig tight = cfg;
  tight.abs_tol = 1e-300;
  tight.rel_tol = std::min(cfg.rel_tol, 1e-14);
  struct Sample {
    cplx quad, ref;
  };
  std::vector<Sample> s;
  for (int q = q_min; q <= q_max; ++q) {
    for (double z : z_values) {
      const cplx ref = 2.0 * kPi * std::exp(cplx(0.0, -0.5 * kPi * q)) *
                       bessel_j(-static_cast<double>(q), z);
      s.push_back({phi_integral(q, z, tight), ref});
    }
  }
  cplx acc = 0.0;
  for (const auto& x : s) {
    if (std::abs(x.ref) > 0.0) acc += x.quad * std::conj(x.ref) / std::norm(x.ref);
  }
  const double phase = std::abs(acc) > 0.0 ? std::arg(acc) : 0.0;
  const cplx rot = std::exp(cplx(0.0, phase));
  for (const auto& x : s) {
    const double err = std::abs(x.quad - rot * x.ref);
    r.max_abs_residual = std::max(r.max_abs_residual, err);
    const double rel = std::abs(x.ref) > 0.0 ? err / std::abs(x.ref) : err;
    r.max_rel_residual = std::max(r.max_rel_residual, rel);
    ++r.samples;
  }
  r.extras.emplace_back("fitted_phase", phase);
  finish(r, r.max_rel_residual);
  return r;
}

IdentityReport check_geometric_resummation(const KinematicPoint& pt,
                                           std::span<const int> schedule,
                                           double tol, double rate_tol) {
  IdentityReport r;
  r.identity_name = "geometric_resummation";
  r.tolerance = tol;
  if (schedule.size() < 2) {
    throw std::invalid_argument("check_geometric_resummation: need >= 2 m_max");
  }
  const FluxParam flux = decompose_flux(pt.flux);
  if (flux.delta == 0.0) {
    throw PhysicsError(Violation::parameter_domain,
                       "resummation check needs a fractional flux");
  }
  PhotonIn photon;
  photon.kappa = pt.kappa;
  photon.phi_k = pt.phi_k;
  const PairOut pair = solve_pair(pt.kappa, pt.k_perp, pt.k3, pt.mass,
                                  pt.phi_perp, pt.phip_perp);
  const StructureParams sp =
      structure_params(pair.k_perp, pair.kp_perp, photon.kappa, pair.phi_perp,
                       pair.phip_perp, photon.phi_k);
  const cplx closed = g1_t2_closed_form(flux, photon, pair);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  double last_rel = 0, last_abs = 0;
  for (int m : schedule) {
    const double err = std::abs(g1_t2_partial_sum(flux, photon, pair, m) - closed);
    const double rel = err / std::abs(closed);
    r.extras.emplace_back("rel_err_m" + std::to_string(m), rel);
    if (rel > 0.0) {
      const double y = std::log(rel);
      sx += m;
      sy += y;
      sxx += static_cast<double>(m) * m;
      sxy += m * y;
      ++n;
    }
    last_rel = rel;
    last_abs = err;
    ++r.samples;
  }
  const double expected = std::max(sp.a, sp.b);
  double rate = std::numeric_limits<double>::quiet_NaN();
  if (n >= 2) rate = std::exp((n * sxy - sx * sy) / (n * sxx - sx * sx));
  r.extras.emplace_back("rate", rate);
  r.extras.emplace_back("max_ab", expected);
  r.max_abs_residual = last_abs;
  r.max_rel_residual = last_rel;
  if (!(std::abs(rate - expected) <= rate_tol)) {
    r.notes.push_back("convergence rate " + std::to_string(rate) +
                      " differs from max(a,b) = " + std::to_string(expected));
  }
  finish(r, last_rel);
  return r;
}

IdentityReport check_structure_consistency(std::uint64_t seed, int samples,
                                           double tol) {
  IdentityReport r;
  r.identity_name = "structure_consistency";
  r.tolerance = tol;
  std::mt19937_64 rng(seed ^ 0xD1B54A32D192ED03ULL);
  std::uniform_real_distribution<double> scale(0.5, 5.0);
  for (int i = 0; i < samples; ++i) {
    const auto [eta, zeta] = sample_angles(rng, 0.02, kPi / 2 - 0.02);
    const double c = scale(rng);
    const Trig t = trig_params(eta, zeta, c);
    const StructureParams sp = structure_params(t.b1, t.b2, c, 0, 0, 0);
    const double err = std::abs(sp.D - t.D);
    r.max_abs_residual = std::max(r.max_abs_residual, err);
    r.max_rel_residual = std::max(r.max_rel_residual, err / t.D);
    ++r.samples;
  }
  finish(r, r.max_rel_residual);
  return r;
}

std::vector<IdentityReport> run_verify_suite(const VerifyOptions& opt) {
  opt.quad.validate();
  auto tol = [&](double dflt) { return opt.tolerance > 0 ? opt.tolerance : dflt; };
  const auto vanish = default_vanishing_grid(opt.seed);
  const auto closed = default_closed_grid(opt.seed);
  static constexpr double kZ[] = {0.5, 2.0, 10.0};
  static constexpr int kSchedule[] = {5, 10, 20, 40};

  std::vector<std::function<IdentityReport()>> checks = {
      [&] { return check_vanishing_integral(vanish, opt.quad, tol(1e-8)); },
      [&] { return check_closed_integral(closed, opt.quad, tol(1e-6)); },
      [&] { return check_phi_integral(-10, 10, kZ, opt.quad, tol(1e-10)); },
      [&] {
        return check_geometric_resummation(KinematicPoint{}, kSchedule,
                                           tol(1e-12));
      },
      [&] { return check_structure_consistency(opt.seed, 100, tol(1e-12)); },
  };
  std::vector<IdentityReport> out(checks.size());
  if (opt.jobs <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) out[i] = checks[i]();
    return out;
  }
  std::vector<std::future<IdentityReport>> pending;
  for (auto& c : checks) pending.push_back(std::async(std::launch::async, c));
  for (std::size_t i = 0; i < pending.size(); ++i) out[i] = pending[i].get();
  return out;
}

std::string report_json(const std::vector<IdentityReport>& reports) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["identity_name"] = r.identity_name;
    j["max_abs_residual"] = r.max_abs_residual;
    j["max_rel_residual"] = r.max_rel_residual;
    j["samples"] = r.samples;
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    nlohmann::ordered_json ex = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.extras) ex[k] = v;
    j["extras"] = ex;
    j["notes"] = r.notes;
    list.push_back(j);
    all = all && r.passed;
  }
  doc["identities"] = list;
  doc["all_passed"] = all;
  return doc.dump(2) + "\n";
}

std::string report_table(const std::vector<IdentityReport>& reports) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %8s %12s %12s %10s  %s\n", "identity",
                "samples", "max_abs", "max_rel", "tolerance", "result");
  out += line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-24s %8d %12.3e %12.3e %10.1e  %s\n",
                  r.identity_name.c_str(), r.samples, r.max_abs_residual,
                  r.max_rel_residual, r.tolerance, r.passed ? "PASS" : "FAIL");
    out += line;
    for (const auto& [k, v] : r.extras) {
      std::snprintf(line, sizeof line, "    %-36s %.6g\n", k.c_str(), v);
      out += line;
    }
    for (const auto& n : r.notes) out += "    note: " + n + "\n";
  }
  return out;
}

}  // namespace abpair
