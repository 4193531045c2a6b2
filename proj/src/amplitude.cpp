#include "abpair/amplitude.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "abpair/errors.hpp"
#include "abpair/parallel.hpp"

namespace abpair {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// Symbolic Bessel order n + sd * delta, sd in {-1, 0, 1}.
struct Ord {
  long n;
  int sd;
};

cplx i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// Everything a partial-wave term needs that does not depend on (m, m').
struct Context {
  double delta;
  long F;
  double k, kp, kappa, k3diff;
  double phi, phip, phik;
  double a, b, D;
  double sin_pd;
  double a_d, b_d;  // a^delta, b^delta
  long pow_lo;
  std::vector<double> apow, bpow;

  double pow_a(const Ord& o) const {
    double v = apow[static_cast<std::size_t>(o.n - pow_lo)];
    if (o.sd > 0) v *= a_d;
    if (o.sd < 0) v /= a_d;
    return v;
  }
  double pow_b(const Ord& o) const {
    double v = bpow[static_cast<std::size_t>(o.n - pow_lo)];
    if (o.sd > 0) v *= b_d;
    if (o.sd < 0) v /= b_d;
    return v;
  }
  // sin(pi (n + sd delta)) with the integer part folded exactly.
  double sin_order(const Ord& o) const {
    if (o.sd == 0) return 0.0;
    const double s = o.sd * sin_pd;
    return (o.n % 2 == 0) ? s : -s;
  }
  double value(const Ord& o) const { return o.n + o.sd * delta; }
};

Context make_context(const FluxParam& flux, const PhotonIn& photon,
                     const PairOut& pair, int m_max) {
  require_closed_form_kinematics(pair, photon);
  const StructureParams sp =
      structure_params(pair.k_perp, pair.kp_perp, photon.kappa, pair.phi_perp,
                       pair.phip_perp, photon.phi_k);
  Context c;
  c.delta = flux.delta;
  c.F = flux.int_part;
  c.k = pair.k_perp;
  c.kp = pair.kp_perp;
  c.kappa = photon.kappa;
  c.k3diff = pair.k3 - pair.kp3;
  c.phi = pair.phi_perp;
  c.phip = pair.phip_perp;
  c.phik = photon.phi_k;
  c.a = sp.a;
  c.b = sp.b;
  c.D = sp.D;
  c.sin_pd = sin_pi(flux.delta);
  c.a_d = std::pow(sp.a, flux.delta);
  c.b_d = std::pow(sp.b, flux.delta);
  c.pow_lo = -3;
  const long hi = m_max + 4;
  c.apow.resize(static_cast<std::size_t>(hi - c.pow_lo + 1));
  c.bpow.resize(c.apow.size());
  for (long n = c.pow_lo; n <= hi; ++n) {
    c.apow[static_cast<std::size_t>(n - c.pow_lo)] = std::pow(sp.a, n);
    c.bpow[static_cast<std::size_t>(n - c.pow_lo)] = std::pow(sp.b, n);
  }
  return c;
}

// Analytic value of int rho J_al(k rho) J_be(k' rho) J_ga(kappa rho) drho
// for the order combinations that occur in the partial-wave sum.
double analytic_w(const Context& c, const Ord& al, const Ord& be, long ga) {
  if (al.sd + be.sd == 0 && (al.n + be.n == ga || -(al.n + be.n) == ga)) {
    return 0.0;
  }
  const double K = 2.0 * c.D / (kPi * c.kappa * c.kappa);
  if (al.sd == be.sd && be.n - al.n == ga) {
    return -K * c.sin_order(al) * c.pow_a(al) * c.pow_b(be);
  }
  if (al.sd == be.sd && al.n - be.n == ga) {
    return -K * c.sin_order(be) * c.pow_a(al) * c.pow_b(be);
  }
  throw std::logic_error("partial-wave oracle: unclassified radial integral");
}

struct Labels {
  long m, mp, q;
  int s, sp;
  Ord nu, nup;
};

Labels labels(const Context& c, long mb, long mpb) {
  Labels l;
  l.m = mb - c.F;
  l.mp = mpb + c.F + 1;
  l.q = mb + mpb + 1;
  l.s = mb >= 0 ? 1 : -1;
  l.sp = mpb >= 0 ? 1 : -1;
  l.nu = mb >= 0 ? Ord{mb, 1} : Ord{-mb, -1};
  l.nup = mpb >= 0 ? Ord{mpb + 1, -1} : Ord{-mpb - 1, 1};
  return l;
}

// c_m^* c_m' i^q e^{-iq phi_k}: coefficient product times the angular factor
// without its 2 pi. Multiples of pi/2 are reduced exactly.
cplx angular_phase(const Context& c, const Labels& l) {
  const long quarter = -2 * l.m - 2 * l.mp + l.nu.n + l.nup.n + l.q;
  const double rest = l.m * c.phi + l.mp * c.phip - l.q * c.phik +
                      0.5 * kPi * c.delta * (l.nu.sd + l.nup.sd);
  return i_pow(quarter) * std::exp(kI * rest);
}

// Value of one (m_bar, mp_bar) term. W is called with (alpha, beta, gamma).
template <class WFn>
AmplitudeVector assemble_term(const Context& c, const Labels& l, WFn&& w) {
  auto Y = [&](long da, long db, int pm) -> cplx {
    const cplx e = pm < 0 ? -kI : kI;
    return e * w(Ord{l.nu.n + da, l.nu.sd}, Ord{l.nup.n + db, l.nup.sd},
                 l.q + pm);
  };
  cplx kp1, kp2, k1, k2;
  if (l.sp > 0) {
    const cplx lo = Y(0, -1, -1), hi = Y(0, 1, 1);
    kp1 = 2.0 * (lo + hi);
    kp2 = 2.0 * (hi - lo);
  } else {
    const cplx x = Y(0, 1, -1), y = Y(0, -1, 1);
    kp1 = -2.0 * (x + y);
    kp2 = 2.0 * (x - y);
  }
  if (l.s < 0) {
    const cplx x = Y(-1, 0, 1), y = Y(1, 0, -1);
    k1 = 2.0 * (x + y);
    k2 = 2.0 * (x - y);
  } else {
    const cplx x = Y(1, 0, 1), y = Y(-1, 0, -1);
    k1 = -2.0 * (x + y);
    k2 = 2.0 * (y - x);
  }
  const cplx brace1 = c.kp * kp1 + c.k * k1;
  const cplx brace2 = c.kp * kp2 + c.k * k2;
  const cplx bz = c.k3diff * w(l.nu, l.nup, l.q);
  const cplx pre = 2.0 * kPi * angular_phase(c, l);
  return {pre * (-brace1 / 8.0), pre * (kI * brace2 / 8.0), pre * (bz / 2.0)};
}

// Sum of r^j for j in [lo, hi]; hi < 0 means infinity.
double geometric(double r, long lo, long hi) {
  const double head = std::pow(r, static_cast<double>(lo));
  if (hi < 0) return head / (1.0 - r);
  return (head - std::pow(r, static_cast<double>(hi + 1))) / (1.0 - r);
}

using WKey = std::array<long, 5>;

}  // namespace

//---------------------------------------------------------------------------//

double AmplitudeVector::norm() const {
  return std::sqrt(std::norm(d1) + std::norm(d2) + std::norm(dz));
}

AmplitudeVector& AmplitudeVector::operator+=(const AmplitudeVector& o) {
  d1 += o.d1;
  d2 += o.d2;
  dz += o.dz;
  return *this;
}

StructureParams structure_params(double k_perp, double kp_perp,
                                 double kappa_perp, double phi_perp,
                                 double phip_perp, double phi_k) {
  if (!(k_perp > 0.0) || !(kp_perp > 0.0)) {
    throw PhysicsError(Violation::parameter_domain,
                       "transverse momenta must be > 0");
  }
  if (!(kappa_perp > k_perp + kp_perp)) {
    throw PhysicsError(Violation::momentum_excess,
                       "momentum excess kappa_perp > k_perp + kp_perp violated");
  }
  const double k = k_perp, kp = kp_perp, K = kappa_perp;
  const double disc = (K - k - kp) * (K + k + kp) * (K - k + kp) * (K + k - kp);
  if (!(disc > 0.0)) {
    throw PhysicsError(Violation::momentum_excess,
                       "structure functions: non-positive radicand");
  }
  const double root = std::sqrt(disc);
  StructureParams sp;
  sp.a = 2.0 * k * K / ((k * k + K * K - kp * kp) + root);
  sp.b = 2.0 * kp * K / ((kp * kp + K * K - k * k) + root);
  if (!(sp.a > 0.0 && sp.a < 1.0 && sp.b > 0.0 && sp.b < 1.0)) {
    throw PhysicsError(Violation::parameter_domain,
                       "structure functions a, b outside (0, 1)");
  }
  const double ab = sp.a * sp.b;
  sp.D = K * K * ab / (k * kp * (1.0 - ab) * (1.0 + ab));
  sp.A = k * (sp.a - 1.0 / sp.a) + kp * (sp.b - 1.0 / sp.b);
  sp.B = k * (sp.a + 1.0 / sp.a) - kp * (sp.b + 1.0 / sp.b);

  const double u = phi_perp - phi_k, v = phip_perp - phi_k;
  const cplx eu = std::exp(kI * u), ev = std::exp(kI * v);
  sp.mode_plus = 1.0 / ((1.0 - sp.a * eu) * (1.0 - sp.b / ev));
  sp.mode_minus = ab * ev / eu / ((1.0 - sp.a / eu) * (1.0 - sp.b * ev));
  sp.sigma_plus = sp.b / ev * sp.mode_plus;
  sp.sigma_minus = sp.mode_minus / (sp.b * ev);
  return sp;
}

AmplitudeVector closed_form_amplitude(const FluxParam& flux,
                                      const PhotonIn& photon,
                                      const PairOut& pair) {
  require_closed_form_kinematics(pair, photon);
  const double s = sin_pi(flux.delta);
  if (s == 0.0) return {};
  const StructureParams sp =
      structure_params(pair.k_perp, pair.kp_perp, photon.kappa, pair.phi_perp,
                       pair.phip_perp, photon.phi_k);
  const double K = photon.kappa;
  const double ab = sp.a * sp.b;
  const cplx ed = std::exp(kI * (kPi * flux.delta));
  const cplx plus = ed * std::pow(ab, flux.delta) * sp.mode_plus;
  const cplx minus = std::pow(ab, -flux.delta) * sp.mode_minus / ed;
  const cplx xp = plus + minus, xm = plus - minus;
  const double dphi = pair.phip_perp - pair.phi_perp;
  const cplx phase =
      std::exp(kI * (static_cast<double>(flux.int_part) * dphi));
  const cplx pre = -(sp.D * s / (K * K)) * phase;
  return {pre * kI * sp.A * xp, pre * sp.B * xm,
          pre * 2.0 * (pair.k3 - pair.kp3) * xm};
}

TermClass classify_term(long m_bar, long mp_bar) {
  if (m_bar < 0) return mp_bar < 0 ? TermClass::T1 : TermClass::T2;
  return mp_bar < 0 ? TermClass::T3 : TermClass::T4;
}

bool selection_rule(long m_bar, long mp_bar) {
  return (m_bar < 0) != (mp_bar < 0);
}

int default_m_max(const StructureParams& sp) {
  const double r = std::max(sp.a, sp.b);
  const double target = 1e-14 * (1.0 - r);
  const double m = std::log(target) / std::log(r);
  int out = static_cast<int>(std::floor(m)) + 1;
  while (out > 1 && std::pow(r, out - 1) < target) --out;
  while (std::pow(r, out) >= target) ++out;
  return std::max(out, 1);
}

double truncation_bound(const FluxParam& flux, const PhotonIn& photon,
                        const PairOut& pair, int m_max) {
  const double s = std::abs(sin_pi(flux.delta));
  if (s == 0.0) return 0.0;
  const StructureParams sp =
      structure_params(pair.k_perp, pair.kp_perp, photon.kappa, pair.phi_perp,
                       pair.phip_perp, photon.phi_k);
  const double a = sp.a, b = sp.b, d = flux.delta;
  const long M = m_max;
  // Sector with m_bar >= 0 > mp_bar: powers a^n b^l, n <= M, l <= M - 1.
  const double t3 = geometric(a, 0, -1) * geometric(b, 0, -1) -
                    geometric(a, 0, M) * (M >= 1 ? geometric(b, 0, M - 1) : 0.0);
  // Sector with m_bar < 0 <= mp_bar: powers a^l b^l', l <= M, l' <= M + 1.
  const double t2 = geometric(a, 1, -1) * geometric(b, 1, -1) -
                    (M >= 1 ? geometric(a, 1, M) : 0.0) * geometric(b, 1, M + 1);
  const double ab = a * b;
  const double K = 2.0 * sp.D / (kPi * photon.kappa * photon.kappa);
  const double ksum = pair.k_perp + pair.kp_perp;
  const double kz = pair.k3 - pair.kp3;
  const double weight = kPi * K * s * std::sqrt(2.0 * ksum * ksum + kz * kz);
  return weight * (std::pow(ab, d - 1.0) * std::max(t3, 0.0) +
                   std::pow(ab, -d - 1.0) * std::max(t2, 0.0));
}

std::vector<PartialWaveTerm> oracle_terms(const FluxParam& flux,
                                          const PhotonIn& photon,
                                          const PairOut& pair, int m_max,
                                          OracleTier tier,
                                          const OracleOptions& opt) {
  if (m_max < 1) throw std::invalid_argument("oracle: m_max must be >= 1");
  const Context c = make_context(flux, photon, pair, m_max);
  const long M = m_max;
  const std::size_t side = static_cast<std::size_t>(2 * M + 1);
  std::vector<PartialWaveTerm> terms(side * side);

  auto fill_header = [&](std::size_t idx) -> Labels {
    const long mb = -M + static_cast<long>(idx / side);
    const long mpb = -M + static_cast<long>(idx % side);
    const Labels l = labels(c, mb, mpb);
    PartialWaveTerm& t = terms[idx];
    t.m_bar = mb;
    t.mp_bar = mpb;
    t.term_class = classify_term(mb, mpb);
    const double nu = c.value(l.nu), nup = c.value(l.nup);
    t.c_m = std::exp(kI * (l.m * (kPi - c.phi) - 0.5 * kPi * nu));
    t.c_mp = std::exp(kI * (-l.mp * (kPi - c.phip) + 0.5 * kPi * nup));
    return l;
  };

  if (tier == OracleTier::A) {
    parallel_for(terms.size(), opt.jobs, [&](std::size_t idx) {
      const Labels l = fill_header(idx);
      terms[idx].value = assemble_term(
          c, l, [&](Ord al, Ord be, long ga) { return analytic_w(c, al, be, ga); });
    });
    return terms;
  }

  // Tier B: gather the distinct radial integrals, evaluate them in one batch,
  // then assemble.
  std::map<WKey, std::size_t> index;
  std::vector<TripleBesselBatch::Orders> requests;
  for (std::size_t idx = 0; idx < terms.size(); ++idx) {
    const Labels l = fill_header(idx);
    assemble_term(c, l, [&](Ord al, Ord be, long ga) {
      const WKey key{al.n, al.sd, be.n, be.sd, ga};
      if (index.emplace(key, requests.size()).second) {
        requests.push_back({c.value(al), c.value(be), static_cast<double>(ga)});
      }
      return 0.0;
    });
  }
  const TripleBesselBatch batch(c.k, c.kp, c.kappa, opt.quad);
  const std::vector<double> values = batch.evaluate(requests, opt.jobs);
  parallel_for(terms.size(), opt.jobs, [&](std::size_t idx) {
    const Labels l = labels(c, terms[idx].m_bar, terms[idx].mp_bar);
    terms[idx].value = assemble_term(c, l, [&](Ord al, Ord be, long ga) {
      return values[index.at(WKey{al.n, al.sd, be.n, be.sd, ga})];
    });
  });
  return terms;
}

OracleResult oracle_amplitude(const FluxParam& flux, const PhotonIn& photon,
                              const PairOut& pair, int m_max, OracleTier tier,
                              const OracleOptions& opt) {
  if (m_max <= 0) {
    require_closed_form_kinematics(pair, photon);
    m_max = default_m_max(structure_params(pair.k_perp, pair.kp_perp,
                                           photon.kappa, pair.phi_perp,
                                           pair.phip_perp, photon.phi_k));
  }
  const std::vector<PartialWaveTerm> terms =
      oracle_terms(flux, photon, pair, m_max, tier, opt);
  std::vector<AmplitudeVector> values(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) values[i] = terms[i].value;
  OracleResult out;
  out.amplitude = pairwise_sum(values.data(), values.size());
  out.m_max = m_max;
  out.truncation_bound = truncation_bound(flux, photon, pair, m_max);
  if (opt.tolerance > 0.0 &&
      out.truncation_bound > opt.tolerance * out.amplitude.norm()) {
    throw NumericalError("oracle: m_max = " + std::to_string(m_max) +
                         " too small for the requested tolerance (bound " +
                         std::to_string(out.truncation_bound) + ")");
  }
  return out;
}

cplx g1_term(const FluxParam& flux, const PhotonIn& photon,
             const PairOut& pair, long m_bar, long mp_bar, OracleTier tier,
             const QuadratureConfig& quad) {
  const long reach = std::max(std::abs(m_bar), std::abs(mp_bar)) + 1;
  const Context c = make_context(flux, photon, pair, static_cast<int>(reach));
  const Labels l = labels(c, m_bar, mp_bar);
  if (l.s > 0) return 0.0;  // sgn - 1 = 0
  const Ord al{l.nu.n - 1, l.nu.sd};
  double w;
  if (tier == OracleTier::A) {
    w = analytic_w(c, al, l.nup, l.q + 1);
  } else {
    w = triple_bessel_integral(c.value(al), c.value(l.nup),
                               static_cast<double>(l.q + 1), c.k, c.kp,
                               c.kappa, quad);
  }
  return angular_phase(c, l) * (-2.0 * w);
}

cplx g1_t2_partial_sum(const FluxParam& flux, const PhotonIn& photon,
                       const PairOut& pair, int m_max) {
  const Context c = make_context(flux, photon, pair, m_max + 1);
  cplx sum = 0.0;
  for (long mb = -m_max; mb <= -1; ++mb) {
    for (long mpb = 0; mpb <= m_max; ++mpb) {
      const Labels l = labels(c, mb, mpb);
      const Ord al{l.nu.n - 1, l.nu.sd};
      sum += angular_phase(c, l) * (-2.0 * analytic_w(c, al, l.nup, l.q + 1));
    }
  }
  return sum;
}

cplx g1_t2_closed_form(const FluxParam& flux, const PhotonIn& photon,
                       const PairOut& pair) {
  require_closed_form_kinematics(pair, photon);
  const StructureParams sp =
      structure_params(pair.k_perp, pair.kp_perp, photon.kappa, pair.phi_perp,
                       pair.phip_perp, photon.phi_k);
  const double K = photon.kappa, d = flux.delta;
  const cplx eu = std::exp(kI * (pair.phi_perp - photon.phi_k));
  const cplx ev = std::exp(kI * (pair.phip_perp - photon.phi_k));
  const cplx phase = std::exp(
      kI * (static_cast<double>(flux.int_part) * (pair.phip_perp - pair.phi_perp) -
            kPi * d));
  return 4.0 * sp.D / (kPi * K * K) * sin_pi(d) * phase *
         std::pow(sp.a * sp.b, -d) * (1.0 / eu) / (1.0 - sp.a / eu) *
         (sp.b * ev) / (1.0 - sp.b * ev);
}

}  // namespace abpair
