#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abpair/amplitude.hpp"
#include "abpair/cross_section.hpp"
#include "abpair/errors.hpp"
#include "abpair/kinematics.hpp"
#include "abpair/parallel.hpp"
#include "abpair/verify.hpp"
#include "settings.hpp"

namespace {

using namespace abpair;
using abpair::cli::Settings;
using abpair::cli::UsageError;

constexpr const char* kUnits =
    "# units: natural (hbar = c = 1), momenta and energies in units of M";

//---------------------------------------------------------------------------//
// Tabular output
//---------------------------------------------------------------------------//

using Cell = std::variant<std::monostate, double, long, std::string>;
using Row = std::vector<std::pair<std::string, Cell>>;

std::string csv_cell(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(c));
    return buf;
  }
  if (std::holds_alternative<long>(c)) return std::to_string(std::get<long>(c));
  if (std::holds_alternative<std::string>(c)) {
    std::string s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
    return s;
  }
  return "";
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (!std::isfinite(v)) return nullptr;
    return v;
  }
  if (std::holds_alternative<long>(c)) return std::get<long>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

std::string render(const std::vector<Row>& rows, const std::string& format,
                   const std::string& kind) {
  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["kind"] = kind;
    doc["units"] = "natural (hbar = c = 1), momenta and energies in units of M";
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      for (const auto& [k, v] : r) j[k] = json_cell(v);
      list.push_back(j);
    }
    doc["rows"] = list;
    out << doc.dump(2) << "\n";
    return out.str();
  }
  out << "# schema=1\n" << kUnits << "\n";
  if (rows.empty()) return out.str();
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    out << (i ? "," : "") << rows[0][i].first;
  }
  out << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i ? "," : "") << csv_cell(r[i].second);
    }
    out << "\n";
  }
  return out.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

int column_of(const Row& r, const std::string& name) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].first == name) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::string script_path(const std::string& out) {
  const auto slash = out.find_last_of('/');
  const auto dot = out.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return out.substr(0, dot) + ".gp";
  }
  return out + ".gp";
}

void write_gnuplot(const std::string& data_path, const std::string& xcol,
                   const std::vector<std::string>& ycols, const Row& shape,
                   bool logx, bool logy) {
  std::ostringstream s;
  const auto slash = data_path.find_last_of('/');
  const std::string name =
      slash == std::string::npos ? data_path : data_path.substr(slash + 1);
  s << "set datafile separator ','\n"
    << "set datafile missing ''\n"
    << "set key autotitle columnhead\n"
    << "set xlabel '" << xcol << "'\n";
  if (logx) s << "set logscale x\n";
  if (logy) s << "set logscale y\n";
  s << "plot ";
  for (std::size_t i = 0; i < ycols.size(); ++i) {
    s << (i ? ", \\\n     " : "") << "'" << name << "' using "
      << column_of(shape, xcol) << ":" << column_of(shape, ycols[i])
      << " with linespoints";
  }
  s << "\n";
  emit(s.str(), script_path(data_path));
}

//---------------------------------------------------------------------------//
// Settings to physics inputs
//---------------------------------------------------------------------------//

struct Point {
  double flux = 0.3;
  double kappa = 3.0;
  double k_perp = 0.8;
  double k3 = 0.2;
  double mass = 1.0;
  double phi_perp = 0.4;
  double phip_perp = 2.1;
  double phi_k = 1.0;
  Polarization pol = Polarization::S;
};

Polarization parse_pol(const std::string& s) {
  const std::string v = Settings::normalize(s);
  if (v == "s") return Polarization::S;
  if (v == "p") return Polarization::P;
  throw UsageError("--pol must be s or p");
}

std::string format_of(const Settings& s) {
  const std::string f = Settings::normalize(s.str("format", "csv"));
  if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
  return f;
}

int jobs_of(const Settings& s) {
  const long j = s.integer("jobs", 1);
  if (j < 1 || j > 1024) throw UsageError("--jobs must be in [1, 1024]");
  return static_cast<int>(j);
}

Point point_of(const Settings& s) {
  Point p;
  if (s.has("delta") && s.has("flux")) {
    throw UsageError("give either --flux or --delta, not both");
  }
  if (s.has("delta")) {
    p.flux = s.num("delta", 0.0);
    if (!(p.flux >= 0.0 && p.flux < 1.0)) {
      throw PhysicsError(Violation::parameter_domain, "--delta must lie in [0, 1)");
    }
  } else {
    p.flux = s.num("flux", p.flux);
  }
  p.mass = s.num("mass", p.mass);
  p.kappa = s.num("kappa", p.kappa);
  p.k_perp = s.num("k-perp", p.k_perp);
  p.k3 = s.num("k3", p.k3);
  p.phi_perp = s.num("phi-perp", p.phi_perp);
  p.phip_perp = s.num("phip-perp", p.phip_perp);
  p.phi_k = s.num("phi-k", p.phi_k);
  p.pol = parse_pol(s.str("pol", "s"));
  for (double v : {p.flux, p.mass, p.kappa, p.k_perp, p.k3, p.phi_perp,
                   p.phip_perp, p.phi_k}) {
    if (!std::isfinite(v)) {
      throw PhysicsError(Violation::parameter_domain, "inputs must be finite");
    }
  }
  return p;
}

double alpha_of(const Settings& s) {
  const double a = s.num("alpha", kFineStructure);
  if (!(a > 0.0)) throw PhysicsError(Violation::parameter_domain, "alpha must be > 0");
  return a;
}

PhotonIn photon_of(const Point& p) {
  PhotonIn ph;
  ph.kappa = p.kappa;
  ph.phi_k = p.phi_k;
  ph.polarization = p.pol;
  return ph;
}

void add_inputs(Row& r, const Point& p) {
  const FluxParam f = decompose_flux(p.flux);
  r.emplace_back("flux", p.flux);
  r.emplace_back("delta", f.delta);
  r.emplace_back("kappa", p.kappa);
  r.emplace_back("k_perp", p.k_perp);
  r.emplace_back("k3", p.k3);
  r.emplace_back("phi_perp", p.phi_perp);
  r.emplace_back("phip_perp", p.phip_perp);
  r.emplace_back("phi_k", p.phi_k);
  r.emplace_back("mass", p.mass);
}

void add_complex(Row& r, const std::string& name, cplx z) {
  r.emplace_back(name + "_re", z.real());
  r.emplace_back(name + "_im", z.imag());
}

//---------------------------------------------------------------------------//
// Subcommands
//---------------------------------------------------------------------------//

int cmd_amplitude(const Settings& s) {
  const Point p = point_of(s);
  const FluxParam flux = decompose_flux(p.flux);
  const PhotonIn photon = photon_of(p);
  const PairOut pair =
      solve_pair(p.kappa, p.k_perp, p.k3, p.mass, p.phi_perp, p.phip_perp);
  const AmplitudeVector d = closed_form_amplitude(flux, photon, pair);
  const StructureParams sp = structure_params(
      pair.k_perp, pair.kp_perp, p.kappa, p.phi_perp, p.phip_perp, p.phi_k);
  Row r;
  add_inputs(r, p);
  r.emplace_back("kp_perp", pair.kp_perp);
  r.emplace_back("kp3", pair.kp3);
  add_complex(r, "d1", d.d1);
  add_complex(r, "d2", d.d2);
  add_complex(r, "dz", d.dz);
  r.emplace_back("a", sp.a);
  r.emplace_back("b", sp.b);
  r.emplace_back("D", sp.D);
  r.emplace_back("A", sp.A);
  r.emplace_back("B", sp.B);
  add_complex(r, "sigma_plus", sp.sigma_plus);
  add_complex(r, "sigma_minus", sp.sigma_minus);
  if (s.has("oracle")) {
    const std::string o = Settings::normalize(s.str("oracle", ""));
    OracleTier tier;
    if (o == "tiera" || o == "a") {
      tier = OracleTier::A;
    } else if (o == "tierb" || o == "b") {
      tier = OracleTier::B;
    } else {
      throw UsageError("--oracle must be tierA or tierB");
    }
    const long mmax = s.integer("mmax", 0);
    if (mmax < 0 || mmax > 190) throw UsageError("--mmax must be in [0, 190]");
    OracleOptions opt;
    opt.jobs = jobs_of(s);
    const OracleResult res = oracle_amplitude(flux, photon, pair,
                                              static_cast<int>(mmax), tier, opt);
    const AmplitudeVector diff{d.d1 - res.amplitude.d1, d.d2 - res.amplitude.d2,
                               d.dz - res.amplitude.dz};
    const double n = d.norm();
    r.emplace_back("oracle", std::string(tier == OracleTier::A ? "tierA" : "tierB"));
    r.emplace_back("m_max", static_cast<long>(res.m_max));
    r.emplace_back("oracle_residual", n > 0 ? diff.norm() / n : diff.norm());
    r.emplace_back("truncation_bound", res.truncation_bound);
  }
  emit(render({r}, format_of(s), "amplitude"), s.str("out", ""));
  return 0;
}

enum class Axis { k_perp, k3, phi_perp, phip_perp, delta, kappa };

Axis parse_axis(const std::string& a) {
  const std::string v = Settings::normalize(a);
  if (v == "k-perp") return Axis::k_perp;
  if (v == "k3") return Axis::k3;
  if (v == "phi-perp") return Axis::phi_perp;
  if (v == "phip-perp") return Axis::phip_perp;
  if (v == "delta") return Axis::delta;
  if (v == "kappa") return Axis::kappa;
  throw UsageError("--sweep axis must be one of k_perp, k3, phi_perp, "
                   "phip_perp, delta, kappa");
}

Point at(const Point& base, Axis axis, double v) {
  Point p = base;
  switch (axis) {
    case Axis::k_perp: p.k_perp = v; break;
    case Axis::k3: p.k3 = v; break;
    case Axis::phi_perp: p.phi_perp = v; break;
    case Axis::phip_perp: p.phip_perp = v; break;
    case Axis::delta: p.flux = std::floor(base.flux) + v; break;
    case Axis::kappa: p.kappa = v; break;
  }
  return p;
}

Row xsec_row(long index, const Point& p, double alpha, bool skip_invalid) {
  Row r;
  r.emplace_back("index", index);
  add_inputs(r, p);
  r.emplace_back("pol", std::string(p.pol == Polarization::S ? "s" : "p"));
  try {
    const FluxParam flux = decompose_flux(p.flux);
    const PhotonIn photon = photon_of(p);
    const PairOut pair =
        solve_pair(p.kappa, p.k_perp, p.k3, p.mass, p.phi_perp, p.phip_perp);
    require_closed_form_kinematics(pair, photon);
    const StructureParams sp = structure_params(
        pair.k_perp, pair.kp_perp, p.kappa, p.phi_perp, p.phip_perp, p.phi_k);
    const PolarizationDensity rho = polarization_density(sp, pair, flux);
    const double lam = p.pol == Polarization::S ? rho.lambda_s : rho.lambda_p;
    r.emplace_back("kp_perp", pair.kp_perp);
    r.emplace_back("lambda_s", rho.lambda_s);
    r.emplace_back("lambda_p", rho.lambda_p);
    r.emplace_back("dsigma", xsec_from_density(lam, pair, p.kappa, alpha));
    r.emplace_back("status", std::string("ok"));
    r.emplace_back("reason", std::string());
  } catch (const PhysicsError& e) {
    if (!skip_invalid) throw;
    for (const char* k : {"kp_perp", "lambda_s", "lambda_p", "dsigma"}) {
      r.emplace_back(k, Cell{});
    }
    r.emplace_back("status", std::string("skipped"));
    r.emplace_back("reason", std::string(to_string(e.violation())));
  }
  return r;
}

int cmd_xsec(const Settings& s) {
  const Point base = point_of(s);
  const double alpha = alpha_of(s);
  const int jobs = jobs_of(s);
  const std::string out = s.str("out", "");
  const bool gp = s.flag("gnuplot-script");
  if (gp && out.empty()) throw UsageError("--gnuplot-script needs --out");
  if (!s.has("sweep")) {
    for (const char* k : {"start", "stop", "steps"}) {
      if (s.has(k)) throw UsageError(std::string("--") + k + " needs --sweep");
    }
    const Row r = xsec_row(0, base, alpha, false);
    emit(render({r}, format_of(s), "xsec"), out);
    if (gp) write_gnuplot(out, "k_perp", {"dsigma"}, r, false, false);
    return 0;
  }
  const std::string axis_name = s.str("sweep", "");
  const Axis axis = parse_axis(axis_name);
  if (!s.has("start") || !s.has("stop")) {
    throw UsageError("--sweep needs --start and --stop");
  }
  const double start = s.num("start", 0), stop = s.num("stop", 0);
  const long steps = s.integer("steps", 11);
  if (!(start < stop)) throw UsageError("--start must be < --stop");
  if (steps < 2 || steps > 10000000) throw UsageError("--steps must be >= 2");
  if (axis == Axis::delta && (start < 0.0 || stop > 1.0)) {
    throw UsageError("delta sweep must stay inside [0, 1]");
  }
  std::vector<Row> rows(static_cast<std::size_t>(steps));
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    const double v = i + 1 == rows.size() ? stop : start + (stop - start) * t;
    rows[i] = xsec_row(static_cast<long>(i), at(base, axis, v), alpha, true);
  });
  emit(render(rows, format_of(s), "xsec"), out);
  if (gp) {
    std::string col = Settings::normalize(axis_name);
    std::replace(col.begin(), col.end(), '-', '_');
    write_gnuplot(out, col, {"dsigma"}, rows[0], false, false);
  }
  return 0;
}

int cmd_verify(const Settings& s) {
  VerifyOptions opt;
  opt.seed = static_cast<std::uint64_t>(s.integer("seed", kDefaultSeed));
  opt.jobs = jobs_of(s);
  if (s.has("tolerance")) {
    opt.tolerance = s.num("tolerance", 0);
    if (!(opt.tolerance > 0.0)) throw UsageError("--tolerance must be > 0");
  }
  const std::vector<IdentityReport> reports = run_verify_suite(opt);
  const std::string json = report_json(reports);
  emit(json, s.str("out", "verify_report.json"));
  if (format_of(s) == "json") {
    std::cout << json;
  } else {
    std::cout << report_table(reports);
  }
  std::vector<std::string> failed;
  for (const auto& r : reports) {
    if (!r.passed) failed.push_back(r.identity_name);
  }
  if (failed.empty()) return 0;
  std::cerr << "failing identities:";
  for (const auto& f : failed) std::cerr << " " << f;
  std::cerr << "\n";
  return 1;
}

double rel_dev(double full, double limit) {
  if (limit == 0.0) return full == 0.0 ? 0.0 : INFINITY;
  return std::abs(full / limit - 1.0);
}

void warn_all(const std::vector<std::string>& w) {
  for (const auto& m : w) std::cerr << "warning: " << m << "\n";
}

std::string join(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& m : w) out += (out.empty() ? "" : "; ") + m;
  return out;
}

Row nr_row(const Point& base, double kappa) {
  Point p = base;
  p.kappa = kappa;
  // Momenta scaled with the threshold momentum so that they stay << M.
  const double pt = std::sqrt(0.25 * kappa * kappa - p.mass * p.mass);
  p.k_perp = 0.6 * pt;
  p.k3 = 0.3 * pt;
  const FluxParam flux = decompose_flux(p.flux);
  const PhotonIn photon = photon_of(p);
  const PairOut pair =
      solve_pair(p.kappa, p.k_perp, p.k3, p.mass, p.phi_perp, p.phip_perp);
  const StructureParams sp = structure_params(
      pair.k_perp, pair.kp_perp, kappa, p.phi_perp, p.phip_perp, p.phi_k);
  const PolarizationDensity full = polarization_density(sp, pair, flux);
  const AmplitudeVector d = closed_form_amplitude(flux, photon, pair);
  const NrLimit nr = nr_limit(flux, photon, pair);
  warn_all(nr.warnings);
  const double m2 = p.mass * p.mass, k3sq = p.k3 * p.k3;
  Row r;
  r.emplace_back("regime", std::string("nr"));
  r.emplace_back("kappa", kappa);
  r.emplace_back("excess", kappa / (2.0 * p.mass) - 1.0);
  r.emplace_back("k_perp", pair.k_perp);
  r.emplace_back("k3", pair.k3);
  r.emplace_back("kp_perp", pair.kp_perp);
  r.emplace_back("lambda_s_full", full.lambda_s);
  r.emplace_back("lambda_s_limit", nr.density.lambda_s);
  r.emplace_back("dev_s", rel_dev(full.lambda_s, nr.density.lambda_s));
  r.emplace_back("lambda_p_full", full.lambda_p);
  r.emplace_back("lambda_p_limit", nr.density.lambda_p);
  r.emplace_back("dev_p", rel_dev(full.lambda_p, nr.density.lambda_p));
  r.emplace_back("d2_over_d_full", d.norm() > 0 ? std::abs(d.d2) / d.norm() : 0.0);
  r.emplace_back("p_over_s_full_scaled",
                 full.lambda_s > 0 ? full.lambda_p / full.lambda_s * m2 / k3sq : 0.0);
  r.emplace_back("p_over_s_limit_scaled",
                 nr.density.lambda_s > 0
                     ? nr.density.lambda_p / nr.density.lambda_s * m2 / k3sq
                     : 0.0);
  r.emplace_back("warnings", join(nr.warnings));
  return r;
}

Row ur_row(const Settings& s, const Point& base, double kappa) {
  Point p = base;
  p.kappa = kappa;
  p.phi_k = s.num("phi-k", 0.7);
  p.phi_perp = s.num("phi-perp", p.phi_k);
  p.phip_perp = s.num("phip-perp", p.phi_k);
  p.k3 = s.num("k3", 3.0);
  // Particle carries 30% of the photon energy.
  const double eps = 0.3 * kappa;
  const double kt2 = eps * eps - p.k3 * p.k3 - p.mass * p.mass;
  if (!(kt2 > 0.0)) {
    throw PhysicsError(Violation::no_pair_solution,
                       "no pair solution: k3 too large for this kappa");
  }
  p.k_perp = std::sqrt(kt2);
  const FluxParam flux = decompose_flux(p.flux);
  const PhotonIn photon = photon_of(p);
  const PairOut pair =
      solve_pair(p.kappa, p.k_perp, p.k3, p.mass, p.phi_perp, p.phip_perp);
  require_closed_form_kinematics(pair, photon);
  const StructureParams sp = structure_params(
      pair.k_perp, pair.kp_perp, kappa, p.phi_perp, p.phip_perp, p.phi_k);
  const PolarizationDensity full = polarization_density(sp, pair, flux);
  const UrLimit ur = ur_limit(sp, pair, photon, flux);
  warn_all(ur.warnings);
  Row r;
  r.emplace_back("regime", std::string("ur"));
  r.emplace_back("kappa", kappa);
  r.emplace_back("k_perp", pair.k_perp);
  r.emplace_back("k3", pair.k3);
  r.emplace_back("kp_perp", pair.kp_perp);
  r.emplace_back("a", sp.a);
  r.emplace_back("b", sp.b);
  r.emplace_back("a_over_b", sp.a / sp.b);
  r.emplace_back("sigma_ratio_limit", ur.sigma_minus / ur.sigma_plus);
  r.emplace_back("sigma_ratio_full", std::abs(sp.sigma_minus / sp.sigma_plus));
  r.emplace_back("lambda_s_full", full.lambda_s);
  r.emplace_back("lambda_s_limit", ur.density.lambda_s);
  r.emplace_back("dev_s", rel_dev(full.lambda_s, ur.density.lambda_s));
  r.emplace_back("lambda_p_full", full.lambda_p);
  r.emplace_back("lambda_p_limit", ur.density.lambda_p);
  r.emplace_back("dev_p", rel_dev(full.lambda_p, ur.density.lambda_p));
  r.emplace_back("warnings", join(ur.warnings));
  return r;
}

int cmd_limits(const Settings& s) {
  const std::string regime = Settings::normalize(s.str("regime", "nr"));
  if (regime != "nr" && regime != "ur") throw UsageError("--regime must be nr or ur");
  const Point base = point_of(s);
  std::vector<double> kappas;
  if (s.has("kappa")) {
    kappas.push_back(base.kappa);
  } else if (regime == "nr") {
    for (double e : {1e-2, 1e-3, 1e-4}) kappas.push_back(2.0 * base.mass * (1.0 + e));
  } else {
    for (double k : {1e2, 1e3}) kappas.push_back(k * base.mass);
  }
  std::vector<Row> rows(kappas.size());
  parallel_for(rows.size(), jobs_of(s), [&](std::size_t i) {
    rows[i] = regime == "nr" ? nr_row(base, kappas[i]) : ur_row(s, base, kappas[i]);
  });
  const std::string out = s.str("out", "");
  emit(render(rows, format_of(s), "limits"), out);
  if (s.flag("gnuplot-script")) {
    if (out.empty()) throw UsageError("--gnuplot-script needs --out");
    write_gnuplot(out, regime == "nr" ? "excess" : "kappa", {"dev_s", "dev_p"},
                  rows[0], true, true);
  }
  return 0;
}

//---------------------------------------------------------------------------//

struct Sub {
  CLI::App* app;
  std::map<std::string, std::string> raw;
  std::vector<std::pair<CLI::Option*, std::string>> opts;
  bool gnuplot = false;
  CLI::Option* gnuplot_opt = nullptr;
  std::string config;
};

void add(Sub& s, const std::string& key, const std::string& help) {
  CLI::Option* o = s.app->add_option("--" + key, s.raw[key], help);
  s.opts.emplace_back(o, key);
}

void add_physics(Sub& s) {
  add(s, "mass", "particle mass M (default 1)");
  add(s, "flux", "flux f in flux quanta (default 0.3)");
  add(s, "delta", "fractional flux in [0, 1), instead of --flux");
  add(s, "kappa", "photon momentum (default 3)");
  add(s, "k-perp", "particle transverse momentum (default 0.8)");
  add(s, "k3", "particle z momentum (default 0.2)");
  add(s, "phi-perp", "particle azimuth (default 0.4)");
  add(s, "phip-perp", "antiparticle azimuth (default 2.1)");
  add(s, "phi-k", "photon azimuth (default 1.0)");
  add(s, "pol", "photon polarization s|p (default s)");
  add(s, "alpha", "fine-structure constant (default 1/137.035999)");
}

void add_io(Sub& s) {
  add(s, "out", "output path (default stdout)");
  add(s, "format", "csv|json (default csv)");
  add(s, "seed", "random seed (default 0x5EED)");
  add(s, "jobs", "worker threads (default 1)");
  s.app->add_option("--config", s.config, "key=value settings file");
}

void add_gnuplot(Sub& s) {
  s.gnuplot_opt = s.app->add_flag("--gnuplot-script", s.gnuplot,
                                  "write a gnuplot script next to --out");
}

Settings collect(const Sub& s) {
  std::set<std::string> known;
  for (const auto& [o, k] : s.opts) known.insert(k);
  if (s.gnuplot_opt) known.insert("gnuplot-script");
  Settings out(known);
  if (!s.config.empty()) out.load_file(s.config);
  for (const auto& [o, k] : s.opts) {
    if (o->count() > 0) out.set(k, s.raw.at(k));
  }
  if (s.gnuplot_opt && s.gnuplot_opt->count() > 0) out.set("gnuplot-script", "true");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scalar pair production on a flux line: amplitudes, cross "
               "sections, limits and identity checks"};
  app.require_subcommand(1);

  Sub amp;
  amp.app = app.add_subcommand("amplitude", "amplitude at one point");
  add_physics(amp);
  add_io(amp);
  add(amp, "oracle", "cross-check with the partial-wave sum: tierA|tierB");
  add(amp, "mmax", "partial-wave cutoff (default from the tail bound)");

  Sub xs;
  xs.app = app.add_subcommand("xsec", "differential cross section, point or sweep");
  add_physics(xs);
  add_io(xs);
  add_gnuplot(xs);
  add(xs, "sweep", "axis: k_perp|k3|phi_perp|phip_perp|delta|kappa");
  add(xs, "start", "sweep start");
  add(xs, "stop", "sweep stop (inclusive)");
  add(xs, "steps", "number of grid points (>= 2, default 11)");

  Sub ver;
  ver.app = app.add_subcommand("verify", "run the identity suite");
  add_io(ver);
  add(ver, "tolerance", "override every identity tolerance");

  Sub lim;
  lim.app = app.add_subcommand("limits", "full vs limiting forms");
  add_physics(lim);
  add_io(lim);
  add_gnuplot(lim);
  add(lim, "regime", "nr|ur (default nr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (amp.app->parsed()) return cmd_amplitude(collect(amp));
    if (xs.app->parsed()) return cmd_xsec(collect(xs));
    if (ver.app->parsed()) return cmd_verify(collect(ver));
    if (lim.app->parsed()) return cmd_limits(collect(lim));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PhysicsError& e) {
    const std::string_view tag = to_string(e.violation());
    const std::string msg = e.what();
    if (msg.starts_with(tag)) {
      std::cerr << "error: " << msg << "\n";
    } else {
      std::cerr << "error: " << tag << ": " << msg << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
