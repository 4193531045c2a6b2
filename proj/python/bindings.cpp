#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abpair/amplitude.hpp"
#include "abpair/cross_section.hpp"
#include "abpair/errors.hpp"
#include "abpair/kinematics.hpp"
#include "abpair/specfun.hpp"
#include "abpair/verify.hpp"

namespace py = pybind11;
using namespace abpair;

namespace {

PhotonIn make_photon(double kappa, double phi_k, const std::string& pol) {
  PhotonIn p;
  p.kappa = kappa;
  p.phi_k = phi_k;
  if (pol == "s" || pol == "S") {
    p.polarization = Polarization::S;
  } else if (pol == "p" || pol == "P") {
    p.polarization = Polarization::P;
  } else {
    throw py::value_error("pol must be 's' or 'p'");
  }
  return p;
}

struct Point {
  FluxParam flux;
  PhotonIn photon;
  PairOut pair;
};

Point make_point(double flux, double kappa, double k_perp, double k3,
                 double mass, double phi_perp, double phip_perp, double phi_k,
                 const std::string& pol) {
  return {decompose_flux(flux), make_photon(kappa, phi_k, pol),
          solve_pair(kappa, k_perp, k3, mass, phi_perp, phip_perp)};
}

py::tuple as_tuple(const AmplitudeVector& d) {
  return py::make_tuple(d.d1, d.d2, d.dz);
}

py::dict as_dict(const PolarizationDensity& r) {
  py::dict d;
  d["lambda_s"] = r.lambda_s;
  d["lambda_p"] = r.lambda_p;
  return d;
}

#define POINT_ARGS                                                          \
  py::arg("flux"), py::arg("kappa"), py::arg("k_perp"), py::arg("k3"),      \
      py::arg("mass") = 1.0, py::arg("phi_perp") = 0.0,                     \
      py::arg("phip_perp") = 0.0, py::arg("phi_k") = 0.0, py::arg("pol") = "s"

}  // namespace

PYBIND11_MODULE(_abpair, m) {
  m.doc() = "Scalar pair production by a photon on an Aharonov-Bohm flux line";

  py::register_exception<PhysicsError>(m, "PhysicsError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  m.def("bessel_j", &bessel_j, py::arg("nu"), py::arg("x"));
  m.def(
      "phi_integral",
      [](double q, double z) { return phi_integral(q, z); }, py::arg("q"),
      py::arg("z"));
  m.def(
      "triple_bessel_integral",
      [](double mu, double nu, double lam, double b1, double b2, double c) {
        return triple_bessel_integral(mu, nu, lam, b1, b2, c);
      },
      py::arg("mu"), py::arg("nu"), py::arg("lam"), py::arg("b1"),
      py::arg("b2"), py::arg("c"));

  m.def(
      "decompose_flux",
      [](double f) {
        const FluxParam p = decompose_flux(f);
        return py::make_tuple(p.int_part, p.delta);
      },
      py::arg("f"), "Returns (int_part, delta).");
  m.def(
      "solve_pair",
      [](double kappa, double k_perp, double k3, double mass) {
        const PairOut p = solve_pair(kappa, k_perp, k3, mass);
        py::dict d;
        d["kp_perp"] = p.kp_perp;
        d["kp3"] = p.kp3;
        d["eps"] = p.eps;
        d["eps_bar"] = p.eps_bar;
        return d;
      },
      py::arg("kappa"), py::arg("k_perp"), py::arg("k3"), py::arg("mass") = 1.0);
  m.def(
      "structure_params",
      [](double k_perp, double kp_perp, double kappa_perp, double phi_perp,
         double phip_perp, double phi_k) {
        const StructureParams s = structure_params(k_perp, kp_perp, kappa_perp,
                                                   phi_perp, phip_perp, phi_k);
        py::dict d;
        d["a"] = s.a;
        d["b"] = s.b;
        d["D"] = s.D;
        d["A"] = s.A;
        d["B"] = s.B;
        d["sigma_plus"] = s.sigma_plus;
        d["sigma_minus"] = s.sigma_minus;
        return d;
      },
      py::arg("k_perp"), py::arg("kp_perp"), py::arg("kappa_perp"),
      py::arg("phi_perp") = 0.0, py::arg("phip_perp") = 0.0,
      py::arg("phi_k") = 0.0);
  m.def("selection_rule", &selection_rule, py::arg("m_bar"), py::arg("mp_bar"));

  m.def(
      "closed_form_amplitude",
      [](double flux, double kappa, double k_perp, double k3, double mass,
         double phi_perp, double phip_perp, double phi_k, const std::string& pol) {
        const Point p = make_point(flux, kappa, k_perp, k3, mass, phi_perp,
                                   phip_perp, phi_k, pol);
        return as_tuple(closed_form_amplitude(p.flux, p.photon, p.pair));
      },
      POINT_ARGS, "Returns (d1, d2, dz).");
  m.def(
      "oracle_amplitude",
      [](double flux, double kappa, double k_perp, double k3, double mass,
         double phi_perp, double phip_perp, double phi_k, const std::string& pol,
         int m_max, const std::string& tier, int jobs) {
        const Point p = make_point(flux, kappa, k_perp, k3, mass, phi_perp,
                                   phip_perp, phi_k, pol);
        OracleTier t;
        if (tier == "A" || tier == "tierA") {
          t = OracleTier::A;
        } else if (tier == "B" || tier == "tierB") {
          t = OracleTier::B;
        } else {
          throw py::value_error("tier must be 'A' or 'B'");
        }
        OracleOptions opt;
        opt.jobs = jobs;
        const OracleResult r = oracle_amplitude(p.flux, p.photon, p.pair, m_max, t, opt);
        py::dict d;
        d["amplitude"] = as_tuple(r.amplitude);
        d["m_max"] = r.m_max;
        d["truncation_bound"] = r.truncation_bound;
        return d;
      },
      POINT_ARGS, py::arg("m_max") = 0, py::arg("tier") = "A",
      py::arg("jobs") = 1);
  m.def(
      "polarization_density",
      [](double flux, double kappa, double k_perp, double k3, double mass,
         double phi_perp, double phip_perp, double phi_k, const std::string& pol) {
        const Point p = make_point(flux, kappa, k_perp, k3, mass, phi_perp,
                                   phip_perp, phi_k, pol);
        require_closed_form_kinematics(p.pair, p.photon);
        const StructureParams s = structure_params(
            p.pair.k_perp, p.pair.kp_perp, kappa, phi_perp, phip_perp, phi_k);
        return as_dict(polarization_density(s, p.pair, p.flux));
      },
      POINT_ARGS);
  m.def(
      "differential_xsec",
      [](double flux, double kappa, double k_perp, double k3, double mass,
         double phi_perp, double phip_perp, double phi_k, const std::string& pol,
         double alpha) {
        const Point p = make_point(flux, kappa, k_perp, k3, mass, phi_perp,
                                   phip_perp, phi_k, pol);
        return differential_xsec(p.flux, p.photon, p.pair, alpha).value;
      },
      POINT_ARGS, py::arg("alpha") = kFineStructure);
  m.def(
      "nr_limit",
      [](double flux, double kappa, double k_perp, double k3, double mass,
         double phi_perp, double phip_perp, double phi_k, const std::string& pol) {
        const Point p = make_point(flux, kappa, k_perp, k3, mass, phi_perp,
                                   phip_perp, phi_k, pol);
        const NrLimit r = nr_limit(p.flux, p.photon, p.pair);
        py::dict d = as_dict(r.density);
        d["amplitude"] = as_tuple(r.amplitude);
        d["warnings"] = r.warnings;
        return d;
      },
      POINT_ARGS);
  m.def(
      "ur_limit",
      [](double flux, double kappa, double k_perp, double k3, double mass,
         double phi_perp, double phip_perp, double phi_k, const std::string& pol) {
        const Point p = make_point(flux, kappa, k_perp, k3, mass, phi_perp,
                                   phip_perp, phi_k, pol);
        const StructureParams s = structure_params(
            p.pair.k_perp, p.pair.kp_perp, kappa, phi_perp, phip_perp, phi_k);
        const UrLimit r = ur_limit(s, p.pair, p.photon, p.flux);
        py::dict d = as_dict(r.density);
        d["sigma_plus"] = r.sigma_plus;
        d["sigma_minus"] = r.sigma_minus;
        d["warnings"] = r.warnings;
        return d;
      },
      POINT_ARGS);

  m.def(
      "run_verify",
      [](std::uint64_t seed, double tolerance) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.tolerance = tolerance;
        py::list out;
        for (const auto& r : run_verify_suite(opt)) {
          py::dict d;
          d["identity_name"] = r.identity_name;
          d["max_abs_residual"] = r.max_abs_residual;
          d["max_rel_residual"] = r.max_rel_residual;
          d["samples"] = r.samples;
          d["tolerance"] = r.tolerance;
          d["passed"] = r.passed;
          py::dict ex;
          for (const auto& [k, v] : r.extras) ex[py::str(k)] = v;
          d["extras"] = ex;
          d["notes"] = r.notes;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = kDefaultSeed, py::arg("tolerance") = 0.0);
}
