import math

import pytest

import abpair

POINT = dict(flux=0.3, kappa=3.0, k_perp=0.8, k3=0.2, phi_perp=0.4, phip_perp=2.1, phi_k=1.0)


def test_bessel_values():
    assert abpair.bessel_j(0.0, 0.0) == 1.0
    assert abpair.bessel_j(0.5, math.pi / 2) == pytest.approx(2 / math.pi, rel=1e-14)


def test_phi_integral():
    assert abpair.phi_integral(0, 0) == pytest.approx(2 * math.pi)
    assert abs(abpair.phi_integral(1, 0)) < 1e-12


def test_flux_split():
    assert abpair.decompose_flux(2.7) == (2, pytest.approx(0.7))


def test_closed_form_matches_oracle():
    d = abpair.closed_form_amplitude(**POINT)
    o = abpair.oracle_amplitude(**POINT)
    diff = math.sqrt(sum(abs(x - y) ** 2 for x, y in zip(d, o["amplitude"])))
    norm = math.sqrt(sum(abs(x) ** 2 for x in d))
    assert diff < 1e-11 * norm
    assert o["m_max"] > 0


def test_cross_section_positive_and_zero_at_integer_flux():
    assert abpair.differential_xsec(**POINT) > 0
    assert abpair.differential_xsec(**{**POINT, "flux": 1.0}) == 0.0
    rho = abpair.polarization_density(**{**POINT, "k3": 0.0})
    assert rho["lambda_p"] == 0.0


def test_structure_params():
    k = math.cos(math.pi / 6) * math.sin(math.pi / 6)
    s = abpair.structure_params(k, k, 1.0)
    assert s["a"] == pytest.approx(1 / math.sqrt(3), rel=1e-15)
    assert s["D"] == pytest.approx(2.0, rel=1e-14)


def test_physics_errors_are_value_errors():
    with pytest.raises(abpair.PhysicsError):
        abpair.differential_xsec(**{**POINT, "kappa": 1.5})
    with pytest.raises(ValueError):
        abpair.closed_form_amplitude(**{**POINT, "kappa": 1.5})


def test_limits():
    nr = abpair.nr_limit(flux=0.3, kappa=2.002, k_perp=0.02, k3=0.01)
    assert nr["amplitude"][1] == 0
    assert nr["warnings"] == []
    kappa, eps = 1000.0, 300.0
    ur = abpair.ur_limit(flux=0.3, kappa=kappa, k_perp=math.sqrt(eps**2 - 10), k3=3.0,
                         phi_perp=0.7, phip_perp=0.7, phi_k=0.7)
    assert ur["lambda_s"] > 0


def test_verify_suite():
    reports = abpair.run_verify()
    assert len(reports) == 5
    assert all(r["passed"] for r in reports)
    strict = abpair.run_verify(tolerance=1e-15)
    assert not any(r["passed"] for r in strict)
