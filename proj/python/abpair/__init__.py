"""Scalar pair production by a linearly polarized photon on a flux line."""

from ._abpair import (
    NumericalError,
    PhysicsError,
    bessel_j,
    closed_form_amplitude,
    decompose_flux,
    differential_xsec,
    nr_limit,
    oracle_amplitude,
    phi_integral,
    polarization_density,
    run_verify,
    selection_rule,
    solve_pair,
    structure_params,
    triple_bessel_integral,
    ur_limit,
)

__all__ = [
    "NumericalError",
    "PhysicsError",
    "bessel_j",
    "closed_form_amplitude",
    "decompose_flux",
    "differential_xsec",
    "nr_limit",
    "oracle_amplitude",
    "phi_integral",
    "polarization_density",
    "run_verify",
    "selection_rule",
    "solve_pair",
    "structure_params",
    "triple_bessel_integral",
    "ur_limit",
]
