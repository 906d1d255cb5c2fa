"""Volumetric/isochoric split: pressure, volumetric stress, Neo-Hookean and
Mooney-Rivlin isochoric stresses.

Powers of J are always exp(c * log J); the stable path takes log J from
log1p(J - 1), the unstable path from log(det(I + H)).
"""
from __future__ import annotations

from ..errors import DomainError
from ..kinematics import StrainState, deviatoric, inverse_unstable, invariants
from ..scalar_kernels import exp, log, log1p_stable
from ..tensor import SymTensor3, sym_product
from .common import StressResult, check_config, check_form


def volumetric_pressure(jm1, bulk):
    """p = -dpsi_vol/dJ = -(kappa / 2J) Jm1 (Jm1 + 2) for psi_vol = kappa/4 (J^2 - 1 - 2 log J)."""
    if not jm1 > -1:
        raise DomainError(f"J - 1 = {jm1} <= -1")
    return -bulk * jm1 * (jm1 + 2) / (2 * (1 + jm1))


def volumetric_stress(state: StrainState, p_hydro, config: str = "initial") -> StressResult:
    """S_vol = -p J C^{-1}; tau_vol = -p J I."""
    check_config(config)
    state.check_admissible()
    scale = -p_hydro * (1 + state.jm1)
    if config == "initial":
        return StressResult(scale * state.C_inv, config, "stable")
    return StressResult(SymTensor3.zeros().shift(scale), config, "stable")


def _log_j(state: StrainState, form: str):
    if form == "stable":
        return log1p_stable(state.jm1)
    return log(state.J_unstable)


def nh_iso_stress(state: StrainState, mu, config: str = "initial", form: str = "stable") -> StressResult:
    check_config(config)
    check_form(form)
    state.check_admissible()
    j23 = exp(-2 * _log_j(state, form) / 3)
    if form == "stable":
        if config == "initial":
            s = 2 * mu * j23 * sym_product(state.C_inv, deviatoric(state.E))
        else:
            s = 2 * mu * j23 * deviatoric(state.e)
    else:
        if config == "initial":
            C = state.C
            s = mu * j23 * (-invariants(C)[0] / 3 * inverse_unstable(C)).shift(1)
        else:
            b = state.b
            s = mu * j23 * b.shift(-invariants(b)[0] / 3)
    return StressResult(s, config, form)


def mr_iso_stress(state: StrainState, p, config: str = "initial", form: str = "stable") -> StressResult:
    """Mooney-Rivlin isochoric stress; reads ``p.mu1`` and ``p.mu2``."""
    check_config(config)
    check_form(form)
    state.check_admissible()
    mu1, mu2 = p.mu1, p.mu2
    lj = _log_j(state, form)
    j23 = exp(-2 * lj / 3)
    j43 = exp(-4 * lj / 3)
    if form == "stable":
        strain = state.E if config == "initial" else state.e
        i1, i2, _ = invariants(strain)
        dev = deviatoric(strain)
        shear = 2 * mu2 * j43 * (-strain).shift(i1)
        coupling = -4 * mu2 * j43 * (i1 + 2 * i2) / 3
        if config == "initial":
            c_inv = state.C_inv
            s = (
                2 * (mu1 * j23 + 2 * mu2 * j43) * sym_product(c_inv, dev)
                + shear
                + coupling * c_inv
            )
        else:
            s = (
                2 * (mu1 * j23 + 2 * mu2 * j43) * dev
                + sym_product(shear, state.b)
            ).shift(coupling)
    else:
        if config == "initial":
            C = state.C
            i1, i2, _ = invariants(C)
            c_inv = inverse_unstable(C)
            s = (
                mu1 * j23 * (-i1 / 3 * c_inv).shift(1)
                + mu2 * j43 * (-C - 2 * i2 / 3 * c_inv).shift(i1)
            )
        else:
            b = state.b
            i1, i2, _ = invariants(b)
            s = (
                mu1 * j23 * b.shift(-i1 / 3)
                + mu2 * j43 * (i1 * b - b.square()).shift(-2 * i2 / 3)
            )
    return StressResult(s, config, form)
