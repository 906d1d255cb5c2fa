"""Coupled Neo-Hookean and Mooney-Rivlin stresses.

Stable forms replace J^2 - 1 by Jm1 (Jm1 + 2), I - C^{-1} by 2 C^{-1} E and
b - I by 2 e.  Unstable forms follow the textbook expressions with
J = det(I + H), C^{-1} = adj(C) / det(C) and b = I + 2e formed explicitly.
"""
from __future__ import annotations

from ..kinematics import StrainState, inverse_unstable, invariants
from ..tensor import sym_product
from .common import StressResult, check_config, check_form
from .params import LameParams, MooneyRivlinParams


def _volumetric_factor(state: StrainState, lam, form: str):
    # (lambda / 2) (J^2 - 1)
    if form == "stable":
        jm1 = state.jm1
        return lam * jm1 * (jm1 + 2) / 2
    j = state.J_unstable
    return lam * (j * j - 1) / 2


def nh_coupled_stress(state: StrainState, p: LameParams, config: str = "initial", form: str = "stable") -> StressResult:
    check_config(config)
    check_form(form)
    state.check_admissible()
    vol = _volumetric_factor(state, p.lam, form)
    if config == "initial":
        if form == "stable":
            c_inv = state.C_inv
            s = vol * c_inv + 2 * p.mu * sym_product(c_inv, state.E)
        else:
            c_inv = inverse_unstable(state.C)
            s = vol * c_inv + p.mu * (-c_inv).shift(1)
    else:
        if form == "stable":
            s = (2 * p.mu * state.e).shift(vol)
        else:
            s = (p.mu * state.b.shift(-1)).shift(vol)
    return StressResult(s, config, form)


def mr_coupled_stress(state: StrainState, p: MooneyRivlinParams, config: str = "initial", form: str = "stable") -> StressResult:
    check_config(config)
    check_form(form)
    state.check_admissible()
    vol = _volumetric_factor(state, p.lam, form)
    mu1, mu2 = p.mu1, p.mu2
    if config == "initial":
        if form == "stable":
            c_inv, E = state.C_inv, state.E
            s = (
                vol * c_inv
                + 2 * (mu1 + 2 * mu2) * sym_product(c_inv, E)
                + 2 * mu2 * (-E).shift(E.trace())
            )
        else:
            C = state.C
            c_inv = inverse_unstable(C)
            s = (
                vol * c_inv
                + mu1 * (-c_inv).shift(1)
                + mu2 * (-2 * c_inv - C).shift(C.trace())
            )
    else:
        if form == "stable":
            e, b = state.e, state.b
            s = (
                2 * (mu1 + 2 * mu2) * e
                + 2 * mu2 * sym_product((-e).shift(e.trace()), b)
            ).shift(vol)
        else:
            b = state.b
            i1b = invariants(b)[0]
            s = (
                mu1 * b.shift(-1)
                + mu2 * (i1b * b - b.square()).shift(-2)
            ).shift(vol)
    return StressResult(s, config, form)
