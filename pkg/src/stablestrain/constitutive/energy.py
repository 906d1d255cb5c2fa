"""Strain energies over E, written so they run on plain scalars and on duals.

The Neo-Hookean energy comes in three grades:

* ``standard``: J = sqrt(det(I + 2E)), then J^2 - 1 - 2 log J and log J - tr E.
  Both brackets are O(|E|^2) but are built from O(1) pieces.
* ``semistable``: J - 1 from the strain, log J = log1p(J - 1).  The O(1)
  cancellation is gone but log J - tr E still subtracts O(|E|) values.
* ``stable``: every bracket goes through log1pmx, so nothing cancels.
"""
from __future__ import annotations

from ..errors import InadmissibleStateError
from ..kinematics import StrainState, cauchy_green, invariants, j_helper, jm1_from_strain
from ..scalar_kernels import log, log1p_stable, log1pmx, sqrt
from ..tensor import SymTensor3
from .params import LameParams, MooneyRivlinParams

ENERGY_FORMS = ("standard", "semistable", "stable")


def _strain(x) -> SymTensor3:
    return x.E if isinstance(x, StrainState) else x


def _vol_bracket(jm1, order=None):
    # J^2 - 1 - 2 log J
    return jm1 * jm1 - 2 * log1pmx(jm1, order)


def _log_j_minus_tr(E: SymTensor3, order=None):
    # log J - tr E = (log(1 + x) - x + j) / 2 with x = j + 2 tr E = J^2 - 1
    j = j_helper(E)
    x = j + 2 * E.trace()
    if not x > -1:
        raise InadmissibleStateError("det(I + 2E) <= 0")
    return (log1pmx(x, order) + j) / 2


def nh_energy(E: SymTensor3, p: LameParams, form: str = "stable", series_order=None):
    """Coupled Neo-Hookean energy (lam/4)(J^2 - 1 - 2 log J) - mu (log J - tr E)."""
    E = _strain(E)
    if form == "standard":
        det_c = cauchy_green(E).det()
        if not det_c > 0:
            raise InadmissibleStateError("det(I + 2E) <= 0")
        J = sqrt(det_c)
        log_j = log(J)
        return p.lam / 4 * (J * J - 1 - 2 * log_j) - p.mu * (log_j - E.trace())
    if form == "semistable":
        jm1 = jm1_from_strain(E)
        log_j = log1p_stable(jm1)
        return p.lam / 4 * (jm1 * (jm1 + 2) - 2 * log_j) - p.mu * (log_j - E.trace())
    if form == "stable":
        jm1 = jm1_from_strain(E)
        return p.lam / 4 * _vol_bracket(jm1, series_order) - p.mu * _log_j_minus_tr(E, series_order)
    raise ValueError(f"energy form must be one of {ENERGY_FORMS}, got {form!r}")


def mr_energy(E: SymTensor3, p: MooneyRivlinParams, series_order=None):
    """Coupled Mooney-Rivlin energy.

    With I1(C) - 3 = 2 tr E and I2(C) - 3 = 4 tr E + 4 I2(E) the energy is
    (lam/4)(J^2 - 1 - 2 log J) - (mu1 + 2 mu2)(log J - tr E) + 2 mu2 I2(E).
    """
    E = _strain(E)
    jm1 = jm1_from_strain(E)
    return (
        p.lam / 4 * _vol_bracket(jm1, series_order)
        - (p.mu1 + 2 * p.mu2) * _log_j_minus_tr(E, series_order)
        + 2 * p.mu2 * invariants(E)[1]
    )


def coupled_energy(state, params, model: str = "nh", series_order=None):
    """Stable coupled energy of a strain state (or a bare E) for ``model`` in {nh, mr}."""
    if model == "nh":
        return nh_energy(_strain(state), params, "stable", series_order)
    if model == "mr":
        return mr_energy(_strain(state), params, series_order)
    raise ValueError(f"model must be 'nh' or 'mr', got {model!r}")


def volumetric_energy(E, bulk, series_order=None):
    """psi_vol = (kappa/4)(J^2 - 1 - 2 log J)."""
    return bulk / 4 * _vol_bracket(jm1_from_strain(_strain(E)), series_order)
