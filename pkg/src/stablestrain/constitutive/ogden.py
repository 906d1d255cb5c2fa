"""Decoupled Ogden model: isochoric coefficients s_i, stress and energy.

The stable coefficients work from the eigen-system of E, with log-stretches
l_i = log1p(2 lam_i^E) / 2 and stretch powers lam_i^alpha - 1 = expm1(alpha l_i).
The unstable ones work from the eigen-system of C = I + 2E and raw stretches.
"""
from __future__ import annotations

from ..kinematics import StrainState, cauchy_green, jm1_unstable
from ..scalar_kernels import exp, expm1_stable, expm1mx, log, log1p_stable, sqrt
from ..spectral import EigenDecomposition3, eig_sym3, principal_log_stretches, spectral_sum
from .common import StressResult, check_form
from .params import OgdenParams


def _stable_coefficients(eig_e: EigenDecomposition3, jm1, p: OgdenParams):
    ell = principal_log_stretches(eig_e)
    log_j = log1p_stable(jm1)
    s = [0, 0, 0]
    for mu, alpha in p.terms:
        m = [expm1_stable(alpha * l) for l in ell]
        scale = mu * exp(-alpha * log_j / 3) / 3
        s[0] = s[0] + scale * (2 * m[0] - m[1] - m[2])
        s[1] = s[1] + scale * (2 * m[1] - m[0] - m[2])
        s[2] = s[2] + scale * (2 * m[2] - m[0] - m[1])
    return tuple(si / (1 + 2 * lam) for si, lam in zip(s, eig_e.values))


def _unstable_coefficients(eig_c: EigenDecomposition3, jm1, p: OgdenParams):
    # s_i = J^(-1/3) / lam_i * (delta_ik - lamb_k / (3 lamb_i)) dpsi/dlamb_k, regrouped as
    # J^(-1/3) / (3 lam_i lamb_i) * (2 w_i - w_j - w_k) with w_k = lamb_k dpsi/dlamb_k
    stretch = [sqrt(c) for c in eig_c.values]
    j_m13 = exp(-log(1 + jm1) / 3)
    bar = [j_m13 * lam for lam in stretch]
    w = [0, 0, 0]
    for mu, alpha in p.terms:
        for k in range(3):
            w[k] = w[k] + mu * exp(alpha * log(bar[k]))
    return (
        j_m13 / (3 * stretch[0] * bar[0]) * (2 * w[0] - w[1] - w[2]),
        j_m13 / (3 * stretch[1] * bar[1]) * (2 * w[1] - w[0] - w[2]),
        j_m13 / (3 * stretch[2] * bar[2]) * (2 * w[2] - w[0] - w[1]),
    )


def ogden_coefficients(eig: EigenDecomposition3, jm1, p: OgdenParams, form: str = "stable") -> tuple:
    """Principal isochoric stress coefficients (s_1, s_2, s_3).

    ``form="stable"``: ``eig`` is the decomposition of E and ``jm1`` is the
    stable J - 1.  ``form="unstable"``: ``eig`` is the decomposition of
    C = I + 2E and ``jm1`` is det(I + H) - 1.
    """
    check_form(form)
    if not jm1 > -1:
        raise ValueError(f"J - 1 = {jm1} <= -1")
    if form == "stable":
        return _stable_coefficients(eig, jm1, p)
    return _unstable_coefficients(eig, jm1, p)


def ogden_iso_stress(eig: EigenDecomposition3, jm1, p: OgdenParams, form: str = "stable") -> StressResult:
    """S_iso = sum_i s_i N_i N_i^T (initial configuration only)."""
    s = ogden_coefficients(eig, jm1, p, form)
    return StressResult(spectral_sum(s, eig.vectors), "initial", form)


def ogden_stress(state: StrainState, p: OgdenParams, form: str = "stable") -> StressResult:
    """Isochoric Ogden stress straight from a strain state."""
    check_form(form)
    state.check_admissible()
    if form == "stable":
        return ogden_iso_stress(eig_sym3(state.E), state.jm1, p, form)
    return ogden_iso_stress(eig_sym3(cauchy_green(state.E)), jm1_unstable(state.H), p, form)


def ogden_iso_energy(eig_e: EigenDecomposition3, p: OgdenParams):
    """psi_iso = sum_j mu_j/alpha_j [ (sum_i lam_i^alpha_j) J^(-alpha_j/3) - 3 ].

    With d_i = l_i - (l_1 + l_2 + l_3)/3 the deviatoric log-stretches, each
    bracket equals sum_i (exp(alpha d_i) - 1 - alpha d_i) because the d_i sum
    to zero, so the energy is evaluated through expm1mx without cancelling
    O(1) or O(strain) terms, in value or in derivative.
    """
    ell = principal_log_stretches(eig_e)
    dev = (
        (2 * ell[0] - ell[1] - ell[2]) / 3,
        (2 * ell[1] - ell[0] - ell[2]) / 3,
        (2 * ell[2] - ell[0] - ell[1]) / 3,
    )
    total = 0
    for mu, alpha in p.terms:
        total = total + mu / alpha * (expm1mx(alpha * dev[0]) + expm1mx(alpha * dev[1]) + expm1mx(alpha * dev[2]))
    return total
