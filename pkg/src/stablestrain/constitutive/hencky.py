"""Logarithmic (Hencky) strain, material E_H = log(U) and spatial e_H = log(v)."""
from __future__ import annotations

from ..errors import DomainError
from ..kinematics import StrainState, cauchy_green
from ..scalar_kernels import log
from ..spectral import EigenDecomposition3, eig_sym3, principal_log_stretches, spectral_sum
from ..tensor import SymTensor3
from .common import check_form

_CONFIGS = ("material", "spatial")


def hencky_strain(eig: EigenDecomposition3, config: str = "material", form: str = "stable") -> SymTensor3:
    """Hencky strain assembled from an eigendecomposition.

    stable: ``eig`` decomposes E (material) or e (spatial), and the result is
    1/2 sum log1p(2 lam_i) N_i N_i^T.  unstable: ``eig`` decomposes C or b,
    and the result is 1/2 sum log(lam_i) N_i N_i^T.
    """
    if config not in _CONFIGS:
        raise ValueError(f"configuration must be one of {_CONFIGS}, got {config!r}")
    check_form(form)
    if form == "stable":
        return spectral_sum(principal_log_stretches(eig), eig.vectors)
    for lam in eig.values:
        if not lam > 0:
            raise DomainError(f"Cauchy-Green eigenvalue {lam} is not positive")
    return spectral_sum([log(lam) / 2 for lam in eig.values], eig.vectors)


def hencky(state: StrainState, config: str = "material", form: str = "stable") -> SymTensor3:
    """Hencky strain of a strain state; decomposes the tensor ``form`` calls for."""
    strain = state.E if config == "material" else state.e
    target = strain if form == "stable" else cauchy_green(strain)
    return hencky_strain(eig_sym3(target), config, form)
