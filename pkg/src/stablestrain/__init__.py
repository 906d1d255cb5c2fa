"""Finite-strain hyperelastic kernels with numerically stable and standard forms.

Every kernel takes the displacement gradient H (or strains derived from it)
and runs unchanged in single (``numpy.float32``), double (``float``) and
extended (128-bit mpmath) precision.
"""
from . import autodiff, constitutive, kinematics, scalar_kernels, spectral
from .autodiff import Dual, energy_and_grad, grad_energy
from .errors import (
    DomainError,
    InadmissibleStateError,
    PrecisionMismatchError,
    SingularJacobianError,
    UndefinedRelativeError,
)
from .kinematics import StrainState
from .precision import DOUBLE, EXTENDED, SINGLE, Precision, get_precision
from .spectral import EigenDecomposition3, eig_sym3
from .tensor import SymTensor3

__version__ = "0.1.0"

__all__ = [
    "DOUBLE",
    "DomainError",
    "Dual",
    "EXTENDED",
    "EigenDecomposition3",
    "InadmissibleStateError",
    "Precision",
    "PrecisionMismatchError",
    "SINGLE",
    "SingularJacobianError",
    "StrainState",
    "SymTensor3",
    "UndefinedRelativeError",
    "autodiff",
    "constitutive",
    "eig_sym3",
    "energy_and_grad",
    "get_precision",
    "grad_energy",
    "kinematics",
    "scalar_kernels",
    "spectral",
]
