"""Extended-precision reference evaluation and the relative-error protocol.

A quantity is any callable ``quantity(H, precision)`` returning a scalar, a
:class:`SymTensor3`, a :class:`StressResult` or a sequence of those.  The
relative error of a quantity at ``eps * H`` is the Frobenius norm of the
difference between the test-precision evaluation and an extended-precision
evaluation, divided by the norm of the latter.

Input rounding: ``eps * H`` is formed in double, rounded to the precision
under test, and that rounded input is promoted exactly for the reference.
Both evaluations therefore see the same input and the error measures the
kernel, not the input representation.

Sampling: directions are drawn from NumPy's PCG64 generator seeded with
``SeedSequence([seed, index])``; normal deviates come from NumPy's ziggurat
``standard_normal``.  Streams are reproducible for a given NumPy version.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from .errors import UndefinedRelativeError
from .precision import EXTENDED, Precision, get_precision, mp
from .tensor import SymTensor3

Quantity = Callable[[Any, Precision], Any]


@dataclass(frozen=True)
class SampleSpec:
    seed: int
    eps_grid: tuple
    precision_under_test: Precision

    def __post_init__(self):
        grid = tuple(float(e) for e in self.eps_grid)
        if not grid:
            raise ValueError("empty eps grid")
        if not all(0 < e < 1 for e in grid):
            raise ValueError("eps values must lie in (0, 1)")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("eps grid must be strictly increasing")
        object.__setattr__(self, "eps_grid", grid)
        object.__setattr__(self, "precision_under_test", get_precision(self.precision_under_test))

    @classmethod
    def log_grid(cls, seed: int, eps_min: float, eps_max: float, samples: int, precision) -> "SampleSpec":
        if samples < 2:
            raise ValueError("need at least 2 samples")
        if not 0 < eps_min < eps_max < 1:
            raise ValueError("need 0 < eps_min < eps_max < 1")
        grid = np.logspace(math.log10(eps_min), math.log10(eps_max), samples)
        grid[0], grid[-1] = eps_min, eps_max
        return cls(seed, tuple(float(e) for e in grid), precision)


def sample_direction(seed: int, index: int = 0) -> list[list[float]]:
    """|standard normal| 3x3 matrix with unit Frobenius norm, a pure function of (seed, index)."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), int(index)])))
    h = np.abs(rng.standard_normal((3, 3)))
    h /= np.linalg.norm(h)
    return [[float(x) for x in row] for row in h]


def scaled_input(H, eps: float, precision) -> Any:
    """eps * H formed in double and rounded to ``precision``; H may be a scalar or a 3x3 nest."""
    prec = get_precision(precision)
    if isinstance(H, (int, float)):
        return prec.cast(float(eps) * float(H))
    return [[prec.cast(float(eps) * float(h)) for h in row] for row in H]


def promote(x: Any) -> Any:
    """Exact promotion of a test-precision input to extended precision."""
    if isinstance(x, (list, tuple)):
        return [promote(v) for v in x]
    return EXTENDED.cast(x)


def flatten(value: Any) -> list:
    """All entries of a result, with symmetric tensors expanded to 9 entries."""
    tensor = getattr(value, "tensor", None)
    if tensor is not None:
        value = tensor
    if isinstance(value, SymTensor3):
        return [x for row in value.matrix() for x in row]
    if isinstance(value, (list, tuple)):
        return [x for v in value for x in flatten(v)]
    return [value]


def _exact(x):
    return mp.mpf(float(x)) if isinstance(x, np.floating) else mp.mpf(x)


def frobenius(value: Any):
    return mp.sqrt(mp.fsum(_exact(x) ** 2 for x in flatten(value)))


def relative_difference(test: Any, ref: Any) -> float:
    """||test - ref|| / ||ref|| evaluated in extended precision."""
    a, b = flatten(test), flatten(ref)
    if len(a) != len(b):
        raise ValueError("test and reference results have different shapes")
    ref_norm = frobenius(b)
    if ref_norm == 0:
        raise UndefinedRelativeError("reference norm is zero")
    diff = mp.sqrt(mp.fsum((_exact(x) - _exact(y)) ** 2 for x, y in zip(a, b)))
    return float(diff / ref_norm)


def rel_error(quantity: Quantity, H, eps: float, precision, reference: Quantity | None = None) -> float:
    """Relative error of ``quantity`` at eps * H in ``precision`` against extended precision.

    ``reference`` defaults to ``quantity`` itself; pass a different callable
    when the reference must come from another formula (for example an exact
    closed form).
    """
    prec = get_precision(precision)
    x = scaled_input(H, eps, prec)
    test = quantity(x, prec)
    ref = (reference or quantity)(promote(x), EXTENDED)
    return relative_difference(test, ref)


def median(values: Sequence[float]) -> float:
    return float(np.median(np.asarray(values, dtype=float)))
