"""Precision-parametric scalars.

Three precisions are supported and every kernel runs unchanged on each of them:

* ``SINGLE``   -- :class:`numpy.float32` scalars (24-bit mantissa)
* ``DOUBLE``   -- Python ``float`` / :class:`numpy.float64` (53-bit mantissa)
* ``EXTENDED`` -- mpmath floats in a private 128-bit context

Numeric literals inside the kernels are Python ints or dyadic floats, which
NumPy and mpmath treat as "weak" operands, so arithmetic never silently
changes precision.  Non-dyadic constants must be written as integer ratios
(``2 * x / 3``, not ``x * 0.6666``) or the extended path loses accuracy.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable

import mpmath
import numpy as np
from mpmath.ctx_mp_python import _mpf

from .errors import PrecisionMismatchError

EXTENDED_BITS = 128

mp = mpmath.MPContext()
mp.prec = EXTENDED_BITS


@dataclass(frozen=True)
class Precision:
    name: str
    mantissa_bits: int

    @property
    def eps(self) -> float:
        """Unit roundoff, 2**-p for a p-bit mantissa."""
        return math.ldexp(1.0, -self.mantissa_bits)

    def cast(self, x: Any) -> Any:
        """Round ``x`` to this precision (exact when widening)."""
        if hasattr(x, "val"):  # dual numbers are not cast, only their owners
            raise TypeError("cannot cast a dual number")
        if self.mantissa_bits == 24:
            return np.float32(float(x))
        if self.mantissa_bits == 53:
            return float(x)
        if isinstance(x, np.floating):
            x = float(x)
        return mp.mpf(x)

    def __str__(self) -> str:
        return self.name


SINGLE = Precision("single", 24)
DOUBLE = Precision("double", 53)
EXTENDED = Precision("extended", EXTENDED_BITS)

PRECISIONS = {p.name: p for p in (SINGLE, DOUBLE, EXTENDED)}


def get_precision(name: str | Precision) -> Precision:
    if isinstance(name, Precision):
        return name
    try:
        return PRECISIONS[name]
    except KeyError:
        raise ValueError(f"unknown precision {name!r}; choose from {sorted(PRECISIONS)}") from None


def precision_of(x: Any) -> Precision | None:
    """Precision of a scalar; ``None`` for Python ints (weak, precision-neutral)."""
    if isinstance(x, np.float32):
        return SINGLE
    if isinstance(x, (float, np.float64)):
        return DOUBLE
    if isinstance(x, _mpf):
        return EXTENDED
    if isinstance(x, (int, np.integer)):
        return None
    inner = getattr(x, "val", None)
    if inner is not None:
        return precision_of(inner)
    raise TypeError(f"unsupported scalar type {type(x).__name__}")


def common_precision(values: Iterable[Any]) -> Precision:
    """Single precision shared by ``values``; mixing is a contract violation."""
    found = None
    for v in values:
        p = precision_of(v)
        if p is None:
            continue
        if found is None:
            found = p
        elif p is not found:
            raise PrecisionMismatchError(f"mixed precisions: {found} and {p}")
    return DOUBLE if found is None else found


def to_float(x: Any) -> float:
    inner = getattr(x, "val", None)
    return float(x if inner is None else inner)
