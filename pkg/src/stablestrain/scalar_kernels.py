"""Elementary functions and cancellation-free kernels, generic over precision.

Every function dispatches on the scalar type (``numpy.float32``, ``float``,
128-bit mpmath float and, once :mod:`stablestrain.autodiff` is imported,
dual numbers), so the same formula runs at every precision.
"""
from __future__ import annotations

import math
from functools import singledispatch

import numpy as np
from mpmath.ctx_mp_python import _mpf

from .errors import DomainError
from .precision import mp, precision_of

DEFAULT_SERIES_ORDER = 6
# |x/(2+x)| band in which an explicit series order is honoured.
SERIES_BAND = 0.05
# beyond |x| = 0.5 the subtraction log1p(x) - x loses at most ~3 bits
LOG1PMX_FALLBACK = 0.5
EXPM1MX_SERIES = 0.5
_MAX_TERMS = 400


def _elementary(name: str, np_name: str | None = None, mp_name: str | None = None):
    math_fn = getattr(math, name)
    np_fn = getattr(np, np_name or name)
    mp_fn = getattr(mp, mp_name or name)

    @singledispatch
    def fn(x):
        return math_fn(x)

    fn.register(np.float32, lambda x: np_fn(x))
    fn.register(_mpf, lambda x: mp_fn(x))
    fn.__name__ = fn.__qualname__ = name
    fn.__doc__ = f"Precision-preserving ``{name}``."
    return fn


sqrt = _elementary("sqrt")
exp = _elementary("exp")
log = _elementary("log")
tanh = _elementary("tanh")
atanh = _elementary("atanh", "arctanh")
_platform_log1p = _elementary("log1p")
_platform_expm1 = _elementary("expm1")


def unit_roundoff(x) -> float:
    return precision_of(x).eps


def log1p_artanh(x):
    """log(1 + x) via 2 artanh(x / (2 + x)).

    Outside (-1/2, 1) the plain log(1 + x) is used: for x >= 1 nothing
    cancels, and for -1 < x <= -1/2 the sum 1 + x is exact (Sterbenz) while
    artanh would amplify rounding near its pole.
    """
    if x <= -1:
        raise DomainError(f"log1p undefined for x = {x} <= -1")
    if x >= 1 or 2 * x <= -1:
        return log(1 + x)
    return 2 * atanh(x / (2 + x))


def expm1_tanh(x):
    """exp(x) - 1 via 2 tanh(x/2) / (1 - tanh(x/2)) for |x| < 1, else exp(x) - 1."""
    if abs(x) >= 1:
        return exp(x) - 1
    t = tanh(x / 2)
    return 2 * t / (1 - t)


@singledispatch
def log1p_stable(x, *, platform: bool = True):
    """Accurate log(1 + x) for x > -1.

    Delegates to the math library unless ``platform=False``, in which case
    the hyperbolic-tangent identity is used.
    """
    if x <= -1:
        raise DomainError(f"log1p undefined for x = {x} <= -1")
    return _platform_log1p(x) if platform else log1p_artanh(x)


@singledispatch
def expm1_stable(x, *, platform: bool = True):
    """Accurate exp(x) - 1."""
    return _platform_expm1(x) if platform else expm1_tanh(x)


def _series_terms(r, eps: float) -> int:
    # terms needed for r**(2n) to drop below the unit roundoff
    r2 = float(r) ** 2
    if r2 == 0.0:
        return 1
    n = math.ceil(math.log(eps) / math.log(r2))
    return max(1, min(n, _MAX_TERMS))


def _atanh_tail(r, n_terms: int):
    # sum_{n=1}^{N} r**(2n+1) / (2n+1), smallest terms first
    r2 = r * r
    powers = []
    p = r * r2
    for _ in range(n_terms):
        powers.append(p)
        p = p * r2
    total = powers[-1] / (2 * n_terms + 1)
    for n in range(n_terms - 1, 0, -1):
        total = total + powers[n - 1] / (2 * n + 1)
    return total


@singledispatch
def log1pmx(x, order: int | None = None):
    """log(1 + x) - x without subtracting O(x) quantities.

    Near zero the artanh series
    ``-x**2/(2+x) + 2 * sum_{n=1}^{order} (x/(2+x))**(2n+1) / (2n+1)`` is used.
    ``order`` fixes the number of summed terms while ``|x/(2+x)| <= 0.05``;
    with ``order=None`` the series is summed until the terms drop below the
    unit roundoff of ``x``.  For ``0.05 < |x/(2+x)|`` and ``|x| <= 0.5`` the
    series is always summed to convergence, and for ``|x| > 0.5`` the direct
    difference ``log1p(x) - x`` is accurate.
    """
    if x <= -1:
        raise DomainError(f"log1pmx undefined for x = {x} <= -1")
    if order is not None and order < 1:
        raise ValueError("series order must be >= 1")
    if abs(x) > LOG1PMX_FALLBACK:
        return log1p_stable(x) - x
    r = x / (2 + x)
    if order is None or abs(r) > SERIES_BAND:
        n_terms = _series_terms(r, unit_roundoff(x))
    else:
        n_terms = order
    return 2 * _atanh_tail(r, n_terms) - x * r


def log1pmx_term(x, n: int):
    """The n-th summand 2 r**(2n+1) / (2n+1) of the log1pmx series, r = x/(2+x)."""
    r = x / (2 + x)
    return 2 * r ** (2 * n + 1) / (2 * n + 1)


@singledispatch
def expm1mx(x):
    """exp(x) - 1 - x, accurate near zero (Taylor series for |x| < 0.5)."""
    if abs(x) >= EXPM1MX_SERIES:
        return expm1_stable(x) - x
    eps = unit_roundoff(x)
    term = x * x / 2
    terms = [term]
    k = 3
    while abs(term) > eps * abs(terms[0]) and k < _MAX_TERMS:
        term = term * x / k
        terms.append(term)
        k += 1
    total = terms[-1]
    for t in reversed(terms[:-1]):
        total = total + t
    return total


def pow_ratio(x, num: int, den: int):
    """x**(num/den) for x > 0 as exp(num*log(x)/den), exact in the exponent."""
    return exp(num * log(x) / den)
