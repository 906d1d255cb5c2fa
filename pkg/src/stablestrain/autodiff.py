"""Forward-mode dual numbers and the energy -> stress map S = dpsi/dE.

A :class:`Dual` carries a value and a tuple of partial derivatives, one per
seeded input.  Partials have the same scalar type as the value, so
differentiation runs at any precision.  Importing this module registers dual
overloads for the elementary functions in :mod:`stablestrain.scalar_kernels`;
the derivative channels use the stable closed forms (e.g. d/dx log1pmx =
-x/(1+x)) rather than differentiating through the series.
"""
from __future__ import annotations

from typing import Any, Callable, Sequence

from . import scalar_kernels as sk
from .tensor import SymTensor3


class Dual:
    __slots__ = ("val", "der")
    __array_ufunc__ = None  # numpy scalars must defer to the reflected operators

    def __init__(self, val: Any, der: Sequence[Any]):
        self.val = val
        self.der = tuple(der)

    @classmethod
    def variable(cls, val, index: int, n: int) -> "Dual":
        one = val * 0 + 1
        zero = val * 0
        return cls(val, tuple(one if k == index else zero for k in range(n)))

    def _chain(self, val, slope) -> "Dual":
        return Dual(val, tuple(slope * d for d in self.der))

    def __add__(self, o):
        if isinstance(o, SymTensor3):
            return NotImplemented
        if isinstance(o, Dual):
            return Dual(self.val + o.val, tuple(a + b for a, b in zip(self.der, o.der)))
        return Dual(self.val + o, self.der)

    __radd__ = __add__

    def __sub__(self, o):
        if isinstance(o, SymTensor3):
            return NotImplemented
        if isinstance(o, Dual):
            return Dual(self.val - o.val, tuple(a - b for a, b in zip(self.der, o.der)))
        return Dual(self.val - o, self.der)

    def __rsub__(self, o):
        return Dual(o - self.val, tuple(-d for d in self.der))

    def __neg__(self):
        return Dual(-self.val, tuple(-d for d in self.der))

    def __mul__(self, o):
        if isinstance(o, SymTensor3):
            return NotImplemented
        if isinstance(o, Dual):
            return Dual(
                self.val * o.val,
                tuple(a * o.val + self.val * b for a, b in zip(self.der, o.der)),
            )
        return Dual(self.val * o, tuple(d * o for d in self.der))

    def __rmul__(self, o):
        return Dual(o * self.val, tuple(o * d for d in self.der))

    def __truediv__(self, o):
        if isinstance(o, SymTensor3):
            return NotImplemented
        if isinstance(o, Dual):
            q = self.val / o.val
            return Dual(q, tuple((a - q * b) / o.val for a, b in zip(self.der, o.der)))
        return Dual(self.val / o, tuple(d / o for d in self.der))

    def __rtruediv__(self, o):
        q = o / self.val
        return Dual(q, tuple(-q * d / self.val for d in self.der))

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("dual powers support integer exponents only")
        if n < 0:
            return 1 / self ** (-n)
        out = self * 0 + 1
        for _ in range(n):
            out = out * self
        return out

    def __abs__(self):
        return -self if self.val < 0 else self

    @staticmethod
    def _cmp_val(o):
        return o.val if isinstance(o, Dual) else o

    def __lt__(self, o):
        return self.val < Dual._cmp_val(o)

    def __le__(self, o):
        return self.val <= Dual._cmp_val(o)

    def __gt__(self, o):
        return self.val > Dual._cmp_val(o)

    def __ge__(self, o):
        return self.val >= Dual._cmp_val(o)

    def __float__(self):
        return float(self.val)

    def __repr__(self) -> str:
        return f"Dual({self.val!r}, {self.der!r})"


@sk.sqrt.register(Dual)
def _(x):
    s = sk.sqrt(x.val)
    return x._chain(s, 1 / (2 * s))


@sk.exp.register(Dual)
def _(x):
    v = sk.exp(x.val)
    return x._chain(v, v)


@sk.log.register(Dual)
def _(x):
    return x._chain(sk.log(x.val), 1 / x.val)


@sk.tanh.register(Dual)
def _(x):
    t = sk.tanh(x.val)
    return x._chain(t, 1 - t * t)


@sk.atanh.register(Dual)
def _(x):
    return x._chain(sk.atanh(x.val), 1 / (1 - x.val * x.val))


@sk.log1p_stable.register(Dual)
def _(x, *, platform: bool = True):
    return x._chain(sk.log1p_stable(x.val, platform=platform), 1 / (1 + x.val))


@sk.expm1_stable.register(Dual)
def _(x, *, platform: bool = True):
    m = sk.expm1_stable(x.val, platform=platform)
    return x._chain(m, m + 1)


@sk.log1pmx.register(Dual)
def _(x, order=None):
    return x._chain(sk.log1pmx(x.val, order), -x.val / (1 + x.val))


@sk.expm1mx.register(Dual)
def _(x):
    return x._chain(sk.expm1mx(x.val), sk.expm1_stable(x.val))


def seed(values: Sequence[Any]) -> list[Dual]:
    """One independent dual variable per entry of ``values``."""
    n = len(values)
    return [Dual.variable(v, k, n) for k, v in enumerate(values)]


def value(x):
    return x.val if isinstance(x, Dual) else x


def partials(x, n: int) -> tuple:
    if isinstance(x, Dual):
        return x.der
    return (x * 0,) * n


def grad_energy(psi: Callable[[SymTensor3], Any], E: SymTensor3) -> SymTensor3:
    """Stress S = dpsi/dE for an energy written over :class:`SymTensor3`.

    Symmetric-argument convention: an off-diagonal slot such as ``xy`` stands
    for both E_xy and E_yx, so seeding it perturbs the two entries together
    and yields dpsi/dE_xy + dpsi/dE_yx = 2 S_xy.  Those three channels are
    halved so the result is S_ij = dpsi/dE_ij of the full tensor (the same
    S = 2 dpsi/dC that the closed-form stresses return), with no Voigt factor.
    """
    return energy_and_grad(psi, E)[1]


def energy_and_grad(psi: Callable[[SymTensor3], Any], E: SymTensor3):
    """(psi(E), dpsi/dE) from a single dual evaluation."""
    Ed = SymTensor3(*seed(E.components()))
    out = psi(Ed)
    d = partials(out, 6)
    return value(out), SymTensor3(d[0], d[1], d[2], d[3] / 2, d[4] / 2, d[5] / 2)


def jacobian(fn: Callable[[list], Sequence[Any]], x: Sequence[Any]) -> tuple[list, list[list]]:
    """Values and Jacobian rows of a vector function by one forward pass."""
    out = fn(seed(list(x)))
    n = len(x)
    return [value(o) for o in out], [list(partials(o, n)) for o in out]
