"""Strain measures and volume change as functions of the displacement gradient H.

The stable routines never form F = I + H; the ``*_unstable`` variants do,
and are kept as baselines for error measurements.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any

from .errors import InadmissibleStateError
from .precision import common_precision
from .scalar_kernels import log1p_stable, sqrt
from .tensor import (
    Mat3,
    SymTensor3,
    as_mat3,
    deformation_gradient,
    det3,
    matmul,
    transpose,
)


def displacement_gradient(h: Any) -> Mat3:
    """Validate a 3x3 displacement gradient; all entries must share one precision."""
    m = as_mat3(h)
    common_precision(x for row in m for x in row)
    return m


def green_lagrange(h: Mat3) -> SymTensor3:
    """E = (H + H^T + H^T H) / 2."""
    hth = matmul(transpose(h), h)
    return SymTensor3(
        (2 * h[0][0] + hth[0][0]) / 2,
        (2 * h[1][1] + hth[1][1]) / 2,
        (2 * h[2][2] + hth[2][2]) / 2,
        (h[0][1] + h[1][0] + hth[0][1]) / 2,
        (h[0][2] + h[2][0] + hth[0][2]) / 2,
        (h[1][2] + h[2][1] + hth[1][2]) / 2,
    )


def green_euler(h: Mat3) -> SymTensor3:
    """e = (H + H^T + H H^T) / 2."""
    return green_lagrange(transpose(h))


def green_lagrange_unstable(h: Mat3) -> SymTensor3:
    """Textbook route E = (F^T F - I) / 2."""
    f = deformation_gradient(h)
    return SymTensor3.from_matrix(matmul(transpose(f), f)).shift(-1) / 2


def green_euler_unstable(h: Mat3) -> SymTensor3:
    """e = (F F^T - I) / 2."""
    f = deformation_gradient(h)
    return SymTensor3.from_matrix(matmul(f, transpose(f))).shift(-1) / 2


def jm1(h: Mat3):
    """J - 1 = tr H + (sum of principal 2x2 minors of H) + det H."""
    minors = (
        h[0][0] * h[1][1] + h[0][0] * h[2][2] + h[1][1] * h[2][2]
        - (h[0][1] * h[1][0] + h[0][2] * h[2][0] + h[1][2] * h[2][1])
    )
    return det3(h) + (h[0][0] + h[1][1] + h[2][2]) + minors


def jm1_unstable(h: Mat3):
    return det3(deformation_gradient(h)) - 1


def log_j(jm1_value):
    """log J from J - 1."""
    return log1p_stable(jm1_value)


def invariants(a: SymTensor3):
    """Principal invariants (tr A, sum of principal minors, det A)."""
    i2 = (
        a.xx * a.yy + a.xx * a.zz + a.yy * a.zz
        - (a.xy * a.xy + a.xz * a.xz + a.yz * a.yz)
    )
    return a.trace(), i2, a.det()


def j_helper(e: SymTensor3):
    """J^2 - 1 - 2 tr E = 4 I2(E) + 8 I3(E), from det(I + 2E)."""
    _, i2, i3 = invariants(e)
    return 4 * i2 + 8 * i3


def jm1_from_strain(e: SymTensor3):
    """J - 1 = (J^2 - 1) / (J + 1) using only E."""
    x = j_helper(e) + 2 * e.trace()
    if x < -1:
        raise InadmissibleStateError("det(I + 2E) < 0")
    return x / (sqrt(1 + x) + 1)


def deviatoric(a: SymTensor3) -> SymTensor3:
    return a.shift(-a.trace() / 3)


def cauchy_green(strain: SymTensor3) -> SymTensor3:
    """I + 2 strain: C from E, or b from e."""
    return (2 * strain).shift(1)


def inverse_cauchy_green(c: SymTensor3, jm1_value) -> SymTensor3:
    """C^{-1} = adj(C) / J^2 with J^2 = (1 + (J - 1))^2 supplied by the stable path."""
    j = 1 + jm1_value
    if not j > 0:
        raise InadmissibleStateError(f"J = {j} <= 0")
    return c.adjugate() / (j * j)


def inverse_unstable(c: SymTensor3) -> SymTensor3:
    """C^{-1} = adj(C) / det(C), determinant formed from C itself."""
    d = c.det()
    if d == 0:
        raise InadmissibleStateError("singular Cauchy-Green tensor")
    return c.adjugate() / d


@dataclass(frozen=True)
class StrainState:
    """Kinematic quantities derived once from H and shared by the stress routines."""

    H: Mat3
    E: SymTensor3
    e: SymTensor3
    jm1: Any

    @classmethod
    def from_displacement_gradient(cls, h: Any) -> "StrainState":
        h = displacement_gradient(h)
        return cls(h, green_lagrange(h), green_euler(h), jm1(h))

    @cached_property
    def F(self) -> Mat3:
        return deformation_gradient(self.H)

    @cached_property
    def C(self) -> SymTensor3:
        return cauchy_green(self.E)

    @cached_property
    def b(self) -> SymTensor3:
        return cauchy_green(self.e)

    @cached_property
    def C_inv(self) -> SymTensor3:
        return inverse_cauchy_green(self.C, self.jm1)

    @cached_property
    def J_unstable(self):
        """det(I + H) formed the textbook way."""
        return det3(self.F)

    def check_admissible(self) -> None:
        if not self.jm1 > -1:
            raise InadmissibleStateError(f"J - 1 = {self.jm1} <= -1")
