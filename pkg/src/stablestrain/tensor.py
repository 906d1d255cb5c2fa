"""Small 3x3 tensor algebra over generic scalars.

General tensors (``Mat3``) are tuples of three row tuples.  Symmetric
tensors are :class:`SymTensor3`, which stores the six independent
components ``xx, yy, zz, xy, xz, yz`` so symmetry holds by construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .scalar_kernels import sqrt

Mat3 = tuple  # tuple[tuple[S, S, S], tuple[S, S, S], tuple[S, S, S]]

_VOIGT = ((0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2))


def as_mat3(m: Any) -> Mat3:
    """Nested sequence or array -> tuple of row tuples (entries untouched)."""
    rows = tuple(tuple(row) for row in m)
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("expected a 3x3 tensor")
    return rows


def mat_identity() -> Mat3:
    return ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def mat_add(a: Mat3, b: Mat3) -> Mat3:
    return tuple(tuple(a[i][j] + b[i][j] for j in range(3)) for i in range(3))


def mat_sub(a: Mat3, b: Mat3) -> Mat3:
    return tuple(tuple(a[i][j] - b[i][j] for j in range(3)) for i in range(3))


def mat_scale(a: Mat3, c) -> Mat3:
    return tuple(tuple(c * a[i][j] for j in range(3)) for i in range(3))


def transpose(a: Mat3) -> Mat3:
    return tuple(tuple(a[j][i] for j in range(3)) for i in range(3))


def matmul(a: Mat3, b: Mat3) -> Mat3:
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] for j in range(3))
        for i in range(3)
    )


def mat_trace(a: Mat3):
    return a[0][0] + a[1][1] + a[2][2]


def det3(a: Mat3):
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def deformation_gradient(h: Mat3) -> Mat3:
    """F = I + H.  Only unstable baselines and test oracles need it."""
    return mat_add(mat_identity(), h)


@dataclass(frozen=True)
class SymTensor3:
    xx: Any
    yy: Any
    zz: Any
    xy: Any
    xz: Any
    yz: Any

    @classmethod
    def from_matrix(cls, m: Mat3) -> "SymTensor3":
        """Symmetric part of a general 3x3 tensor."""
        return cls(
            m[0][0], m[1][1], m[2][2],
            (m[0][1] + m[1][0]) / 2, (m[0][2] + m[2][0]) / 2, (m[1][2] + m[2][1]) / 2,
        )

    @classmethod
    def from_components(cls, c: Sequence) -> "SymTensor3":
        return cls(*c)

    @classmethod
    def identity(cls) -> "SymTensor3":
        return cls(1, 1, 1, 0, 0, 0)

    @classmethod
    def zeros(cls) -> "SymTensor3":
        return cls(0, 0, 0, 0, 0, 0)

    @classmethod
    def outer(cls, n: Sequence) -> "SymTensor3":
        """n n^T for a 3-vector n."""
        return cls(n[0] * n[0], n[1] * n[1], n[2] * n[2], n[0] * n[1], n[0] * n[2], n[1] * n[2])

    def components(self) -> tuple:
        return (self.xx, self.yy, self.zz, self.xy, self.xz, self.yz)

    def matrix(self) -> Mat3:
        return (
            (self.xx, self.xy, self.xz),
            (self.xy, self.yy, self.yz),
            (self.xz, self.yz, self.zz),
        )

    def __getitem__(self, ij: tuple[int, int]):
        return self.matrix()[ij[0]][ij[1]]

    def map(self, fn) -> "SymTensor3":
        return SymTensor3(*(fn(c) for c in self.components()))

    def __add__(self, other: "SymTensor3") -> "SymTensor3":
        return SymTensor3(*(a + b for a, b in zip(self.components(), other.components())))

    def __sub__(self, other: "SymTensor3") -> "SymTensor3":
        return SymTensor3(*(a - b for a, b in zip(self.components(), other.components())))

    def __neg__(self) -> "SymTensor3":
        return SymTensor3(*(-a for a in self.components()))

    def __mul__(self, c) -> "SymTensor3":
        if isinstance(c, SymTensor3):
            return NotImplemented
        return SymTensor3(*(a * c for a in self.components()))

    def __rmul__(self, c) -> "SymTensor3":
        if isinstance(c, SymTensor3):
            return NotImplemented
        return SymTensor3(*(c * a for a in self.components()))

    def __truediv__(self, c) -> "SymTensor3":
        return SymTensor3(*(a / c for a in self.components()))

    def shift(self, c) -> "SymTensor3":
        """self + c I."""
        return SymTensor3(self.xx + c, self.yy + c, self.zz + c, self.xy, self.xz, self.yz)

    def trace(self):
        return self.xx + self.yy + self.zz

    def ddot(self, other: "SymTensor3"):
        """Full contraction A : B (off-diagonal pairs counted twice)."""
        return (
            self.xx * other.xx + self.yy * other.yy + self.zz * other.zz
            + 2 * (self.xy * other.xy + self.xz * other.xz + self.yz * other.yz)
        )

    def norm(self):
        """Frobenius norm of the full 3x3 tensor."""
        return sqrt(self.ddot(self))

    def det(self):
        return (
            self.xx * (self.yy * self.zz - self.yz * self.yz)
            - self.xy * (self.xy * self.zz - self.yz * self.xz)
            + self.xz * (self.xy * self.yz - self.yy * self.xz)
        )

    def adjugate(self) -> "SymTensor3":
        return SymTensor3(
            self.yy * self.zz - self.yz * self.yz,
            self.xx * self.zz - self.xz * self.xz,
            self.xx * self.yy - self.xy * self.xy,
            self.xz * self.yz - self.xy * self.zz,
            self.xy * self.yz - self.xz * self.yy,
            self.xy * self.xz - self.xx * self.yz,
        )

    def square(self) -> "SymTensor3":
        return sym_product(self, self)


def sym_product(a: SymTensor3, b: SymTensor3) -> SymTensor3:
    """Symmetric part of the matrix product, (AB + (AB)^T) / 2."""
    return SymTensor3.from_matrix(matmul(a.matrix(), b.matrix()))


def push_forward(f: Mat3, s: SymTensor3) -> SymTensor3:
    """F S F^T, symmetrised."""
    return SymTensor3.from_matrix(matmul(matmul(f, s.matrix()), transpose(f)))


def voigt_index(i: int, j: int) -> int:
    return _VOIGT.index((min(i, j), max(i, j)))
