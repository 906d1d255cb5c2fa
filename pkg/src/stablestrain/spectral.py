"""Symmetric 3x3 eigendecomposition and principal log-stretches.

The solver is cyclic Jacobi.  It is backward stable, so the reconstruction
residual ||A - sum_i lam_i N_i N_i^T|| stays at a small multiple of the unit
roundoff times ||A|| even for repeated or nearly repeated eigenvalues.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from .autodiff import Dual
from .errors import DomainError
from .precision import common_precision, to_float
from .scalar_kernels import log1p_stable, sqrt
from .tensor import SymTensor3

_MAX_SWEEPS = 60


@dataclass(frozen=True)
class EigenDecomposition3:
    """Ascending eigenvalues with orthonormal eigenvectors ``vectors[i]``."""

    values: tuple
    vectors: tuple

    def reconstruct(self) -> SymTensor3:
        return spectral_sum(self.values, self.vectors)


def spectral_sum(coeffs, vectors) -> SymTensor3:
    """sum_i c_i N_i N_i^T."""
    out = None
    for c, n in zip(coeffs, vectors):
        term = c * SymTensor3.outer(n)
        out = term if out is None else out + term
    return out


def _jacobi(a: list[list[Any]], eps: float):
    v = [[a[0][0] * 0 + (1 if i == j else 0) for j in range(3)] for i in range(3)]
    norm = sqrt(sum(a[i][j] * a[i][j] for i in range(3) for j in range(3)))
    tol = norm * eps / 8
    for _ in range(_MAX_SWEEPS):
        rotated = False
        for p, q in ((0, 1), (0, 2), (1, 2)):
            apq = a[p][q]
            if apq == 0 or abs(apq) <= tol:
                continue
            rotated = True
            theta = (a[q][q] - a[p][p]) / (2 * apq)
            t = 1 / (abs(theta) + sqrt(theta * theta + 1))
            if theta < 0:
                t = -t
            c = 1 / sqrt(t * t + 1)
            s = t * c
            tau = s / (1 + c)
            a[p][p] = a[p][p] - t * apq
            a[q][q] = a[q][q] + t * apq
            a[p][q] = a[q][p] = apq * 0
            r = 3 - p - q
            arp, arq = a[r][p], a[r][q]
            a[r][p] = a[p][r] = arp - s * (arq + tau * arp)
            a[r][q] = a[q][r] = arq + s * (arp - tau * arq)
            for k in range(3):
                vkp, vkq = v[k][p], v[k][q]
                v[k][p] = vkp - s * (vkq + tau * vkp)
                v[k][q] = vkq + s * (vkp - tau * vkq)
        if not rotated:
            break
    return [a[i][i] for i in range(3)], [[v[k][i] for k in range(3)] for i in range(3)]


def _canonical_sign(vec):
    big = max(range(3), key=lambda k: abs(vec[k]))
    return tuple(-x for x in vec) if vec[big] < 0 else tuple(vec)


def eig_sym3(A: SymTensor3) -> EigenDecomposition3:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric tensor.

    Each eigenvector is signed so its largest-magnitude component is
    positive.  For dual-number input the decomposition is computed on the
    primal part; eigenvalues then carry first-order sensitivities
    N_i^T dA N_i, eigenvectors are returned as plain (primal) vectors.
    """
    comps = A.components()
    if isinstance(comps[0], Dual):
        primal = eig_sym3(SymTensor3(*(c.val for c in comps)))
        values = []
        for lam, n in zip(primal.values, primal.vectors):
            nn = SymTensor3.outer(n)
            der = tuple(
                sum(
                    (w * c.der[k] for w, c in zip((nn.xx, nn.yy, nn.zz, 2 * nn.xy, 2 * nn.xz, 2 * nn.yz), comps)),
                    lam * 0,
                )
                for k in range(len(comps[0].der))
            )
            values.append(Dual(lam, der))
        return EigenDecomposition3(tuple(values), primal.vectors)

    prec = common_precision(comps)
    if not all(math.isfinite(to_float(c)) for c in comps):
        raise ValueError("eigendecomposition of a non-finite tensor")
    lam, vecs = _jacobi([list(row) for row in A.matrix()], prec.eps)
    order = sorted(range(3), key=lambda i: lam[i])
    return EigenDecomposition3(
        tuple(lam[i] for i in order),
        tuple(_canonical_sign(vecs[i]) for i in order),
    )


def principal_log_stretches(eig_strain: EigenDecomposition3) -> tuple:
    """l_i = log(stretch_i) = log1p(2 lam_i^E) / 2 from the eigenvalues of E."""
    out = []
    for lam in eig_strain.values:
        if not 2 * lam > -1:
            raise DomainError(f"strain eigenvalue {lam} gives a non-positive stretch")
        out.append(log1p_stable(2 * lam) / 2)
    return tuple(out)
