"""Axial stretch of the unit block [0, 1]^3 with trilinear hexahedra, solved by Newton.

Boundary conditions: u_x = 0 on x = 0, u_x = eps on x = 1, u_y = 0 on y = 0
and u_z = 0 on z = 0; every other nodal component is unknown.  The default
mesh is one element, leaving u_y on the four y = 1 nodes and u_z on the four
z = 1 nodes.  The residual is R = -int P : grad N with P = F S from the
coupled Neo-Hookean stress in the configured form; the Jacobian is always
the dual-number derivative of the stable residual.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..autodiff import jacobian
from ..constitutive import LameParams, lame_from_youngs, nh_coupled_stress
from ..errors import SingularJacobianError
from ..kinematics import StrainState
from ..precision import mp

# local node a of an element sits at (a & 1, (a >> 1) & 1, (a >> 2) & 1)
LOCAL = tuple(((a & 1), (a >> 1) & 1, (a >> 2) & 1) for a in range(8))

_G = 1 / math.sqrt(3)
GAUSS_1D = ((1 - _G) / 2, (1 + _G) / 2)
VOLUME_POINTS = tuple((x, y, z) for z in GAUSS_1D for y in GAUSS_1D for x in GAUSS_1D)

RTOL = 1e-8
STAGNATION = 0.9


@dataclass(frozen=True)
class AxialConfig:
    youngs: float = 2.8
    poisson: float = 0.4
    eps_axial: float = 1e-12
    form: str = "stable"
    max_newton: int = 10
    quadrature: str = "2x2x2"
    elements: int = 1

    def __post_init__(self):
        if not -1 < self.poisson < 0.5:
            raise ValueError("Poisson ratio must lie in (-1, 0.5)")
        if not self.eps_axial > -1:
            raise ValueError("axial strain must exceed -1")
        if self.form not in ("stable", "unstable"):
            raise ValueError(f"form must be 'stable' or 'unstable', got {self.form!r}")
        if self.max_newton < 1:
            raise ValueError("max_newton must be >= 1")
        if self.quadrature != "2x2x2":
            raise ValueError("only 2x2x2 Gauss quadrature is supported")
        if self.elements < 1:
            raise ValueError("need at least one element per side")


@dataclass
class NewtonReport:
    """Newton history and axial reactions.

    ``force_x1``/``force_x0`` sum the constrained x-residuals over the nodes
    of each face.  ``traction_x1``/``traction_x0`` integrate the normal
    traction instead (-int P_xx on x = 1, +int P_xx on x = 0).
    """

    residual_norms: list
    force_x0: float
    force_x1: float
    converged: bool
    traction_x0: float = 0.0
    traction_x1: float = 0.0
    displacement: list = field(default_factory=list)
    form: str = "stable"

    @property
    def force_imbalance(self) -> float:
        return self.force_x1 + self.force_x0

    @property
    def iterations(self) -> int:
        return len(self.residual_norms) - 1


def _shape_factors(local, xi):
    s = [t if c else 1 - t for c, t in zip(local, xi)]
    d = [1 if c else -1 for c in local]
    return s, d


def _ref_grads(xi) -> tuple:
    out = []
    for local in LOCAL:
        s, d = _shape_factors(local, xi)
        out.append((d[0] * s[1] * s[2], s[0] * d[1] * s[2], s[0] * s[1] * d[2]))
    return tuple(out)


class BlockMesh:
    """n x n x n trilinear hexahedra on the unit cube with the axial boundary conditions."""

    def __init__(self, n: int):
        self.n = n
        m = n + 1
        self.nodes = [(i, j, k) for k in range(m) for j in range(m) for i in range(m)]
        self.elements = [
            tuple((i + a) + m * ((j + b) + m * (k + c)) for a, b, c in LOCAL)
            for k in range(n) for j in range(n) for i in range(n)
        ]
        self.free = [
            (node, c)
            for c in range(3)
            for node, ijk in enumerate(self.nodes)
            if not self.constrained(ijk, c)
        ]

    def constrained(self, ijk, c: int) -> bool:
        i, j, k = ijk
        if c == 0:
            return i in (0, self.n)
        return (j if c == 1 else k) == 0

    @cached_property
    def volume_grads(self) -> tuple:
        return tuple(
            tuple(tuple(self.n * g for g in grad) for grad in _ref_grads(xi)) for xi in VOLUME_POINTS
        )

    @property
    def volume_weight(self) -> float:
        return 1 / (8 * self.n ** 3)

    def face_elements(self, side: int):
        """(element index, local x coordinate) for elements touching x = side."""
        i_face = 0 if side == 0 else self.n - 1
        for e, nodes in enumerate(self.elements):
            if self.nodes[nodes[0]][0] == i_face:
                yield e, float(side)

    def displacements(self, free, eps) -> list:
        zero = free[0] * 0 if free else 0.0
        u = [[eps if i == self.n else 0.0, zero, zero] for i, _, _ in self.nodes]
        for (node, c), v in zip(self.free, free):
            u[node][c] = v
        return u


def _grad_u(u, nodes, grads):
    return [
        [sum((u[nodes[a]][i] * grads[a][j] for a in range(8)), 0.0) for j in range(3)]
        for i in range(3)
    ]


def _first_piola(H, params: LameParams, form: str):
    S = nh_coupled_stress(StrainState.from_displacement_gradient(H), params, "initial", form).tensor.matrix()
    return [
        [S[i][j] + sum((H[i][k] * S[k][j] for k in range(3)), 0.0) for j in range(3)]
        for i in range(3)
    ]


def nodal_residual(mesh: BlockMesh, free, eps, params: LameParams, form: str) -> list:
    """R[node][i] = -sum_e sum_gp w P_ij dN/dX_j."""
    u = mesh.displacements(free, eps)
    R = [[0.0, 0.0, 0.0] for _ in mesh.nodes]
    w = mesh.volume_weight
    for nodes in mesh.elements:
        for grads in mesh.volume_grads:
            P = _first_piola(_grad_u(u, nodes, grads), params, form)
            for a, node in enumerate(nodes):
                g = grads[a]
                for i in range(3):
                    R[node][i] = R[node][i] - w * (P[i][0] * g[0] + P[i][1] * g[1] + P[i][2] * g[2])
    return R


def free_residual(mesh: BlockMesh, free, eps, params: LameParams, form: str) -> list:
    R = nodal_residual(mesh, free, eps, params, form)
    return [R[node][c] for node, c in mesh.free]


def reaction_forces(mesh: BlockMesh, free, eps, params: LameParams, form: str) -> tuple[float, float]:
    """(force_x0, force_x1): constrained x-residuals summed over each face."""
    R = nodal_residual(mesh, free, eps, params, form)
    x0 = math.fsum(R[node][0] for node, ijk in enumerate(mesh.nodes) if ijk[0] == 0)
    x1 = math.fsum(R[node][0] for node, ijk in enumerate(mesh.nodes) if ijk[0] == mesh.n)
    return x0, x1


def traction_forces(mesh: BlockMesh, free, eps, params: LameParams, form: str) -> tuple[float, float]:
    """(traction_x0, traction_x1): normal traction integrated with 2x2 Gauss points per element face."""
    u = mesh.displacements(free, eps)
    weight = 1 / (4 * mesh.n ** 2)
    out = []
    for side in (0, 1):
        total = 0.0
        for e, x in mesh.face_elements(side):
            nodes = mesh.elements[e]
            for z in GAUSS_1D:
                for y in GAUSS_1D:
                    grads = tuple(tuple(mesh.n * g for g in grad) for grad in _ref_grads((x, y, z)))
                    total += weight * _first_piola(_grad_u(u, nodes, grads), params, form)[0][0]
        out.append(total if side == 0 else -total)
    return out[0], out[1]


def _norm(r) -> float:
    return math.sqrt(math.fsum(x * x for x in r))


def run_axial(cfg: AxialConfig) -> NewtonReport:
    params = lame_from_youngs(cfg.youngs, cfg.poisson)
    mesh = BlockMesh(cfg.elements)
    eps = float(cfg.eps_axial)
    free = [0.0] * len(mesh.free)

    r = free_residual(mesh, free, eps, params, cfg.form)
    norms = [_norm(r)]
    converged = norms[0] == 0.0
    while not converged and len(norms) <= cfg.max_newton:
        _, jac = jacobian(lambda v: free_residual(mesh, v, eps, params, "stable"), free)
        try:
            du = np.linalg.solve(np.array(jac, dtype=float), -np.array(r, dtype=float))
        except np.linalg.LinAlgError as exc:
            raise SingularJacobianError("singular Newton Jacobian") from exc
        free = [f + float(d) for f, d in zip(free, du)]
        r = free_residual(mesh, free, eps, params, cfg.form)
        norms.append(_norm(r))
        if norms[-1] == 0.0 or norms[-1] <= RTOL * norms[0]:
            converged = True
        elif norms[-1] > STAGNATION * norms[-2]:
            break

    f0, f1 = reaction_forces(mesh, free, eps, params, cfg.form)
    t0, t1 = traction_forces(mesh, free, eps, params, cfg.form)
    return NewtonReport(
        residual_norms=norms,
        force_x0=f0,
        force_x1=f1,
        converged=converged,
        traction_x0=t0,
        traction_x1=t1,
        displacement=free,
        form=cfg.form,
    )


def homogeneous_axial(youngs: float, poisson: float, eps: float, dps: int = 40):
    """Closed-form oracle: lateral strain eta with S_yy = 0 under F = diag(1+eps, 1+eta, 1+eta).

    Solved in extended precision; returns (eta, force_x1) with force_x1 = -P_xx.
    """
    with mp.workdps(dps):
        lam = mp.mpf(youngs) * poisson / ((1 + mp.mpf(poisson)) * (1 - 2 * mp.mpf(poisson)))
        mu = mp.mpf(youngs) / (2 * (1 + mp.mpf(poisson)))
        ex = mp.mpf(eps)

        def stresses(eta):
            # principal S of coupled NH: (lam/2)(J^2 - 1)/c + mu (1 - 1/c) with c = stretch^2
            J = (1 + ex) * (1 + eta) ** 2
            vol = lam * (J * J - 1) / 2
            cx, cy = (1 + ex) ** 2, (1 + eta) ** 2
            return vol / cx + mu * (1 - 1 / cx), vol / cy + mu * (1 - 1 / cy)

        eta = mp.findroot(lambda t: stresses(t)[1], -mp.mpf(poisson) * ex) if ex != 0 else mp.mpf(0)
        return eta, -(1 + ex) * stresses(eta)[0]
