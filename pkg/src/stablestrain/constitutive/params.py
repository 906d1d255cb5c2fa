"""Material parameter sets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class LameParams:
    lam: float
    mu: float

    def __post_init__(self):
        if not self.mu > 0:
            raise ValueError(f"shear modulus must be positive, got {self.mu}")
        if not self.lam + 2 * self.mu / 3 > 0:
            raise ValueError("bulk modulus lam + 2 mu / 3 must be positive")

    @property
    def bulk(self) -> float:
        return self.lam + 2 * self.mu / 3


@dataclass(frozen=True)
class MooneyRivlinParams:
    """Mooney-Rivlin moduli.

    ``lam`` is the first Lame parameter of the coupled energy; the decoupled
    isochoric stresses only read ``mu1`` and ``mu2``.
    """

    mu1: float
    mu2: float
    lam: float = 0.0

    def __post_init__(self):
        if self.mu1 < 0 or self.mu2 < 0 or not self.mu1 + self.mu2 > 0:
            raise ValueError("need mu1, mu2 >= 0 and mu1 + mu2 > 0")

    @property
    def mu(self) -> float:
        return self.mu1 + self.mu2


@dataclass(frozen=True)
class OgdenParams:
    """Ogden terms (mu_j, alpha_j) plus a bulk modulus for the volumetric part."""

    terms: tuple
    bulk: float = 0.0

    def __init__(self, terms: Sequence[tuple[float, float]], bulk: float = 0.0):
        terms = tuple((m, a) for m, a in terms)
        if not terms:
            raise ValueError("Ogden model needs at least one (mu, alpha) term")
        for m, a in terms:
            if not m * a > 0:
                raise ValueError(f"each term needs mu * alpha > 0, got ({m}, {a})")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "bulk", bulk)

    @property
    def mu(self) -> float:
        """Linearized shear modulus, 2 mu = sum_j mu_j alpha_j."""
        return sum(m * a for m, a in self.terms) / 2


def lame_from_youngs(youngs: float, poisson: float) -> LameParams:
    """(E, nu) -> (lambda, mu); E = 2.8, nu = 0.4 gives lambda = 4, mu = 1."""
    if not -1 < poisson < 0.5:
        raise ValueError("Poisson ratio must lie in (-1, 0.5)")
    lam = youngs * poisson / ((1 + poisson) * (1 - 2 * poisson))
    mu = youngs / (2 * (1 + poisson))
    return LameParams(lam, mu)


def bulk_from_youngs(youngs: float, poisson: float) -> float:
    return lame_from_youngs(youngs, poisson).bulk
