"""Sweep model registry.

Each model exposes a set of column forms and builds, per form, a quantity
``fn(H, precision)`` for :func:`stablestrain.oracle.rel_error`.  Material
parameters are rounded to the precision under test before use, and the
reference sees those same rounded values promoted to extended precision.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .. import kinematics as kin
from ..autodiff import grad_energy
from ..constitutive import (
    LameParams,
    MooneyRivlinParams,
    OgdenParams,
    hencky,
    mr_coupled_stress,
    mr_iso_stress,
    nh_coupled_stress,
    nh_energy,
    nh_iso_stress,
    ogden_stress,
)
from ..precision import Precision
from ..scalar_kernels import log, log1p_stable, log1pmx

LAME = (4.0, 1.0)
MOONEY_RIVLIN = (0.75, 0.25, 4.0)
OGDEN = ((1.2, 1.7), (-0.4, -1.1))

STABLE_UNSTABLE = ("stable", "unstable")
BOTH_CONFIGS = ("initial", "current")


class _Params:
    """Material constants rounded to the test precision, recast for evaluation."""

    def __init__(self, test: Precision):
        self.test = test

    def __call__(self, value: float, prec: Precision):
        return prec.cast(float(self.test.cast(value)))

    def lame(self, prec):
        lam, mu = LAME
        return LameParams(self(lam, prec), self(mu, prec))

    def mooney_rivlin(self, prec):
        mu1, mu2, lam = MOONEY_RIVLIN
        return MooneyRivlinParams(self(mu1, prec), self(mu2, prec), self(lam, prec))

    def ogden(self, prec):
        return OgdenParams([(self(m, prec), self(a, prec)) for m, a in OGDEN])


@dataclass(frozen=True)
class SweepModel:
    name: str
    forms: tuple
    configs: tuple
    # (form, config, series_order, params) -> quantity
    build: Callable
    # form whose extended-precision evaluation is the reference; None = same form
    reference_form: str | None = None
    exact_reference: Callable | None = None
    scalar_input: bool = False

    def quantity(self, form: str, config: str, series_order, test: Precision):
        return self.build(form, config, series_order, _Params(test))

    def reference(self, form: str, config: str, test: Precision):
        if self.exact_reference is not None:
            return self.exact_reference
        return self.build(self.reference_form or form, config, None, _Params(test))


def _state(H):
    return kin.StrainState.from_displacement_gradient(H)


def _jm1(form, config, order, params):
    fn = kin.jm1 if form == "stable" else kin.jm1_unstable
    return lambda H, prec: fn(H)


def _strain(form, config, order, params):
    table = {
        ("stable", "initial"): kin.green_lagrange,
        ("unstable", "initial"): kin.green_lagrange_unstable,
        ("stable", "current"): kin.green_euler,
        ("unstable", "current"): kin.green_euler_unstable,
    }
    fn = table[form, config]
    return lambda H, prec: fn(H)


def _nh_coupled(form, config, order, params):
    return lambda H, prec: nh_coupled_stress(_state(H), params.lame(prec), config, form)


def _mr_coupled(form, config, order, params):
    return lambda H, prec: mr_coupled_stress(_state(H), params.mooney_rivlin(prec), config, form)


def _nh_iso(form, config, order, params):
    return lambda H, prec: nh_iso_stress(_state(H), params(LAME[1], prec), config, form)


def _mr_iso(form, config, order, params):
    return lambda H, prec: mr_iso_stress(_state(H), params.mooney_rivlin(prec), config, form)


def _ogden(form, config, order, params):
    return lambda H, prec: ogden_stress(_state(H), params.ogden(prec), form)


def _hencky(form, config, order, params):
    where = "material" if config == "initial" else "spatial"
    return lambda H, prec: hencky(_state(H), where, form)


def _nh_energy(form, config, order, params):
    return lambda H, prec: nh_energy(kin.green_lagrange(H), params.lame(prec), form, order)


def _ad_stress(form, config, order, params):
    energy_form = "stable" if form == "stable" else "standard"

    def fn(H, prec):
        p = params.lame(prec)
        return grad_energy(lambda E: nh_energy(E, p, energy_form, order), kin.green_lagrange(H))

    return fn


def _ad_reference(H, prec):
    lam, mu = (prec.cast(v) for v in LAME)
    return nh_coupled_stress(_state(H), LameParams(lam, mu), "initial", "stable")


def _log1pmx(form, config, order, params):
    if form == "stable":
        return lambda x, prec: log1pmx(x, order)
    return lambda x, prec: log1p_stable(x) - x


def _log1pmx_exact(x, prec):
    return log(1 + x) - x


MODELS: dict[str, SweepModel] = {
    m.name: m
    for m in (
        SweepModel("jm1", STABLE_UNSTABLE, ("initial",), _jm1),
        SweepModel("strain", STABLE_UNSTABLE, BOTH_CONFIGS, _strain),
        SweepModel("nh-coupled", STABLE_UNSTABLE, BOTH_CONFIGS, _nh_coupled),
        SweepModel("mr-coupled", STABLE_UNSTABLE, BOTH_CONFIGS, _mr_coupled),
        SweepModel("nh-iso", STABLE_UNSTABLE, BOTH_CONFIGS, _nh_iso),
        SweepModel("mr-iso", STABLE_UNSTABLE, BOTH_CONFIGS, _mr_iso),
        SweepModel("ogden", STABLE_UNSTABLE, ("initial",), _ogden),
        SweepModel("hencky", STABLE_UNSTABLE, BOTH_CONFIGS, _hencky),
        SweepModel("nh-energy", ("standard", "semistable", "stable"), ("initial",), _nh_energy, reference_form="stable"),
        SweepModel("ad-stress", STABLE_UNSTABLE, ("initial",), _ad_stress, exact_reference=_ad_reference),
        SweepModel("log1pmx", STABLE_UNSTABLE, ("initial",), _log1pmx, exact_reference=_log1pmx_exact, scalar_input=True),
    )
}

MODEL_NAMES = tuple(MODELS)


def get_model(name: str) -> SweepModel:
    try:
        return MODELS[name]
    except KeyError:
        raise ValueError(f"unknown model {name!r}; choose from {', '.join(MODEL_NAMES)}") from None
