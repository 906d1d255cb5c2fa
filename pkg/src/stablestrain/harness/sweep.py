"""Relative-error sweeps over a log-spaced strain-magnitude grid."""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import UndefinedRelativeError
from ..oracle import SampleSpec, median, rel_error, sample_direction
from ..precision import get_precision
from .models import get_model

DEFAULT_DIRECTIONS = 16


@dataclass(frozen=True)
class SweepConfig:
    model: str
    configuration: str = "initial"
    precision: str = "double"
    eps_min: float = 1e-8
    eps_max: float = 1e-1
    samples: int = 50
    directions: int = DEFAULT_DIRECTIONS
    seed: int = 1
    series_order: int | None = 6
    output: Path | None = None

    def __post_init__(self):
        model = get_model(self.model)
        if self.configuration not in model.configs:
            raise ValueError(
                f"model {self.model!r} supports configurations {model.configs}, got {self.configuration!r}"
            )
        if get_precision(self.precision).name not in ("single", "double"):
            raise ValueError("precision under test must be 'single' or 'double'")
        if not 0 < self.eps_min < self.eps_max < 1:
            raise ValueError("need 0 < eps_min < eps_max < 1")
        if self.samples < 2:
            raise ValueError("need at least 2 samples")
        if self.directions < 1:
            raise ValueError("need at least 1 direction")
        if self.series_order is not None and self.series_order < 1:
            raise ValueError("series order must be >= 1")


@dataclass
class SweepResult:
    config: SweepConfig
    eps: list
    columns: dict = field(default_factory=dict)
    # column -> list over eps of per-direction errors
    per_direction: dict = field(default_factory=dict)

    @property
    def header(self) -> list[str]:
        return ["eps"] + [f"rel_err_{name}" for name in self.columns]

    def rows(self):
        for i, e in enumerate(self.eps):
            yield [e] + [col[i] for col in self.columns.values()]


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Median relative error per grid point and form; writes CSV when ``cfg.output`` is set."""
    model = get_model(cfg.model)
    prec = get_precision(cfg.precision)
    spec = SampleSpec.log_grid(cfg.seed, cfg.eps_min, cfg.eps_max, cfg.samples, prec)
    n_dirs = 1 if model.scalar_input else cfg.directions
    directions = [1.0] if model.scalar_input else [sample_direction(cfg.seed, k) for k in range(n_dirs)]

    result = SweepResult(cfg, list(spec.eps_grid))
    for form in model.forms:
        fn = model.quantity(form, cfg.configuration, cfg.series_order, prec)
        ref = model.reference(form, cfg.configuration, prec)
        table = []
        for eps in spec.eps_grid:
            errs = []
            for H in directions:
                try:
                    errs.append(rel_error(fn, H, eps, prec, ref))
                except UndefinedRelativeError:
                    continue
            table.append(errs)
        result.per_direction[form] = table
        result.columns[form] = [median(errs) if errs else float("nan") for errs in table]

    if cfg.output is not None:
        write_csv(result, cfg.output)
    return result


def _fmt(x) -> str:
    return repr(float(x))


def write_rows(result: SweepResult, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(result.header)
    for row in result.rows():
        w.writerow([_fmt(x) for x in row])


def write_csv(result: SweepResult, path) -> Path:
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        write_rows(result, fh)
    return path


def write_per_direction_csv(result: SweepResult, path) -> Path:
    """Long format: eps, direction, form, rel_err."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["eps", "direction", "form", "rel_err"])
        for i, e in enumerate(result.eps):
            for form, table in result.per_direction.items():
                for k, err in enumerate(table[i]):
                    w.writerow([_fmt(e), k, form, _fmt(err)])
    return path
