from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from ..tensor import SymTensor3

Configuration = Literal["initial", "current"]
Form = Literal["stable", "unstable"]


@dataclass(frozen=True)
class StressResult:
    """A stress tensor tagged with where and how it was evaluated.

    ``initial`` results are second Piola-Kirchhoff stresses S, ``current``
    results are Kirchhoff stresses tau.
    """

    tensor: SymTensor3
    configuration: Configuration
    form: Form


def check_config(config: str) -> None:
    if config not in ("initial", "current"):
        raise ValueError(f"configuration must be 'initial' or 'current', got {config!r}")


def check_form(form: str) -> None:
    if form not in ("stable", "unstable"):
        raise ValueError(f"form must be 'stable' or 'unstable', got {form!r}")
