"""Sweep and axial-test drivers behind the ``stablestrain`` command."""
from .axial import AxialConfig, NewtonReport, homogeneous_axial, run_axial
from .models import MODEL_NAMES, MODELS, SweepModel, get_model
from .sweep import SweepConfig, SweepResult, run_sweep, write_csv

__all__ = [
    "AxialConfig",
    "MODELS",
    "MODEL_NAMES",
    "NewtonReport",
    "SweepConfig",
    "SweepModel",
    "SweepResult",
    "get_model",
    "homogeneous_axial",
    "run_axial",
    "run_sweep",
    "write_csv",
]
