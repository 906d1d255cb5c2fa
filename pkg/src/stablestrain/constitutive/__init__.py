"""Hyperelastic constitutive models in stable and unstable forms."""
from .common import StressResult, check_config, check_form
from .coupled import mr_coupled_stress, nh_coupled_stress
from .decoupled import mr_iso_stress, nh_iso_stress, volumetric_pressure, volumetric_stress
from .energy import ENERGY_FORMS, coupled_energy, mr_energy, nh_energy, volumetric_energy
from .hencky import hencky, hencky_strain
from .ogden import ogden_coefficients, ogden_iso_energy, ogden_iso_stress, ogden_stress
from .params import LameParams, MooneyRivlinParams, OgdenParams, bulk_from_youngs, lame_from_youngs

__all__ = [
    "ENERGY_FORMS",
    "LameParams",
    "MooneyRivlinParams",
    "OgdenParams",
    "StressResult",
    "bulk_from_youngs",
    "check_config",
    "check_form",
    "coupled_energy",
    "hencky",
    "hencky_strain",
    "lame_from_youngs",
    "mr_coupled_stress",
    "mr_energy",
    "mr_iso_stress",
    "nh_coupled_stress",
    "nh_energy",
    "nh_iso_stress",
    "ogden_coefficients",
    "ogden_iso_energy",
    "ogden_iso_stress",
    "ogden_stress",
    "volumetric_energy",
    "volumetric_pressure",
    "volumetric_stress",
]
