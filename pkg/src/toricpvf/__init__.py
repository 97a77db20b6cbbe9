"""Holomorphic polyvector fields on smooth complete toric varieties."""

from .classify import PointClass, Stratification, classify_point, s_k, stratify
from .exact_linalg import Multivector, kernel_dim_of_wedge_maps, rank, wedge
from .fan import (Fan, FanError, FanValidationError, ValidationReport,
                  parse_fan, serialize_fan, validate)
from .generators import hirzebruch, product_projective, projective_space
from .oracle import crosscheck
from .polytope import bounding_box, build_halfspaces, lattice_points
from .pvf import decomposition, dimension_table, weight_space

__version__ = "0.1.0"

__all__ = [
    "Fan", "FanError", "FanValidationError", "Multivector", "PointClass",
    "Stratification", "ValidationReport", "bounding_box", "build_halfspaces",
    "classify_point", "crosscheck", "decomposition", "dimension_table",
    "hirzebruch", "kernel_dim_of_wedge_maps", "lattice_points", "parse_fan",
    "product_projective", "projective_space", "rank", "s_k", "serialize_fan",
    "stratify", "validate", "wedge", "weight_space",
]
