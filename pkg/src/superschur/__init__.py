"""Supersymmetric Schur polynomials, their hook polyhedra, and saturation checks."""

from .errors import (
    CapExceededError,
    ContractError,
    DimensionError,
    NotHookError,
    NoWitnessError,
    ShapeMismatchError,
    SuperschurError,
)
from .partitions import Partition, conjugate, contains, dominates, hook_instances, is_hook
from .polynomials import SparsePolynomial, schur_super_det, schur_super_tableau
from .polytopes import (
    HookSystem,
    build_system,
    enumerate_lattice,
    enumerate_vertices,
    maximize_linear,
    membership,
    rado_check,
    verify_snp,
)
from .tableaux import Content, SuperLetter, SuperTableau, enumerate_tableaux
from .tu import certify_atilde_tu, find_bad_minor, is_interval, is_totally_unimodular

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "ContractError",
    "DimensionError",
    "NotHookError",
    "NoWitnessError",
    "ShapeMismatchError",
    "SuperschurError",
    "Partition",
    "conjugate",
    "contains",
    "dominates",
    "hook_instances",
    "is_hook",
    "SparsePolynomial",
    "schur_super_det",
    "schur_super_tableau",
    "HookSystem",
    "build_system",
    "enumerate_lattice",
    "enumerate_vertices",
    "maximize_linear",
    "membership",
    "rado_check",
    "verify_snp",
    "Content",
    "SuperLetter",
    "SuperTableau",
    "enumerate_tableaux",
    "certify_atilde_tu",
    "find_bad_minor",
    "is_interval",
    "is_totally_unimodular",
]
