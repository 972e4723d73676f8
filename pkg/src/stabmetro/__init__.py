"""Stabilizer-code toolkit for many-body Z-interaction metrology.

Builds the thin surface, quantum Reed-Muller and Shor code families,
counts their weight-k Z-type logical operators to obtain achievable QFI
coefficients, checks the structural no-go bounds, and cross-validates
against a dense statevector oracle at small n.
"""

import json
from importlib import resources

from .code import (
    LogicalClass,
    LogicalTag,
    StabilizerCode,
    classify,
    load_code,
    normalize_signs,
    save_code,
    validate,
    verify_distance_3,
    z_subgroup_basis,
)
from .gf2 import BitMatrix, in_row_space, kernel_basis, rank, rref
from .pauli import PauliOperator

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "LogicalClass",
    "LogicalTag",
    "PauliOperator",
    "StabilizerCode",
    "classify",
    "get_schema",
    "in_row_space",
    "kernel_basis",
    "load_code",
    "normalize_signs",
    "rank",
    "rref",
    "save_code",
    "validate",
    "verify_distance_3",
    "z_subgroup_basis",
]


def get_schema(name: str) -> dict:
    """Load a published JSON schema ('count', 'qfi', 'analyze', 'oracle',
    'rm-enumerator')."""
    path = resources.files(__package__) / "schemas" / f"{name}.schema.json"
    return json.loads(path.read_text())
