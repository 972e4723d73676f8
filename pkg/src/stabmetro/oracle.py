"""Brute-force statevector verification for small codes (n <= 15).

Everything here works on dense 2^n statevectors and shares no machinery
with the symplectic code path, so it serves as an independent ground
truth: codespace construction, the effective interaction gap on the
logical subspace, and Knill-Laflamme error-correction checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import List, Optional, Tuple

import numpy as np

from .code import StabilizerCode
from .pauli import PauliOperator

MAX_ORACLE_QUBITS = 15
ATOL = 1e-9


class OracleError(ValueError):
    pass


class CodespaceDimensionMismatch(OracleError):
    pass


def apply_pauli(p: PauliOperator, vec: np.ndarray) -> np.ndarray:
    """P |psi> for a dense statevector (qubit i = bit i of the index)."""
    dim = vec.shape[0]
    idx = np.arange(dim, dtype=np.uint64)
    par = np.bitwise_count(idx & np.uint64(p.z)) & np.uint64(1)
    coeff = (1j ** p.phase_exp) * np.where(par == 1, -1.0, 1.0)
    out = (coeff * vec)[idx ^ np.uint64(p.x)]
    return out


@dataclass(frozen=True)
class CodespaceBasis:
    n: int
    states: np.ndarray  # shape (2, 2^n), orthonormal, +1 eigenvectors


def codespace(code: StabilizerCode) -> CodespaceBasis:
    """Two orthonormal codewords from projecting computational states.

    Applies the projector product over (I + g)/2 to basis states until
    two independent vectors are found; errors if the projected space
    does not have dimension 2.
    """
    n = code.n
    if n > MAX_ORACLE_QUBITS:
        raise OracleError(f"oracle capped at n={MAX_ORACLE_QUBITS}, got {n}")
    if code.k != 1:
        raise CodespaceDimensionMismatch(f"code has k={code.k}, expected 1")
    dim = 1 << n
    found: List[np.ndarray] = []
    for e in range(dim):
        vec = np.zeros(dim, dtype=complex)
        vec[e] = 1.0
        for g in code.generators:
            vec = 0.5 * (vec + apply_pauli(g, vec))
            if np.linalg.norm(vec) < 1e-12:
                break
        norm = np.linalg.norm(vec)
        if norm < 1e-12:
            continue
        vec /= norm
        for prev in found:
            vec = vec - np.vdot(prev, vec) * prev
        norm = np.linalg.norm(vec)
        if norm < 1e-8:
            continue
        found.append(vec / norm)
        if len(found) == 2:
            break
    if len(found) != 2:
        raise CodespaceDimensionMismatch(
            f"found {len(found)} independent codewords, expected 2"
        )
    return CodespaceBasis(n, np.vstack(found))


def _diag_interaction(n: int, k: int) -> np.ndarray:
    """Diagonal of the summed weight-k Z interaction over basis states.

    The value depends only on the number of 1-bits t: it is the
    elementary symmetric polynomial e_k of n signs, t of them -1.
    """
    by_t = np.array(
        [
            sum(
                (-1) ** j * comb(t, j) * comb(n - t, k - j)
                for j in range(min(t, k) + 1)
            )
            for t in range(n + 1)
        ],
        dtype=float,
    )
    idx = np.arange(1 << n, dtype=np.uint64)
    return by_t[np.bitwise_count(idx)]


@dataclass(frozen=True)
class GapReport:
    delta_g_eff: float
    matrix: np.ndarray  # the 2x2 logical block


def g_eff_gap(code: StabilizerCode, k: int = 3, basis: Optional[CodespaceBasis] = None) -> GapReport:
    """Eigenvalue gap of the interaction projected onto the codespace."""
    if basis is None:
        basis = codespace(code)
    diag = _diag_interaction(code.n, k)
    m = np.empty((2, 2), dtype=complex)
    for a in range(2):
        for b in range(2):
            m[a, b] = np.vdot(basis.states[a], diag * basis.states[b])
    if np.abs(m - m.conj().T).max() > 1e-9:
        raise OracleError("projected interaction block is not Hermitian")
    evals = np.linalg.eigvalsh(m)
    return GapReport(float(evals[-1] - evals[0]), m)


@dataclass(frozen=True)
class KlReport:
    passed: bool
    worst_residual: float
    violations: Tuple[str, ...]
    checked: int


def knill_laflamme_check(
    code: StabilizerCode,
    max_weight: int = 2,
    error_kinds: str = "XYZ",
    basis: Optional[CodespaceBasis] = None,
    tol: float = ATOL,
) -> KlReport:
    """<0|E|1> = 0 and <0|E|0> = <1|E|1> for all Paulis E up to max_weight."""
    if basis is None:
        basis = codespace(code)
    n = code.n
    s0, s1 = basis.states
    worst = 0.0
    violations = []
    checked = 0

    def errors():
        for w in range(1, max_weight + 1):
            for qubits in combinations(range(n), w):
                for kinds in _kind_tuples(error_kinds, w):
                    p = PauliOperator.identity(n)
                    for q, a in zip(qubits, kinds):
                        p = p * PauliOperator.single(n, q, a)
                    yield p

    for p in errors():
        checked += 1
        e1 = apply_pauli(p, s1)
        off = abs(np.vdot(s0, e1))
        diag = abs(np.vdot(s0, apply_pauli(p, s0)) - np.vdot(s1, e1))
        residual = max(off, diag)
        if residual > worst:
            worst = residual
        if residual > tol:
            violations.append(p.to_string())
    return KlReport(not violations, worst, tuple(violations), checked)


def _kind_tuples(kinds: str, w: int):
    if w == 1:
        return [(a,) for a in kinds]
    return [(a,) + rest for a in kinds for rest in _kind_tuples(kinds, w - 1)]
