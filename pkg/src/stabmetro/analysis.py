"""Checkable embodiments of the structural no-go bounds.

Three checks tie the logical census to stabilizer structure: the
constant-weight generator bound, the ZZ-stabilizer existence bound, and
detection of repetition-code chains (maximal sets of qubits pairwise
linked by ZZ stabilizers with no single-Z stabilizers).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import List, Optional, Tuple

from .code import StabilizerCode
from .metrology import LogicalCensus


class CheckOutcome(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class BoundCheck:
    outcome: CheckOutcome
    ell: int
    bound: Fraction

    @property
    def margin(self) -> Fraction:
        return self.bound - self.ell

    @property
    def passed(self) -> bool:
        return self.outcome in (CheckOutcome.PASS, CheckOutcome.VACUOUS)


@dataclass(frozen=True)
class NoGoReport:
    name: str
    n: int
    w_max: int
    ell: int
    ldpc: BoundCheck
    zz_witness: Optional[Tuple[int, int]]
    zz: BoundCheck
    chains: Tuple[Tuple[int, ...], ...]

    @property
    def chain_max(self) -> int:
        return len(self.chains[0]) if self.chains else 0


def max_generator_weight(code: StabilizerCode) -> int:
    return max(g.weight() for g in code.generators)


def ldpc_bound_check(code: StabilizerCode, cen: LogicalCensus) -> BoundCheck:
    """ell <= 2 w (w + 1) n / 3 for generator weights at most w (k = 3)."""
    w = max_generator_weight(code)
    bound = Fraction(2 * w * (w + 1) * code.n, 3)
    outcome = CheckOutcome.PASS if cen.ell <= bound else CheckOutcome.FAIL
    return BoundCheck(outcome, cen.ell, bound)


def has_z2_stabilizer(code: StabilizerCode) -> Optional[Tuple[int, int]]:
    """Witness pair (i, j) with Z_i Z_j in the stabilizer group, if any."""
    zs = code.z_subgroup()
    for i, j in combinations(range(code.n), 2):
        if zs.member((1 << i) | (1 << j)) is not None:
            return (i, j)
    return None


def zz_bound_check(code: StabilizerCode, cen: LogicalCensus) -> BoundCheck:
    """Without any ZZ stabilizer, ell <= n (n - 1) / 6; else vacuous."""
    bound = Fraction(code.n * (code.n - 1), 6)
    if has_z2_stabilizer(code) is not None:
        return BoundCheck(CheckOutcome.VACUOUS, cen.ell, bound)
    outcome = CheckOutcome.PASS if cen.ell <= bound else CheckOutcome.FAIL
    return BoundCheck(outcome, cen.ell, bound)


def find_repetition_chains(code: StabilizerCode) -> List[Tuple[int, ...]]:
    """Connected components of the ZZ-stabilizer graph.

    Vertices are qubits whose single Z is NOT a stabilizer; i and j are
    joined when Z_i Z_j IS one.  ZZ adjacency is transitive inside the
    group, so any ordering of a component is a valid chain.  Components
    are returned sorted by size (descending), ties by smallest qubit.
    """
    zs = code.z_subgroup()
    nodes = [i for i in range(code.n) if zs.member(1 << i) is None]
    parent = {i: i for i in nodes}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    node_set = set(nodes)
    for i, j in combinations(nodes, 2):
        if zs.member((1 << i) | (1 << j)) is not None:
            parent[find(i)] = find(j)
    groups: dict = {}
    for i in nodes:
        groups.setdefault(find(i), []).append(i)
    comps = [tuple(sorted(g)) for g in groups.values()]
    comps.sort(key=lambda c: (-len(c), c))
    return comps


def intersection_bound_check(
    code: StabilizerCode, cen: LogicalCensus, k: int, k0: int
) -> BoundCheck:
    """ell_k <= C(n, k - k0) for codes with no Z-type stabilizer of
    weight <= 2 k0 (generalized intersection bound)."""
    if not (1 <= k0 < k - 1):
        raise ValueError(f"need 1 <= k0 < k-1, got k0={k0}, k={k}")
    if cen.k != k:
        raise ValueError(f"census is for k={cen.k}, expected {k}")
    zs = code.z_subgroup()
    for w in range(1, 2 * k0 + 1):
        for subset in combinations(range(code.n), w):
            v = 0
            for q in subset:
                v |= 1 << q
            if zs.member(v) is not None:
                return BoundCheck(
                    CheckOutcome.NOT_APPLICABLE, cen.ell, Fraction(comb(code.n, k - k0))
                )
    bound = Fraction(comb(code.n, k - k0))
    outcome = CheckOutcome.PASS if cen.ell <= bound else CheckOutcome.FAIL
    return BoundCheck(outcome, cen.ell, bound)


def analyze_code(code: StabilizerCode, cen: LogicalCensus) -> NoGoReport:
    return NoGoReport(
        name=code.name,
        n=code.n,
        w_max=max_generator_weight(code),
        ell=cen.ell,
        ldpc=ldpc_bound_check(code, cen),
        zz_witness=has_z2_stabilizer(code),
        zz=zz_bound_check(code, cen),
        chains=tuple(find_repetition_chains(code)),
    )
