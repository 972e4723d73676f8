"""Classical Reed-Muller codes, shortening and exact weight enumerators.

All coefficients are exact Python integers; the MacWilliams transform is
done with binomial sums so dual enumerators of large codes never require
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Tuple

from .gf2 import BitMatrix, popcount, rank, rref

MAX_ENUM_DIMENSION = 26


class RmError(ValueError):
    pass


class DimensionTooLarge(RmError):
    pass


@dataclass(frozen=True)
class ClassicalCode:
    generator: BitMatrix
    length: int
    dimension: int

    @property
    def size(self) -> int:
        return 1 << self.dimension


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients A_0..A_n; A_l counts codewords of Hamming weight l."""

    coefficients: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.coefficients) - 1

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]


def rm_generator(r: int, m: int) -> ClassicalCode:
    """Generator matrix of RM(r, m): v_0..v_m and all <= r-fold products."""
    if not (0 <= r <= m):
        raise RmError(f"invalid order r={r} for m={m}")
    length = 1 << m
    v = [(1 << length) - 1]  # v_0 = all ones
    for i in range(1, m + 1):
        row = 0
        for j in range(length):
            if (j >> (i - 1)) & 1:
                row |= 1 << j
        v.append(row)
    rows = [v[0]]
    rows.extend(v[1:])
    for s in range(2, r + 1):
        for idx in combinations(range(1, m + 1), s):
            prod = (1 << length) - 1
            for i in idx:
                prod &= v[i]
            rows.append(prod)
    if r == 0:
        rows = [v[0]]
    mat = BitMatrix(length, rows)
    return ClassicalCode(mat, length, rank(mat))


def shorten(code: ClassicalCode) -> ClassicalCode:
    """Delete the first generator row (must be all ones) and first column."""
    if code.generator.num_rows == 0 or code.generator.row(0) != (1 << code.length) - 1:
        raise RmError("first generator row is not all-ones")
    rows = [row >> 1 for row in code.generator.rows[1:]]
    mat = BitMatrix(code.length - 1, rows)
    return ClassicalCode(mat, code.length - 1, rank(mat))


def weight_enumerator(code: ClassicalCode) -> WeightEnumerator:
    """Exact weight distribution by full codeword enumeration (Gray walk)."""
    if code.dimension > MAX_ENUM_DIMENSION:
        raise DimensionTooLarge(
            f"dimension {code.dimension} exceeds enumeration guard "
            f"{MAX_ENUM_DIMENSION}; use the MacWilliams transform of the dual"
        )
    basis = rref(code.generator).matrix.rows
    counts = [0] * (code.length + 1)
    word = 0
    counts[0] = 1
    for i in range(1, 1 << code.dimension):
        word ^= basis[(i & -i).bit_length() - 1]
        counts[popcount(word)] += 1
    return WeightEnumerator(tuple(counts))


def macwilliams(w: WeightEnumerator, code_size: int) -> WeightEnumerator:
    """Enumerator of the dual code, via the exact binomial expansion of
    W(C_dual; x, y) = W(C; y - x, x + y) / |C|."""
    n = w.length
    if w.total != code_size:
        raise RmError(f"code_size {code_size} != sum of coefficients {w.total}")
    out = []
    for j in range(n + 1):
        acc = 0
        for l, a in enumerate(w.coefficients):
            if a == 0:
                continue
            # coefficient of x^j y^(n-j) in (y-x)^l (x+y)^(n-l)
            term = sum(
                (-1) ** s * comb(l, s) * comb(n - l, j - s)
                for s in range(max(0, j - (n - l)), min(l, j) + 1)
            )
            acc += a * term
        q, rem = divmod(acc, code_size)
        if rem:
            raise RmError(f"non-integer dual coefficient at weight {j}")
        out.append(q)
    return WeightEnumerator(tuple(out))


def dual_enumerator(code: ClassicalCode) -> WeightEnumerator:
    return macwilliams(weight_enumerator(code), code.size)
