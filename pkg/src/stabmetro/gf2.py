"""Bit-packed linear algebra over GF(2).

Rows are stored as Python integers (bit i = column i), so every row
operation is a single word-wise XOR regardless of width.  All functions
are pure; BitMatrix instances are treated as immutable after creation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


def popcount(v: int) -> int:
    return bin(v).count("1")


def parity(v: int) -> int:
    return popcount(v) & 1


class BitMatrix:
    """A rows x cols matrix over GF(2), one integer per row."""

    __slots__ = ("cols", "_rows")

    def __init__(self, cols: int, rows: Optional[Iterable[int]] = None):
        if cols < 0:
            raise ValueError("cols must be nonnegative")
        self.cols = cols
        mask = (1 << cols) - 1
        self._rows = tuple(r & mask for r in rows) if rows is not None else ()

    @classmethod
    def from_lists(cls, bits: Sequence[Sequence[int]]) -> "BitMatrix":
        if not bits:
            return cls(0)
        cols = len(bits[0])
        rows = []
        for row in bits:
            if len(row) != cols:
                raise ValueError("ragged rows")
            rows.append(sum((b & 1) << i for i, b in enumerate(row)))
        return cls(cols, rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, (1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(cols, (0,) * rows)

    @property
    def num_rows(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def row(self, i: int) -> int:
        return self._rows[i]

    def get(self, i: int, j: int) -> int:
        return (self._rows[i] >> j) & 1

    def to_lists(self) -> list:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self._rows]

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.cols):
            cols.append(sum(((r >> j) & 1) << i for i, r in enumerate(self._rows)))
        return BitMatrix(self.num_rows, cols)

    def combine(self, combo: int) -> int:
        """XOR of the rows selected by the bits of `combo`."""
        acc = 0
        c = combo
        while c:
            i = (c & -c).bit_length() - 1
            acc ^= self._rows[i]
            c &= c - 1
        return acc

    def mul_vec(self, v: int) -> int:
        """Matrix-vector product: bit i of result = <row_i, v>."""
        out = 0
        for i, r in enumerate(self._rows):
            out |= parity(r & v) << i
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.cols == other.cols
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.cols, self._rows))

    def __repr__(self):
        return f"BitMatrix({self.num_rows}x{self.cols})"


@dataclass(frozen=True)
class RrefResult:
    matrix: BitMatrix
    pivots: tuple
    rank: int
    # combos[i] selects the original rows whose XOR equals matrix.row(i)
    combos: tuple


def rref(m: BitMatrix) -> RrefResult:
    """Reduced row-echelon form over GF(2), with row-combination tracking."""
    rows = list(m.rows)
    combos = [1 << i for i in range(len(rows))]
    pivots = []
    r = 0
    for c in range(m.cols):
        bit = 1 << c
        p = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        combos[r], combos[p] = combos[p], combos[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
                combos[i] ^= combos[r]
        pivots.append(c)
        r += 1
    # nonzero rows first, in pivot order; zero rows dropped from the matrix
    out = BitMatrix(m.cols, rows[:r])
    return RrefResult(out, tuple(pivots), r, tuple(combos[:r]))


def rank(m: BitMatrix) -> int:
    return rref(m).rank


def reduce_vector(rr: RrefResult, v: int) -> tuple:
    """Reduce v against an RREF; returns (residual, combo over rref rows)."""
    combo = 0
    for i, c in enumerate(rr.pivots):
        if (v >> c) & 1:
            v ^= rr.matrix.row(i)
            combo |= 1 << i
    return v, combo


def in_row_space(m: BitMatrix, v: int) -> Optional[int]:
    """Combination of rows of m reproducing v, or None.

    The result is a bitmask over the original rows of m; XOR-ing the
    selected rows gives back v exactly.
    """
    if v >> m.cols:
        raise ValueError(f"vector has more than {m.cols} bits")
    rr = rref(m)
    residual, rcombo = reduce_vector(rr, v)
    if residual:
        return None
    combo = 0
    c = rcombo
    while c:
        i = (c & -c).bit_length() - 1
        combo ^= rr.combos[i]
        c &= c - 1
    return combo


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of {v : m v = 0}; dimension is cols - rank."""
    rr = rref(m)
    pivot_set = set(rr.pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = 1 << f
        for i, c in enumerate(rr.pivots):
            if (rr.matrix.row(i) >> f) & 1:
                v |= 1 << c
        basis.append(v)
    return BitMatrix(m.cols, basis)
