"""Validated stabilizer codes, sign normalization and Pauli classification.

A code is an abelian group of signed Hermitian Paulis given by an
independent generating set.  Classification of a query Pauli follows the
three-way split: anti-commutes with the group / belongs to it (up to
sign) / acts as a logical operator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .gf2 import BitMatrix, RrefResult, kernel_basis, rref
from .pauli import PauliOperator


class CodeError(ValueError):
    pass


class NonCommutingError(CodeError):
    def __init__(self, i: int, j: int):
        super().__init__(f"generators {i} and {j} anti-commute")
        self.pair = (i, j)


class DependentGeneratorsError(CodeError):
    pass


class MinusIdentityError(CodeError):
    pass


class CodeFileError(CodeError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class LogicalTag(enum.Enum):
    STABILIZER = "stabilizer"
    NEGATIVE_STABILIZER = "negative_stabilizer"
    ANTI_COMMUTES = "anti_commutes"
    LOGICAL = "logical"


@dataclass(frozen=True)
class LogicalClass:
    tag: LogicalTag
    sign: Optional[int] = None  # for LOGICAL: +/-1 relative to the reference


@dataclass(frozen=True)
class ZSubgroup:
    """RREF basis of the Z-type (trivial X part) subgroup."""

    basis: BitMatrix
    pivots: Tuple[int, ...]
    genmasks: Tuple[int, ...]  # generator combination per basis row

    def member(self, v: int) -> Optional[int]:
        """Generator combination reproducing Z(v), or None."""
        mask = 0
        x = v
        rows = self.basis.rows
        for i, c in enumerate(self.pivots):
            if (x >> c) & 1:
                x ^= rows[i]
                mask ^= self.genmasks[i]
        return mask if x == 0 else None


class StabilizerCode:
    """An [[n, k]] stabilizer code; use validate() to construct safely."""

    def __init__(self, n: int, generators: Sequence[PauliOperator], name: str = ""):
        self.n = n
        self.generators = tuple(generators)
        self.name = name
        self._cache: dict = {}

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def symplectic_matrix(self) -> BitMatrix:
        """Rows (x | z) of the generators, 2n columns (x in the low bits)."""
        key = "sympl"
        if key not in self._cache:
            self._cache[key] = BitMatrix(
                2 * self.n, (g.x | (g.z << self.n) for g in self.generators)
            )
        return self._cache[key]

    def symplectic_rref(self) -> RrefResult:
        if "sympl_rref" not in self._cache:
            self._cache["sympl_rref"] = rref(self.symplectic_matrix())
        return self._cache["sympl_rref"]

    @property
    def rank(self) -> int:
        return self.symplectic_rref().rank

    @property
    def k(self) -> int:
        return self.n - self.rank

    def z_subgroup(self) -> ZSubgroup:
        if "zsub" not in self._cache:
            gx = BitMatrix(self.n, (g.x for g in self.generators))
            # combinations of generators with vanishing total X part
            combos = kernel_basis(gx.transpose())
            zrows = []
            masks = []
            for c in combos.rows:
                z = 0
                m = c
                while m:
                    i = (m & -m).bit_length() - 1
                    z ^= self.generators[i].z
                    m &= m - 1
                zrows.append(z)
                masks.append(c)
            rr = rref(BitMatrix(self.n, zrows))
            out_masks = []
            for combo in rr.combos:
                g = 0
                m = combo
                while m:
                    i = (m & -m).bit_length() - 1
                    g ^= masks[i]
                    m &= m - 1
                out_masks.append(g)
            self._cache["zsub"] = ZSubgroup(rr.matrix, rr.pivots, tuple(out_masks))
        return self._cache["zsub"]

    def single_z_qubits(self) -> Tuple[int, ...]:
        """Qubits i for which Z_i itself is a stabilizer (degenerate input)."""
        if "single_z" not in self._cache:
            zs = self.z_subgroup()
            self._cache["single_z"] = tuple(
                i for i in range(self.n) if zs.member(1 << i) is not None
            )
        return self._cache["single_z"]

    def product_of(self, genmask: int) -> PauliOperator:
        p = PauliOperator.identity(self.n)
        m = genmask
        while m:
            i = (m & -m).bit_length() - 1
            p = p * self.generators[i]
            m &= m - 1
        return p

    def __repr__(self):
        return f"StabilizerCode(n={self.n}, gens={self.num_generators}, name={self.name!r})"


def validate(generators: Sequence[PauliOperator], name: str = "") -> StabilizerCode:
    """Check commutation, independence and -I exclusion; return the code."""
    gens = list(generators)
    if not gens:
        raise CodeError("empty generator list")
    n = gens[0].n
    for i, g in enumerate(gens):
        if g.n != n:
            raise CodeError(f"generator {i} acts on {g.n} qubits, expected {n}")
        if not g.is_hermitian:
            raise CodeError(f"generator {i} is not Hermitian")
        if g.is_identity:
            raise CodeError(f"generator {i} is (+/-) identity")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not gens[i].commutes_with(gens[j]):
                raise NonCommutingError(i, j)
    code = StabilizerCode(n, gens, name)
    if code.rank < len(gens):
        # dependent set: decide whether some relation multiplies to -I
        sympl = code.symplectic_matrix()
        for combo in kernel_basis(sympl.transpose()).rows:
            if code.product_of(combo).sign < 0:
                raise MinusIdentityError("a generator relation multiplies to -I")
        raise DependentGeneratorsError("generators are not independent")
    return code


def normalize_signs(code: StabilizerCode) -> StabilizerCode:
    """Regenerate the code so every Z-type group element has a + sign.

    Gaussian elimination on the X parts yields a generating set with a
    maximal number of Z-type generators; those get their signs forced to
    +, which fixes the sign of every Z-type element of the group.
    """
    gx = BitMatrix(code.n, (g.x for g in code.generators))
    rr = rref(gx)
    new_gens: List[PauliOperator] = []
    for combo in rr.combos:  # generators with independent X parts
        new_gens.append(code.product_of(combo))
    for combo in kernel_basis(gx.transpose()).rows:  # Z-type combinations
        new_gens.append(code.product_of(combo).with_sign(+1))
    return validate(new_gens, code.name)


def classify(
    code: StabilizerCode,
    p: PauliOperator,
    reference: Optional[PauliOperator] = None,
) -> LogicalClass:
    """Three-way classification of a Hermitian Pauli against the code."""
    if p.n != code.n:
        raise CodeError(f"operator acts on {p.n} qubits, expected {code.n}")
    for g in code.generators:
        if not p.commutes_with(g):
            return LogicalClass(LogicalTag.ANTI_COMMUTES)
    rr = code.symplectic_rref()
    v = p.x | (p.z << code.n)
    residual = v
    combo = 0
    for i, c in enumerate(rr.pivots):
        if (residual >> c) & 1:
            residual ^= rr.matrix.row(i)
            combo ^= rr.combos[i]
    if residual == 0:
        q = code.product_of(combo)
        tag = (
            LogicalTag.STABILIZER
            if q.phase_exp == p.phase_exp
            else LogicalTag.NEGATIVE_STABILIZER
        )
        return LogicalClass(tag)
    sign = None
    if reference is not None and p.commutes_with(reference):
        rel = classify(code, p * reference)
        if rel.tag == LogicalTag.STABILIZER:
            sign = +1
        elif rel.tag == LogicalTag.NEGATIVE_STABILIZER:
            sign = -1
    return LogicalClass(LogicalTag.LOGICAL, sign)


@dataclass(frozen=True)
class DistanceReport:
    passed: bool
    violations: Tuple[PauliOperator, ...]
    checked: int


def verify_distance_3(code: StabilizerCode, max_violations: int = 16) -> DistanceReport:
    """Exhaustively classify all weight-1 and weight-2 Paulis.

    Passes iff none of them is a logical operator, i.e. the code detects
    every single- and two-qubit error.
    """
    if code.k != 1:
        raise CodeError(f"distance check requires k=1, got k={code.k}")
    n = code.n
    violations = []
    checked = 0
    kinds = "XYZ"
    singles = [
        PauliOperator.single(n, q, a) for q in range(n) for a in kinds
    ]
    for p in singles:
        checked += 1
        if classify(code, p).tag == LogicalTag.LOGICAL:
            violations.append(p)
    for i in range(n):
        for j in range(i + 1, n):
            for a in kinds:
                pa = PauliOperator.single(n, i, a)
                for b in kinds:
                    checked += 1
                    p = pa * PauliOperator.single(n, j, b)
                    if classify(code, p).tag == LogicalTag.LOGICAL:
                        violations.append(p)
                        if len(violations) >= max_violations:
                            return DistanceReport(False, tuple(violations), checked)
    return DistanceReport(not violations, tuple(violations), checked)


def z_subgroup_basis(code: StabilizerCode) -> BitMatrix:
    """RREF basis (Z parts) of the subgroup of Z-type stabilizers."""
    return code.z_subgroup().basis


# -- code file format ------------------------------------------------
#
# line 1: n=<int> name=<string>
# then one generator per line in Pauli string form, e.g. +ZZIIIIIII


def save_code(code: StabilizerCode, path: str) -> None:
    with open(path, "w") as f:
        f.write(f"n={code.n} name={code.name}\n")
        for g in code.generators:
            f.write(g.to_string() + "\n")


def load_code(path: str) -> StabilizerCode:
    with open(path) as f:
        lines = f.read().splitlines()
    if not lines:
        raise CodeFileError(1, "empty file")
    header = lines[0].strip()
    if not header.startswith("n="):
        raise CodeFileError(1, "expected header 'n=<int> name=<string>'")
    try:
        n_part, _, rest = header.partition(" ")
        n = int(n_part[2:])
    except ValueError:
        raise CodeFileError(1, "invalid qubit count") from None
    name = rest[5:] if rest.startswith("name=") else ""
    gens = []
    for idx, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line:
            continue
        try:
            p = PauliOperator.from_string(line)
        except ValueError as e:
            raise CodeFileError(idx, str(e)) from None
        if p.n != n:
            raise CodeFileError(idx, f"generator has {p.n} qubits, expected {n}")
        gens.append(p)
    try:
        return validate(gens, name)
    except CodeError as e:
        raise CodeError(f"{path}: {e}") from e
