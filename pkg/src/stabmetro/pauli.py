"""Signed n-qubit Pauli operators in binary symplectic form.

An operator is stored as i**phase_exp * X(x) * Z(z) where x and z are
n-bit integers (bit i = qubit i) and phase_exp is mod 4.  With this
convention Y = i * X * Z, so a Hermitian operator satisfies
phase_exp == popcount(x & z) (mod 2), and its sign is the leftover
factor after folding one i per Y into the tensor string.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import parity, popcount

_CHAR_TO_XZ = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_XZ_TO_CHAR = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}


class PauliError(ValueError):
    pass


@dataclass(frozen=True)
class PauliOperator:
    n: int
    x: int
    z: int
    phase_exp: int = 0  # power of i

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.x >> self.n or self.z >> self.n:
            raise PauliError("x/z support exceeds qubit count")
        object.__setattr__(self, "x", self.x & mask)
        object.__setattr__(self, "z", self.z & mask)
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(n, 0, 0, 0)

    @classmethod
    def single(cls, n: int, qubit: int, kind: str) -> "PauliOperator":
        x, z = _CHAR_TO_XZ[kind]
        e = 1 if kind == "Y" else 0
        return cls(n, x << qubit, z << qubit, e)

    @classmethod
    def z_product(cls, n: int, qubits) -> "PauliOperator":
        z = 0
        for q in qubits:
            z |= 1 << q
        return cls(n, 0, z, 0)

    @classmethod
    def x_product(cls, n: int, qubits) -> "PauliOperator":
        x = 0
        for q in qubits:
            x |= 1 << q
        return cls(n, x, 0, 0)

    @classmethod
    def from_string(cls, s: str) -> "PauliOperator":
        s = s.strip()
        sign_exp = 0
        if s and s[0] in "+-":
            sign_exp = 2 if s[0] == "-" else 0
            s = s[1:]
        if not s:
            raise PauliError("empty Pauli string")
        x = z = 0
        y_count = 0
        for i, ch in enumerate(s):
            if ch not in _CHAR_TO_XZ:
                raise PauliError(f"invalid Pauli character {ch!r}")
            xb, zb = _CHAR_TO_XZ[ch]
            x |= xb << i
            z |= zb << i
            y_count += xb & zb
        return cls(len(s), x, z, (sign_exp + y_count) % 4)

    # -- basic properties ---------------------------------------------

    @property
    def is_hermitian(self) -> bool:
        return (self.phase_exp - popcount(self.x & self.z)) % 2 == 0

    @property
    def sign(self) -> int:
        """+1 or -1 for Hermitian operators."""
        s = (self.phase_exp - popcount(self.x & self.z)) % 4
        if s == 0:
            return 1
        if s == 2:
            return -1
        raise PauliError("operator is not Hermitian; sign undefined")

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def is_z_type(self) -> bool:
        return self.x == 0

    @property
    def is_x_type(self) -> bool:
        return self.z == 0

    def weight(self) -> int:
        return popcount(self.x | self.z)

    # -- algebra ------------------------------------------------------

    def multiply(self, other: "PauliOperator") -> "PauliOperator":
        if self.n != other.n:
            raise PauliError(f"dimension mismatch: {self.n} vs {other.n}")
        # Z(z1) X(x2) = (-1)^{z1.x2} X(x2) Z(z1)
        e = self.phase_exp + other.phase_exp + 2 * parity(self.z & other.x)
        return PauliOperator(self.n, self.x ^ other.x, self.z ^ other.z, e)

    def __mul__(self, other):
        return self.multiply(other)

    def negate(self) -> "PauliOperator":
        return PauliOperator(self.n, self.x, self.z, self.phase_exp + 2)

    def with_sign(self, sign: int) -> "PauliOperator":
        """Same projective operator with the given +/-1 sign (Hermitian only)."""
        e = popcount(self.x & self.z) + (0 if sign > 0 else 2)
        return PauliOperator(self.n, self.x, self.z, e)

    def commutes_with(self, other: "PauliOperator") -> bool:
        if self.n != other.n:
            raise PauliError(f"dimension mismatch: {self.n} vs {other.n}")
        return (parity(self.x & other.z) ^ parity(self.z & other.x)) == 0

    # -- serialization ------------------------------------------------

    def to_string(self) -> str:
        chars = []
        for i in range(self.n):
            chars.append(_XZ_TO_CHAR[((self.x >> i) & 1, (self.z >> i) & 1)])
        return ("+" if self.sign > 0 else "-") + "".join(chars)

    def __str__(self):
        return self.to_string()
