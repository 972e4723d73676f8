"""Shared helpers: a dense matrix representation of Pauli operators used
as an independent oracle, plus frequently reused code instances."""

import numpy as np
import pytest

from stabmetro.constructors import (
    generalized_shor,
    phase_flip_code,
    qrm1,
    shor,
    thin_surface,
)

_I = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def pauli_matrix(p):
    """Dense 2^n x 2^n matrix of a PauliOperator (qubit i = index bit i)."""
    m = np.array([[1.0]], dtype=complex)
    for i in range(p.n):
        xf = _X if (p.x >> i) & 1 else _I
        zf = _Z if (p.z >> i) & 1 else _I
        # qubit i lives in index bit i, so later qubits go on the kron left
        m = np.kron(xf @ zf, m)
    return (1j ** p.phase_exp) * m


@pytest.fixture(scope="session")
def shor3():
    return shor(3)


@pytest.fixture(scope="session")
def qrm3():
    return qrm1(3)


@pytest.fixture(scope="session")
def thin2():
    return thin_surface(2)


@pytest.fixture(scope="session")
def thin3():
    return thin_surface(3)


@pytest.fixture(scope="session")
def gshor43():
    return generalized_shor(4, 3)


@pytest.fixture(scope="session")
def phase_flip():
    return phase_flip_code()
