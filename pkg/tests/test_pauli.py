"""Signed Pauli algebra, cross-checked against a dense matrix oracle."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabmetro.pauli import PauliError, PauliOperator

from conftest import pauli_matrix


def _pauli_on(n):
    return st.tuples(
        st.integers(0, (1 << n) - 1),
        st.integers(0, (1 << n) - 1),
        st.integers(0, 3),
    ).map(lambda t: PauliOperator(n, *t))


def pauli_tuple(count, max_n=3):
    """`count` random operators sharing a common qubit number."""
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(*[_pauli_on(n)] * count)
    )


def hermitian_paulis(max_n=5):
    def fix(t):
        n, x, z, sign = t
        e = bin(x & z).count("1") + (0 if sign else 2)
        return PauliOperator(n, x, z, e)

    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.integers(0, (1 << n) - 1),
            st.integers(0, (1 << n) - 1),
            st.booleans(),
        ).map(fix)
    )


# -- fixed examples ---------------------------------------------------


def test_single_qubit_xz_product():
    x = PauliOperator.single(1, 0, "X")
    z = PauliOperator.single(1, 0, "Z")
    y = PauliOperator.single(1, 0, "Y")
    prod = x * z
    assert (prod.x, prod.z, prod.phase_exp) == (1, 1, 0)  # X Z = -i Y
    assert np.allclose(pauli_matrix(prod), -1j * pauli_matrix(y))
    zx = z * x
    assert (zx.x, zx.z, zx.phase_exp) == (1, 1, 2)  # Z X = +i Y
    assert np.allclose(pauli_matrix(zx), 1j * pauli_matrix(y))


def test_y_convention():
    y = PauliOperator.single(2, 1, "Y")
    assert y.is_hermitian and y.sign == 1
    assert y.phase_exp == 1  # Y = i X Z
    assert np.allclose(
        pauli_matrix(y),
        np.kron(np.array([[0, -1j], [1j, 0]]), np.eye(2)),
    )


def test_overlap_cancellation():
    a = PauliOperator.z_product(3, [0, 1])
    b = PauliOperator.z_product(3, [1, 2])
    prod = a * b
    assert prod == PauliOperator.z_product(3, [0, 2])
    assert prod.sign == 1


def test_squares_to_identity():
    for s in ("+XYZ", "-ZZXI", "+YYYY"):
        p = PauliOperator.from_string(s)
        sq = p * p
        assert sq.is_identity and sq.sign == 1


def test_commutes_examples():
    zz = PauliOperator.from_string("+ZZ")
    xx = PauliOperator.from_string("+XX")
    xi = PauliOperator.from_string("+XI")
    assert zz.commutes_with(xx)  # even overlap
    assert not zz.commutes_with(xi)  # odd overlap
    assert zz.commutes_with(zz)


def test_weight():
    assert PauliOperator.from_string("+IXYZ").weight() == 3
    assert PauliOperator.x_product(9, range(6)).weight() == 6
    assert PauliOperator.identity(4).weight() == 0


def test_string_round_trip():
    for s in ("+IXYZ", "-ZZZZZ", "+Y", "-IXI"):
        p = PauliOperator.from_string(s)
        assert p.to_string() == s
        assert PauliOperator.from_string(p.to_string()) == p


def test_from_string_errors():
    with pytest.raises(PauliError):
        PauliOperator.from_string("+")
    with pytest.raises(PauliError):
        PauliOperator.from_string("XQZ")


def test_sign_of_non_hermitian_raises():
    assert PauliOperator(1, 1, 1, 1).sign == 1  # i X Z = Y, Hermitian
    with pytest.raises(PauliError):
        PauliOperator(1, 0, 1, 1).sign  # i Z


def test_dimension_mismatch():
    with pytest.raises(PauliError):
        PauliOperator.identity(2) * PauliOperator.identity(3)
    with pytest.raises(PauliError):
        PauliOperator.identity(2).commutes_with(PauliOperator.identity(3))


def test_with_sign_and_negate():
    p = PauliOperator.from_string("+ZXZ")
    assert p.negate().sign == -1
    assert p.negate().negate() == p
    assert p.with_sign(-1).to_string() == "-ZXZ"
    assert p.with_sign(-1).with_sign(+1) == p


# -- randomized properties against the matrix oracle ------------------


@settings(max_examples=300, deadline=None)
@given(pauli_tuple(2))
def test_multiply_matches_matrices(pair):
    a, b = pair
    prod = a * b
    assert np.allclose(pauli_matrix(prod), pauli_matrix(a) @ pauli_matrix(b))


@settings(max_examples=300, deadline=None)
@given(pauli_tuple(3, max_n=6))
def test_multiply_associative(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)


@settings(max_examples=250, deadline=None)
@given(pauli_tuple(2))
def test_commutes_matches_matrices(pair):
    a, b = pair
    ma, mb = pauli_matrix(a), pauli_matrix(b)
    assert a.commutes_with(b) == np.allclose(ma @ mb, mb @ ma)
    # projective parts always match; anti-commutation flips the phase
    ab, ba = a * b, b * a
    assert (ab.x, ab.z) == (ba.x, ba.z)
    expected = 0 if a.commutes_with(b) else 2
    assert (ab.phase_exp - ba.phase_exp) % 4 == expected


@settings(max_examples=250, deadline=None)
@given(hermitian_paulis())
def test_hermitian_round_trip(a):
    assert a.is_hermitian
    assert a.sign in (+1, -1)
    assert a.to_string()[0] == ("+" if a.sign > 0 else "-")
    assert PauliOperator.from_string(a.to_string()) == a


def _hermitian_pair(n):
    def fix(t):
        x, z, sign = t
        e = bin(x & z).count("1") + (0 if sign else 2)
        return PauliOperator(n, x, z, e)

    one = st.tuples(
        st.integers(0, (1 << n) - 1),
        st.integers(0, (1 << n) - 1),
        st.booleans(),
    ).map(fix)
    return st.tuples(one, one)


@settings(max_examples=250, deadline=None)
@given(st.integers(1, 3).flatmap(_hermitian_pair))
def test_commuting_hermitian_product_is_hermitian(pair):
    a, b = pair
    prod = a * b
    if a.commutes_with(b):
        assert prod.is_hermitian
        m = pauli_matrix(prod)
        assert np.allclose(m, m.conj().T)
    else:
        assert not prod.is_hermitian
