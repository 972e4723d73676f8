"""Constructors for the code families under study.

Families: thin surface codes (planar, Z-distance 3), quantum Reed-Muller
QRM(1, m), Shor codes and their block generalization, and concatenation
of an arbitrary [[q, 1]] code with a repetition code.
"""

from __future__ import annotations

from .code import CodeError, StabilizerCode, validate
from .pauli import PauliOperator
from .rm import rm_generator, shorten


def thin_surface(lx: int) -> StabilizerCode:
    """Planar surface code with 3 rows of horizontal qubits and lx columns.

    Layout: horizontal qubits h[r][c] (r = 0..2, c = 0..lx-1) and vertical
    qubits v[s][c] (s = 0..1, c = 1..lx-1), giving n = 5*lx - 2.  X-type
    generators are the 2*lx plaquettes (weight 3 on the left/right rough
    edges, 4 in the bulk); Z-type generators are the 3*(lx-1) dual
    plaquettes (weight 3 on the top/bottom rows, 4 in the middle).
    The lx vertical columns of 3 horizontal qubits carry the weight-3
    Z-type logical strings.
    """
    if lx < 2:
        raise CodeError(f"thin surface needs lx >= 2, got {lx}")
    n = 5 * lx - 2

    def h(r, c):
        return r * lx + c

    def v(s, c):  # c in 1..lx-1
        return 3 * lx + s * (lx - 1) + (c - 1)

    gens = []
    for s in range(2):  # X plaquettes
        for c in range(lx):
            qubits = [h(s, c), h(s + 1, c)]
            if c >= 1:
                qubits.append(v(s, c))
            if c + 1 <= lx - 1:
                qubits.append(v(s, c + 1))
            gens.append(PauliOperator.x_product(n, qubits))
    for r in range(3):  # Z dual plaquettes
        for c in range(1, lx):
            qubits = [h(r, c - 1), h(r, c)]
            if r >= 1:
                qubits.append(v(r - 1, c))
            if r <= 1:
                qubits.append(v(r, c))
            gens.append(PauliOperator.z_product(n, qubits))
    return validate(gens, f"thin-surface[lx={lx}]")


def qrm1(m: int) -> StabilizerCode:
    """QRM(1, m): CSS code on 2^m - 1 qubits from shortened RM codes."""
    if m < 3:
        raise CodeError(f"qrm1 needs m >= 3, got {m}")
    n = (1 << m) - 1
    gx = shorten(rm_generator(1, m))
    gz = shorten(rm_generator(m - 2, m))
    gens = [PauliOperator(n, row, 0, 0) for row in gx.generator.rows]
    gens += [PauliOperator(n, 0, row, 0) for row in gz.generator.rows]
    return validate(gens, f"qrm1[m={m}]")


def generalized_shor(k: int, n_r: int) -> StabilizerCode:
    """k blocks of n_r qubits: ZZ chains per block and k-1 X-type
    generators, each spanning two adjacent blocks (weight 2*n_r)."""
    if k < 3:
        raise CodeError(f"generalized Shor needs k >= 3, got {k}")
    if n_r < 2:
        raise CodeError(f"generalized Shor needs n_r >= 2, got {n_r}")
    n = k * n_r
    gens = []
    for b in range(k):
        base = b * n_r
        for i in range(n_r - 1):
            gens.append(PauliOperator.z_product(n, [base + i, base + i + 1]))
    for b in range(k - 1):
        gens.append(PauliOperator.x_product(n, range(b * n_r, (b + 2) * n_r)))
    return validate(gens, f"generalized-shor[k={k},nr={n_r}]")


def shor(n_r: int) -> StabilizerCode:
    """The [[3*n_r, 1, 3]] Shor code (three-block generalized Shor)."""
    if n_r < 3:
        raise CodeError(f"Shor code needs n_r >= 3, got {n_r}")
    code = generalized_shor(3, n_r)
    return StabilizerCode(code.n, code.generators, f"shor[nr={n_r}]")


def phase_flip_code() -> StabilizerCode:
    """The 3-qubit phase-flip code {XXI, IXX}."""
    gens = [
        PauliOperator.x_product(3, [0, 1]),
        PauliOperator.x_product(3, [1, 2]),
    ]
    return validate(gens, "phase-flip-3")


def concatenate_with_repetition(inner: StabilizerCode, n_r: int) -> StabilizerCode:
    """Encode every qubit of `inner` with an n_r-qubit repetition code.

    Block b occupies qubits b*n_r .. (b+1)*n_r - 1.  Inner generators are
    lifted by Z -> Z on the block's first qubit, X -> X on the whole
    block, Y -> i * X_block * Z_first (exact phase).
    """
    if inner.k != 1:
        raise CodeError(f"inner code must have k=1, got k={inner.k}")
    if n_r < 1:
        raise CodeError(f"n_r must be >= 1, got {n_r}")
    q = inner.n
    n = q * n_r
    gens = []
    for b in range(q):
        base = b * n_r
        for i in range(n_r - 1):
            gens.append(PauliOperator.z_product(n, [base + i, base + i + 1]))
    for g in inner.generators:
        lifted = PauliOperator.identity(n)
        for j in range(q):
            xb = (g.x >> j) & 1
            zb = (g.z >> j) & 1
            if not (xb or zb):
                continue
            factor = PauliOperator.identity(n)
            if xb:
                factor = factor * PauliOperator.x_product(
                    n, range(j * n_r, (j + 1) * n_r)
                )
            if zb:
                factor = factor * PauliOperator.z_product(n, [j * n_r])
            if xb and zb:  # lifted Y keeps the i of Y = i X Z
                factor = PauliOperator(n, factor.x, factor.z, factor.phase_exp + 1)
            lifted = lifted * factor
        if g.sign < 0:
            lifted = lifted.negate()
        gens.append(lifted)
    return validate(gens, f"concat[{inner.name}|nr={n_r}]")
