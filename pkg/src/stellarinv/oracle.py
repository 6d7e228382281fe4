"""Brute-force reference route through the full 2^n Hilbert space.

Symmetric states are expanded into dense computational-basis vectors and
the invariants are evaluated from their textbook definitions (reduced
density matrices, spin-flip concurrence, hyperdeterminant 3-tangle),
independently of any stellar-geometry formula.  Qubit 1 is the most
significant bit of the basis index.
"""
from __future__ import annotations

from math import comb
from typing import Sequence

import numpy as np

from .lu import LuInvariantSet
from .states import SymmetricState

#: Dense vectors are capped at 2^14 amplitudes.
MAX_DENSE_QUBITS = 14

_NORM_TOL = 1e-10

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


def dicke_expand(state: SymmetricState) -> np.ndarray:
    """Expand Dicke amplitudes into the full 2^n computational basis.

    |s, m> becomes the normalized equal superposition of all bitstrings of
    weight s + m, so the dense amplitude of a bitstring of weight w is
    a_w / sqrt(binom(n, w)).
    """
    n = state.n
    if n > MAX_DENSE_QUBITS:
        raise ValueError(f"dense expansion capped at n = {MAX_DENSE_QUBITS}")
    factors = np.array([state.amplitudes[w] / np.sqrt(comb(n, w)) for w in range(n + 1)])
    weights = np.array([bin(x).count("1") for x in range(2**n)])
    return factors[weights]


def density_matrix(t: np.ndarray) -> np.ndarray:
    """Pure-state density matrix |t><t|."""
    t = np.asarray(t, dtype=complex)
    return np.outer(t, t.conj())


def _qubit_count(dim: int) -> int:
    n = int(round(np.log2(dim)))
    if 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def partial_trace(rho: np.ndarray, keep: Sequence[int]) -> np.ndarray:
    """Reduced density matrix over the 1-based qubit indices in ``keep``.

    Qubit 1 is the most significant bit.  The kept subsystem keeps its
    internal ordering; the trace is exact and preserves the total trace.
    """
    rho = np.asarray(rho, dtype=complex)
    n = _qubit_count(rho.shape[0])
    keep0 = sorted({int(q) - 1 for q in keep})
    if not keep0 or keep0[0] < 0 or keep0[-1] >= n:
        raise ValueError(f"keep must be a non-empty subset of 1..{n}")
    if len(keep0) != len(keep):
        raise ValueError("keep contains duplicate indices")
    reshaped = rho.reshape((2,) * (2 * n))
    bra = list(range(n))
    ket = [i + n if i in keep0 else i for i in range(n)]
    out_axes = keep0 + [i + n for i in keep0]
    reduced = np.einsum(reshaped, bra + ket, out_axes)
    dim = 2 ** len(keep0)
    return reduced.reshape(dim, dim)


def _check_normalized(t: np.ndarray, n: int) -> np.ndarray:
    t = np.asarray(t, dtype=complex)
    if t.shape != (2**n,):
        raise ValueError(f"expected a dense {n}-qubit vector")
    if abs(np.linalg.norm(t) - 1.0) > _NORM_TOL:
        raise ValueError("dense state must be normalized")
    return t


def three_tangle(t: np.ndarray) -> float:
    """3-tangle of a pure 3-qubit state via the degree-4 hyperdeterminant."""
    t = _check_normalized(t, 3)

    def g(i, j, k):
        return t[(i << 2) | (j << 1) | k]

    d1 = (
        g(0, 0, 0) ** 2 * g(1, 1, 1) ** 2
        + g(0, 0, 1) ** 2 * g(1, 1, 0) ** 2
        + g(0, 1, 0) ** 2 * g(1, 0, 1) ** 2
        + g(1, 0, 0) ** 2 * g(0, 1, 1) ** 2
    )
    d2 = (
        g(0, 0, 0) * g(1, 1, 1) * g(0, 1, 1) * g(1, 0, 0)
        + g(0, 0, 0) * g(1, 1, 1) * g(1, 0, 1) * g(0, 1, 0)
        + g(0, 0, 0) * g(1, 1, 1) * g(1, 1, 0) * g(0, 0, 1)
        + g(0, 1, 1) * g(1, 0, 0) * g(1, 0, 1) * g(0, 1, 0)
        + g(0, 1, 1) * g(1, 0, 0) * g(1, 1, 0) * g(0, 0, 1)
        + g(1, 0, 1) * g(0, 1, 0) * g(1, 1, 0) * g(0, 0, 1)
    )
    d3 = (
        g(0, 0, 0) * g(1, 1, 0) * g(1, 0, 1) * g(0, 1, 1)
        + g(1, 1, 1) * g(0, 0, 1) * g(0, 1, 0) * g(1, 0, 0)
    )
    return float(4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3))


def oracle_lu_invariants3(t: np.ndarray) -> LuInvariantSet:
    """The six LU invariants of a dense 3-qubit state from first principles.

    I1 = Tr[rho]; I2..I4 are the single-qubit purities 2 Tr[rho_i^2] - 1;
    I5 = Tr[3 (rho_1 x rho_2) rho_12] - Tr[rho_1^3] - Tr[rho_2^3] (the
    degree-6 invariant); I6 is the 3-tangle.
    """
    t = _check_normalized(t, 3)
    rho = density_matrix(t)
    r1 = partial_trace(rho, [1])
    r2 = partial_trace(rho, [2])
    r3 = partial_trace(rho, [3])
    r12 = partial_trace(rho, [1, 2])
    i1 = float(np.trace(rho).real)
    i2 = float(2.0 * np.trace(r1 @ r1).real - 1.0)
    i3 = float(2.0 * np.trace(r2 @ r2).real - 1.0)
    i4 = float(2.0 * np.trace(r3 @ r3).real - 1.0)
    i5 = float(
        (
            3.0 * np.trace(np.kron(r1, r2) @ r12)
            - np.trace(r1 @ r1 @ r1)
            - np.trace(r2 @ r2 @ r2)
        ).real
    )
    return LuInvariantSet(i1, i2, i3, i4, i5, three_tangle(t))


def wootters_concurrence(t: np.ndarray) -> float:
    """Concurrence of a dense 2-qubit state via the spin-flip construction.

    C = max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of
    the eigenvalues of rho (sy x sy) conj(rho) (sy x sy).  That product is
    similar to M M^dagger with M = sqrt(rho) (sy x sy) conj(sqrt(rho)), and
    for the pure states handled here sqrt(rho) = rho, so the l_i are read
    off as the singular values of rho (sy x sy) conj(rho); this avoids the
    sqrt(eps) noise floor of the raw eigenvalue route.
    """
    t = _check_normalized(t, 2)
    rho = density_matrix(t)
    yy = np.kron(_SIGMA_Y, _SIGMA_Y)
    lam = np.linalg.svd(rho @ yy @ rho.conj(), compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))
