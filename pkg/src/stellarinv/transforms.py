"""Collective operators on the symmetric sector and their root-side actions.

Local unitaries restricted to the symmetric sector are exp(i h.S) and move
the stellar points by a rigid rotation; invertible local operations extend
h to complex values and move the points by a Moebius map.  Time reversal
sends every point to its antipode.  The exact parameter-to-geometry
correspondences implemented here are pinned by the tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.linalg import expm

from .errors import DegenerateInputError
from .states import RiemannPoint, SymmetricState, from_dicke

_DOMAIN_TOL = 1e-12


@dataclass(frozen=True)
class SpinOperators:
    """Collective spin matrices in the Dicke basis, m ascending."""

    sp: np.ndarray
    sm: np.ndarray
    sz: np.ndarray

    @property
    def sx(self) -> np.ndarray:
        return (self.sp + self.sm) / 2.0

    @property
    def sy(self) -> np.ndarray:
        return (self.sp - self.sm) / 2.0j


def spin_operators(n: int) -> SpinOperators:
    """Raising, lowering and z spin matrices for the n-qubit symmetric sector."""
    if n < 1:
        raise ValueError("n must be positive")
    s = n / 2.0
    dim = n + 1
    m = -s + np.arange(dim)
    sz = np.diag(m).astype(complex)
    sp = np.zeros((dim, dim), dtype=complex)
    for k in range(dim - 1):
        mm = m[k]
        sp[k + 1, k] = np.sqrt(s * (s + 1) - mm * (mm + 1))
    return SpinOperators(sp=sp, sm=sp.conj().T, sz=sz)


def lu_unitary(h: Sequence[float], n: int) -> np.ndarray:
    """Symmetric-sector local unitary exp(i (hx Sx + hy Sy + hz Sz)).

    The generator is Hermitian, so the exponential is taken through its
    eigendecomposition.
    """
    hx, hy, hz = (float(c) for c in h)
    ops = spin_operators(n)
    gen = hx * ops.sx + hy * ops.sy + hz * ops.sz
    w, vecs = np.linalg.eigh(gen)
    return (vecs * np.exp(1j * w)) @ vecs.conj().T


def rotation_from_h(h: Sequence[float]) -> np.ndarray:
    """Rotation of the stellar points induced by lu_unitary(h).

    Axis-angle rotation about (hx, hy, -hz)/|h| by the angle |h|; the
    mirrored z-component is the sign convention under which the operator and
    point pictures agree (checked by the correspondence tests).
    """
    hx, hy, hz = (float(c) for c in h)
    axis = np.array([hx, hy, -hz])
    theta = np.linalg.norm(axis)
    if theta < 1e-300:
        return np.eye(3)
    kx, ky, kz = axis / theta
    cross = np.array([[0.0, -kz, ky], [kz, 0.0, -kx], [-ky, kx, 0.0]])
    return np.eye(3) + np.sin(theta) * cross + (1.0 - np.cos(theta)) * (cross @ cross)


@dataclass(frozen=True)
class IloParameters:
    """Parameters (beta1, beta2, h) of an invertible symmetric-sector operation.

    Requires beta1 != beta2 and beta1 + beta2 != 0.  The unitary subclass is
    beta1 = -1/conj(beta2) with real h.
    """

    beta1: complex
    beta2: complex
    h: complex

    def __post_init__(self):
        b1 = complex(self.beta1)
        b2 = complex(self.beta2)
        object.__setattr__(self, "beta1", b1)
        object.__setattr__(self, "beta2", b2)
        object.__setattr__(self, "h", complex(self.h))
        scale = max(1.0, abs(b1), abs(b2))
        if abs(b1 - b2) <= _DOMAIN_TOL * scale:
            raise DegenerateInputError("parameterization requires beta1 != beta2")
        if abs(b1 + b2) <= _DOMAIN_TOL * scale:
            raise DegenerateInputError("parameterization requires beta1 + beta2 != 0")

    @property
    def gamma(self) -> complex:
        return np.exp(1j * (self.h / 2.0) * (self.beta1 - self.beta2) / (self.beta1 + self.beta2))

    def inverse(self) -> "IloParameters":
        return IloParameters(self.beta1, self.beta2, -self.h)


@dataclass(frozen=True)
class MobiusTransform:
    """Invertible 2x2 complex matrix acting projectively on roots."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError("Moebius matrix must be 2x2")
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(det) <= 1e-12 * max(1e-300, np.abs(m).max() ** 2):
            raise ValueError("Moebius matrix must be invertible")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls) -> "MobiusTransform":
        return cls(np.eye(2, dtype=complex))

    def inverse(self) -> "MobiusTransform":
        a, b = self.matrix[0]
        c, d = self.matrix[1]
        return MobiusTransform(np.array([[d, -b], [-c, a]]))


def ilo_operator(p: IloParameters, n: int) -> np.ndarray:
    """Invertible symmetric-sector operator
    exp(i h (S+/(b1+b2) + Sz - b1 b2 S-/(b1+b2))).

    Inverse is the operator of the same parameters with h -> -h.
    """
    ops = spin_operators(n)
    b1, b2 = p.beta1, p.beta2
    gen = 1j * p.h * (ops.sp / (b1 + b2) + ops.sz - b1 * b2 * ops.sm / (b1 + b2))
    return expm(gen)


def mobius_from_ilo(p: IloParameters) -> MobiusTransform:
    """Moebius map the operator of ``p`` induces on the stellar roots.

    Fixes beta1 and beta2 for any parameters; reduces to a scalar matrix at
    h = 0.
    """
    b1, b2 = p.beta1, p.beta2
    g = p.gamma
    gi = 1.0 / g
    return MobiusTransform(
        np.array(
            [
                [b2 * g - b1 * gi, b1 * b2 * (gi - g)],
                [g - gi, gi * b2 - g * b1],
            ]
        )
    )


def apply_mobius(m: MobiusTransform, p: RiemannPoint) -> RiemannPoint:
    """Projective action (a, b) -> (m00 a + m01 b, m10 a + m11 b)."""
    mat = m.matrix
    return RiemannPoint(
        mat[0, 0] * p.a + mat[0, 1] * p.b,
        mat[1, 0] * p.a + mat[1, 1] * p.b,
    )


def apply_operator(op: np.ndarray, state: SymmetricState) -> SymmetricState:
    """Apply a symmetric-sector matrix to a state and renormalize."""
    out = np.asarray(op, dtype=complex) @ state.amplitudes
    return from_dicke(state.n, out)


def time_reversal(state: SymmetricState) -> SymmetricState:
    """Antiunitary time reversal on Dicke amplitudes.

    Realizes conjugation followed by the symmetric-sector restriction of the
    n-fold (i sigma_y) product: b_k = (-1)^k conj(a_{n-k}).  Stellar points
    map to their antipodes, and applying it twice gives (-1)^n.
    """
    n = state.n
    a = state.amplitudes
    b = np.array([(-1) ** k * np.conj(a[n - k]) for k in range(n + 1)])
    return from_dicke(n, b)


def time_reversal_dense(t: np.ndarray) -> np.ndarray:
    """Time reversal on a dense qubit register: (i sigma_y)^(x n) after
    conjugation in the computational basis."""
    t = np.asarray(t, dtype=complex)
    n = int(np.log2(t.size))
    if t.size != 2**n:
        raise ValueError("dense vector length must be a power of two")
    out = np.empty_like(t)
    full = (1 << n) - 1
    for x in range(t.size):
        w = bin(x).count("1")
        out[full ^ x] = (-1) ** (n + w) * np.conj(t[x])
    return out


def y_theta(theta: float, u1, u2, u3) -> np.ndarray:
    """(cos(theta) + sin(theta) T) applied to the product state u1 u2 u3.

    Inputs are normalized single-qubit amplitude pairs; the output is the
    renormalized dense 3-qubit vector.  At theta = pi/4 the output is a
    maximally 3-tangled state for any inputs.
    """
    qubits = []
    for u in (u1, u2, u3):
        u = np.asarray(u, dtype=complex)
        if u.shape != (2,):
            raise ValueError("single-qubit states must have two amplitudes")
        if abs(np.linalg.norm(u) - 1.0) > 1e-9:
            raise ValueError("single-qubit states must be normalized")
        qubits.append(u)
    t = np.kron(np.kron(qubits[0], qubits[1]), qubits[2])
    out = np.cos(theta) * t + np.sin(theta) * time_reversal_dense(t)
    norm = np.linalg.norm(out)
    if norm < 1e-12:
        raise ValueError("output vanishes for these inputs (measure-zero coincidence)")
    return out / norm
