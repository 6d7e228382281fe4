"""Symmetric n-qubit states and their stellar representation.

A symmetric state of n qubits is stored as its n+1 Dicke amplitudes a_m,
ordered by ascending m = -s..s with s = n/2.  The state is equivalently a
polynomial with coefficient sqrt(binom(n, k)) * a_{k-s} on alpha^k; its n
roots, completed by points at infinity whenever the degree drops below n,
map to n points on the unit sphere by inverse stereographic projection
(alpha = 0 at the north pole, alpha = infinity at the south pole).

Everything here is immutable after construction and every function is pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

#: Relative threshold below which a leading polynomial coefficient counts as
#: zero, moving one root to infinity.
LEADING_COEFF_TOL = 1e-12

#: After normalizing a projective pair to max(|a|, |b|) = 1, a point whose
#: |b| falls at or below this bound is the point at infinity.
INFINITY_TOL = 1e-12

_NORM_TOL = 1e-12


class RiemannPoint:
    """Point on the extended complex plane, stored as a projective pair.

    ``(a, b)`` represents alpha = a/b, with b = 0 the point at infinity.
    Pairs are rescaled so that max(|a|, |b|) = 1; any pair with |b| below
    :data:`INFINITY_TOL` after rescaling collapses to the exact infinity
    pair (1, 0).  Scaling a pair by a nonzero complex number leaves the
    point unchanged.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: complex, b: complex = 1.0):
        a = complex(a)
        b = complex(b)
        scale = max(abs(a), abs(b))
        if scale == 0.0 or not np.isfinite(scale):
            raise ValueError(f"invalid projective pair ({a}, {b})")
        a /= scale
        b /= scale
        if abs(b) <= INFINITY_TOL:
            a, b = 1.0 + 0.0j, 0.0j
        self.a = a
        self.b = b

    @classmethod
    def infinity(cls) -> "RiemannPoint":
        return cls(1.0, 0.0)

    @property
    def is_infinite(self) -> bool:
        return self.b == 0

    @property
    def value(self) -> complex:
        """Finite value alpha = a/b; raises for the point at infinity."""
        if self.is_infinite:
            raise ValueError("point at infinity has no finite value")
        return self.a / self.b

    def antipode(self) -> "RiemannPoint":
        """Image under alpha -> -1/conj(alpha), the sphere antipodal map."""
        return RiemannPoint(-self.b.conjugate(), self.a.conjugate())

    def __complex__(self) -> complex:
        return self.value

    def __repr__(self) -> str:
        if self.is_infinite:
            return "RiemannPoint(inf)"
        return f"RiemannPoint({self.value!r})"


@dataclass(frozen=True)
class SphereVector:
    """Unit vector in R^3, the stellar image of one polynomial root."""

    x: float
    y: float
    z: float

    def dot(self, other: "SphereVector") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @classmethod
    def from_array(cls, v) -> "SphereVector":
        x, y, z = (float(c) for c in v)
        return cls(x, y, z)


def to_sphere(p: RiemannPoint) -> SphereVector:
    """Inverse stereographic image of a point of the extended plane.

    alpha maps to (2 Re alpha, 2 Im alpha, 1 - |alpha|^2) / (1 + |alpha|^2);
    infinity maps to the south pole (0, 0, -1).  Computed on the projective
    pair, so no intermediate overflows near infinity.
    """
    na = abs(p.a) ** 2
    nb = abs(p.b) ** 2
    d = na + nb
    w = p.a * p.b.conjugate()
    return SphereVector(2.0 * w.real / d, 2.0 * w.imag / d, (nb - na) / d)


def from_sphere(v: SphereVector) -> RiemannPoint:
    """Forward stereographic map, inverse of :func:`to_sphere`.

    Uses alpha = (x+iy)/(1+z) on the northern hemisphere and the equivalent
    form (1-z)/(x-iy) on the southern one, which stays accurate near the
    south pole and returns exact infinity there.
    """
    if v.z >= 0.0:
        return RiemannPoint(complex(v.x, v.y), 1.0 + v.z)
    return RiemannPoint(1.0 - v.z, complex(v.x, -v.y))


def chordal_distance(p: RiemannPoint, q: RiemannPoint) -> float:
    """Euclidean distance of the sphere images; ranges over [0, 2]."""
    cross = p.a * q.b - q.a * p.b
    np2 = abs(p.a) ** 2 + abs(p.b) ** 2
    nq2 = abs(q.a) ** 2 + abs(q.b) ** 2
    return 2.0 * abs(cross) / np.sqrt(np2 * nq2)


def multiset_distance(
    ps: Sequence[RiemannPoint], qs: Sequence[RiemannPoint]
) -> float:
    """Greedy nearest-matching distance between two point multisets.

    Repeatedly pairs the globally closest remaining points and returns the
    largest chordal distance among the chosen pairs.  Adequate for the
    separations used in tests; not certified for near-degenerate multisets.
    """
    if len(ps) != len(qs):
        raise ValueError("multisets must have equal size")
    left = list(ps)
    right = list(qs)
    worst = 0.0
    while left:
        best = None
        for i, p in enumerate(left):
            for j, q in enumerate(right):
                d = chordal_distance(p, q)
                if best is None or d < best[0]:
                    best = (d, i, j)
        worst = max(worst, best[0])
        left.pop(best[1])
        right.pop(best[2])
    return worst


@dataclass(frozen=True, eq=False)
class SymmetricState:
    """Symmetric n-qubit state given by n+1 Dicke amplitudes, m ascending.

    Amplitudes are normalized to unit Euclidean norm at construction and the
    backing array is frozen.
    """

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"qubit count must be positive, got {self.n}")
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.n + 1,):
            raise ValueError(
                f"expected {self.n + 1} amplitudes for n={self.n}, got shape {amps.shape}"
            )
        norm = np.linalg.norm(amps)
        if norm < _NORM_TOL:
            raise ValueError("amplitude vector is zero")
        amps = amps / norm
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def spin(self) -> float:
        return self.n / 2.0


@dataclass(frozen=True, eq=False)
class MajoranaPolynomial:
    """Polynomial of a symmetric state, coefficients by ascending power."""

    coefficients: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coefficients, dtype=complex)
        if coeffs.ndim != 1 or coeffs.size < 2:
            raise ValueError("need at least two coefficients")
        coeffs = coeffs.copy()
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def n(self) -> int:
        return self.coefficients.size - 1

    @property
    def degree(self) -> int:
        """Largest power whose coefficient clears the truncation threshold."""
        mags = np.abs(self.coefficients)
        scale = mags.max()
        if scale == 0.0:
            return 0
        above = np.nonzero(mags > LEADING_COEFF_TOL * scale)[0]
        return int(above[-1])

    @property
    def infinite_root_count(self) -> int:
        return self.n - self.degree

    def __call__(self, alpha: complex) -> complex:
        acc = 0.0 + 0.0j
        for c in self.coefficients[::-1]:
            acc = acc * alpha + c
        return acc


def from_dicke(n: int, amplitudes) -> SymmetricState:
    """Build a normalized symmetric state from n+1 Dicke amplitudes."""
    return SymmetricState(int(n), np.asarray(amplitudes, dtype=complex))


def majorana_polynomial(state: SymmetricState) -> MajoranaPolynomial:
    """Polynomial with coefficient sqrt(binom(n, k)) * a_{k-s} on alpha^k."""
    n = state.n
    factors = np.sqrt([comb(n, k) for k in range(n + 1)])
    return MajoranaPolynomial(factors * state.amplitudes)


def state_from_polynomial(poly: MajoranaPolynomial) -> SymmetricState:
    """Recover the state by dividing out the binomial factors."""
    n = poly.n
    factors = np.sqrt([comb(n, k) for k in range(n + 1)])
    return from_dicke(n, poly.coefficients / factors)


def state_from_roots(points: Sequence[RiemannPoint]) -> SymmetricState:
    """Symmetric state whose polynomial root multiset is ``points``.

    Expands the monic product over the finite points; each point at infinity
    lowers the polynomial degree by one instead of contributing a factor.
    """
    n = len(points)
    if n == 0:
        raise ValueError("empty root multiset")
    finite = [p.value for p in points if not p.is_infinite]
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[: len(finite) + 1] = np.polynomial.polynomial.polyfromroots(finite)
    return state_from_polynomial(MajoranaPolynomial(coeffs))
