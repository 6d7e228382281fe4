"""SLOCC invariants: cross ratios, anharmonic orbits, Klein J, power sums.

Invertible local operations act on the stellar roots as Moebius maps, so
SLOCC invariants are functions of cross ratios.  Everything in this module
works projectively on :class:`~stellarinv.states.RiemannPoint` pairs, which
keeps arguments at infinity exact rather than approximated by large floats.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial
from typing import NamedTuple, Sequence

from .errors import DegenerateInputError, DivergentSumError
from .roots import DEFAULT_CLUSTER_TOL, cluster
from .states import RiemannPoint, chordal_distance

#: Chordal threshold below which two points count as the same root when
#: deciding whether a cross ratio is defined.
COINCIDENCE_TOL = 1e-12

#: Any transformed cross ratio beyond this magnitude marks a divergent
#: permutation sum.
DIVERGENCE_THRESHOLD = 1e12


def as_point(value) -> RiemannPoint:
    """Coerce a complex number (or an existing point) to a RiemannPoint."""
    if isinstance(value, RiemannPoint):
        return value
    return RiemannPoint(complex(value))


def _det(p: RiemannPoint, q: RiemannPoint) -> complex:
    # projective difference p - q up to the product of denominators
    return p.a * q.b - q.a * p.b


def _coincident(p: RiemannPoint, q: RiemannPoint) -> bool:
    return chordal_distance(p, q) < COINCIDENCE_TOL


def cross_ratio(pi, pj, pk, pl) -> RiemannPoint:
    """Cross ratio (alpha_i - alpha_k)(alpha_j - alpha_l) /
    ((alpha_j - alpha_k)(alpha_i - alpha_l)), computed projectively.

    Defined whenever at least three of the four points are pairwise
    distinct; the dominant factors cancel exactly for arguments at infinity.
    """
    pts = [as_point(p) for p in (pi, pj, pk, pl)]
    distinct: list[RiemannPoint] = []
    for p in pts:
        if not any(_coincident(p, q) for q in distinct):
            distinct.append(p)
    if len(distinct) < 3:
        raise ValueError("cross ratio needs at least three distinct points")
    a, b, c, d = pts
    num = _det(a, c) * _det(b, d)
    den = _det(b, c) * _det(a, d)
    return RiemannPoint(num, den)


def anharmonic_orbit(lam) -> list[RiemannPoint]:
    """The six cross-ratio images {l, 1/l, 1-l, 1/(1-l), l/(l-1), (l-1)/l}.

    Degenerate inputs (0, 1, infinity) are allowed and produce the collapsed
    orbit with repeated entries.
    """
    p = as_point(lam)
    a, b = p.a, p.b
    return [
        RiemannPoint(a, b),
        RiemannPoint(b, a),
        RiemannPoint(b - a, b),
        RiemannPoint(b, b - a),
        RiemannPoint(a, a - b),
        RiemannPoint(a - b, a),
    ]


def klein_j(lam) -> complex:
    """Klein modular invariant J(l) = 4 (l^2 - l + 1)^3 / (27 l^2 (l - 1)^2).

    Constant on each anharmonic orbit; 1 at harmonic and 0 at equianharmonic
    configurations.  Raises on the orbit of the degenerate values {0, 1,
    infinity}, where J has poles.
    """
    p = as_point(lam)
    if p.is_infinite:
        raise DegenerateInputError("J has a pole at infinity")
    z = p.value
    den = 27.0 * z * z * (z - 1.0) ** 2
    if den == 0:
        raise DegenerateInputError(f"J has a pole at lambda = {z}")
    return 4.0 * (z * z - z + 1.0) ** 3 / den


def i2_closed_n4(lam) -> complex:
    """Closed-form symmetrized quadratic invariant of four roots.

    Evaluates (2(l^6+1) - 6(l^5+l) + 9(l^4+l^2) - 8 l^3) / (l^2 (l-1)^2),
    which equals -3 + (27/2) J(l) identically.
    """
    p = as_point(lam)
    if p.is_infinite:
        raise DegenerateInputError("pole at infinity")
    z = p.value
    den = z * z * (z - 1.0) ** 2
    if den == 0:
        raise DegenerateInputError(f"pole at lambda = {z}")
    num = (
        2.0 * (z**6 + 1.0)
        - 6.0 * (z**5 + z)
        + 9.0 * (z**4 + z * z)
        - 8.0 * z**3
    )
    return num / den


def lambda_vector(
    roots: Sequence[RiemannPoint], ordering: Sequence[int] | None = None
) -> list[RiemannPoint]:
    """Cross-ratio coordinates of the roots beyond the first three.

    The Moebius map sending the first three (pairwise distinct) roots to
    (0, 1, infinity) is applied to the remaining ones, giving the n-3
    values that coordinatize the SLOCC class.  ``ordering`` permutes the
    roots before the map is built.
    """
    pts = [as_point(r) for r in roots]
    if ordering is not None:
        if sorted(ordering) != list(range(len(pts))):
            raise ValueError("ordering must be a permutation of the root indices")
        pts = [pts[i] for i in ordering]
    if len(pts) < 4:
        raise ValueError("need at least four roots")
    a1, a2, a3 = pts[0], pts[1], pts[2]
    if _coincident(a1, a2) or _coincident(a1, a3) or _coincident(a2, a3):
        raise ValueError("first three roots must be pairwise distinct")
    return [cross_ratio(z, a2, a1, a3) for z in pts[3:]]


class PowerSumResult(NamedTuple):
    """Value of a permutation power sum plus the bookkeeping around it."""

    value: complex
    skipped: int
    total: int


def symmetrized_ik(roots: Sequence[RiemannPoint], k: int) -> PowerSumResult:
    """Sum of the k-th powers of the leading transformed cross ratio over
    all n! root orderings.

    For each ordering the first three roots define the normalizing Moebius
    map and the fourth is evaluated through it; orderings whose leading
    triple contains coincident roots are skipped and counted.  Since the
    term depends only on the leading four slots, the sum runs over ordered
    4-tuples weighted by (n-4)!, which is exactly the full permutation sum.
    Compensated summation keeps the result independent of enumeration order
    to ~1e-15 relative.
    """
    if k < 1:
        raise ValueError("power k must be a positive integer")
    pts = [as_point(r) for r in roots]
    n = len(pts)
    if n < 4:
        raise ValueError("need at least four roots")
    pairs = [(p.a, p.b) for p in pts]
    same = [
        [_coincident(pts[i], pts[j]) for j in range(n)] for i in range(n)
    ]
    if sum(1 for i in range(n) if not any(same[i][j] for j in range(i))) < 3:
        raise ValueError("fewer than three distinct roots: no valid ordering")

    weight = factorial(n - 4)
    total = factorial(n)
    skipped = 0
    acc = 0.0 + 0.0j
    comp = 0.0 + 0.0j  # Kahan compensation
    for i1, i2, i3, i4 in itertools.permutations(range(n), 4):
        if same[i1][i2] or same[i1][i3] or same[i2][i3]:
            skipped += weight
            continue
        a1, b1 = pairs[i1]
        a2, b2 = pairs[i2]
        a3, b3 = pairs[i3]
        a4, b4 = pairs[i4]
        num = (a4 * b1 - a1 * b4) * (a2 * b3 - a3 * b2)
        den = (a4 * b3 - a3 * b4) * (a2 * b1 - a1 * b2)
        if abs(den) * DIVERGENCE_THRESHOLD <= abs(num):
            raise DivergentSumError(
                "transformed cross ratio exceeds the divergence threshold"
            )
        term = (num / den) ** k
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
    return PowerSumResult(acc * weight, skipped, total)


def degeneracy_class(
    roots: Sequence[RiemannPoint], tol: float = DEFAULT_CLUSTER_TOL
) -> tuple[int, ...]:
    """Descending root-multiplicity signature, the coarse SLOCC class."""
    return tuple(
        sorted((mult for _, mult in cluster(list(roots), tol)), reverse=True)
    )


def canonical_representative(lam) -> RiemannPoint:
    """Deterministic representative of the anharmonic orbit of ``lam``.

    Picks the orbit member with lexicographically smallest (Re, Im) after
    rounding both parts to 1e-12; infinity sorts last.  Orbit-equivalent
    inputs therefore map to an identical output.
    """
    def key(p: RiemannPoint):
        if p.is_infinite:
            return (1, 0.0, 0.0)
        z = p.value
        return (0, round(z.real, 12), round(z.imag, 12))

    return min(anharmonic_orbit(lam), key=key)


@dataclass(frozen=True)
class SloccInvariantSet:
    """Aggregated SLOCC data for one root multiset.

    ``lambda_vector`` is None when fewer than three distinct roots exist;
    ``klein_j``/``canonical_lambda`` are filled for n = 4 away from the
    degenerate orbit; ``symmetrized`` holds the power sums that were
    computable (divergent ones are flagged instead).
    """

    degeneracy: tuple[int, ...]
    lambda_vector: list[RiemannPoint] | None = None
    klein_j: complex | None = None
    canonical_lambda: RiemannPoint | None = None
    symmetrized: dict[int, complex] = field(default_factory=dict)
    skipped_permutations: int = 0
    divergent: bool = False


#: Largest n for which the permutation power sums are computed by default.
MAX_POWER_SUM_N = 8


def slocc_summary(
    roots: Sequence[RiemannPoint],
    tol: float = DEFAULT_CLUSTER_TOL,
    powers: Sequence[int] = (2, 4),
) -> SloccInvariantSet:
    """Compute every SLOCC invariant applicable to the given root multiset."""
    pts = [as_point(r) for r in roots]
    n = len(pts)
    signature = degeneracy_class(pts, tol)

    lam_vec = None
    if n >= 4:
        ordering = _distinct_first_ordering(pts)
        if ordering is not None:
            lam_vec = lambda_vector(pts, ordering)

    kj = None
    canon = None
    if n == 4 and lam_vec is not None:
        lam = lam_vec[0]
        try:
            kj = klein_j(lam)
            canon = canonical_representative(lam)
        except DegenerateInputError:
            pass

    sums: dict[int, complex] = {}
    skipped = 0
    divergent = False
    if 4 <= n <= MAX_POWER_SUM_N and lam_vec is not None:
        for k in powers:
            try:
                res = symmetrized_ik(pts, k)
            except DivergentSumError:
                divergent = True
                break
            sums[k] = res.value
            skipped = res.skipped
    return SloccInvariantSet(
        degeneracy=signature,
        lambda_vector=lam_vec,
        klein_j=kj,
        canonical_lambda=canon,
        symmetrized=sums,
        skipped_permutations=skipped,
        divergent=divergent,
    )


def _distinct_first_ordering(pts: Sequence[RiemannPoint]) -> list[int] | None:
    """Ordering that fronts three pairwise-distinct roots, if any exist."""
    chosen: list[int] = []
    for i, p in enumerate(pts):
        if all(not _coincident(p, pts[j]) for j in chosen):
            chosen.append(i)
        if len(chosen) == 3:
            break
    if len(chosen) < 3:
        return None
    rest = [i for i in range(len(pts)) if i not in chosen]
    return chosen + rest
