"""Shared sampling and comparison helpers for the test suite."""
import numpy as np

from stellarinv import (
    RiemannPoint,
    find_roots,
    from_dicke,
    from_sphere,
    majorana_polynomial,
    multiset_distance,
    SphereVector,
)


def random_state(rng, n):
    """Normalized symmetric state with independent complex Gaussian amplitudes."""
    amps = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    return from_dicke(n, amps)


def random_unit_vector(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_points(rng, n, min_sep=1e-3):
    """Uniform sphere points, resampled until pairwise chordal >= min_sep."""
    while True:
        vecs = [random_unit_vector(rng) for _ in range(n)]
        ok = all(
            np.linalg.norm(vecs[i] - vecs[j]) >= min_sep
            for i in range(n)
            for j in range(i + 1, n)
        )
        if ok:
            return [from_sphere(SphereVector.from_array(v)) for v in vecs]


def random_qubit(rng):
    u = rng.normal(size=2) + 1j * rng.normal(size=2)
    return u / np.linalg.norm(u)


def random_h(rng):
    """Rotation generator: uniform axis, magnitude uniform in [0, pi]."""
    axis = random_unit_vector(rng)
    return axis * rng.uniform(0.0, np.pi)


def random_disk(rng):
    while True:
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(z) <= 1.0:
            return z


def roots_of(state):
    return find_roots(majorana_polynomial(state))


def assert_multisets_close(ps, qs, tol):
    d = multiset_distance(ps, qs)
    assert d <= tol, f"multiset distance {d:.3e} exceeds {tol:.1e}"


def point(z):
    return RiemannPoint(complex(z))


def inf_point():
    return RiemannPoint.infinity()
