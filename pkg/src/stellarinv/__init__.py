"""LU and SLOCC entanglement invariants of symmetric multiqubit states,
computed through the stellar (Majorana) representation and cross-checked
against a dense brute-force oracle."""

from .errors import DegenerateInputError, DivergentSumError
from .families import dicke_state, ghz4_family, ghz_state, w_state
from .lu import (
    LuInvariantSet,
    bloch_radius2,
    concurrence2,
    gram,
    lu_invariants3,
    slui_coefficients,
    symmetric_coefficients,
)
from .oracle import (
    dicke_expand,
    density_matrix,
    oracle_lu_invariants3,
    partial_trace,
    three_tangle,
    wootters_concurrence,
)
from .roots import cluster, find_roots
from .slocc import (
    PowerSumResult,
    SloccInvariantSet,
    anharmonic_orbit,
    canonical_representative,
    cross_ratio,
    degeneracy_class,
    i2_closed_n4,
    klein_j,
    lambda_vector,
    slocc_summary,
    symmetrized_ik,
)
from .states import (
    MajoranaPolynomial,
    RiemannPoint,
    SphereVector,
    SymmetricState,
    chordal_distance,
    from_dicke,
    from_sphere,
    majorana_polynomial,
    multiset_distance,
    state_from_polynomial,
    state_from_roots,
    to_sphere,
)
from .transforms import (
    IloParameters,
    MobiusTransform,
    SpinOperators,
    apply_mobius,
    apply_operator,
    ilo_operator,
    lu_unitary,
    mobius_from_ilo,
    rotation_from_h,
    spin_operators,
    time_reversal,
    time_reversal_dense,
    y_theta,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateInputError",
    "DivergentSumError",
    "IloParameters",
    "LuInvariantSet",
    "MajoranaPolynomial",
    "MobiusTransform",
    "PowerSumResult",
    "RiemannPoint",
    "SloccInvariantSet",
    "SphereVector",
    "SpinOperators",
    "SymmetricState",
    "anharmonic_orbit",
    "apply_mobius",
    "apply_operator",
    "bloch_radius2",
    "canonical_representative",
    "chordal_distance",
    "cluster",
    "concurrence2",
    "cross_ratio",
    "degeneracy_class",
    "density_matrix",
    "dicke_expand",
    "dicke_state",
    "find_roots",
    "from_dicke",
    "from_sphere",
    "ghz4_family",
    "ghz_state",
    "gram",
    "i2_closed_n4",
    "ilo_operator",
    "klein_j",
    "lambda_vector",
    "lu_invariants3",
    "lu_unitary",
    "majorana_polynomial",
    "mobius_from_ilo",
    "multiset_distance",
    "oracle_lu_invariants3",
    "partial_trace",
    "rotation_from_h",
    "slocc_summary",
    "slui_coefficients",
    "spin_operators",
    "state_from_polynomial",
    "state_from_roots",
    "symmetric_coefficients",
    "symmetrized_ik",
    "three_tangle",
    "time_reversal",
    "time_reversal_dense",
    "to_sphere",
    "w_state",
    "wootters_concurrence",
    "y_theta",
]
