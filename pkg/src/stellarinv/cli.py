"""Command line front end.

State files are JSON documents with fields ``n``, ``basis`` ("dicke" or
"majorana") and either ``amplitudes`` (a list of [re, im] pairs ordered by
ascending m) or ``points`` (a list of [re, im] pairs or the token "inf").
Reports are JSON maps printed to stdout with every numeric rendered to 15
significant digits, so the fields parse back to the printed values.

Exit codes: 0 success, 2 parse failure, 3 unsupported qubit count for a
requested invariant, 4 degenerate input.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import families
from .errors import DegenerateInputError, DivergentSumError
from .lu import bloch_radius2, concurrence2, gram, lu_invariants3, slui_coefficients
from .oracle import (
    density_matrix,
    dicke_expand,
    oracle_lu_invariants3,
    partial_trace,
    wootters_concurrence,
)
from .roots import cluster, find_roots
from .slocc import degeneracy_class, slocc_summary
from .states import (
    RiemannPoint,
    SymmetricState,
    from_dicke,
    majorana_polynomial,
    state_from_roots,
    to_sphere,
)
from .transforms import (
    IloParameters,
    apply_operator,
    ilo_operator,
    lu_unitary,
    time_reversal,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_DEGENERATE = 4

_ILO_RETRIES = 200


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# JSON helpers


def _sig15(x: float) -> float:
    return float(f"{float(x):.15g}")


def _num(z) -> list[float]:
    z = complex(z)
    return [_sig15(z.real), _sig15(z.imag)]


def _point_json(p: RiemannPoint):
    if p.is_infinite:
        return "inf"
    return _num(p.value)


def _parse_complex(entry, what: str) -> complex:
    if (
        not isinstance(entry, (list, tuple))
        or len(entry) != 2
        or not all(isinstance(c, (int, float)) for c in entry)
    ):
        raise _CliError(EXIT_PARSE, f"{what} entries must be [re, im] pairs")
    return complex(entry[0], entry[1])


def load_document(path: str) -> tuple[SymmetricState, list[RiemannPoint] | None, str]:
    """Parse a state file into (state, file points or None, basis).

    Points given explicitly in a majorana-basis file are returned as-is so
    later stages can use them exactly instead of re-extracting them from the
    reconstructed polynomial (important for degenerate constellations).
    """
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise _CliError(EXIT_PARSE, f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise _CliError(EXIT_PARSE, f"{path} is not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise _CliError(EXIT_PARSE, "state file must be a JSON object")
    try:
        n = int(doc["n"])
        basis = doc["basis"]
    except (KeyError, TypeError, ValueError):
        raise _CliError(EXIT_PARSE, "state file needs integer 'n' and string 'basis'")
    if basis == "dicke":
        raw = doc.get("amplitudes")
        if not isinstance(raw, list) or len(raw) != n + 1:
            raise _CliError(EXIT_PARSE, f"'amplitudes' must list {n + 1} [re, im] pairs")
        amps = [_parse_complex(entry, "amplitude") for entry in raw]
        try:
            return from_dicke(n, amps), None, basis
        except ValueError as exc:
            raise _CliError(EXIT_PARSE, str(exc))
    if basis == "majorana":
        raw = doc.get("points")
        if not isinstance(raw, list) or len(raw) != n:
            raise _CliError(EXIT_PARSE, f"'points' must list {n} entries")
        pts = []
        for entry in raw:
            if entry == "inf":
                pts.append(RiemannPoint.infinity())
            else:
                pts.append(RiemannPoint(_parse_complex(entry, "point")))
        try:
            return state_from_roots(pts), pts, basis
        except ValueError as exc:
            raise _CliError(EXIT_PARSE, str(exc))
    raise _CliError(EXIT_PARSE, f"unknown basis {basis!r} (expected 'dicke' or 'majorana')")


def state_document(state: SymmetricState, basis: str) -> dict:
    if basis == "majorana":
        pts = _sorted_points(find_roots(majorana_polynomial(state)))
        return {"n": state.n, "basis": "majorana", "points": [_point_json(p) for p in pts]}
    return {
        "n": state.n,
        "basis": "dicke",
        "amplitudes": [_num(a) for a in state.amplitudes],
    }


def _sorted_points(pts):
    def key(p):
        if p.is_infinite:
            return (1, 0.0, 0.0)
        return (0, p.value.real, p.value.imag)

    return sorted(pts, key=key)


def _emit(doc, out_path: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# Report assembly


def _lu_section(state, g):
    n = state.n
    section = {"slui_coefficients": [_sig15(c) for c in slui_coefficients(g)]}
    if n == 2:
        v12 = float(g[0, 1])
        section["concurrence"] = _sig15(concurrence2(v12))
        section["bloch_radius_sq"] = _sig15(bloch_radius2(v12))
    elif n == 3:
        inv = lu_invariants3(g)
        section.update(
            {name: _sig15(val) for name, val in zip(("i1", "i2", "i3", "i4", "i5", "i6"), inv)}
        )
    return section


def _slocc_section(summary):
    section = {"degeneracy": list(summary.degeneracy)}
    if summary.lambda_vector is not None:
        section["lambda_vector"] = [_point_json(p) for p in summary.lambda_vector]
    if summary.klein_j is not None:
        section["klein_j"] = _num(summary.klein_j)
    if summary.canonical_lambda is not None:
        section["canonical_lambda"] = _point_json(summary.canonical_lambda)
    if summary.symmetrized:
        section["symmetrized"] = {str(k): _num(v) for k, v in summary.symmetrized.items()}
        section["skipped_permutations"] = summary.skipped_permutations
    if summary.divergent:
        section["symmetrized_divergent"] = True
    return section


def _oracle_section(state, g):
    n = state.n
    dense = dicke_expand(state)
    if n == 2:
        v12 = float(g[0, 1])
        rho1 = partial_trace(density_matrix(dense), [1])
        radius_sq = float(2.0 * np.trace(rho1 @ rho1).real - 1.0)
        woot = wootters_concurrence(dense)
        dev = max(
            abs(woot - concurrence2(v12)),
            abs(radius_sq - bloch_radius2(v12)),
        )
        return {
            "concurrence": _sig15(woot),
            "bloch_radius_sq": _sig15(radius_sq),
            "max_abs_deviation": _sig15(dev),
        }
    if n == 3:
        inv = oracle_lu_invariants3(dense)
        stellar = lu_invariants3(g)
        dev = max(abs(a - b) for a, b in zip(inv, stellar))
        section = {
            name: _sig15(val) for name, val in zip(("i1", "i2", "i3", "i4", "i5", "i6"), inv)
        }
        section["max_abs_deviation"] = _sig15(dev)
        return section
    raise _CliError(EXIT_UNSUPPORTED, f"--oracle-check supports n = 2 or 3, got n = {n}")


def cmd_invariants(args) -> int:
    state, file_points, _ = load_document(args.file)
    tol = args.tol
    try:
        pts = file_points or find_roots(majorana_polynomial(state))
        vecs = [to_sphere(p) for p in pts]
        g = gram(vecs)
        report = {
            "n": state.n,
            "roots": [_point_json(p) for p in _sorted_points(pts)],
            "points": [[_sig15(c) for c in (v.x, v.y, v.z)] for v in vecs],
            "gram": [[_sig15(c) for c in row] for row in g],
        }
        want_lu = args.lu or not (args.lu or args.slocc)
        want_slocc = args.slocc or not (args.lu or args.slocc)
        if want_lu:
            report["lu"] = _lu_section(state, g)
        if want_slocc:
            summary = slocc_summary(pts, tol)
            if args.slocc and state.n == 4 and summary.klein_j is None:
                raise DegenerateInputError(
                    "repeated roots put the cross ratio on the degenerate orbit {0, 1, inf}"
                )
            report["slocc"] = _slocc_section(summary)
        if args.oracle_check:
            report["oracle"] = _oracle_section(state, g)
    except DegenerateInputError as exc:
        raise _CliError(EXIT_DEGENERATE, str(exc))
    _emit(report, args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    state, file_points, _ = load_document(args.file)
    pts = file_points or find_roots(majorana_polynomial(state))
    signature = degeneracy_class(pts, args.tol)
    label = "{" + ",".join(str(m) for m in signature) + "}"
    if state.n == 3:
        names = {(3,): "separable", (2, 1): "W", (1, 1, 1): "GHZ-class"}
        label += " " + names[signature]
    print(label)
    return EXIT_OK


def cmd_transform(args) -> int:
    state, _, basis = load_document(args.file)
    rng = np.random.default_rng(args.seed)
    if args.mode == "lu-random":
        # uniform rotation axis, angle uniform in [0, pi]
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        h = axis * rng.uniform(0.0, np.pi)
        out = apply_operator(lu_unitary(h, state.n), state)
    elif args.mode == "ilo-random":
        # unit-disk parameter draws, rejected against the domain bounds and
        # a moderate Moebius part
        def disk():
            while True:
                z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                if abs(z) <= 1.0:
                    return z

        params = None
        for _ in range(_ILO_RETRIES):
            try:
                cand = IloParameters(disk(), disk(), disk())
            except DegenerateInputError:
                continue
            g = cand.gamma
            if abs(g - 1.0 / g) < 10.0:
                params = cand
                break
        if params is None:
            raise _CliError(EXIT_DEGENERATE, "no in-domain ILO parameters found")
        out = apply_operator(ilo_operator(params, state.n), state)
    else:
        out = time_reversal(state)
    _emit(state_document(out, basis), args.output)
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        if args.family == "ghz":
            state = families.ghz_state(args.n)
        elif args.family == "w":
            state = families.w_state(args.n)
        elif args.family == "dicke":
            if args.weight is None:
                raise _CliError(EXIT_PARSE, "dicke needs --weight")
            state = families.dicke_state(args.n, args.weight)
        else:  # ghz4-family
            mu = complex(args.mu[0], args.mu[1]) if args.mu else 0j
            state = families.ghz4_family(mu)
    except DegenerateInputError as exc:
        raise _CliError(EXIT_DEGENERATE, str(exc))
    except ValueError as exc:
        raise _CliError(EXIT_PARSE, str(exc))
    _emit(state_document(state, "dicke"), args.output)
    return EXIT_OK


def cmd_roots(args) -> int:
    state, file_points, _ = load_document(args.file)
    pts = file_points or find_roots(majorana_polynomial(state))
    clusters = cluster(pts, args.tol)
    report = {
        "n": state.n,
        "roots": [_point_json(p) for p in _sorted_points(pts)],
        "points": [
            [_sig15(c) for c in (v.x, v.y, v.z)] for v in (to_sphere(p) for p in pts)
        ],
        "clusters": [
            {"root": _point_json(rep), "multiplicity": mult} for rep, mult in clusters
        ],
        "degeneracy": sorted((m for _, m in clusters), reverse=True),
    }
    _emit(report, args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stellarinv",
        description="Entanglement invariants of symmetric multiqubit states "
        "via their stellar representation.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol",
        type=float,
        default=1e-7,
        help="clustering/classification tolerance (default 1e-7)",
    )
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("-o", "--output", default=None, help="write to file instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="compute invariants of a state file")
    p.add_argument("file")
    p.add_argument("--lu", action="store_true", help="report only the LU section")
    p.add_argument("--slocc", action="store_true", help="report only the SLOCC section")
    p.add_argument(
        "--oracle-check",
        action="store_true",
        help="add brute-force oracle values and the deviation (n = 2 or 3)",
    )
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", parents=[common], help="degeneracy class of a state file")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("transform", parents=[common], help="apply an operator to a state file")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument(
        "--lu-random", dest="mode", action="store_const", const="lu-random"
    )
    mode.add_argument(
        "--ilo-random", dest="mode", action="store_const", const="ilo-random"
    )
    mode.add_argument(
        "--time-reversal", dest="mode", action="store_const", const="time-reversal"
    )
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("generate", parents=[common], help="write a named family state file")
    p.add_argument("family", choices=["ghz", "w", "dicke", "ghz4-family"])
    p.add_argument("-n", type=int, default=3, help="qubit count (ghz/w/dicke)")
    p.add_argument("--weight", type=int, default=None, help="excitation count for dicke")
    p.add_argument(
        "--mu",
        type=float,
        nargs=2,
        metavar=("RE", "IM"),
        default=None,
        help="complex parameter of ghz4-family",
    )
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("roots", parents=[common], help="roots and clusters of a state file")
    p.add_argument("file")
    p.set_defaults(func=cmd_roots)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DegenerateInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except DivergentSumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
