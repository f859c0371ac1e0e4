"""Command-line front end: JSON in, JSON report out.

Exit codes: 0 success, 1 input/usage error, 2 typed mathematical
outcome (e.g. a pencil with irrational eigenvalues in exact mode).
Rationals are serialized as "p/q" strings throughout.
"""

from __future__ import annotations

import json
import sys
import time
from fractions import Fraction

import click

from .arrangement import (
    Arrangement,
    ArrangementError,
    conic_arrangement_normal_crossings,
    hyperplanes_normal_crossings,
    quadric_matrix,
    quadric_pair_normal_crossings,
    veronese_lift,
)
from .exactpoly import HomogeneousPoly
from .linalg import RationalMatrix
from .logres import (
    chern,
    cohomology_table,
    line_matrix,
    monad,
    presentation,
    splitting_on_line,
    stability_certificate,
)
from .torelli import (
    DEFAULT_SEED,
    NeedsAlgebraicRoots,
    QuadricPair,
    dual_pencil_equal,
    iso_witness_oracle,
    on_common_rnc,
    pencil_singular_points,
    quadric_pair_iso_conditions,
    recover_components,
    rnc_fit,
    unstable_dim,
)

EXIT_TYPED_OUTCOME = 2


class TypedOutcome(Exception):
    def __init__(self, report):
        self.report = report
        super().__init__(report.get("outcome", "typed outcome"))


def _frac_str(x):
    return str(Fraction(x))


def _vec(v):
    return [_frac_str(x) for x in v]


def _emit(report):
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load(path):
    with open(path) as fh:
        return json.load(fh)


def _run(command, input_path, body, echo=None):
    """Shared harness: build the report, map errors to exit codes."""
    report = {"command": command}
    if input_path is not None:
        report["input"] = _load(input_path)
    if echo:
        report.update(echo)
    try:
        report.update(body(report.get("input")))
    except TypedOutcome as outcome:
        report.update(outcome.report)
        _emit(report)
        sys.exit(EXIT_TYPED_OUTCOME)
    except NeedsAlgebraicRoots as exc:
        report["outcome"] = "needs-algebraic-roots"
        report["irreducible_factors"] = list(exc.factors)
        _emit(report)
        sys.exit(EXIT_TYPED_OUTCOME)
    except (ArrangementError, ValueError, KeyError, OSError) as exc:
        _emit({"command": command, "error": str(exc)})
        sys.exit(1)
    _emit(report)


def _arrangement(data):
    return Arrangement.from_json(data)


def _pair(data):
    return QuadricPair.from_json(data)


def _pair_from_arrangement_or_pair(data):
    if "A" in data:
        return _pair(data)
    arr = _arrangement(data)
    if len(arr) != 2 or arr.equal_degree() != 2:
        raise ArrangementError("expected a pair of quadrics")
    return QuadricPair(
        arr.ambient_dim, *(quadric_matrix(f) for f in arr.hypersurfaces)
    )


@click.group()
def main():
    """Exact computations with logarithmic bundles of arrangements."""


def _input_option(fn):
    return click.option(
        "--input", "input_path", required=True, type=click.Path(exists=True)
    )(fn)


@main.command("present")
@_input_option
def present_cmd(input_path):
    def body(data):
        pres = presentation(_arrangement(data))
        return {"presentation": pres.to_json()}

    _run("present", input_path, body)


@main.command("monad-check")
@_input_option
def monad_check_cmd(input_path):
    def body(data):
        m, n = monad(_arrangement(data))
        return {"monad_identity": True, "M": m.to_json(), "N": n.to_json()}

    _run("monad-check", input_path, body)


@main.command("chern")
@_input_option
def chern_cmd(input_path):
    def body(data):
        arr = _arrangement(data)
        return {"rank": arr.ambient_dim, "chern": chern(arr)}

    _run("chern", input_path, body)


@main.command("cohomology")
@_input_option
@click.option("--twist-min", type=int, default=-3, show_default=True)
@click.option("--twist-max", type=int, default=3, show_default=True)
def cohomology_cmd(input_path, twist_min, twist_max):
    def body(data):
        arr = _arrangement(data)
        if twist_min > twist_max:
            raise ArrangementError("empty twist range")
        table = cohomology_table(arr, twist_min, twist_max)
        return {
            "twist_min": twist_min,
            "twist_max": twist_max,
            "table": [[i, t, h] for (i, t), h in sorted(table.items())],
        }

    _run("cohomology", input_path, body)


@main.command("stability")
@_input_option
def stability_cmd(input_path):
    def body(data):
        rep = stability_certificate(_arrangement(data))
        return {
            "c1_dual": rep.c1_dual,
            "slope": _frac_str(rep.slope),
            "criterion_satisfied": rep.criterion_satisfied,
        }

    _run("stability", input_path, body)


@main.command("nc-check")
@_input_option
def nc_check_cmd(input_path):
    def body(data):
        arr = _arrangement(data)
        degs = set(arr.degrees)
        if degs == {1}:
            verdict = hyperplanes_normal_crossings(veronese_lift(arr))
        elif degs == {2} and len(arr) == 2:
            mats = [quadric_matrix(f) for f in arr.hypersurfaces]
            verdict = quadric_pair_normal_crossings(*mats)
        elif degs == {2} and arr.ambient_dim == 2:
            verdict = conic_arrangement_normal_crossings(arr)
        else:
            raise ArrangementError(
                "normal-crossings check unsupported for this configuration"
            )
        return {"normal_crossings": verdict}

    _run("nc-check", input_path, body)


@main.command("veronese")
@_input_option
def veronese_cmd(input_path):
    def body(data):
        lift = veronese_lift(_arrangement(data))
        return {
            "ambient_dim": lift.ambient_dim,
            "normals": [_vec(v) for v in lift.normals],
        }

    _run("veronese", input_path, body)


def _pencil_report(pair):
    analysis = pencil_singular_points(pair)
    report = {
        "normal_crossings": analysis.normal_crossings,
        "eigenvalues": [
            {"value": _frac_str(lam), "multiplicity": m}
            for lam, m in analysis.eigenvalues
        ],
        "singular_points": [_vec(p) for p in analysis.singular_points],
    }
    if not analysis.complete:
        report["outcome"] = "needs-algebraic-roots"
        report["irreducible_factors"] = list(analysis.unresolved_factors)
        raise TypedOutcome(report)
    return report


@main.command("pencil")
@_input_option
def pencil_cmd(input_path):
    def body(data):
        return _pencil_report(_pair_from_arrangement_or_pair(data))

    _run("pencil", input_path, body)


@main.command("zeroes")
@_input_option
def zeroes_cmd(input_path):
    def body(data):
        return _pencil_report(_pair_from_arrangement_or_pair(data))

    _run("zeroes", input_path, body)


@main.command("torelli-pair")
@_input_option
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
def torelli_pair_cmd(input_path, seed):
    def body(data):
        pair1 = _pair_from_arrangement_or_pair(data["pair1"])
        pair2 = _pair_from_arrangement_or_pair(data["pair2"])
        report = _pencil_report(pair1)
        report["dual_pencil_equal"] = dual_pencil_equal(pair1, pair2)
        try:
            cond = quadric_pair_iso_conditions(pair1, pair2)
            report["verdict"] = cond.verdict
            report["residuals"] = {k: _frac_str(v) for k, v in cond.residuals.items()}
            report["open_conditions"] = {
                k: _frac_str(v) for k, v in cond.open_conditions.items()
            }
        except ArrangementError as exc:
            report["verdict"] = "not-isomorphic"
            report["residuals"] = {}
            report["open_conditions"] = {}
            report["frame_note"] = str(exc)
        witness = iso_witness_oracle(pair1.arrangement(), pair2.arrangement(), seed)
        report["witness"] = (
            None
            if witness is None
            else {
                "mprime": witness.mprime.to_json(),
                "mdoubleprime": witness.mdoubleprime.to_json(),
            }
        )
        return report

    _run("torelli-pair", input_path, body)


@main.command("iso-oracle")
@_input_option
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
def iso_oracle_cmd(input_path, seed):
    def body(data):
        arr1 = _arrangement(data["pair1"]) if "hypersurfaces" in data["pair1"] \
            else _pair(data["pair1"]).arrangement()
        arr2 = _arrangement(data["pair2"]) if "hypersurfaces" in data["pair2"] \
            else _pair(data["pair2"]).arrangement()
        witness = iso_witness_oracle(arr1, arr2, seed)
        return {
            "witness": None
            if witness is None
            else {
                "mprime": witness.mprime.to_json(),
                "mdoubleprime": witness.mdoubleprime.to_json(),
            }
        }

    _run("iso-oracle", input_path, body)


def _candidate_polys(data, num_vars):
    return [HomogeneousPoly.from_json(c, num_vars) for c in data["candidates"]]


@main.command("unstable")
@_input_option
@click.option("--candidates", "cand_path", required=True, type=click.Path(exists=True))
def unstable_cmd(input_path, cand_path):
    def body(data):
        arr = _arrangement(data)
        cands = _candidate_polys(_load(cand_path), arr.ambient_dim + 1)
        return {"dims": [unstable_dim(arr, c) for c in cands]}

    _run("unstable", input_path, body)


@main.command("recover")
@_input_option
@click.option("--candidates", "cand_path", required=True, type=click.Path(exists=True))
def recover_cmd(input_path, cand_path):
    def body(data):
        arr = _arrangement(data)
        cands = _candidate_polys(_load(cand_path), arr.ambient_dim + 1)
        rep = recover_components(arr, cands)
        return {
            "member_indices": rep.member_indices,
            "candidate_dims": rep.candidate_dims,
            "hypotheses": rep.hypotheses,
            "warnings": rep.warnings,
        }

    _run("recover", input_path, body)


@main.command("rnc")
@_input_option
def rnc_cmd(input_path):
    def body(data):
        points = [[Fraction(x) for x in p] for p in data["points"]]
        curve = rnc_fit(points)
        report = {"curve_exists": curve is not None}
        if curve is not None:
            report["parameters"] = _vec(curve.parameters)
            report["on_common_rnc"] = on_common_rnc(points)
        else:
            report["on_common_rnc"] = False
        return report

    _run("rnc", input_path, body)


@main.command("splitting")
@_input_option
@click.option("--line", "line_json", required=True, help="JSON list of two points")
@click.option("--twist", type=int, default=0, show_default=True)
def splitting_cmd(input_path, line_json, twist):
    try:
        points = json.loads(line_json)
    except json.JSONDecodeError as exc:
        _emit({"command": "splitting", "error": f"bad --line value: {exc}"})
        sys.exit(1)

    def body(data):
        arr = _arrangement(data)
        if len(points) != 2:
            raise ArrangementError("a line needs exactly two points")
        line = line_matrix(
            [Fraction(x) for x in points[0]], [Fraction(x) for x in points[1]]
        )
        split = splitting_on_line(arr, line, twist)
        return {"twist": twist, "splitting": list(split.degrees)}

    _run("splitting", input_path, body, echo={"line": points})


# ---------------------------------------------------------------------------
# Reproduction suites
# ---------------------------------------------------------------------------


def _suite_chern_quadric_pairs(seed):
    from .sampling import random_diagonal_pair
    import random

    rng = random.Random(seed)
    checks = []
    for n in (2, 3, 4, 5):
        pair = random_diagonal_pair(rng, n)
        top = chern(pair.arrangement())[-1]
        checks.append(
            {"name": f"top-chern-n{n}", "expected": n + 1, "got": top, "pass": top == n + 1}
        )
    return checks


def _suite_jumping_lines(seed):
    from .sampling import random_line
    import random

    pair = QuadricPair.from_diagonals([1, 2, -1], [3, 5, -1])
    arr = pair.arrangement()
    rng = random.Random(seed)
    e = [
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1)],
    ]
    coord_lines = [line_matrix(e[i], e[j]) for i, j in ((0, 1), (0, 2), (1, 2))]
    generic = (0, -1)
    checks = []
    jumping = sum(
        splitting_on_line(arr, l, -1).degrees != generic for l in coord_lines
    )
    checks.append(
        {"name": "coordinate-lines-jump", "expected": 3, "got": jumping, "pass": jumping == 3}
    )
    def same_line(l1, l2):
        stacked = l1.hstack(l2)
        return stacked.rank() == 2

    mismatches = 0
    for _ in range(50):
        l = random_line(rng, 2)
        jumps = splitting_on_line(arr, l, -1).degrees != generic
        is_coord = any(same_line(l, cl) for cl in coord_lines)
        if jumps != is_coord:
            mismatches += 1
    checks.append(
        {
            "name": "random-lines-jump-iff-coordinate",
            "expected": 0,
            "got": mismatches,
            "pass": mismatches == 0,
        }
    )
    return checks


def _hyperplane_arrangement(n, ell):
    polys = tuple(HomogeneousPoly.variable(n + 1, j) for j in range(ell))
    return Arrangement(n, polys)


def _line_bundle_sum_table(num_vars, multiplicities, t_min, t_max):
    """Cohomology table of (+) O(a)^{m_a} on P^{num_vars-1}."""
    from .logres import h0_line_bundle, htop_line_bundle

    m = num_vars - 1
    table = {}
    for t in range(t_min, t_max + 1):
        for i in range(m + 1):
            total = 0
            for a, mult in multiplicities.items():
                if i == 0:
                    total += mult * h0_line_bundle(num_vars, a + t)
                elif i == m:
                    total += mult * htop_line_bundle(num_vars, a + t)
            table[(i, t)] = total
    return table


def _suite_split_few_hyperplanes(seed):
    checks = []
    for n in (2, 3, 4):
        for ell in range(1, n + 2):
            arr = _hyperplane_arrangement(n, ell)
            got = cohomology_table(arr, -n - 1, n + 1)
            want = _line_bundle_sum_table(
                n + 1, {0: ell - 1, -1: n + 1 - ell}, -n - 1, n + 1
            )
            ok = got == want
            checks.append(
                {"name": f"split-n{n}-l{ell}", "expected": "direct-sum table", "got": "match" if ok else "mismatch", "pass": ok}
            )
    return checks


SUITES = {
    "chern-quadric-pairs": _suite_chern_quadric_pairs,
    "jumping-lines": _suite_jumping_lines,
    "split-few-hyperplanes": _suite_split_few_hyperplanes,
}


@main.command("reproduce")
@click.option("--suite", required=True, type=click.Choice(sorted(SUITES)))
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
def reproduce_cmd(suite, seed):
    start = time.time()
    checks = SUITES[suite](seed)
    report = {
        "command": "reproduce",
        "suite": suite,
        "seed": seed,
        "checks": checks,
        "passed": sum(c["pass"] for c in checks),
        "total": len(checks),
        "seconds": round(time.time() - start, 3),
    }
    _emit(report)
    sys.exit(0 if report["passed"] == report["total"] else 1)


if __name__ == "__main__":
    main()
