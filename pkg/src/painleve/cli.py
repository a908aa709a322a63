"""Command-line front end with machine-readable JSON output.

Every response follows one schema::

    {"query": {...}, "verdicts": [...], "citations": [...],
     "notes": [...], "ambiguities": [...]}

Each verdict carries either a citation object (source label plus verbatim
statement) or the literal tag "open-question".  Exact values are emitted as
"p/q" strings; classify/orbit/orthogonal responses contain no floats.

Exit codes: 0 success, 2 input error, 3 verdict dominated by Unknown/Open
(distinguishable for scripting).
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from fractions import Fraction
from typing import Sequence

from . import numint
from .catalog import (
    EquationId,
    Family,
    InvalidEquationError,
    UnknownFamilyError,
    UnsupportedFamilyError,
)
from .citations import Citation
from .classify import ClassificationReport, classify
from .diffpoly import (
    pv_random_point_check,
    riccati_sign_note,
    verify_group_relation,
    verify_pv_change_of_variables,
    verify_riccati,
)
from .exactnum import ParamSyntaxError, ParamValue, TriBool, format_param, parse_param
from .numint import MissingAtomError, NumericAssignment, SingularIntervalError
from .weyl import (
    AffineMap,
    HypothesisStatus,
    OrbitVerdict,
    Verdict,
    cross_family_verdict,
    named_generators,
    orbit_with_word,
    word_map,
)

OPEN_TAG = "open-question"

_AMBIGUITY_MARKERS = (
    "Conflicting degree statements",
    "Sign convention:",
    "4tq^2",
    "half-integer special condition undecided",
)


class InputError(ValueError):
    pass


# -- serialization helpers ---------------------------------------------------------


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _tri(value: TriBool) -> str:
    return value.value


def _citation_json(c: Citation | None):
    return c.as_json() if c is not None else OPEN_TAG


def _verdict(kind: str, value, citation: Citation | None):
    return {"kind": kind, "value": value, "citation": _citation_json(citation)}


def _split_notes(notes: Sequence[str]) -> tuple[list[str], list[str]]:
    plain, ambiguous = [], []
    for note in notes:
        (ambiguous if any(m in note for m in _AMBIGUITY_MARKERS) else plain).append(note)
    return plain, ambiguous


def _response(query: dict, verdicts: list, citations: list[Citation], notes: Sequence[str] = ()) -> dict:
    plain, ambiguous = _split_notes(notes)
    seen, cites = set(), []
    for c in citations:
        if c.key not in seen:
            seen.add(c.key)
            cites.append(c.as_json())
    return {
        "query": query,
        "verdicts": verdicts,
        "citations": cites,
        "notes": plain,
        "ambiguities": ambiguous,
    }


def _parse_params(text: str) -> list[ParamValue]:
    text = text.strip()
    if not text:
        return []
    return [parse_param(chunk) for chunk in text.split(",")]


def _equation(family: str, params: str) -> EquationId:
    return EquationId(Family.from_name(family), _parse_params(params))


# -- classify ---------------------------------------------------------------------


_STRATUM_CITE = {
    (Family.PI, "generic"): "generic_sm_trivial",
    (Family.PII, "half-integer"): "pii_halfinteger_backlund",
    (Family.PII, "generic"): "pii_sm_nonhalf",
    (Family.PIII, "W1"): "piii_w1",
    (Family.PIII, "D1"): "piii_d1",
    (Family.PIII, "generic"): "piii_sm",
    (Family.PIV, "W"): "piv_w",
    (Family.PIV, "D"): "piv_d",
    (Family.PIV, "generic"): "piv_sm",
    (Family.PV, "W"): "pv_w",
    (Family.PV, "S1"): "pv_s1",
    (Family.PV, "S2"): "pv_s2",
    (Family.PV, "S1S2"): "pv_s1",
    (Family.PV, "D"): "pv_d",
    (Family.PV, "generic"): "pv_sm",
    (Family.PVI, "M"): "pvi_roots",
    (Family.PVI, "P"): "pvi_roots",
    (Family.PVI, "L"): "pvi_roots",
    (Family.PVI, "D"): "pvi_roots",
    (Family.PVI, "generic"): "pvi_sm",
}


def _classification_payload(report: ClassificationReport) -> tuple[dict, int]:
    from .citations import cite

    eq = report.equation
    by_key = {c.key: c for c in report.citations}

    def find(*keys: str) -> Citation | None:
        for key in keys:
            if key in by_key:
                return by_key[key]
        return None

    degree_cite = find(
        "pii_degree_two", "pii_sm_nonhalf", "piii_deg3", "piii_deg2", "piii_sm",
        "piv_deg3", "piv_deg2", "piv_sm", "pv_deg4", "pv_deg3", "pv_deg2", "pv_sm",
        "pvi_d_deg", "pvi_l_deg3", "pvi_p_deg", "pvi_m_deg", "pvi_sm", "generic_sm_trivial",
    )
    stratum_key = _STRATUM_CITE.get((eq.family, report.stratum.label))
    stratum_cite = cite(stratum_key) if stratum_key else None
    count_cite = find("murata_pii", "murata3", "pv_count1", "pv_count2")
    trivial_cite = find("pii_trivial_all", "generic_sm_trivial")

    unknown = "unknown"
    verdicts = [
        _verdict("morley-rank", report.rank, by_key["rank_one"]),
        _verdict("morley-degree", report.degree if report.degree is not None else unknown, degree_cite),
        _verdict("strongly-minimal", _tri(report.strongly_minimal), degree_cite),
        _verdict(
            "stratum",
            report.stratum.label if report.stratum.label is not None else unknown,
            stratum_cite,
        ),
        _verdict(
            "components",
            [{"label": c.label, "order": c.order} for c in report.components],
            degree_cite,
        ),
        _verdict(
            "algebraic-solutions",
            report.algebraic_solutions if report.algebraic_solutions is not None else unknown,
            count_cite,
        ),
        _verdict("geometrically-trivial", _tri(report.geometrically_trivial), trivial_cite),
    ]
    if eq.family is Family.PVI and report.stratum.label == "M":
        verdicts.append(
            _verdict(
                "half-integer-special",
                _tri(report.stratum.half_integer_special),
                find("pvi_m_deg"),
            )
        )
    query = {
        "subcommand": "classify",
        "family": eq.family.value,
        "params": [format_param(p) for p in eq.params],
    }
    payload = _response(query, verdicts, list(report.citations), report.notes)
    exit_code = 0
    if report.degree is None or report.stratum.label is None:
        exit_code = 3
    return payload, exit_code


def _cmd_classify(args) -> tuple[dict, int]:
    report = classify(_equation(args.family, args.params))
    return _classification_payload(report)


# -- orbit -----------------------------------------------------------------------------


def _witness_json(verdict: OrbitVerdict):
    w = verdict.witness
    if w is None:
        return None
    out: dict = {}
    if w.perm is not None:
        out["perm"] = list(w.perm)
    if w.signs is not None:
        out["signs"] = list(w.signs)
    if w.shift is not None:
        out["shift"] = [_frac(x) for x in w.shift]
    if w.quarter_shift is not None:
        out["quarter_shift"] = w.quarter_shift
    if w.integer_shift is not None:
        out["integer_shift"] = list(w.integer_shift)
    if w.note:
        out["note"] = w.note
    out["convention"] = "w[j] = signs[j] * v[perm[j]] + shift[j] (0-based)"
    return out


def _cmd_orbit(args) -> tuple[dict, int]:
    family = Family.from_name(args.family)
    v = _parse_params(args.v)
    w = _parse_params(args.w)
    verdict = orbit_with_word(family, v, w, bound=args.bound)
    status_cite = verdict.criterion_citation if verdict.hypothesis_status is not HypothesisStatus.OPEN else None
    verdicts = [
        _verdict("related", _tri(verdict.related), verdict.criterion_citation),
        _verdict("hypothesis-status", verdict.hypothesis_status.value, status_cite),
    ]
    query = {
        "subcommand": "orbit",
        "family": family.value,
        "v": [format_param(p) for p in EquationId(family, v).params],
        "w": [format_param(p) for p in EquationId(family, w).params],
    }
    payload = _response(query, verdicts, [verdict.criterion_citation], verdict.notes)
    payload["criterion"] = verdict.criterion
    payload["witness"] = _witness_json(verdict)
    payload["word"] = list(verdict.word) if verdict.word is not None else None
    if verdict.word_reason:
        payload["word_reason"] = verdict.word_reason
    return payload, (3 if verdict.related is TriBool.UNKNOWN else 0)


# -- orthogonal --------------------------------------------------------------------------


def _cmd_orthogonal(args) -> tuple[dict, int]:
    eq1 = _equation(args.family1, args.params1)
    eq2 = _equation(args.family2, args.params2)
    verdict = cross_family_verdict(eq1, eq2)
    verdicts = [_verdict("orthogonality", verdict.verdict.value, verdict.citation)]
    notes = list(verdict.notes)
    citations = [c for c in (verdict.citation, verdict.question) if c is not None]
    if verdict.question is not None:
        notes.append(f'open question ({verdict.question.where}): "{verdict.question.quote}"')
    query = {
        "subcommand": "orthogonal",
        "family1": eq1.family.value,
        "params1": [format_param(p) for p in eq1.params],
        "family2": eq2.family.value,
        "params2": [format_param(p) for p in eq2.params],
    }
    payload = _response(query, verdicts, citations, notes)
    payload["applicability"] = verdict.applicability
    return payload, (3 if verdict.verdict is Verdict.OPEN else 0)


# -- verify -----------------------------------------------------------------------------


def _cmd_verify(args) -> tuple[dict, int]:
    from .citations import cite

    target = args.target
    query = {"subcommand": "verify", "target": target}
    if target == "riccati":
        plus = verify_riccati(1)
        minus = verify_riccati(-1)
        verdicts = [
            _verdict("riccati-matched-alpha-plus", _frac(plus), cite("pii_riccati")),
            _verdict("riccati-matched-alpha-minus", _frac(minus), cite("pii_riccati")),
        ]
        return _response(query, verdicts, [cite("pii_riccati")], [riccati_sign_note()]), 0
    if target == "pv-change":
        report = verify_pv_change_of_variables()
        points, all_zero = pv_random_point_check()
        verdicts = [
            _verdict("chart-identity-q", report.identity_q, cite("pv_backlund")),
            _verdict("chart-identity-p", report.identity_p, cite("pv_backlund")),
            _verdict("random-point-check", {"points": points, "all_zero": all_zero}, cite("pv_backlund")),
        ]
        notes = list(report.notes) + [f"excluded loci: {', '.join(report.excluded_loci)}"]
        return _response(query, verdicts, [cite("pv_backlund")], notes), 0
    if target == "group-relations":
        checks = []
        named4 = named_generators(Family.PIV)
        checks.append(
            (
                "piv-s0-composite",
                verify_group_relation(Family.PIV, ("tminus", "s1", "s2", "s1", "tminus^-1"), named4["s0"]),
                cite("piv_s0_display"),
            )
        )
        expected5 = AffineMap.from_permutation(Family.PV, (0, 3, 2, 1), translation=(0, 1, 0, -1))
        checks.append(
            (
                "pv-composite",
                verify_group_relation(Family.PV, ("tminus", "s3", "s1", "s2", "s1", "s3", "tminus^-1"), expected5),
                cite("pv_composite_display"),
            )
        )
        checks.append(
            (
                "piii-s1-involution",
                word_map(Family.PIII, ("s1", "s1")).is_identity(),
                cite("piii_backlund"),
            )
        )
        verdicts = [_verdict(name, ok, c) for name, ok, c in checks]
        citations = [c for _, _, c in checks]
        code = 0 if all(ok for _, ok, _ in checks) else 3
        return _response(query, verdicts, citations), code
    raise InputError(f"unknown verify target {target!r}")


# -- integrate -------------------------------------------------------------------------------


def _parse_assignment(text: str) -> NumericAssignment:
    values = {}
    if text:
        for chunk in text.split(","):
            name, _, raw = chunk.partition("=")
            name = name.strip()
            if not _ or not name:
                raise InputError(f"bad atom assignment {chunk!r}; expected name=value")
            atom_value = parse_param(name)
            if atom_value.is_rational or len(atom_value.terms) != 1 or atom_value.const != 0:
                raise InputError(f"{name!r} is not a bare atom")
            atom = atom_value.terms[0][0]
            values[atom] = float(raw)
    return NumericAssignment(values)


def _cmd_integrate(args) -> tuple[dict, int]:
    eq = _equation(args.family, args.params)
    assign = _parse_assignment(args.assign)
    initial = [float(x) for x in args.initial.split(",")] if args.initial else []
    traj = numint.integrate(eq, assign, initial, args.t0, args.t1, args.step, form=args.form)
    residual = numint.residual_norm(traj, eq, assign)
    if args.out:
        numint.write_csv(traj, args.out)
        numint.write_json(traj, args.out + ".json")
    payload = {
        "query": {
            "subcommand": "integrate",
            "family": eq.family.value,
            "params": [format_param(p) for p in eq.params],
            "t0": args.t0,
            "t1": args.t1,
            "step": args.step,
            "form": traj.form,
        },
        "status": traj.status.value,
        "blowup_t": traj.blowup_t,
        "samples": len(traj.samples),
        "state": list(traj.state_names),
        "final": [traj.samples[-1][0], *traj.samples[-1][1]],
        "residual": {
            "value": residual.value,
            "discretization_order": residual.discretization_order,
            "warning": residual.warning,
        },
        "csv": args.out or None,
    }
    return payload, 0


# -- atoms ------------------------------------------------------------------------------------


def _cmd_atoms(args) -> tuple[dict, int]:
    atoms = {}
    for p in _parse_params(args.params):
        for atom, _ in p.terms:
            atoms[atom.name] = {
                "name": atom.name,
                "kind": "transcendental" if atom.name.startswith("tau") else "algebraic-irrational",
            }
    payload = {
        "query": {"subcommand": "atoms", "params": args.params},
        "atoms": [atoms[k] for k in sorted(atoms)],
    }
    return payload, 0


# -- argument parsing ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="painleve",
        description="Exact classification, transformation-orbit, and verification "
        "queries for the six Painlevé families (JSON output).",
    )
    parser.add_argument("--batch", metavar="FILE", help="run one query per line of FILE")
    sub = parser.add_subparsers(dest="subcommand")

    p = sub.add_parser("classify", help="full classification report for one equation")
    p.add_argument("--family", required=True, help="I, II, III, IV, V, or VI")
    p.add_argument("--params", default="", help="comma-separated exact parameters, e.g. '1/2,tau1'")

    p = sub.add_parser("orbit", help="transformation-orbit relation between two parameter tuples")
    p.add_argument("--family", required=True)
    p.add_argument("--v", required=True, help="first parameter tuple")
    p.add_argument("--w", required=True, help="second parameter tuple")
    p.add_argument("--bound", type=int, default=16, help="generator-word search bound")

    p = sub.add_parser("orthogonal", help="orthogonality verdict for two equations")
    p.add_argument("--family1", required=True)
    p.add_argument("--params1", default="")
    p.add_argument("--family2", required=True)
    p.add_argument("--params2", default="")

    p = sub.add_parser("verify", help="machine verification of the symbolic identities")
    p.add_argument("--target", required=True, choices=["riccati", "pv-change", "group-relations"])

    p = sub.add_parser(
        "integrate",
        help="fixed-step RK4 integration of a cataloged equation",
        description="Fixed-step RK4 integration. The CSV written by --out has "
        "columns: t, then one column per state component (e.g. t,y,y' for "
        "scalar charts, t,q,p for first-order systems); --out also writes the "
        "same trajectory as <out>.json.",
    )
    p.add_argument("--family", required=True)
    p.add_argument("--params", default="")
    p.add_argument("--initial", required=True, help="comma-separated initial state")
    p.add_argument("--t0", type=float, required=True)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--form", default=None, help="chart: system (default), scalar, or QP")
    p.add_argument("--assign", default="", help="numeric atom values, e.g. 'tau1=3.14'")
    p.add_argument("--out", default=None, help="write trajectory CSV here (plus .json)")

    p = sub.add_parser("atoms", help="echo the atom environment of parameter strings")
    p.add_argument("--params", default="")

    return parser


_DISPATCH = {
    "classify": _cmd_classify,
    "orbit": _cmd_orbit,
    "orthogonal": _cmd_orthogonal,
    "verify": _cmd_verify,
    "integrate": _cmd_integrate,
    "atoms": _cmd_atoms,
}

_INPUT_ERRORS = (
    InputError,
    InvalidEquationError,
    UnknownFamilyError,
    UnsupportedFamilyError,
    ParamSyntaxError,
    SingularIntervalError,
    MissingAtomError,
)


def _run_single(argv: Sequence[str], parser: argparse.ArgumentParser) -> tuple[dict | None, int]:
    args = parser.parse_args(argv)
    if args.subcommand is None:
        parser.print_usage(sys.stderr)
        return None, 2
    try:
        return _DISPATCH[args.subcommand](args)
    except _INPUT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return None, 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return None, 2


def run(argv: Sequence[str]) -> int:
    """Entry point; returns the exit code and prints JSON to stdout."""
    parser = _build_parser()
    if argv and argv[0] == "--batch":
        ns, rest = parser.parse_known_args(argv[:2])
        if rest:
            print("error: --batch takes no further arguments", file=sys.stderr)
            return 2
        worst = 0
        try:
            with open(ns.batch) as fh:
                lines = [line.strip() for line in fh]
        except OSError as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
        for line in lines:
            if not line or line.startswith("#"):
                continue
            try:
                payload, code = _run_single(shlex.split(line), parser)
            except SystemExit as exc:  # argparse rejected the line
                payload, code = None, int(exc.code or 2)
            if payload is not None:
                print(json.dumps(payload, sort_keys=True))
            worst = 2 if 2 in (worst, code) else max(worst, code)
        return worst
    payload, code = _run_single(list(argv), parser)
    if payload is not None:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
