"""Command line interface and the JSON document formats.

Point-set documents look like::

    {"points": [["0", "0"], ["1/2", "-3"]], "metadata": {"source": "..."}}

Coordinates are strings holding an integer or a fraction ``p/q``; they are
never floats.  Exit codes: 0 success, 1 analysis precondition failure,
2 I/O or parse failure, 3 theorem violation (or a failing verify run).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from . import generators as gen
from .curves import CurveWitness, check_intersection_characterization
from .errors import (
    DegenerateConfiguration,
    DuplicatePoints,
    EmptySet,
    InvalidParams,
    OutOfScope,
    ParseError,
    TheoremViolation,
    ZeroDenominator,
)
from .independence import (
    fundamental_table,
    is_essentially_dependent,
    is_independent,
    is_poised,
    is_solvable,
    points_without_fundamental,
)
from .polyspace import MONOMIAL_ORDER, Point, PointSet, Poly2, collocation_rank, dim_pi
from .scale import WITNESS_CHECKS, ScaleParams, ScaleVerdict, Witness, classify, witness_failures

log = logging.getLogger("poisekit")

SEED_ENV = "POISEKIT_SEED"
_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_rational(text, where: str = "") -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ParseError(f"expected an integer or fraction string, got {text!r}", where or None)
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL.match(text)
    if not match:
        raise ParseError(f"malformed rational {text!r}", where or None)
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}", where or None)
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Fraction) -> str:
    return str(value)


def _load_json(text, what: str):
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"{what} is not UTF-8: {exc.reason}", f"byte {exc.start}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {what}: {exc.msg}", f"line {exc.lineno}, column {exc.colno}") from None


def parse_pointset(text) -> PointSet:
    """Parse a point-set document (bytes or str) into a PointSet."""
    doc = _load_json(text, "point-set document")
    if not isinstance(doc, dict) or "points" not in doc:
        raise ParseError('document must be an object with a "points" list', "top level")
    raw = doc["points"]
    if not isinstance(raw, list):
        raise ParseError('"points" must be a list', "points")
    pts = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError("each point must be a pair of coordinates", f"points[{i}]")
        pts.append(Point(parse_rational(pair[0], f"points[{i}][0]"), parse_rational(pair[1], f"points[{i}][1]")))
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError('"metadata" must be an object', "metadata")
    return PointSet(pts)


def pointset_document(points: Sequence[Point], metadata: Optional[dict] = None) -> dict:
    doc = {"points": [[format_rational(p.x), format_rational(p.y)] for p in points]}
    if metadata:
        doc["metadata"] = {str(k): str(v) for k, v in metadata.items()}
    return doc


def _render(value, indent: int) -> str:
    pad = "  " * (indent + 1)
    if isinstance(value, dict) and value:
        body = ",\n".join(f"{pad}{json.dumps(k)}: {_render(v, indent + 1)}" for k, v in value.items())
        return "{\n" + body + "\n" + "  " * indent + "}"
    if isinstance(value, list) and value and any(isinstance(v, (dict, list)) for v in value):
        body = ",\n".join(pad + _render(v, indent + 1) for v in value)
        return "[\n" + body + "\n" + "  " * indent + "]"
    return json.dumps(value)


def dumps(doc: dict) -> str:
    """Indented JSON with scalar lists kept on one line."""
    return _render(doc, 0) + "\n"


def coefficients(p: Poly2) -> List[str]:
    return [format_rational(c) for c in p.coeffs]


def report_document(points: Sequence[Point], verdict: ScaleVerdict) -> dict:
    params = verdict.params
    doc = {
        "verdict": verdict.verdict,
        "kappa": params.kappa,
        "m": params.m,
        "n": params.n,
        "points": len(points),
        "monomial_order": MONOMIAL_ORDER,
    }
    rank_ok = verdict.dependent == (not is_independent(points, params.kappa))
    checks = [{"name": "rank-test", "passed": rank_ok}]
    w = verdict.witness
    if w is not None:
        doc["witness"] = {
            "r": w.r,
            "s": w.s,
            "subset_indices": list(w.subset),
            "curve_coefficients": [coefficients(p) for p in w.curve.basis],
            "intersection_case": w.intersection_case,
            "special_case_label": verdict.label,
        }
        failed = set(witness_failures(points, params, w))
        checks += [{"name": name, "passed": name not in failed} for name in WITNESS_CHECKS]
    doc["checks"] = checks
    return doc


def witness_from_report(doc: dict) -> tuple:
    """Rebuild ``(ScaleParams, Witness or None)`` from a report document."""
    params = ScaleParams(int(doc["m"]), int(doc["n"]))
    w = doc.get("witness")
    if doc["verdict"] == "independent":
        if w is not None:
            raise ParseError("independent report carries a witness", "witness")
        return params, None
    if w is None:
        raise ParseError("dependent report without a witness", "witness")
    r = int(w["r"])
    basis = [Poly2(r, tuple(parse_rational(c, "curve_coefficients") for c in vec)) for vec in w["curve_coefficients"]]
    witness = Witness(tuple(int(i) for i in w["subset_indices"]), r, int(w["s"]),
                      CurveWitness(r, basis), bool(w["intersection_case"]))
    return params, witness


def analysis_document(points: Sequence[Point], n: int) -> dict:
    table = fundamental_table(points, n)
    doc = {
        "degree": n,
        "points": len(points),
        "dim": dim_pi(n),
        "rank": collocation_rank(points, n),
        "independent": is_independent(points, n),
        "poised": is_poised(points, n),
        "solvable": is_solvable(points, n),
        "essentially_dependent": bool(points) and is_essentially_dependent(points, n),
        "essential_core": points_without_fundamental(points, n),
        "monomial_order": MONOMIAL_ORDER,
        "fundamentals": [
            {"index": r.point_index,
             "exists": r.exists,
             "coefficients": coefficients(r.polynomial) if r.exists else None}
            for r in table
        ],
    }
    return doc


def _analysis_text(doc: dict, points: Sequence[Point]) -> str:
    lines = [
        f"{doc['points']} points, degree {doc['degree']} (dim {doc['dim']}), rank {doc['rank']}",
        f"independent: {doc['independent']}  poised: {doc['poised']}  solvable: {doc['solvable']}",
        f"essentially dependent: {doc['essentially_dependent']}",
        f"essential core: {doc['essential_core']}",
    ]
    for f in doc["fundamentals"]:
        if f["exists"]:
            poly = Poly2(doc["degree"], tuple(Fraction(c) for c in f["coefficients"]))
            lines.append(f"  #{f['index']} {points[f['index']]}: {poly}")
        else:
            lines.append(f"  #{f['index']} {points[f['index']]}: no fundamental polynomial")
    return "\n".join(lines) + "\n"


def _report_text(doc: dict) -> str:
    lines = [f"{doc['verdict']} at degree kappa={doc['kappa']} (m={doc['m']}, n={doc['n']}, {doc['points']} points)"]
    w = doc.get("witness")
    if w:
        curve = Poly2(w["r"], tuple(Fraction(c) for c in w["curve_coefficients"][0]))
        lines += [
            f"r={w['r']} s={w['s']} #Y={len(w['subset_indices'])} label={w['special_case_label']}",
            f"Y = {w['subset_indices']}",
            f"curve: {curve} = 0" + (f" (+{len(w['curve_coefficients']) - 1} more)" if len(w["curve_coefficients"]) > 1 else ""),
            f"intersection case: {w['intersection_case']}",
        ]
    for c in doc["checks"]:
        lines.append(f"  [{'ok' if c['passed'] else 'FAILED'}] {c['name']}")
    return "\n".join(lines) + "\n"


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _emit(text: str, output: Optional[str]) -> None:
    if output and output != "-":
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def resolve_seed(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(SEED_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidParams(f"{SEED_ENV} must be an integer, got {env!r}") from None
    return 0


def cmd_analyze(args) -> int:
    points = parse_pointset(_read(args.input))
    doc = analysis_document(points, args.degree)
    _emit(dumps(doc) if args.json else _analysis_text(doc, points), args.output)
    return 0


def cmd_classify(args) -> int:
    points = parse_pointset(_read(args.input))
    verdict = classify(points, ScaleParams(args.m, args.n))
    doc = report_document(points, verdict)
    _emit(dumps(doc) if args.json else _report_text(doc), args.output)
    return 0 if all(c["passed"] for c in doc["checks"]) else 3


def cmd_check_intersection(args) -> int:
    points = parse_pointset(_read(args.input))
    ok = check_intersection_characterization(points, args.r, args.s)
    doc = {"r": args.r, "s": args.s, "points": len(points), "intersection": ok}
    if args.json:
        _emit(dumps(doc), args.output)
    else:
        verb = "is" if ok else "is not"
        _emit(f"the {len(points)} points {verb} the meet of a degree-{args.r} and a degree-{args.s} curve\n", args.output)
    return 0


def cmd_generate(args) -> int:
    seed = resolve_seed(args.seed)
    spec = gen.GenSpec(
        kind=args.kind,
        count=args.count,
        seed=seed,
        variant=args.variant,
        r_lines=args.r_lines,
        s_lines=args.s_lines,
        bound=args.bound,
    )
    out = gen.generate(spec)
    metadata = {
        "kind": args.kind,
        "seed": seed,
        "description": out.description,
        "monomial_order": MONOMIAL_ORDER,
    }
    if args.variant:
        metadata["variant"] = args.variant
    for i, p in enumerate(out.provenance):
        metadata[f"provenance_{i}"] = str(p)
        metadata[f"provenance_{i}_coefficients"] = json.dumps(coefficients(p))
    _emit(dumps(pointset_document(out.points, metadata)), args.output)
    return 0


def cmd_verify(args) -> int:
    from . import suites

    seed = resolve_seed(args.seed)
    results = suites.run_all(seed=seed, only=args.only or ())
    if args.json:
        doc = {"seed": seed, "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed, "checks": r.cases, "failures": r.failures}
            for r in results]}
        _emit(dumps(doc), args.output)
    else:
        _emit("".join(r.line() + "\n" for r in results), args.output)
    return 0 if all(r.passed for r in results) else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="poisekit", description="Exact n-independence analysis of planar point sets.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_flags(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", "-i", required=True, help="point-set document, '-' for stdin")
        p.add_argument("-o", "--output", help="write here instead of stdout")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("analyze", help="independence, poisedness and fundamental polynomials")
    io_flags(p)
    p.add_argument("--degree", "-d", type=int, required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="scale criterion witness for kappa = m + n - 3")
    io_flags(p)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check-intersection", help="is the set the meet of degree-r and degree-s curves")
    io_flags(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_check_intersection)

    p = sub.add_parser("generate", help="seeded structured configuration")
    p.add_argument("kind", choices=gen.KINDS)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--variant", help="conic: parabola|hyperbola|two_lines; cubic: graph|nodal")
    p.add_argument("--r-lines", type=int, default=0)
    p.add_argument("--s-lines", type=int, default=0)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run the seeded theorem suites")
    p.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")
    p.add_argument("--only", type=int, action="append", help="criterion number (repeatable)")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except TheoremViolation as exc:
        log.error("theorem violation: %s", exc)
        return 3
    except (ParseError, DuplicatePoints, OSError) as exc:
        log.error("%s", exc)
        return 2
    except (OutOfScope, InvalidParams, EmptySet, DegenerateConfiguration) as exc:
        log.error("%s", exc)
        return 1


def main() -> None:
    sys.exit(run())
