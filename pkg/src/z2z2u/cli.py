"""Command-line front end: ``z2z2u analyze | cyclic | search | verify-paper``.

Exit codes: 0 success, 1 analysis-level failure, 2 input error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .bounds import bounds_report, optimality_lookup
from .code import (
    EnumeratedCode,
    GeneratorMatrix,
    dual,
    gray_image_params,
    macwilliams_transform,
    min_distance,
    parity_check,
    span,
    standard_form,
    weight_enumerator,
)
from .cyclic import CyclicGenerators, cyclic_span, cyclic_type, search_one_weight, spanning_set, validate_generators
from .errors import CapExceeded, CodeTooLarge, NotOneWeight, ValidationFailed, Z2Z2uError, ZeroColumn
from .matrixio import MatrixParseError, format_matrix, parse_matrix, parse_rows
from .oneweight import classify, is_one_weight
from .poly import DEFAULT_DIVISOR_CAP, BinaryPolynomial, parse_poly, xn_minus_1
from .reproduce import run_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

ENV_MAX_CODE_SIZE = "Z2Z2U_MAX_CODE_SIZE"
ENV_MAX_DIVISORS = "Z2Z2U_MAX_DIVISORS"

ANALYSES = ("type", "dual", "gray", "enumerator", "macwilliams", "one-weight", "bounds")


class InputError(Exception):
    pass


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}") from None


def _code_cap(args) -> int | None:
    return args.max_code_size if args.max_code_size is not None else _env_int(ENV_MAX_CODE_SIZE)


def _divisor_cap(args) -> int:
    if args.max_divisors is not None:
        return args.max_divisors
    env = _env_int(ENV_MAX_DIVISORS)
    return DEFAULT_DIVISOR_CAP if env is None else env


def _poly(text: str, what: str) -> BinaryPolynomial:
    try:
        return parse_poly(text)
    except ValueError as exc:
        raise InputError(f"{what}: {exc}") from None


def _emit(report: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(text_lines))


# ---------------------------------------------------------------------------
# analysis report shared by analyze and cyclic


def _analyses(spec: str | None) -> set[str]:
    if not spec:
        return set(ANALYSES)
    chosen = {x.strip() for x in spec.split(",") if x.strip()}
    unknown = chosen - set(ANALYSES)
    if unknown:
        raise InputError(f"unknown analyses: {', '.join(sorted(unknown))} (choose from {', '.join(ANALYSES)})")
    return chosen


def analysis_report(gm: GeneratorMatrix, code: EnumeratedCode, wanted: set[str], cap: int | None) -> dict:
    """Standard form, dual, enumerators, Gray parameters, one-weight facts and bounds as a JSON-ready dict."""
    sf = standard_form(gm)
    t = sf.code_type
    rep: dict = {
        "type": list(t.as_tuple()),
        "size": len(code),
        "minDistance": min_distance(code) if len(code) > 1 else None,
    }
    we = weight_enumerator(code)
    rep["weightEnumerator"] = list(we.coeffs)
    rep["grayParams"] = list(gray_image_params(code)) if len(code) > 1 else None
    if "type" in wanted:
        rep["standardForm"] = format_matrix(sf.g_std).splitlines()[1:]
        rep["permutations"] = {"binary": list(sf.bin_perm), "ring": list(sf.ring_perm)}
    dcode = None
    if wanted & {"dual", "macwilliams"}:
        dcode = dual(code, cap=cap)
    if "dual" in wanted:
        h = parity_check(sf)
        rep["dual"] = {
            "type": list(t.dual().as_tuple()),
            "size": len(dcode),
            "parityCheck": format_matrix(h).splitlines()[1:],
            "minDistance": min_distance(dcode) if len(dcode) > 1 else None,
            "weightEnumerator": list(weight_enumerator(dcode).coeffs),
            "grayParams": list(gray_image_params(dcode)) if len(dcode) > 1 else None,
        }
    if "macwilliams" in wanted:
        transformed = macwilliams_transform(we, len(code))
        rep["macwilliams"] = {
            "transformed": list(transformed.coeffs),
            "matchesDual": transformed.coeffs == weight_enumerator(dcode).coeffs,
        }
    if "one-weight" in wanted:
        rep["oneWeight"] = _one_weight(code, gm)
    if "bounds" in wanted and len(code) > 1:
        rep["bounds"] = bounds_report(code).to_dict()
    return rep


def _one_weight(code: EnumeratedCode, gm: GeneratorMatrix) -> dict:
    if len(code) < 2:
        return {"isOneWeight": False, "m": None, "note": "zero code"}
    m = is_one_weight(code)
    if m is None:
        return {"isOneWeight": False, "m": None, "weights": sorted(set(code.weights) - {0})}
    try:
        return classify(code, gm).to_dict()
    except ZeroColumn:
        return {"isOneWeight": True, "m": m, "note": "code has a zero coordinate; structure theorems not applied"}


def _report_text(rep: dict) -> list[str]:
    r, s, k0, k1, k2 = rep["type"]
    out = [f"type: ({r},{s};{k0},{k1},{k2})", f"size: {rep['size']}", f"min distance: {rep['minDistance']}"]
    out.append("weight enumerator: " + " ".join(map(str, rep["weightEnumerator"])))
    out.append(f"Gray image: {rep['grayParams']}")
    if "standardForm" in rep:
        out.append("standard form:")
        out += ["  " + x for x in rep["standardForm"]]
    if "dual" in rep:
        d = rep["dual"]
        dr = d["type"]
        out.append(f"dual type: ({dr[0]},{dr[1]};{dr[2]},{dr[3]},{dr[4]}), size {d['size']}")
        out.append("parity check:")
        out += ["  " + x for x in d["parityCheck"]]
        out.append("dual weight enumerator: " + " ".join(map(str, d["weightEnumerator"])))
        out.append(f"dual Gray image: {d['grayParams']}")
    if "macwilliams" in rep:
        mw = rep["macwilliams"]
        out.append("MacWilliams transform: " + " ".join(map(str, mw["transformed"]))
                   + (" (matches dual)" if mw["matchesDual"] else " (DOES NOT match dual)"))
    if "oneWeight" in rep:
        ow = rep["oneWeight"]
        if ow["isOneWeight"]:
            line = f"one-weight: yes, m={ow['m']}"
            if ow.get("alpha") is not None:
                line += f", alpha={ow['alpha']}, dual distance class {ow['dualDistanceClass']}"
            out.append(line)
            for v in ow.get("violations", []):
                out.append(f"  violation: {v}")
            if "note" in ow:
                out.append(f"  note: {ow['note']}")
        else:
            out.append("one-weight: no")
    if "bounds" in rep:
        b = rep["bounds"]
        out.append(f"sphere packing: {b['spherePackingLHS']} <= {b['spherePackingRHS']}"
                   + (" (perfect)" if b["isPerfect"] else ""))
        if b["plotkinApplicable"]:
            out.append(f"Plotkin: bound {b['plotkinBound']} [{b['plotkinCase']}]"
                       + (" attained" if b["attainsPlotkin"] else ""))
        else:
            out.append("Plotkin: not applicable")
        if b["optimalPerCatalog"] is not None:
            out.append(f"catalog optimal: {b['optimalPerCatalog']}")
    return out


def _expect_one_weight(args, rep: dict) -> int:
    if getattr(args, "expect_one_weight", False):
        ow = rep.get("oneWeight")
        if ow is None:
            ow = {"isOneWeight": False}
        if not ow["isOneWeight"]:
            print(f"error: {NotOneWeight.__doc__}", file=sys.stderr)
            return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> int:
    if bool(args.matrix) == bool(args.rows):
        raise InputError("give exactly one of a matrix FILE or --rows")
    try:
        if args.rows:
            gm = parse_rows(args.rows)
        else:
            text = sys.stdin.read() if args.matrix == "-" else open(args.matrix).read()
            gm = parse_matrix(text)
    except MatrixParseError as exc:
        raise InputError(f"{args.matrix}: {exc}") from None
    except OSError as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    wanted = _analyses(args.only)
    if args.expect_one_weight:
        wanted.add("one-weight")
    cap = _code_cap(args)
    code = span(gm, cap=cap)
    rep = analysis_report(gm, code, wanted, cap)
    _emit(rep, args.format, _report_text(rep))
    return _expect_one_weight(args, rep)


def _cyclic_generators(args) -> CyclicGenerators:
    r, s = args.r, args.s
    if s < 1 or s % 2 == 0:
        raise InputError("s must be odd")
    if r < 1:
        raise InputError("r must be positive")
    f = None if args.f is None or args.f.strip().lower() == "absent" else _poly(args.f, "f")
    g = _poly(args.g, "g")
    if g.is_zero() or g == xn_minus_1(s):
        g = None
    return CyclicGenerators.make(r, s, _poly(args.l, "l"), g, _poly(args.a, "a"), f=f)


def cmd_cyclic(args) -> int:
    cg = _cyclic_generators(args)
    conds = validate_generators(cg)
    failed = [c for c in conds if not c.ok and c.severity == "error"]
    if failed:
        for c in failed:
            print(f"error: {c}", file=sys.stderr)
        return EXIT_INPUT
    cap = _code_cap(args)
    gm = spanning_set(cg)
    code = cyclic_span(cg, cap=cap)
    deriv = cyclic_type(cg)
    wanted = _analyses(args.only)
    if args.expect_one_weight:
        wanted.add("one-weight")
    rep = analysis_report(gm, code, wanted, cap) if len(code) > 1 else {
        "type": list(deriv.code_type.as_tuple()), "size": 1, "minDistance": None,
        "weightEnumerator": [1] + [0] * code.n, "grayParams": None}
    rep["generators"] = cg.describe()
    rep["spanningSet"] = format_matrix(gm).splitlines()[1:]
    rep["typeFormula"] = {"t1": deriv.t1, "t2": deriv.t2, "t3": deriv.t3, "t4": deriv.t4,
                          "d1": str(deriv.d1), "type": list(deriv.code_type.as_tuple())}
    rep["warnings"] = [str(c) for c in conds if not c.ok and c.severity != "error"]
    text = [f"{k}: {v}" for k, v in sorted(cg.describe().items())]
    text += [f"warning: {w}" for w in rep["warnings"]]
    text.append("spanning set:")
    text += ["  " + x for x in rep["spanningSet"]]
    tf = rep["typeFormula"]
    text.append(f"degrees: t1={tf['t1']} t2={tf['t2']} t3={tf['t3']} t4={tf['t4']} (d1 = {tf['d1']})")
    text += _report_text(rep)
    _emit(rep, args.format, text)
    return _expect_one_weight(args, rep)


def _search_note(r: int, s: int, g_nonzero: bool, g_zero: bool, hits: list) -> str | None:
    if hits or not g_nonzero or g_zero:
        return None
    if r > s:
        return "no one-weight cyclic code exists for r > s with g != 0"
    if r < s:
        return ("r < s with g != 0 lies outside both classified families (r = s with g != 0, and g = 0); "
                "the exhaustive divisor search found no one-weight code")
    return None


def cmd_search(args) -> int:
    r, s = args.r, args.s
    if s < 1 or s % 2 == 0:
        raise InputError("s must be odd")
    if r < 1:
        raise InputError("r must be positive")
    g_nonzero = args.g in ("nonzero", "any")
    g_zero = args.g in ("zero", "any")
    ls = [_poly(x, "l") for x in args.l] if args.l else None
    as_ = [_poly(x, "a") for x in args.a] if args.a else None
    hits: list = []
    partial = False
    try:
        hits = search_one_weight(r, s, g_nonzero=g_nonzero, g_zero=g_zero, l_choices=ls, a_choices=as_,
                                 max_divisors=_divisor_cap(args), max_tuples=args.max_tuples, cap=_code_cap(args))
    except CapExceeded as exc:
        hits = getattr(exc, "partial", [])
        partial = True
        print(f"warning: {exc}; results are partial", file=sys.stderr)
    rows = []
    for h in hits:
        d = h.to_dict()
        d["optimalPerCatalog"] = optimality_lookup(*h.gray_params)
        d["violations"] = list(h.violations)
        rows.append(d)
    rep = {"r": r, "s": s, "g": args.g, "partial": partial, "hits": rows,
           "note": _search_note(r, s, g_nonzero, g_zero, hits)}
    text = [f"search r={r} s={s} g={args.g}: {len(rows)} one-weight code(s)" + (" (partial)" if partial else "")]
    for d in rows:
        ty = d["type"]
        text.append(f"  m={d['m']} Gray {d['grayParams']} type ({ty[0]},{ty[1]};{ty[2]},{ty[3]},{ty[4]})"
                    f" f={d['f']} l={d['l']} g={d['g']} a={d['a']}"
                    + (" optimal" if d["optimalPerCatalog"] else ""))
    if rep["note"]:
        text.append(f"note: {rep['note']}")
    _emit(rep, args.format, text)
    return EXIT_CAP if partial else EXIT_OK


def cmd_verify_paper(args) -> int:
    results = []
    failed = 0
    for res in run_checks(include_slow=args.full, match=args.match):
        failed += not res.ok
        results.append(res)
        if args.format == "text":
            print(f"{'PASS' if res.ok else 'FAIL'}  {res.key}: {res.detail}", flush=True)
    if args.format == "json":
        print(json.dumps([{"key": r.key, "ok": r.ok, "detail": r.detail} for r in results], sort_keys=True, indent=2))
    else:
        print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------


def _caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-code-size", type=int, default=None,
                   help=f"enumeration cap in codewords (env {ENV_MAX_CODE_SIZE}, default 2^22)")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="z2z2u", description="Linear and cyclic codes over Z2^r x (Z2+uZ2)^s.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a code given by a generator matrix")
    p.add_argument("matrix", nargs="?", help="matrix file ('-' for stdin)")
    p.add_argument("--rows", nargs="+", metavar="ROW", help='inline rows such as "(1,1|w,w)"')
    p.add_argument("--only", help=f"comma-separated subset of: {', '.join(ANALYSES)}")
    p.add_argument("--expect-one-weight", action="store_true", help="exit 1 unless the code is one-weight")
    _common(p)
    _caps(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cyclic", help="build and analyze <(f,0), (l, g+ua)>")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--f", default=None, help='polynomial or "absent" (default)')
    p.add_argument("--l", required=True)
    p.add_argument("--g", required=True, help='polynomial; "0" or "x^s-1" for the zero residue')
    p.add_argument("--a", required=True)
    p.add_argument("--only", help=f"comma-separated subset of: {', '.join(ANALYSES)}")
    p.add_argument("--expect-one-weight", action="store_true")
    _common(p)
    _caps(p)
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("search", help="exhaustive search for one-weight cyclic codes")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--g", choices=("nonzero", "zero", "any"), default="any")
    p.add_argument("--l", nargs="+", help="restrict l to these polynomials")
    p.add_argument("--a", nargs="+", help="restrict a to these polynomials")
    p.add_argument("--max-divisors", type=int, default=None,
                   help=f"divisor enumeration cap (env {ENV_MAX_DIVISORS}, default {DEFAULT_DIVISOR_CAP})")
    p.add_argument("--max-tuples", type=int, default=1 << 20)
    _common(p)
    _caps(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-paper", help="reproduce every published example and theorem suite")
    p.add_argument("--full", action="store_true", help="include the slow type-formula sweep up to r,s = 15")
    p.add_argument("--match", help="run only checks whose key contains this text")
    _common(p)
    p.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValidationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CodeTooLarge, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Z2Z2uError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
