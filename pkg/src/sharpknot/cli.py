"""Command-line interface: ``sharpknot {stats,sharp,certify,identify}``.

Every command prints one JSON report.  Exit codes: 0 success (including
inconclusive certificates), 2 input errors, 3 crossing budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import (
    InconclusiveError,
    bennequin_bound,
    fingerprint_trivial,
    nonalternating_certificate,
    theorem1_certificate,
    theorem1_threshold,
    theorem2_equality,
    u_sharp_bounds,
)
from .diagram import (
    BraidWord,
    DiagramError,
    PlanarDiagram,
    braid_closure,
    parse_braid,
    parse_pd,
    render_braid,
    render_pd,
    seifert_genus_upper,
    stats,
)
from .moves import MoveError, positive_sharp_braid, simplify
from .polynomials import MAX_BRACKET_CROSSINGS, CrossingBudgetError, jones
from .signature import signature_goeritz
from .table import TableError, default_table_path, identify, load_table

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3


class _Usage(Exception):
    pass


def _read_input(args) -> tuple[dict, PlanarDiagram, BraidWord | None]:
    if args.braid is not None and args.pd is not None:
        raise _Usage("give either --braid or --pd, not both")
    if args.braid is not None:
        b = parse_braid(args.braid)
        return {"braid": render_braid(b), "strands": b.strands}, braid_closure(b), b
    if args.pd is not None:
        d = parse_pd(args.pd)
        return {"pd": render_pd(d)}, d, None
    raise _Usage("one of --braid or --pd is required")


def _knot_section(d: PlanarDiagram, genus_bound=None) -> dict:
    """Bennequin bound, genus bound and signature, when the diagram is a connected knot."""
    out: dict = {}
    if not (d.is_connected() and d.is_knot()):
        out["note"] = "bounds and signature need a connected knot diagram"
        return out
    sb = bennequin_bound(d)
    out["bennequin"] = sb.as_dict()
    g = seifert_genus_upper(d)
    out["seifert_genus_upper"] = g if isinstance(g, int) else str(g)
    out["signature"] = signature_goeritz(d).as_dict()
    out["theorem1_threshold"] = theorem1_threshold(d, g if genus_bound is None else genus_bound)
    return out


def _jones_section(d: PlanarDiagram) -> dict | None:
    if len(d.crossings) > MAX_BRACKET_CROSSINGS:
        return None
    return jones(d).as_dict()


def _diagram_report(d: PlanarDiagram, genus_bound=None) -> dict:
    rep = {"pd": render_pd(d), "stats": stats(d).as_dict()}
    rep.update(_knot_section(d, genus_bound))
    j = _jones_section(d)
    if j is not None:
        rep["jones"] = j
    return rep


def _parse_site(text: str | None, b: BraidWord):
    if text is None:
        return 1, None
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise _Usage(f"--site expects 'i' or 'i,offset', got {text!r}") from None
    if len(parts) == 1:
        return parts[0], None
    if len(parts) == 2:
        return parts[0], parts[1]
    raise _Usage(f"--site expects 'i' or 'i,offset', got {text!r}")


def _apply_sharps(b: BraidWord, n: int, site: str | None):
    i, offset = _parse_site(site, b)
    records = []
    for _ in range(n):
        pos = len(b.letters) if offset is None else offset
        b, rec = positive_sharp_braid(b, i, pos)
        records.append(rec.as_dict())
    return b, records


def _load(args):
    return load_table(args.table if args.table else default_table_path())


def _identify_section(d: PlanarDiagram, args, strict: bool = False) -> dict:
    s = simplify(d)
    if len(s.crossings) > MAX_BRACKET_CROSSINGS:
        if strict:
            raise CrossingBudgetError(
                f"{len(s.crossings)} crossings after simplification, budget is {MAX_BRACKET_CROSSINGS}"
            )
        return {"status": "skipped", "reason": "over crossing budget after simplification"}
    if not s.is_knot():
        return {"status": "skipped", "reason": "identification covers knots only"}
    matches = identify(s, _load(args))
    return {
        "simplified_pd": render_pd(s),
        "simplified_crossings": len(s.crossings),
        "matches": [m.as_dict() for m in matches],
        "status": "matched" if matches else "unidentified",
    }


# ---------------------------------------------------------------------------
# commands


def cmd_stats(args) -> dict:
    echo, d, _ = _read_input(args)
    return {"command": "stats", "input": echo, "diagram": _diagram_report(d, args.genus_bound)}


def cmd_sharp(args) -> dict:
    if args.braid is None:
        raise _Usage("sharp works on braids: use --braid")
    echo, d, b = _read_input(args)
    if args.n < 0:
        raise _Usage("-n must be nonnegative")
    rep: dict = {"command": "sharp", "input": dict(echo, moves=args.n)}
    rep["before"] = _diagram_report(d, args.genus_bound)
    warnings = []
    b_out, records = _apply_sharps(b, args.n, args.site)
    d_out = braid_closure(b_out)
    rep["moves"] = records
    rep["output_braid"] = render_braid(b_out)
    rep["after"] = _diagram_report(d_out)
    certs = []
    if args.n > 0 and d.is_knot() and d.is_connected():
        threshold = rep["before"]["theorem1_threshold"]
        if args.n < threshold:
            warnings.append(
                f"n = {args.n} is below the threshold {threshold}; the certificate is computed anyway"
            )
        certs.append(theorem1_certificate(d, args.n, args.genus_bound).as_dict())
    if args.n > 0 and d_out.is_knot():
        certs.append(nonalternating_certificate(d_out).as_dict())
        rep["identification"] = _identify_section(d_out, args)
    rep["certificates"] = certs
    rep["warnings"] = warnings
    return rep


def cmd_certify(args) -> dict:
    echo, d, b = _read_input(args)
    moves = []
    if args.n:
        if b is None:
            raise _Usage("-n needs --braid")
        b, moves = _apply_sharps(b, args.n, args.site)
        d = braid_closure(b)
        echo = dict(echo, moves=args.n, output_braid=render_braid(b))
    rep: dict = {"command": "certify", "input": echo, "moves": moves}
    rep["diagram"] = _diagram_report(d, args.genus_bound)
    if not (d.is_connected() and d.is_knot()):
        raise _Usage("certify needs a connected knot diagram")
    sb = bennequin_bound(d)
    sigma = signature_goeritz(d)
    certs = []
    try:
        bounds = u_sharp_bounds(sb, sigma, args.witness)
    except ValueError as e:
        rep.update(verdict="inconclusive", reason=str(e), certificates=certs)
        return rep
    rep["bounds"] = bounds.as_dict()
    na = nonalternating_certificate(d, sigma)
    certs.append(na.as_dict())
    try:
        cert = theorem2_equality(bounds, sb, sigma, fingerprint_trivial(d))
    except InconclusiveError as e:
        rep.update(verdict="inconclusive", reason=str(e), certificates=certs)
        return rep
    certs.append(cert.as_dict())
    rep["certificates"] = certs
    rep["verdict"] = cert.verdict
    return rep


def cmd_identify(args) -> dict:
    echo, d, _ = _read_input(args)
    return {"command": "identify", "input": echo, "identification": _identify_section(d, args, strict=True)}


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sharpknot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--braid", help="signed generator indices, optional 'strands=K;' prefix")
        p.add_argument("--pd", help="PD code, X(a,b,c,d) terms")
        p.add_argument("--genus-bound", type=int, default=None, dest="genus_bound",
                       help="upper bound for the genus used by the move threshold")
        p.add_argument("--table", help="knot table CSV (default: $SHARPKNOT_TABLE or bundled)")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", default=True, help="compact JSON (default)")
        fmt.add_argument("--pretty", action="store_true", help="indented JSON")

    p = sub.add_parser("stats", help="writhe, Seifert circles, bounds, signature")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sharp", help="apply positive sharp moves and certify the output")
    common(p)
    p.add_argument("-n", type=int, default=1, help="number of positive sharp moves")
    p.add_argument("--site", help="'i' or 'i,offset': tangle on strands i..i+3 at word offset")
    p.set_defaults(func=cmd_sharp)

    p = sub.add_parser("certify", help="sharp unknotting bounds and the equality certificate")
    common(p)
    p.add_argument("-n", type=int, default=0, help="positive sharp moves to apply first")
    p.add_argument("--site", help="'i' or 'i,offset' for the moves")
    p.add_argument("--witness", type=int, default=None, help="known number of sharp moves that unknot")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("identify", help="match against the knot table")
    common(p)
    p.set_defaults(func=cmd_identify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except CrossingBudgetError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (DiagramError, MoveError, TableError, _Usage, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    report = {"schema_version": SCHEMA_VERSION, **report}
    if args.pretty:
        text = json.dumps(report, indent=2)
    else:
        text = json.dumps(report, separators=(",", ":"))
    print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
