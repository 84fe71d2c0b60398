"""Certified bounds: non-alternation after positive sharp moves and sharp unknotting numbers.

The Rasmussen invariant ``s`` is never computed.  Three facts about it are used
as given:

* ``|s(K)| <= 2 u(K)``
* ``s(K) = sigma(K)`` for alternating knots (signature in this package's sign convention)
* ``1 + w(D) - O(D) <= s(K)`` for every diagram ``D`` of ``K``, with equality for positive diagrams

together with ``u <= 4 u#`` and ``u# >= |sigma| / 6``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .diagram import (
    DisconnectedDiagramError,
    PlanarDiagram,
    render_pd,
    seifert_circle_count,
    seifert_genus_upper,
)
from .signature import SignatureValue, signature_goeritz

__all__ = [
    "SBound",
    "UnknottingBounds",
    "Certificate",
    "InconclusiveError",
    "bennequin_bound",
    "theorem1_threshold",
    "theorem1_certificate",
    "nonalternating_certificate",
    "u_sharp_bounds",
    "theorem2_equality",
    "fingerprint_trivial",
    "verify_certificate",
]


class InconclusiveError(ValueError):
    """The available bounds do not pin the quantities a certificate needs."""


@dataclass(frozen=True)
class SBound:
    lower: int
    source: str
    exact: bool

    def as_dict(self) -> dict:
        return {"lower": self.lower, "source": self.source, "exact": self.exact}


@dataclass(frozen=True)
class UnknottingBounds:
    u_sharp_lower: int
    u_sharp_upper: int | None
    u_lower: int
    u_upper: int | None

    def __post_init__(self):
        if self.u_sharp_upper is not None and self.u_sharp_lower > self.u_sharp_upper:
            raise ValueError(
                f"sharp unknotting bounds cross: {self.u_sharp_lower} > {self.u_sharp_upper}"
            )
        if self.u_upper is not None and self.u_lower > self.u_upper:
            raise ValueError(f"unknotting bounds cross: {self.u_lower} > {self.u_upper}")

    @property
    def u_sharp_pinned(self) -> bool:
        return self.u_sharp_upper is not None and self.u_sharp_lower == self.u_sharp_upper

    def as_dict(self) -> dict:
        return {
            "u_sharp_lower": self.u_sharp_lower,
            "u_sharp_upper": self.u_sharp_upper,
            "u_lower": self.u_lower,
            "u_upper": self.u_upper,
        }


@dataclass
class Certificate:
    """A theorem application with every number it used.

    ``quantities`` maps a name to ``{"value": ..., "from": operation}``.
    """

    kind: str
    inputs: dict[str, Any]
    quantities: dict[str, dict[str, Any]]
    verdict: bool
    narrative: list[str] = field(default_factory=list)

    def value(self, name: str):
        return self.quantities[name]["value"]

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "inputs": self.inputs,
            "quantities": self.quantities,
            "verdict": self.verdict,
            "narrative": self.narrative,
        }


def _q(value, source: str) -> dict[str, Any]:
    if isinstance(value, Fraction):
        value = int(value) if value.denominator == 1 else str(value)
    return {"value": value, "from": source}


def _knot_check(d: PlanarDiagram):
    if not d.is_connected():
        raise DisconnectedDiagramError("bounds need a connected diagram")
    if not d.is_knot():
        raise ValueError("bounds are only stated for knots")


# ---------------------------------------------------------------------------


def bennequin_bound(d: PlanarDiagram) -> SBound:
    _knot_check(d)
    w = d.writhe
    o = seifert_circle_count(d)
    positive = all(x.sign > 0 for x in d.crossings)
    return SBound(1 + w - o, f"1 + w - O on a {len(d.crossings)}-crossing diagram (w={w}, O={o})", positive)


def theorem1_threshold(d: PlanarDiagram, genus_upper) -> int:
    """Least n with ``n > genus_upper - (1 + w - O) / 2``."""
    _knot_check(d)
    b = bennequin_bound(d).lower
    gap = Fraction(genus_upper) - Fraction(b, 2)
    if gap < 0:
        raise ValueError(
            f"genus bound {genus_upper} is below (1 + w - O)/2 = {Fraction(b, 2)}, which no knot allows"
        )
    return math.floor(gap) + 1


def theorem1_certificate(d: PlanarDiagram, n: int, genus_upper=None) -> Certificate:
    """Does applying ``n`` positive sharp moves to ``d`` force a non-alternating knot?

    Issued as a ``corollary1`` certificate when ``d`` is positive.
    """
    sb = bennequin_bound(d)
    if genus_upper is None:
        genus_upper = seifert_genus_upper(d)
        gsrc = "seifert_genus_upper"
    else:
        gsrc = "caller-supplied genus bound"
    two_g = int(2 * Fraction(genus_upper))
    verdict = 2 * n > two_g - sb.lower
    kind = "corollary1" if sb.exact else "theorem1"
    narrative = [
        f"1 + w - O = {sb.lower} bounds s from below.",
        f"Genus bound g <= {Fraction(two_g, 2)}.",
        f"Condition n > g - (1 + w - O)/2 reads {n} > {Fraction(two_g - sb.lower, 2)}: {'holds' if verdict else 'fails'}.",
    ]
    if verdict:
        narrative.append("After the moves s exceeds the largest possible signature, so the knot is not alternating.")
    return Certificate(
        kind=kind,
        inputs={"diagram": render_pd(d), "moves": n},
        quantities={
            "bennequin_lower": _q(sb.lower, "bennequin_bound"),
            "positive_diagram": _q(sb.exact, "bennequin_bound"),
            "two_genus_upper": _q(two_g, gsrc),
            "moves": _q(n, "input"),
            "threshold": _q(theorem1_threshold(d, Fraction(two_g, 2)), "theorem1_threshold"),
        },
        verdict=verdict,
        narrative=narrative,
    )


def nonalternating_certificate(d_out: PlanarDiagram, sigma: SignatureValue | None = None) -> Certificate:
    """Fires when ``1 + w - O > sigma``: an alternating knot would have ``s = sigma``."""
    sb = bennequin_bound(d_out)
    if sigma is None:
        sigma = signature_goeritz(d_out)
    verdict = sb.lower > sigma.sigma
    narrative = [
        f"s >= 1 + w - O = {sb.lower}.",
        f"sigma = {sigma.sigma}.",
    ]
    if verdict:
        narrative.append(f"s >= {sb.lower} > {sigma.sigma} = sigma, so s != sigma and the knot is not alternating.")
    else:
        narrative.append("The lower bound for s does not exceed sigma; no conclusion.")
    return Certificate(
        kind="non-alternating",
        inputs={"diagram": render_pd(d_out)},
        quantities={
            "bennequin_lower": _q(sb.lower, "bennequin_bound"),
            "sigma": _q(sigma.sigma, "signature_goeritz"),
        },
        verdict=verdict,
        narrative=narrative,
    )


def u_sharp_bounds(s_bound: SBound, sigma: SignatureValue, witness_moves: int | None = None) -> UnknottingBounds:
    if s_bound.lower < 0 and not s_bound.exact:
        raise ValueError("a negative one-sided bound on s says nothing about |s|; mirror the diagram first")
    s_abs = abs(s_bound.lower)
    u_sharp_lower = max(-(-s_abs // 8), -(-abs(sigma.sigma) // 6))
    u_lower = -(-s_abs // 2)
    if witness_moves is not None and witness_moves < 0:
        raise ValueError("witness move count must be nonnegative")
    u_upper = None if witness_moves is None else 4 * witness_moves
    return UnknottingBounds(u_sharp_lower, witness_moves, u_lower, u_upper)


def _s_pinned(bounds: UnknottingBounds, s_bound: SBound) -> tuple[int, str] | None:
    if s_bound.exact:
        return abs(s_bound.lower), "positive diagram"
    if bounds.u_sharp_upper is not None and s_bound.lower >= 0 and s_bound.lower == 8 * bounds.u_sharp_upper:
        return s_bound.lower, "s >= 1 + w - O and |s| <= 8 u# <= 8 * witness"
    return None


def theorem2_equality(
    bounds: UnknottingBounds,
    s_bound: SBound,
    sigma: SignatureValue,
    is_trivial: bool,
) -> Certificate:
    """Check ``u# = |s| / 8``; when it holds, ``u = 4 u#`` and the knot is trivial or non-alternating."""
    if not bounds.u_sharp_pinned:
        raise InconclusiveError("sharp unknotting number is not pinned (need a matching witness)")
    pinned = _s_pinned(bounds, s_bound)
    if pinned is None:
        raise InconclusiveError("s is not pinned: diagram is not positive and 1 + w - O < 8 * witness")
    s_abs, how = pinned
    u_sharp = bounds.u_sharp_lower
    verdict = 8 * u_sharp == s_abs
    narrative = [f"u# = {u_sharp} (lower bound meets witness).", f"|s| = {s_abs} ({how})."]
    quantities = {
        "u_sharp": _q(u_sharp, "u_sharp_bounds"),
        "s_abs": _q(s_abs, "bennequin_bound"),
        "sigma": _q(sigma.sigma, "signature_goeritz"),
        "trivial": _q(bool(is_trivial), "fingerprint_trivial"),
    }
    if verdict:
        quantities["u"] = _q(4 * u_sharp, "theorem2_equality")
        if is_trivial:
            branch = "trivial (fingerprint-trivial)"
        else:
            branch = "non-alternating"
            # |sigma| <= 6 u# = 3|s|/4 < |s|, so s != sigma
            quantities["sigma_below_s"] = _q(abs(sigma.sigma) < s_abs, "theorem2_equality")
        quantities["branch"] = _q(branch, "theorem2_equality")
        narrative.append(f"u# = |s|/8 holds, hence u = 4 u# = {4 * u_sharp}.")
        narrative.append(f"Knot is {branch}.")
    else:
        narrative.append(f"8 u# = {8 * u_sharp} != |s| = {s_abs}; equality case does not apply.")
    return Certificate(
        kind="theorem2-equality",
        inputs={"s_bound": s_bound.as_dict(), "bounds": bounds.as_dict()},
        quantities=quantities,
        verdict=verdict,
        narrative=narrative,
    )


def fingerprint_trivial(d: PlanarDiagram) -> bool:
    """Jones polynomial 1 and signature 0 after simplification.

    A heuristic identification of the unknot; Jones is not known to detect it.
    """
    from .moves import simplify
    from .polynomials import jones_polynomial

    s = simplify(d)
    if not s.crossings:
        return s.free_loops == 1
    return jones_polynomial(s) == 1 and signature_goeritz(s).sigma == 0


def verify_certificate(cert: Certificate | dict) -> bool:
    """Recompute a certificate's verdict from its stored quantities."""
    if isinstance(cert, dict):
        kind, q = cert["kind"], cert["quantities"]
        stated = cert["verdict"]
    else:
        kind, q, stated = cert.kind, cert.quantities, cert.verdict
    v = {k: item["value"] for k, item in q.items()}
    if kind in ("theorem1", "corollary1"):
        ok = 2 * v["moves"] > v["two_genus_upper"] - v["bennequin_lower"]
        if kind == "corollary1" and not v["positive_diagram"]:
            return False
    elif kind == "non-alternating":
        ok = v["bennequin_lower"] > v["sigma"]
    elif kind == "theorem2-equality":
        ok = 8 * v["u_sharp"] == v["s_abs"]
        if ok and v.get("u") != 4 * v["u_sharp"]:
            return False
        if ok and not v["trivial"] and not v.get("sigma_below_s", False):
            return False
    else:
        raise ValueError(f"unknown certificate kind {kind!r}")
    return ok == stated
