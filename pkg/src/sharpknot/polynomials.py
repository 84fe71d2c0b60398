"""Exact Laurent polynomials, the Kauffman bracket and the Jones polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .diagram import PlanarDiagram, DiagramError

__all__ = [
    "LaurentPoly",
    "JonesFingerprint",
    "CrossingBudgetError",
    "MAX_BRACKET_CROSSINGS",
    "kauffman_bracket",
    "jones",
    "jones_polynomial",
    "format_jones",
    "determinant",
]

MAX_BRACKET_CROSSINGS = 24


class CrossingBudgetError(DiagramError):
    """The state sum was asked for more crossings than the budget allows."""


class LaurentPoly:
    """Integer Laurent polynomial in one variable, stored as ``{exponent: coefficient}``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self.terms()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._c.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._c.items()
            if c not in (1, -1):
                raise ValueError("monomial not invertible over the integers")
            return LaurentPoly({e * n: c ** (-n)})
        out = LaurentPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self._c.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """x -> x**k."""
        return LaurentPoly({e * k: c for e, c in self._c.items()})

    def evaluate_half_at_i(self) -> complex:
        """Value at ``x = i`` using exact Gaussian integers, returned as a complex."""
        re = im = 0
        for e, c in self._c.items():
            r = e % 4
            if r == 0:
                re += c
            elif r == 1:
                im += c
            elif r == 2:
                re -= c
            else:
                im -= c
        return complex(re, im)

    def serialize(self) -> list[str]:
        return [f"{e}:{c}" for e, c in self.terms()]

    @classmethod
    def deserialize(cls, items) -> "LaurentPoly":
        out = {}
        for item in items:
            e, c = item.split(":")
            out[int(e)] = int(c)
        return cls(out)

    def __repr__(self):
        return f"LaurentPoly({self.terms()})"

    def format(self, var: str = "A") -> str:
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + (var if e == 1 else f"{var}^{e}")
            parts.append(("-" if c < 0 else "+") + body)
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s


# -A^2 - A^-2
_LOOP = LaurentPoly({2: -1, -2: -1})


def _crossing_order(d: PlanarDiagram) -> list[int]:
    """Greedy order keeping the open boundary small."""
    n = len(d.crossings)
    if n == 0:
        return []
    remaining = set(range(n))
    order = [0]
    remaining.discard(0)
    open_arcs: dict[int, int] = {}
    for s in d.crossings[0].slots:
        open_arcs[s] = open_arcs.get(s, 0) + 1
    while remaining:
        best, best_score = None, None
        for ci in sorted(remaining):
            slots = d.crossings[ci].slots
            shared = sum(1 for s in slots if open_arcs.get(s, 0) == 1)
            score = (-shared, ci)
            if best_score is None or score < best_score:
                best, best_score = ci, score
        order.append(best)
        remaining.discard(best)
        for s in d.crossings[best].slots:
            open_arcs[s] = open_arcs.get(s, 0) + 1
    return order


def _join(matching: dict[int, int], x: int, y: int) -> int:
    """Add the strand x--y to a partial matching in place; returns loops closed."""
    if x == y:
        return 1
    ex = matching.pop(x, None)
    ey = matching.pop(y, None)
    if ex is not None:
        matching.pop(ex, None)
    if ey is not None:
        matching.pop(ey, None)
    if ex == y:
        return 1
    end_x = x if ex is None else ex
    end_y = y if ey is None else ey
    matching[end_x] = end_y
    matching[end_y] = end_x
    return 0


def kauffman_bracket(d: PlanarDiagram) -> LaurentPoly:
    """Kauffman bracket in ``A``, normalized so a single circle is 1.

    Crossings are absorbed one at a time; partial states with equal boundary
    connectivity are merged, so the cost depends on the width of the open
    boundary rather than on ``2**c``.
    """
    n = len(d.crossings)
    if n > MAX_BRACKET_CROSSINGS:
        raise CrossingBudgetError(
            f"{n} crossings exceeds the bracket budget of {MAX_BRACKET_CROSSINGS}"
        )
    if n == 0:
        return _LOOP ** (d.free_loops - 1)
    # state: frozenset of matched pairs -> {A-exponent: {loops: coeff}}
    states: dict[frozenset, dict[tuple[int, int], int]] = {frozenset(): {(0, 0): 1}}
    for ci in _crossing_order(d):
        a, b, c, dd = d.crossings[ci].slots
        new_states: dict[frozenset, dict[tuple[int, int], int]] = {}
        for key, poly in states.items():
            for pairs, dexp in ((((a, b), (c, dd)), 1), (((a, dd), (b, c)), -1)):
                m = {}
                for u, v in key:
                    m[u] = v
                    m[v] = u
                loops = 0
                for u, v in pairs:
                    loops += _join(m, u, v)
                nk = frozenset((u, v) for u, v in m.items() if u < v)
                target = new_states.setdefault(nk, {})
                for (e, lp), coef in poly.items():
                    kk = (e + dexp, lp + loops)
                    target[kk] = target.get(kk, 0) + coef
        states = new_states
    (final,) = states.values()
    total = LaurentPoly()
    for (e, loops), coef in sorted(final.items()):
        total = total + (_LOOP ** (loops + d.free_loops - 1)).shift(e) * coef
    return total


@dataclass(frozen=True)
class JonesFingerprint:
    """Jones polynomial in ``t^(1/2)`` (exponents doubled) plus cheap derived keys."""

    polynomial: LaurentPoly
    determinant: int
    span: Fraction

    def mirror(self) -> "JonesFingerprint":
        return JonesFingerprint(self.polynomial.substitute_power(-1), self.determinant, self.span)

    def as_dict(self) -> dict:
        return {
            "jones_t_half_exponents": self.polynomial.serialize(),
            "jones": format_jones(self.polynomial),
            "determinant": self.determinant,
            "span": str(self.span),
        }


def format_jones(v: LaurentPoly) -> str:
    """Render a doubled-exponent polynomial in ``t``, e.g. ``t + t^3 - t^4``."""
    if v.is_zero():
        return "0"
    parts = []
    for e, c in sorted(v.terms(), reverse=True):
        power = str(e // 2) if e % 2 == 0 else f"({e}/2)"
        mono = "" if e == 0 else ("t" if e == 2 else f"t^{power}")
        mag = abs(c)
        body = str(mag) if not mono else ("" if mag == 1 else str(mag)) + mono
        parts.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def jones_polynomial(d: PlanarDiagram) -> LaurentPoly:
    """V(t) with exponents of ``t^(1/2)``: ``(-A^3)^(-w) <D>`` at ``A = t^(-1/4)``."""
    br = kauffman_bracket(d)
    w = d.writhe
    f = br.shift(-3 * w) * (-1 if w % 2 else 1)
    out = {}
    for e, c in f.terms():
        if e % 2:
            raise ArithmeticError("odd A-exponent in normalized bracket")
        out[-e // 2] = c
    return LaurentPoly(out)


def jones(d: PlanarDiagram) -> JonesFingerprint:
    v = jones_polynomial(d)
    # t = -1 means t^(1/2) = i
    val = v.evaluate_half_at_i()
    det = int(round(abs(val)))
    span = Fraction(v.max_exp() - v.min_exp(), 2) if not v.is_zero() else Fraction(0)
    return JonesFingerprint(v, det, span)


def determinant(d: PlanarDiagram) -> int:
    """Knot determinant ``|Delta(-1)|``, computed as ``|det|`` of a Goeritz matrix."""
    from .signature import goeritz

    if not d.is_knot():
        raise DiagramError("determinant needs a single-component diagram")
    return abs(goeritz(d).det())
