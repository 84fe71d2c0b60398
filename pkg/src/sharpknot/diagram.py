"""Braid words, planar diagrams, braid closure and Seifert-algorithm statistics.

PD convention: each crossing ``X(a,b,c,d)`` lists its four arcs counterclockwise,
starting from the incoming under-strand.  The under-strand runs ``a -> c``; the
over-strand runs ``d -> b`` at a positive crossing and ``b -> d`` at a negative one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "BraidWord",
    "Crossing",
    "PlanarDiagram",
    "DiagramStats",
    "DiagramError",
    "BraidParseError",
    "PDParseError",
    "DisconnectedDiagramError",
    "parse_braid",
    "render_braid",
    "parse_pd",
    "render_pd",
    "braid_closure",
    "stats",
    "seifert_genus_upper",
    "faces",
    "mirror",
    "relabel",
    "canonical_key",
    "same_up_to_relabeling",
    "is_alternating_diagram",
]


class DiagramError(ValueError):
    """Invalid braid or diagram data."""


class BraidParseError(DiagramError):
    pass


class PDParseError(DiagramError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        if pos is not None and text:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)
        self.pos = pos


class DisconnectedDiagramError(DiagramError):
    """Raised by genus/signature routines, which only make sense for knots."""


# ---------------------------------------------------------------------------
# braids


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...]
    strands: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise DiagramError(f"strand count must be positive, got {self.strands}")
        for x in self.letters:
            if x == 0:
                raise DiagramError("braid letters must be nonzero")
            if abs(x) > self.strands - 1:
                raise DiagramError(
                    f"generator {x} needs {abs(x) + 1} strands, braid has {self.strands}"
                )

    def __len__(self):
        return len(self.letters)

    @property
    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def mirror(self) -> "BraidWord":
        return BraidWord(tuple(-x for x in self.letters), self.strands)

    def closure_permutation(self) -> list[int]:
        """perm[p] = position (0-based) reached at the bottom by the strand starting at p."""
        pos = list(range(self.strands))  # pos[p] = strand currently at position p
        for x in self.letters:
            i = abs(x) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        perm = [0] * self.strands
        for p, s in enumerate(pos):
            perm[s] = p
        return perm

    def closure_components(self) -> int:
        perm = self.closure_permutation()
        seen = [False] * self.strands
        count = 0
        for p in range(self.strands):
            if not seen[p]:
                count += 1
                while not seen[p]:
                    seen[p] = True
                    p = perm[p]
        return count

    def is_knot(self) -> bool:
        return self.closure_components() == 1


_STRANDS_RE = re.compile(r"^\s*strands\s*=\s*(-?\d+)\s*;?")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"[strands=K;] l1 l2 ..."`` into a :class:`BraidWord`."""
    strands = None
    m = _STRANDS_RE.match(text)
    if m:
        strands = int(m.group(1))
        text = text[m.end():]
    letters = []
    for tok in text.replace(",", " ").split():
        try:
            x = int(tok)
        except ValueError:
            raise BraidParseError(f"not an integer braid letter: {tok!r}") from None
        if x == 0:
            raise BraidParseError("braid letter 0 is not a generator")
        letters.append(x)
    if strands is None:
        strands = max((abs(x) for x in letters), default=0) + 1
    try:
        return BraidWord(tuple(letters), strands)
    except DiagramError as e:
        raise BraidParseError(str(e)) from None


def render_braid(b: BraidWord) -> str:
    body = " ".join(str(x) for x in b.letters)
    default = max((abs(x) for x in b.letters), default=0) + 1
    if b.strands != default:
        return f"strands={b.strands}; {body}".rstrip()
    return body


# ---------------------------------------------------------------------------
# planar diagrams


@dataclass(frozen=True)
class Crossing:
    slots: tuple[int, int, int, int]
    sign: int

    @property
    def in_slots(self) -> tuple[int, int]:
        return (0, 3) if self.sign > 0 else (0, 1)

    @property
    def out_slots(self) -> tuple[int, int]:
        return (2, 1) if self.sign > 0 else (2, 3)

    def flipped(self) -> "Crossing":
        """Same strands and orientations, over/under exchanged."""
        a, b, c, d = self.slots
        if self.sign > 0:
            return Crossing((d, a, b, c), -1)
        return Crossing((b, c, d, a), 1)

    def __str__(self):
        return "X(%d,%d,%d,%d)" % self.slots


@dataclass(frozen=True)
class PlanarDiagram:
    """An oriented link diagram.

    ``free_loops`` counts crossingless circles; the 0-crossing unknot is
    ``PlanarDiagram((), free_loops=1)``.
    """

    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    _ends: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")
        if not self.crossings and self.free_loops == 0:
            raise DiagramError("empty diagram")
        tails: dict[int, tuple[int, int]] = {}
        heads: dict[int, tuple[int, int]] = {}
        for ci, x in enumerate(self.crossings):
            if x.sign not in (1, -1):
                raise DiagramError(f"crossing {ci} has sign {x.sign}")
            for k in x.in_slots:
                lab = x.slots[k]
                if lab in heads:
                    raise DiagramError(f"arc {lab} enters two crossings")
                heads[lab] = (ci, k)
            for k in x.out_slots:
                lab = x.slots[k]
                if lab in tails:
                    raise DiagramError(f"arc {lab} leaves two crossings")
                tails[lab] = (ci, k)
        if set(heads) != set(tails):
            bad = sorted(set(heads) ^ set(tails))
            raise DiagramError(f"arcs without consistent orientation: {bad}")
        n = len(heads)
        if set(heads) != set(range(1, n + 1)):
            raise DiagramError("arc labels must be 1..arc_count")
        object.__setattr__(self, "_ends", {"head": heads, "tail": tails})

    @property
    def arc_count(self) -> int:
        return len(self._ends["head"])

    def head(self, arc: int) -> tuple[int, int]:
        """(crossing index, slot) where ``arc`` ends."""
        return self._ends["head"][arc]

    def tail(self, arc: int) -> tuple[int, int]:
        return self._ends["tail"][arc]

    def other_end(self, ci: int, k: int) -> tuple[int, int]:
        lab = self.crossings[ci].slots[k]
        h = self.head(lab)
        return self.tail(lab) if h == (ci, k) else h

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def next_arc(self, arc: int) -> int:
        """Arc following ``arc`` along its strand."""
        ci, k = self.head(arc)
        return self.crossings[ci].slots[(k + 2) % 4]

    def components(self) -> list[list[int]]:
        """Arc cycles, one per component with crossings."""
        seen = set()
        comps = []
        for a in range(1, self.arc_count + 1):
            if a in seen:
                continue
            comp = []
            while a not in seen:
                seen.add(a)
                comp.append(a)
                a = self.next_arc(a)
            comps.append(comp)
        return comps

    @property
    def component_count(self) -> int:
        return len(self.components()) + self.free_loops

    def is_knot(self) -> bool:
        return self.component_count == 1

    def is_connected(self) -> bool:
        if not self.crossings:
            return self.free_loops == 1
        if self.free_loops:
            return False
        parent = list(range(len(self.crossings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a in range(1, self.arc_count + 1):
            i, j = find(self.head(a)[0]), find(self.tail(a)[0])
            parent[i] = j
        return len({find(i) for i in range(len(self.crossings))}) == 1

    def __str__(self):
        return render_pd(self)


@dataclass(frozen=True)
class DiagramStats:
    writhe: int
    seifert_circles: int
    crossing_count: int
    connected: bool

    def as_dict(self) -> dict:
        return {
            "writhe": self.writhe,
            "seifert_circles": self.seifert_circles,
            "crossing_count": self.crossing_count,
            "connected": self.connected,
        }


# ---------------------------------------------------------------------------
# PD text


_TERM_RE = re.compile(r"X\s*[\(\[]\s*([^\)\]]*)[\)\]]")


def _pd_tuples(text: str) -> list[tuple[tuple[int, ...], int]]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace() or ch == ",":
            pos += 1
            continue
        m = _TERM_RE.match(text, pos)
        if not m:
            raise PDParseError("expected X(a,b,c,d)", text, pos)
        parts = [p.strip() for p in m.group(1).split(",")]
        if len(parts) != 4:
            raise PDParseError("crossing needs exactly 4 arc labels", text, pos)
        try:
            labels = tuple(int(p) for p in parts)
        except ValueError:
            raise PDParseError("arc labels must be integers", text, pos) from None
        if any(x <= 0 for x in labels):
            raise PDParseError("arc labels must be positive", text, pos)
        out.append((labels, pos))
        pos = m.end()
    return out


def _orient(slot_lists: Sequence[Sequence[int]], text: str = "", positions=None) -> list[int]:
    """Infer crossing signs from unoriented slot data.

    Under-strands run slot 0 -> slot 2, which fixes the orientation of every
    component that passes under somewhere.  A component that only passes over
    is oriented from the smaller to the larger label at its first crossing
    (``d -> b`` when ``b == d + 1``), defaulting to ``d -> b``.
    """
    positions = positions or [None] * len(slot_lists)
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, slots in enumerate(slot_lists):
        for k, lab in enumerate(slots):
            occ.setdefault(lab, []).append((ci, k))
    for lab, where in occ.items():
        if len(where) != 2:
            ci = where[0][0] if len(where) == 1 else where[2][0]
            what = "dangling arc" if len(where) == 1 else f"arc used {len(where)} times"
            raise PDParseError(f"{what}: {lab}", text, positions[ci])

    def other(ci, k):
        lab = slot_lists[ci][k]
        a, b = occ[lab]
        return b if a == (ci, k) else a

    signs: list[int | None] = [None] * len(slot_lists)
    visited: set[tuple[int, int]] = set()
    for ci0 in range(len(slot_lists)):
        for k0 in range(4):
            if (ci0, k0) in visited:
                continue
            # walk the strand through (ci0, k0), treating k0 as an entry
            passes = []
            ci, k = ci0, k0
            while (ci, k) not in visited:
                kout = (k + 2) % 4
                visited.add((ci, k))
                visited.add((ci, kout))
                passes.append((ci, k))
                ci, k = other(ci, kout)
            unders = {k for ci, k in passes if k in (0, 2)}
            if unders == {0, 2}:
                raise PDParseError(
                    "unorientable strand: it enters two under-crossings from opposite ends",
                    text,
                    positions[passes[0][0]],
                )
            if unders:
                forward = unders == {0}
            else:
                ci, k = passes[0]
                b, d = slot_lists[ci][1], slot_lists[ci][3]
                entry_slot = 1 if d == b + 1 else 3
                forward = k == entry_slot
            for ci, k in passes:
                if k in (1, 3):
                    entry = k if forward else (k + 2) % 4
                    signs[ci] = 1 if entry == 3 else -1
    return signs


def _compact(crossings: Iterable[Crossing], free_loops: int = 0) -> PlanarDiagram:
    """Renumber arc labels to 1..n in order of first appearance."""
    crossings = list(crossings)
    mapping: dict[int, int] = {}
    for x in crossings:
        for lab in x.slots:
            if lab not in mapping:
                mapping[lab] = len(mapping) + 1
    return PlanarDiagram(
        tuple(Crossing(tuple(mapping[s] for s in x.slots), x.sign) for x in crossings),
        free_loops,
    )


def parse_pd(text: str) -> PlanarDiagram:
    """Parse ``X(a,b,c,d) ...``; orientations and signs are inferred.

    Labels are kept when they already are 1..n, otherwise renumbered in order
    of appearance.  Empty text is the 0-crossing unknot.
    """
    terms = _pd_tuples(text)
    if not terms:
        return PlanarDiagram((), free_loops=1)
    slot_lists = [t for t, _ in terms]
    signs = _orient(slot_lists, text, [p for _, p in terms])
    crossings = [Crossing(tuple(s), sg) for s, sg in zip(slot_lists, signs)]
    labels = {lab for s in slot_lists for lab in s}
    try:
        if labels == set(range(1, len(labels) + 1)):
            return PlanarDiagram(tuple(crossings))
        return _compact(crossings)
    except DiagramError as e:
        raise PDParseError(str(e), text, terms[0][1]) from None


def render_pd(d: PlanarDiagram) -> str:
    return " ".join(str(x) for x in d.crossings)


# ---------------------------------------------------------------------------
# braid closure


def _braid_tangle(letters: Sequence[int], top: Sequence[int], fresh):
    """Crossings of a braid read top to bottom, strands oriented downward.

    ``top[p]`` is the arc entering position p (0-based); ``fresh()`` yields new
    labels.  Returns ``(crossings, bottom)``.
    """
    cur = list(top)
    crossings = []
    for x in letters:
        i = abs(x) - 1
        left, right = cur[i], cur[i + 1]
        out_left, out_right = fresh(), fresh()
        if x > 0:
            # under-strand runs top-left -> bottom-right
            slots = (left, out_left, out_right, right)
        else:
            slots = (right, left, out_left, out_right)
        crossings.append(Crossing(slots, 1 if x > 0 else -1))
        cur[i], cur[i + 1] = out_left, out_right
    return crossings, cur


class _Counter:
    def __init__(self, start=1):
        self.n = start - 1

    def __call__(self):
        self.n += 1
        return self.n


def _closure_with_top(b: BraidWord) -> tuple[PlanarDiagram, list[int | None]]:
    fresh = _Counter()
    top = [fresh() for _ in range(b.strands)]
    crossings, bottom = _braid_tangle(b.letters, top, fresh)
    rename = {bot: t for bot, t in zip(bottom, top) if bot != t}
    crossings = [Crossing(tuple(rename.get(s, s) for s in x.slots), x.sign) for x in crossings]
    used = {s for x in crossings for s in x.slots}
    free = sum(1 for t in top if t not in used)
    mapping: dict[int, int] = {}
    for x in crossings:
        for lab in x.slots:
            if lab not in mapping:
                mapping[lab] = len(mapping) + 1
    d = PlanarDiagram(
        tuple(Crossing(tuple(mapping[s] for s in x.slots), x.sign) for x in crossings),
        free,
    )
    return d, [mapping.get(t) for t in top]


def braid_closure(b: BraidWord) -> PlanarDiagram:
    """Closure of ``b``; crossing ``j`` of the result comes from letter ``j``."""
    return _closure_with_top(b)[0]


def braid_top_arcs(b: BraidWord) -> list[int | None]:
    """Arc labels of ``braid_closure(b)`` crossing the top of the braid, by position.

    ``None`` marks a position whose strand is a crossingless loop.
    """
    return _closure_with_top(b)[1]


# ---------------------------------------------------------------------------
# statistics


def seifert_circle_count(d: PlanarDiagram) -> int:
    # oriented smoothing: incoming under joins outgoing over and vice versa
    succ = {}
    for x in d.crossings:
        a, b, c, dd = x.slots
        if x.sign > 0:
            succ[a], succ[dd] = b, c
        else:
            succ[a], succ[b] = dd, c
    seen = set()
    cycles = 0
    for start in succ:
        if start in seen:
            continue
        cycles += 1
        a = start
        while a not in seen:
            seen.add(a)
            a = succ[a]
    return cycles + d.free_loops


def stats(d: PlanarDiagram) -> DiagramStats:
    return DiagramStats(
        writhe=d.writhe,
        seifert_circles=seifert_circle_count(d),
        crossing_count=len(d.crossings),
        connected=d.is_connected(),
    )


def seifert_genus_upper(d: PlanarDiagram) -> int | Fraction:
    """Genus of the surface from Seifert's algorithm, ``(c - O + 1) / 2``."""
    if not d.is_connected():
        raise DisconnectedDiagramError("genus bound needs a connected diagram")
    g = Fraction(len(d.crossings) - seifert_circle_count(d) + 1, 2)
    return int(g) if g.denominator == 1 else g


# ---------------------------------------------------------------------------
# faces and relabeling


def faces(d: PlanarDiagram) -> list[list[tuple[int, int, int, str]]]:
    """Faces of the diagram as cycles of ``(crossing, quadrant, arc, side)``.

    Quadrant ``q`` of a crossing lies between slots ``q`` and ``q+1``; ``side``
    says whether the face is to the left (``"L"``) or right (``"R"``) of ``arc``
    relative to its orientation.  The walk arrives at a crossing through slot
    ``k`` and leaves through slot ``k-1``.
    """
    seen = set()
    result = []
    for ci0 in range(len(d.crossings)):
        for k0 in range(4):
            if (ci0, k0) in seen:
                continue
            face = []
            ci, k = ci0, k0
            while (ci, k) not in seen:
                seen.add((ci, k))
                q = (k - 1) % 4
                x = d.crossings[ci]
                arc = x.slots[q]
                side = "L" if q in x.out_slots else "R"
                face.append((ci, q, arc, side))
                ci, k = d.other_end(ci, q)
            result.append(face)
    return result


def relabel(d: PlanarDiagram, mapping: dict[int, int]) -> PlanarDiagram:
    return PlanarDiagram(
        tuple(Crossing(tuple(mapping[s] for s in x.slots), x.sign) for x in d.crossings),
        d.free_loops,
    )


def _piece_key(d: PlanarDiagram, crossing_ids: list[int], start: int):
    labels: dict[int, int] = {}
    arcs = {s for ci in crossing_ids for s in d.crossings[ci].slots}
    nxt = start
    while True:
        a = nxt
        while a not in labels:
            labels[a] = len(labels) + 1
            a = d.next_arc(a)
        if len(labels) == len(arcs):
            break
        best = None
        for ci in crossing_ids:
            x = d.crossings[ci]
            if not any(s in labels for s in x.slots):
                continue
            key = tuple(labels.get(s, 10**9) for s in x.slots) + (x.sign,)
            for k, s in enumerate(x.slots):
                if s not in labels and (best is None or (key, k) < best[0]):
                    best = ((key, k), s)
        nxt = best[1]
    return tuple(sorted(tuple(labels[s] for s in d.crossings[ci].slots) + (d.crossings[ci].sign,)
                        for ci in crossing_ids))


def canonical_key(d: PlanarDiagram):
    """A relabeling-invariant key: equal keys iff the diagrams agree up to arc labels."""
    parent = list(range(len(d.crossings)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in range(1, d.arc_count + 1):
        parent[find(d.head(a)[0])] = find(d.tail(a)[0])
    groups: dict[int, list[int]] = {}
    for ci in range(len(d.crossings)):
        groups.setdefault(find(ci), []).append(ci)
    pieces = []
    for ids in groups.values():
        arcs = sorted({s for ci in ids for s in d.crossings[ci].slots})
        pieces.append(min(_piece_key(d, ids, a) for a in arcs))
    return (tuple(sorted(pieces)), d.free_loops)


def same_up_to_relabeling(d1: PlanarDiagram, d2: PlanarDiagram) -> bool:
    return canonical_key(d1) == canonical_key(d2)


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Mirror image: every crossing switched, orientations kept."""
    return PlanarDiagram(tuple(x.flipped() for x in d.crossings), d.free_loops)


def is_alternating_diagram(d: PlanarDiagram) -> bool:
    for comp in d.components():
        levels = []
        for a in comp:
            ci, k = d.head(a)
            levels.append(k % 2)  # 0 = under, 1 = over
        if any(levels[i] == levels[i - 1] for i in range(len(levels))):
            return False
    return True
