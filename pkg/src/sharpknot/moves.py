"""Positive sharp insertions, sharp flips, and greedy Reidemeister I/II simplification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .diagram import (
    BraidWord,
    Crossing,
    DiagramError,
    PlanarDiagram,
    _braid_tangle,
    braid_top_arcs,
    faces,
    seifert_circle_count,
)

__all__ = [
    "SharpSite",
    "MoveRecord",
    "MoveError",
    "sharp_tangle_word",
    "positive_sharp_braid",
    "positive_sharp_diagram",
    "braid_top_site",
    "sharp_flip",
    "flip_record",
    "simplify",
]


class MoveError(DiagramError):
    pass


def sharp_tangle_word(i: int = 1) -> tuple[int, ...]:
    """The 8-letter positive tangle (s_{i+1} s_i s_{i+2} s_{i+1})^2.

    Each half carries strands i, i+1 across strands i+2, i+3, so the word is a
    full twist of one coherent pair of strands around the other.
    """
    half = (i + 1, i, i + 2, i + 1)
    return half + half


@dataclass(frozen=True)
class SharpSite:
    kind: str  # "braid-insertion" or "diagram-tangle"
    index: int | None = None
    offset: int | None = None
    arcs: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        if self.kind == "braid-insertion":
            return {"kind": self.kind, "index": self.index, "offset": self.offset}
        return {"kind": self.kind, "arcs": list(self.arcs)}


@dataclass(frozen=True)
class MoveRecord:
    site: SharpSite
    writhe_delta: int
    crossings_added: int
    flipped_crossings: tuple[int, ...] = ()
    added_crossings: tuple[int, ...] = field(default=(), compare=False)

    def as_dict(self) -> dict:
        return {
            "site": self.site.as_dict(),
            "writhe_delta": self.writhe_delta,
            "crossings_added": self.crossings_added,
            "flipped_crossings": list(self.flipped_crossings),
        }


# ---------------------------------------------------------------------------
# positive sharp moves


def positive_sharp_braid(b: BraidWord, i: int, offset: int) -> tuple[BraidWord, MoveRecord]:
    if i < 1 or b.strands < i + 3:
        raise MoveError(f"sharp site at strand {i} needs {i + 3} strands, braid has {b.strands}")
    if not 0 <= offset <= len(b.letters):
        raise MoveError(f"offset {offset} outside 0..{len(b.letters)}")
    word = sharp_tangle_word(i)
    letters = b.letters[:offset] + word + b.letters[offset:]
    site = SharpSite("braid-insertion", index=i, offset=offset)
    rec = MoveRecord(site, writhe_delta=8, crossings_added=8,
                     added_crossings=tuple(range(offset, offset + 8)))
    return BraidWord(letters, b.strands), rec


def braid_top_site(b: BraidWord, i: int) -> SharpSite:
    """Diagram site of ``braid_closure(b)`` where strands i..i+3 cross the top of the braid."""
    if b.strands < i + 3:
        raise MoveError(f"sharp site at strand {i} needs {i + 3} strands")
    top = braid_top_arcs(b)[i - 1:i + 3]
    if any(a is None for a in top):
        raise MoveError("site runs through a crossingless strand")
    return SharpSite("diagram-tangle", arcs=tuple(top))


def _site_faces(d: PlanarDiagram, arcs: Sequence[int]) -> None:
    """Check that a line can cross ``arcs`` left to right with every arc pointing down it.

    Walking the line, arc j has the previous face on its right and the next
    face on its left; consecutive arcs must share that face.
    """
    side_face = {}
    for fi, face in enumerate(faces(d)):
        for _, _, arc, side in face:
            side_face[(arc, side)] = fi
    chain = [side_face[(arcs[0], "R")]]
    for j, a in enumerate(arcs):
        if side_face[(a, "R")] != chain[-1]:
            raise MoveError(
                f"arcs {arcs[j - 1]} and {a} do not bound a common face with coherent orientation"
            )
        chain.append(side_face[(a, "L")])
    if len(set(chain)) != len(chain):
        raise MoveError("site crosses the same face twice")


def positive_sharp_diagram(d: PlanarDiagram, site: SharpSite) -> tuple[PlanarDiagram, MoveRecord]:
    """Splice the positive sharp tangle across four parallel arcs.

    ``site.arcs`` lists the arcs in the order a transverse line meets them;
    each must cross the line from its left to its right side (the braid
    picture with strands running downward, read left to right).
    """
    if site.kind != "diagram-tangle" or site.arcs is None:
        raise MoveError("diagram move needs a diagram-tangle site")
    arcs = tuple(site.arcs)
    if len(arcs) != 4:
        raise MoveError("a sharp site has exactly four arcs")
    if len(set(arcs)) != 4:
        raise MoveError("sharp site arcs must be pairwise distinct")
    for a in arcs:
        if not 1 <= a <= d.arc_count:
            raise MoveError(f"no arc {a} in diagram")
    if not d.is_connected():
        # PD data does not say how split pieces sit relative to each other
        raise MoveError("diagram tangle sites need a connected diagram")
    _site_faces(d, arcs)

    counter = [d.arc_count]

    def fresh():
        counter[0] += 1
        return counter[0]

    new, bottom = _braid_tangle(sharp_tangle_word(1), list(arcs), fresh)
    # the downstream half of each site arc now starts at the tangle's bottom
    heads = {d.head(a): bottom[j] for j, a in enumerate(arcs)}
    old = []
    for ci, x in enumerate(d.crossings):
        slots = tuple(heads.get((ci, k), s) for k, s in enumerate(x.slots))
        old.append(Crossing(slots, x.sign))
    out = PlanarDiagram(tuple(old + new), d.free_loops)
    n0 = len(d.crossings)
    rec = MoveRecord(SharpSite("diagram-tangle", arcs=arcs), writhe_delta=8, crossings_added=8,
                     added_crossings=tuple(range(n0, n0 + 8)))
    return out, rec


# ---------------------------------------------------------------------------
# sharp flip


def _check_grid(d: PlanarDiagram, ids: Sequence[int]) -> None:
    """Four crossings must form a 2x2 grid: two strands passing over two strands."""
    if len(ids) != 4 or len(set(ids)) != 4:
        raise MoveError("a sharp flip needs four distinct crossings")
    n = len(d.crossings)
    if any(not 0 <= c < n for c in ids):
        raise MoveError("crossing id out of range")
    idset = set(ids)
    over_links, under_links = [], []
    for a in range(1, d.arc_count + 1):
        (c1, k1), (c2, k2) = d.tail(a), d.head(a)
        if c1 in idset and c2 in idset and c1 != c2:
            if k1 % 2 == 1 and k2 % 2 == 1:
                over_links.append((c1, c2))
            elif k1 % 2 == 0 and k2 % 2 == 0:
                under_links.append((c1, c2))
    if len(over_links) != 2 or len(under_links) != 2:
        raise MoveError("crossings do not form two strands over two strands")
    over_cover = [c for pair in over_links for c in pair]
    under_cover = [c for pair in under_links for c in pair]
    if sorted(over_cover) != sorted(ids) or sorted(under_cover) != sorted(ids):
        raise MoveError("crossings do not form two strands over two strands")
    # the four linking arcs must bound a single square face
    for face in faces(d):
        if len(face) == 4 and {ci for ci, _, _, _ in face} == idset:
            return
    raise MoveError("the four crossings do not surround a common face")


def sharp_flip(d: PlanarDiagram, ids: Sequence[int]) -> PlanarDiagram:
    """Switch the four crossings of a sharp pattern; crossing order is kept."""
    _check_grid(d, ids)
    idset = set(ids)
    return PlanarDiagram(
        tuple(x.flipped() if ci in idset else x for ci, x in enumerate(d.crossings)),
        d.free_loops,
    )


def flip_record(d: PlanarDiagram, ids: Sequence[int]) -> MoveRecord:
    delta = -2 * sum(d.crossings[c].sign for c in ids)
    return MoveRecord(SharpSite("diagram-tangle", arcs=()), writhe_delta=delta,
                      crossings_added=0, flipped_crossings=tuple(ids))


# ---------------------------------------------------------------------------
# simplification


def _rebuild(d: PlanarDiagram, drop: set[int], merges: list[tuple[int, int]]) -> PlanarDiagram:
    parent: dict[int, int] = {}

    def find(a):
        while parent.get(a, a) != a:
            a = parent[a]
        return a

    for u, v in merges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    kept = [Crossing(tuple(find(s) for s in x.slots), x.sign)
            for ci, x in enumerate(d.crossings) if ci not in drop]
    before = d.component_count
    if not kept:
        return PlanarDiagram((), before)
    mapping: dict[int, int] = {}
    for x in kept:
        for lab in x.slots:
            if lab not in mapping:
                mapping[lab] = len(mapping) + 1
    crossings = tuple(Crossing(tuple(mapping[s] for s in x.slots), x.sign) for x in kept)
    probe = PlanarDiagram(crossings, 0)
    return PlanarDiagram(crossings, before - probe.component_count)


def _find_r1(d: PlanarDiagram):
    for ci, x in enumerate(d.crossings):
        s = x.slots
        for k in range(4):
            if s[k] == s[(k + 1) % 4]:
                p, q = s[(k + 2) % 4], s[(k + 3) % 4]
                return {ci}, [(p, q)]
    return None


def _find_r2(d: PlanarDiagram):
    for face in faces(d):
        if len(face) != 2:
            continue
        (c1, _, a1, _), (c2, _, a2, _) = face
        if c1 == c2:
            continue
        (t1, k1), (h1, j1) = d.tail(a1), d.head(a1)
        (t2, k2), (h2, j2) = d.tail(a2), d.head(a2)
        over1 = k1 % 2 == 1 and j1 % 2 == 1
        under1 = k1 % 2 == 0 and j1 % 2 == 0
        over2 = k2 % 2 == 1 and j2 % 2 == 1
        under2 = k2 % 2 == 0 and j2 % 2 == 0
        if not ((over1 and under2) or (under1 and over2)):
            continue
        merges = []
        for a in (a1, a2):
            (tc, tk), (hc, hk) = d.tail(a), d.head(a)
            before = d.crossings[tc].slots[(tk + 2) % 4]
            after = d.crossings[hc].slots[(hk + 2) % 4]
            merges.append((before, after))
        return {c1, c2}, merges
    return None


def simplify(d: PlanarDiagram) -> PlanarDiagram:
    """Greedy Reidemeister I and II reductions until neither applies."""
    while d.crossings:
        hit = _find_r1(d) or _find_r2(d)
        if hit is None:
            break
        drop, merges = hit
        d = _rebuild(d, drop, merges)
    return d
