"""Knot signature: Gordon-Litherland on a checkerboard surface, plus a Seifert-matrix oracle.

Signatures are reported with the sign flipped relative to the usual convention,
so the positive (right-handed) trefoil has signature +2.  ``SignatureValue.classical``
gives the usual value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .diagram import (
    BraidWord,
    DiagramError,
    DisconnectedDiagramError,
    PlanarDiagram,
    faces,
)

__all__ = [
    "GoeritzData",
    "SeifertMatrix",
    "SignatureValue",
    "goeritz",
    "signature_goeritz",
    "seifert_matrix",
    "signature_seifert_oracle",
    "sigma_upper_after_sharps",
    "matrix_signature",
    "matrix_det",
]


# ---------------------------------------------------------------------------
# exact integer linear algebra


def matrix_signature(m) -> int:
    """Signature of a symmetric integer matrix by exact congruence diagonalization."""
    a = [[Fraction(int(v)) for v in row] for row in m]
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    sig = 0
    size = n
    while size:
        p = next((i for i in range(size) if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in range(size) for j in range(i + 1, size) if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j; new diagonal entry 2*a[i][j] != 0
            for k in range(size):
                a[i][k] += a[j][k]
            for k in range(size):
                a[k][i] += a[k][j]
            p = i
        piv = a[p][p]
        sig += 1 if piv > 0 else -1
        for i in range(size):
            if i == p or a[i][p] == 0:
                continue
            f = a[i][p] / piv
            for k in range(size):
                a[i][k] -= f * a[p][k]
        # row p is now the only one touching column p; drop both
        a = [[a[i][k] for k in range(size) if k != p] for i in range(size) if i != p]
        size -= 1
    return sig


def matrix_det(m) -> int:
    """Exact determinant of an integer matrix (Bareiss)."""
    a = [[int(v) for v in row] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Goeritz route


@dataclass(frozen=True)
class SignatureValue:
    sigma: int

    @property
    def classical(self) -> int:
        return -self.sigma

    def as_dict(self) -> dict:
        return {"sigma_paper": self.sigma, "sigma_classical": self.classical}


@dataclass(frozen=True)
class GoeritzData:
    """Reduced Goeritz matrix of the white regions and the type-II correction."""

    matrix: tuple[tuple[int, ...], ...]
    correction: int
    shaded: frozenset[int]

    def det(self) -> int:
        return matrix_det(self.matrix)

    def signature(self) -> int:
        return matrix_signature(self.matrix)


def _require_knot(d: PlanarDiagram):
    if not d.is_connected():
        raise DisconnectedDiagramError("signature needs a connected diagram")
    if not d.is_knot():
        raise DiagramError("signature is only defined here for knots")


def _checkerboard(d: PlanarDiagram, fs) -> list[int]:
    """Two-colour the faces; face 0 gets colour 0."""
    side_face = {}
    for fi, face in enumerate(fs):
        for _, _, arc, side in face:
            side_face[(arc, side)] = fi
    adj = [set() for _ in fs]
    for a in range(1, d.arc_count + 1):
        f, g = side_face[(a, "L")], side_face[(a, "R")]
        adj[f].add(g)
        adj[g].add(f)
    colour = [-1] * len(fs)
    colour[0] = 0
    stack = [0]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if colour[g] == -1:
                colour[g] = 1 - colour[f]
                stack.append(g)
            elif colour[g] == colour[f]:
                raise DiagramError("faces admit no checkerboard colouring")
    return colour


def goeritz(d: PlanarDiagram, shaded_colour: int | None = None) -> GoeritzData:
    """Goeritz matrix for one checkerboard class.

    Quadrants 1 and 3 of a crossing (between slots b,c and d,a) are its
    A-regions.  A crossing whose shaded quadrants are the A-regions has
    incidence +1, otherwise -1.  It is of type II when the oriented smoothing
    merges the two shaded quadrants.

    By default the shaded class is the one not containing the face to the
    left of arc 1.
    """
    if not d.crossings:
        return GoeritzData((), 0, frozenset())
    fs = faces(d)
    colour = _checkerboard(d, fs)
    if shaded_colour is None:
        left_of_1 = next(fi for fi, f in enumerate(fs) if any(a == 1 and s == "L" for _, _, a, s in f))
        shaded_colour = 1 - colour[left_of_1]
    quad_face = {}
    for fi, face in enumerate(fs):
        for ci, q, _, _ in face:
            quad_face[(ci, q)] = fi
    white = sorted(fi for fi in range(len(fs)) if colour[fi] != shaded_colour)
    index = {fi: i for i, fi in enumerate(white)}
    n = len(white)
    g = [[0] * n for _ in range(n)]
    correction = 0
    for ci, x in enumerate(d.crossings):
        shaded_a_regions = colour[quad_face[(ci, 1)]] == shaded_colour
        eta = 1 if shaded_a_regions else -1
        # oriented smoothing merges quadrants 1,3 at a positive crossing, 0,2 at a negative one
        merged_a_regions = x.sign > 0
        if shaded_a_regions == merged_a_regions:
            correction += eta
        w_quads = (0, 2) if shaded_a_regions else (1, 3)
        u, v = (index[quad_face[(ci, q)]] for q in w_quads)
        if u != v:
            g[u][v] -= eta
            g[v][u] -= eta
            g[u][u] += eta
            g[v][v] += eta
    reduced = tuple(tuple(row[1:]) for row in g[1:])
    return GoeritzData(reduced, correction, frozenset(fi for fi in range(len(fs)) if colour[fi] == shaded_colour))


def signature_goeritz(d: PlanarDiagram, shaded_colour: int | None = None) -> SignatureValue:
    _require_knot(d)
    if not d.crossings:
        return SignatureValue(0)
    gd = goeritz(d, shaded_colour)
    classical = gd.signature() - gd.correction
    return SignatureValue(-classical)


# ---------------------------------------------------------------------------
# Seifert-matrix oracle for braid closures
#
# Geometric model: the closed braid winds around the z-axis.  Strand position p
# is the circle of radius R+p at height p, bounding a horizontal disk; letter j
# becomes a half-twisted band at angle theta_j joining the edges of disks
# |x| and |x|+1.  Basis curves run between consecutive bands of one column.
# Linking numbers are counted from crossings of a generic planar projection.

_R = 10.0
_HALF_WIDTH = 0.15  # band half-width (arc length)
_TWIST_Z = 0.12
_PUSH = 0.02
_BAND_STEPS = 16
_ARC_STEP = 0.05


@dataclass(frozen=True)
class SeifertMatrix:
    matrix: tuple[tuple[int, ...], ...]
    genus: int | Fraction

    def symmetrized(self) -> list[list[int]]:
        v = self.matrix
        return [[v[i][j] + v[j][i] for j in range(len(v))] for i in range(len(v))]


def _cyl(r, theta, z):
    return np.array([r * math.cos(theta), r * math.sin(theta), z])


class _Band:
    def __init__(self, column: int, theta: float, sign: int):
        self.column = column  # 1-based, joins disks column and column+1
        self.theta = theta
        self.tau = -sign  # +1 puts the outgoing edge on top, which gives a negative crossing
        self.e_r = np.array([math.cos(theta), math.sin(theta), 0.0])
        self.e_t = np.array([-math.sin(theta), math.cos(theta), 0.0])
        self.e_z = np.array([0.0, 0.0, 1.0])
        self.base = _cyl(_R + column, theta, float(column))

    def point(self, s: float, u: float) -> np.ndarray:
        centre = self.base + s * (self.e_r + self.e_z)
        d = _HALF_WIDTH * math.cos(math.pi * s) * self.e_t + self.tau * _TWIST_Z * math.sin(math.pi * s) * self.e_z
        return centre + u * d

    def normal(self, s: float) -> np.ndarray:
        d = math.cos(math.pi * s) * self.e_t + self.tau * (_TWIST_Z / _HALF_WIDTH) * math.sin(math.pi * s) * self.e_z
        n = np.cross(self.e_r + self.e_z, d)
        return n / np.linalg.norm(n)


def _arc(r, t0, t1, z):
    steps = max(2, int(abs(t1 - t0) * r / (_ARC_STEP * _R)) + 2)
    return [_cyl(r, t0 + (t1 - t0) * k / steps, z) for k in range(steps + 1)]


def _basis_curve(band_a: _Band, band_b: _Band, u: float, rho: float, push: float):
    """Closed polyline (and its pushoff if ``push``) through bands a then b, ccw on the lower disk."""
    col = band_a.column
    r_lo, r_hi = _R + col, _R + col + 1
    z_lo, z_hi = float(col), float(col + 1)
    ta, tb = band_a.theta, band_b.theta
    du = u * _HALF_WIDTH / r_lo
    du_hi = u * _HALF_WIDTH / r_hi
    up = np.array([0.0, 0.0, push])
    pts = []
    # lower disk: radial in, arc ccw, radial out
    lower = [_cyl(r_lo, ta + du, z_lo)] + _arc(r_lo - rho, ta + du, tb + du, z_lo) + [_cyl(r_lo, tb + du, z_lo)]
    pts += [p + up for p in lower]
    # up band b along track u
    for k in range(_BAND_STEPS + 1):
        s = k / _BAND_STEPS
        pts.append(band_b.point(s, u) + push * band_b.normal(s))
    # upper disk: back from tb to ta (cw) at radius r_hi - rho
    upper = [_cyl(r_hi, tb - du_hi, z_hi)] + _arc(r_hi - rho, tb - du_hi, ta - du_hi, z_hi) + [_cyl(r_hi, ta - du_hi, z_hi)]
    pts += [p + up for p in upper]
    # down band a
    for k in range(_BAND_STEPS, -1, -1):
        s = k / _BAND_STEPS
        pts.append(band_a.point(s, u) + push * band_a.normal(s))
    return np.array(pts)


def _linking_number(c1: np.ndarray, c2: np.ndarray, rot: np.ndarray) -> int:
    """Linking number of closed polylines: signed crossings where c1 passes over c2."""
    p = c1 @ rot.T
    q = c2 @ rot.T
    a0, a1 = p, np.roll(p, -1, axis=0)
    b0, b1 = q, np.roll(q, -1, axis=0)
    da = (a1 - a0)[:, None, :2]
    db = (b1 - b0)[None, :, :2]
    w = (b0[None, :, :2] - a0[:, None, :2])
    denom = da[..., 0] * db[..., 1] - da[..., 1] * db[..., 0]
    with np.errstate(divide="ignore", invalid="ignore"):
        s = (w[..., 0] * db[..., 1] - w[..., 1] * db[..., 0]) / denom
        t = (w[..., 0] * da[..., 1] - w[..., 1] * da[..., 0]) / denom
    hit = (denom != 0) & (s >= 0) & (s < 1) & (t >= 0) & (t < 1)
    ii, jj = np.nonzero(hit)
    total = 0
    for i, j in zip(ii, jj):
        za = a0[i, 2] + s[i, j] * (a1[i, 2] - a0[i, 2])
        zb = b0[j, 2] + t[i, j] * (b1[j, 2] - b0[j, 2])
        if za > zb:
            total += 1 if denom[i, j] > 0 else -1
    return total


def _generic_rotation() -> np.ndarray:
    ax, ay = 0.31, 0.17
    rx = np.array([[1, 0, 0], [0, math.cos(ax), -math.sin(ax)], [0, math.sin(ax), math.cos(ax)]])
    ry = np.array([[math.cos(ay), 0, math.sin(ay)], [0, 1, 0], [-math.sin(ay), 0, math.cos(ay)]])
    return ry @ rx


def seifert_matrix(b: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the braid-closure surface, from linking numbers in 3-space."""
    if not b.is_knot():
        raise DiagramError("Seifert matrix oracle needs a braid whose closure is a knot")
    n = len(b.letters)
    bands = [
        _Band(abs(x), 2 * math.pi * (j + 0.5) / max(n, 1), 1 if x > 0 else -1)
        for j, x in enumerate(b.letters)
    ]
    gens = []
    for col in range(1, b.strands):
        column_bands = [band for band in bands if band.column == col]
        for a, c in zip(column_bands, column_bands[1:]):
            gens.append((a, c))
    size = len(gens)
    tracks = [-0.7 + 1.4 * (i + 0.5) / size for i in range(size)] if size else []
    radii = [0.15 + 0.5 * (i + 0.5) / size for i in range(size)] if size else []
    rot = _generic_rotation()
    rng = np.random.default_rng(12345)
    curves, pushed = [], []
    for i, (a, c) in enumerate(gens):
        base = _basis_curve(a, c, tracks[i], radii[i], 0.0)
        off = _basis_curve(a, c, tracks[i], radii[i], _PUSH)
        curves.append(base + rng.normal(scale=1e-7, size=base.shape))
        pushed.append(off + rng.normal(scale=1e-7, size=off.shape))
    v = [[_linking_number(curves[i], pushed[j], rot) for j in range(size)] for i in range(size)]
    genus = Fraction(size, 2)
    return SeifertMatrix(tuple(tuple(row) for row in v), int(genus) if genus.denominator == 1 else genus)


def signature_seifert_oracle(b: BraidWord) -> SignatureValue:
    sm = seifert_matrix(b)
    return SignatureValue(-matrix_signature(sm.symmetrized()))


def sigma_upper_after_sharps(sigma_or_genus_bound: int, n: int) -> int:
    """Upper bound for the signature after ``n`` sharp operations.

    Pass the current signature, or twice a genus bound; each sharp operation
    raises the signature by at most 6.
    """
    if n < 0:
        raise ValueError("move count must be nonnegative")
    return sigma_or_genus_bound + 6 * n
