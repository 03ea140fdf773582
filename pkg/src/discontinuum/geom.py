"""Exact-ish planar geometry for convex pieces, strips, and trapezoid frames.

Conventions:
  * A Line is {p : n . p = c} with unit normal n.
  * A halfplane is {p : n . p <= c}.
  * ConvexPolygon vertices are CCW and strictly convex (collinear vertices
    are dropped on construction).
  * A PolygonComplex is a list of convex pieces whose union is the set; the
    pieces may overlap in storage, normalization makes them disjoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import DegeneracyError, ParameterError
from .tolerances import SNAP, TAU_AREA, TAU_GEOM

Point = tuple[float, float]


class Side(Enum):
    """Side of an oriented line: sign of n . p - c within tolerance."""

    NEG = -1
    ON = 0
    POS = 1


def _snap_key(p: Sequence[float], snap: float = SNAP) -> tuple[int, int]:
    return (int(round(p[0] / snap)), int(round(p[1] / snap)))


def _dedup_points(points: Iterable[Sequence[float]], snap: float = SNAP) -> list[Point]:
    seen: set[tuple[int, int]] = set()
    out: list[Point] = []
    for p in points:
        k = _snap_key(p, snap)
        if k not in seen:
            seen.add(k)
            out.append((float(p[0]), float(p[1])))
    return out


@dataclass(frozen=True)
class Line:
    """Oriented line {p : normal . p = offset}, unit normal."""

    normal: Point
    offset: float

    def __post_init__(self):
        n = math.hypot(*self.normal)
        if abs(n - 1.0) > 1e-12:
            raise ParameterError(f"line normal must be unit length, got |n|={n!r}")

    @staticmethod
    def through(p1: Sequence[float], p2: Sequence[float]) -> "Line":
        dx, dy = p2[0] - p1[0], p2[1] - p1[1]
        length = math.hypot(dx, dy)
        if length <= TAU_GEOM:
            raise DegeneracyError("cannot build a line through coincident points")
        # Normal is the +90 degree rotation of the direction.
        n = (-dy / length, dx / length)
        return Line(n, n[0] * p1[0] + n[1] * p1[1])

    def signed_dist(self, p: Sequence[float]) -> float:
        return self.normal[0] * p[0] + self.normal[1] * p[1] - self.offset

    def side_of(self, p: Sequence[float], tol: float = TAU_GEOM) -> Side:
        d = self.signed_dist(p)
        if d > tol:
            return Side.POS
        if d < -tol:
            return Side.NEG
        return Side.ON

    def direction(self) -> Point:
        return (self.normal[1], -self.normal[0])

    def point_at(self, t: float = 0.0) -> Point:
        """A point on the line: foot of the origin plus t along the direction."""
        nx, ny = self.normal
        dx, dy = self.direction()
        return (nx * self.offset + t * dx, ny * self.offset + t * dy)

    def as_dict(self) -> dict:
        return {"normal": [self.normal[0], self.normal[1]], "offset": self.offset}

    @staticmethod
    def from_dict(d: dict) -> "Line":
        return Line((d["normal"][0], d["normal"][1]), d["offset"])


def line_intersection(l1: Line, l2: Line, tol: float = TAU_GEOM) -> Point | None:
    """Intersection point of two lines, or None if parallel within tol."""
    a1, b1 = l1.normal
    a2, b2 = l2.normal
    det = a1 * b2 - a2 * b1
    if abs(det) <= tol:
        return None
    x = (l1.offset * b2 - l2.offset * b1) / det
    y = (a1 * l2.offset - a2 * l1.offset) / det
    return (x, y)


@dataclass(frozen=True)
class Strip:
    """Closed strip of points within halfwidth of a line."""

    line: Line
    halfwidth: float

    def __post_init__(self):
        if not (self.halfwidth > 0.0):
            raise ParameterError("strip halfwidth must be positive")

    def contains(self, p: Sequence[float], tol: float = TAU_GEOM) -> bool:
        return abs(self.line.signed_dist(p)) <= self.halfwidth + tol

    def boundary_lines(self) -> tuple[Line, Line]:
        n, c = self.line.normal, self.line.offset
        return (Line(n, c - self.halfwidth), Line(n, c + self.halfwidth))

    def as_dict(self) -> dict:
        return {"line": self.line.as_dict(), "halfwidth": self.halfwidth}

    @staticmethod
    def from_dict(d: dict) -> "Strip":
        return Strip(Line.from_dict(d["line"]), d["halfwidth"])


def strip_of(p1: Sequence[float], p2: Sequence[float], halfwidth: float) -> Strip:
    """Strip of given halfwidth around the line through two points."""
    return Strip(Line.through(p1, p2), halfwidth)


def _shoelace(vertices: Sequence[Sequence[float]]) -> float:
    s = 0.0
    n = len(vertices)
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return 0.5 * s


def convex_hull(points: Iterable[Sequence[float]]) -> list[Point]:
    """Monotone-chain convex hull (CCW, collinear points dropped)."""
    pts = sorted(set((float(p[0]), float(p[1])) for p in points))
    if len(pts) < 3:
        return list(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


class ConvexPolygon:
    """Immutable convex polygon, CCW, non-degenerate (area > TAU_AREA)."""

    __slots__ = ("vertices", "_area")

    def __init__(self, vertices: Sequence[Sequence[float]]):
        verts = [(float(p[0]), float(p[1])) for p in vertices]
        if len(verts) < 3:
            raise DegeneracyError("polygon needs at least 3 vertices")
        if _shoelace(verts) < 0:
            verts.reverse()
        cleaned = self._drop_collinear(verts)
        if len(cleaned) < 3:
            raise DegeneracyError("polygon degenerates to a segment")
        area = _shoelace(cleaned)
        if area <= TAU_AREA:
            raise DegeneracyError(f"polygon area {area!r} below sliver floor")
        self._check_convex(cleaned)
        object.__setattr__(self, "vertices", tuple(cleaned))
        object.__setattr__(self, "_area", area)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("ConvexPolygon is immutable")

    @staticmethod
    def _drop_collinear(verts: list[Point]) -> list[Point]:
        # Remove consecutive duplicates first.
        out: list[Point] = []
        for p in verts:
            if not out or math.hypot(p[0] - out[-1][0], p[1] - out[-1][1]) > 0.0:
                out.append(p)
        if len(out) > 1 and out[0] == out[-1]:
            out.pop()
        # Drop collinear/reflex vertices (they break strict-convexity checks
        # and halfplane extraction); repeat until stable.
        changed = True
        while changed and len(out) >= 3:
            changed = False
            m = len(out)
            kept = []
            for i in range(m):
                a, b, c = out[i - 1], out[i], out[(i + 1) % m]
                cr = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
                if cr <= 0.0:
                    changed = True
                    continue
                kept.append(b)
            out = kept
        return out

    @staticmethod
    def _check_convex(verts: list[Point]):
        n = len(verts)
        for i in range(n):
            a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
            cr = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
            if cr <= 0.0:
                raise DegeneracyError("polygon is not strictly convex and CCW")

    # -- queries ---------------------------------------------------------

    @property
    def area(self) -> float:
        return self._area

    def centroid(self) -> Point:
        sx = sy = 0.0
        area6 = 0.0
        n = len(self.vertices)
        for i in range(n):
            x1, y1 = self.vertices[i]
            x2, y2 = self.vertices[(i + 1) % n]
            w = x1 * y2 - x2 * y1
            area6 += w
            sx += (x1 + x2) * w
            sy += (y1 + y2) * w
        area6 *= 3.0
        return (sx / area6, sy / area6)

    def bbox(self) -> tuple[float, float, float, float]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def contains_point(self, p: Sequence[float], tol: float = TAU_GEOM) -> bool:
        n = len(self.vertices)
        for i in range(n):
            a = self.vertices[i]
            b = self.vertices[(i + 1) % n]
            ex, ey = b[0] - a[0], b[1] - a[1]
            elen = math.hypot(ex, ey)
            cr = ex * (p[1] - a[1]) - ey * (p[0] - a[0])
            if cr < -tol * elen:
                return False
        return True

    def halfplanes(self) -> list[tuple[Point, float]]:
        """Outward halfplanes (n, c): polygon = intersection of {n.p <= c}."""
        out = []
        n = len(self.vertices)
        for i in range(n):
            a = self.vertices[i]
            b = self.vertices[(i + 1) % n]
            ex, ey = b[0] - a[0], b[1] - a[1]
            elen = math.hypot(ex, ey)
            nrm = (ey / elen, -ex / elen)
            out.append((nrm, nrm[0] * a[0] + nrm[1] * a[1]))
        return out

    def edges(self) -> list[tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def clip_halfplane(self, normal: Sequence[float], c: float) -> "ConvexPolygon | None":
        """Intersection with {n . p <= c}; None if it degenerates."""
        verts = _clip_points(self.vertices, (normal[0], normal[1]), c)
        if len(verts) < 3 or abs(_shoelace(verts)) <= TAU_AREA:
            return None
        try:
            return ConvexPolygon(verts)
        except DegeneracyError:
            return None

    def translate(self, dx: float, dy: float) -> "ConvexPolygon":
        return ConvexPolygon([(x + dx, y + dy) for x, y in self.vertices])

    def as_dict(self) -> dict:
        return {"vertices": [[x, y] for x, y in self.vertices]}

    @staticmethod
    def from_dict(d: dict) -> "ConvexPolygon":
        return ConvexPolygon(d["vertices"])

    def __repr__(self):
        return f"ConvexPolygon({len(self.vertices)} vertices, area={self._area:.6g})"


def _clip_points(verts: Sequence[Point], n: Point, c: float) -> list[Point]:
    """Sutherland-Hodgman clip of a convex CCW loop by {n.p <= c}."""
    out: list[Point] = []
    m = len(verts)
    for i in range(m):
        cur, nxt = verts[i], verts[(i + 1) % m]
        d_cur = n[0] * cur[0] + n[1] * cur[1] - c
        d_nxt = n[0] * nxt[0] + n[1] * nxt[1] - c
        if d_cur <= 0.0:
            out.append(cur)
            if d_nxt > 0.0:
                t = d_cur / (d_cur - d_nxt)
                out.append((cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])))
        elif d_nxt < 0.0:
            t = d_cur / (d_cur - d_nxt)
            out.append((cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])))
    return _dedup_points(out)


def _clip_convex(poly: ConvexPolygon, other: ConvexPolygon) -> ConvexPolygon | None:
    """poly intersect other (both convex), or None if degenerate."""
    verts: Sequence[Point] = poly.vertices
    for n, c in other.halfplanes():
        verts = _clip_points(verts, n, c)
        if len(verts) < 3:
            return None
    if abs(_shoelace(list(verts))) <= TAU_AREA:
        return None
    try:
        return ConvexPolygon(verts)
    except DegeneracyError:
        return None


def _subtract_convex(poly: ConvexPolygon, hole: ConvexPolygon) -> list[ConvexPolygon]:
    """poly minus hole as a list of convex parts (halfplane peeling)."""
    parts: list[ConvexPolygon] = []
    rem: Sequence[Point] | None = poly.vertices
    for n, c in hole.halfplanes():
        if rem is None or len(rem) < 3:
            return parts
        outside = _clip_points(rem, (-n[0], -n[1]), -c)
        if len(outside) >= 3 and abs(_shoelace(outside)) > TAU_AREA:
            try:
                parts.append(ConvexPolygon(outside))
            except DegeneracyError:
                pass
        inside = _clip_points(rem, n, c)
        rem = inside if len(inside) >= 3 else None
    # Whatever remains lies inside the hole and is discarded.
    return parts


def segment_distance(a1: Point, a2: Point, b1: Point, b2: Point) -> float:
    """Euclidean distance between two closed segments."""

    def seg_point(p, q, r):
        # distance from point r to segment [p, q]
        vx, vy = q[0] - p[0], q[1] - p[1]
        wx, wy = r[0] - p[0], r[1] - p[1]
        vv = vx * vx + vy * vy
        t = 0.0 if vv == 0.0 else max(0.0, min(1.0, (wx * vx + wy * vy) / vv))
        cx, cy = p[0] + t * vx, p[1] + t * vy
        return math.hypot(r[0] - cx, r[1] - cy)

    def ccw(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    d1, d2 = ccw(a1, a2, b1), ccw(a1, a2, b2)
    d3, d4 = ccw(b1, b2, a1), ccw(b1, b2, a2)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)):
        return 0.0
    return min(
        seg_point(a1, a2, b1),
        seg_point(a1, a2, b2),
        seg_point(b1, b2, a1),
        seg_point(b1, b2, a2),
    )


def polygon_distance(p: ConvexPolygon, q: ConvexPolygon) -> float:
    """Distance between two convex polygons (0 if they touch or overlap)."""
    if any(q.contains_point(v, 0.0) for v in p.vertices):
        return 0.0
    if any(p.contains_point(v, 0.0) for v in q.vertices):
        return 0.0
    best = math.inf
    for a1, a2 in p.edges():
        for b1, b2 in q.edges():
            d = segment_distance(a1, a2, b1, b2)
            if d < best:
                best = d
                if best == 0.0:
                    return 0.0
    return best


class PolygonComplex:
    """Finite union of convex polygons; storage pieces may overlap."""

    __slots__ = ("pieces",)

    def __init__(self, pieces: Sequence[ConvexPolygon]):
        object.__setattr__(self, "pieces", tuple(pieces))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("PolygonComplex is immutable")

    def __len__(self):
        return len(self.pieces)

    def is_empty(self) -> bool:
        return len(self.pieces) == 0

    def normalized(self) -> "PolygonComplex":
        """Equivalent complex with pairwise interior-disjoint pieces."""
        out: list[ConvexPolygon] = []
        for piece in self.pieces:
            rem = [piece]
            for prev in out:
                nxt: list[ConvexPolygon] = []
                for r in rem:
                    nxt.extend(_subtract_convex(r, prev))
                rem = nxt
                if not rem:
                    break
            out.extend(rem)
        return PolygonComplex(out)

    def area(self) -> float:
        return sum(p.area for p in self.normalized().pieces)

    def bbox(self) -> tuple[float, float, float, float] | None:
        if not self.pieces:
            return None
        boxes = [p.bbox() for p in self.pieces]
        return (
            min(b[0] for b in boxes),
            min(b[1] for b in boxes),
            max(b[2] for b in boxes),
            max(b[3] for b in boxes),
        )

    def contains_point(self, p: Sequence[float], tol: float = TAU_GEOM) -> bool:
        return any(piece.contains_point(p, tol) for piece in self.pieces)

    def as_dict(self) -> dict:
        return {"polygons": [[[x, y] for x, y in p.vertices] for p in self.pieces]}

    @staticmethod
    def from_dict(d: dict) -> "PolygonComplex":
        return PolygonComplex([ConvexPolygon(v) for v in d["polygons"]])

    def __repr__(self):
        return f"PolygonComplex({len(self.pieces)} pieces)"


def point_in_complex(c: PolygonComplex, p: Sequence[float], tol: float = TAU_GEOM) -> bool:
    return c.contains_point(p, tol)


def complex_intersect(c: PolygonComplex, strip: Strip) -> PolygonComplex:
    """Clip a complex to a strip (two halfplane cuts per piece)."""
    n = strip.line.normal
    lo = strip.line.offset - strip.halfwidth
    hi = strip.line.offset + strip.halfwidth
    out: list[ConvexPolygon] = []
    for piece in c.normalized().pieces:
        clipped = piece.clip_halfplane(n, hi)
        if clipped is None:
            continue
        clipped = clipped.clip_halfplane((-n[0], -n[1]), -lo)
        if clipped is not None:
            out.append(clipped)
    return PolygonComplex(out)


def complex_clip_convex(c: PolygonComplex, window: ConvexPolygon) -> PolygonComplex:
    """Clip a complex to a convex window."""
    out = []
    for piece in c.normalized().pieces:
        r = _clip_convex(piece, window)
        if r is not None:
            out.append(r)
    return PolygonComplex(out)


def complex_subtract(a: PolygonComplex, b: PolygonComplex) -> PolygonComplex:
    """Set difference a minus b as a complex of convex parts."""
    rem = list(a.normalized().pieces)
    for hole in b.pieces:
        nxt: list[ConvexPolygon] = []
        for piece in rem:
            nxt.extend(_subtract_convex(piece, hole))
        rem = nxt
        if not rem:
            break
    return PolygonComplex(rem)


def components(c: PolygonComplex, tol: float = TAU_GEOM) -> list[PolygonComplex]:
    """Connected components of the closed set: pieces within tol touch.

    Closed-contact semantics: two pieces belong to one component when their
    distance is <= tol, including single-point contact. Deterministic order:
    components sorted by their smallest piece index.
    """
    pieces = list(c.normalized().pieces)
    n = len(pieces)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    boxes = [p.bbox() for p in pieces]
    for i in range(n):
        for j in range(i + 1, n):
            bi, bj = boxes[i], boxes[j]
            if bi[0] > bj[2] + tol or bj[0] > bi[2] + tol:
                continue
            if bi[1] > bj[3] + tol or bj[1] > bi[3] + tol:
                continue
            if polygon_distance(pieces[i], pieces[j]) <= tol:
                union(i, j)

    groups: dict[int, list[ConvexPolygon]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(pieces[i])
    return [PolygonComplex(groups[r]) for r in sorted(groups)]


@dataclass(frozen=True)
class Similarity:
    """Orientation-preserving similarity p -> M p + t with M = ratio * rotation."""

    m: tuple[tuple[float, float], tuple[float, float]]
    t: Point

    @property
    def ratio(self) -> float:
        (a, b), (c, d) = self.m
        det = a * d - b * c
        if det <= 0:
            raise ParameterError("similarity must preserve orientation")
        return math.sqrt(det)

    def apply(self, p: Sequence[float]) -> Point:
        (a, b), (c, d) = self.m
        return (a * p[0] + b * p[1] + self.t[0], c * p[0] + d * p[1] + self.t[1])

    def apply_many(self, pts: np.ndarray) -> np.ndarray:
        m = np.asarray(self.m)
        return pts @ m.T + np.asarray(self.t)

    def apply_polygon(self, poly: ConvexPolygon) -> ConvexPolygon:
        return ConvexPolygon([self.apply(v) for v in poly.vertices])

    def inverse(self) -> "Similarity":
        (a, b), (c, d) = self.m
        det = a * d - b * c
        if det <= 0:
            raise ParameterError("similarity must preserve orientation")
        ia, ib, ic, id_ = d / det, -b / det, -c / det, a / det
        tx = -(ia * self.t[0] + ib * self.t[1])
        ty = -(ic * self.t[0] + id_ * self.t[1])
        return Similarity(((ia, ib), (ic, id_)), (tx, ty))

    def compose(self, inner: "Similarity") -> "Similarity":
        """self o inner."""
        (a, b), (c, d) = self.m
        (e, f), (g, h) = inner.m
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        t = self.apply(inner.t)
        return Similarity(m, t)

    def as_dict(self) -> dict:
        return {"m": [[self.m[0][0], self.m[0][1]], [self.m[1][0], self.m[1][1]]],
                "t": [self.t[0], self.t[1]]}

    @staticmethod
    def from_dict(d: dict) -> "Similarity":
        m = ((d["m"][0][0], d["m"][0][1]), (d["m"][1][0], d["m"][1][1]))
        return Similarity(m, (d["t"][0], d["t"][1]))

    @staticmethod
    def from_rotation(angle: float, scale: float = 1.0, t: Point = (0.0, 0.0)) -> "Similarity":
        ca, sa = math.cos(angle) * scale, math.sin(angle) * scale
        return Similarity(((ca, -sa), (sa, ca)), t)


@dataclass(frozen=True)
class TrapezoidFrame:
    """Standard frame of one strip component.

    to_std maps the strip onto (-1,1) x R (the line to the y-axis) and the
    component onto co{(-1,a),(-1,b),(1,c),(1,d)} with a<b, c<d. rho is the
    expansion ratio (1/halfwidth). pad_std is the collar padding in standard
    units: the padded trapezoid extends the side edges by pad_std beyond each
    chord.
    """

    to_std: Similarity
    a: float
    b: float
    c: float
    d: float
    rho: float
    pad_std: float

    def to_orig(self) -> Similarity:
        return self.to_std.inverse()

    def polygon_std(self) -> ConvexPolygon:
        return ConvexPolygon([(-1.0, self.a), (1.0, self.c), (1.0, self.d), (-1.0, self.b)])

    def padded_polygon_std(self) -> ConvexPolygon:
        e = self.pad_std
        return ConvexPolygon(
            [(-1.0, self.a - e), (1.0, self.c - e), (1.0, self.d + e), (-1.0, self.b + e)]
        )

    def bottom_chord_std(self) -> tuple[Point, Point]:
        return ((-1.0, self.a), (1.0, self.c))

    def top_chord_std(self) -> tuple[Point, Point]:
        return ((-1.0, self.b), (1.0, self.d))

    def collar_quads_std(self) -> tuple[ConvexPolygon, ConvexPolygon]:
        """(bottom, top) collar quads: padded trapezoid minus trapezoid."""
        e = self.pad_std
        bottom = ConvexPolygon(
            [(-1.0, self.a - e), (1.0, self.c - e), (1.0, self.c), (-1.0, self.a)]
        )
        top = ConvexPolygon(
            [(-1.0, self.b), (1.0, self.d), (1.0, self.d + e), (-1.0, self.b + e)]
        )
        return bottom, top

    def anchor_span(self) -> tuple[float, float]:
        """(a0, an): y-levels where the chords cross the axis x = 0."""
        return (0.5 * (self.a + self.c), 0.5 * (self.b + self.d))

    def bottom_chord_line_std(self) -> Line:
        return Line.through((-1.0, self.a), (1.0, self.c))

    def top_chord_line_std(self) -> Line:
        return Line.through((-1.0, self.b), (1.0, self.d))

    def as_dict(self) -> dict:
        return {
            "to_std": self.to_std.as_dict(),
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "rho": self.rho,
            "pad_std": self.pad_std,
        }

    @staticmethod
    def from_dict(d: dict) -> "TrapezoidFrame":
        return TrapezoidFrame(
            Similarity.from_dict(d["to_std"]), d["a"], d["b"], d["c"], d["d"],
            d["rho"], d["pad_std"],
        )


def fit_trapezoid(component: PolygonComplex, strip: Strip, pad: float,
                  tol: float = TAU_GEOM) -> TrapezoidFrame:
    """Fit the standard trapezoid frame to one component of P intersect strip.

    The component must be a convex trapezoid with two sides on the strip
    boundary lines and two chords crossing the strip; anything else raises
    DegeneracyError. pad is the collar padding in original units.
    """
    if component.is_empty():
        raise DegeneracyError("cannot fit a frame to an empty component")
    pts: list[Point] = []
    for piece in component.pieces:
        pts.extend(piece.vertices)
    hull = convex_hull(pts)
    if len(hull) < 3:
        raise DegeneracyError("component hull is degenerate")

    # Component area must match its hull's (the component itself is convex).
    hull_poly = ConvexPolygon(hull)
    comp_area = component.area()
    if abs(hull_poly.area - comp_area) > max(1e-7 * hull_poly.area, 10 * TAU_AREA):
        raise DegeneracyError(
            f"strip component is not convex: hull area {hull_poly.area!r} vs {comp_area!r}"
        )

    n = strip.line.normal
    c0 = strip.line.offset
    hw = strip.halfwidth
    rho = 1.0 / hw
    dvec = (-n[1], n[0])

    # Side classification of hull vertices against the two boundary lines.
    side_lo: list[Point] = []
    side_hi: list[Point] = []
    interior: list[Point] = []
    side_tol = max(tol, 1e-12 * max(1.0, abs(c0) + hw))
    for p in hull:
        sd = n[0] * p[0] + n[1] * p[1] - c0
        if abs(sd + hw) <= side_tol * 10:
            side_lo.append(p)
        elif abs(sd - hw) <= side_tol * 10:
            side_hi.append(p)
        else:
            interior.append(p)
    if len(side_lo) != 2 or len(side_hi) != 2:
        raise DegeneracyError(
            f"component does not span the strip cleanly "
            f"(lo={len(side_lo)}, hi={len(side_hi)}, other={len(interior)})"
        )
    if interior:
        # Interior hull vertices must lie on a chord (collinear with a corner
        # pair); for a genuine trapezoid the hull has exactly 4 corners.
        raise DegeneracyError("component has vertices off the strip boundary")

    # Center the frame along the strip direction.
    tvals = [dvec[0] * p[0] + dvec[1] * p[1] for p in hull]
    t_mid = 0.5 * (min(tvals) + max(tvals))
    p0 = (n[0] * c0 + dvec[0] * t_mid, n[1] * c0 + dvec[1] * t_mid)

    m = ((rho * n[0], rho * n[1]), (rho * dvec[0], rho * dvec[1]))
    t = (-(m[0][0] * p0[0] + m[0][1] * p0[1]), -(m[1][0] * p0[0] + m[1][1] * p0[1]))
    to_std = Similarity(m, t)

    lo_y = sorted(to_std.apply(p)[1] for p in side_lo)
    hi_y = sorted(to_std.apply(p)[1] for p in side_hi)
    a, b = lo_y
    cc, dd = hi_y
    feature = max(abs(v) for v in (a, b, cc, dd)) or 1.0
    if b - a <= 1e-9 * feature or dd - cc <= 1e-9 * feature:
        raise DegeneracyError("trapezoid side collapses to a point")
    # Chords must not cross inside the slab: a0 < an.
    if 0.5 * (a + cc) >= 0.5 * (b + dd):
        raise DegeneracyError("chords cross inside the strip")
    if pad <= 0.0:
        raise ParameterError("pad must be positive")
    return TrapezoidFrame(to_std, a, b, cc, dd, rho, pad * rho)
