"""Exact rational planar geometry: points, segments, polygons, primitive predicates.

Every predicate in this module is exact.  Coordinates are Python ints or
`fractions.Fraction`; no floating point value ever influences a result.
Floats appear only inside conservative numpy prefilters that narrow down
which exact tests need to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

import numpy as np

from .errors import InvalidPolygon

Coord = Union[int, Fraction]

# Orientation values double as the sign of the cross product.
LEFT = 1
RIGHT = -1
COLLINEAR = 0

# point_in_polygon results
INTERIOR = "interior"
BOUNDARY = "boundary"
EXTERIOR = "exterior"


def _norm(v) -> Coord:
    """Collapse integral Fractions to int (keeps the int fast path hot)."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return v.numerator
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return _norm(Fraction(v))
    raise TypeError(f"coordinate must be int, Fraction or string, got {type(v)!r}")


@dataclass(frozen=True)
class Point:
    x: Coord
    y: Coord

    def __post_init__(self):
        object.__setattr__(self, "x", _norm(self.x))
        object.__setattr__(self, "y", _norm(self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Pt({self.x}, {self.y})"


def pt(x, y) -> Point:
    return Point(x, y)


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)

    def midpoint(self) -> Point:
        return Point(Fraction(self.a.x + self.b.x, 2), Fraction(self.a.y + self.b.y, 2))


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a): LEFT, RIGHT or COLLINEAR."""
    v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if v > 0:
        return LEFT
    if v < 0:
        return RIGHT
    return COLLINEAR


def cross(o: Point, a: Point, b: Point):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def dot(o: Point, a: Point, b: Point):
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """Exact test: p lies on the closed segment ab."""
    if orientation(a, b, p) != COLLINEAR:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)) and (
        min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def lerp(a: Point, b: Point, t: Fraction) -> Point:
    return Point(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)


@dataclass(frozen=True)
class Overlap:
    segment: Segment


IntersectionResult = Union[None, Point, Overlap]


def segment_intersect(s1: Segment, s2: Segment) -> IntersectionResult:
    """Exact segment intersection: None, a single Point, or an Overlap segment.

    Shared endpoints are reported as a Point.  Degenerate (zero length)
    inputs are handled as point queries.
    """
    p, q = s1.a, s1.b
    a, b = s2.a, s2.b
    # degenerate inputs
    if p == q and a == b:
        return p if p == a else None
    if p == q:
        return p if on_segment(p, a, b) else None
    if a == b:
        return a if on_segment(a, p, q) else None

    d1 = orientation(a, b, p)
    d2 = orientation(a, b, q)
    d3 = orientation(p, q, a)
    d4 = orientation(p, q, b)

    if d1 == d2 == COLLINEAR:
        # collinear lines: overlap interval in s1's parameter space
        rx, ry = q.x - p.x, q.y - p.y
        den = rx * rx + ry * ry

        def param(pt_):
            return Fraction((pt_.x - p.x) * rx + (pt_.y - p.y) * ry, den)

        ta, tb = param(a), param(b)
        lo, hi = min(ta, tb), max(ta, tb)
        lo = max(lo, Fraction(0))
        hi = min(hi, Fraction(1))
        if lo > hi:
            return None
        if lo == hi:
            return lerp(p, q, lo)
        return Overlap(Segment(lerp(p, q, lo), lerp(p, q, hi)))

    if d1 == COLLINEAR and on_segment(p, a, b):
        return p
    if d2 == COLLINEAR and on_segment(q, a, b):
        return q
    if d3 == COLLINEAR and on_segment(a, p, q):
        return a
    if d4 == COLLINEAR and on_segment(b, p, q):
        return b
    if COLLINEAR in (d1, d2, d3, d4):
        return None

    if d1 != d2 and d3 != d4:
        # proper crossing: solve p + t*(q-p) on line ab
        rx, ry = q.x - p.x, q.y - p.y
        sx, sy = b.x - a.x, b.y - a.y
        denom = rx * sy - ry * sx
        t = Fraction((a.x - p.x) * sy - (a.y - p.y) * sx, denom)
        return Point(p.x + rx * t, p.y + ry * t)

    return None


def proper_crossing(p: Point, q: Point, a: Point, b: Point) -> bool:
    """True iff open segments pq and ab cross at a single interior point."""
    d1 = orientation(a, b, p)
    d2 = orientation(a, b, q)
    if d1 == COLLINEAR or d2 == COLLINEAR or d1 == d2:
        return False
    d3 = orientation(p, q, a)
    d4 = orientation(p, q, b)
    return d3 != COLLINEAR and d4 != COLLINEAR and d3 != d4


def polygon_signed_area2(vertices) -> Coord:
    """Twice the signed area (positive for CCW)."""
    s = 0
    n = len(vertices)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        s += a.x * b.y - b.x * a.y
    return s


@dataclass(frozen=True)
class SimplePolygon:
    """Closed simple polygon, vertices in CCW order.

    Collinear (straight) vertices are permitted and flagged; several
    subclass algorithms strip them before running.
    """

    vertices: tuple
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __init__(self, vertices: Iterable[Point], validate: bool = False):
        vs = tuple(
            v if isinstance(v, Point) else Point(v[0], v[1]) for v in vertices
        )
        if len(vs) < 3:
            raise InvalidPolygon("polygon needs at least 3 vertices")
        area2 = polygon_signed_area2(vs)
        if area2 == 0:
            raise InvalidPolygon("polygon has zero area")
        if area2 < 0:
            vs = (vs[0],) + tuple(reversed(vs[1:]))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "_cache", {})
        if validate:
            self._validate()

    # -- basic structure ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Point:
        return self.vertices[i % self.n]

    def edge(self, i: int) -> Segment:
        return Segment(self.vertices[i % self.n], self.vertices[(i + 1) % self.n])

    def edges(self):
        n = self.n
        for i in range(n):
            yield i, self.vertices[i], self.vertices[(i + 1) % n]

    def area2(self) -> Coord:
        return polygon_signed_area2(self.vertices)

    def area(self) -> Fraction:
        return Fraction(self.area2(), 2)

    def turn(self, i: int) -> int:
        """Orientation of the corner at vertex i (LEFT = convex for CCW)."""
        return orientation(self.vertex(i - 1), self.vertex(i), self.vertex(i + 1))

    def is_convex_vertex(self, i: int) -> bool:
        return self.turn(i) != RIGHT

    def is_reflex_vertex(self, i: int) -> bool:
        return self.turn(i) == RIGHT

    def reflex_vertices(self) -> list:
        return [i for i in range(self.n) if self.turn(i) == RIGHT]

    def has_collinear_vertices(self) -> bool:
        return any(self.turn(i) == COLLINEAR for i in range(self.n))

    def strip_collinear(self) -> "SimplePolygon":
        """Remove straight vertices; geometry is unchanged."""
        kept = [self.vertex(i) for i in range(self.n) if self.turn(i) != COLLINEAR]
        if len(kept) == self.n:
            return self
        return SimplePolygon(kept)

    def _validate(self):
        n = self.n
        if len(set(self.vertices)) != n:
            raise InvalidPolygon("repeated vertex")
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            if a == b:
                raise InvalidPolygon("zero length edge")
            for j in range(i + 1, n):
                c, d = self.vertices[j], self.vertices[(j + 1) % n]
                adjacent = j == i + 1 or (i == 0 and j == n - 1)
                if adjacent:
                    # adjacent edges may only share their common endpoint
                    r = segment_intersect(Segment(a, b), Segment(c, d))
                    if isinstance(r, Overlap):
                        raise InvalidPolygon("adjacent edges overlap")
                    continue
                r = segment_intersect(Segment(a, b), Segment(c, d))
                if r is not None:
                    raise InvalidPolygon(
                        f"edges {i} and {j} intersect at {r}"
                    )

    # -- float caches (prefilters only; exact code never trusts them) ---

    def _float_arrays(self):
        cache = self._cache
        arrs = cache.get("float_arrays")
        if arrs is None:
            xs = np.array([float(v.x) for v in self.vertices])
            ys = np.array([float(v.y) for v in self.vertices])
            nx = np.roll(xs, -1)
            ny = np.roll(ys, -1)
            arrs = (
                xs,
                ys,
                nx,
                ny,
                np.minimum(xs, nx),
                np.maximum(xs, nx),
                np.minimum(ys, ny),
                np.maximum(ys, ny),
            )
            cache["float_arrays"] = arrs
        return arrs

    def candidate_edges(self, p: Point, q: Point):
        """Indices of edges whose fattened bbox meets bbox(pq); superset of hits."""
        if self.n < 24:
            return range(self.n)
        _, _, _, _, exlo, exhi, eylo, eyhi = self._float_arrays()
        px, py, qx, qy = float(p.x), float(p.y), float(q.x), float(q.y)
        lox, hix = min(px, qx), max(px, qx)
        loy, hiy = min(py, qy), max(py, qy)
        pad = 1e-9 * (1.0 + max(abs(lox), abs(hix), abs(loy), abs(hiy)))
        mask = (exlo <= hix + pad) & (exhi >= lox - pad) & (eylo <= hiy + pad) & (
            eyhi >= loy - pad
        )
        return np.nonzero(mask)[0]

    def bbox(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def point_in_polygon(p: Point, poly: SimplePolygon) -> str:
    """Exact crossing-number classification: INTERIOR, BOUNDARY or EXTERIOR."""
    inside = False
    for i in poly.candidate_edges(p, p):
        a = poly.vertices[i]
        b = poly.vertices[(i + 1) % poly.n]
        if on_segment(p, a, b):
            return BOUNDARY
    for i in range(poly.n):
        a = poly.vertices[i]
        b = poly.vertices[(i + 1) % poly.n]
        if (a.y > p.y) != (b.y > p.y):
            # x coordinate of the edge at height p.y, compared exactly
            # (b.y - a.y) has the sign of the crossing direction
            t = (p.y - a.y) * (b.x - a.x) - (p.x - a.x) * (b.y - a.y)
            if b.y > a.y:
                if t > 0:
                    inside = not inside
            else:
                if t < 0:
                    inside = not inside
    return INTERIOR if inside else EXTERIOR


def is_convex(poly: SimplePolygon) -> bool:
    return all(poly.turn(i) != RIGHT for i in range(poly.n))


def convex_hull(points) -> list:
    """Andrew monotone chain, exact; returns CCW hull without collinear points."""
    pts = sorted(set((p.x, p.y) for p in points))
    if len(pts) == 1:
        return [Point(*pts[0])]
    if len(pts) == 2:
        return [Point(*p) for p in pts]

    def half(seq):
        out = []
        for xy in seq:
            p = Point(*xy)
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class PolygonWithHoles:
    outer: SimplePolygon
    holes: tuple

    def __init__(self, outer: SimplePolygon, holes: Iterable[SimplePolygon] = (),
                 validate: bool = False):
        # holes are stored with CW orientation (reversed CCW SimplePolygons)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "holes", tuple(holes))
        if validate:
            for h in self.holes:
                for v in h.vertices:
                    if point_in_polygon(v, outer) != INTERIOR:
                        raise InvalidPolygon("hole vertex not strictly inside outer")
            for i, h1 in enumerate(self.holes):
                for h2 in self.holes[i + 1:]:
                    for v in h1.vertices:
                        if point_in_polygon(v, h2) != EXTERIOR:
                            raise InvalidPolygon("holes overlap")
                    for _, a, b in h1.edges():
                        for _, c, d in h2.edges():
                            if segment_intersect(Segment(a, b), Segment(c, d)):
                                raise InvalidPolygon("hole boundaries intersect")

    @property
    def h(self) -> int:
        return len(self.holes)


def point_in_holed(p: Point, P: PolygonWithHoles) -> str:
    c = point_in_polygon(p, P.outer)
    if c != INTERIOR:
        return c
    for hole in P.holes:
        ch = point_in_polygon(p, hole)
        if ch == INTERIOR:
            return EXTERIOR
        if ch == BOUNDARY:
            return BOUNDARY
    return INTERIOR


@dataclass(frozen=True)
class ConvexPiece:
    """A convex polygon used as one piece of a cover. Containment in the
    target polygon is verified by callers, never assumed."""

    boundary: SimplePolygon

    def __init__(self, boundary):
        if not isinstance(boundary, SimplePolygon):
            boundary = SimplePolygon(boundary)
        if not is_convex(boundary):
            raise InvalidPolygon("piece is not convex")
        object.__setattr__(self, "boundary", boundary)

    @property
    def vertices(self):
        return self.boundary.vertices


def segment_in_polygon(p: Point, q: Point, poly: SimplePolygon) -> bool:
    """Exact test that the closed segment pq stays inside the closed polygon.

    Grazing contact with the boundary is allowed; a proper boundary crossing
    or any excursion through the exterior is not.
    """
    if p == q:
        return point_in_polygon(p, poly) != EXTERIOR
    contacts = set()
    n = poly.n
    rx, ry = q.x - p.x, q.y - p.y
    den = rx * rx + ry * ry
    for i in poly.candidate_edges(p, q):
        a = poly.vertices[i]
        b = poly.vertices[(i + 1) % n]
        d1 = orientation(a, b, p)
        d2 = orientation(a, b, q)
        d3 = orientation(p, q, a)
        d4 = orientation(p, q, b)
        if d1 != d2 and d3 != d4 and COLLINEAR not in (d1, d2, d3, d4):
            return False  # proper crossing
        # touching contacts: collect segment parameters where pq meets ab
        if d3 == COLLINEAR and on_segment(a, p, q):
            contacts.add(Fraction((a.x - p.x) * rx + (a.y - p.y) * ry, den))
        if d4 == COLLINEAR and on_segment(b, p, q):
            contacts.add(Fraction((b.x - p.x) * rx + (b.y - p.y) * ry, den))
        if d1 == COLLINEAR and on_segment(p, a, b):
            contacts.add(Fraction(0))
        if d2 == COLLINEAR and on_segment(q, a, b):
            contacts.add(Fraction(1))
    ts = sorted(contacts | {Fraction(0), Fraction(1)})
    for t0, t1 in zip(ts, ts[1:]):
        if t0 == t1:
            continue
        m = lerp(p, q, (t0 + t1) / 2)
        if point_in_polygon(m, poly) == EXTERIOR:
            return False
    return True


def convex_region_inside(hull_pts, poly: SimplePolygon,
                         boundary_known_inside: bool = False) -> bool:
    """Exact test that a convex region (given by its CCW hull) lies in poly.

    Requires every hull edge to stay inside, no polygon vertex strictly
    inside the hull, no polygon edge cutting through the hull interior,
    and (for positive-area hulls) an interior sample inside poly.
    """
    hull = convex_hull(hull_pts)
    if len(hull) == 1:
        return point_in_polygon(hull[0], poly) != EXTERIOR
    if len(hull) == 2:
        return segment_in_polygon(hull[0], hull[1], poly)

    k = len(hull)
    if not boundary_known_inside:
        for i in range(k):
            if not segment_in_polygon(hull[i], hull[(i + 1) % k], poly):
                return False

    def strictly_inside_hull(p: Point) -> bool:
        for i in range(k):
            if orientation(hull[i], hull[(i + 1) % k], p) != LEFT:
                return False
        return True

    def clip_param_interval(a: Point, b: Point):
        # Liang-Barsky against hull half-planes, exact
        lo, hi = Fraction(0), Fraction(1)
        dx, dy = b.x - a.x, b.y - a.y
        for i in range(k):
            h0 = hull[i]
            h1 = hull[(i + 1) % k]
            ex, ey = h1.x - h0.x, h1.y - h0.y
            # inside: ex*(py-h0.y) - ey*(px-h0.x) >= 0
            f_a = ex * (a.y - h0.y) - ey * (a.x - h0.x)
            deriv = ex * dy - ey * dx
            if deriv == 0:
                if f_a < 0:
                    return None
                continue
            t_hit = Fraction(-f_a, deriv)
            if deriv > 0:
                lo = max(lo, t_hit)
            else:
                hi = min(hi, t_hit)
            if lo > hi:
                return None
        return lo, hi

    for v in poly.vertices:
        if strictly_inside_hull(v):
            return False
    for i in range(poly.n):
        a = poly.vertices[i]
        b = poly.vertices[(i + 1) % poly.n]
        iv = clip_param_interval(a, b)
        if iv is None:
            continue
        lo, hi = iv
        if lo >= hi:
            continue
        m = lerp(a, b, (lo + hi) / 2)
        if strictly_inside_hull(m):
            return False
    # hull interior meets no boundary: one sample decides inside/outside
    cx = sum((h.x for h in hull), Fraction(0)) / k
    cy = sum((h.y for h in hull), Fraction(0)) / k
    return point_in_polygon(Point(cx, cy), poly) != EXTERIOR


def edge_extension(poly: SimplePolygon, i: int, direction: str = "forward"):
    """Shoot the ray continuing edge i past its endpoint through the interior.

    direction 'forward' continues past vertex i+1; 'backward' continues the
    reversed edge past vertex i.  Returns (hit_point, hit_edge_index) for the
    first boundary point hit, or None when the ray immediately leaves the
    polygon.
    """
    a = poly.vertex(i)
    b = poly.vertex(i + 1)
    if direction == "forward":
        origin, d = b, (b.x - a.x, b.y - a.y)
    elif direction == "backward":
        origin, d = a, (a.x - b.x, a.y - b.y)
    else:
        raise ValueError("direction must be 'forward' or 'backward'")
    hit = ray_boundary_hit(poly, origin, d)
    if hit is None:
        return None
    t, pnt, edge_idx = hit
    mid = Point(origin.x + d[0] * t / 2, origin.y + d[1] * t / 2)
    if point_in_polygon(mid, poly) == EXTERIOR:
        return None
    return pnt, edge_idx


def ray_boundary_hit(poly: SimplePolygon, origin: Point, d):
    """First boundary contact of the open ray origin + t*d (t > 0), exact.

    Returns (t, point, edge_index) or None.  Contacts at t == 0 are ignored.
    """
    dx, dy = d
    best = None
    far = Point(origin.x + dx, origin.y + dy)
    for i in range(poly.n):
        a = poly.vertices[i]
        b = poly.vertices[(i + 1) % poly.n]
        ex, ey = b.x - a.x, b.y - a.y
        denom = dx * ey - dy * ex
        if denom != 0:
            # solve origin + t d = a + s e
            t = Fraction((a.x - origin.x) * ey - (a.y - origin.y) * ex, denom)
            if t <= 0:
                continue
            s = Fraction((a.x - origin.x) * dy - (a.y - origin.y) * dx, denom)
            if s < 0 or s > 1:
                continue
            if best is None or t < best[0]:
                best = (t, Point(origin.x + dx * t, origin.y + dy * t), i)
        else:
            # parallel; collinear overlap contributes its nearest t > 0
            if orientation(origin, far, a) != COLLINEAR:
                continue
            den2 = dx * dx + dy * dy
            for pnt in (a, b):
                t = Fraction((pnt.x - origin.x) * dx + (pnt.y - origin.y) * dy, den2)
                if t > 0 and (best is None or t < best[0]):
                    best = (t, pnt, i)
    return best


def ray_segment_hit(origin: Point, d, a: Point, b: Point):
    """Intersection of the open ray origin + t*d (t > 0) with segment ab.

    Returns (t, point) for the nearest contact or None. Collinear overlaps
    report the nearest overlapping point.
    """
    dx, dy = d
    ex, ey = b.x - a.x, b.y - a.y
    denom = dx * ey - dy * ex
    if denom != 0:
        t = Fraction((a.x - origin.x) * ey - (a.y - origin.y) * ex, denom)
        if t <= 0:
            return None
        s = Fraction((a.x - origin.x) * dy - (a.y - origin.y) * dx, denom)
        if s < 0 or s > 1:
            return None
        return t, Point(origin.x + dx * t, origin.y + dy * t)
    if orientation(origin, Point(origin.x + dx, origin.y + dy), a) != COLLINEAR:
        return None
    den2 = dx * dx + dy * dy
    best = None
    for pnt in (a, b):
        t = Fraction((pnt.x - origin.x) * dx + (pnt.y - origin.y) * dy, den2)
        if t > 0 and (best is None or t < best[0]):
            best = (t, pnt)
    return best


def line_segment_hit(p0: Point, d, a: Point, b: Point):
    """Intersection point of the full line p0 + t*d with segment ab, or None.

    Collinear overlap returns None (no single crossing point).
    """
    dx, dy = d
    ex, ey = b.x - a.x, b.y - a.y
    denom = dx * ey - dy * ex
    if denom == 0:
        return None
    s = Fraction((a.x - p0.x) * dy - (a.y - p0.y) * dx, denom)
    if s < 0 or s > 1:
        return None
    return Point(a.x + ex * s, a.y + ey * s)


def edge_param(a: Point, b: Point, p: Point) -> Fraction:
    """Parameter of p along segment ab (0 at a, 1 at b); p assumed collinear."""
    dx, dy = b.x - a.x, b.y - a.y
    if dx != 0 or dy != 0:
        return Fraction((p.x - a.x) * dx + (p.y - a.y) * dy, dx * dx + dy * dy)
    raise ValueError("degenerate edge")


def clip_convex_by_halfplane(pts, h0: Point, h1: Point):
    """Clip a convex CCW polygon to the left closed half-plane of line h0->h1."""
    out = []
    k = len(pts)
    for i in range(k):
        cur = pts[i]
        nxt = pts[(i + 1) % k]
        c_in = orientation(h0, h1, cur) != RIGHT
        n_in = orientation(h0, h1, nxt) != RIGHT
        if c_in:
            out.append(cur)
        if c_in != n_in:
            hit = line_segment_hit(h0, (h1.x - h0.x, h1.y - h0.y), cur, nxt)
            if hit is not None and (not out or out[-1] != hit):
                out.append(hit)
    # dedupe consecutive
    dedup = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) >= 2 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup
