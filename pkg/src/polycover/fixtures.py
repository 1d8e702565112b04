"""Random polygon generators for tests, experiments and the acceptance
suite.  All fixtures have integer coordinates and are reproducible from a
seeded random.Random instance."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cmp_to_key

from .geom import (
    COLLINEAR,
    LEFT,
    RIGHT,
    Point,
    PolygonWithHoles,
    SimplePolygon,
    convex_hull,
    orientation,
    polygon_signed_area2,
    pt,
    segment_intersect,
    Segment,
)


def _rng(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def _angle_cmp(u, v):
    """Exact CCW angular comparison of direction vectors from the origin."""

    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = u[0] * v[1] - u[1] * v[0]
    return 0 if c == 0 else (-1 if c > 0 else 1)


def random_convex_polygon(n: int, seed=0) -> SimplePolygon:
    """Convex polygon with ~n vertices: random integer direction vectors in
    angular order summing to zero."""
    rng = _rng(seed)
    while True:
        dirs = set()
        while len(dirs) < n:
            v = (rng.randint(-20, 20), rng.randint(-20, 20))
            if v != (0, 0):
                dirs.add(v)
        vecs = sorted(dirs, key=cmp_to_key(_angle_cmp))
        sx = sum(v[0] for v in vecs)
        sy = sum(v[1] for v in vecs)
        vecs.append((-sx, -sy))
        vecs = [v for v in vecs if v != (0, 0)]
        vecs = sorted(set(vecs), key=cmp_to_key(_angle_cmp))
        pts = [(0, 0)]
        for v in vecs[:-1]:
            pts.append((pts[-1][0] + v[0], pts[-1][1] + v[1]))
        hull = convex_hull([pt(*p) for p in pts])
        if len(hull) >= max(3, n - 2):
            return SimplePolygon(hull)


def random_fan(n: int, seed=0, span=160) -> SimplePolygon:
    """Convex fan: apex at the origin sees every point; boundary vertices at
    angularly sorted integer directions with random radii."""
    rng = _rng(seed)
    while True:
        dirs = {}
        while len(dirs) < n - 1:
            v = (rng.randint(1, 30), rng.randint(-25, 25))
            key_dirs = [d for d in dirs if d[0] * v[1] - d[1] * v[0] == 0]
            if not key_dirs:
                dirs[v] = rng.randint(2, 8)
        vecs = sorted(dirs, key=cmp_to_key(_angle_cmp))
        pts = [pt(0, 0)]
        for v in vecs:
            r = dirs[v]
            pts.append(pt(v[0] * r, v[1] * r))
        poly = SimplePolygon(pts)
        apex = list(poly.vertices).index(pt(0, 0))
        if poly.turn(apex) == LEFT:
            return poly


def random_mountain(n: int, seed=0, width=None, height=12) -> SimplePolygon:
    """Monotone mountain: base edge from (0,0) to (W,0), x-monotone chain
    back from (W,0) to (0,0)."""
    rng = _rng(seed)
    W = width or max(4 * n, 24)
    xs = sorted(rng.sample(range(1, W), n - 2), reverse=True)
    pts = [pt(0, 0), pt(W, 0)]
    for x in xs:
        pts.append(pt(x, rng.randint(1, height)))
    return SimplePolygon(pts)


def random_rocking_chair(n: int, seed=0) -> SimplePolygon:
    """x-monotone top chain closed by a convex bottom chain (the rocker)."""
    rng = _rng(seed)
    while True:
        W = 4 * n
        k_bottom = rng.randint(1, max(1, n // 3))
        k_top = n - 2 - k_bottom
        if k_top < 1:
            continue
        # convex rocker below the x axis: lower hull of random points
        raw = [pt(rng.randint(1, W - 1), rng.randint(-12, -1)) for _ in range(k_bottom + 4)]
        hull = convex_hull([pt(0, 0), pt(W, 0)] + raw)
        i0 = hull.index(pt(0, 0))
        iW = hull.index(pt(W, 0))
        rocker = []
        i = i0
        while i != iW:
            rocker.append(hull[i])
            i = (i + 1) % len(hull)
        rocker.append(pt(W, 0))
        # top chain from (W,0) back to (0,0)
        xs = sorted(rng.sample(range(1, W), k_top), reverse=True)
        top = [pt(x, rng.randint(1, 12)) for x in xs]
        pts = rocker + top
        if polygon_signed_area2(pts) <= 0:
            continue
        try:
            return SimplePolygon(pts, validate=True)
        except Exception:
            continue


def _reflex_chain(p, q, guide, k, rng):
    """Strictly reflex chain from p to q bulging toward `guide`: the convex
    hull side of random points seeded between the chord and the guide."""
    if k <= 0:
        return [p, q]
    samples = []
    for _ in range(k * 3):
        a = Fraction(rng.randint(1, 9), 10)
        b = Fraction(rng.randint(1, 6), 12)
        x = p.x + (q.x - p.x) * a + (guide.x - p.x) * b
        y = p.y + (q.y - p.y) * a + (guide.y - p.y) * b
        samples.append(pt(int(x), int(y)))
    hull = convex_hull([p, q] + samples)
    if p not in hull or q not in hull:
        return [p, q]
    ip, iq = hull.index(p), hull.index(q)
    # walk the hull from p to q on the side whose interior turns are RIGHT
    # when traversed p -> q (strictly reflex for a CCW polygon)
    fwd = []
    i = ip
    while True:
        fwd.append(hull[i])
        if i == iq:
            break
        i = (i + 1) % len(hull)
    bwd = []
    i = ip
    while True:
        bwd.append(hull[i])
        if i == iq:
            break
        i = (i - 1) % len(hull)

    def all_right(chain):
        return all(
            orientation(chain[i - 1], chain[i], chain[i + 1]) == RIGHT
            for i in range(1, len(chain) - 1)
        )

    for chain in (fwd, bwd):
        if len(chain) >= 2 and all_right(chain):
            on_guide_side = any(
                orientation(p, q, v) == orientation(p, q, guide) for v in chain[1:-1]
            )
            if len(chain) == 2 or on_guide_side:
                return chain
    return [p, q]


def random_funnel(n: int, seed=0, width=40, height=30) -> SimplePolygon:
    """Funnel: convex base edge plus two strictly reflex chains meeting at a
    convex apex.  Deep chains produce instances where opposite edges stop
    strongly seeing each other."""
    rng = _rng(seed)
    for _ in range(300):
        W = width
        apex = pt(rng.randint(W // 4, 3 * W // 4), height + rng.randint(0, 10))
        guide = pt(W // 2, (height * 2) // 3)
        k = max(0, (n - 3) // 2)
        right = _reflex_chain(pt(W, 0), apex, guide, k + rng.randint(0, 2), rng)
        left = _reflex_chain(apex, pt(0, 0), guide, k + rng.randint(0, 2), rng)
        pts = [pt(0, 0), pt(W, 0)] + right[1:] + left[1:-1]
        if len(pts) < 4 or polygon_signed_area2(pts) <= 0:
            continue
        try:
            poly = SimplePolygon(pts, validate=True)
        except Exception:
            continue
        poly = poly.strip_collinear()
        if poly.n < 4:
            continue
        convex = [i for i in range(poly.n) if poly.turn(i) == LEFT]
        if len(convex) == 3 and is_funnel_shape(poly):
            return poly
    raise RuntimeError("funnel generation failed")


def is_funnel_shape(P: SimplePolygon):
    """The polygon has exactly 3 convex vertices, two of them joined by an
    edge (the base)."""
    convex = [i for i in range(P.n) if P.turn(i) != RIGHT]
    if len(convex) != 3:
        return False
    for i in convex:
        if (i + 1) % P.n in convex:
            return True
    return False


def random_pseudotriangle(n: int, seed=0, size=60) -> SimplePolygon:
    """Simple polygon with exactly 3 convex vertices and 3 reflex chains."""
    rng = _rng(seed)
    for _ in range(400):
        corners = [pt(0, 0), pt(size, rng.randint(-6, 6)), pt(size // 2, size)]
        centroid = pt(
            sum(c.x for c in corners) // 3, sum(c.y for c in corners) // 3
        )
        k = max(1, (n - 3) // 3)
        chains = []
        ok = True
        for a, b in zip(corners, corners[1:] + corners[:1]):
            ch = _reflex_chain(a, b, centroid, k + rng.randint(0, 1), rng)
            chains.append(ch)
        pts = []
        for ch in chains:
            pts.extend(ch[:-1])
        if polygon_signed_area2(pts) <= 0:
            continue
        try:
            poly = SimplePolygon(pts, validate=True).strip_collinear()
        except Exception:
            continue
        convex = [i for i in range(poly.n) if poly.turn(i) == LEFT]
        if len(convex) == 3 and poly.n >= 6:
            return poly
    raise RuntimeError("pseudotriangle generation failed")


def random_star_polygon(n: int, seed=0, spiky=True) -> SimplePolygon:
    """Star-shaped polygon with the origin in its kernel: angularly sorted
    integer directions with alternating radii."""
    rng = _rng(seed)
    while True:
        dirs = set()
        while len(dirs) < n:
            v = (rng.randint(-12, 12), rng.randint(-12, 12))
            if v == (0, 0):
                continue
            if any(_angle_cmp(v, u) == 0 for u in dirs):
                continue
            dirs.add(v)
        vecs = sorted(dirs, key=cmp_to_key(_angle_cmp))
        pts = []
        for i, v in enumerate(vecs):
            if spiky:
                r = rng.choice([2, 3]) if i % 2 else rng.choice([7, 9, 11])
            else:
                r = rng.randint(3, 9)
            pts.append(pt(v[0] * r, v[1] * r))
        if len(set(pts)) < len(pts):
            continue
        try:
            return SimplePolygon(pts, validate=True)
        except Exception:
            continue


def random_histogram(n: int, seed=0) -> SimplePolygon:
    """Orthogonal comb/histogram: base edge plus columns of varying height."""
    rng = _rng(seed)
    cols = max(2, (n - 2) // 2)
    heights = []
    while len(heights) < cols:
        h = rng.randint(1, 10)
        if not heights or h != heights[-1]:
            heights.append(h)
    W = 2 * cols
    pts = [pt(0, 0), pt(W, 0)]
    x = W
    for i, h in enumerate(reversed(heights)):
        pts.append(pt(x, h))
        x -= 2
        pts.append(pt(x, h))
    return SimplePolygon(pts)


def random_staircase(n: int, seed=0) -> SimplePolygon:
    """Orthogonal staircase polygon climbing up-right."""
    rng = _rng(seed)
    steps = max(2, (n - 2) // 2)
    pts = [pt(0, 0)]
    x = 0
    y = 0
    runs = []
    for _ in range(steps):
        runs.append((rng.randint(1, 4), rng.randint(1, 4)))
    for dx, _ in runs:
        x += dx
    pts.append(pt(x, 0))
    for dx, dy in reversed(runs):
        y += dy
        pts.append(pt(x, y))
        x -= dx
        pts.append(pt(x, y))
    return SimplePolygon(pts[:-1] + [pt(0, y)]) if pts[-1] != pt(0, y) else SimplePolygon(pts)


def random_orthogonal(n: int, seed=0) -> SimplePolygon:
    rng = _rng(seed)
    if rng.random() < 0.5:
        return random_histogram(n, rng)
    return random_staircase(n, rng)


def random_wvp(n: int, seed=0) -> tuple:
    """A polygon weakly visible from a convex edge, with that base index."""
    rng = _rng(seed)
    kind = rng.choice(["mountain", "funnel", "fan", "histogram"])
    if kind == "mountain":
        return random_mountain(n, rng), 0
    if kind == "funnel":
        return random_funnel(n, rng), 0
    if kind == "histogram":
        return random_histogram(n, rng), 0
    poly = random_fan(n, rng)
    apex = list(poly.vertices).index(pt(0, 0))
    return poly, apex


def random_monotone_simple(n: int, seed=0) -> SimplePolygon:
    """x-monotone simple polygon with wiggly upper and lower chains; almost
    never star-shaped, used as a generic simple polygon fixture."""
    rng = _rng(seed)
    while True:
        k_low = (n - 2) // 2
        k_up = n - 2 - k_low
        W = 3 * n
        xs = rng.sample(range(1, W), k_low + k_up)
        xs_low = sorted(xs[:k_low])
        xs_up = sorted(xs[k_low:], reverse=True)
        pts = [pt(0, 5)]
        for x in xs_low:
            pts.append(pt(x, rng.randint(0, 9)))
        pts.append(pt(W, 5))
        for x in xs_up:
            pts.append(pt(x, rng.randint(11, 20)))
        try:
            return SimplePolygon(pts, validate=True)
        except Exception:
            continue


def random_simple_2opt(n: int, seed=0, box=60) -> SimplePolygon:
    """Uniformly messy simple polygon: random points untangled by 2-opt."""
    rng = _rng(seed)
    while True:
        pts = []
        seen = set()
        while len(pts) < n:
            p = (rng.randint(0, box), rng.randint(0, box))
            if p not in seen:
                seen.add(p)
                pts.append(pt(*p))
        changed = True
        guard = 0
        while changed and guard < 4000:
            changed = False
            m = len(pts)
            for i in range(m):
                for j in range(i + 1, m):
                    if i == 0 and j == m - 1:
                        continue
                    a, b = pts[i], pts[(i + 1) % m]
                    c, d = pts[j], pts[(j + 1) % m]
                    if j == (i + 1) % m:
                        continue
                    if segment_intersect(Segment(a, b), Segment(c, d)) is not None:
                        pts[i + 1:j + 1] = reversed(pts[i + 1:j + 1])
                        changed = True
                        guard += 1
                        break
                if changed:
                    break
        try:
            return SimplePolygon(pts, validate=True)
        except Exception:
            continue


def random_general_simple(n: int, seed=0) -> SimplePolygon:
    rng = _rng(seed)
    if n <= 30 and rng.random() < 0.4:
        return random_simple_2opt(n, rng)
    return random_monotone_simple(n, rng)


def random_holed(seed=0, holes=1) -> PolygonWithHoles:
    """Rectangle with small convex holes in separate horizontal bands."""
    rng = _rng(seed)
    W = 40
    band_h = 10
    H = band_h * holes + 10
    outer = SimplePolygon([pt(0, 0), pt(W, 0), pt(W, H), pt(0, H)])
    hs = []
    for b in range(holes):
        y0 = 6 + b * band_h
        x0 = rng.randint(6, W - 14)
        w = rng.randint(3, 6)
        h = rng.randint(2, 4)
        dx = rng.randint(0, 2)
        hole = SimplePolygon(
            [pt(x0, y0), pt(x0 + w, y0 + dx - dx), pt(x0 + w + dx, y0 + h),
             pt(x0 - 0, y0 + h)]
        )
        hs.append(hole)
    return PolygonWithHoles(outer, hs, validate=True)
