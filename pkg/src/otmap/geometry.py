"""Exact rational plane geometry: convex polygons, half-plane clipping,
torus-aware affine pushforward, partition refinement, shoelace areas.

All coordinates are `fractions.Fraction`; every area identity in this module
is an exact equality, never a tolerance.  Regions (unions of convex pieces
with pairwise disjoint interiors) are plain lists of polygons.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import ceil, floor, gcd

from .errors import DegeneratePolygon, SupportMismatch
from .linalg import Mat2

Fr = Fraction

ZERO = Fr(0)
ONE = Fr(1)
HALF = Fr(1, 2)

# ---------------------------------------------------------------------------
# convex polygons: tuple of (Fraction, Fraction) vertices, CCW, no repeats
# ---------------------------------------------------------------------------


def shoelace2(pts):
    """Twice the signed area."""
    s = ZERO
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s


def shoelace_area(pts):
    """Exact positive area of a polygon given CCW (raises if degenerate)."""
    if len(pts) < 3:
        raise DegeneratePolygon(f"{len(pts)} vertices")
    a2 = shoelace2(pts)
    if a2 <= 0:
        raise DegeneratePolygon("zero or negative signed area")
    return a2 / 2


def normalize_poly(pts):
    """Drop repeated and collinear vertices; return None if area is zero."""
    if len(pts) < 3:
        return None
    uniq = []
    for p in pts:
        if not uniq or p != uniq[-1]:
            uniq.append(p)
    if len(uniq) > 1 and uniq[0] == uniq[-1]:
        uniq.pop()
    if len(uniq) < 3:
        return None
    out = []
    n = len(uniq)
    for i in range(n):
        p0 = uniq[i - 1]
        p1 = uniq[i]
        p2 = uniq[(i + 1) % n]
        cross = (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p1[1] - p0[1]) * (p2[0] - p0[0])
        if cross != 0:
            out.append(p1)
    if len(out) < 3:
        return None
    if shoelace2(out) <= 0:
        return None
    return tuple(out)


def is_convex_ccw(pts):
    n = len(pts)
    if n < 3:
        return False
    for i in range(n):
        p0, p1, p2 = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
        cross = (p1[0] - p0[0]) * (p2[1] - p1[1]) - (p1[1] - p0[1]) * (p2[0] - p1[0])
        if cross < 0:
            return False
    return True


def make_poly(pts):
    poly = normalize_poly(tuple((Fr(x), Fr(y)) for x, y in pts))
    if poly is None:
        raise DegeneratePolygon("empty after normalization")
    if not is_convex_ccw(poly):
        raise DegeneratePolygon("not convex CCW")
    return poly


def box(x0, y0, x1, y1):
    return make_poly([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])


UNIT_SQUARE = None  # set below once helpers exist


def clip_halfplane(pts, a, b, c, side="le"):
    """Exact intersection of a convex polygon with a*x + b*y <= c (or >=).

    Returns a normalized polygon or None when the intersection has zero area.
    """
    if side == "ge":
        a, b, c = -a, -b, -c
    elif side != "le":
        raise ValueError("side must be 'le' or 'ge'")
    n = len(pts)
    vals = [a * x + b * y - c for (x, y) in pts]
    if all(v <= 0 for v in vals):
        return normalize_poly(pts)
    if all(v >= 0 for v in vals):
        return None
    out = []
    for i in range(n):
        p, vp = pts[i], vals[i]
        q, vq = pts[(i + 1) % n], vals[(i + 1) % n]
        if vp <= 0:
            out.append(p)
        if (vp < 0 < vq) or (vq < 0 < vp):
            t = vp / (vp - vq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return normalize_poly(out)


def clip_line_both(pts, a, b, c):
    """Split a convex polygon along a*x + b*y = c; returns (le_part, ge_part)."""
    return clip_halfplane(pts, a, b, c, "le"), clip_halfplane(pts, a, b, c, "ge")


def poly_edges_halfplanes(pts):
    """CCW polygon as a list of (a, b, c) with interior = {a*x + b*y <= c}."""
    out = []
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        a = q[1] - p[1]
        b = p[0] - q[0]
        c = a * p[0] + b * p[1]
        out.append((a, b, c))
    return out


def convex_intersect(P, Q):
    """Exact intersection of two convex polygons (None if area zero)."""
    cur = P
    for a, b, c in poly_edges_halfplanes(Q):
        cur = clip_halfplane(cur, a, b, c)
        if cur is None:
            return None
    return cur


def convex_subtract(P, Q):
    """P minus Q as a list of convex pieces with disjoint interiors."""
    pieces = []
    cur = P
    for a, b, c in poly_edges_halfplanes(Q):
        outside = clip_halfplane(cur, a, b, c, "ge")
        if outside is not None:
            pieces.append(outside)
        cur = clip_halfplane(cur, a, b, c, "le")
        if cur is None:
            break
    return pieces


def point_in_poly(pts, p):
    """'in' (strict interior), 'on' (boundary), or 'out'."""
    on_edge = False
    for a, b, c in poly_edges_halfplanes(pts):
        v = a * p[0] + b * p[1] - c
        if v > 0:
            return "out"
        if v == 0:
            on_edge = True
    return "on" if on_edge else "in"


# ---------------------------------------------------------------------------
# regions: lists of convex polygons with pairwise disjoint interiors
# ---------------------------------------------------------------------------


def region_area(region):
    return sum((shoelace2(p) for p in region), ZERO) / 2


def region_intersect(Ra, Rb):
    out = []
    for P in Ra:
        for Q in Rb:
            piece = convex_intersect(P, Q)
            if piece is not None:
                out.append(piece)
    return out


def region_subtract(Ra, Rb):
    pieces = list(Ra)
    for Q in Rb:
        nxt = []
        for P in pieces:
            nxt.extend(convex_subtract(P, Q))
        pieces = nxt
        if not pieces:
            break
    return pieces


def symmdiff_area(Ra, Rb):
    return region_area(region_subtract(Ra, Rb)) + region_area(region_subtract(Rb, Ra))


def regions_equal(Ra, Rb):
    return symmdiff_area(Ra, Rb) == 0


def region_locate(region, p):
    """'in' | 'on' | 'out'.  Points on internal shared edges report 'on';
    callers that sample random points treat 'on' as a discard."""
    verdict = "out"
    for poly in region:
        loc = point_in_poly(poly, p)
        if loc == "in":
            return "in"
        if loc == "on":
            verdict = "on"
    return verdict


def region_contains_segment(region, p, q):
    """True when the closed segment pq lies in the closed region (exact)."""
    remaining = [(ZERO, ONE)]
    for poly in region:
        if not remaining:
            return True
        nxt = []
        for (t0, t1) in remaining:
            lo, hi = t0, t1
            inside = True
            for a, b, c in poly_edges_halfplanes(poly):
                fp = a * p[0] + b * p[1] - c
                fq = a * q[0] + b * q[1] - c
                # restrict [lo, hi] to f(t) <= 0 where f(t) = fp + t*(fq - fp)
                if fp == fq:
                    if fp > 0:
                        inside = False
                        break
                    continue
                t_cross = fp / (fp - fq)
                if fq > fp:
                    hi = min(hi, t_cross)
                else:
                    lo = max(lo, t_cross)
                if lo >= hi:
                    inside = False
                    break
            if not inside:
                nxt.append((t0, t1))
                continue
            if t0 < lo:
                nxt.append((t0, lo))
            if hi < t1:
                nxt.append((hi, t1))
        remaining = nxt
    return not remaining


def refine(partition_a, partition_b):
    """Common refinement of two labelled partitions of the same support.

    Partitions are lists of (polygon, label); the result carries label pairs.
    Raises SupportMismatch when total areas differ (cheap necessary check).
    """
    area_a = region_area([p for p, _ in partition_a])
    area_b = region_area([p for p, _ in partition_b])
    if area_a != area_b:
        raise SupportMismatch(f"supports differ: {area_a} vs {area_b}")
    out = []
    for P, la in partition_a:
        for Q, lb in partition_b:
            piece = convex_intersect(P, Q)
            if piece is not None:
                out.append((piece, (la, lb)))
    if region_area([p for p, _ in out]) != area_a:
        raise SupportMismatch("refinement lost area; supports differ")
    return out


# ---------------------------------------------------------------------------
# affine maps and torus reduction
# ---------------------------------------------------------------------------


def affine_poly(M: Mat2, t, pts):
    tx, ty = Fr(t[0]), Fr(t[1])
    img = tuple((M.a * x + M.b * y + tx, M.c * x + M.d * y + ty) for (x, y) in pts)
    if shoelace2(img) < 0:
        img = tuple(reversed(img))
    return normalize_poly(img)


def poly_interior_point(pts):
    """Vertex centroid: interior for convex polygons, exact."""
    n = len(pts)
    sx = sum((p[0] for p in pts), ZERO)
    sy = sum((p[1] for p in pts), ZERO)
    return (sx / n, sy / n)


def split_unit_torus(poly):
    """Split a polygon at integer lines and translate each piece into [0,1)^2."""
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    pieces = [poly]
    for k in range(floor(min(xs)) + 1, ceil(max(xs))):
        nxt = []
        for P in pieces:
            lo, hi = clip_line_both(P, ONE, ZERO, Fr(k))
            nxt.extend(p for p in (lo, hi) if p is not None)
        pieces = nxt
    for k in range(floor(min(ys)) + 1, ceil(max(ys))):
        nxt = []
        for P in pieces:
            lo, hi = clip_line_both(P, ZERO, ONE, Fr(k))
            nxt.extend(p for p in (lo, hi) if p is not None)
        pieces = nxt
    out = []
    for P in pieces:
        cx, cy = poly_interior_point(P)
        dx, dy = Fr(floor(cx)), Fr(floor(cy))
        if dx or dy:
            P = tuple((x - dx, y - dy) for (x, y) in P)
        out.append(P)
    return out


def map_polygon(M: Mat2, t, poly):
    """Affine image v -> M v + t reduced mod 1, split along torus seams."""
    img = affine_poly(M, t, poly)
    if img is None:
        raise DegeneratePolygon("affine image degenerate")
    return split_unit_torus(img)


def map_region(M: Mat2, t, region):
    out = []
    for poly in region:
        out.extend(map_polygon(M, t, poly))
    return out


# ---------------------------------------------------------------------------
# region boundary extraction (exact cancellation on shared lines)
# ---------------------------------------------------------------------------


def _line_key(p, q):
    """Canonical (a, b, c) integers for the line through p, q, primitive."""
    a = q[1] - p[1]
    b = p[0] - q[0]
    c = a * p[0] + b * p[1]
    den = a.denominator * b.denominator * c.denominator
    ia = int(a * den)
    ib = int(b * den)
    ic = int(c * den)
    g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
    if g:
        ia, ib, ic = ia // g, ib // g, ic // g
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib, ic = -ia, -ib, -ic
    return ia, ib, ic


def region_boundary(region):
    """True boundary edges of a region given as interior-disjoint pieces.

    Returns a list of ((a, b, c), p, q) where the open segment pq lies on the
    region boundary (line a*x + b*y = c).  Internal shared edges cancel by
    orientation, exactly.
    """
    by_line = {}
    for poly in region:
        n = len(poly)
        for i in range(n):
            p, q = poly[i], poly[(i + 1) % n]
            key = _line_key(p, q)
            a, b, _ = key
            # parameter along the line: project on the direction (-b, a)
            tp = -b * p[0] + a * p[1]
            tq = -b * q[0] + a * q[1]
            sign = 1 if tq > tp else -1
            lo, hi = (tp, tq) if tp < tq else (tq, tp)
            by_line.setdefault(key, []).append((lo, hi, sign, p, q))
    out = []
    for key, intervals in by_line.items():
        events = []
        for lo, hi, sign, _, _ in intervals:
            events.append((lo, sign))
            events.append((hi, -sign))
        events.sort()
        cuts = sorted({t for t, _ in events})
        for i in range(len(cuts) - 1):
            mid_lo, mid_hi = cuts[i], cuts[i + 1]
            cover = 0
            for lo, hi, sign, _, _ in intervals:
                if lo <= mid_lo and mid_hi <= hi:
                    cover += sign
            if cover != 0:
                a, b, c = key
                den = a * a + b * b
                # point at parameter t solves a x + b y = c, -b x + a y = t:
                # x = (a c - b t)/den, y = (b c + a t)/den
                x0 = Fr(a * c - b * mid_lo, den)
                y0 = Fr(b * c + a * mid_lo, den)
                x1 = Fr(a * c - b * mid_hi, den)
                y1 = Fr(b * c + a * mid_hi, den)
                out.append((key, (x0, y0), (x1, y1)))
    return out


# ---------------------------------------------------------------------------
# serialization: exact "p/q" strings
# ---------------------------------------------------------------------------


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def poly_to_jsonable(poly):
    return [[frac_str(x), frac_str(y)] for (x, y) in poly]


def poly_from_jsonable(data):
    return make_poly([(parse_frac(x), parse_frac(y)) for x, y in data])


def region_to_json(region) -> str:
    return json.dumps([poly_to_jsonable(p) for p in region])


def region_from_json(text: str):
    return [poly_from_jsonable(p) for p in json.loads(text)]


UNIT_SQUARE = ((ZERO, ZERO), (ONE, ZERO), (ONE, ONE), (ZERO, ONE))
