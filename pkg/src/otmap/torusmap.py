"""The orthogonal tent map H = G o F on the 2-torus, in exact arithmetic.

F shears horizontally by a tent function of y, G shears vertically by a tent
function of x, both with slopes +-2 breaking at 1/2:

    F(x, y) = (x + tent(y) mod 1, y)
    G(x, y) = (x, y + tent(x) mod 1)
    H = G o F

The Jacobian DH is constant on each of the four sets A_j = F^{-1}(S_j),
where S_1..S_4 are the half-open coordinate squares of side 1/2, and takes
the values M1..M4 below.  Exact point dynamics, region classification,
cocycles, the symmetries T and Tcal, and exact line-segment iteration with
splitting at singularity lines all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import geometry as geo
from .errors import DegenerateSegment, SingularityError
from .geometry import HALF, ONE, ZERO, Fr
from .linalg import IDENTITY, Mat2

# Jacobian blocks on A_1..A_4
M1 = Mat2(1, 2, 2, 5)
M2 = Mat2(1, 2, -2, -3)
M3 = Mat2(1, -2, 2, -3)
M4 = Mat2(1, -2, -2, 5)
JACOBIANS = {1: M1, 2: M2, 3: M3, 4: M4}

# fixed points of H (stored with representatives in [0,1)^2)
FIXED_POINTS = (
    (ZERO, HALF),
    (HALF, ZERO),
    (HALF, HALF),
    (ZERO, ZERO),
)


def wrap1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def tent(t: Fraction) -> Fraction:
    """Piecewise-linear tent with slopes +-2: 2t on [0,1/2], 2(1-t) on [1/2,1]."""
    if not (0 <= t < 1):
        raise ValueError("tent expects t in [0,1)")
    return 2 * t if t <= HALF else 2 * (1 - t)


def tent_slope(t: Fraction) -> int:
    if t == HALF or t == 0:
        raise SingularityError("tent slope undefined at breakpoints")
    return 2 if t < HALF else -2


def make_point(x, y):
    return (wrap1(Fr(x)), wrap1(Fr(y)))


def apply_F(z):
    x, y = z
    return (wrap1(x + tent(y)), y)


def apply_F_inv(z):
    x, y = z
    return (wrap1(x - tent(y)), y)


def apply_G(z):
    x, y = z
    return (x, wrap1(y + tent(x)))


def apply_G_inv(z):
    x, y = z
    return (x, wrap1(y - tent(x)))


def apply_H(z):
    return apply_G(apply_F(z))


def apply_H_inv(z):
    return apply_F_inv(apply_G_inv(z))


def apply_H_n(z, n: int):
    if n >= 0:
        for _ in range(n):
            z = apply_H(z)
    else:
        for _ in range(-n):
            z = apply_H_inv(z)
    return z


def symmetry_T(z):
    """T(x,y) = (1-x, y+1/2) mod 1; an involution commuting with H."""
    x, y = z
    return (wrap1(1 - x), wrap1(y + HALF))


def symmetry_Tcal(z):
    """Tcal(x,y) = (1-y, 1-x) mod 1; an involution with Tcal o H^-1 = H o Tcal."""
    x, y = z
    return (wrap1(1 - y), wrap1(1 - x))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

BOUNDARY = "BOUNDARY"


def _quadrant(x: Fraction, y: Fraction):
    """Quadrant index of the S-partition, or None on a dividing line."""
    if x == 0 or x == HALF or y == 0 or y == HALF:
        return None
    if y < HALF:
        return 1 if x < HALF else 2
    return 3 if x < HALF else 4


def classify(z, side: str = "A"):
    """Containing open region on the requested side: 'A', 'S', or 'A'' .

    Returns a label like 'A2', 'S3', "A3'" or BOUNDARY for points on the
    dividing lines (BOUNDARY is a value, not an error).
    """
    x, y = z
    if side == "S":
        q = _quadrant(x, y)
        return BOUNDARY if q is None else f"S{q}"
    if side == "A":
        fx, fy = apply_F(z)
        q = _quadrant(fx, fy)
        return BOUNDARY if q is None else f"A{q}"
    if side in ("A'", "Aprime"):
        gx, gy = apply_G_inv(z)
        q = _quadrant(gx, gy)
        return BOUNDARY if q is None else f"A{q}'"
    raise ValueError(f"unknown side {side!r}")


def region_index(z, side: str = "A") -> int:
    """Like classify but returns 1..4, raising SingularityError on boundaries."""
    label = classify(z, side)
    if label == BOUNDARY:
        raise SingularityError(f"point {z} on the {side}-boundary")
    return int(label[1])


def jacobian(z) -> Mat2:
    return JACOBIANS[region_index(z, "A")]


def cocycle(z, n: int) -> Mat2:
    """Left-product of Jacobians along the orbit: M_{j_n} ... M_{j_1}."""
    M = IDENTITY
    for i in range(n):
        try:
            Mi = jacobian(z)
        except SingularityError:
            raise SingularityError(f"orbit hits a singularity at step {i}", index=i)
        M = Mi * M
        z = apply_H(z)
    return M


def itinerary(z, n: int):
    labels = []
    for i in range(n):
        label = classify(z, "A")
        if label == BOUNDARY:
            raise SingularityError(f"orbit hits a singularity at step {i}", index=i)
        labels.append(label)
        z = apply_H(z)
    return tuple(labels)


# ---------------------------------------------------------------------------
# the S / A / A' regions as exact polygon lists
# ---------------------------------------------------------------------------


def s_region(j: int):
    return {
        1: [geo.box(0, 0, HALF, HALF)],
        2: [geo.box(HALF, 0, 1, HALF)],
        3: [geo.box(0, HALF, HALF, 1)],
        4: [geo.box(HALF, HALF, 1, 1)],
    }[j]


_F_BRANCHES = (  # (halfplane side of y=1/2, M, t) for F
    ("le", Mat2(1, 2, 0, 1), (ZERO, ZERO)),
    ("ge", Mat2(1, -2, 0, 1), (Fr(2), ZERO)),
)
_G_BRANCHES = (  # branch by x <= 1/2 or x >= 1/2 for G
    ("le", Mat2(1, 0, 2, 1), (ZERO, ZERO)),
    ("ge", Mat2(1, 0, -2, 1), (ZERO, Fr(2))),
)


def _push_branches(region, branches, axis):
    """One shear step: clip at the branch line, apply the branch, wrap."""
    a, b = (ZERO, ONE) if axis == "y" else (ONE, ZERO)
    out = []
    for poly in region:
        for side, M, t in branches:
            piece = geo.clip_halfplane(poly, a, b, HALF, side)
            if piece is None:
                continue
            out.extend(geo.map_polygon(M, t, piece))
    return out


def push_F(region):
    return _push_branches(region, _F_BRANCHES, "y")


def push_G(region):
    return _push_branches(region, _G_BRANCHES, "x")


def push_H(region):
    return push_G(push_F(region))


_F_INV_BRANCHES = (
    ("le", Mat2(1, -2, 0, 1), (ZERO, ZERO)),
    ("ge", Mat2(1, 2, 0, 1), (Fr(-2), ZERO)),
)
_G_INV_BRANCHES = (
    ("le", Mat2(1, 0, -2, 1), (ZERO, ZERO)),
    ("ge", Mat2(1, 0, 2, 1), (ZERO, Fr(-2))),
)


def push_F_inv(region):
    return _push_branches(region, _F_INV_BRANCHES, "y")


def push_G_inv(region):
    return _push_branches(region, _G_INV_BRANCHES, "x")


def push_H_inv(region):
    return push_F_inv(push_G_inv(region))


def a_region(j: int):
    """A_j = F^{-1}(S_j) as exact polygons."""
    return push_F_inv(s_region(j))


def a_prime_region(j: int):
    """A'_j = G(S_j) as exact polygons."""
    return push_G(s_region(j))


def push_T(region):
    return geo.map_region(Mat2(-1, 0, 0, 1), (ONE, HALF), region)


def push_Tcal(region):
    return geo.map_region(Mat2(0, -1, -1, 0), (ONE, ONE), region)


# ---------------------------------------------------------------------------
# tracked affine pushforward of H (for escape-time partitions / cocycles)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrackedPiece:
    """A convex piece of phase space with the exact affine map accumulated
    along its orbit: current = M z + t for z in the original piece."""

    poly: tuple  # current-position polygon, inside [0,1)^2
    M: Mat2
    t: tuple

    def original_poly(self):
        Minv = self.M.inv()
        tx = -(Minv.a * self.t[0] + Minv.b * self.t[1])
        ty = -(Minv.c * self.t[0] + Minv.d * self.t[1])
        return geo.affine_poly(Minv, (tx, ty), self.poly)

    def map_point(self, z):
        x, y = z
        return (self.M.a * x + self.M.b * y + self.t[0], self.M.c * x + self.M.d * y + self.t[1])


def _split_axis_shift(poly, axis):
    """Split at integer lines of one axis; yield (piece_in_unit, int_shift)."""
    from math import ceil, floor

    idx = 0 if axis == "x" else 1
    vals = [p[idx] for p in poly]
    pieces = [poly]
    a, b = (ONE, ZERO) if axis == "x" else (ZERO, ONE)
    for k in range(floor(min(vals)) + 1, ceil(max(vals))):
        nxt = []
        for P in pieces:
            lo, hi = geo.clip_line_both(P, a, b, Fr(k))
            nxt.extend(p for p in (lo, hi) if p is not None)
        pieces = nxt
    for P in pieces:
        interior = geo.poly_interior_point(P)[idx]
        shift = -(interior.numerator // interior.denominator)
        if shift:
            if axis == "x":
                P = tuple((x + shift, y) for (x, y) in P)
            else:
                P = tuple((x, y + shift) for (x, y) in P)
        yield P, shift


def step_tracked(piece: TrackedPiece):
    """One H step applied to a tracked piece, splitting at branch and seam
    lines.  Yields (region_index, TrackedPiece) where region_index is the
    A-classification of the piece BEFORE the step (the branch actually used).
    """
    out = []
    for fside, MF, tF in _F_BRANCHES:
        part = geo.clip_halfplane(piece.poly, ZERO, ONE, HALF, fside)
        if part is None:
            continue
        img = geo.affine_poly(MF, tF, part)
        if img is None:
            continue
        for mid, sx in _split_axis_shift(img, "x"):
            for gside, MG, tG in _G_BRANCHES:
                sub = geo.clip_halfplane(mid, ONE, ZERO, HALF, gside)
                if sub is None:
                    continue
                j = {("le", "le"): 1, ("ge", "le"): 2, ("le", "ge"): 3, ("ge", "ge"): 4}[
                    (gside, fside)
                ]
                img2 = geo.affine_poly(MG, tG, sub)
                if img2 is None:
                    continue
                for final_piece, sy in _split_axis_shift(img2, "y"):
                    # one-step affine: w -> MG (MF w + tF + (sx,0)) + tG + (0,sy)
                    A = MG * MF
                    bx = MG.a * (tF[0] + sx) + MG.b * tF[1] + tG[0]
                    by = MG.c * (tF[0] + sx) + MG.d * tF[1] + tG[1] + sy
                    assert A == JACOBIANS[j]
                    Mnew = A * piece.M
                    tx = A.a * piece.t[0] + A.b * piece.t[1] + bx
                    ty = A.c * piece.t[0] + A.d * piece.t[1] + by
                    out.append((j, TrackedPiece(final_piece, Mnew, (tx, ty))))
    return out


# ---------------------------------------------------------------------------
# exact segment iteration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatSegment:
    """An open straight segment on the torus that does not cross a seam.

    Seam crossings are represented by splitting into multiple RatSegments.
    """

    p: tuple
    q: tuple

    def __post_init__(self):
        if self.p == self.q:
            raise DegenerateSegment("p == q")

    def direction(self):
        return (self.q[0] - self.p[0], self.q[1] - self.p[1])

    def ell_v(self) -> Fraction:
        return abs(self.q[1] - self.p[1])

    def ell_h(self) -> Fraction:
        return abs(self.q[0] - self.p[0])

    def point_at(self, t: Fraction):
        return (
            self.p[0] + t * (self.q[0] - self.p[0]),
            self.p[1] + t * (self.q[1] - self.p[1]),
        )


@dataclass(frozen=True)
class Strand:
    """A sub-interval [t0, t1] of a parent segment together with the exact
    affine map sending parent parameters to the current image:
    image(t) = M * parent(t) + shift for t in (t0, t1)."""

    t0: Fraction
    t1: Fraction
    M: Mat2
    shift: tuple

    def image(self, parent: RatSegment, t: Fraction):
        x, y = parent.point_at(t)
        return (
            self.M.a * x + self.M.b * y + self.shift[0],
            self.M.c * x + self.M.d * y + self.shift[1],
        )

    def image_endpoints(self, parent: RatSegment):
        return self.image(parent, self.t0), self.image(parent, self.t1)


def _split_params(p, q, a, b, c):
    """Parameters t in (0,1) where (1-t)p + tq crosses a*x + b*y = c."""
    fp = a * p[0] + b * p[1] - c
    fq = a * q[0] + b * q[1] - c
    if fp == fq:
        return []
    t = fp / (fp - fq)
    return [t] if 0 < t < 1 else []


def _segment_h_pieces(p, q):
    """One H step on the open segment (p, q) inside [0,1)^2.

    Returns a list of (t0, t1, M, shift) over sub-intervals of the segment's
    own parameter in increasing order; splits occur at the tent break y=1/2,
    at the post-F break x'=1/2, and at torus seams.
    """
    cuts = {ZERO, ONE}
    cuts.update(_split_params(p, q, ZERO, ONE, HALF))  # y = 1/2
    # x' = x + tent(y): piecewise; handle per y-branch after first split pass
    pieces = []
    ts = sorted(cuts)
    for i in range(len(ts) - 1):
        t0, t1 = ts[i], ts[i + 1]
        pieces.append((t0, t1))
    out = []
    for t0, t1 in pieces:
        out.extend(_segment_h_branch(p, q, t0, t1))
    return out


def _segment_h_branch(p, q, t0, t1):
    """H pieces over a sub-interval with a fixed F-branch."""

    def at(t):
        return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))

    mid = at((t0 + t1) / 2)
    if mid[1] == HALF:  # degenerate horizontal slice exactly on the break
        MF, tF = _F_BRANCHES[0][1], _F_BRANCHES[0][2]
    elif mid[1] < HALF:
        MF, tF = _F_BRANCHES[0][1], _F_BRANCHES[0][2]
    else:
        MF, tF = _F_BRANCHES[1][1], _F_BRANCHES[1][2]

    def f_image(t):
        x, y = at(t)
        return (MF.a * x + MF.b * y + tF[0], y)

    # split at x' = 1/2 (G branch line) and x' integer seams on this branch;
    # x'(t) = x0 + dx*(t - t0) is affine in the parent parameter
    x0 = f_image(t0)[0]
    dx = (q[0] - p[0]) + MF.b * (q[1] - p[1])
    cuts = {t0, t1}
    if dx != 0:
        for c in (HALF, ONE, Fr(3, 2)):
            t = t0 + (c - x0) / dx
            if t0 < t < t1:
                cuts.add(t)
    out = []
    ts = sorted(cuts)
    for i in range(len(ts) - 1):
        s0, s1 = ts[i], ts[i + 1]
        xm = x0 + dx * ((s0 + s1) / 2 - t0)
        sx = -(xm.numerator // xm.denominator)  # wrap x' into [0,1)
        xm_w = xm + sx
        if xm_w < HALF:
            MG, tG = _G_BRANCHES[0][1], _G_BRANCHES[0][2]
        else:
            MG, tG = _G_BRANCHES[1][1], _G_BRANCHES[1][2]
        A = MG * MF
        bx = MG.a * (tF[0] + sx) + tG[0]
        by = MG.c * (tF[0] + sx) + tG[1]
        # y'-seam split within this sub-branch
        def y_img(t):
            x, y = at(t)
            return A.c * x + A.d * y + by

        y0v, y1v = y_img(s0), y_img(s1)
        inner = {s0, s1}
        dyy = y1v - y0v
        for c in (ZERO, ONE, Fr(2)):
            if dyy != 0:
                t = s0 + (c - y0v) / dyy * (s1 - s0)
                if s0 < t < s1:
                    inner.add(t)
        its = sorted(inner)
        for k in range(len(its) - 1):
            u0, u1 = its[k], its[k + 1]
            ym = y_img((u0 + u1) / 2)
            sy = -(ym.numerator // ym.denominator)
            out.append((u0, u1, A, (bx, by + sy)))
    return out


def _advance_strands(parent: RatSegment, strands):
    """Apply one H step to every strand, keeping parameter order."""
    nxt = []
    for st in strands:
        a, b = st.image_endpoints(parent)
        for (u0, u1, A, shift) in _segment_h_pieces(a, b):
            # compose: new map on parent parameter sub-interval
            t0 = st.t0 + u0 * (st.t1 - st.t0)
            t1 = st.t0 + u1 * (st.t1 - st.t0)
            M = A * st.M
            sx = A.a * st.shift[0] + A.b * st.shift[1] + shift[0]
            sy = A.c * st.shift[0] + A.d * st.shift[1] + shift[1]
            nxt.append(Strand(t0, t1, M, (sx, sy)))
    nxt.sort(key=lambda s: s.t0)
    return nxt


def iterate_segment(seg: RatSegment, n: int):
    """Exact image of the segment under H^n as maximal straight pieces.

    Pieces are split at every singularity-line crossing of any intermediate
    iterate and at torus seams; the total height sum over pieces equals the
    height of the exact image set.
    """
    if seg.p == seg.q:
        raise DegenerateSegment("p == q")
    strands = [Strand(ZERO, ONE, IDENTITY, (ZERO, ZERO))]
    for _ in range(n):
        strands = _advance_strands(seg, strands)
    return [RatSegment(*st.image_endpoints(seg)) for st in strands if st.t0 != st.t1]


def segment_strands(seg: RatSegment, n: int):
    """Like iterate_segment but returns the strands (with maps and
    parameter intervals), for callers that need genealogy."""
    strands = [Strand(ZERO, ONE, IDENTITY, (ZERO, ZERO))]
    for _ in range(n):
        strands = _advance_strands(seg, strands)
    return strands


def maximal_straight_chains(parent: RatSegment, strands):
    """Group consecutive strands with identical affine data into maximal
    straight pieces of the current image (collinear and contiguous)."""
    chains = []
    cur = []
    for st in strands:
        if cur and (st.M == cur[-1].M and st.shift == cur[-1].shift and st.t0 == cur[-1].t1):
            cur.append(st)
        else:
            if cur:
                chains.append(cur)
            cur = [st]
    if cur:
        chains.append(cur)
    return chains
