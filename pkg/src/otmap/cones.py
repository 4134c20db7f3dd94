"""Cones as gradient sectors, cone images and containment, exact minimum and
maximum expansion factors under the sup and Euclidean norms, the closed-form
matrix families M_a * M_b^n, and the machine checks built on them:

  * the closed-form component/expansion table for the eight families,
  * the transition table of return-map Jacobian blocks with unstable and
    stable cone containment,
  * the singularity-gradient audit.

A cone is stored as a plus-minus symmetric pair of salient convex sectors:
C = hull(r1, r2) union -hull(r1, r2) for two integer direction vectors.
That representation is closed under invertible linear maps, which keeps
every check here an exact integer computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CertificateFailure, PreconditionViolated, ZeroVector
from .geometry import Fr
from .intervals import RInt, sqrt_interval
from .linalg import Mat2
from .report import Certificate
from .torusmap import M1, M2, M3, M4


def _ivec(v):
    x, y = v
    if isinstance(x, Fraction) or isinstance(y, Fraction):
        x, y = Fraction(x), Fraction(y)
        den = x.denominator * y.denominator
        return (int(x * den), int(y * den))
    return (int(x), int(y))


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class ConeQ:
    """Plus-minus symmetric cone spanned by two integer boundary rays.

    The point set is hull(r1, r2) union -hull(r1, r2) where hull is the set
    of nonnegative combinations.  Boundaries are closed.
    """

    r1: tuple
    r2: tuple

    def __post_init__(self):
        if _cross(self.r1, self.r2) == 0:
            raise ValueError("boundary rays are collinear")

    @staticmethod
    def from_gradients(g_lo, g_hi, sign):
        """Sector with g_lo <= |v2|/|v1| <= g_hi (g_hi may be None for
        infinity) and sign constraining v1*v2 (+1, -1, or 0 for both)."""
        g_lo = Fraction(g_lo)
        lo = (g_lo.denominator, g_lo.numerator)
        if g_hi is None:
            hi = (0, 1)
        else:
            g_hi = Fraction(g_hi)
            hi = (g_hi.denominator, g_hi.numerator)
        if sign > 0:
            return ConeQ(lo, hi)
        if sign < 0:
            return ConeQ((-lo[0], lo[1]), (-hi[0], hi[1]))
        if g_hi is not None:
            raise ValueError("sign=0 cones here require g_hi = infinity")
        # |v2| >= g_lo |v1|: convex, spanned by the two slanted rays
        return ConeQ(lo, (-lo[0], lo[1]))

    def _in_hull(self, v):
        c1 = _cross(self.r1, v)
        c2 = _cross(v, self.r2)
        c = _cross(self.r1, self.r2)
        if c < 0:
            c1, c2, c = -c1, -c2, -c
        return c1 >= 0 and c2 >= 0

    def contains_vec(self, v) -> bool:
        v = _ivec(v)
        if v == (0, 0):
            raise ZeroVector("cone membership of the zero vector")
        return self._in_hull(v) or self._in_hull((-v[0], -v[1]))

    def contains_cone(self, other: "ConeQ") -> bool:
        """Exact containment of the other cone in this one."""
        u1, u2 = other.r1, other.r2
        if self._in_hull(u1) and self._in_hull(u2):
            pass
        elif self._in_hull((-u1[0], -u1[1])) and self._in_hull((-u2[0], -u2[1])):
            u1 = (-u1[0], -u1[1])
        else:
            return False
        # both rays in the same convex component => the hull between them is
        # contained provided the component itself is convex, which it is
        # (salient sector), and the other hull does not wrap the long way:
        # salient hulls through two contained rays are automatically inside.
        return True

    def gradient_bounds(self):
        """(lo, hi) of |v2/v1| over the cone; hi is None when the cone
        touches the vertical axis."""
        grads = []
        vertical = False
        for r in (self.r1, self.r2):
            if r[0] == 0:
                vertical = True
            else:
                grads.append(abs(Fraction(r[1], r[0])))
        if vertical:
            return (min(grads) if grads else Fraction(0)), None
        return min(grads), max(grads)

    def sign(self):
        s1 = (1 if self.r1[0] * self.r1[1] > 0 else -1) if self.r1[0] * self.r1[1] else 0
        s2 = (1 if self.r2[0] * self.r2[1] > 0 else -1) if self.r2[0] * self.r2[1] else 0
        if s1 and s2 and s1 != s2:
            return 0
        return s1 or s2


def map_cone(M: Mat2, C: ConeQ) -> ConeQ:
    """Image cone: exact, since linear maps preserve positive hulls."""
    return ConeQ(M.apply(C.r1), M.apply(C.r2))


# the cones used throughout; phi = 21/13
PHI = Fr(21, 13)
CONE_C = ConeQ((13, 21), (-13, 21))           # |v2| >= phi |v1|
CONE_CP = ConeQ((13, 21), (1, 3))             # C_+: 3|v1| >= |v2| >= phi|v1|, v1 v2 > 0
CONE_CM = ConeQ((-13, 21), (-1, 3))           # C_-
CONE_1 = ConeQ((3, 7), (1, 3))                # 3 >= g >= 7/3, positive
CONE_2 = ConeQ((-13, 21), (-3, 5))            # 5/3 >= |g| >= phi, negative
CONE_3 = ConeQ((13, 21), (3, 5))              # 5/3 >= g >= phi, positive
CONE_4 = ConeQ((-3, 7), (-1, 3))              # 3 >= |g| >= 7/3, negative
CONE_S1 = ConeQ((1, 1), (1, -1))              # |v1| >= |v2|
CONE_S2 = ConeQ((10, 9), (5, -4))             # 9/10 >= v2/v1 >= -8/10
CONE_S3 = ConeQ((5, 4), (10, -9))             # 8/10 >= v2/v1 >= -9/10
CONE_S4 = CONE_S1
CONE_STABLE_WIDE = ConeQ((1, 1), (-1, 1))     # |v2| >= |v1| (alignment helper)
CONE_C_PRIME = ConeQ((21, 13), (21, -13))     # |v1| >= phi |v2|

UNSTABLE_CONES = {1: CONE_1, 2: CONE_2, 3: CONE_3, 4: CONE_4}
STABLE_CONES = {1: CONE_S1, 2: CONE_S2, 3: CONE_S3, 4: CONE_S4}


def cone_contains(C: ConeQ, v) -> bool:
    return C.contains_vec(v)


# ---------------------------------------------------------------------------
# expansion factors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExpansionResult:
    """Exact extremal expansion factor of a matrix over a cone.

    value_sq is the exact squared factor when it is rational (always for the
    sup norm, and for the Euclidean norm when the extremum is attained at a
    rational gradient); enclosure brackets the factor itself either way.
    """

    norm: str
    kind: str  # 'min' or 'max'
    value_sq: Fraction | None
    enclosure: RInt
    attained_gradient: Fraction | None  # None when attained interior/irrational

    @property
    def value(self) -> Fraction | None:
        """Exact value when value_sq is a perfect rational square, else None."""
        if self.value_sq is None:
            return None
        from math import isqrt

        n, d = self.value_sq.numerator, self.value_sq.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fr(rn, rd)
        return None


def _sup_norm_factor_candidates(M: Mat2, C: ConeQ):
    """Exact candidate values of ||Mv||_inf / ||v||_inf over the cone.

    Precondition: the cone lies in |v2| >= |v1| so vectors normalize to
    (v1, 1) with |v1| <= 1, and ||v||_inf = |v2|;  v1 runs over the interval
    of (signed) x/y for the boundary rays.
    """
    xs = []
    for r in (C.r1, C.r2):
        x, y = r
        if y == 0 or abs(y) < abs(x):
            raise PreconditionViolated("sup-norm rule needs the cone inside |v2| >= |v1|")
        if y < 0:
            x, y = -x, -y
        xs.append(Fr(x, y))
    lo, hi = min(xs), max(xs)
    A = lambda v1: M.a * v1 + M.b  # first image component on (v1, 1)
    B = lambda v1: M.c * v1 + M.d  # second image component
    cands = {lo, hi}
    # |A| = |B| crossings and zeros of A, B
    for num, den in (
        (M.d - M.b, M.a - M.c),
        (-(M.b + M.d), M.a + M.c),
        (-M.b, M.a),
        (-M.d, M.c),
    ):
        if den != 0:
            t = Fr(num, den)
            if lo < t < hi:
                cands.add(t)
    vals = [(max(abs(A(t)), abs(B(t))), t) for t in sorted(cands)]
    return vals


def min_expansion(M: Mat2, C: ConeQ, norm: str = "sup") -> ExpansionResult:
    return _expansion(M, C, norm, "min")


def max_expansion(M: Mat2, C: ConeQ, norm: str = "sup") -> ExpansionResult:
    return _expansion(M, C, norm, "max")


def _expansion(M: Mat2, C: ConeQ, norm: str, kind: str) -> ExpansionResult:
    pick = min if kind == "min" else max
    if norm == "sup":
        vals = _sup_norm_factor_candidates(M, C)
        best, grad = pick(vals, key=lambda p: p[0])
        vsq = best * best
        return ExpansionResult(norm, kind, vsq, RInt(best, best), grad)
    if norm != "euclid":
        raise ValueError("norm must be 'sup' or 'euclid'")
    return _euclid_expansion(M, C, kind)


def _euclid_expansion(M: Mat2, C: ConeQ, kind: str) -> ExpansionResult:
    """Extremum of ||Mv||^2 / ||v||^2 over the cone, exact.

    With v = (1, m), f(m) = (A m^2 + B m + Cc)/(1 + m^2).  Extrema occur at
    the boundary gradients of the cone or at interior critical gradients
    (roots of a rational quadratic); the critical values themselves are the
    roots of y^2 - (A+Cc) y + (A*Cc - B^2/4) = 0, which gives certified
    enclosures when the attaining gradient is irrational.
    """
    a, b, c, d = M.a, M.b, M.c, M.d
    A = Fr(b * b + d * d)
    B = Fr(2 * (a * b + c * d))
    Cc = Fr(a * a + c * c)

    def f(m):
        return (A * m * m + B * m + Cc) / (1 + m * m)

    ms = []
    for r in (C.r1, C.r2):
        if r[0] == 0:
            raise PreconditionViolated("euclidean expansion needs gradient-bounded cones")
        ms.append(Fr(r[1], r[0]))
    lo, hi = min(ms), max(ms)
    pick = min if kind == "min" else max
    candidates = [(RInt.exact(f(g)), f(g), g) for g in (lo, hi)]

    # critical gradients: roots of Q(m) = qa m^2 + qb m - qa
    qa = Fr(a * b + c * d)
    qb = Cc - A
    if qa == 0:
        if qb != 0:
            root = Fr(0)  # Q(m) = qb * m
            if lo < root < hi:
                candidates.append((RInt.exact(f(root)), f(root), root))
    else:
        disc = qb * qb + 4 * qa * qa  # qc = -qa, so disc = qb^2 + 4 qa^2 > 0
        sq = sqrt_interval(disc, 80)
        # critical values: y = ((A+Cc) +- sqrt((A-Cc)^2 + B^2)) / 2
        vdisc = sqrt_interval((A - Cc) ** 2 + B * B, 80)
        y_branch = {
            -1: RInt((A + Cc - vdisc.hi) / 2, (A + Cc - vdisc.lo) / 2),
            +1: RInt((A + Cc + vdisc.lo) / 2, (A + Cc + vdisc.hi) / 2),
        }
        for s in (1, -1):
            ends = (-qb + s * sq.lo, -qb + s * sq.hi)
            root = RInt(min(ends), max(ends)) / RInt.exact(2 * qa)
            if root.hi <= lo or root.lo >= hi:
                continue  # provably outside
            if not (lo < root.lo and root.hi < hi):
                raise PreconditionViolated(
                    "critical gradient enclosure straddles a cone boundary"
                )
            # decide which branch this root attains by sampling exactly
            sample = f(root.midpoint())
            d_minus = abs(sample - y_branch[-1].midpoint())
            d_plus = abs(sample - y_branch[+1].midpoint())
            branch = -1 if d_minus < d_plus else +1
            candidates.append((y_branch[branch], None, None))

    best = pick(candidates, key=lambda t: t[0].midpoint())
    enc_sq, exact_sq, grad = best
    enc = enc_sq.sqrt(40)
    return ExpansionResult("euclid", kind, exact_sq, enc, grad)


# ---------------------------------------------------------------------------
# closed-form families M_a * M_b^n and their minimum expansion factors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatFamily:
    """A family base * gen^n with closed-form components and closed-form
    minimum sup-norm expansion factors over C_+ and C_-."""

    name: str
    base: Mat2
    gen: Mat2 | None  # None: constant family (n ignored)
    comp: object      # n -> Mat2
    kplus: object     # n -> Fraction
    kminus: object    # n -> Fraction

    def matrix(self, n: int) -> Mat2:
        if self.gen is None:
            return self.base
        return self.base * self.gen ** n

    def limit_direction(self):
        """Image of the generator's parabolic eigendirection (the n -> inf
        alignment of the family), or None for constant families."""
        if self.gen is None:
            return None
        u = (1, -1) if self.gen == M2 else (1, 1)
        return self.base.apply(u)


def _sgn_pow(n):
    return -1 if n % 2 else 1


TABLE2_FAMILIES = (
    MatFamily(
        "M1", M1, None,
        lambda n: M1,
        lambda n: Fr(17, 3), lambda n: Fr(79, 21),
    ),
    MatFamily(
        "M4", M4, None,
        lambda n: M4,
        lambda n: Fr(79, 21), lambda n: Fr(17, 3),
    ),
    MatFamily(
        "M1M2^n", M1, M2,
        lambda n: Mat2(*(x * _sgn_pow(n) for x in (2 * n + 1, 2 * n + 2, 6 * n + 2, 6 * n + 5))),
        lambda n: 8 * n + Fr(17, 3), lambda n: Fr(16 * n, 7) + Fr(79, 21),
    ),
    MatFamily(
        "M1M3^n", M1, M3,
        lambda n: Mat2(*(x * _sgn_pow(n) for x in (1 - 6 * n, 6 * n + 2, 2 - 14 * n, 14 * n + 5))),
        lambda n: Fr(16 * n, 3) + Fr(131, 21), lambda n: Fr(56 * n, 3) + Fr(13, 3),
    ),
    MatFamily(
        "M2M3^n", M2, M3,
        lambda n: Mat2(*(x * _sgn_pow(n) for x in (1 - 6 * n, 6 * n + 2, 10 * n - 2, -10 * n - 3))),
        lambda n: Fr(80 * n, 21) + Fr(89, 21), lambda n: Fr(40 * n, 3) + Fr(7, 3),
    ),
    MatFamily(
        "M3M2^n", M3, M2,
        lambda n: Mat2(*(x * _sgn_pow(n) for x in (1 - 6 * n, -6 * n - 2, 2 - 10 * n, -10 * n - 3))),
        lambda n: Fr(40 * n, 3) + Fr(7, 3), lambda n: Fr(80 * n, 21) + Fr(89, 21),
    ),
    MatFamily(
        "M4M2^n", M4, M2,
        lambda n: Mat2(*(x * _sgn_pow(n) for x in (1 - 6 * n, -6 * n - 2, 14 * n - 2, 14 * n + 5))),
        lambda n: Fr(56 * n, 3) + Fr(13, 3), lambda n: Fr(16 * n, 3) + Fr(131, 21),
    ),
    MatFamily(
        "M4M3^n", M4, M3,
        lambda n: Mat2(*(x * _sgn_pow(n) for x in (2 * n + 1, -2 * n - 2, -6 * n - 2, 6 * n + 5))),
        lambda n: Fr(16 * n, 7) + Fr(79, 21), lambda n: 8 * n + Fr(17, 3),
    ),
)


def family(name: str) -> MatFamily:
    for fam in TABLE2_FAMILIES:
        if fam.name == name:
            return fam
    raise KeyError(name)


def k_plus(name: str, n: int = 1) -> Fraction:
    return family(name).kplus(n)


def table2_verify(n_max: int = 200) -> Certificate:
    """Closed-form components and K_+- match direct computation exactly."""
    cert = Certificate(
        "expansion-table",
        "closed-form family components and minimum sup-norm expansion factors",
    )
    for fam in TABLE2_FAMILIES:
        ns = (1,) if fam.gen is None else range(1, n_max + 1)
        direct = fam.base
        prev_kp = prev_km = None
        for n in ns:
            if fam.gen is not None:
                direct = direct * fam.gen
            comp = fam.comp(n)
            if comp != direct:
                cert.fail("components", family=fam.name, n=n,
                          expected=repr(comp), got=repr(direct))
                continue
            kp = min_expansion(direct, CONE_CP, "sup")
            km = min_expansion(direct, CONE_CM, "sup")
            kp_v, km_v = kp.value, km.value
            if kp_v != fam.kplus(n):
                cert.fail("K_plus", family=fam.name, n=n,
                          expected=fam.kplus(n), got=kp_v)
            if km_v != fam.kminus(n):
                cert.fail("K_minus", family=fam.name, n=n,
                          expected=fam.kminus(n), got=km_v)
            if prev_kp is not None and (kp_v < prev_kp or km_v < prev_km):
                cert.fail("monotone", family=fam.name, n=n)
            prev_kp, prev_km = kp_v, km_v
        cert.ok("family", family=fam.name, n_max=n_max if fam.gen else 1)
    # expanding cone: every family member expands on C by min(K+, K-) > 1
    worst = None
    for fam in TABLE2_FAMILIES:
        for n in (1,) if fam.gen is None else range(1, n_max + 1):
            k = min(fam.kplus(n), fam.kminus(n))
            worst = k if worst is None else min(worst, k)
    cert.require(worst is not None and worst > 1, "uniform-expansion", min_factor=worst)
    return cert


def min_expansion_constant() -> Fraction:
    """min over the family table of min(K_+, K_-): the uniform expansion
    constant of the invariant cone (attained by the constant members)."""
    vals = []
    for fam in TABLE2_FAMILIES:
        for n in (1, 2, 3):
            vals.append(min(fam.kplus(n), fam.kminus(n)))
    return min(vals)


# ---------------------------------------------------------------------------
# return-map transition table and cone invariance
# ---------------------------------------------------------------------------

# possible Jacobian blocks of the return map between source and target parts
# of sigma;  'fam' entries sweep the exponent k = 1..N
TRANSITIONS = {
    (1, 1): [("const", M1, "M1")],
    (1, 3): [("fam", (M3, M2), "M3M2^k")],
    (1, 4): [("const", M4, "M4"), ("fam", (M4, M2), "M4M2^k"), ("fam", (M4, M3), "M4M3^k")],
    (2, 3): [("const", M3, "M3"), ("const", M3 * M2, "M3M2"), ("const", M3 * M2 * M2, "M3M2^2")],
    (2, 4): [("const", M4, "M4"), ("const", M4 * M2, "M4M2"), ("const", M4 * M2 * M2, "M4M2^2")],
    (3, 1): [("const", M1, "M1"), ("const", M1 * M3, "M1M3"), ("const", M1 * M3 * M3, "M1M3^2")],
    (3, 2): [("const", M2, "M2"), ("const", M2 * M3, "M2M3"), ("const", M2 * M3 * M3, "M2M3^2")],
    (4, 1): [("const", M1, "M1"), ("fam", (M1, M2), "M1M2^k"), ("fam", (M1, M3), "M1M3^k")],
    (4, 2): [("fam", (M2, M3), "M2M3^k")],
    (4, 4): [("const", M4, "M4")],
}


def _transition_mats(entry, n_max):
    kind, data, name = entry
    if kind == "const":
        yield name, data
        return
    base, gen = data
    cur = base
    for k in range(1, n_max + 1):
        cur = cur * gen
        yield f"{name}[k={k}]", cur


def verify_transition_table(n_max: int = 200) -> Certificate:
    """Unstable cones map into unstable cones and stable cones pull back into
    stable cones along every admissible transition, including the family
    limit directions."""
    cert = Certificate(
        "return-jacobian-transitions",
        "cone invariance of the return-map Jacobian blocks",
    )
    for (i, j), entries in sorted(TRANSITIONS.items()):
        for entry in entries:
            for name, M in _transition_mats(entry, n_max):
                img = map_cone(M, UNSTABLE_CONES[i])
                if not UNSTABLE_CONES[j].contains_cone(img):
                    cert.fail("unstable", source=i, target=j, matrix=name,
                              rays=[img.r1, img.r2])
                back = map_cone(M.inv(), STABLE_CONES[j])
                if not STABLE_CONES[i].contains_cone(back):
                    cert.fail("stable", source=i, target=j, matrix=name,
                              rays=[back.r1, back.r2])
            if entry[0] == "fam":
                base, gen = entry[1]
                u = (1, -1) if gen == M2 else (1, 1)
                limit = base.apply(u)
                if not UNSTABLE_CONES[j].contains_vec(limit):
                    cert.fail("unstable-limit", source=i, target=j,
                              matrix=entry[2], direction=list(limit))
        cert.ok("transition", source=i, target=j, entries=len(entries))

    # spot checks from the cone-invariance calculations
    for k in range(1, n_max + 1):
        v1 = (M2 * M3 ** k).apply((-1, 3))
        expect1 = tuple(x * _sgn_pow(k) for x in (24 * k + 5, -40 * k - 7))
        v2 = (M2 * M3 ** k).apply((-3, 7))
        expect2 = tuple(x * _sgn_pow(k) for x in (60 * k + 11, -100 * k - 15))
        if v1 != expect1 or not CONE_2.contains_vec(v1):
            cert.fail("boundary-image-1", k=k, got=list(v1))
        if v2 != expect2 or not CONE_2.contains_vec(v2):
            cert.fail("boundary-image-2", k=k, got=list(v2))
    cert.ok("sigma4-to-sigma2-boundary-images", swept=n_max)
    cert.require(M2.apply((3, 5)) == (13, -21) and CONE_2.contains_vec((13, -21)),
                 "M2-on-(3,5)", image=[13, -21])
    cert.require(CONE_2.contains_vec(M2.apply((13, 21))),
                 "M2-on-(13,21)", image=list(M2.apply((13, 21))))

    # uniform stable expansion: min over all blocks of the euclidean minimum
    # expansion of M^{-1} over the target stable cone equals 85/41 (squared),
    # attained by M2^{-1} on the gradient -8/10 boundary.
    worst = None
    witness = None
    for (i, j), entries in sorted(TRANSITIONS.items()):
        for entry in entries:
            for name, M in _transition_mats(entry, min(n_max, 50)):
                res = min_expansion(M.inv(), STABLE_CONES[j], "euclid")
                val = res.value_sq if res.value_sq is not None else res.enclosure.lo ** 2
                if worst is None or val < worst:
                    worst, witness = val, name
    cert.require(worst == Fr(85, 41), "stable-min-expansion-sq",
                 value=worst, attained_by=witness)
    return cert


# ---------------------------------------------------------------------------
# singularity gradient audit
# ---------------------------------------------------------------------------

ALL_CONES = {
    "u1": CONE_1, "u2": CONE_2, "u3": CONE_3, "u4": CONE_4,
    "s1": CONE_S1, "s2": CONE_S2, "s3": CONE_S3, "s4": CONE_S4,
}


def _gradient_of_line(key):
    a, b, _ = key
    if b == 0:
        return None  # vertical
    return Fr(-a, b)


def singularity_gradient_audit(sigma0_lines, per_sigma_lines) -> Certificate:
    """Audit the singularity-line inventories produced by the return-map
    module.

    sigma0_lines: line keys (a, b, c) of the boundary of sigma and of the
    shared boundaries between its four parts; gradients must lie in
    {+-8/5, +-2, vertical} and avoid every unstable and stable cone.

    per_sigma_lines: dict j -> line keys of the return-map singularity set
    inside sigma_j; gradients must satisfy |m| <= 1 for j in {1, 4} and
    |m| <= 11/14 for j in {2, 3}.
    """
    cert = Certificate(
        "singularity-gradients",
        "gradients of the return-map singularity lines",
    )
    allowed = {Fr(8, 5), Fr(-8, 5), Fr(2), Fr(-2)}
    for key in sorted(set(sigma0_lines)):
        g = _gradient_of_line(key)
        if g is None:
            continue
        if g not in allowed:
            cert.fail("sigma-boundary-gradient", line=list(key), gradient=g)
            continue
        direction = (g.denominator, g.numerator)
        for cname, cone in ALL_CONES.items():
            if cone.contains_vec(direction):
                cert.fail("sigma-boundary-in-cone", line=list(key), cone=cname)
    cert.ok("sigma-boundary", lines=len(set(sigma0_lines)))
    bounds = {1: Fr(1), 4: Fr(1), 2: Fr(11, 14), 3: Fr(11, 14)}
    for j, keys in sorted(per_sigma_lines.items()):
        worst = Fr(0)
        for key in sorted(set(keys)):
            g = _gradient_of_line(key)
            if g is None:
                cert.fail("interior-vertical-line", sigma=j, line=list(key))
                continue
            worst = max(worst, abs(g))
            if abs(g) > bounds[j]:
                cert.fail("interior-gradient-bound", sigma=j, line=list(key),
                          gradient=g, bound=bounds[j])
        cert.ok("interior-gradients", sigma=j, lines=len(set(keys)), max_abs_gradient=worst)
    return cert
