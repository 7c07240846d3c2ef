"""Genus-2 curve geometry: the tricanonical embedding in P^4, secant
construction of the six-node quartic in the invariant hyperplane, the
quadrics through the curve and its classifying map to the sixteen-node
quartic, and the degree-8 secant hypersurface.

Everything runs verbatim over a prime field (all incidences exact) or over
complex floats (checks against tolerances).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fields import CC, ComplexField, Domain, PrimeField
from .linalg import (FitResult, fit_hypersurface, nullspace,
                     nullspace_complex, rank)
from .poly import SparsePoly, exponents_of_degree


class ChartError(ValueError):
    pass


class DegenerateSecant(ValueError):
    pass


class BaseLocusPoint(ValueError):
    pass


@dataclass(frozen=True)
class CurvePoint:
    x: object
    y: object
    at_infinity: bool = False
    infinity_sign: int = 1

    @property
    def is_weierstrass(self):
        return (not self.at_infinity) and not self.y


class GenusTwoCurve:
    """y^2 = f(x) with f a squarefree sextic; roots kept when split."""

    def __init__(self, domain: Domain, coeffs=None, roots=None):
        self.domain = domain
        if roots is not None:
            roots = [domain.coerce(r) for r in roots]
            if len(roots) != 6:
                raise ValueError("need six roots")
            coeffs = [domain.one()]
            for r in roots:
                coeffs = _poly_mul_linear(coeffs, r, domain)
            self.roots = roots
        else:
            self.roots = None
        if coeffs is None or len(coeffs) != 7:
            raise ValueError("need a degree-6 polynomial")
        self.coeffs = [domain.coerce(c) for c in coeffs]  # ascending powers
        if domain.is_zero(self.coeffs[6]):
            raise ValueError("leading coefficient vanishes")
        if domain.is_exact and _discriminant_is_zero(self.coeffs, domain):
            raise ValueError("sextic has a repeated root")

    def f(self, x):
        acc = self.domain.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def point(self, x, y) -> CurvePoint:
        x = self.domain.coerce(x)
        y = self.domain.coerce(y)
        lhs = y * y - self.f(x)
        if self.domain.is_exact:
            if not self.domain.is_zero(lhs):
                raise ValueError("point is not on the curve")
        elif abs(complex(lhs)) > 1e-8:
            raise ValueError("point is not on the curve")
        return CurvePoint(x, y)

    def weierstrass_points(self):
        if self.roots is None:
            raise ValueError("curve was not built from a split sextic")
        return [CurvePoint(r, self.domain.zero()) for r in self.roots]

    def involution(self, p: CurvePoint) -> CurvePoint:
        if p.at_infinity:
            return CurvePoint(None, None, True, -p.infinity_sign)
        return CurvePoint(p.x, -p.y)

    def sample_point(self, rng, avoid_weierstrass=True) -> CurvePoint:
        dom = self.domain
        if isinstance(dom, PrimeField):
            while True:
                x = dom.random(rng)
                v = self.f(x)
                if dom.is_zero(v):
                    if avoid_weierstrass:
                        continue
                    return CurvePoint(x, dom.zero())
                if pow(v.val, (dom.p - 1) // 2, dom.p) != 1:
                    continue
                y = dom.sqrt(v)
                if rng.random() < 0.5:
                    y = -y
                return CurvePoint(x, y)
        if isinstance(dom, ComplexField):
            import cmath
            x = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            y = cmath.sqrt(complex(self.f(x)))
            if rng.random() < 0.5:
                y = -y
            return CurvePoint(x, y)
        raise ValueError("sampling needs a prime field or complex domain")


def _poly_mul_linear(coeffs, root, domain):
    """(x - root) times the ascending-coefficient polynomial."""
    out = [domain.zero()] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] = out[i + 1] + c
        out[i] = out[i] - root * c
    return out


def _discriminant_is_zero(coeffs, domain) -> bool:
    """gcd(f, f') nontrivial, by the Euclidean algorithm over the field."""
    n = len(coeffs) - 1
    f = list(coeffs)
    fp = [domain.from_int(i) * coeffs[i] for i in range(1, n + 1)]

    def degree(p):
        for i in range(len(p) - 1, -1, -1):
            if not domain.is_zero(p[i]):
                return i
        return -1

    def rem(a, b):
        a = list(a)
        db = degree(b)
        while degree(a) >= db >= 0:
            da = degree(a)
            q = a[da] / b[db]
            for i in range(db + 1):
                a[da - db + i] = a[da - db + i] - q * b[i]
            a = a[:degree(a) + 1] if degree(a) >= 0 else [domain.zero()]
        return a

    a, b = f, fp
    while degree(b) > 0:
        a, b = b, rem(a, b)
    return degree(b) == -1


# ---------------------------------------------------------------------------
# the tricanonical embedding


def tricanonical(p: CurvePoint, domain: Domain):
    """(1, x, x^2, x^3, y); the two points at infinity land in the second
    chart as (0, 0, 0, 1, +-1) for a monic sextic."""
    if p.at_infinity:
        one = domain.one()
        return (domain.zero(), domain.zero(), domain.zero(), one,
                one if p.infinity_sign == 1 else -one)
    if p.x is None:
        raise ChartError("affine chart asked for a point without coordinates")
    x = domain.coerce(p.x)
    return (domain.one(), x, x * x, x * x * x, domain.coerce(p.y))


def secant_point(p: CurvePoint, q: CurvePoint, domain: Domain):
    """Intersection of the embedded secant line with the invariant
    hyperplane {last coordinate = 0}: y_q P - y_p Q, first four entries."""
    if p == q:
        raise DegenerateSecant("need two distinct points")
    P = tricanonical(p, domain)
    Q = tricanonical(q, domain)
    yp, yq = P[4], Q[4]
    v = tuple(yq * a - yp * b for a, b in zip(P[:4], Q[:4]))
    if all(domain.is_zero(c) for c in v) or (domain.is_zero(yp) and domain.is_zero(yq)):
        raise DegenerateSecant("secant through two fixed points lies in the hyperplane")
    return v


def weierstrass_images(curve: GenusTwoCurve):
    return [tricanonical(w, curve.domain)[:4] for w in curve.weierstrass_points()]


def sample_secant_points(curve: GenusTwoCurve, rng, count: int):
    out = []
    while len(out) < count:
        p = curve.sample_point(rng)
        q = curve.sample_point(rng)
        try:
            out.append(secant_point(p, q, curve.domain))
        except DegenerateSecant:
            continue
    return out


# ---------------------------------------------------------------------------
# line utilities over an arbitrary field


def plane_through(points, domain: Domain):
    if domain is CC or isinstance(domain, ComplexField):
        basis, _ = nullspace_complex(np.array([[complex(x) for x in p] for p in points]))
        if len(basis) != 1:
            raise ValueError("points do not span a plane")
        return list(basis[0])
    basis = nullspace([list(p) for p in points], domain)
    if len(basis) != 1:
        raise ValueError("points do not span a plane")
    return basis[0]


def line_from_planes(n1, n2, domain: Domain):
    if domain is CC or isinstance(domain, ComplexField):
        basis, _ = nullspace_complex(np.array([n1, n2], dtype=complex))
        if len(basis) != 2:
            raise ValueError("planes do not meet in a line")
        return list(basis[0]), list(basis[1])
    basis = nullspace([list(n1), list(n2)], domain)
    if len(basis) != 2:
        raise ValueError("planes do not meet in a line")
    return basis[0], basis[1]


def restrict_to_line(form: SparsePoly, u, v, domain: Domain) -> SparsePoly:
    """The binary form form(s u + t v)."""
    forms = []
    for k in range(form.nvars):
        terms = {}
        if not domain.is_zero(domain.coerce(u[k])):
            terms[(1, 0)] = domain.coerce(u[k])
        if not domain.is_zero(domain.coerce(v[k])):
            terms[(0, 1)] = domain.coerce(v[k])
        forms.append(SparsePoly(2, domain, terms))
    return form.substitute_linear(forms)


def line_in_hypersurface(form: SparsePoly, u, v, domain: Domain,
                         tol: float = 1e-6):
    """Exact for exact domains; relative coefficient bound for floats."""
    restricted = restrict_to_line(form, u, v, domain)
    if domain.is_exact:
        return restricted.is_zero(), 0.0
    if restricted.is_zero():
        return True, 0.0
    fn = math.sqrt(sum(abs(complex(c)) ** 2 for c in form.terms.values()))
    un = max(abs(complex(x)) for x in u)
    vn = max(abs(complex(x)) for x in v)
    scale = fn * max(un, vn) ** form.total_degree() * 16
    worst = max(abs(complex(c)) for c in restricted.terms.values()) / scale
    return worst < tol, worst


# ---------------------------------------------------------------------------
# the six-node quartic from secants


@dataclass
class WeddleCurveReport:
    quartic: SparsePoly
    nodes: list
    fit_nullity: int
    nodes_singular: bool
    line_results: list
    rigidity_nullity: int
    rigidity_matches: bool


def ten_triple_lines(nodes, domain: Domain):
    from itertools import combinations
    out = []
    seen = set()
    for tri in combinations(range(6), 3):
        comp = tuple(sorted(set(range(6)) - set(tri)))
        key = min(tri, comp)
        if key in seen:
            continue
        seen.add(key)
        n1 = plane_through([nodes[i] for i in tri], domain)
        n2 = plane_through([nodes[i] for i in comp], domain)
        out.append(line_from_planes(n1, n2, domain))
    return out


def fifteen_node_lines(nodes):
    out = []
    for i in range(6):
        for j in range(i + 1, 6):
            out.append((list(nodes[i]), list(nodes[j])))
    return out


def weddle_prime_fit(curve: GenusTwoCurve, rng, samples: int = 70) -> WeddleCurveReport:
    """The unique quartic through secant-hyperplane samples; singular at
    the six embedded branch points and containing all 25 classical lines."""
    domain = curve.domain
    pts = sample_secant_points(curve, rng, samples)
    fit = fit_hypersurface(pts, 4, domain)
    if len(fit.forms) != 1:
        pts = sample_secant_points(curve, rng, 2 * samples)
        fit = fit_hypersurface(pts, 4, domain)
    if len(fit.forms) != 1:
        raise RuntimeError("quartic fit nullity %d" % len(fit.forms))
    W = fit.forms[0]
    nodes = weierstrass_images(curve)
    grads = [W.partial(i) for i in range(4)]
    singular = True
    for n in nodes:
        for g in grads:
            val = g.evaluate(list(n))
            if domain.is_exact:
                singular &= domain.is_zero(val)
            else:
                singular &= abs(complex(val)) < 1e-5
    lines = fifteen_node_lines(nodes) + ten_triple_lines(nodes, domain)
    line_results = [line_in_hypersurface(W, u, v, domain) for u, v in lines]
    rig_nullity, rig_match = _rigidity(lines, W, domain)
    return WeddleCurveReport(W, nodes, len(fit.forms), singular, line_results,
                             rig_nullity, rig_match)


def _rigidity(lines, W: SparsePoly, domain: Domain, points_per_line: int = 5):
    """Quartics through all the given lines: dimension and agreement."""
    pts = []
    for u, v in lines:
        for k in range(points_per_line):
            t = domain.from_int(k + 1) if domain.is_exact else (k + 1.0)
            pt = [a + t * b for a, b in zip(u, v)]
            pts.append(pt)
    fit = fit_hypersurface(pts, 4, domain)
    if len(fit.forms) != 1:
        return len(fit.forms), False
    G = fit.forms[0]
    if domain.is_exact:
        ratio = None
        agree = True
        for e in set(G.terms) | set(W.terms):
            a, b = G.terms.get(e), W.terms.get(e)
            if (a is None) != (b is None):
                agree = False
                break
            if a is None:
                continue
            r = a / b
            if ratio is None:
                ratio = r
            elif r != ratio:
                agree = False
                break
        return 1, agree
    exps = exponents_of_degree(4, 4)
    from .linalg import chordal_distance
    a = np.array([complex(G.terms.get(e, 0j)) for e in exps])
    b = np.array([complex(W.terms.get(e, 0j)) for e in exps])
    return 1, chordal_distance(a, b) < 1e-6


# ---------------------------------------------------------------------------
# quadrics through the curve and the classifying map


def sample_curve_points(curve: GenusTwoCurve, rng, count: int):
    return [tricanonical(curve.sample_point(rng), curve.domain)
            for _ in range(count)]


def quadrics_through_curve(curve: GenusTwoCurve, rng, samples: int = 45) -> FitResult:
    """The space of quadrics in P^4 vanishing on the embedded curve; its
    dimension must be 4."""
    pts = sample_curve_points(curve, rng, samples)
    fit = fit_hypersurface(pts, 2, curve.domain)
    if len(fit.forms) != 4:
        raise RuntimeError("quadrics through the curve have dimension %d"
                           % len(fit.forms))
    return fit


def quadric_restriction_check(curve: GenusTwoCurve, quadrics) -> dict:
    """Restricting the four curve quadrics to the invariant hyperplane is
    injective, and the image spans exactly the quadrics through the six
    branch-point images (dimension 10 - 6 = 4)."""
    domain = curve.domain
    exps4 = exponents_of_degree(4, 2)
    restricted = []
    for q in quadrics:
        r = SparsePoly(4, domain)
        for e, c in q.terms.items():
            if e[4] == 0:
                r.terms[e[:4]] = c
        restricted.append(r)
    rows = [[q.terms.get(e, domain.zero()) for e in exps4] for q in restricted]
    inj = rank(rows, domain) == 4
    nodes = weierstrass_images(curve)
    vanish = all(domain.is_zero(q.evaluate(list(n))) if domain.is_exact
                 else abs(complex(q.evaluate(list(n)))) < 1e-8
                 for q in restricted for n in nodes)
    target = fit_hypersurface([list(n) for n in nodes], 2, domain)
    dim_target = len(target.forms)
    trows = [[q.terms.get(e, domain.zero()) for e in exps4] for q in target.forms]
    stacked = rows + trows
    same_span = rank(stacked, domain) == 4 if domain.is_exact else None
    return {"injective": inj, "vanish_at_nodes": vanish,
            "target_dimension": dim_target, "same_span": same_span}


def phi(quadrics, point, domain: Domain):
    """Evaluate the four curve quadrics; the base locus is the curve."""
    vals = [q.evaluate(list(point)) for q in quadrics]
    if domain.is_exact:
        if all(domain.is_zero(v) for v in vals):
            raise BaseLocusPoint("point lies on the base curve")
    elif max(abs(complex(v)) for v in vals) < 1e-12:
        raise BaseLocusPoint("point lies on the base curve")
    return tuple(vals)


def weierstrass_tangent_sample(curve: GenusTwoCurve, i: int, t):
    """A point on the tangent line to the embedded curve at the i-th
    branch point: the tangent direction there is the last coordinate."""
    w = curve.weierstrass_points()[i]
    P = tricanonical(w, curve.domain)
    t = curve.domain.coerce(t)
    return (P[0], P[1], P[2], P[3], t)


@dataclass
class KummerReport:
    quartic: SparsePoly
    nodes: list
    fit_nullity: int
    nodes_distinct: bool
    nodes_singular: bool
    origin_node_consistent: bool


def kummer_fit(curve: GenusTwoCurve, rng, samples: int = 90) -> KummerReport:
    """The unique quartic through the image of the secant variety, with
    its sixteen singular points: fifteen branch-pair secant images plus
    the common image of the six tangent lines at the branch points."""
    domain = curve.domain
    quadrics = quadrics_through_curve(curve, rng).forms
    pts = []
    while len(pts) < samples:
        p = curve.sample_point(rng)
        q = curve.sample_point(rng)
        s, t = domain.coerce(_rand_param(rng, domain)), domain.coerce(_rand_param(rng, domain))
        P = tricanonical(p, domain)
        Q = tricanonical(q, domain)
        v = [s * a + t * b for a, b in zip(P, Q)]
        try:
            pts.append(phi(quadrics, v, domain))
        except BaseLocusPoint:
            continue
    fit = fit_hypersurface(pts, 4, domain)
    if len(fit.forms) != 1:
        raise RuntimeError("image quartic fit nullity %d" % len(fit.forms))
    K = fit.forms[0]
    ws = curve.weierstrass_points()
    nodes = []
    for i in range(6):
        for j in range(i + 1, 6):
            Pi = tricanonical(ws[i], domain)
            Pj = tricanonical(ws[j], domain)
            v = [a + b for a, b in zip(Pi, Pj)]
            nodes.append(phi(quadrics, v, domain))
    # the six tangent lines at branch points share one image point
    origin_imgs = [phi(quadrics, weierstrass_tangent_sample(curve, i, 1), domain)
                   for i in range(6)]
    more = [phi(quadrics, weierstrass_tangent_sample(curve, 0, t), domain)
            for t in (2, 3)]
    origin_consistent = all(_proj_eq(origin_imgs[0], img, domain)
                            for img in origin_imgs[1:] + more)
    nodes.append(origin_imgs[0])
    distinct = _all_distinct(nodes, domain)
    grads = [K.partial(i) for i in range(4)]
    singular = True
    for n in nodes:
        for g in grads:
            val = g.evaluate(list(n))
            if domain.is_exact:
                singular &= domain.is_zero(val)
            else:
                singular &= abs(complex(val)) < 1e-5
    return KummerReport(K, nodes, len(fit.forms), distinct, singular,
                        origin_consistent)


def _rand_param(rng, domain: Domain):
    if isinstance(domain, PrimeField):
        while True:
            v = rng.randrange(domain.p)
            if v:
                return v
    return complex(rng.uniform(-1, 1), rng.uniform(-1, 1))


def _proj_eq(u, v, domain: Domain, tol: float = 1e-8) -> bool:
    if domain.is_exact:
        iu = next(i for i, x in enumerate(u) if not domain.is_zero(x))
        iv = next(i for i, x in enumerate(v) if not domain.is_zero(x))
        if iu != iv:
            return False
        su, sv = domain.one() / u[iu], domain.one() / v[iv]
        return all(domain.is_zero(a * su - b * sv) for a, b in zip(u, v))
    from .linalg import chordal_distance
    return chordal_distance([complex(x) for x in u],
                            [complex(x) for x in v]) < tol


def _all_distinct(points, domain: Domain) -> bool:
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if _proj_eq(points[i], points[j], domain):
                return False
    return True


def phi_constant_on_secant(curve: GenusTwoCurve, rng, trials: int = 10) -> bool:
    """The classifying map contracts each secant line to a point."""
    domain = curve.domain
    quadrics = quadrics_through_curve(curve, rng).forms
    for _ in range(trials):
        p = curve.sample_point(rng)
        q = curve.sample_point(rng)
        P = tricanonical(p, domain)
        Q = tricanonical(q, domain)
        imgs = []
        for t in (1, 2, 3):
            t = domain.coerce(t)
            v = [a + t * b for a, b in zip(P, Q)]
            try:
                imgs.append(phi(quadrics, v, domain))
            except BaseLocusPoint:
                break
        if len(imgs) == 3 and not (_proj_eq(imgs[0], imgs[1], domain)
                                   and _proj_eq(imgs[0], imgs[2], domain)):
            return False
    return True


# ---------------------------------------------------------------------------
# the degree-8 secant hypersurface


@dataclass
class SecantOcticReport:
    octic: SparsePoly
    fit_nullity: int
    restriction_is_weddle_square: bool
    fresh_residual_ok: bool
    curve_singular: bool


def sec_octic(curve: GenusTwoCurve, rng, samples: int = 620,
              weddle: SparsePoly | None = None) -> SecantOcticReport:
    """Fit the degree-8 hypersurface through points of secant lines in P^4
    and check that its restriction to the invariant hyperplane is the
    square of the six-node quartic."""
    domain = curve.domain
    pts = []
    while len(pts) < samples:
        p = curve.sample_point(rng)
        q = curve.sample_point(rng)
        s = domain.coerce(_rand_param(rng, domain))
        t = domain.coerce(_rand_param(rng, domain))
        P = tricanonical(p, domain)
        Q = tricanonical(q, domain)
        pts.append(tuple(s * a + t * b for a, b in zip(P, Q)))
    fit = fit_hypersurface(pts, 8, domain)
    if len(fit.forms) != 1:
        raise RuntimeError("octic fit nullity %d" % len(fit.forms))
    F = fit.forms[0]
    # fresh membership
    fresh_ok = True
    for _ in range(30):
        p = curve.sample_point(rng)
        q = curve.sample_point(rng)
        P = tricanonical(p, domain)
        Q = tricanonical(q, domain)
        v = [a + domain.from_int(2) * b for a, b in zip(P, Q)]
        val = F.evaluate(v)
        if domain.is_exact:
            fresh_ok &= domain.is_zero(val)
        else:
            fresh_ok &= abs(complex(val)) < 1e-6
    # restriction to the invariant hyperplane
    restricted = SparsePoly(4, domain)
    for e, c in F.terms.items():
        if e[4] == 0:
            restricted.terms[e[:4]] = c
    if weddle is None:
        weddle = weddle_prime_fit(curve, rng).quartic
    wsq = weddle * weddle
    is_square = _proportional(restricted, wsq, domain)
    # the singular locus contains the curve
    grads = [F.partial(i) for i in range(5)]
    curve_sing = True
    for _ in range(20):
        P = tricanonical(curve.sample_point(rng), domain)
        for g in grads:
            val = g.evaluate(list(P))
            if domain.is_exact:
                curve_sing &= domain.is_zero(val)
            else:
                curve_sing &= abs(complex(val)) < 1e-5
    return SecantOcticReport(F, len(fit.forms), is_square, fresh_ok, curve_sing)


def _proportional(A: SparsePoly, B: SparsePoly, domain: Domain,
                  tol: float = 1e-8) -> bool:
    if domain.is_exact:
        if set(A.terms) != set(B.terms):
            return False
        ratio = None
        for e in A.terms:
            r = A.terms[e] / B.terms[e]
            if ratio is None:
                ratio = r
            elif not domain.is_zero(r - ratio):
                return False
        return True
    exps = sorted(set(A.terms) | set(B.terms))
    from .linalg import chordal_distance
    a = np.array([complex(A.terms.get(e, 0j)) for e in exps])
    b = np.array([complex(B.terms.get(e, 0j)) for e in exps])
    return chordal_distance(a, b) < tol


def hyperplane_section_degree(curve: GenusTwoCurve, rng, trials: int = 5):
    """Degree of the embedded curve: a generic hyperplane pulls back to a
    squarefree degree-6 polynomial on the double cover."""
    domain = curve.domain
    degrees = []
    for _ in range(trials):
        c = [domain.coerce(_rand_param(rng, domain)) for _ in range(5)]
        # (c0 + c1 x + c2 x^2 + c3 x^3)^2 - c4^2 f(x)
        lin = [c[0], c[1], c[2], c[3]]
        sq = [domain.zero()] * 7
        for i in range(4):
            for j in range(4):
                sq[i + j] = sq[i + j] + lin[i] * lin[j]
        for i, fc in enumerate(curve.coeffs):
            sq[i] = sq[i] - c[4] * c[4] * fc
        deg = max(i for i, v in enumerate(sq) if not domain.is_zero(v))
        degrees.append(deg)
        if not _squarefree(sq, domain):
            degrees[-1] = -deg
    return degrees


def _squarefree(coeffs, domain) -> bool:
    return not _discriminant_is_zero(coeffs, domain)
