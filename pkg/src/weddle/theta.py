"""Numeric theta functions with characteristics on the genus-2 Siegel
space, the level-3 coordinates of an abelian surface, theta-null points,
the quartic surface with six nodes cut out by the odd eigenspace, and the
determinantal symmetroid attached to six nodes.

Series convention: theta[alpha; beta](z, Om) sums over r in Z^2 of
exp(pi i (r+alpha).Om.(r+alpha) + 2 pi i (r+alpha).(z+beta)) for real
characteristic vectors alpha, beta.  Half-integer characteristics (a, b)
in doubled 0/1 coordinates enter as alpha = a/2, beta = b/2; the level-3
coordinate X_s is theta[s/3; 0](3z, 3Om).

Every evaluation returns a rigorous truncation bound along with the value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .burkhardt import matrix_plus, steinerian_quartics
from .fields import CC
from .heisenberg import REPS, idx2, neg2
from .linalg import chordal_distance, fit_hypersurface, nullspace_complex
from .poly import SparsePoly, exponents_of_degree
from .symplectic import Characteristic, all_characteristics


class DomainError(ValueError):
    pass


class DegenerateConfiguration(RuntimeError):
    """Node set failed a general-position requirement; resample."""


class PeriodMatrix:
    """2x2 complex symmetric Om with positive definite imaginary part."""

    __slots__ = ("m",)

    def __init__(self, entries):
        m = np.array(entries, dtype=complex)
        if m.shape != (2, 2):
            raise DomainError("period matrix must be 2x2")
        if abs(m[0, 1] - m[1, 0]) > 1e-12 * (1 + abs(m[0, 1])):
            raise DomainError("period matrix must be symmetric")
        m[1, 0] = m[0, 1]
        y = m.imag
        if not (y[0, 0] > 0 and y[0, 0] * y[1, 1] - y[0, 1] ** 2 > 0):
            raise DomainError("imaginary part must be positive definite")
        self.m = m

    @property
    def im(self):
        return self.m.imag

    def min_im_eigenvalue(self) -> float:
        y = self.im
        tr = y[0, 0] + y[1, 1]
        det = y[0, 0] * y[1, 1] - y[0, 1] ** 2
        return 0.5 * (tr - math.sqrt(max(tr * tr - 4 * det, 0.0)))

    def scaled(self, k: int) -> "PeriodMatrix":
        return PeriodMatrix(k * self.m)

    def __repr__(self):
        return "PeriodMatrix(%s)" % (self.m.tolist(),)


# a reducible-looking matrix for series tests and a generic one for the
# surface constructions; genericity is asserted by the quadric-count check
OMEGA_DIAGONALISH = PeriodMatrix([[1j, 0.1], [0.1, 1.25j]])
OMEGA_GENERIC = PeriodMatrix([[1.0 + 1.0j, 0.3 + 0.1j], [0.3 + 0.1j, 1.5 + 1.2j]])


@dataclass
class ThetaValue:
    value: complex
    bound: float

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("negative error bound")


def _tail_bound(radius: int, lam: float, ynorm: float) -> float:
    """Upper bound for the sum of |terms| over the shells |r|_inf >= radius,
    after the characteristic is reduced to [-1/2, 1/2)^2."""
    def shell(k):
        m_low = max(k - 0.7072, 0.0)
        m_high = math.sqrt(2.0) * (k + 0.5)
        expo = -math.pi * lam * m_low * m_low + 2 * math.pi * ynorm * m_high
        if expo > 700:
            return math.inf
        return 8 * (k + 1) * math.exp(expo)

    total = 0.0
    k = radius
    prev = shell(k)
    total += prev
    while True:
        k += 1
        cur = shell(k)
        total += cur
        if cur < prev * 0.5 and cur < 1e-3 * total + 1e-300:
            # ratio is decreasing from here on, dominate by a geometric series
            total += cur
            break
        if k > radius + 400:
            return math.inf
        prev = cur
    return total


def theta_char(alpha, beta, z, omega: PeriodMatrix, tol: float = 1e-12,
               with_gradient: bool = False):
    """theta[alpha; beta](z, Om) with a truncation bound below tol.

    Returns a ThetaValue, or (ThetaValue, gradient 2-vector) when asked."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    om = omega.m
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    z = np.asarray(z, dtype=complex)
    # shift alpha into [-1/2, 1/2): an exact reindexing of the sum
    shift = np.round(alpha)
    alpha_red = alpha - shift
    lam = omega.min_im_eigenvalue()
    ynorm = float(np.linalg.norm(z.imag))
    radius = max(2, int(math.ceil(math.sqrt(max(math.log(8.0 / tol), 1.0)
                                            / (math.pi * lam)))
                        + 2 * ynorm / lam + 2))
    bound = _tail_bound(radius + 1, lam, ynorm)
    while bound > tol:
        radius += 2
        bound = _tail_bound(radius + 1, lam, ynorm)
        if radius > 600:
            raise RuntimeError("truncation radius exploded; check the period matrix")
    rng = np.arange(-radius, radius + 1)
    r0, r1 = np.meshgrid(rng, rng, indexing="ij")
    m0 = r0.ravel() + alpha_red[0]
    m1 = r1.ravel() + alpha_red[1]
    quad = (om[0, 0] * m0 * m0 + 2 * om[0, 1] * m0 * m1 + om[1, 1] * m1 * m1)
    lin = m0 * (z[0] + beta[0]) + m1 * (z[1] + beta[1])
    expo = np.exp(1j * math.pi * quad + 2j * math.pi * lin)
    val = complex(expo.sum())
    if with_gradient:
        g0 = complex((2j * math.pi * m0 * expo).sum())
        g1 = complex((2j * math.pi * m1 * expo).sum())
        return ThetaValue(val, bound), np.array([g0, g1])
    return ThetaValue(val, bound)


def theta_halfint(m: Characteristic, z, omega: PeriodMatrix,
                  tol: float = 1e-12) -> ThetaValue:
    """Theta with the half-integer characteristic m = (a, b)."""
    return theta_char(np.array(m.a) / 2.0, np.array(m.b) / 2.0, z, omega, tol)


@dataclass
class HalfPeriod:
    char: Characteristic
    point: np.ndarray

    @classmethod
    def of(cls, m: Characteristic, omega: PeriodMatrix):
        a = np.array(m.a, dtype=float) / 2.0
        b = np.array(m.b, dtype=float) / 2.0
        return cls(m, omega.m @ a + b)

    def doubling_residual(self, omega: PeriodMatrix) -> float:
        """Distance from 2 * point to the lattice Om Z^2 + Z^2."""
        target = 2 * self.point
        a = np.array(self.char.a, dtype=float)
        b = np.array(self.char.b, dtype=float)
        return float(np.max(np.abs(target - (omega.m @ a + b))))


def halfperiod(m: Characteristic, omega: PeriodMatrix) -> np.ndarray:
    return HalfPeriod.of(m, omega).point


# ---------------------------------------------------------------------------
# level-3 coordinates


def level3_coords(z, omega: PeriodMatrix, tol: float = 1e-12) -> np.ndarray:
    """The nine third-order coordinates X_s(z) = theta[s/3; 0](3z, 3Om),
    indexed by s in (Z/3)^2 in lexicographic order."""
    om3 = omega.scaled(3)
    z3 = 3 * np.asarray(z, dtype=complex)
    out = np.empty(9, dtype=complex)
    for s0 in range(3):
        for s1 in range(3):
            tv = theta_char(np.array([s0, s1]) / 3.0, np.zeros(2), z3, om3, tol)
            out[idx2((s0, s1))] = tv.value
    return out


def level2_coords(z, omega: PeriodMatrix, tol: float = 1e-12) -> np.ndarray:
    """The four second-order coordinates theta[s/2; 0](2z, 2Om), s in
    (Z/2)^2.  Every one of them is an even function of z: the odd
    eigenspace at even level is zero, so all ten quadratic combinations
    are inversion invariant on the nose."""
    om2 = omega.scaled(2)
    z2 = 2 * np.asarray(z, dtype=complex)
    out = np.empty(4, dtype=complex)
    for s0 in range(2):
        for s1 in range(2):
            tv = theta_char(np.array([s0, s1]) / 2.0, np.zeros(2), z2, om2, tol)
            out[s0 * 2 + s1] = tv.value
    return out


def random_z(omega: PeriodMatrix, rng) -> np.ndarray:
    """Uniform draw from the fundamental parallelotope Om u + v."""
    u = np.array([rng.random(), rng.random()])
    v = np.array([rng.random(), rng.random()])
    return omega.m @ u + v


J_PERM = [idx2(neg2((s0, s1))) for s0 in range(3) for s1 in range(3)]


def j_apply(vec: np.ndarray) -> np.ndarray:
    out = np.empty_like(vec)
    for i in range(9):
        out[J_PERM[i]] = vec[i]
    return out


@dataclass
class ContractReport:
    parity_residual: float
    diag_residual: float
    perm_residual: float

    def max_residual(self) -> float:
        return max(self.parity_residual, self.diag_residual, self.perm_residual)


def level3_contract_check(omega: PeriodMatrix, rng, samples: int = 6,
                          tol: float = 1e-8) -> ContractReport:
    """Validate the equivariance contract of the level-3 coordinates:
    inversion acts by the index flip, third-period translations act by the
    diagonal characters and the index translations."""
    w = cmath.exp(2j * math.pi / 3)
    par = diag = perm = 0.0
    for _ in range(samples):
        z = random_z(omega, rng)
        x = level3_coords(z, omega)
        par = max(par, chordal_distance(level3_coords(-z, omega), j_apply(x)))
        for p in [(1, 0), (0, 1)]:
            xs = level3_coords(z + np.array(p) / 3.0, omega)
            pred = np.array([x[idx2((s0, s1))] * w ** ((s0 * p[0] + s1 * p[1]) % 3)
                             for s0 in range(3) for s1 in range(3)])
            pred = np.array([pred[idx2((s0, s1))] for s0 in range(3) for s1 in range(3)])
            diag = max(diag, chordal_distance(xs, pred))
        for q in [(1, 0), (0, 1)]:
            xs = level3_coords(z + omega.m @ (np.array(q) / 3.0), omega)
            pred = np.empty(9, dtype=complex)
            for s0 in range(3):
                for s1 in range(3):
                    pred[idx2((s0, s1))] = x[idx2(((s0 + q[0]) % 3, (s1 + q[1]) % 3))]
            perm = max(perm, chordal_distance(xs, pred))
    report = ContractReport(par, diag, perm)
    if report.max_residual() > tol:
        raise RuntimeError("level-3 coordinate contract failed: %r" % (report,))
    return report


def translated_coords(kappa: Characteristic, z, omega: PeriodMatrix,
                      tol: float = 1e-12) -> np.ndarray:
    """X translated by the half period of kappa."""
    return level3_coords(np.asarray(z, dtype=complex) + halfperiod(kappa, omega),
                         omega, tol)


def plus_coords(vec: np.ndarray) -> np.ndarray:
    """Even components (Y) on the five orbit representatives."""
    out = np.empty(5, dtype=complex)
    for k, s in enumerate(REPS):
        if k == 0:
            out[0] = vec[idx2(s)]
        else:
            out[k] = 0.5 * (vec[idx2(s)] + vec[idx2(neg2(s))])
    return out


def minus_coords(vec: np.ndarray) -> np.ndarray:
    """Odd components (Z) on the four nonzero representatives."""
    out = np.empty(4, dtype=complex)
    for k, s in enumerate(REPS[1:]):
        out[k] = 0.5 * (vec[idx2(s)] - vec[idx2(neg2(s))])
    return out


# ---------------------------------------------------------------------------
# the coordinate involution attached to a characteristic


@dataclass
class InvolutionReport:
    matrix: np.ndarray
    sign: int
    invariant_dimension: int
    defining_residual: float
    square_residual: float
    sign_residual: float


def involution_matrix(kappa: Characteristic, omega: PeriodMatrix, rng,
                      samples: int = 6, tol: float = 1e-8) -> InvolutionReport:
    """The signed permutation R with X^k(-z) proportional to R X^k(z),
    normalized so the theta-null X^k(0) is R-invariant.

    The measured sign must match the parity of kappa and the invariant
    eigenspace dimension is 5 for even kappa, 4 for odd."""
    h = halfperiod(kappa, omega)
    f0 = level3_coords(h, omega)
    jf0 = j_apply(f0)
    rho = np.vdot(f0, jf0) / np.vdot(f0, f0)
    sign = 1 if rho.real > 0 else -1
    sign_residual = abs(rho - sign)
    if sign_residual > 1e-6:
        raise RuntimeError("involution sign is not +-1: rho = %r" % rho)
    defining = 0.0
    for _ in range(samples):
        z = random_z(omega, rng)
        u = level3_coords(-z + h, omega)
        v = sign * j_apply(level3_coords(z + h, omega))
        defining = max(defining, chordal_distance(u, v))
    if defining > tol:
        raise RuntimeError("involution relation residual %g above %g" % (defining, tol))
    R = np.zeros((9, 9))
    for i in range(9):
        R[J_PERM[i], i] = sign
    square_residual = float(np.abs(R @ R - np.eye(9)).max())
    dim_inv = int(round((9 + np.trace(R)) / 2))
    expected = 5 if kappa.parity == 1 else 4
    if dim_inv != expected or sign != kappa.parity:
        raise RuntimeError("eigensplit dimensions (%d) disagree with parity %d"
                           % (dim_inv, kappa.parity))
    return InvolutionReport(R, sign, dim_inv, defining, square_residual, sign_residual)


@dataclass
class ThetaNullReport:
    char: Characteristic
    point: np.ndarray
    eigen_coords: np.ndarray
    membership_residual: float
    det_plus_normalized: float | None


def theta_null(kappa: Characteristic, omega: PeriodMatrix,
               tol: float = 1e-8) -> ThetaNullReport:
    """The theta-null X^k(0); it must sit in the invariant eigenspace of
    the attached involution.  Even characteristics also report the
    normalized determinant of the symmetric quadric matrix there (zero on
    the degeneracy locus)."""
    v = level3_coords(halfperiod(kappa, omega), omega)
    nrm = np.abs(v).max()
    if kappa.parity == 1:
        resid = float(np.abs(v - j_apply(v)).max() / (2 * nrm))
        coords = plus_coords(v)
        M = matrix_plus()
        vals = np.array([[complex(M.rows[i][j].evaluate(list(coords))) for j in range(5)]
                         for i in range(5)])
        scale = np.abs(vals).max()
        detn = float(abs(np.linalg.det(vals)) / scale ** 5) if scale > 0 else 0.0
    else:
        resid = float(np.abs(v + j_apply(v)).max() / (2 * nrm))
        coords = minus_coords(v)
        detn = None
    if resid > tol:
        raise RuntimeError("theta-null eigenspace membership residual %g" % resid)
    return ThetaNullReport(kappa, v, coords, resid, detn)


def half_period_census(kappa: Characteristic, omega: PeriodMatrix,
                       tol: float = 1e-6):
    """Map all sixteen half periods through the kappa-translated
    coordinates and report which land in the odd eigenspace (the node set
    of the quartic surface when kappa is odd)."""
    h = halfperiod(kappa, omega)
    rows = []
    for m in all_characteristics(2):
        x = halfperiod(m, omega)
        u = level3_coords(x + h, omega)
        nrm = np.abs(u).max()
        anti = float(np.abs(u + j_apply(u)).max() / (2 * nrm))
        rows.append({"char": m, "coords": u, "anti_residual": anti,
                     "in_minus": anti < tol})
    return rows


# ---------------------------------------------------------------------------
# quadrics through the surface


@dataclass
class SurfaceQuadrics:
    r: np.ndarray
    smallest_sv: float
    gap_sv: float
    fresh_residual: float


def _invariant_quadric_row(x: np.ndarray) -> np.ndarray:
    row = np.empty(5, dtype=complex)
    for k, s in enumerate(REPS):
        mult = 1.0 if k == 0 else 2.0
        row[k] = mult * x[idx2(s)] * x[idx2(neg2(s))]
    return row


def surface_quadrics(omega: PeriodMatrix, rng, samples: int = 40,
                     fresh: int = 30, tol: float = 1e-7) -> SurfaceQuadrics:
    """Coefficients r of the translation-invariant quadric through the
    image surface, by a singular-vector extraction; all nine translated
    quadrics must vanish on fresh samples."""
    rows = []
    for _ in range(samples):
        x = level3_coords(random_z(omega, rng), omega)
        x = x / np.abs(x).max()
        rows.append(_invariant_quadric_row(x))
    a = np.array(rows)
    _, s, vh = np.linalg.svd(a)
    r = np.conj(vh[-1])
    resid = 0.0
    from .burkhardt import quadrics_f
    fa = quadrics_f(list(r), CC)
    for _ in range(fresh):
        x = level3_coords(random_z(omega, rng), omega)
        x = x / np.abs(x).max()
        for f in fa:
            resid = max(resid, abs(f.evaluate(list(x))) / np.abs(r).max())
    if resid > tol:
        raise RuntimeError("translated quadrics do not vanish: residual %g" % resid)
    return SurfaceQuadrics(r, float(s[-1]), float(s[-2]), float(resid))


def quadric_space_nullity(omega: PeriodMatrix, rng, samples: int = 60,
                          rel_threshold: float = 1e-8):
    """Dimension of the space of quadrics vanishing on sampled image
    points (45 monomials in the nine coordinates)."""
    exps = exponents_of_degree(9, 2)
    rows = []
    for _ in range(samples):
        x = level3_coords(random_z(omega, rng), omega)
        x = x / np.abs(x).max()
        powers = {e: np.prod([x[v] ** k for v, k in enumerate(e)]) for e in exps}
        rows.append([powers[e] for e in exps])
    a = np.array(rows)
    _, s, _ = np.linalg.svd(a)
    thr = rel_threshold * s[0]
    nullity = int((s < thr).sum()) + max(0, 45 - len(s))
    return nullity, s


def steinerian_of_theta_null(kappa: Characteristic, omega: PeriodMatrix):
    """Kernel coordinates of the skew matrix at the odd theta-null; the
    composition must reproduce the surface's quadric coefficients."""
    if kappa.parity != -1:
        raise ValueError("needs an odd characteristic")
    rep = theta_null(kappa, omega)
    zc = rep.eigen_coords
    vals = np.array([complex(q.evaluate(list(zc))) for q in steinerian_quartics()])
    return vals


# ---------------------------------------------------------------------------
# the quartic surface with six nodes, from the theta side


@dataclass
class WeddleThetaReport:
    quartic: SparsePoly
    nodes: list
    fit_nullity: int
    fresh_residual: float
    node_gradient_residual: float
    line_residual: float
    lines_checked: int
    net_dimension: int | None
    rigidity_nullity: int | None
    rigidity_match: float | None


def weddle_from_theta(omega: PeriodMatrix, kappa: Characteristic, rng,
                      samples: int = 80, with_net: bool = True,
                      with_rigidity: bool = True) -> WeddleThetaReport:
    """Fit the unique quartic through the odd-eigenspace image of the
    surface and verify its classical features: six singular points at the
    half periods landing in the odd eigenspace, the fifteen node lines and
    ten complementary-triple lines, and the three-dimensional net of
    quadrics through the node set that vanish on the image of the
    vanishing-divisor curve."""
    if kappa.parity != -1:
        raise ValueError("the six-node surface needs an odd characteristic")
    h = halfperiod(kappa, omega)

    def draw(n):
        out = []
        while len(out) < n:
            z = random_z(omega, rng)
            u = level3_coords(z + h, omega)
            zc = minus_coords(u)
            if np.abs(zc).max() < 1e-6 * np.abs(u).max():
                continue
            out.append(zc / np.abs(zc).max())
        return out

    pts = draw(samples)
    fit = fit_hypersurface(pts, 4, CC)
    if len(fit.forms) != 1:
        # one resample with twice the data before declaring failure
        pts = draw(2 * samples)
        fit = fit_hypersurface(pts, 4, CC)
    if len(fit.forms) != 1:
        raise RuntimeError("quartic fit nullity %d" % len(fit.forms))
    W = fit.forms[0]
    wnorm = math.sqrt(sum(abs(c) ** 2 for c in W.terms.values()))
    fresh = 0.0
    for _ in range(30):
        z = random_z(omega, rng)
        zc = minus_coords(level3_coords(z + h, omega))
        zc = zc / np.abs(zc).max()
        fresh = max(fresh, abs(W.evaluate(list(zc))) / wnorm)
    census = half_period_census(kappa, omega)
    nodes = [row["coords"] for row in census if row["in_minus"]]
    if len(nodes) != 6:
        raise RuntimeError("expected 6 half periods in the odd eigenspace, got %d"
                           % len(nodes))
    nodes = [minus_coords(u) for u in nodes]
    nodes = [n / np.abs(n).max() for n in nodes]
    grads = [W.partial(i) for i in range(4)]
    node_grad = 0.0
    for n in nodes:
        gv = max(abs(g.evaluate(list(n))) for g in grads)
        node_grad = max(node_grad, gv / wnorm)
    lines = node_pair_lines(nodes) + complementary_triple_lines(nodes)
    line_resid = max(line_on_surface_residual(W, u, v) for u, v in lines)
    net_dim = None
    if with_net:
        net_dim = twisted_cubic_net_dimension(omega, kappa, nodes, rng)
    rig_null = rig_match = None
    if with_rigidity:
        rig_null, rig_match = quartics_through_lines(lines, W)
    return WeddleThetaReport(W, nodes, len(fit.forms), float(fresh),
                             float(node_grad), float(line_resid), len(lines),
                             net_dim, rig_null, rig_match)


def node_pair_lines(nodes):
    out = []
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            out.append((nodes[i], nodes[j]))
    return out


def complementary_triple_lines(nodes):
    """The ten lines obtained by intersecting the plane through a triple
    of nodes with the plane through the complementary triple."""
    from itertools import combinations
    out = []
    seen = set()
    for tri in combinations(range(6), 3):
        comp = tuple(sorted(set(range(6)) - set(tri)))
        key = min(tri, comp)
        if key in seen:
            continue
        seen.add(key)
        n1 = _plane_normal([nodes[i] for i in tri])
        n2 = _plane_normal([nodes[i] for i in comp])
        basis, _ = nullspace_complex(np.array([n1, n2]))
        if len(basis) != 2:
            raise RuntimeError("triple planes do not meet in a line")
        out.append((np.array(basis[0]), np.array(basis[1])))
    return out


def _plane_normal(three_points):
    basis, _ = nullspace_complex(np.array(three_points))
    if len(basis) != 1:
        raise RuntimeError("three nodes do not span a plane")
    return np.array(basis[0])


def line_on_surface_residual(W: SparsePoly, u, v) -> float:
    """Max coefficient of the binary quartic W(s u + t v), relative."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    u = u / np.abs(u).max()
    v = v / np.abs(v).max()
    forms = []
    for k in range(W.nvars):
        forms.append(SparsePoly(2, CC, {(1, 0): complex(u[k]), (0, 1): complex(v[k])}))
    restricted = W.substitute_linear(forms)
    wnorm = math.sqrt(sum(abs(c) ** 2 for c in W.terms.values()))
    if restricted.is_zero():
        return 0.0
    return max(abs(c) for c in restricted.terms.values()) / (16 * wnorm)


def quartics_through_lines(lines, W: SparsePoly, points_per_line: int = 5):
    """Dimension of the space of quartics containing every given line, and
    the projective distance of its generator from W."""
    pts = []
    for u, v in lines:
        for k in range(points_per_line):
            t = (k + 1.0) / (points_per_line + 1.0)
            pt = np.asarray(u) * (1 - t) + np.asarray(v) * t
            pts.append(pt / np.abs(pt).max())
    fit = fit_hypersurface(pts, 4, CC)
    if len(fit.forms) != 1:
        return len(fit.forms), None
    exps = exponents_of_degree(4, 4)
    a = np.array([fit.forms[0].terms.get(e, 0j) for e in exps])
    b = np.array([complex(W.terms.get(e, 0j)) for e in exps])
    return 1, chordal_distance(a, b)


def theta_divisor_points(kappa: Characteristic, omega: PeriodMatrix, rng,
                         count: int = 25, tol: float = 1e-10):
    """Points on the vanishing divisor of the theta function with
    characteristic kappa, found by Newton iteration along random complex
    lines through random base points."""
    found = []
    attempts = 0
    while len(found) < count and attempts < 50 * count:
        attempts += 1
        z0 = random_z(omega, rng)
        d = np.array([rng.gauss(0, 1) + 1j * rng.gauss(0, 1),
                      rng.gauss(0, 1) + 1j * rng.gauss(0, 1)])
        d = d / np.linalg.norm(d)
        t = 0j
        ok = False
        for _ in range(60):
            z = z0 + t * d
            tv, grad = theta_char(np.array(kappa.a) / 2.0, np.array(kappa.b) / 2.0,
                                  z, omega, 1e-13, with_gradient=True)
            gd = grad @ d
            if abs(gd) < 1e-14:
                break
            step = tv.value / gd
            t = t - step
            if abs(step) < 1e-14 and abs(tv.value) < tol:
                ok = True
                break
        if ok and abs(t) < 6:
            found.append(z0 + t * d)
    if len(found) < count:
        raise RuntimeError("root search found only %d divisor points" % len(found))
    return found


def twisted_cubic_net_dimension(omega: PeriodMatrix, kappa: Characteristic,
                                nodes, rng, n_curve: int = 24,
                                rel_threshold: float = 1e-6) -> int:
    """Quadrics through the six nodes form a 4-dimensional space; those
    vanishing on the image of the theta-divisor curve form the net of the
    unique twisted cubic through the nodes."""
    fit = fit_hypersurface(nodes, 2, CC)
    if len(fit.forms) != 4:
        raise RuntimeError("quadrics through 6 nodes have dimension %d" % len(fit.forms))
    h = halfperiod(kappa, omega)
    curve_pts = []
    for z in theta_divisor_points(kappa, omega, rng, n_curve):
        u = level3_coords(np.asarray(z) + h, omega)
        zc = minus_coords(u)
        curve_pts.append(zc / np.abs(zc).max())
    a = np.array([[q.evaluate(list(pt)) for q in fit.forms] for pt in curve_pts])
    _, s, _ = np.linalg.svd(a)
    thr = rel_threshold * s[0]
    return int((s < thr).sum()) + max(0, 4 - len(s))


# ---------------------------------------------------------------------------
# the determinantal symmetroid of six nodes


@dataclass
class SymmetroidReport:
    det_quartic: SparsePoly
    rank3_points: list
    rank2_points: list
    gradient_residual: float
    quadric_space_dim: int


def _quadric_to_sym_matrix(q: SparsePoly, domain):
    mat = [[domain.zero() for _ in range(4)] for _ in range(4)]
    half = domain.one() / domain.from_int(2)
    for exp, c in q.terms.items():
        idxs = [i for i, e in enumerate(exp) for _ in range(e)]
        i, j = idxs
        c = domain.coerce(c)
        if i == j:
            mat[i][i] = mat[i][i] + c
        else:
            mat[i][j] = mat[i][j] + c * half
            mat[j][i] = mat[j][i] + c * half
    return mat


def symmetroid(nodes, domain, rng=None) -> SymmetroidReport:
    """Determinantal quartic of the pencil of quadrics through six general
    points of P^3, with its sixteen singular points: six rank-3 quadrics
    whose vertices are the nodes and ten rank-2 plane pairs from
    complementary triples."""
    from itertools import combinations

    from .linalg import Matrix, det_ring, nullspace, rank
    nodes = [list(n) for n in nodes]
    fit = fit_hypersurface(nodes, 2, domain)
    if len(fit.forms) != 4:
        raise DegenerateConfiguration("quadrics through the nodes have dimension %d"
                                      % len(fit.forms))
    qs = [_quadric_to_sym_matrix(q, domain) for q in fit.forms]
    # det of the symmetric pencil, a quartic in the four parameters
    entries = []
    for i in range(4):
        row = []
        for j in range(4):
            terms = {}
            for k in range(4):
                exp = [0] * 4
                exp[k] = 1
                c = qs[k][i][j]
                if not domain.is_zero(c):
                    terms[tuple(exp)] = c
            row.append(SparsePoly(4, domain, terms))
        entries.append(row)
    F = det_ring(Matrix(entries))
    grads = [F.partial(i) for i in range(4)]

    def grad_res(t):
        vals = [g.evaluate(t) for g in grads]
        if domain is CC:
            scale = max(max(abs(complex(x)) for x in t), 1.0)
            fn = math.sqrt(sum(abs(complex(c)) ** 2 for c in F.terms.values()))
            return max(abs(complex(v)) for v in vals) / (fn * scale ** 3)
        return 0.0 if all(domain.is_zero(v) for v in vals) else 1.0

    rank3 = []
    worst = 0.0
    for n in nodes:
        cols = [[_matvec(qs[k], n)[i] for k in range(4)] for i in range(4)]
        kern = _kernel(cols, domain)
        if len(kern) != 1:
            raise DegenerateConfiguration("vertex condition does not pin a "
                                          "unique pencil point")
        t = kern[0]
        pencil = [[_lincomb([qs[k][i][j] for k in range(4)], t, domain)
                   for j in range(4)] for i in range(4)]
        if _rank(pencil, domain) != 3:
            raise DegenerateConfiguration("vertex quadric does not have rank 3")
        rank3.append(t)
        worst = max(worst, grad_res(t))
    rank2 = []
    seen = set()
    for tri in combinations(range(6), 3):
        comp = tuple(sorted(set(range(6)) - set(tri)))
        key = min(tri, comp)
        if key in seen:
            continue
        seen.add(key)
        n1 = _kernel([nodes[i] for i in tri], domain)
        n2 = _kernel([nodes[i] for i in comp], domain)
        if len(n1) != 1 or len(n2) != 1:
            raise DegenerateConfiguration("triple does not span a plane")
        prod = [[n1[0][i] * n2[0][j] + n1[0][j] * n2[0][i] for j in range(4)]
                for i in range(4)]
        if _rank(prod, domain) != 2:
            raise DegenerateConfiguration("plane pair quadric does not have rank 2")
        # express the plane-pair quadric in the pencil basis
        rows = []
        rhs = []
        for i in range(4):
            for j in range(i, 4):
                rows.append([qs[k][i][j] for k in range(4)])
                rhs.append(prod[i][j])
        t = _solve_overdetermined(rows, rhs, domain)
        rank2.append(t)
        worst = max(worst, grad_res(t))
    return SymmetroidReport(F, rank3, rank2, worst, len(fit.forms))


def _matvec(m, v):
    return [sum_entries([m[i][j] * v[j] for j in range(len(v))]) for i in range(len(m))]


def sum_entries(items):
    acc = items[0]
    for x in items[1:]:
        acc = acc + x
    return acc


def _kernel(rows, domain):
    if domain is CC:
        basis, _ = nullspace_complex(np.array([[complex(x) for x in r] for r in rows]))
        return [list(b) for b in basis]
    from .linalg import nullspace
    return nullspace([[domain.coerce(x) for x in r] for r in rows], domain)


def _rank(mat, domain):
    if domain is CC:
        arr = np.array([[complex(x) for x in r] for r in mat])
        s = np.linalg.svd(arr, compute_uv=False)
        return int((s > 1e-8 * s[0]).sum())
    from .linalg import rank
    return rank([[domain.coerce(x) for x in r] for r in mat], domain)


def _lincomb(coeffs, t, domain):
    acc = domain.zero()
    for c, tv in zip(coeffs, t):
        acc = acc + domain.coerce(c) * domain.coerce(tv)
    return acc


def _solve_overdetermined(rows, rhs, domain):
    if domain is CC:
        a = np.array([[complex(x) for x in r] for r in rows])
        b = np.array([complex(x) for x in rhs])
        t, res, _, _ = np.linalg.lstsq(a, b, rcond=None)
        return list(t)
    aug = [[domain.coerce(x) for x in r] + [domain.coerce(v)]
           for r, v in zip(rows, rhs)]
    from .linalg import rref_bareiss
    rref, piv = rref_bareiss(aug, domain)
    if 4 in piv:
        raise RuntimeError("plane-pair quadric is not in the pencil")
    sol = [domain.zero()] * 4
    for i, c in enumerate(piv):
        sol[c] = rref[i][4]
    # verify exactly
    for r, v in zip(rows, rhs):
        acc = domain.zero()
        for x, s in zip(r, sol):
            acc = acc + domain.coerce(x) * s
        if not domain.is_zero(acc - domain.coerce(v)):
            raise RuntimeError("inconsistent pencil expansion")
    return sol


def symmetroid_singular_count_mod_p(report: SymmetroidReport, p: int) -> int:
    """Exhaustive count of singular points of the determinantal quartic
    over P^3(F_p)."""
    from .linalg import eval_poly_mod_p, proj_points_mod_p
    pts = proj_points_mod_p(p, 3)
    good = np.ones(pts.shape[0], dtype=bool)
    for i in range(4):
        good &= eval_poly_mod_p(report.det_quartic.partial(i), pts, p) == 0
    return int(good.sum())
