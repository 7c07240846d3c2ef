"""The finite Heisenberg group of level 3, its 9-dimensional monomial
representation, the central involutions, and symplectic automorphism lifts.

Convention used throughout (fixed so that the representation is an honest
homomorphism): the group law twists by the first factor's character on the
second factor's translation part,

    (t, x, x*) . (s, y, y*) = (t + s + x*. y, x + y, x* + y*),

with scalars written as exponents of w (a fixed primitive cube root of 1),
and the representation acts on the delta basis {X_a} by

    U(t, x, x*) X_a = w^(t + x*.a) X_{a+x}.

Group elements use flat vectors u = (x | x*) in (Z/3)^{2g} where matrices
need to act.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .fields import Cyc, QW, omega_power
from .linalg import Matrix, rref_naive
from .symplectic import InvariantViolation, SymplecticMat

REPS = [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2)]


def idx2(a) -> int:
    return (a[0] % 3) * 3 + (a[1] % 3)


def from_idx2(i: int):
    return (i // 3, i % 3)


def neg2(a):
    return ((-a[0]) % 3, (-a[1]) % 3)


def rep_of(a):
    """(k, sign): a = sign * REPS[k] in (Z/3)^2."""
    a = (a[0] % 3, a[1] % 3)
    if a in REPS:
        return REPS.index(a), 1
    return REPS.index(neg2(a)), -1


class RepresentationError(RuntimeError):
    pass


@dataclass(frozen=True)
class HeisElement:
    """(w^t, x, x*) with t in Z/3 and x, x* in (Z/3)^g."""

    t: int
    x: tuple
    xs: tuple

    def __post_init__(self):
        if len(self.x) != len(self.xs):
            raise ValueError("x and x* of different lengths")

    @property
    def g(self):
        return len(self.x)

    def u(self):
        return self.x + self.xs


def h_identity(g: int) -> HeisElement:
    return HeisElement(0, (0,) * g, (0,) * g)


def h_mul(h1: HeisElement, h2: HeisElement) -> HeisElement:
    if h1.g != h2.g:
        raise ValueError("genus mismatch")
    t = (h1.t + h2.t + sum(a * b for a, b in zip(h1.xs, h2.x))) % 3
    x = tuple((a + b) % 3 for a, b in zip(h1.x, h2.x))
    xs = tuple((a + b) % 3 for a, b in zip(h1.xs, h2.xs))
    return HeisElement(t, x, xs)


def h_inv(h: HeisElement) -> HeisElement:
    t = (-h.t + sum(a * b for a, b in zip(h.xs, h.x))) % 3
    return HeisElement(t, tuple(-a % 3 for a in h.x), tuple(-a % 3 for a in h.xs))


def enumerate_group(g: int):
    out = []
    for t in range(3):
        for x in product(range(3), repeat=g):
            for xs in product(range(3), repeat=g):
                out.append(HeisElement(t, x, xs))
    return out


def weil_pairing(u, v) -> int:
    """E(u, v) = x*(y) - y*(x) mod 3 on flat vectors u = (x | x*)."""
    g = len(u) // 2
    return (sum(u[g + i] * v[i] for i in range(g))
            - sum(v[g + i] * u[i] for i in range(g))) % 3


def beta(u, v) -> int:
    """beta((x, x*), (y, y*)) = y*(x)."""
    g = len(u) // 2
    return sum(v[g + i] * u[i] for i in range(g)) % 3


def commutator_exponent(h1: HeisElement, h2: HeisElement) -> int:
    c = h_mul(h_mul(h1, h2), h_mul(h_inv(h1), h_inv(h2)))
    if any(c.x) or any(c.xs):
        raise AssertionError("commutator not central")
    return c.t


# ---------------------------------------------------------------------------
# the monomial representation at g = 2


class GenPerm:
    """Generalized permutation matrix: column a maps to row perm[a] with
    coefficient w^expo[a].  Exact and cheap to compose."""

    __slots__ = ("perm", "expo")

    def __init__(self, perm, expo):
        self.perm = tuple(perm)
        self.expo = tuple(e % 3 for e in expo)

    def compose(self, other):
        """Matrix product self . other."""
        perm = tuple(self.perm[other.perm[a]] for a in range(9))
        expo = tuple((other.expo[a] + self.expo[other.perm[a]]) % 3 for a in range(9))
        return GenPerm(perm, expo)

    __mul__ = compose

    def __eq__(self, other):
        return self.perm == other.perm and self.expo == other.expo

    def __hash__(self):
        return hash((self.perm, self.expo))

    def scale(self, k):
        return GenPerm(self.perm, tuple((e + k) % 3 for e in self.expo))

    def inverse(self):
        perm = [0] * 9
        expo = [0] * 9
        for a in range(9):
            perm[self.perm[a]] = a
            expo[self.perm[a]] = -self.expo[a] % 3
        return GenPerm(perm, expo)

    def to_matrix(self) -> Matrix:
        rows = [[Cyc(0) for _ in range(9)] for _ in range(9)]
        for a in range(9):
            rows[self.perm[a]][a] = omega_power(self.expo[a])
        return Matrix(rows)

    def __repr__(self):
        return "GenPerm(%s, %s)" % (self.perm, self.expo)


def schrodinger(h: HeisElement) -> GenPerm:
    """U(h) on the 9-dimensional delta basis, g = 2 only."""
    if h.g != 2:
        raise ValueError("the representation is materialized at genus 2")
    perm = []
    expo = []
    for i in range(9):
        a = from_idx2(i)
        perm.append(idx2(((a[0] + h.x[0]), (a[1] + h.x[1]))))
        expo.append((h.t + h.xs[0] * a[0] + h.xs[1] * a[1]) % 3)
    return GenPerm(perm, expo)


def involution_j() -> GenPerm:
    """X_s -> X_{-s}."""
    return GenPerm([idx2(neg2(from_idx2(i))) for i in range(9)], [0] * 9)


def eigenbasis_plus():
    """Y_s = (X_s + X_{-s})/2 for the five orbit representatives."""
    vecs = []
    for k, s in enumerate(REPS):
        v = [QW.zero() for _ in range(9)]
        if k == 0:
            v[idx2(s)] = QW.one()
        else:
            half = Cyc(1, 0) / Cyc(2, 0)
            v[idx2(s)] = half
            v[idx2(neg2(s))] = half
        vecs.append(v)
    return vecs


def eigenbasis_minus():
    """Z_s = (X_s - X_{-s})/2 for the four nonzero representatives."""
    vecs = []
    half = Cyc(1, 0) / Cyc(2, 0)
    for s in REPS[1:]:
        v = [QW.zero() for _ in range(9)]
        v[idx2(s)] = half
        v[idx2(neg2(s))] = -half
        vecs.append(v)
    return vecs


def plus_minus_components(vec):
    """Split a 9-vector into (plus 5-vector, minus 4-vector) coordinates:
    Y_s = (v_s + v_{-s})/2 on representatives, Z_s = (v_s - v_{-s})/2."""
    plus = []
    minus = []
    for k, s in enumerate(REPS):
        a, b = vec[idx2(s)], vec[idx2(neg2(s))]
        if k == 0:
            plus.append(a)
        else:
            plus.append((a + b) / 2)
            minus.append((a - b) / 2)
    return plus, minus


# ---------------------------------------------------------------------------
# automorphisms fixing the center


class HeisAutomorphism:
    """phi(t, u) = (t + f(u), M u) with M symplectic mod 3 and f a
    multiplier exponent table on (Z/3)^{2g}."""

    __slots__ = ("M", "f", "g")

    def __init__(self, M: SymplecticMat, f, validate=True):
        if M.n != 3:
            raise InvariantViolation("automorphisms live over Z/3")
        self.M = M
        self.g = M.g
        vecs = list(product(range(3), repeat=2 * self.g))
        if callable(f):
            self.f = tuple(f(u) % 3 for u in vecs)
        else:
            self.f = tuple(v % 3 for v in f)
        if len(self.f) != 3 ** (2 * self.g):
            raise ValueError("multiplier table of wrong size")
        if validate:
            self._validate(vecs)

    def _validate(self, vecs):
        for u in vecs:
            Mu = self.M.apply(u)
            for v in vecs:
                Mv = self.M.apply(v)
                uv = tuple((a + b) % 3 for a, b in zip(u, v))
                lhs = (self.f[_uidx(uv, self.g)] - self.f[_uidx(u, self.g)]
                       - self.f[_uidx(v, self.g)]) % 3
                rhs = (beta(Mu, Mv) - beta(u, v)) % 3
                if lhs != rhs:
                    raise InvariantViolation("multiplier fails the automorphism identity")

    def f_at(self, u) -> int:
        return self.f[_uidx(u, self.g)]

    def __call__(self, h: HeisElement) -> HeisElement:
        u = h.u()
        Mu = self.M.apply(u)
        g = self.g
        return HeisElement((h.t + self.f_at(u)) % 3, Mu[:g], Mu[g:])

    def compose(self, other):
        """self after other."""
        def f(u):
            return (other.f_at(u) + self.f_at(other.M.apply(u))) % 3
        return HeisAutomorphism(self.M * other.M, f, validate=False)

    def __eq__(self, other):
        return isinstance(other, HeisAutomorphism) and self.M == other.M and self.f == other.f

    def __hash__(self):
        return hash((self.M, self.f))

    def __repr__(self):
        return "HeisAutomorphism(M=%r)" % (self.M,)


def _uidx(u, g):
    i = 0
    for a in u:
        i = i * 3 + (a % 3)
    return i


def identity_automorphism(g: int = 2) -> HeisAutomorphism:
    return HeisAutomorphism(SymplecticMat.identity(g, 3), lambda u: 0, validate=False)


def d_minus_one(g: int = 2) -> HeisAutomorphism:
    M = SymplecticMat([[-1 if i == j else 0 for j in range(2 * g)]
                       for i in range(2 * g)], 3)
    return HeisAutomorphism(M, lambda u: 0, validate=False)


def zeta(a, g: int = 2) -> HeisAutomorphism:
    """Inner-type automorphism (t, u) -> (t + E(u, a), u)."""
    if len(a) != 2 * g:
        raise ValueError("need a in (Z/3)^{2g}")
    M = SymplecticMat.identity(g, 3)
    return HeisAutomorphism(M, lambda u: weil_pairing(u, a), validate=False)


def lift_symplectic(M: SymplecticMat) -> HeisAutomorphism:
    """The unique lift of M commuting with the -1 involution:
    multiplier exponent (1/2)(beta(Mu, Mu) - beta(u, u)) with 1/2 = 2 mod 3."""
    if M.n != 3:
        raise InvariantViolation("lift needs a matrix mod 3")

    def f(u):
        Mu = M.apply(u)
        return 2 * (beta(Mu, Mu) - beta(u, u)) % 3

    return HeisAutomorphism(M, f, validate=False)


def heisenberg_generators(g: int = 2):
    gens = []
    for i in range(g):
        x = [0] * g
        x[i] = 1
        gens.append(HeisElement(0, tuple(x), (0,) * g))
    for i in range(g):
        xs = [0] * g
        xs[i] = 1
        gens.append(HeisElement(0, (0,) * g, tuple(xs)))
    return gens


# ---------------------------------------------------------------------------
# Schur intertwiners


def intertwiner(phi) -> Matrix:
    """The matrix T with T U(h) = U(phi(h)) T for all h, normalized so the
    first nonzero entry in row-major order is 1.

    The constraint system couples unknowns in pairs with unit ratios, so it
    is solved exactly by weighted union-find; the solution space must be
    one-dimensional or the representation theory is broken.
    """
    if isinstance(phi, SymplecticMat):
        phi = lift_symplectic(phi)
    T, dim = _intertwiner_solve(phi)
    if dim != 1:
        raise RepresentationError("intertwiner solution space has dimension %d" % dim)
    return T


def intertwiner_dimension(phi) -> int:
    if isinstance(phi, SymplecticMat):
        phi = lift_symplectic(phi)
    return _intertwiner_solve(phi)[1]


def _intertwiner_solve(phi: HeisAutomorphism):
    if phi.g != 2:
        raise ValueError("intertwiners are materialized at genus 2")
    n = 81
    parent = list(range(n))
    weight = [0] * n      # value(i) = w^weight[i] * value(root)
    dead = [False] * n    # component forced to zero

    def find(i):
        path = []
        while parent[i] != i:
            path.append(i)
            i = parent[i]
        w = 0
        for j in reversed(path):
            w = (weight[j] + w) % 3
            parent[j] = i
            weight[j] = w
        return i

    def union(i, j, d):
        """value(i) = w^d * value(j)."""
        ri, rj = find(i), find(j)
        if ri == rj:
            if (weight[i] - weight[j]) % 3 != d % 3:
                dead[ri] = True
            return
        # attach rj under ri: value(j) = w^{weight(j)} value(rj)
        parent[rj] = ri
        weight[rj] = (weight[i] - d - weight[j]) % 3
        if dead[rj]:
            dead[ri] = True

    for h in heisenberg_generators(2):
        A = schrodinger(h)
        B = schrodinger(phi(h))
        Binv_perm = [0] * 9
        for k in range(9):
            Binv_perm[B.perm[k]] = k
        for i in range(9):
            k0 = Binv_perm[i]
            for a in range(9):
                # T[i, A.perm[a]] = w^(B.expo[k0] - A.expo[a]) T[k0, a]
                union(i * 9 + A.perm[a], k0 * 9 + a,
                      (B.expo[k0] - A.expo[a]) % 3)

    roots = {}
    for i in range(n):
        r = find(i)
        roots.setdefault(r, []).append(i)
    live = [r for r in roots if not dead[r]]
    dim = len(live)
    if dim != 1:
        return None, dim
    root = live[0]
    first = min(roots[root])
    shift = -weight[first] % 3
    rows = [[Cyc(0)] * 9 for _ in range(9)]
    for i in roots[root]:
        rows[i // 9][i % 9] = omega_power((weight[i] + shift) % 3)
    return Matrix(rows), 1


def genperm_right(T: Matrix, A: GenPerm) -> Matrix:
    """T . A for a generalized permutation A, in O(81)."""
    rows = []
    for i in range(9):
        row = [None] * 9
        for a in range(9):
            row[a] = T.rows[i][A.perm[a]] * omega_power(A.expo[a])
        rows.append(row)
    return Matrix(rows)


def genperm_left(B: GenPerm, T: Matrix) -> Matrix:
    """B . T for a generalized permutation B, in O(81)."""
    rows = [None] * 9
    for k in range(9):
        c = omega_power(B.expo[k])
        rows[B.perm[k]] = [c * x for x in T.rows[k]]
    return Matrix(rows)


_CHANGE_OF_BASIS = None


def _basis_matrices():
    global _CHANGE_OF_BASIS
    if _CHANGE_OF_BASIS is None:
        cols = eigenbasis_plus() + eigenbasis_minus()
        P = Matrix([[cols[j][i] for j in range(9)] for i in range(9)])
        aug = [list(P.rows[i]) + [QW.one() if k == i else QW.zero() for k in range(9)]
               for i in range(9)]
        rref, piv = rref_naive(aug, QW)
        assert piv == list(range(9))
        Pinv = Matrix([row[9:] for row in rref])
        _CHANGE_OF_BASIS = (P, Pinv)
    return _CHANGE_OF_BASIS


def block_split(T: Matrix):
    """Conjugate T into the (Y, Z) basis; returns (plus 5x5, minus 4x4,
    off_blocks_zero)."""
    P, Pinv = _basis_matrices()
    TB = Pinv.mat_mul(T.mat_mul(P))
    off_zero = True
    for i in range(9):
        for j in range(9):
            if (i < 5) != (j < 5) and TB.rows[i][j] != Cyc(0):
                off_zero = False
    plus = Matrix([row[:5] for row in TB.rows[:5]])
    minus = Matrix([row[5:] for row in TB.rows[5:]])
    return plus, minus, off_zero


def proportional_matrices(A: Matrix, B: Matrix):
    """Exact projective equality; returns the ratio or None."""
    ratio = None
    for i in range(A.nrows):
        for j in range(A.ncols):
            a, b = A.rows[i][j], B.rows[i][j]
            az, bz = a == Cyc(0), b == Cyc(0)
            if az != bz:
                return None
            if not az:
                r = a / b
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return None
    return ratio


# small verified generating set of Sp(4, F3), used wherever a run over
# "the standard generators" is required; generation is asserted by BFS
# closure in the test suite
STANDARD_SP4_F3_VECTORS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0),
                           (0, 0, 0, 1), (1, 1, 0, 0), (0, 0, 1, 1),
                           (1, 0, 1, 0), (0, 1, 0, 1))


def standard_sp4_generators():
    from .symplectic import transvection
    return [transvection(v, 1, 3) for v in STANDARD_SP4_F3_VECTORS]


def upsilon_plus_block(M: SymplecticMat) -> Matrix:
    """The 5x5 action of M on the even eigenspace, as the plus block of
    the Schur intertwiner in the (Y, Z) basis."""
    plus, _, off = block_split(intertwiner(M))
    if not off:
        raise RepresentationError("intertwiner does not preserve the eigensplit")
    return plus


def upsilon_plus_substitution(M: SymplecticMat):
    """Linear forms implementing the even-block action on coefficient
     5-vectors: variable i maps to sum_j block[j][i] r_j (the transposed
    block; coordinates transform against points)."""
    from .poly import SparsePoly
    block = upsilon_plus_block(M)
    forms = []
    for i in range(5):
        terms = {}
        for j in range(5):
            c = block.rows[j][i]
            if c != Cyc(0):
                exp = [0] * 5
                exp[j] = 1
                terms[tuple(exp)] = c
        forms.append(SparsePoly(5, QW, terms))
    return forms
