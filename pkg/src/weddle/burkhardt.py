"""Quadric systems through a level-3 abelian surface, the symmetric and
skew restricted-coefficient matrices, both Steinerian maps, and the
interpolated invariant quartic threefold.

Coefficient convention: the invariant quadric is

    f_a = sum over all s in (Z/3)^2 of  r_s X_{s+a} X_{-s+a},

with r_s = r_{-s} stored on the five orbit representatives
(0,0), (0,1), (1,0), (1,1), (1,2).  With this convention the skew matrix
kernel at Z = (1,1,1,1) is spanned by (6, -3, 1, 1, 1).  The rows of the
restricted matrices are rescaled by diag(1,2,2,2,2) once more, which is a
kernel-preserving choice that makes the symmetric matrix symmetric and the
skew matrix skew.

The invariant quartic is interpolated in the kernel coordinates r, where
its matrix of second partials reproduces the symmetric quadric matrix up
to one scalar and no permutation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .fields import CC, Domain, GF, PrimeField, QQ
from .heisenberg import REPS, idx2, neg2, rep_of
from .linalg import (Matrix, ShapeError, eval_poly_mod_p, fit_hypersurface,
                     nullspace, proj_points_mod_p, sub_pfaffian_kernel)
from .poly import SparsePoly, exponents_of_degree

D_SCALE = (1, 2, 2, 2, 2)

ENUM_CAP_ENV = "WEDDLE_ENUM_CAP"
DEFAULT_ENUM_CAP = 10 ** 6


def enum_cap() -> int:
    return int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))


class ResourceCapError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# the quadric system


def quadrics_f(r, domain: Domain):
    """The nine quadrics f_a in the variables X_s, s in (Z/3)^2, from the
    five stored coefficients."""
    r = [domain.coerce(x) for x in r]
    out = []
    for a0 in range(3):
        for a1 in range(3):
            a = (a0, a1)
            f = SparsePoly.zero(9, domain)
            for k, s in enumerate(REPS):
                i = idx2(((s[0] + a[0]) % 3, (s[1] + a[1]) % 3))
                j = idx2(((-s[0] + a[0]) % 3, (-s[1] + a[1]) % 3))
                exp = [0] * 9
                exp[i] += 1
                exp[j] += 1
                mult = domain.from_int(1 if k == 0 else 2)
                f = f + SparsePoly.monomial(tuple(exp), domain, r[k] * mult)
            out.append(f)
    return out


def translate_poly(f: SparsePoly, a) -> SparsePoly:
    """Rename X_t to X_{t+a}; the lagrangian translation action on the
    nine coordinates."""
    perm = [idx2(((t0 + a[0]) % 3, (t1 + a[1]) % 3))
            for t0 in range(3) for t1 in range(3)]
    return f.permute_variables(perm)


def j_poly(f: SparsePoly) -> SparsePoly:
    """Substitute X_t -> X_{-t}."""
    perm = [idx2(neg2((t0, t1))) for t0 in range(3) for t1 in range(3)]
    return f.permute_variables(perm)


@lru_cache(maxsize=None)
def matrix_plus() -> Matrix:
    """Symmetric 5x5 matrix of quadrics in Y_0..Y_4 with
    (M_+ r)_a = scale_a * (f_a restricted to Z = 0)."""
    rows = []
    for arow, a in enumerate(REPS):
        row = []
        for k, s in enumerate(REPS):
            i = rep_of(((s[0] + a[0]) % 3, (s[1] + a[1]) % 3))[0]
            j = rep_of(((-s[0] + a[0]) % 3, (-s[1] + a[1]) % 3))[0]
            exp = [0] * 5
            exp[i] += 1
            exp[j] += 1
            c = Fraction(D_SCALE[arow] * D_SCALE[k])
            row.append(SparsePoly.monomial(tuple(exp), QQ, c))
        rows.append(row)
    M = Matrix(rows)
    assert M.is_symmetric()
    return M


@lru_cache(maxsize=None)
def matrix_minus() -> Matrix:
    """Skew 5x5 matrix of quadrics in Z_1..Z_4 with
    (M_- r)_a = scale_a * (f_a restricted to Y = 0)."""
    rows = []
    for arow, a in enumerate(REPS):
        row = []
        for k, s in enumerate(REPS):
            t1 = ((s[0] + a[0]) % 3, (s[1] + a[1]) % 3)
            t2 = ((-s[0] + a[0]) % 3, (-s[1] + a[1]) % 3)
            if t1 == (0, 0) or t2 == (0, 0):
                row.append(SparsePoly.zero(4, QQ))
                continue
            i, sg1 = rep_of(t1)
            j, sg2 = rep_of(t2)
            exp = [0] * 4
            exp[i - 1] += 1
            exp[j - 1] += 1
            c = Fraction(sg1 * sg2 * D_SCALE[arow] * D_SCALE[k])
            row.append(SparsePoly.monomial(tuple(exp), QQ, c))
        rows.append(row)
    M = Matrix(rows)
    assert M.is_skew()
    return M


@lru_cache(maxsize=None)
def steinerian_quartics():
    """The five signed sub-pfaffians of the skew matrix: quartics in
    Z_1..Z_4 spanning the kernel, with M_-[Z] . r(Z) = 0 identically."""
    return tuple(sub_pfaffian_kernel(matrix_minus()))


def steinerian_minus(z, domain: Domain):
    """Kernel coordinates r(z) of the skew matrix at z in P^3, or None when
    z is a base point (all five sub-pfaffians vanish)."""
    z = [domain.coerce(x) for x in z]
    vals = [_eval_int_poly(q, z, domain) for q in steinerian_quartics()]
    if all(domain.is_zero(v) for v in vals):
        return None
    return vals


def _eval_int_poly(p: SparsePoly, point, domain: Domain):
    acc = domain.zero()
    for exp, c in p.terms.items():
        t = domain.coerce(c)
        for x, e in zip(point, exp):
            for _ in range(e):
                t = t * x
        acc = acc + t
    return acc


def steinerian_plus(y, domain: Domain = None):
    """Kernel of the symmetric matrix evaluated at y in plus coordinates.

    Returns ("kernel", r) at corank 1, ("rank", rk) otherwise; generic
    points are full rank (not on the degeneracy hypersurface)."""
    M = matrix_plus()
    if domain is not None:
        vals = [[_eval_int_poly(M.rows[i][j], y, domain) for j in range(5)]
                for i in range(5)]
        basis = nullspace(vals, domain)
        if len(basis) == 0:
            return ("rank", 5)
        if len(basis) == 1:
            return ("kernel", basis[0])
        return ("rank", 5 - len(basis))
    # floating path
    yc = [complex(x) for x in y]
    arr = np.array([[complex(_eval_int_poly(M.rows[i][j], yc, CC))
                     for j in range(5)] for i in range(5)])
    _, s, vh = np.linalg.svd(arr)
    corank = int(np.sum(s < 1e-8 * s[0]))
    if corank == 0:
        return ("rank", 5)
    if corank == 1:
        return ("kernel", list(np.conj(vh[-1])))
    return ("rank", 5 - corank)


# ---------------------------------------------------------------------------
# deriving the invariant quartic


@dataclass
class BurkhardtDerivation:
    quartic: SparsePoly
    nullity: int
    samples_used: int


def _sample_steinerian_points(domain: Domain, rng, count: int):
    pts = []
    tries = 0
    fn = steinerian_minus
    while len(pts) < count:
        tries += 1
        if tries > 50 * count:
            raise RuntimeError("sampling starved; field too small?")
        z = [domain.random(rng) for _ in range(4)]
        q = fn(z, domain)
        if q is None:
            continue
        pts.append(q)
    return pts


def derive_burkhardt(domain: Domain, rng, samples: int = 160) -> BurkhardtDerivation:
    """Interpolate the unique quartic through the Steinerian image in
    kernel coordinates.  Nullity 0 asks for more samples; nullity >= 2 is
    a fatal inconsistency."""
    pts = _sample_steinerian_points(domain, rng, samples)
    fit = fit_hypersurface(pts, 4, domain)
    if len(fit.forms) == 0:
        raise RuntimeError("interpolation nullity 0: retry with more samples")
    if len(fit.forms) > 1:
        raise RuntimeError("interpolation nullity %d: inconsistent Steinerian sampling"
                           % len(fit.forms))
    B = fit.forms[0]
    if isinstance(domain, PrimeField):
        B = _monic_mod_p(B, domain)
    return BurkhardtDerivation(B, len(fit.forms), len(pts))


def _monic_mod_p(B: SparsePoly, domain: PrimeField) -> SparsePoly:
    lead = max(B.terms)
    inv = domain.one() / B.terms[lead]
    return B.scale(inv)


def rational_reconstruct(c: int, m: int) -> Fraction:
    """Smallest rational p/q congruent to c mod m with |p|, |q| <= sqrt(m/2)."""
    c %= m
    r0, r1 = m, c
    s0, s1 = 0, 1
    bound = int((m / 2) ** 0.5)
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if abs(s1) > bound or s1 == 0:
        raise ValueError("no small rational reconstruction")
    return Fraction(r1, s1)


def derive_burkhardt_exact(rng, primes=(101, 103, 109)) -> SparsePoly:
    """Exact rational invariant quartic by modular interpolation and
    rational reconstruction, certified by symbolic re-substitution."""
    exps = exponents_of_degree(5, 4)
    residues = []
    for p in primes:
        dom = GF(p)
        B = derive_burkhardt(dom, rng).quartic
        residues.append([B.terms.get(e, dom.zero()).val for e in exps])
    m = 1
    for p in primes:
        m *= p
    combined = []
    for i in range(len(exps)):
        c, mod = 0, 1
        for p, vec in zip(primes, residues):
            # CRT step
            t = ((vec[i] - c) * pow(mod, -1, p)) % p
            c, mod = c + mod * t, mod * p
        combined.append(rational_reconstruct(c, m))
    B = SparsePoly(5, QQ, {e: c for e, c in zip(exps, combined) if c != 0})
    B = B.primitive_normalized()
    if not burkhardt_vanishes_symbolically(B):
        raise RuntimeError("reconstructed quartic fails symbolic certification")
    return B


def burkhardt_vanishes_symbolically(B: SparsePoly) -> bool:
    """B composed with the five Steinerian quartics is the zero polynomial
    in Z_1..Z_4; this certifies B exactly."""
    composed = B.substitute_linear(list(steinerian_quartics()))
    return composed.is_zero()


# ---------------------------------------------------------------------------
# the second-partials identification


@dataclass
class HessianMatch:
    scalar: Fraction
    permutation: tuple
    signs: tuple

    def describe(self):
        return {"scalar": str(self.scalar), "permutation": list(self.permutation),
                "signs": list(self.signs)}


def hessian_matrix(B: SparsePoly) -> Matrix:
    rows = []
    for i in range(5):
        rows.append([B.partial(i).partial(j) for j in range(5)])
    return Matrix(rows)


def hessian_match(B: SparsePoly):
    """All (scalar, signed permutation) pairs reconciling the matrix of
    second partials of B with the symmetric quadric matrix.  Signs are
    canonicalized with the first entry +1 (a global flip acts trivially on
    quadratic entries)."""
    H = hessian_matrix(B)
    M = matrix_plus()
    matches = []
    for perm in permutations(range(5)):
        for signbits in product((1, -1), repeat=4):
            signs = (1,) + signbits
            cand = _transform_monomial_matrix(M, perm, signs)
            c = _matrix_ratio(H, cand)
            if c is not None:
                matches.append(HessianMatch(c, perm, signs))
    return matches


def _transform_monomial_matrix(M: Matrix, perm, signs):
    """Entry (i, j) becomes s_i s_j M[perm(i)][perm(j)] with variable
    Y_{perm(k)} renamed to s_k Y_k."""
    inv = [0] * 5
    for k, p in enumerate(perm):
        inv[p] = k
    out = []
    for i in range(5):
        row = []
        for j in range(5):
            src = M.rows[perm[i]][perm[j]]
            terms = {}
            for exp, c in src.terms.items():
                nexp = [0] * 5
                sgn = 1
                for var, e in enumerate(exp):
                    if e:
                        nexp[inv[var]] += e
                        sgn *= signs[inv[var]] ** e
                terms[tuple(nexp)] = c * sgn * signs[i] * signs[j]
            row.append(SparsePoly(5, QQ, terms))
        out.append(row)
    return Matrix(out)


def _matrix_ratio(A: Matrix, B: Matrix):
    ratio = None
    for i in range(5):
        for j in range(5):
            a, b = A.rows[i][j], B.rows[i][j]
            if a.is_zero() != b.is_zero():
                return None
            if a.is_zero():
                continue
            if set(a.terms) != set(b.terms):
                return None
            for e in a.terms:
                r = Fraction(a.terms[e]) / Fraction(b.terms[e])
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return None
    return ratio


def hessian_determinant_degree(B: SparsePoly) -> int:
    from .linalg import det_ring
    return det_ring(hessian_matrix(B)).total_degree()


# ---------------------------------------------------------------------------
# finite-field enumeration


def _eval_quartics_mod_p(points: np.ndarray, p: int) -> np.ndarray:
    """Evaluate the five kernel quartics on an (N, 4) array mod p."""
    return np.stack([eval_poly_mod_p(q, points, p) for q in steinerian_quartics()],
                    axis=1)


def count_fibers_ff(p: int):
    """Histogram of fiber sizes of the degree-6 quartic parametrization
    over P^3(F_p), plus the count of rational base points."""
    if p % 3 != 1 or p > 200:
        raise ShapeError("need a prime p = 1 mod 3, p <= 200")
    n_states = p ** 3 + p ** 2 + p + 1
    if n_states > enum_cap():
        raise ResourceCapError("enumeration of %d states exceeds cap %d "
                               "(override with %s)" % (n_states, enum_cap(), ENUM_CAP_ENV))
    pts = proj_points_mod_p(p, 3)
    vals = _eval_quartics_mod_p(pts, p)
    base_mask = np.all(vals == 0, axis=1)
    n_base = int(base_mask.sum())
    img = vals[~base_mask]
    # projective normalization: divide by the first nonzero coordinate
    inv = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        inv[x] = pow(x, p - 2, p)
    first_nz = np.argmax(img != 0, axis=1)
    scale = inv[img[np.arange(img.shape[0]), first_nz]]
    img = img * scale[:, None] % p
    _, counts = np.unique(img, axis=0, return_counts=True)
    hist = {}
    for c in counts:
        hist[int(c)] = hist.get(int(c), 0) + 1
    return {"p": p, "points": int(pts.shape[0]), "base_points": n_base,
            "fiber_histogram": dict(sorted(hist.items()))}


def count_base_locus_ff(p: int, k: int = 1) -> int:
    """Rational points of the base locus of the five quartics over F_{p^k}."""
    if p % 3 != 1 or p > 200 or k not in (1, 2):
        raise ShapeError("need p = 1 mod 3, p <= 200, k in {1, 2}")
    n_states = sum(p ** (k * d) for d in range(4))
    if n_states > enum_cap():
        raise ResourceCapError("enumeration of %d states exceeds cap %d "
                               "(override with %s)" % (n_states, enum_cap(), ENUM_CAP_ENV))
    if k == 1:
        pts = proj_points_mod_p(p, 3)
        vals = _eval_quartics_mod_p(pts, p)
        return int(np.all(vals == 0, axis=1).sum())
    return _base_locus_quadratic_ext(p)


def _nonresidue(p: int) -> int:
    for d in range(2, p):
        if pow(d, (p - 1) // 2, p) == p - 1:
            return d
    raise AssertionError("no quadratic nonresidue")


def _base_locus_quadratic_ext(p: int) -> int:
    """Count over F_{p^2} = F_p[s]/(s^2 - d).  Coordinates are (a, b) pairs."""
    d = _nonresidue(p)
    q = p * p

    def all_elems():
        a = np.repeat(np.arange(p, dtype=np.int64), p)
        b = np.tile(np.arange(p, dtype=np.int64), p)
        return a, b

    def charts():
        ea, eb = all_elems()
        out = []
        # chart (1, y, z, w)
        ya = np.repeat(np.repeat(ea, q), q)
        yb = np.repeat(np.repeat(eb, q), q)
        za = np.tile(np.repeat(ea, q), q)
        zb = np.tile(np.repeat(eb, q), q)
        wa = np.tile(np.tile(ea, q), q)
        wb = np.tile(np.tile(eb, q), q)
        one = np.ones(q ** 3, dtype=np.int64)
        zero = np.zeros(q ** 3, dtype=np.int64)
        out.append(((one, zero), (ya, yb), (za, zb), (wa, wb)))
        # chart (0, 1, z, w)
        za2 = np.repeat(ea, q)
        zb2 = np.repeat(eb, q)
        wa2 = np.tile(ea, q)
        wb2 = np.tile(eb, q)
        one = np.ones(q ** 2, dtype=np.int64)
        zero = np.zeros(q ** 2, dtype=np.int64)
        out.append(((zero, zero), (one, zero), (za2, zb2), (wa2, wb2)))
        # chart (0, 0, 1, w)
        one = np.ones(q, dtype=np.int64)
        zero = np.zeros(q, dtype=np.int64)
        out.append(((zero, zero), (zero, zero), (one, zero), (ea, eb)))
        # chart (0, 0, 0, 1)
        one = np.ones(1, dtype=np.int64)
        zero = np.zeros(1, dtype=np.int64)
        out.append(((zero, zero), (zero, zero), (zero, zero), (one, zero)))
        return out

    def fmul(x, y):
        return ((x[0] * y[0] + d * (x[1] * y[1])) % p,
                (x[0] * y[1] + x[1] * y[0]) % p)

    total = 0
    for coords in charts():
        n = coords[0][0].shape[0]
        good = np.ones(n, dtype=bool)
        for quartic in steinerian_quartics():
            acc = (np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64))
            for exp, c in quartic.terms.items():
                term = (np.full(n, int(c) % p, dtype=np.int64),
                        np.zeros(n, dtype=np.int64))
                for v, e in enumerate(exp):
                    for _ in range(e):
                        term = fmul(term, coords[v])
                acc = ((acc[0] + term[0]) % p, (acc[1] + term[1]) % p)
            good &= (acc[0] == 0) & (acc[1] == 0)
            if not good.any():
                break
        total += int(good.sum())
    return total
