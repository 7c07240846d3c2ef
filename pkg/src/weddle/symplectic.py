"""Finite symplectic groups Sp(2g, Z/n), half-integer characteristics,
quadratic forms on F_2^{2g}, orbits, stabilizers and the congruence-level
classification of integral symplectic matrices.

Conventions fixed once: the symplectic form is <x, y> = x^t J y with
J = [[0, I], [-I, 0]]; characteristics are stored in doubled coordinates,
entries 0/1, so the induced action is integer arithmetic mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np


class InvariantViolation(ValueError):
    pass


class ResourceCapError(RuntimeError):
    pass


def J_matrix(g: int):
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        J[i][g + i] = 1
        J[g + i][i] = -1
    return J


def _mat_mul(A, B, n=None):
    size = len(A)
    out = [[sum(A[i][k] * B[k][j] for k in range(size)) for j in range(size)]
           for i in range(size)]
    if n is not None:
        out = [[x % n for x in row] for row in out]
    return out


def _is_symplectic(M, n=None) -> bool:
    g = len(M) // 2
    J = J_matrix(g)
    Mt = [list(col) for col in zip(*M)]
    JM = _mat_mul(J, M)
    MtJM = _mat_mul(Mt, JM)
    for i in range(2 * g):
        for j in range(2 * g):
            d = MtJM[i][j] - J[i][j]
            if (d % n if n is not None else d) != 0:
                return False
    return True


@dataclass(frozen=True)
class Characteristic:
    """Half-integer characteristic m = (a/2, b/2) in doubled coordinates."""

    g: int
    a: tuple
    b: tuple

    def __post_init__(self):
        if len(self.a) != self.g or len(self.b) != self.g:
            raise ValueError("characteristic of wrong genus")
        if any(x not in (0, 1) for x in self.a + self.b):
            raise ValueError("doubled coordinates must be 0 or 1")

    @property
    def parity(self) -> int:
        return -1 if sum(x * y for x, y in zip(self.a, self.b)) % 2 else 1

    def vector(self):
        return self.a + self.b


def parity(m: Characteristic) -> int:
    return m.parity


def all_characteristics(g: int):
    out = []
    for bits in product((0, 1), repeat=2 * g):
        out.append(Characteristic(g, bits[:g], bits[g:]))
    return out


class SymplecticMat:
    """Element of Sp(2g, Z/n), entries reduced mod n."""

    __slots__ = ("n", "g", "entries")

    def __init__(self, entries, n: int):
        if n < 2:
            raise ValueError("modulus must be at least 2")
        size = len(entries)
        if size % 2 or any(len(r) != size for r in entries):
            raise InvariantViolation("need a square matrix of even size")
        self.n = n
        self.g = size // 2
        self.entries = tuple(tuple(int(x) % n for x in row) for row in entries)
        if not _is_symplectic(self.entries, n):
            raise InvariantViolation("matrix is not symplectic mod %d" % n)

    @classmethod
    def identity(cls, g: int, n: int):
        return cls([[1 if i == j else 0 for j in range(2 * g)] for i in range(2 * g)], n)

    def blocks(self):
        g = self.g
        A = [row[:g] for row in self.entries[:g]]
        B = [row[g:] for row in self.entries[:g]]
        C = [row[:g] for row in self.entries[g:]]
        D = [row[g:] for row in self.entries[g:]]
        return A, B, C, D

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("mixed moduli")
        return SymplecticMat(_mat_mul(self.entries, other.entries, self.n), self.n)

    def apply(self, v):
        return tuple(sum(self.entries[i][j] * v[j] for j in range(2 * self.g)) % self.n
                     for i in range(2 * self.g))

    def __eq__(self, other):
        return isinstance(other, SymplecticMat) and self.n == other.n \
            and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, self.entries))

    def key(self) -> bytes:
        return bytes(x for row in self.entries for x in row)

    def __repr__(self):
        return "SymplecticMat(n=%d, %s)" % (self.n, list(map(list, self.entries)))


class IntSymplecticMat:
    """Element of Sp(2g, Z)."""

    __slots__ = ("g", "entries")

    def __init__(self, entries):
        size = len(entries)
        if size % 2 or any(len(r) != size for r in entries):
            raise InvariantViolation("need a square matrix of even size")
        self.g = size // 2
        self.entries = tuple(tuple(int(x) for x in row) for row in entries)
        if not _is_symplectic(self.entries):
            raise InvariantViolation("matrix is not symplectic over Z")

    @classmethod
    def identity(cls, g: int):
        return cls([[1 if i == j else 0 for j in range(2 * g)] for i in range(2 * g)])

    def reduce(self, n: int) -> SymplecticMat:
        return SymplecticMat(self.entries, n)

    def blocks(self):
        g = self.g
        A = [row[:g] for row in self.entries[:g]]
        B = [row[g:] for row in self.entries[:g]]
        C = [row[:g] for row in self.entries[g:]]
        D = [row[g:] for row in self.entries[g:]]
        return A, B, C, D

    def __mul__(self, other):
        return IntSymplecticMat(_mat_mul(self.entries, other.entries))

    def __repr__(self):
        return "IntSymplecticMat(%s)" % (list(map(list, self.entries)),)


def transvection(v, scale=1, n=None, g=None):
    """t(x) = x + scale * <x, v> * v, symplectic for every scale."""
    if g is None:
        g = len(v) // 2
    J = J_matrix(g)
    Jv = [sum(J[i][j] * v[j] for j in range(2 * g)) for i in range(2 * g)]
    M = [[(1 if i == j else 0) + scale * v[i] * Jv[j] for j in range(2 * g)]
         for i in range(2 * g)]
    if n is None:
        return IntSymplecticMat(M)
    return SymplecticMat(M, n)


def _transvection_vectors(g: int, n: int):
    """Nonzero vectors up to scalar; enough since t_{cv} = t_{v, c^2}."""
    seen = set()
    out = []
    for v in product(range(n), repeat=2 * g):
        if all(x == 0 for x in v):
            continue
        reps = {tuple((c * x) % n for x in v) for c in range(1, n)}
        key = min(reps)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def transvection_generators(g: int, n: int):
    return [transvection(v, 1, n, g) for v in _transvection_vectors(g, n)]


def sp_order_formula(g: int, n: int) -> int:
    """Order of Sp(2g, Z/n); same product formula as the congruence index."""
    val = gamma_index(g, n)
    return int(val)


def gamma_index(g: int, n: int) -> int:
    """Index of the principal congruence subgroup of level n in Sp(2g, Z):
    n^(g(2g+1)) * prod_{p | n} prod_{k=1..g} (1 - p^(-2k))."""
    if n < 2:
        raise ValueError("level must be at least 2")
    val = Fraction(n) ** (g * (2 * g + 1))
    m = n
    p = 2
    primes = []
    while m > 1:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1
    for p in primes:
        for k in range(1, g + 1):
            val *= 1 - Fraction(1, p ** (2 * k))
    if val.denominator != 1:
        raise AssertionError("index formula must be an integer")
    return int(val)


@lru_cache(maxsize=None)
def sp_group_elements(g: int, n: int):
    """All of Sp(2g, Z/n) by breadth-first closure over transvections.

    Only n in {2, 3} is enumerated; the count is checked against the
    closed-form order.  Returns a tuple of byte keys (row-major entries).
    """
    if n not in (2, 3):
        raise ResourceCapError(
            "group enumeration is capped at n in {2, 3}; order for n=%d is %d by formula"
            % (n, sp_order_formula(g, n)))
    size = 2 * g
    gens = np.array([[list(r) for r in t.entries] for t in transvection_generators(g, n)],
                    dtype=np.int16)
    ident = np.eye(size, dtype=np.int16)
    visited = {ident.astype(np.int8).tobytes()}
    frontier = ident[None, :, :]
    while frontier.shape[0]:
        prod_ = np.matmul(gens[:, None], frontier[None, :, :, :]) % n
        prod_ = prod_.reshape(-1, size, size).astype(np.int8)
        flat = np.unique(prod_.reshape(-1, size * size), axis=0)
        new = [row for row in flat if row.tobytes() not in visited]
        for row in new:
            visited.add(row.tobytes())
        if not new:
            break
        frontier = np.array(new, dtype=np.int16).reshape(-1, size, size)
    order = sp_order_formula(g, n)
    if len(visited) != order:
        raise AssertionError("BFS closure found %d elements, formula says %d"
                             % (len(visited), order))
    return tuple(sorted(visited))


def group_order(g: int, n: int, enumerate_group: bool | None = None) -> int:
    """Order of Sp(2g, Z/n).  For n in {2, 3} the group is enumerated and
    the count cross-checked against the formula; other levels use the
    formula only."""
    if enumerate_group is None:
        enumerate_group = n in (2, 3)
    if enumerate_group:
        return len(sp_group_elements(g, n))
    return sp_order_formula(g, n)


def key_to_mat(key: bytes, g: int, n: int) -> SymplecticMat:
    size = 2 * g
    vals = list(key)
    rows = [vals[i * size:(i + 1) * size] for i in range(size)]
    return SymplecticMat(rows, n)


# ---------------------------------------------------------------------------
# action on characteristics


def act_characteristic(M, m: Characteristic) -> Characteristic:
    """Action on half-integer characteristics in doubled coordinates:
    (a'; b') = (D, -C; -B, A)(a; b) + (diag(C D^t); diag(A B^t)) mod 2."""
    if isinstance(M, SymplecticMat):
        if M.n != 2:
            M = SymplecticMat(M.entries, 2)
    elif isinstance(M, IntSymplecticMat):
        M = M.reduce(2)
    else:
        raise InvariantViolation("need a symplectic matrix")
    if M.g != m.g:
        raise ValueError("genus mismatch")
    g = m.g
    A, B, C, D = M.blocks()
    a = [(sum(D[i][j] * m.a[j] for j in range(g))
          - sum(C[i][j] * m.b[j] for j in range(g))
          + sum(C[i][k] * D[i][k] for k in range(g))) % 2
         for i in range(g)]
    b = [(-sum(B[i][j] * m.a[j] for j in range(g))
          + sum(A[i][j] * m.b[j] for j in range(g))
          + sum(A[i][k] * B[i][k] for k in range(g))) % 2
         for i in range(g)]
    return Characteristic(g, tuple(a), tuple(b))


def orbit_characteristics(m: Characteristic):
    """Orbit of m under Sp(2g, Z/2), by closure over transvections."""
    gens = transvection_generators(m.g, 2)
    seen = {m}
    frontier = [m]
    while frontier:
        nxt = []
        for x in frontier:
            for t in gens:
                y = act_characteristic(t, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# quadratic forms on F_2^{2g}


def _f2_vectors(g: int):
    return list(product((0, 1), repeat=2 * g))


def symplectic_pairing_f2(x, y) -> int:
    """<x, y> in {+1, -1}."""
    g = len(x) // 2
    s = sum(x[i] * y[g + i] + x[g + i] * y[i] for i in range(g))
    return -1 if s % 2 else 1


class QuadFormF2:
    """Quadratic form kappa: F_2^{2g} -> {+1, -1} refining the pairing."""

    __slots__ = ("g", "table")

    def __init__(self, g: int, table):
        self.g = g
        vecs = _f2_vectors(g)
        if isinstance(table, dict):
            self.table = tuple(table[v] for v in vecs)
        else:
            self.table = tuple(table)
        if len(self.table) != 4 ** g or any(t not in (1, -1) for t in self.table):
            raise InvariantViolation("value table must be +-1 on all of F_2^{2g}")
        for x in vecs:
            for y in vecs:
                xy = tuple((u + v) % 2 for u, v in zip(x, y))
                if self(xy) * self(x) * self(y) != symplectic_pairing_f2(x, y):
                    raise InvariantViolation("table is not quadratic for the pairing")

    @classmethod
    def from_characteristic(cls, m: Characteristic):
        """kappa(u, v) = (-1)^(u.v + a.v + b.u); translation in m matches
        the torsor action on forms."""
        g = m.g
        tab = []
        for w in _f2_vectors(g):
            u, v = w[:g], w[g:]
            e = (sum(x * y for x, y in zip(u, v))
                 + sum(x * y for x, y in zip(m.a, v))
                 + sum(x * y for x, y in zip(m.b, u)))
            tab.append(-1 if e % 2 else 1)
        obj = cls.__new__(cls)
        obj.g = g
        obj.table = tuple(tab)
        return obj

    def __call__(self, x) -> int:
        idx = 0
        for bit in x:
            idx = idx * 2 + (bit % 2)
        return self.table[idx]

    @property
    def epsilon(self) -> int:
        plus = sum(1 for t in self.table if t == 1)
        if plus == 2 ** (self.g - 1) * (2 ** self.g + 1):
            return 1
        if plus == 2 ** (self.g - 1) * (2 ** self.g - 1):
            return -1
        raise InvariantViolation("value distribution is not that of a theta form")

    def __eq__(self, other):
        return isinstance(other, QuadFormF2) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def transform(self, M: SymplecticMat):
        """kappa composed with M^{-1}; M^{-1} = J M^t J over F_2."""
        if M.n != 2:
            M = SymplecticMat(M.entries, 2)
        g = self.g
        Mt = [list(col) for col in zip(*M.entries)]
        J = [[x % 2 for x in row] for row in J_matrix(g)]
        Minv = _mat_mul(_mat_mul(J, Mt, 2), J, 2)
        tab = []
        for x in _f2_vectors(g):
            y = tuple(sum(Minv[i][j] * x[j] for j in range(2 * g)) % 2
                      for i in range(2 * g))
            tab.append(self(y))
        obj = QuadFormF2.__new__(QuadFormF2)
        obj.g = g
        obj.table = tuple(tab)
        return obj


def torsor_action(x, kappa: QuadFormF2) -> QuadFormF2:
    """(x . kappa)(y) = <x, y> kappa(y)."""
    g = kappa.g
    tab = []
    for y in _f2_vectors(g):
        tab.append(symplectic_pairing_f2(x, y) * kappa(y))
    obj = QuadFormF2.__new__(QuadFormF2)
    obj.g = g
    obj.table = tuple(tab)
    return obj


def all_quad_forms(g: int):
    return [QuadFormF2.from_characteristic(m) for m in all_characteristics(g)]


# ---------------------------------------------------------------------------
# stabilizers and the congruence classification

BASE_ODD = Characteristic(2, (1, 0), (1, 0))


@dataclass
class StabilizerReport:
    order: int
    orbit_sizes_on_odd: tuple
    keys: frozenset


@lru_cache(maxsize=None)
def stabilizer(m: Characteristic) -> StabilizerReport:
    """Stabilizer in Sp(4, Z/2) of the quadratic form attached to m,
    with its orbit structure on the six odd forms."""
    if m.g != 2:
        raise ValueError("stabilizers are enumerated for genus 2 only")
    kappa = QuadFormF2.from_characteristic(m)
    elements = []
    for key in sp_group_elements(2, 2):
        M = key_to_mat(key, 2, 2)
        if kappa.transform(M) == kappa:
            elements.append(M)
    odd_forms = [q for q in all_quad_forms(2) if q.epsilon == -1]
    remaining = set(range(len(odd_forms)))
    sizes = []
    while remaining:
        seed = remaining.pop()
        orb = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for i in frontier:
                for M in elements:
                    qi = odd_forms[i].transform(M)
                    j = odd_forms.index(qi)
                    if j not in orb:
                        orb.add(j)
                        nxt.append(j)
            frontier = nxt
        remaining -= orb
        sizes.append(len(orb))
    return StabilizerReport(len(elements), tuple(sorted(sizes)),
                            frozenset(M.key() for M in elements))


def classify_gamma(G: IntSymplecticMat) -> set:
    """All congruence labels satisfied by an integral symplectic matrix."""
    if not isinstance(G, IntSymplecticMat):
        raise InvariantViolation("need an integral symplectic matrix")
    if G.g != 2:
        raise ValueError("classification implemented for genus 2")
    labels = {"Gamma2"}

    def is_id_mod(n):
        return all((G.entries[i][j] - (1 if i == j else 0)) % n == 0
                   for i in range(4) for j in range(4))

    if is_id_mod(2):
        labels.add("Gamma2(2)")
    if is_id_mod(3):
        labels.add("Gamma2(3)")
    if is_id_mod(6):
        labels.add("Gamma2(6)")
    if is_id_mod(3):
        A, B, C, D = G.blocks()
        g = G.g
        dAB = [sum(A[i][k] * B[i][k] for k in range(g)) for i in range(g)]
        dCD = [sum(C[i][k] * D[i][k] for k in range(g)) for i in range(g)]
        if all(x % 6 == 0 for x in dAB + dCD):
            labels.add("Gamma2(3,6)")
        if G.reduce(2).key() in stabilizer(BASE_ODD).keys:
            labels.add("Gamma2(3)-")
    return labels
