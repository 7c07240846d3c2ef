"""The level-3 Heisenberg group and its nine-dimensional representation.

Shows the group law, the Weil pairing as a commutator, the basis-flip
involution with its 5 + 4 eigensplit, and a Schur intertwiner realizing a
symplectic matrix projectively.
"""

import random

from weddle.heisenberg import (HeisElement, block_split, commutator_exponent,
                               enumerate_group, h_mul, intertwiner,
                               involution_j, lift_symplectic, schrodinger,
                               standard_sp4_generators, weil_pairing)

rng = random.Random(0)
G = enumerate_group(2)
print("group order at genus 2:", len(G))

h1 = HeisElement(0, (1, 0), (0, 0))
h2 = HeisElement(0, (0, 0), (1, 0))
print("h1 h2 =", h_mul(h1, h2))
print("h2 h1 =", h_mul(h2, h1))
print("commutator exponent:", commutator_exponent(h1, h2),
      "= pairing", weil_pairing(h1.u(), h2.u()))

h = rng.choice(G)
print("\nU(h) for h =", h)
print("  permutation:", schrodinger(h).perm)
print("  exponents:  ", schrodinger(h).expo)

j = involution_j()
print("\nj squared is the identity:", j.compose(j).perm == tuple(range(9)))

M = standard_sp4_generators()[0]
T = intertwiner(M)
plus, minus, off = block_split(T)
print("intertwiner of a transvection preserves the eigensplit:", off)
print("  even block is 5 x 5, odd block is 4 x 4:",
      (plus.nrows, plus.ncols), (minus.nrows, minus.ncols))
phi = lift_symplectic(M)
ok = all(
    (lambda A, B: T.mat_mul(A.to_matrix()).rows == B.to_matrix().mat_mul(T).rows)
    (schrodinger(x), schrodinger(phi(x)))
    for x in (rng.choice(G) for _ in range(10)))
print("T U(h) = U(phi h) T on random elements:", ok)
