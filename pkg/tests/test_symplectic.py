import random
from itertools import product

import pytest

from weddle.symplectic import (BASE_ODD, Characteristic, IntSymplecticMat,
                               InvariantViolation, QuadFormF2,
                               ResourceCapError, SymplecticMat,
                               act_characteristic, all_characteristics,
                               all_quad_forms, classify_gamma, gamma_index,
                               group_order, key_to_mat, orbit_characteristics,
                               parity, sp_group_elements, sp_order_formula,
                               stabilizer, torsor_action, transvection,
                               transvection_generators)


def test_parity_examples():
    assert parity(Characteristic(2, (0, 0), (0, 0))) == 1
    assert parity(Characteristic(2, (1, 0), (1, 0))) == -1
    census = [m.parity for m in all_characteristics(2)]
    assert census.count(1) == 10 and census.count(-1) == 6


def test_characteristic_validation():
    with pytest.raises(ValueError):
        Characteristic(2, (0, 2), (0, 0))
    with pytest.raises(ValueError):
        Characteristic(2, (0,), (0, 0))


def test_symplectic_validation():
    with pytest.raises(InvariantViolation):
        SymplecticMat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], 3)
    SymplecticMat.identity(2, 3)
    with pytest.raises(InvariantViolation):
        IntSymplecticMat([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


def test_transvections_are_symplectic():
    rng = random.Random(0)
    for _ in range(20):
        v = tuple(rng.randint(-3, 3) for _ in range(4))
        if all(x == 0 for x in v):
            continue
        transvection(v, rng.randint(1, 6))  # constructor validates


def test_action_identity_and_parity():
    m = Characteristic(2, (1, 0), (0, 1))
    ident = SymplecticMat.identity(2, 2)
    assert act_characteristic(ident, m) == m
    rng = random.Random(1)
    keys = sp_group_elements(2, 2)
    for _ in range(200):
        M = key_to_mat(rng.choice(keys), 2, 2)
        x = rng.choice(all_characteristics(2))
        assert act_characteristic(M, x).parity == x.parity


def test_action_is_left_action():
    rng = random.Random(2)
    keys = sp_group_elements(2, 2)
    for _ in range(100):
        M = key_to_mat(rng.choice(keys), 2, 2)
        N = key_to_mat(rng.choice(keys), 2, 2)
        m = rng.choice(all_characteristics(2))
        assert act_characteristic(M * N, m) == act_characteristic(
            M, act_characteristic(N, m))


def test_orbits_partition():
    even_orbit = orbit_characteristics(Characteristic(2, (0, 0), (0, 0)))
    odd_orbit = orbit_characteristics(BASE_ODD)
    assert len(even_orbit) == 10 and len(odd_orbit) == 6
    assert all(m.parity == 1 for m in even_orbit)
    assert all(m.parity == -1 for m in odd_orbit)
    assert even_orbit | odd_orbit == set(all_characteristics(2))


def test_torsor_action():
    kappa = QuadFormF2.from_characteristic(Characteristic(2, (0, 0), (0, 0)))
    zero = (0, 0, 0, 0)
    assert torsor_action(zero, kappa) == kappa
    for x in product((0, 1), repeat=4):
        assert torsor_action(x, kappa).epsilon == kappa(x) * kappa.epsilon
    translates = {torsor_action(x, kappa) for x in product((0, 1), repeat=4)}
    assert len(translates) == 16
    assert translates == set(all_quad_forms(2))


def test_quadratic_form_validation_and_census():
    forms = all_quad_forms(2)
    eps = [q.epsilon for q in forms]
    assert eps.count(1) == 10 and eps.count(-1) == 6
    # the multiplicative quadratic identity is enforced by the constructor
    QuadFormF2(2, forms[0].table)
    bad = list(forms[0].table)
    bad[3] = -bad[3]
    with pytest.raises(InvariantViolation):
        QuadFormF2(2, bad)


def test_group_orders():
    assert group_order(2, 2) == 720
    assert group_order(2, 3) == 51840
    # brute force at genus 1: every invertible 2x2 matrix mod 2 is symplectic
    count = 0
    for entries in product((0, 1), repeat=4):
        M = [[entries[0], entries[1]], [entries[2], entries[3]]]
        det = (entries[0] * entries[3] - entries[1] * entries[2]) % 2
        if det == 1:
            count += 1
    assert group_order(1, 2) == count == 6


def test_group_order_cap():
    with pytest.raises(ResourceCapError):
        sp_group_elements(2, 5)
    assert group_order(2, 5, enumerate_group=False) == sp_order_formula(2, 5)


def test_gamma_index_values():
    assert gamma_index(2, 3) == 51840
    assert gamma_index(2, 2) == 720
    assert gamma_index(2, 6) == 720 * 51840
    assert gamma_index(2, 6) // gamma_index(2, 3) == 720


def test_stabilizers():
    odd = stabilizer(BASE_ODD)
    assert odd.order == 120
    assert odd.orbit_sizes_on_odd == (1, 5)
    even = stabilizer(Characteristic(2, (0, 0), (0, 0)))
    assert even.order == 72
    assert even.orbit_sizes_on_odd == (6,)
    # index bookkeeping: [Sp : O-] = 6
    assert 720 // odd.order == 6


def test_classify_identity():
    labels = classify_gamma(IntSymplecticMat.identity(2))
    assert labels == {"Gamma2", "Gamma2(2)", "Gamma2(3)", "Gamma2(6)",
                      "Gamma2(3,6)", "Gamma2(3)-"}


def test_classify_level_six_transvection():
    labels = classify_gamma(transvection((1, 0, 0, 0), 6))
    assert {"Gamma2(6)", "Gamma2(3,6)", "Gamma2(3)-", "Gamma2(3)"} <= labels
    assert "Gamma2(2)" in labels


def test_classify_level_three_transvections():
    inside = classify_gamma(transvection((1, 0, 0, 0), 3))
    assert "Gamma2(3)" in inside and "Gamma2(3)-" in inside
    assert "Gamma2(6)" not in inside
    outside = classify_gamma(transvection((0, 1, 0, 0), 3))
    assert "Gamma2(3)" in outside and "Gamma2(3)-" not in outside


def test_classify_rejects_non_symplectic():
    with pytest.raises(InvariantViolation):
        classify_gamma([[1, 0], [0, 1]])


def test_transvection_generator_counts():
    assert len(transvection_generators(2, 2)) == 15
    assert len(transvection_generators(2, 3)) == 40
