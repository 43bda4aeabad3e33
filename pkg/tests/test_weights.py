import random

import pytest

from sl3ktypes.weights import (GWeight, KWeight, ROOT_DATA, restrict,
                               weyl_act_g, weyl_act_k, weyl_elements_g)


def test_restrict_examples():
    assert restrict(GWeight(2, 4)) == KWeight(12)
    assert restrict(GWeight(0, 0)) == KWeight(0)
    # image of the second fixed-point column entry at (a,b) = (2,4)
    assert restrict(GWeight(6, -4)) == KWeight(4)


def test_restrict_additive():
    rng = random.Random(1)
    for _ in range(200):
        x = GWeight(rng.randint(-20, 20), rng.randint(-20, 20))
        y = GWeight(rng.randint(-20, 20), rng.randint(-20, 20))
        assert restrict(x + y) == restrict(x) + restrict(y)


def test_weyl_act_g_examples():
    assert weyl_act_g((1,), GWeight(2, 2)) == GWeight(-2, 4)
    assert weyl_act_g((), GWeight(5, 7)) == GWeight(5, 7)
    # longest element negates and flips the diagram
    for a in range(-3, 4):
        for b in range(-3, 4):
            assert weyl_act_g((1, 2, 1), GWeight(a, b)) == GWeight(-b, -a)


def test_weyl_relations():
    v = GWeight(3, -5)
    assert weyl_act_g((1, 1), v) == v
    assert weyl_act_g((2, 2), v) == v
    assert weyl_act_g((1, 2, 1, 2, 1, 2), v) == v
    assert weyl_act_g((1, 2, 1), v) == weyl_act_g((2, 1, 2), v)


def test_weyl_act_g_rejects_bad_letter():
    with pytest.raises(ValueError):
        weyl_act_g((3,), GWeight(0, 0))


def test_weyl_elements_g_six_with_signs():
    elements = weyl_elements_g()
    assert len(elements) == 6
    assert sorted(sign for _, sign in elements) == [-1, -1, -1, 1, 1, 1]


def test_restrict_of_longest_element_negates():
    for a in range(-4, 5):
        for b in range(-4, 5):
            v = GWeight(a, b)
            assert restrict(weyl_act_g((1, 2, 1), v)) == -restrict(v)


def test_weyl_act_k():
    assert weyl_act_k("s", KWeight(5)) == KWeight(-5)
    assert weyl_act_k("e", KWeight(3)) == KWeight(3)
    assert weyl_act_k("s", KWeight.from_label(0) + ROOT_DATA.rho_k) == KWeight(-1)
    with pytest.raises(ValueError):
        weyl_act_k("w", KWeight(1))


def test_root_data_restriction_multiset():
    restricted = sorted(restrict(beta).half_units for beta in ROOT_DATA.pos_roots_g)
    assert restricted == [2, 2, 4]
    minus_k = list(restricted)
    minus_k.remove(ROOT_DATA.pos_root_k.half_units)
    assert minus_k == sorted(w.half_units
                             for w in ROOT_DATA.pos_roots_g_restricted_minus_k)


def test_kweight_labels():
    assert KWeight.from_label(3) == KWeight(6)
    assert KWeight(6).label == 3
    assert not KWeight(5).is_so3_label
    assert not KWeight(-2).is_so3_label
    with pytest.raises(ValueError):
        KWeight(5).label
