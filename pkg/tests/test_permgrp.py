from collections import Counter

import pytest

from s6quartics import permgrp as pg


def test_generate_s6():
    S6 = pg.generate([pg.from_cycles([(0, 1)]), pg.from_cycles([(0, 1, 2, 3, 4, 5)])])
    assert len(S6) == 720


def test_classes_s6():
    cls = pg.conjugacy_classes(pg.named("S6"))
    assert len(cls) == 11
    assert sorted(len(c) for c in cls) == sorted([1, 15, 45, 15, 40, 120, 40, 90, 90, 144, 120])


def test_classes_a6():
    assert sorted(len(c) for c in pg.conjugacy_classes(pg.named("A6"))) == [1, 40, 40, 45, 72, 72, 90]


@pytest.mark.parametrize("name", sorted(pg.SUBGROUPS))
def test_named_orders(name):
    assert len(pg.named(name)) == pg.SUBGROUPS[name][2]


def test_nonstandard_s5():
    S5 = pg.nonstandard_s5()
    assert len(S5) == 120 and S5.is_transitive()
    # transpositions of S5 go to triple transpositions
    t = pg.nonstandard_embedding(pg.from_cycles([(0, 1)], 5))
    assert pg.cycle_type(t) == (2, 2, 2)
    st = pg.named("S5st")
    assert not st.is_transitive() and st.orbit(5) == [5]


def test_embedding_is_homomorphism():
    a = pg.from_cycles([(0, 1, 2)], 5)
    b = pg.from_cycles([(1, 3), (2, 4)], 5)
    f = pg.nonstandard_embedding
    assert f(pg.mul(a, b)) == pg.mul(f(a), f(b))


def test_subgroup_containments():
    S5 = pg.named("S5nst")
    for name in ("A5nst", "S4nst", "A4nst", "D12nst", "F20", "D10", "S3p", "V4", "mu5"):
        assert pg.named(name).is_subgroup_of(S5), name
    for name in ("D10", "S3p", "V4", "mu5", "A4nst"):
        assert pg.named(name).is_subgroup_of(pg.named("A5nst")), name


def test_f20_fixes_a_point():
    assert pg.named("F20").stabilizer_elements(0) == pg.named("F20").elements


def test_cosets():
    A6, A5 = pg.named("A6"), pg.named("A5nst")
    reps = A6.left_cosets(A5)
    assert len(reps) == 6 and reps[0] == pg.identity()


def test_sign_and_order():
    g = pg.from_cycles([(0, 1, 2), (3, 4)])
    assert pg.sign(g) == -1 and pg.order(g) == 6
    assert pg.cycle_type(g) == (3, 2)
    assert pg.mul(g, pg.inv(g)) == pg.identity()


def test_fusion_counts_plain():
    c = pg.fusion_counts(pg.named("A5st").elements, pg.s6_class_label)
    assert c == Counter({(): 1, (2, 2): 15, (3,): 20, (5,): 24})
