import random

import pytest
from hypothesis import given, settings, strategies as st

from s6quartics import exactmath as em
from s6quartics import forms as fm
from s6quartics.forms import MForm, BinaryForm

K = em.field(12)


def rand_form(rng, n, d):
    return MForm(n, K, {m: K(rng.randint(-3, 3)) for m in fm.monomials(n, d)})


def rand_mat(rng, n):
    while True:
        A = em.to_mat([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)], K)
        if not em.det(A).is_zero():
            return A


def test_act_identity():
    f = rand_form(random.Random(0), 4, 3)
    assert fm.act(em.eye(4, K), f) == f


@given(st.integers(0, 10 ** 6))
@settings(max_examples=15, deadline=None)
def test_action_law(seed):
    rng = random.Random(seed)
    f = rand_form(rng, 3, 3)
    g, h = rand_mat(rng, 3), rand_mat(rng, 3)
    # act(g, f)(x) = f(g^-1 x) is a left action
    assert fm.act(em.matmul(g, h), f) == fm.act(g, fm.act(h, f))


def test_power_sum_symmetric(world):
    from s6quartics import reptheory as rt, permgrp as pg
    ctx = world.ctx
    s4 = MForm.power_sum(6, 4, ctx)
    s2 = MForm.power_sum(6, 2, ctx)
    for g in pg.named("A6").gens:
        assert fm.act(em.to_mat(rt.so6_model(g), ctx), s4) == s4
    for g in pg.named("S6").gens:
        assert fm.act(em.to_mat(rt.so6_model(g), ctx), s2) == s2


@given(st.integers(0, 10 ** 6))
@settings(max_examples=20, deadline=None)
def test_euler_identity(seed):
    rng = random.Random(seed)
    f = rand_form(rng, 4, 4)
    p = [K(rng.randint(-4, 4)) for _ in range(4)]
    g = fm.gradient(f, p)
    assert sum((a * b for a, b in zip(p, g)), K.zero) == 4 * f.evaluate(p)


def test_gradient_examples():
    ctx = em.field(120)
    s4 = MForm.power_sum(6, 4, ctx)
    p = [ctx(x) for x in (-5, 1, 1, 1, 1, 1)]
    assert fm.gradient(s4, p) == [ctx(4 * x) for x in (-125, 1, 1, 1, 1, 1)]
    w = ctx.zeta(1, 3)
    q = [ctx.one, ctx.one, w, w, w * w, w * w]
    assert fm.gradient(s4, q) == [ctx(4)] * 6
    assert MForm.power_sum(6, 2, ctx).evaluate(q).is_zero()


def test_hessian_rank_node():
    # cone point (1:0:0:0) of the quadric x y + z^2 = 0 in P^3 (coordinates w, x, y, z)
    w, x, y, z = (MForm.var(i, 4, K) for i in range(4))
    f = x * y + z * z
    p = [K(1), K(0), K(0), K(0)]
    assert fm.hessian_rank_affine(f, p) == 3
    assert fm.hessian_rank_affine(f * w * w + x * x * x * y, p) == 3
    with pytest.raises(fm.NotSingular):
        fm.hessian_rank_affine(w * x + f, p)


def test_invariant_forms_cyclic():
    # the 3-cycle on three variables: invariant quadrics are s2 and e2
    P = em.to_mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]], K)
    assert len(fm.invariant_forms([em.inverse(P)], 3, 2, K)) == 2
    assert len(fm.invariant_forms([em.inverse(P)], 3, 1, K)) == 1


def test_restrict_line():
    x = [MForm.var(i, 4, K) for i in range(4)]
    f = x[0] * x[1]
    L = fm.line_param([K(0), K(0), K(1), K(0)], [K(0), K(1), K(0), K(1)], K)
    assert fm.restrict(f, L).is_zero()
    r = fm.restrict(x[1] * x[1] + x[2] * x[2], L)
    assert r.c == [K(1), K(0), K(1)]


def test_binary_gcd():
    s2t = BinaryForm([0, 1, 0, 0], K)        # s^2 t
    st2 = BinaryForm([0, 0, 1, 0], K)        # s t^2
    g = fm.binary_gcd(s2t, st2)
    assert g.degree == 2 and fm.trim_poly(g.c) and g.c[1] != 0 and g.c[0] == 0 and g.c[2] == 0


def test_squarefree_and_square():
    sq = BinaryForm([1, 2, 1], K)            # (s + t)^2
    assert fm.is_perfect_square_quadratic(sq)
    assert not fm.is_squarefree(sq)
    f = BinaryForm([1, 0, -1], K)            # s^2 - t^2
    assert fm.is_squarefree(f) and fm.distinct_root_count(f) == 2
    # a root at infinity counts
    g = BinaryForm([0, 1, 0], K)             # s t
    assert fm.distinct_root_count(g) == 2


def test_common_root_degree():
    f = BinaryForm([1, 0, -1], K)            # (s - t)(s + t)
    g = BinaryForm([1, -1], K)               # s - t
    assert fm.common_root_degree([f, g]) == 1
    assert fm.common_root_degree([f, BinaryForm([1, -2], K)]) == 0
