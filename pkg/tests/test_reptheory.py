import pytest

from s6quartics import exactmath as em
from s6quartics import permgrp as pg
from s6quartics import reptheory as rt
from s6quartics import geom3 as g3


def test_so6_model_examples(ctx):
    t = pg.from_cycles([(0, 1)])
    M = em.to_mat(rt.so6_model(t), ctx)
    assert em.trace(M) == -2
    assert em.det(M) == 1
    assert rt.is_orthogonal(rt.so6_model(t))
    g = pg.from_cycles([(0, 1, 2)])
    assert em.to_mat(rt.so6_model(g), ctx) == rt.perm_matrix(g, ctx)


def test_cover_basics(world):
    G = world.cover
    assert G.order == 1440
    assert len(G.classes) == 17
    for h in G.mat_gens:
        assert em.det(h) == 1
    # -I is central
    z = G.mat(G.z)
    assert all(em.matmul(z, G.mat(i)) == em.matmul(G.mat(i), z) for i in range(0, G.order, 97))


def test_lift_examples(world):
    G = world.cover
    ident = [i for i, (p, h) in enumerate(G.elements) if p == pg.identity()]
    assert sorted(em.trace(G.mat(i)).to_rational() for i in ident) == [-4, 4]
    t = pg.from_cycles([(0, 1)])
    for i, (p, h) in enumerate(G.elements):
        if p == t:
            assert em.trace(h) == 0 and em.mat_order(h) == 2


def test_labels_distinct(world):
    names = [l.name() for l in world.cover.labels]
    assert len(set(names)) == 17


def test_character_values(world):
    G = world.cover
    W = world.w_character
    U = world.u4_character
    for c, l in enumerate(G.labels):
        if tuple(l.ctype) == (3,):
            assert W[c] == 3
        if tuple(l.ctype) == (5,):
            assert U[c].to_rational() in (1, -1)
        if not l.ctype:
            assert W[c] == 6


def test_u4_irreducible(world):
    G = world.cover
    counts = [len(c) for c in G.classes]
    assert rt.inner(G, counts, world.u4_character, world.u4_character) == 1


@pytest.mark.parametrize("d", [2, 3, 4])
def test_sym_power_character_against_matrices(world, d):
    G = world.cover
    chi = world.u4_character
    pred = rt.sym_power_character(G, chi, d)
    for c, cls in enumerate(G.classes):
        h = G.mat(cls[0])
        assert em.trace(rt.sym_power_matrix(h, d, world.ctx)) == pred[c]


def test_commutant_examples(world):
    C = rt.commutant(world.lift_gens(world.group("A6")), world.ctx)
    assert len(C) == 1
    C = rt.commutant(world.lift_gens(world.group("A5st")), world.ctx)
    assert len(C) == 2 and rt.is_commutative(C)
    C = rt.commutant(world.lift_gens(world.group("V4")), world.ctx)
    assert len(C) == 4 and not rt.is_commutative(C)


def test_split_isotypic_examples(world):
    ctx = world.ctx
    for name, dims in (("A4nst", [2, 2]), ("S3p", [1, 1, 2])):
        H = world.group(name)
        parts, _ = rt.split_isotypic(world.lift_gens(H), world.proj_mats(H), ctx)
        assert sorted(len(p) for p in parts) == dims
    H = world.group("D12nst")
    parts, _ = rt.split_isotypic([rt.w5_matrix(g, ctx) for g in H.gens],
                                 [rt.w5_matrix(g, ctx) for g in H.elements], ctx)
    assert sorted(len(p) for p in parts) == [1, 2, 2]


def test_split_noncommutative_returns_block(world):
    H = world.group("V4")
    parts, C = rt.split_isotypic(world.lift_gens(H), world.proj_mats(H), world.ctx)
    assert len(parts) == 1 and len(C) == 4


def test_intertwiner_examples(world):
    ctx = world.ctx
    gens = world.lift_gens(world.group("A6"))
    assert len(rt.intertwiners(gens, gens, ctx)) == 1
    # z acts by -1 on U4, trivially on the trivial representation
    gens = world.lift_gens(world.group("A5nst")) + [em.scale(-1, em.eye(4, ctx))]
    one = [[[ctx.one]] for _ in gens]
    assert rt.intertwiners(one, gens, ctx) == []


def test_binary_icosahedral(ctx):
    A, B = rt.binary_icosahedral(ctx)
    G = g3.enumerate_matrix_group([A, B])
    assert len(G) == 120
    assert em.matmul(B, B) == em.scale(-1, em.eye(2, ctx))
    s5 = em.sqrt_rational(5, ctx)
    phi = (1 + s5) / 2
    allowed = {ctx(x) for x in (2, -2, 0, 1, -1)} | {phi, -phi, phi - 1, 1 - phi}
    assert {em.trace(g) for g in G} <= allowed


def test_sym3_binary_intertwiner(world):
    ctx = world.ctx
    c, (s, t), (x, y) = g3.invariant_twisted_cubic(rt.binary_icosahedral(ctx),
                                                   world.lift_gens(world.group("A5nst")), ctx)
    I = rt.intertwiners([g3.veronese3(s, ctx), g3.veronese3(t, ctx)], [x, y], ctx)
    assert len(I) == 1


def test_homomorphism_on_words(world):
    G = world.cover
    import random
    rng = random.Random(1)
    for _ in range(20):
        i, j = rng.randrange(G.order), rng.randrange(G.order)
        k = G.mul(i, j)
        assert G.perm(k) == pg.mul(G.perm(i), G.perm(j))
