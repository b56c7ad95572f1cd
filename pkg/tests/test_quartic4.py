from fractions import Fraction
from itertools import product

import pytest

from s6quartics import exactmath as em
from s6quartics import geom3 as g3
from s6quartics import permgrp as pg
from s6quartics import quartic4 as q4
from s6quartics.forms import MForm


@pytest.fixture(scope="module")
def K():
    return em.field(120)


@pytest.fixture(scope="module")
def orbits(K):
    return q4.build_orbits(K)


def test_orbit_lengths(orbits, K):
    model = q4.HyperplaneModel(K)
    assert {k: len(v) for k, v in orbits.items()} == \
        {"Sigma6": 6, "Sigma10": 10, "Sigma15": 15, "Sigma30": 30, "L15": 15}
    for name in ("Sigma6", "Sigma10", "Sigma15", "Sigma30"):
        assert all(model.on_hyperplane(list(p)) for p in orbits[name])


def test_action_is_left(K):
    model = q4.HyperplaneModel(K)
    p = [K(x) for x in (1, 2, 3, 4, 5, -15)]
    g, h = (1, 2, 0, 3, 4, 5), (0, 1, 2, 3, 5, 4)
    gh = tuple(g[h[i]] for i in range(6))
    assert model.act(gh, p) == model.act(g, model.act(h, p))
    assert em.matvec(model.matrix(g), p) == model.act(g, p)


@pytest.mark.parametrize("name, t", [("Sigma6", Fraction(7, 10)), ("Sigma10", Fraction(1, 6)),
                                     ("Sigma15", Fraction(1, 2)), ("Sigma30", q4.ALL_T)])
def test_singular_t(K, name, t):
    # by hand: grad s4 - t grad s2^2 = 4 p^3 - 4 t s2(p) p modulo the ones vector
    assert q4.singular_t_condition(q4.orbit_seed(name, K), K) == t


def test_generic_point_never_singular(K):
    p = [K(x) for x in (1, 2, -3, 0, 0, 0)]
    assert q4.singular_t_condition(p, K) == q4.NO_T


def test_nodes(K):
    model = q4.HyperplaneModel(K)
    for name in ("Sigma6", "Sigma10", "Sigma15"):
        p = q4.orbit_seed(name, K)
        t = q4.singular_t_condition(p, K)
        assert q4.is_singular(model, t, p)
        assert not q4.is_singular(model, Fraction(1, 3), p)
        assert q4.node_rank(model, t, p) == 4
    p30 = q4.orbit_seed("Sigma30", K)
    assert q4.is_singular(model, Fraction(2, 7), p30)


def test_fifteen_lines(orbits, K):
    L = orbits["L15"]
    assert all(len(B) == 2 for B in L)
    assert {q4.line_t_condition(B, K) for B in L} == {Fraction(1, 4)}
    assert all(q4.singular_along_line(B, Fraction(1, 4), K) for B in L)
    assert not q4.singular_along_line(L[0], Fraction(1, 2), K)
    # a line (s, t, -s-t, s, t, -s-t) carries the two points with t/s a
    # primitive cube root of unity, so Sigma30 is cut out exactly once
    assert all(sum(q4.on_line(B, list(p)) for B in L) == 1 for p in orbits["Sigma30"])
    assert not any(q4.on_line(B, list(p)) for B in L for p in orbits["Sigma15"])


def test_census_p4(orbits, K):
    orbs, fam = q4.orbit_census_p4(pg.named("A6"), 6, K)
    assert [len(o) for o in orbs] == [6] and fam == []
    assert {g3.point_key(list(p)) for p in orbs[0]} == {g3.point_key(list(p)) for p in orbits["Sigma6"]}
    fp = q4.fixed_points_p4(pg.named("D12nst"), K)
    ten = {g3.point_key(list(p)) for p in orbits["Sigma10"]}
    assert len(fp) == 1 and g3.point_key(fp[0]) in ten


def test_proportionality(K):
    x, y = MForm.var(0, 4, K), MForm.var(1, 4, K)
    assert q4.proportionality([x, x.scale(K(-1))], K) == Fraction(1, 2)
    assert q4.proportionality([x, y], K) is None
    with pytest.raises(q4.NoIdentification):
        q4.proportionality([x - x], K)


def test_contraction(K):
    x = [MForm.var(i, 4, K) for i in range(4)]
    L = g3.ProjLine([[K(1), K(0), K(0), K(0)], [K(0), K(1), K(0), K(0)]])
    c = L.param()
    res = q4.contraction_check([x[0] + x[1], (x[0] + x[1]).scale(K(3)), x[2]], c)
    assert res.contracted and res.point == [K(1), K(3), K(0)]
    generic = q4.contraction_check(x, c)
    assert not generic.contracted and generic.rank == 2
    with pytest.raises(ValueError):
        q4.contraction_check([x[2], x[3]], c)


def test_lambda_line(K):
    e = [[K(1 if i == j else 0) for j in range(4)] for i in range(4)]
    e12 = [a + b for a, b in zip(e[1], e[2])]
    Li, Ljp = g3.ProjLine([e[0], e[1]]), g3.ProjLine([e[1], e[2]])
    Lip, Lj = g3.ProjLine([e[0], e[3]]), g3.ProjLine([e[3], e12])
    # <e0, e1, e2> meets <e0, e3, e1 + e2> in the line <e0, e1 + e2>
    assert q4.lambda_line(Li, Lip, Lj, Ljp, K) == g3.ProjLine([e[0], e12])
    with pytest.raises(ValueError):
        q4.plane_span(Li, g3.ProjLine([e[2], e[3]]))


def brute_rh(order, lengths, gmin, gmax):
    "Independent enumeration: all (gbar, a_k) with small entries."
    out = {}
    for gbar in range(0, 3):
        for a in product(range(0, 2 * gmax + 4), repeat=len(lengths)):
            v = order * (2 * gbar - 2) + sum(ak * (order - k) for ak, k in zip(a, lengths))
            if v % 2 == 0 and gmin <= v // 2 + 1 <= gmax:
                counts = {k: ak for ak, k in zip(a, lengths) if ak}
                out.setdefault(v // 2 + 1, []).append((gbar, counts))
    return out


def canon(found):
    return {g: sorted((gb, sorted(c.items())) for gb, c in s) for g, s in found.items()}


def test_rh_against_brute_force():
    spec = q4.RHSearch(360, [72, 90, 120, 180], 2, 15)
    assert canon(q4.rh_search(spec)) == canon(brute_rh(360, [72, 90, 120, 180], 2, 15))
    assert sorted(q4.rh_search(spec)) == [10]


def test_rh_klein_quartic():
    found = q4.rh_search(q4.RHSearch(168, [24, 56, 84], 2, 3))
    assert (0, {24: 1, 56: 1, 84: 1}) in found[3]


def test_rh_no_genus_in_range():
    assert q4.rh_search(q4.RHSearch(360, [72, 90, 120, 180], 2, 1)) == {}


def test_identities():
    ids = q4.numeric_identities()
    assert ids["determinant"] == 300
    assert sum(ids["six_terms"]) == ids["six_lines"] == 4
    assert sum(ids["ten_terms"]) == ids["ten_lines"] == 14
