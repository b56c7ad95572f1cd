from itertools import permutations

import pytest

from s6quartics import exactmath as em
from s6quartics import forms as fm
from s6quartics import geom3 as g3
from s6quartics.forms import MForm
from s6quartics.geom3 import ProjLine

K = em.field(12)


def vec(*xs):
    return [K(x) for x in xs]


# the quadric x w = y z is the Segre image (s u, s v, t u, t v)
def ruling_a(s, t):
    return ProjLine([vec(s, 0, t, 0), vec(0, s, 0, t)])


def ruling_b(u, v):
    return ProjLine([vec(u, v, 0, 0), vec(0, 0, u, v)])


def segre_quadric():
    x, y, z, w = (MForm.var(i, 4, K) for i in range(4))
    return x * w - y * z


def test_line_basics():
    L = ProjLine([vec(1, 2, 3, 4), vec(0, 1, 1, 1), vec(1, 3, 4, 5)])
    assert L == ProjLine([vec(1, 3, 4, 5), vec(2, 5, 7, 9)])
    assert g3.plucker_quadric(L.plucker).is_zero()
    assert L.contains(L.point(3, -2))
    assert not L.contains(vec(0, 0, 0, 1))
    for e in L.equations():
        assert all(sum((a * b for a, b in zip(e, v)), K.zero).is_zero() for v in L.basis)
    assert g3.line_from_plucker(L.plucker, K) == L
    with pytest.raises(ValueError):
        ProjLine([vec(1, 0, 0, 0), vec(2, 0, 0, 0)])


def test_meets_and_profile():
    A = [ruling_a(1, k) for k in range(3)]
    B = [ruling_b(1, k) for k in range(2)]
    prof = g3.incidence_profile(A + B)
    assert prof == [[0, 0, 0, 1, 1], [0, 0, 0, 1, 1], [0, 0, 0, 1, 1],
                    [1, 1, 1, 0, 0], [1, 1, 1, 0, 0]]
    P = g3.double_five_profile(3)
    assert P[0][3] == 0 and P[0][4] == 1 and P[4][0] == 1 and P[3][4] == 0


def test_transversals_infinite_family():
    # four lines of one ruling: the whole other ruling meets them
    A = [ruling_a(1, k) for k in range(4)]
    with pytest.raises(g3.InfiniteFamily):
        g3.transversals(*A)


def test_transversals_tangent_line():
    # a line tangent to the quadric at (0:0:0:1) meets it once, doubly,
    # so exactly one line of the other ruling meets all four
    T = ProjLine([vec(0, 0, 0, 1), vec(0, 1, 1, 0)])
    A = [ruling_a(1, k) for k in range(3)]
    n, lines = g3.transversals(*(A + [T]))
    assert n == 1
    assert lines == [ruling_b(0, 1)]
    assert all(g3.meets(lines[0], l) for l in A + [T])


def test_transversals_secant_line():
    S = ProjLine([vec(1, 0, 0, 0), vec(0, 0, 0, 1)])
    n, _ = g3.transversals(*([ruling_a(1, k) for k in range(1, 4)] + [S]))
    assert n == 2


def test_transversals_rejects_meeting_lines():
    with pytest.raises(ValueError):
        g3.transversals(ruling_a(1, 0), ruling_b(1, 0), ruling_a(1, 1), ruling_a(1, 2))


def test_quadric_tangency():
    A = [ruling_a(1, k) for k in range(3)]
    cases = {
        "contained": ruling_b(2, 1),
        "tangent": ProjLine([vec(0, 0, 0, 1), vec(0, 1, 1, 0)]),
        "transversal": ProjLine([vec(1, 0, 0, 0), vec(0, 0, 0, 1)]),
    }
    for expected, L in cases.items():
        verdict, Q = g3.quadric_tangency_check(A[0], A[1], A[2], L)
        assert verdict == expected
        assert em.rank([Q.coefficient_vector(), segre_quadric().coefficient_vector()]) == 1


def perm_matrix(p):
    return em.to_mat([[1 if p[j] == i else 0 for j in range(4)] for i in range(4)], K)


def test_census_permutation_action():
    # S4 permuting coordinates: short orbits are [1:1:1:1] and the three
    # points [1:1:-1:-1]; the line through e1 and [0:1:1:1] is fixed
    # pointwise by the S3 stabilizing the first coordinate
    mats = [perm_matrix(p) for p in permutations(range(4))]
    gens = [perm_matrix((1, 0, 2, 3)), perm_matrix((1, 2, 3, 0))]
    orbits, families = g3.small_orbit_census(mats, gens, 4)
    assert [len(o) for o in orbits] == [1, 3]
    assert g3.point_key(vec(1, -1, -1, 1)) in {g3.point_key(list(p)) for p in orbits[1]}
    assert len(families) == 1
    B, stab = families[0]
    assert stab == 6 and len(B) == 2
    assert ProjLine(B) == ProjLine([vec(1, 0, 0, 0), vec(0, 1, 1, 1)])


def test_eigenspaces_proper_only():
    assert g3.eigenspaces(em.eye(4, K)) == []
    E = g3.eigenspaces(perm_matrix((1, 2, 3, 0)))
    assert sorted(len(e) for e in E) == [1, 1, 1, 1]


def test_linear_system_through_lines():
    A = [ruling_a(1, k) for k in range(3)]
    S = g3.system_through_lines(A, d=2)
    assert len(S) == 1 and S.verify()
    # quartics through four lines of a ruling: the quadric times quadrics (10)
    # plus the residual (0, 4) forms on the quadric (5)
    S4 = g3.system_through_lines([ruling_a(1, k) for k in range(4)], d=4)
    assert len(S4) == 15


def test_tangent_developable_standard_cubic():
    c = g3.twisted_cubic(em.eye(4, K), K)
    D = g3.tangent_developable(c, K)
    x0, x1, x2, x3 = (MForm.var(i, 4, K) for i in range(4))
    disc = (x0 * x0 * x3 * x3 - x0 * x1 * x2 * x3 * K(6) + x0 * x2 * x2 * x2 * K(4)
            + x1 * x1 * x1 * x3 * K(4) - x1 * x1 * x2 * x2 * K(3))
    assert em.rank([D.coefficient_vector(), disc.coefficient_vector()]) == 1
    assert g3.singular_along(D, c)
    assert len(g3.quadrics_through(c)) == 3


def test_curve_line_intersection_standard_cubic():
    c = g3.twisted_cubic(em.eye(4, K), K)
    chord = ProjLine([vec(1, 0, 0, 0), vec(0, 0, 0, 1)])
    tangent = ProjLine([vec(1, 0, 0, 0), vec(0, 1, 0, 0)])
    skew = ProjLine([vec(0, 1, 0, 0), vec(0, 0, 1, 0)])
    through = ProjLine([vec(1, 0, 0, 0), vec(0, 0, 1, 0)])
    assert g3.curve_line_intersection(c, chord) == 2
    assert g3.curve_line_intersection(c, tangent) == 2
    assert g3.curve_line_intersection(c, through) == 1
    assert g3.curve_line_intersection(c, skew) == 0


def test_pencil_member():
    x, y, z, w = (MForm.var(i, 4, K) for i in range(4))
    S1, S2 = x * x * x * x + y * y * y * y, z * z * z * z - w * w * w * w
    p = vec(1, 1, 1, 2)
    R = g3.pencil_member_through(S1, S2, p)
    assert R.evaluate(p).is_zero()
    with pytest.raises(ValueError):
        g3.pencil_member_through(S1, S2, vec(0, 0, 1, 1))


def test_galois_exponent():
    for N in (60, 120, 600):
        k = g3.galois_conjugate_exponent(em.field(N))
        m = N
        while m % 5 == 0:
            m //= 5
        assert k % 5 == 2 and (k - 1) % m == 0 and em.gcd(k, N) == 1
    assert g3.galois_conjugate_exponent(em.field(120)) == 97


def test_invariant_cubics(world):
    c1, c2 = world.cubics
    gens = world.lift_gens(world.group("A5nst"))
    assert g3.is_invariant_curve(c1, gens) and g3.is_invariant_curve(c2, gens)
    assert g3.curves_disjoint(c1, c2)
    assert not g3.is_invariant_curve(c1, world.lift_gens(world.group("A6")))
    S1, S2 = world.developables
    assert g3.singular_along(S1, c1) and not g3.singular_along(S1, c2)
