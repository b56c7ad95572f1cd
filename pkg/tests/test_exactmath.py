from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from s6quartics import exactmath as em

K = em.field(120)
K12 = em.field(12)

small = st.lists(st.integers(-6, 6), min_size=1, max_size=4)


def elt(cs, ctx=K12):
    return ctx.from_coeffs(cs)


@given(small, small, small)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    x, y, z = elt(a), elt(b), elt(c)
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x


@given(small)
@settings(max_examples=60, deadline=None)
def test_inverse(a):
    x = elt(a)
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == 1
        assert x / x == K12.one


def test_cyclotomic_degrees():
    for n in (1, 2, 3, 4, 5, 8, 12, 15, 120):
        assert em.cyclotomic_poly(n).degree() == em.totient(n)


def test_zeta_orders():
    for n in (3, 4, 5, 8, 24, 40):
        z = K.zeta(1, n)
        assert z ** n == 1
        assert all(z ** k != 1 for k in range(1, n))


def test_zeta_missing_root():
    with pytest.raises(em.FieldTooSmall) as e:
        K12.zeta(1, 5)
    assert e.value.required == 5 and e.value.suggested == 60


def test_embed_and_restrict():
    w = K12.zeta(1, 3)
    W = em.embed(w, K)
    assert W == K.zeta(1, 3)
    assert em.restrict_field(W, K12) == w
    with pytest.raises(em.FieldMismatch):
        em.restrict_field(K.zeta(1, 5), K12)


@pytest.mark.parametrize("q", [2, 3, 5, 6, 15, -1, -3, -15, Fraction(3, 4), Fraction(-5, 9)])
def test_sqrt_rational(q):
    r = em.sqrt_rational(q, K)
    assert r * r == K(q)
    # principal branch: positive real or positive imaginary
    c = r.conj()
    if q > 0:
        assert c == r
    else:
        assert c == -r
    assert r.is_rational() or em.pretty(r) == "sqrt(%s)" % Fraction(q)


def test_sqrt_needs_larger_field():
    with pytest.raises(em.FieldTooSmall) as e:
        em.sqrt_rational(21, K)
    assert e.value.suggested == 840


def test_galois_and_conj():
    z = K.zeta(1, 5)
    assert z.galois(7) == z * z          # 7 = 2 mod 5
    assert z.conj() == z ** 4
    assert not (z + z.conj()).is_rational()
    s5 = em.sqrt_rational(5, K)
    assert s5.galois(7) == -s5
    assert s5.galois(11) == s5


def _leibniz(A):
    n = len(A)
    total = Fraction(0)
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        t = Fraction(1)
        for i in range(n):
            t *= A[i][p[i]]
        total += -t if inv % 2 else t
    return total


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
@settings(max_examples=40, deadline=None)
def test_det_against_leibniz(rows):
    A = [[Fraction(x) for x in r] for r in rows]
    assert em.det_rational(A) == _leibniz(A)
    assert em.det(em.to_mat(A, K12)) == K12(_leibniz(A))


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=4))
@settings(max_examples=40, deadline=None)
def test_kernel_rank_nullity(rows):
    A = em.to_mat(rows, K12)
    N = em.kernel(A, 5, K12)
    assert em.rank(A) + len(N) == 5
    for v in N:
        assert all(x.is_zero() for x in em.matvec(A, v))


def test_inverse_matrix():
    w = K12.zeta(1, 12)
    A = [[w, K12(1), K12(0)], [K12(2), w * w, K12(1)], [K12(0), K12(1), K12(3)]]
    assert em.matmul(A, em.inverse(A)) == em.eye(3, K12)


def test_eigenspace_root_of_unity():
    # the 3-cycle permutation matrix: each cube root of unity once
    P = em.to_mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]], K12)
    dims = [len(em.eigenspace_root_of_unity(P, k, 3)) for k in range(3)]
    assert dims == [1, 1, 1]
    assert em.mat_order(P) == 3


def test_intersect():
    B1 = em.to_mat([[1, 0, 0], [0, 1, 0]], K12)
    B2 = em.to_mat([[0, 1, 0], [0, 0, 1]], K12)
    assert em.intersect(B1, B2, K12) == em.to_mat([[0, 1, 0]], K12)


def test_serialize():
    d = K12.zeta(1, 4).serialize()
    assert d["order"] == 12 and len(d["coeffs"]) == 4
