"""
Matrix representations of S6 and its double cover.

The 6x6 orthogonal model of I + W5 is lifted to SL4 through an explicit
Clifford algebra on the exterior algebra of a 3-dimensional isotropic
subspace; the lifts generate the cover group 2.S6 of order 1440 acting on
U4. Characters are class functions on the 17 cover classes, and most
restriction statements reduce to fusion counts.
"""

from fractions import Fraction
from math import factorial
from itertools import combinations
import random

from . import exactmath as em
from .exactmath import matmul, mat_key, eye, zeros, trace, kernel
from . import permgrp as pg


# ---------------------------------------------------------------------------
# orthogonal models

def perm_matrix(g, ctx=None):
    "P e_i = e_{g(i)}."
    n = len(g)
    P = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        P[g[i]][i] = Fraction(1)
    return P if ctx is None else em.to_mat(P, ctx)


def so6_model(g, ctx=None):
    """I + W5 on C^6: the all-ones line is the trivial summand, the sum-zero
    hyperplane carries sign(g) times the permutation action."""
    P = perm_matrix(g)
    if pg.sign(g) == 1:
        M = P
    else:
        M = [[Fraction(1, 3) - P[i][j] for j in range(6)] for i in range(6)]
    return M if ctx is None else em.to_mat(M, ctx)


def sumzero_basis(n=6):
    "e_i - e_{n-1}, i < n-1."
    return [[Fraction(int(j == i)) - Fraction(int(j == n - 1)) for j in range(n)]
            for i in range(n - 1)]


def w5_matrix(g, ctx):
    """W5 on the sum-zero hyperplane in the basis e_i - e_5, twisted by sign."""
    s = pg.sign(g)
    M = [[Fraction(0)] * 5 for _ in range(5)]
    # g(e_i - e_5) = e_{g i} - e_{g 5}
    for i in range(5):
        gi, g5 = g[i], g[5]
        col = [Fraction(0)] * 5
        if gi != 5:
            col[gi] += 1
        if g5 != 5:
            col[g5] -= 1
        for k in range(5):
            M[k][i] = s * col[k]
    return em.to_mat(M, ctx)


def _rmatmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def is_orthogonal(M):
    n = len(M)
    MtM = _rmatmul([list(r) for r in zip(*M)], M)
    return all(MtM[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


# ---------------------------------------------------------------------------
# Clifford algebra of sum x_i^2 on C^6, acting on Lambda(C^3)

def _popcount(m):
    return bin(m).count("1")


def _creation(j, ctx):
    A = zeros(8, 8, ctx)
    for S in range(8):
        if not S >> j & 1:
            sgn = (-1) ** _popcount(S & ((1 << j) - 1))
            A[S | 1 << j][S] = ctx(sgn)
    return A


def _annihilation(j, ctx):
    A = zeros(8, 8, ctx)
    for S in range(8):
        if S >> j & 1:
            sgn = (-1) ** _popcount(S & ((1 << j) - 1))
            A[S & ~(1 << j)][S] = ctx(sgn)
    return A


def clifford_gammas(ctx):
    """gamma(e_0), ..., gamma(e_5) as 8x8 matrices with
    gamma(u) gamma(v) + gamma(v) gamma(u) = 2 B(u, v).

    e_{2j} +- i e_{2j+1} are isotropic; they act by creation and annihilation.
    """
    i = ctx.zeta(1, 4)
    out = []
    for j in range(3):
        c, d = _creation(j, ctx), _annihilation(j, ctx)
        out.append(em.mat_add(c, d))
        out.append(em.scale(-i, em.mat_sub(c, d)))
    return out


EVEN = [0, 3, 5, 6]    # even subsets of {0,1,2} as bitmasks


def gamma(v, gammas, ctx):
    G = zeros(8, 8, ctx)
    for k, x in enumerate(v):
        if x:
            G = em.mat_add(G, em.scale(ctx(x), gammas[k]))
    return G


def reflection(v):
    q = sum(x * x for x in v)
    n = len(v)
    return [[Fraction(int(i == j)) - 2 * v[i] * v[j] / q for j in range(n)] for i in range(n)]


def cartan_dieudonne(M):
    """Vectors v_1, ..., v_m with M = r_{v_1} ... r_{v_m}.

    Greedy over the standard basis; every nonzero rational vector is
    anisotropic for sum x_i^2, so each step is a genuine reflection.
    """
    n = len(M)
    M = [[Fraction(x) for x in r] for r in M]
    vs = []
    for k in range(n):
        col = [M[i][k] for i in range(n)]
        v = [col[i] - (1 if i == k else 0) for i in range(n)]
        if any(v):
            vs.append(v)
            M = _rmatmul(reflection(v), M)
    assert all(M[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))
    return vs


def wedge2(h):
    "Lambda^2 of a 4x4 matrix in the basis e_a ^ e_b, a < b."
    pairs = list(combinations(range(4), 2))
    return [[h[a][c] * h[b][d] - h[a][d] * h[b][c] for (c, d) in pairs]
            for (a, b) in pairs]


def even_lift(vs, ctx, gammas=None):
    "gamma(v_1)...gamma(v_m) on the even half-spinors, and prod q(v_i)."
    gammas = gammas or clifford_gammas(ctx)
    H = eye(8, ctx)
    norm = Fraction(1)
    for v in vs:
        H = matmul(H, gamma(v, gammas, ctx))
        norm *= sum(x * x for x in v)
    return [[H[a][b] for b in EVEN] for a in EVEN], norm


def _leading(M):
    for row in M:
        for x in row:
            if not x.is_zero():
                return x
    raise ValueError("zero matrix")


def normalize_sign(h):
    """Fix the sign of a lift: the first nonzero entry, read as a coefficient
    vector, has positive first nonzero coefficient."""
    x = _leading(h)
    c = next(c for c in x.coeffs if c != 0)
    return h if c > 0 else em.scale(-1, h)


def plucker_identification(ctx):
    """B with wedge2(h) B = B M whenever h lifts the rotation M.

    Solved from even products of coordinate and root reflections; these
    generate a group acting irreducibly on C^6, so B is unique up to scalar.
    """
    gammas = clifford_gammas(ctx)
    e = lambda i: [Fraction(int(j == i)) for j in range(6)]
    pairs = []
    for i in range(5):
        pairs.append([e(i), e(i + 1)])
        pairs.append([e(i), [a - b for a, b in zip(e(i), e(i + 1))]])
    eqs = []
    for vs in pairs:
        M = _rmatmul(reflection(vs[0]), reflection(vs[1]))
        h0, norm = even_lift(vs, ctx, gammas)
        W = wedge2(h0)
        # wedge2(h0) B - norm * B M = 0, unknowns B[r][c] at index 6r + c
        for r in range(6):
            for c in range(6):
                row = [ctx.zero] * 36
                for k in range(6):
                    row[6 * k + c] = row[6 * k + c] + W[r][k]
                    if M[k][c]:
                        row[6 * r + k] = row[6 * r + k] - ctx(norm * M[k][c])
                eqs.append(row)
    K = kernel(eqs)
    if len(K) != 1:
        raise AssertionError("Pluecker identification has dimension %d" % len(K))
    v = K[0]
    return [[v[6 * r + c] for c in range(6)] for r in range(6)]


class SpinLiftResult(object):
    def __init__(self, lifts, plucker, order):
        self.lifts = lifts
        self.plucker = plucker
        self.order = order


def lift_rotation(M, ctx, B=None, gammas=None):
    """h in SL4 with wedge2(h) B = B M."""
    if not is_orthogonal(M):
        raise ValueError("not orthogonal for sum x_i^2")
    vs = cartan_dieudonne(M)
    if len(vs) % 2:
        raise ValueError("determinant -1")
    h0, norm = even_lift(vs, ctx, gammas)
    c = em.sqrt_rational(norm, ctx)
    h = em.scale(c.inverse(), h0)
    h = normalize_sign(h)
    if B is not None:
        Mc = em.to_mat(M, ctx)
        assert matmul(wedge2(h), B) == matmul(B, Mc)
    assert em.det(h) == 1
    return h


def spin_lift(targets, ctx):
    B = plucker_identification(ctx)
    gammas = clifford_gammas(ctx)
    lifts = [lift_rotation(M, ctx, B, gammas) for M in targets]
    elems, _ = pg.closure(lifts, matmul, mat_key, eye(4, ctx))
    return SpinLiftResult(lifts, B, len(elems))


# ---------------------------------------------------------------------------
# the cover group 2.S6 with its classes

class CoverGroup(object):
    """Pairs (g, h) with g in S6 and h in SL4 lifting so6_model(g)."""

    def __init__(self, ctx, gens=None):
        self.ctx = ctx
        if gens is None:
            gens = pg.named("S6").gens
        self.perm_gens = list(gens)
        res = spin_lift([so6_model(g) for g in gens], ctx)
        self.lift = res
        self.mat_gens = res.lifts
        one = (pg.identity(6), eye(4, ctx))
        gpairs = list(zip(self.perm_gens, self.mat_gens))
        mulp = lambda x, y: (pg.mul(x[0], y[0]), matmul(x[1], y[1]))
        self.elements, self.index = pg.closure(gpairs, mulp, lambda x: mat_key(x[1]), one)
        self.order = len(self.elements)
        self.minus_one = em.scale(-1, eye(4, ctx))
        self.z = self.index[mat_key(self.minus_one)]
        self._classes()

    def find(self, h):
        return self.index[mat_key(h)]

    def neg(self, i):
        "Index of z * element i."
        return self.find(em.scale(-1, self.elements[i][1]))

    def perm(self, i):
        return self.elements[i][0]

    def mat(self, i):
        return self.elements[i][1]

    def mul(self, i, j):
        return self.find(matmul(self.mat(i), self.mat(j)))

    def inverse(self, i):
        g, h = self.elements[i]
        # h has finite order; use the adjugate-free route through the table
        return self.find(em.inverse(h))

    def power(self, i, k):
        return self.find(em.mat_pow(self.mat(i), k))

    def _classes(self):
        n = self.order
        gens = list(range(1, 1 + len(self.mat_gens)))
        gidx = [self.find(h) for h in self.mat_gens]
        ginv = [em.inverse(h) for h in self.mat_gens]
        cls_of = [None] * n
        classes = []
        for x in range(n):
            if cls_of[x] is not None:
                continue
            c = len(classes)
            members = [x]
            cls_of[x] = c
            k = 0
            while k < len(members):
                y = self.mat(members[k])
                for h, hi in zip(self.mat_gens, ginv):
                    z = self.find(matmul(matmul(h, y), hi))
                    if cls_of[z] is None:
                        cls_of[z] = c
                        members.append(z)
                k += 1
            classes.append(members)
        self.classes = classes
        self.class_of = cls_of
        labels = [self._label(c[0]) for c in classes]
        # classes agreeing in (type, order, trace) get tags 0, 1, ... in
        # discovery order; over [3,2] the two classes differ only by z
        seen = {}
        for k, l in enumerate(labels):
            t = seen.get(l, 0)
            seen[l] = t + 1
            labels[k] = ClassLabel(l[0], l[1], l[2], t)
        self.labels = labels
        assert len(set(self.labels)) == len(self.labels)
        # power maps on classes
        self.power_map = {}
        for k in (2, 3, 4, 5, 6):
            self.power_map[k] = [cls_of[self.power(c[0], k)] for c in classes]

    def _label(self, i):
        g, h = self.elements[i]
        return ClassLabel(pg.cycle_type(g), em.mat_order(h), trace(h))

    def element_order(self, i):
        return self.labels[self.class_of[i]].order

    def preimage(self, H):
        "Indices of the preimage 2.H of a permutation subgroup H."
        S = set(H.elements)
        return [i for i, (g, h) in enumerate(self.elements) if g in S]

    def lifts_of(self, perms):
        "One lift per permutation (the first one found)."
        out = []
        for g in perms:
            for i, (p, h) in enumerate(self.elements):
                if p == g:
                    out.append(i)
                    break
        return out

    def fusion(self, idx):
        counts = [0] * len(self.classes)
        for i in idx:
            counts[self.class_of[i]] += 1
        return counts


class ClassLabel(tuple):
    """(cycle type, element order, U4 trace, split tag).

    The tag is 0 except for the second of two classes agreeing in the first
    three entries; this happens only over [3,2], where the two classes are
    exchanged by z and no trace separates them."""

    def __new__(cls, ctype, order, tr, tag=0):
        return tuple.__new__(cls, (ctype, order, tr, tag))

    ctype = property(lambda self: self[0])
    order = property(lambda self: self[1])
    trace = property(lambda self: self[2])
    tag = property(lambda self: self[3])

    def __hash__(self):
        return hash((self[0], self[1], self[2].key, self[3]))

    def __eq__(self, other):
        return (tuple(self[:2]) == tuple(other[:2]) and self[2] == other[2]
                and self[3] == other[3])

    def __ne__(self, other):
        return not self == other

    def name(self):
        ct = "[%s]" % ",".join(map(str, self[0])) if self[0] else "id"
        tag = "" if not self[3] else "'" * self[3]
        return "%s%s/o%d/%s" % (ct, tag, self[1], em.pretty(self[2]))


# ---------------------------------------------------------------------------
# characters as class functions of the cover

def character_of(G, rep):
    "Trace of rep(i) on each class representative; rep maps an element index to a matrix."
    return [trace(rep(c[0])) for c in G.classes]


def u4(G):
    return lambda i: G.mat(i)


def w_rep(G):
    return lambda i: perm_matrix(G.perm(i), G.ctx)


def w5_rep(G):
    return lambda i: w5_matrix(G.perm(i), G.ctx)


def sign_character(G):
    return [G.ctx(pg.sign(G.perm(c[0]))) for c in G.classes]


def trivial_character(G):
    return [G.ctx.one for _ in G.classes]


def _partitions(n, m=None):
    if m is None:
        m = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, m), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _z_lambda(lam):
    from collections import Counter
    z = 1
    for k, m in Counter(lam).items():
        z *= k ** m * factorial(m)
    return z


def sym_power_character(G, chi, d):
    """chi_{Sym^d}(g) = sum over partitions lam of d of
    prod_k chi(g^k)^{m_k} / z_lam."""
    out = []
    for c in range(len(G.classes)):
        s = G.ctx.zero
        for lam in _partitions(d):
            t = G.ctx(Fraction(1, _z_lambda(lam)))
            for k in lam:
                t = t * (chi[c] if k == 1 else chi[G.power_map[k][c]])
            s = s + t
        out.append(s)
    return out


def dual(chi, G):
    return [x.conj() for x in chi]


def inner(G, counts, chi, psi):
    """<chi, psi> over the subgroup with the given fusion counts."""
    total = sum(counts)
    s = G.ctx.zero
    for n, a, b in zip(counts, chi, psi):
        if n:
            s = s + n * a * b.conj()
    return s / total


def trivial_multiplicity(G, counts, chi):
    return inner(G, counts, chi, trivial_character(G))


# ---------------------------------------------------------------------------
# commutants, invariant subspaces, intertwiners

def commutant(mats, ctx):
    """Basis of {X : X A = A X for all A in mats}."""
    n = len(mats[0])
    eqs = []
    for A in mats:
        # (X A - A X)[r][c] = sum_k X[r][k] A[k][c] - A[r][k] X[k][c]
        for r in range(n):
            for c in range(n):
                row = [ctx.zero] * (n * n)
                for k in range(n):
                    a = A[k][c]
                    if not a.is_zero():
                        row[n * r + k] = row[n * r + k] + a
                    b = A[r][k]
                    if not b.is_zero():
                        row[n * k + c] = row[n * k + c] - b
                eqs.append(row)
    K = kernel(eqs, n * n, ctx)
    return [[v[n * r:n * r + n] for r in range(n)] for v in K]


def intertwiners(mats1, mats2, ctx):
    """Basis of {A : A rho1(g) = rho2(g) A} over paired generator images."""
    m, n = len(mats2[0]), len(mats1[0])
    eqs = []
    for R1, R2 in zip(mats1, mats2):
        for r in range(m):
            for c in range(n):
                row = [ctx.zero] * (m * n)
                for k in range(n):
                    a = R1[k][c]
                    if not a.is_zero():
                        row[n * r + k] = row[n * r + k] + a
                for k in range(m):
                    b = R2[r][k]
                    if not b.is_zero():
                        row[n * k + c] = row[n * k + c] - b
                eqs.append(row)
    K = kernel(eqs, m * n, ctx)
    return [[v[n * r:n * r + n] for r in range(m)] for v in K]


def is_commutative(basis):
    for i, X in enumerate(basis):
        for Y in basis[i + 1:]:
            if matmul(X, Y) != matmul(Y, X):
                return False
    return True


def invariant_span(vectors, mats, ctx):
    "Smallest subspace containing the vectors and stable under mats."
    B = em.row_basis(vectors, ctx)
    while True:
        new = list(B)
        for A in mats:
            new += [em.matvec(A, v) for v in B]
        C = em.row_basis(new, ctx)
        if len(C) == len(B):
            return C
        B = C


def is_invariant(basis, mats, ctx):
    for A in mats:
        if em.rank(basis + [em.matvec(A, v) for v in basis]) != len(basis):
            return False
    return True


def split_isotypic(mats, elements, ctx):
    """Decompose a representation given by generator images `mats` (and a
    list `elements` of matrices of the group) into invariant subspaces.

    If the commutant is commutative the representation is multiplicity
    free. Each eigenspace of a group element generates an invariant
    subspace, a sum of irreducible constituents; intersecting these yields
    the constituents themselves, which is checked against the commutant
    dimension. Otherwise the whole space is returned as one block.
    """
    n = len(mats[0])
    C = commutant(mats, ctx)
    if not is_commutative(C):
        return [eye(n, ctx)], C
    if len(C) == 1:
        return [eye(n, ctx)], C
    spans = {}
    for A in elements:
        o = em.mat_order(A)
        for k in range(o):
            E = em.eigenspace_root_of_unity(A, k, o)
            if E and len(E) < n:
                S = invariant_span(E, mats, ctx)
                if len(S) < n:
                    spans[em.subspace_key(S)] = S
    # close under intersection, then keep the minimal members
    todo = list(spans.values())
    while todo:
        new = []
        vals = list(spans.values())
        for a in todo:
            for b in vals:
                I = em.intersect(a, b, ctx)
                if I and len(I) < len(a):
                    k = em.subspace_key(I)
                    if k not in spans:
                        spans[k] = I
                        new.append(I)
        todo = new
    atoms = [a for a in spans.values() if not any(
        len(b) < len(a) and len(em.intersect(a, b, ctx)) == len(b) for b in spans.values())]
    atoms.sort(key=lambda a: (len(a), em.subspace_key(a)))
    if sum(len(a) for a in atoms) != n or len(atoms) != len(C):
        raise AssertionError("could not separate constituents")
    if em.rank([v for a in atoms for v in a]) != n:
        raise AssertionError("constituents not independent")
    for a in atoms:
        assert is_invariant(a, mats, ctx)
    return atoms, C


def random_commutant_element(C, seed, ctx):
    rng = random.Random(seed)
    X = em.scale(ctx.zero, C[0])
    for B in C:
        X = em.mat_add(X, em.scale(ctx(rng.randint(-5, 5)), B))
    return X


def restricted(basis, A, ctx):
    """Matrix of A on the invariant subspace spanned by the rows of basis."""
    k = len(basis)
    cols = list(zip(*basis))
    Bt = [list(c) for c in cols]                   # n x k
    out = []
    for v in basis:
        w = em.matvec(A, v)
        x = em.solve(Bt, w)
        assert x is not None
        out.append(x)
    return [[out[j][i] for j in range(k)] for i in range(k)]


# ---------------------------------------------------------------------------
# symmetric powers of matrices

def monomials(nvars, d):
    "Exponent vectors of degree d in lexicographically decreasing order."
    if nvars == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - a):
            out.append((a,) + rest)
    return out


def sym_power_matrix(A, d, ctx):
    """Action on Sym^d of the column space: the monomial x^e goes to
    prod_i (A x)_i^{e_i} expanded in monomials, where (A x)_i = sum_j A_ij x_j
    is the image of the basis vector x_i."""
    from .forms import MForm
    n = len(A)
    mons = monomials(n, d)
    pos = {m: i for i, m in enumerate(mons)}
    images = [MForm.linear([A[j][i] for j in range(n)], ctx) for i in range(n)]
    S = zeros(len(mons), len(mons), ctx)
    for c, m in enumerate(mons):
        f = MForm.one(n, ctx)
        for i, e in enumerate(m):
            for _ in range(e):
                f = f * images[i]
        for e, x in f.terms.items():
            S[pos[e]][c] = x
    return S


# ---------------------------------------------------------------------------
# the binary icosahedral group

def binary_icosahedral(ctx, galois=1):
    """Generators (order 5 and order 4) of the binary icosahedral group in
    SL2 over Q(zeta_5), optionally conjugated by zeta_5 -> zeta_5^galois."""
    z = lambda k: ctx.zeta(k * galois, 5)
    A = [[z(3), ctx.zero], [ctx.zero, z(2)]]
    s5 = em.sqrt_rational(5, ctx)
    if galois % 5 in (2, 3):
        s5 = -s5           # sqrt 5 = z - z^2 - z^3 + z^4 changes sign
    a = z(1) - z(4)
    b = z(2) - z(3)
    B = em.scale(s5.inverse(), [[-a, b], [b, a]])
    return [A, B]
