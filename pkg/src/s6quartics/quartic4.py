"""
The quartic threefolds X_t : s4 = t s2^2 inside the hyperplane sum x_i = 0
of P^5, their S6-orbits of singular points, the 15 lines, and the maps from
P^3 given by linear systems of quartics, whose images are identified with
some X_t by an exact proportionality of degree 16 forms.
"""

from fractions import Fraction
from itertools import product

from . import exactmath as em
from .exactmath import matmul, matvec
from . import forms as fm
from .forms import MForm
from . import permgrp as pg
from . import geom3 as g3


# ---------------------------------------------------------------------------
# the redundant six-coordinate model of P^4

class HyperplaneModel(object):
    """P^4 = {sum x_i = 0} in P^5, with S6 permuting the coordinates."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.ones = [ctx.one] * 6
        self.chart = em.row_basis([[ctx(1 if j == i else (-1 if j == 5 else 0)) for j in range(6)]
                                   for i in range(5)])
        self.s2 = MForm.power_sum(6, 2, ctx)
        self.s4 = MForm.power_sum(6, 4, ctx)

    def on_hyperplane(self, p):
        return sum(p, self.ctx.zero).is_zero()

    def F(self, t):
        return self.s4 - self.s2.square().scale(self.ctx(t))

    def act(self, g, p):
        "Permutation action on points: (g p)_{g(i)} = p_i."
        q = [None] * 6
        for i in range(6):
            q[g[i]] = p[i]
        return q

    def matrix(self, g):
        from .reptheory import perm_matrix
        return perm_matrix(g, self.ctx)


def point_orbit6(p, G, model):
    return g3.orbit(tuple(g3.normalize(p)), G.gens,
                    lambda g, v: g3.normalize(model.act(g, list(v))),
                    lambda v: tuple(x.key for x in v))


ORBIT_SEEDS = {
    "Sigma6": ([-5, 1, 1, 1, 1, 1], 6),
    "Sigma10": ([-1, -1, -1, 1, 1, 1], 10),
    "Sigma15": ([1, -1, 0, 0, 0, 0], 15),
    "Sigma30": (None, 30),            # [1:1:w:w:w^2:w^2]
}


def orbit_seed(name, ctx):
    if name == "Sigma30":
        w = ctx.zeta(1, 3)
        return [ctx.one, ctx.one, w, w, w * w, w * w]
    return [ctx(x) for x in ORBIT_SEEDS[name][0]]


def build_orbits(ctx):
    """The four point orbits and the fifteen lines, lengths verified."""
    model = HyperplaneModel(ctx)
    S6 = pg.named("S6")
    out = {}
    for name, (_, n) in ORBIT_SEEDS.items():
        p = orbit_seed(name, ctx)
        assert model.on_hyperplane(p)
        O = point_orbit6(p, S6, model)
        if len(O) != n:
            raise ValueError("%s has length %d, expected %d" % (name, len(O), n))
        out[name] = O
    L = fifteen_lines(ctx)
    if len(L) != 15:
        raise ValueError("%d lines, expected 15" % len(L))
    out["L15"] = L
    return out


def fifteen_lines(ctx):
    "The S6-orbit of the line through [1:0:-1:1:0:-1] and [0:1:-1:0:1:-1]."
    u = [ctx(x) for x in (1, 0, -1, 1, 0, -1)]
    v = [ctx(x) for x in (0, 1, -1, 0, 1, -1)]
    key = lambda B: em.subspace_key(B)
    model = HyperplaneModel(ctx)
    return g3.orbit(em.row_basis([u, v]), pg.named("S6").gens,
                    lambda g, B: em.row_basis([model.act(g, r) for r in B]), key)


# ---------------------------------------------------------------------------
# singularities

ALL_T = "all"
NO_T = "none"


def _mod_ones(v):
    "Representative of v modulo the all-ones vector (last entry made zero)."
    return [x - v[-1] for x in v]


def singular_t_condition(p, ctx):
    """The set of t for which X_t is singular at p.

    grad F_t(p) = 4 p^3 - 4 t s2(p) p must be proportional to the all-ones
    vector (the hyperplane normal). This is linear in t; the answer is
    ALL_T, NO_T or a single rational (or cyclotomic) value.
    """
    u = _mod_ones([x ** 3 for x in p])
    s2 = sum((x * x for x in p), ctx.zero)
    w = _mod_ones([s2 * x for x in p])
    if all(x.is_zero() for x in w):
        return ALL_T if all(x.is_zero() for x in u) else NO_T
    k = next(i for i, x in enumerate(w) if not x.is_zero())
    t = u[k] / w[k]
    if all((a - t * b).is_zero() for a, b in zip(u, w)):
        return t.to_rational() if t.is_rational() else t
    return NO_T


def is_singular(model, t, p):
    F = model.F(t)
    if not F.evaluate(p).is_zero():
        return False
    g = fm.gradient(F, p)
    return all(x.is_zero() for x in _mod_ones(g))


def node_rank(model, t, p):
    "Rank of the quadratic part of X_t at p in an affine chart of P^4."
    return fm.hessian_rank_affine(model.F(t), p, chart=model.chart, normal=model.ones)


def line_partials_mod_ones(F, B):
    curve = fm.line_param(B[0], B[1], F.ctx)
    parts = [fm.restrict(F.partial(i), curve) for i in range(6)]
    return [parts[i] - parts[5] for i in range(5)]


def singular_along_line(B, t, ctx):
    """X_t singular at every point of the line spanned by the rows of B:
    all partials agree along the line (gradient in the normal direction)."""
    model = HyperplaneModel(ctx)
    F = model.F(t)
    if not fm.restrict(F, fm.line_param(B[0], B[1], ctx)).is_zero():
        return False
    return all(d.is_zero() for d in line_partials_mod_ones(F, B))


def line_t_condition(B, ctx):
    """Solve for t: the partial differences of s4 - t s2^2 along the line
    are A - t C coefficientwise."""
    model = HyperplaneModel(ctx)
    A = line_partials_mod_ones(model.s4, B)
    C = line_partials_mod_ones(model.s2.square(), B)
    a = [x for f in A for x in f.c]
    c = [x for f in C for x in f.c]
    if all(x.is_zero() for x in c):
        return ALL_T if all(x.is_zero() for x in a) else NO_T
    k = next(i for i, x in enumerate(c) if not x.is_zero())
    t = a[k] / c[k]
    if all((x - t * y).is_zero() for x, y in zip(a, c)):
        return t.to_rational() if t.is_rational() else t
    return NO_T


def on_line(B, p):
    return em.rank([list(r) for r in B] + [list(p)]) == 2


# ---------------------------------------------------------------------------
# orbits of subgroups of S6 on P^4

def orbit_census_p4(G, bound, ctx):
    """Short orbits of a permutation group acting on P^4 = P(sum-zero
    hyperplane); the same eigenspace closure as in P^3."""
    model = HyperplaneModel(ctx)
    mats = [model.matrix(g) for g in G.elements]
    gens = [model.matrix(g) for g in G.gens]
    return g3.small_orbit_census(mats, gens, bound, ambient=model.chart)


def fixed_points_p4(H, ctx):
    "Points of P^4 fixed by every element of H (the common eigenlines)."
    model = HyperplaneModel(ctx)
    gens = [model.matrix(g) for g in H.gens]
    # invariant lines inside the hyperplane: intersect eigenspaces over gens
    spaces = [model.chart]
    for A in gens:
        new = []
        for S in spaces:
            for E in g3.eigenspaces(A) or [em.eye(6, ctx)]:
                I = em.intersect(S, E, ctx)
                if I:
                    new.append(I)
        spaces = new
    pts = {}
    for S in spaces:
        if len(S) == 1:
            pts[g3.point_key(S[0])] = S[0]
    return list(pts.values())


# ---------------------------------------------------------------------------
# linear systems as maps P^3 -> P^4

def action_matrices(system, mats):
    """rho(g) on the span of the basis, act(g, f) = f(g^-1 x), from the
    coefficient vectors; columns are images of basis elements."""
    ctx = system.basis[0].ctx
    B = [f.coefficient_vector() for f in system.basis]
    d = system.basis[0].degree
    n = len(B)
    out = []
    for A in mats:
        S = fm.substitution_matrix(em.inverse(A), 4, d, ctx)
        cols = []
        for v in B:
            w = matvec(S, v)
            # solve sum_j c_j B_j = w
            c = em.solve(em.transpose(B), w)
            if c is None:
                raise ValueError("system is not invariant")
            cols.append(c)
        out.append(em.transpose(cols))
    return out


class ImageIdentification(object):
    def __init__(self, t, subgroup, qs, coords, semi):
        self.t = t
        self.subgroup = subgroup
        self.qs = qs
        self.coords = coords          # each q_i as a vector in the basis
        self.semi = semi              # True when a sign-semi-invariant was used


class NoIdentification(ValueError):
    pass


def _fixed_vector(rho_gens, signs, ctx):
    rows = []
    for R, e in zip(rho_gens, signs):
        n = len(R)
        for r in range(n):
            rows.append([R[r][c] - (ctx(e) if r == c else ctx.zero) for c in range(n)])
    return em.kernel(rows, len(rho_gens[0]), ctx)


def identify_image(system, G, H_candidates, lift, ctx):
    """Find t with sum q_i^4 = t (sum q_i^2)^2 for the six coordinates q_i.

    G is a permutation group, lift(g) a 4x4 matrix lifting g, H_candidates
    index-6 subgroups of G (one per conjugacy class). For each H: the
    H-fixed vector of the system (or, if there is none, the vector on which
    H acts by the sign of the permutation) is moved around the six cosets.
    """
    if len(system) != 5:
        raise NoIdentification("system has dimension %d" % len(system))
    errors = []
    for H in H_candidates:
        if len(G) != 6 * len(H):
            raise ValueError("%s is not of index 6" % H.name)
        rho_H = action_matrices(system, [lift(h) for h in H.gens])
        semi = False
        K = _fixed_vector(rho_H, [1] * len(H.gens), ctx)
        if len(K) != 1:
            K = _fixed_vector(rho_H, [pg.sign(h) for h in H.gens], ctx)
            semi = True
        if len(K) != 1:
            errors.append("%s: fixed space of dimension %d" % (H.name, len(K)))
            continue
        v = K[0]
        reps = G.left_cosets(H)
        rho = action_matrices(system, [lift(g) for g in reps])
        coords = [matvec(R, v) for R in rho]
        total = [sum((c[i] for c in coords), ctx.zero) for i in range(5)]
        if semi:
            # q_i are defined up to sign; fix the signs by the coset signs
            coords = [[x * pg.sign(g) for x in c] for c, g in zip(coords, reps)]
            total = [sum((c[i] for c in coords), ctx.zero) for i in range(5)]
        if em.rank(coords) != 5:
            errors.append("%s: six coordinates of rank %d" % (H.name, em.rank(coords)))
            continue
        qs = [MForm.from_vector(
            [sum((c[j] * system.basis[j].terms.get(m, ctx.zero) for j in range(5)), ctx.zero)
             for m in fm.monomials(4, 4)], 4, 4, ctx) for c in coords]
        t = proportionality(qs, ctx)
        if t is None:
            errors.append("%s: no proportionality" % H.name)
            continue
        return ImageIdentification(t, H.name, qs, coords, semi)
    raise NoIdentification("; ".join(errors))


def proportionality(qs, ctx):
    """t with sum q^4 = t (sum q^2)^2 exactly, or None."""
    sq = [q.square() for q in qs]
    P4 = MForm(4, ctx)
    for s in sq:
        P4 = P4 + s.square()
    s2 = MForm(4, ctx)
    for s in sq:
        s2 = s2 + s
    P2 = s2.square()
    if P2.is_zero():
        raise NoIdentification("sum of squares vanishes")
    e = min(P2.terms)
    t = P4.terms.get(e, ctx.zero) / P2.terms[e]
    if not (P4 - P2.scale(t)).is_zero():
        return None
    return t.to_rational() if t.is_rational() else t


def power_sums(qs, ctx):
    s2 = MForm(4, ctx)
    for q in qs:
        s2 = s2 + q.square()
    return s2


# ---------------------------------------------------------------------------
# contracted curves

class Contraction(object):
    def __init__(self, contracted, point, rank):
        self.contracted = contracted
        self.point = point
        self.rank = rank


def contraction_check(qs, curve):
    """Restrict the coordinates q_i to the curve; the curve is contracted
    iff the restrictions are proportional, and the image point is the
    vector of proportionality constants."""
    rs = [fm.restrict(q, curve) for q in qs]
    if all(r.is_zero() for r in rs):
        raise ValueError("curve lies in the base locus")
    M = [list(r.c) for r in rs]
    rk = em.rank(M)
    if rk != 1:
        return Contraction(False, None, rk)
    ref = next(r for r in rs if not r.is_zero())
    k = next(i for i, x in enumerate(ref.c) if not x.is_zero())
    pt = [r.c[k] / ref.c[k] for r in rs]
    return Contraction(True, list(g3.normalize(pt)), 1)


def plane_span(l1, l2):
    B = em.row_basis(l1.basis + l2.basis)
    if len(B) != 3:
        raise ValueError("lines do not span a plane")
    return B


def lambda_line(Li, Lip, Lj, Ljp, ctx):
    "The line <L_i, L_j'> meet <L_i', L_j>."
    I = em.intersect(plane_span(Li, Ljp), plane_span(Lip, Lj), ctx)
    return g3.ProjLine(I)


# ---------------------------------------------------------------------------
# Riemann-Hurwitz

class RHSearch(object):
    """2g - 2 = |G| (2 gbar - 2) + sum_k a_k (|G| - k) over orbit lengths k."""

    def __init__(self, order, lengths, gmin=2, gmax=15):
        self.order = order
        self.lengths = sorted(lengths)
        self.gmin = gmin
        self.gmax = gmax


def rh_search(spec):
    N = spec.order
    contrib = sorted({N - k for k in spec.lengths if N - k > 0})
    found = {}
    top = 2 * spec.gmax - 2
    gbar = 0
    while N * (2 * gbar - 2) <= top:
        base = N * (2 * gbar - 2)

        def rec(i, acc, counts):
            if i == len(contrib):
                v = base + acc
                if v % 2 == 0 and spec.gmin <= v // 2 + 1 <= spec.gmax:
                    found.setdefault(v // 2 + 1, []).append((gbar, dict(counts)))
                return
            a = 0
            while base + acc + a * contrib[i] <= top:
                if a:
                    counts[N - contrib[i]] = a
                rec(i + 1, acc + a * contrib[i], counts)
                counts.pop(N - contrib[i], None)
                a += 1

        rec(0, 0, {})
        gbar += 1
    return found


# ---------------------------------------------------------------------------
# arithmetic identities

LATTICE = [[-10, 20, 5], [20, -10, 5], [5, 5, 4]]


def numeric_identities():
    d = em.det_rational([[Fraction(x) for x in r] for r in LATTICE])
    six = 64 - 6 * 12 + 6 * 2
    ten = 64 - 10 * 6 + 10 * 1
    return {"determinant": int(d), "six_lines": six, "ten_lines": ten,
            "six_terms": [64, -72, 12], "ten_terms": [64, -60, 10]}
