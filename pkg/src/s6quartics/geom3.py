"""
Points, lines and curves in P^3 = P(U4) under the finite groups: orbit
census, invariant lines, transversals, twisted cubics and their tangent
developables, and linear systems of quartics through lines.

A projective group is handled as a list of matrices, one lift per element.
"""

from fractions import Fraction

from . import exactmath as em
from .exactmath import matmul, matvec
from . import forms as fm
from .forms import MForm, BinaryForm, CurveParam
from . import permgrp as pg


# ---------------------------------------------------------------------------
# points and lines

def normalize(v):
    "Scale so that the first nonzero entry is 1."
    for x in v:
        if not x.is_zero():
            inv = x.inverse()
            return tuple(y * inv for y in v)
    raise ValueError("zero vector")


def point_key(v):
    return tuple(x.key for x in normalize(v))


class ProjPoint(object):
    def __init__(self, v):
        self.coords = normalize(v)
        self.key = tuple(x.key for x in self.coords)

    def __eq__(self, other):
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "[%s]" % ":".join(em.pretty(x) for x in self.coords)


def plucker(u, v):
    n = len(u)
    return [u[i] * v[j] - u[j] * v[i] for i in range(n) for j in range(i + 1, n)]


def plucker_pairing(p, q):
    "Zero iff the two lines of P^3 meet."
    p01, p02, p03, p12, p13, p23 = p
    q01, q02, q03, q12, q13, q23 = q
    return (p01 * q23 - p02 * q13 + p03 * q12 + p12 * q03 - p13 * q02 + p23 * q01)


def plucker_quadric(p):
    return plucker_pairing(p, p) * Fraction(1, 2)


class ProjLine(object):
    """A 2-dimensional subspace; basis in reduced echelon form."""

    def __init__(self, vectors):
        B = em.row_basis([list(v) for v in vectors])
        if len(B) != 2:
            raise ValueError("not a line: span has dimension %d" % len(B))
        self.basis = B
        self.key = tuple(x.key for row in B for x in row)
        self.plucker = plucker(B[0], B[1])

    def __eq__(self, other):
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def param(self):
        return fm.line_param(self.basis[0], self.basis[1], self.basis[0][0].ctx)

    def point(self, s, t):
        ctx = self.basis[0][0].ctx
        return [ctx(s) * a + ctx(t) * b for a, b in zip(*self.basis)]

    def image(self, A):
        return ProjLine([matvec(A, v) for v in self.basis])

    def contains(self, p):
        return em.rank(self.basis + [list(p)]) == 2

    def equations(self):
        "Two linear forms (as coefficient vectors) cutting out the line."
        return em.kernel(self.basis)

    def __repr__(self):
        return "Line(%s)" % [[em.pretty(x) for x in r] for r in self.basis]


def meets(l1, l2):
    return plucker_pairing(l1.plucker, l2.plucker).is_zero()


def line_from_plucker(p, ctx):
    "The line with Pluecker vector p, through the kernel of its dual matrix."
    p01, p02, p03, p12, p13, p23 = p
    z = ctx.zero
    D = [[z, p23, -p13, p12],
         [-p23, z, p03, -p02],
         [p13, -p03, z, p01],
         [-p12, p02, -p01, z]]
    K = em.kernel(D)
    return ProjLine(K)


def incidence_profile(lines):
    n = len(lines)
    return [[0 if i == j else int(meets(lines[i], lines[j])) for j in range(n)]
            for i in range(n)]


def double_five_profile(n=5):
    "Expected profile of L_1..L_5, L_1'..L_5' in that order."
    M = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                M[i][n + j] = M[n + j][i] = 1
    return M


class InfiniteFamily(ValueError):
    pass


def transversals(l1, l2, l3, l4):
    """Lines meeting all four given pairwise skew lines.

    Returns (count, lines): count 1 for a double root of the binary quadratic
    (the unique transversal is returned), 2 for two distinct roots (the
    lines are returned when the roots are in the field). Raises
    InfiniteFamily when the residual pencil is degenerate.
    """
    ls = [l1, l2, l3, l4]
    for i in range(4):
        for j in range(i + 1, 4):
            if meets(ls[i], ls[j]):
                raise ValueError("input lines are not pairwise skew")
    ctx = l1.basis[0][0].ctx
    # <x, p_i> = 0 as linear conditions on x in C^6
    rows = []
    for l in ls:
        p = l.plucker
        # pairing(x, p) = x01 p23 - x02 p13 + x03 p12 + x12 p03 - x13 p02 + x23 p01
        rows.append([p[5], -p[4], p[3], p[2], -p[1], p[0]])
    K = em.kernel(rows, 6, ctx)
    if len(K) != 2:
        raise InfiniteFamily("incidence conditions have rank %d" % (6 - len(K)))
    x1, x2 = K
    a = plucker_quadric(x1)
    b = plucker_pairing(x1, x2)          # = 2 B(x1, x2)
    c = plucker_quadric(x2)
    if a.is_zero() and b.is_zero() and c.is_zero():
        raise InfiniteFamily("pencil lies on the Pluecker quadric")
    disc = b * b - 4 * a * c
    if disc.is_zero():
        # root of a u^2 + b u v + c v^2
        if not a.is_zero():
            u, v = -b, 2 * a
        else:
            u, v = ctx.zero, ctx.one
        x = [u * s + v * t for s, t in zip(x1, x2)]
        return 1, [line_from_plucker(x, ctx)]
    return 2, []


# ---------------------------------------------------------------------------
# orbits

def orbit(obj, gens, image, key):
    out = [obj]
    seen = {key(obj)}
    i = 0
    while i < len(out):
        for g in gens:
            y = image(g, out[i])
            k = key(y)
            if k not in seen:
                seen.add(k)
                out.append(y)
        i += 1
    return out


def point_orbit(p, gens):
    return orbit(tuple(normalize(p)), gens,
                 lambda g, v: normalize(matvec(g, list(v))),
                 lambda v: tuple(x.key for x in v))


def line_orbit(L, gens):
    return orbit(L, gens, lambda g, l: l.image(g), lambda l: l.key)


def stabilizer(mats, test):
    return [A for A in mats if test(A)]


# ---------------------------------------------------------------------------
# census of short orbits

def eigenspaces(A):
    "Nonzero proper eigenspaces of a finite order matrix."
    o = em.mat_order(A)
    n = len(A)
    out = []
    total = 0
    for k in range(o):
        E = em.eigenspace_root_of_unity(A, k, o)
        if E:
            total += len(E)
            if len(E) < n:
                out.append(E)
    assert total == n
    return out


def small_orbit_census(mats, gens, bound, ambient=None):
    """All orbits of length <= bound of the projective group in P(ambient).

    mats lists one matrix per element of the group, gens generate it. A
    point whose orbit has length r <= bound has stabilizer S of order
    |G|/r >= |G|/bound. The intersection of the eigenspaces of the elements
    of S containing the point is one of the subspaces produced below by
    repeated intersection of eigenspaces. If it is a point, the point is
    found; otherwise S fixes a positive-dimensional subspace pointwise and
    that subspace is reported as an infinite family when its pointwise
    stabilizer has order >= |G|/bound. Subspaces are processed up to the
    group action.

    Returns (orbits, families): orbits is a list of point orbits sorted by
    length, families a list of (subspace, stabilizer order).
    """
    ctx = mats[0][0][0].ctx
    n = len(mats[0])
    if ambient is None:
        ambient = em.eye(n, ctx)
    ambient = em.row_basis(ambient)
    order = len(mats)
    eig = []
    for A in mats:
        E = eigenspaces(A)
        if E:
            eig.append([em.intersect(F, ambient, ctx) if len(ambient) < n else F
                        for F in E])
    eig = [[F for F in Es if F and len(F) < len(ambient)] for Es in eig]

    def translates(B):
        keys = set()
        todo = [B]
        keys.add(em.subspace_key(B))
        while todo:
            C = todo.pop()
            for g in gens:
                D = em.row_basis([matvec(g, v) for v in C])
                k = em.subspace_key(D)
                if k not in keys:
                    keys.add(k)
                    todo.append(D)
        return keys

    points = {}
    covered = set()
    families = []
    queue = [F for Es in eig for F in Es]
    while queue:
        B = queue.pop(0)
        k = em.subspace_key(B)
        if len(B) == 1:
            points.setdefault(k, B[0])
            continue
        if k in covered:
            continue
        covered |= translates(B)
        # pointwise stabilizer: elements acting by a scalar on B
        stab = 1 + sum(1 for Es in eig if any(len(em.intersect(B, F, ctx)) == len(B) for F in Es))
        if stab * bound >= order:
            families.append((B, stab))
        for Es in eig:
            for F in Es:
                I = em.intersect(B, F, ctx)
                if 0 < len(I) < len(B):
                    queue.append(I)
    orbits = []
    seen = set()
    for k, v in sorted(points.items()):
        if point_key(v) in seen:
            continue
        O = point_orbit(v, gens)
        for p in O:
            seen.add(tuple(x.key for x in p))
        if len(O) <= bound:
            orbits.append(O)
    orbits.sort(key=len)
    return orbits, families


# ---------------------------------------------------------------------------
# invariant lines

def fixed_lines(gens, elements, ctx):
    """The two invariant lines of a subgroup whose lift splits U4 as 2 + 2."""
    from .reptheory import split_isotypic
    parts, C = split_isotypic(gens, elements, ctx)
    if [len(p) for p in parts] != [2, 2]:
        raise ValueError("splitting shape %s, not 2+2" % [len(p) for p in parts])
    lines = [ProjLine(p) for p in parts]
    for L in lines:
        for g in gens:
            assert L.image(g) == L
    return lines


# ---------------------------------------------------------------------------
# linear conditions on forms

def evaluation_row(p, mons):
    ctx = p[0].ctx
    row = []
    for m in mons:
        x = ctx.one
        for c, e in zip(p, m):
            if e:
                x = x * c ** e
        row.append(x)
    return row


LINE_PARAMETERS = [(1, 0), (1, 1), (1, -1), (1, 2), (0, 1)]   # 0, 1, -1, 2, infinity


def line_parameters(d):
    "d + 1 distinct points of P^1: 0, 1, -1, 2, ..., infinity."
    vals = [(1, 0)]
    k = 1
    while len(vals) < d:
        vals.append((1, k))
        if len(vals) < d:
            vals.append((1, -k))
        k += 1
    return vals + [(0, 1)]


def line_condition_rows(L, nvars, d):
    mons = fm.monomials(nvars, d)
    return [evaluation_row(L.point(s, t), mons) for s, t in line_parameters(d)]


def restriction_rows(curve, nvars, d):
    """Rows expressing the coefficients of f restricted to the curve as
    linear functions of the coefficients of f."""
    ctx = curve.ctx
    mons = fm.monomials(nvars, d)
    cols = []
    for m in mons:
        f = MForm(nvars, ctx, {m: ctx.one})
        cols.append(fm.restrict(f, curve).c)
    return [list(r) for r in zip(*cols)]


def invariance_rows(gen_inverses, nvars, d, ctx):
    mons = fm.monomials(nvars, d)
    rows = []
    for gi in gen_inverses:
        S = fm.substitution_matrix(gi, nvars, d, ctx)
        for r in range(len(mons)):
            rows.append([S[r][c] - (ctx.one if r == c else ctx.zero) for c in range(len(mons))])
    return rows


class LinearSystem(object):
    def __init__(self, basis, lines):
        self.basis = basis
        self.lines = lines

    def __len__(self):
        return len(self.basis)

    def verify(self):
        vecs = [f.coefficient_vector() for f in self.basis]
        assert em.rank(vecs) == len(vecs)
        for f in self.basis:
            for L in self.lines:
                assert fm.restrict(f, L.param()).is_zero()
        return True


def system_through_lines(lines, d=4, extra_rows=(), ctx=None):
    ctx = ctx or lines[0].basis[0][0].ctx
    rows = [r for L in lines for r in line_condition_rows(L, 4, d)]
    rows += list(extra_rows)
    K = em.kernel(rows, len(fm.monomials(4, d)), ctx)
    basis = [MForm.from_vector(v, 4, d, ctx) for v in K]
    return LinearSystem(basis, lines)


def quadric_tangency_check(l1, l2, l3, l4):
    """Classify how l4 meets the unique quadric through l1, l2, l3:
    'tangent' (restriction a nonzero square), 'contained' (zero) or
    'transversal' (two distinct points)."""
    for a, b in [(l1, l2), (l1, l3), (l2, l3)]:
        if meets(a, b):
            raise ValueError("first three lines must be pairwise skew")
    S = system_through_lines([l1, l2, l3], d=2)
    if len(S) != 1:
        raise ValueError("quadrics through three lines: dimension %d" % len(S))
    Q = S.basis[0]
    r = fm.restrict(Q, l4.param())
    if r.is_zero():
        return "contained", Q
    if fm.is_perfect_square_quadratic(r):
        return "tangent", Q
    return "transversal", Q


# ---------------------------------------------------------------------------
# twisted cubics

def veronese3(M, ctx):
    """S with nu(M w) = S nu(w), nu(s, t) = (s^3, s^2 t, s t^2, t^3)."""
    ls = BinaryForm([M[0][0], M[0][1]], ctx)
    lt = BinaryForm([M[1][0], M[1][1]], ctx)
    rows = []
    for k in range(4):
        f = BinaryForm([1], ctx)
        for _ in range(3 - k):
            f = f * ls
        for _ in range(k):
            f = f * lt
        rows.append(f.c)
    return rows


def twisted_cubic(A, ctx):
    "The curve A . nu(s, t)."
    return CurveParam([BinaryForm(list(A[i]), ctx) for i in range(4)])


def tangent_developable(c, ctx):
    """The quartic containing every tangent line of the twisted cubic c.

    The tangent line at c(s, t) is spanned by c_s and c_t, so the condition
    is f(mu c_s + nu c_t) = 0 identically; as a form of degree 4 in (mu, nu)
    it suffices to impose it at five values of (mu : nu).
    """
    cs, ct = c.ds(), c.dt()
    rows = []
    for mu, nu in LINE_PARAMETERS:
        comps = [a * ctx(mu) + b * ctx(nu) for a, b in zip(cs.components, ct.components)]
        rows += restriction_rows(CurveParam(comps), 4, 4)
    K = em.kernel(rows, 35, ctx)
    if len(K) != 1:
        raise ValueError("tangent developable: kernel dimension %d" % len(K))
    f = MForm.from_vector(K[0], 4, 4, ctx)
    return normalize_form(f)


def normalize_form(f):
    "Scale so that the leading coefficient (largest exponent) is 1."
    e = max(f.terms)
    return f.scale(f.terms[e].inverse())


def singular_along(f, c):
    "f and all its partial derivatives vanish identically on the curve c."
    if not fm.restrict(f, c).is_zero():
        return False
    return all(fm.restrict(f.partial(i), c).is_zero() for i in range(f.nvars))


def curve_line_intersection(c, L):
    "Degree of the common zero locus on c of the two equations of L."
    ctx = c.ctx
    forms = [MForm.linear(v, ctx) for v in L.equations()]
    return fm.common_root_degree([fm.restrict(f, c) for f in forms])


def curves_disjoint(c1, c2):
    """Disjointness of two twisted cubics: the quadrics through c2 restrict
    to c1 as sextics without a common root."""
    ctx = c1.ctx
    Q = quadrics_through(c2)
    return fm.common_root_degree([fm.restrict(q, c1) for q in Q]) == 0


def quadrics_through(c):
    ctx = c.ctx
    K = em.kernel(restriction_rows(c, 4, 2), 10, ctx)
    return [MForm.from_vector(v, 4, 2, ctx) for v in K]


# ---------------------------------------------------------------------------
# the invariant pencil

def pencil_member_through(S1, S2, p):
    "The member a S1 + b S2 vanishing at p."
    a, b = S1.evaluate(p), S2.evaluate(p)
    if a.is_zero() and b.is_zero():
        raise ValueError("point in the base locus")
    return S1.scale(b) - S2.scale(a)


def is_singular_at(f, p):
    return all(x.is_zero() for x in fm.gradient(f, p)) and f.evaluate(p).is_zero()


# ---------------------------------------------------------------------------
# presentations of 2.A5 and the two invariant twisted cubics

def enumerate_matrix_group(gens):
    ctx = gens[0][0][0].ctx
    elems, _ = pg.closure(gens, matmul, em.mat_key, em.eye(len(gens[0]), ctx))
    return elems


def presentation_pair(elements):
    """First (s, t) with s^2 = t^3 = (st)^5 = -I, s of order 4, t of order 6,
    generating the whole group; this presents SL2(5) = 2.A5."""
    ctx = elements[0][0][0].ctx
    n = len(elements[0])
    minus = em.mat_key(em.scale(-1, em.eye(n, ctx)))
    sq = [em.mat_key(matmul(g, g)) == minus for g in elements]
    cubes = [em.mat_key(em.mat_pow(g, 3)) == minus for g in elements]
    for s, ok in zip(elements, sq):
        if not ok:
            continue
        for t, ok3 in zip(elements, cubes):
            if not ok3 or em.mat_order(t) != 6:
                continue
            if em.mat_key(em.mat_pow(matmul(s, t), 5)) != minus:
                continue
            if len(enumerate_matrix_group([s, t])) == len(elements):
                return s, t
    raise ValueError("no presentation pair found")


def matched_isomorphism(src_gens, dst_gens):
    """Extend the generator correspondence to a map on the whole group and
    check that it is well defined; returns the list of (src, dst) pairs."""
    ctx1 = src_gens[0][0][0].ctx
    ctx2 = dst_gens[0][0][0].ctx
    one = (em.eye(len(src_gens[0]), ctx1), em.eye(len(dst_gens[0]), ctx2))
    pairs = list(zip(src_gens, dst_gens))
    mulp = lambda x, y: (matmul(x[0], y[0]), matmul(x[1], y[1]))
    elems, _ = pg.closure(pairs, mulp, lambda x: (em.mat_key(x[0]), em.mat_key(x[1])), one)
    if len({em.mat_key(a) for a, _ in elems}) != len(elems):
        raise ValueError("generator correspondence is not an isomorphism")
    return elems


def invariant_twisted_cubic(bi_gens, target_gens, ctx):
    """The image of the rational normal curve under the equivariant map
    Sym^3 of the binary representation -> the target representation."""
    s, t = presentation_pair(enumerate_matrix_group(bi_gens))
    x, y = presentation_pair(enumerate_matrix_group(target_gens))
    from .reptheory import intertwiners
    V = [veronese3(s, ctx), veronese3(t, ctx)]
    I = intertwiners(V, [x, y], ctx)
    if len(I) != 1:
        raise ValueError("intertwiner dimension %d" % len(I))
    A = I[0]
    if em.rank(A) != 4:
        raise ValueError("intertwiner is singular")
    return twisted_cubic(A, ctx), (s, t), (x, y)


def galois_conjugate_exponent(ctx):
    "An exponent k prime to N with k = 2 mod 5 and k = 1 mod N/5^a."
    N = ctx.N
    m = N
    while m % 5 == 0:
        m //= 5
    for k in range(1, N):
        if k % 5 == 2 and (k - 1) % m == 0 and em.gcd(k, N) == 1:
            return k
    raise ValueError("no suitable exponent")


def twisted_cubics(target_gens, ctx):
    """The two invariant twisted cubics for a lift of A5 acting on U4,
    from the two Galois-conjugate binary icosahedral representations."""
    from .reptheory import binary_icosahedral
    c1, _, _ = invariant_twisted_cubic(binary_icosahedral(ctx, 1), target_gens, ctx)
    k = galois_conjugate_exponent(ctx)
    c2, _, _ = invariant_twisted_cubic(binary_icosahedral(ctx, k), target_gens, ctx)
    return c1, c2


def is_invariant_curve(c, mats):
    """Every group element maps the curve into itself: the quadrics through
    the curve vanish on its transforms."""
    Q = quadrics_through(c)
    for A in mats:
        d = c.transform(A)
        for q in Q:
            if not fm.restrict(q, d).is_zero():
                return False
    return True
