"""
Homogeneous forms over Q(zeta_N), their transformation under linear
substitutions, and restriction to lines and rational curves as binary forms.

Action convention: act(g, f)(x) = f(g^{-1} x). This is a left action,
act(g h, f) = act(g, act(h, f)), and g maps the zero set of f onto the
zero set of act(g, f).
"""

from fractions import Fraction

import flint

from . import exactmath as em
from .exactmath import CycNum


def monomials(nvars, d):
    "Exponent vectors of degree d, lexicographically decreasing."
    if nvars == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - a):
            out.append((a,) + rest)
    return out


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class MForm(object):
    """A form in nvars variables; terms maps exponent tuples to nonzero CycNum."""

    __slots__ = ("nvars", "ctx", "terms")

    def __init__(self, nvars, ctx, terms=None):
        self.nvars = nvars
        self.ctx = ctx
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = ctx(c)
                if not c.is_zero():
                    self.terms[tuple(e)] = c

    @classmethod
    def _raw(cls, nvars, ctx, acc):
        "From a dict of unreduced flint polynomials."
        f = cls(nvars, ctx)
        for e, p in acc.items():
            p = ctx._reduce(p)
            if not p.is_zero():
                f.terms[e] = CycNum(ctx, p)
        return f

    @classmethod
    def var(cls, i, nvars, ctx):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, ctx, {tuple(e): ctx.one})

    @classmethod
    def one(cls, nvars, ctx):
        return cls(nvars, ctx, {(0,) * nvars: ctx.one})

    @classmethod
    def linear(cls, coeffs, ctx):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, ctx, terms)

    @classmethod
    def power_sum(cls, nvars, k, ctx):
        terms = {}
        for i in range(nvars):
            e = [0] * nvars
            e[i] = k
            terms[tuple(e)] = ctx.one
        return cls(nvars, ctx, terms)

    @property
    def degree(self):
        for e in self.terms:
            return sum(e)
        return None

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MForm):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted((e, c.key) for e, c in self.terms.items())))

    def __repr__(self):
        items = sorted(self.terms.items(), reverse=True)
        return " + ".join("%s*x^%s" % (em.pretty(c), e) for e, c in items) or "0"

    def __add__(self, other):
        terms = dict(self.terms)
        for e, c in other.terms.items():
            if e in terms:
                s = terms[e] + c
                if s.is_zero():
                    del terms[e]
                else:
                    terms[e] = s
            else:
                terms[e] = c
        f = MForm(self.nvars, self.ctx)
        f.terms = terms
        return f

    def __neg__(self):
        f = MForm(self.nvars, self.ctx)
        f.terms = {e: -c for e, c in self.terms.items()}
        return f

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.ctx(c)
        if c.is_zero():
            return MForm(self.nvars, self.ctx)
        f = MForm(self.nvars, self.ctx)
        f.terms = {e: x * c for e, x in self.terms.items()}
        return f

    def __mul__(self, other):
        if not isinstance(other, MForm):
            return self.scale(other)
        acc = {}
        for e1, c1 in self.terms.items():
            p1 = c1.p
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                t = p1 * c2.p
                if e in acc:
                    acc[e] += t
                else:
                    acc[e] = t
        return MForm._raw(self.nvars, self.ctx, acc)

    __rmul__ = scale

    def __pow__(self, k):
        r = MForm.one(self.nvars, self.ctx)
        b = self
        while k:
            if k & 1:
                r = r * b
            k >>= 1
            if k:
                b = b * b
        return r

    def square(self):
        "f^2 using the symmetry of the product."
        items = list(self.terms.items())
        acc = {}
        for i, (e1, c1) in enumerate(items):
            e = _add_exp(e1, e1)
            t = c1.p * c1.p
            acc[e] = acc[e] + t if e in acc else t
            for e2, c2 in items[i + 1:]:
                e = _add_exp(e1, e2)
                t = 2 * (c1.p * c2.p)
                acc[e] = acc[e] + t if e in acc else t
        return MForm._raw(self.nvars, self.ctx, acc)

    def evaluate(self, point):
        return self.substitute(point, self.ctx.one, self.ctx.zero)

    def substitute(self, values, one, zero):
        """f(values[0], ..., values[n-1]) for values in any ring with the
        given one and zero."""
        powers = []
        for i in range(self.nvars):
            top = max((e[i] for e in self.terms), default=0)
            ps = [one]
            for _ in range(top):
                ps.append(ps[-1] * values[i])
            powers.append(ps)
        total = zero
        for e, c in self.terms.items():
            t = None
            for i, k in enumerate(e):
                if k:
                    t = powers[i][k] if t is None else t * powers[i][k]
            total = total + (c * one if t is None else t * c)
        return total

    def partial(self, i):
        acc = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                acc[tuple(e2)] = c * e[i]
        f = MForm(self.nvars, self.ctx)
        f.terms = acc
        return f

    def gradient_forms(self):
        return [self.partial(i) for i in range(self.nvars)]

    def coefficient_vector(self, d=None):
        d = self.degree if d is None else d
        return [self.terms.get(m, self.ctx.zero) for m in monomials(self.nvars, d)]

    @classmethod
    def from_vector(cls, v, nvars, d, ctx):
        return cls(nvars, ctx, dict(zip(monomials(nvars, d), v)))


def linear_substitution(f, A):
    "f(A x): variable i becomes sum_j A[i][j] x_j."
    n = f.nvars
    ctx = f.ctx
    lins = [MForm.linear(list(A[i]), ctx) for i in range(n)]
    return f.substitute(lins, MForm.one(n, ctx), MForm(n, ctx))


def act(g, f, g_inv=None):
    "act(g, f)(x) = f(g^{-1} x)."
    if g_inv is None:
        g_inv = em.inverse(g)
    return linear_substitution(f, g_inv)


def substitution_matrix(g_inv, nvars, d, ctx):
    """Matrix of f -> f(g_inv x) on the monomial basis of degree d (columns
    are images of monomials)."""
    mons = monomials(nvars, d)
    pos = {m: i for i, m in enumerate(mons)}
    lins = [MForm.linear(list(g_inv[i]), ctx) for i in range(nvars)]
    one = MForm.one(nvars, ctx)
    # powers of the substituted variables, shared by all monomials
    pw = []
    for i in range(nvars):
        ps = [one]
        for _ in range(d):
            ps.append(ps[-1] * lins[i])
        pw.append(ps)
    S = em.zeros(len(mons), len(mons), ctx)
    for c, m in enumerate(mons):
        t = one
        for i, k in enumerate(m):
            if k:
                t = t * pw[i][k]
        for e, x in t.terms.items():
            S[pos[e]][c] = x
    return S


def invariant_forms(group_inverses, nvars, d, ctx, character=None):
    """Basis of forms of degree d fixed by act(g, .) for the generators.

    group_inverses lists g^{-1} for each generator g. With `character` (one
    scalar per generator) the semi-invariants act(g, f) = chi(g) f are
    returned instead.
    """
    mons = monomials(nvars, d)
    rows = []
    for k, gi in enumerate(group_inverses):
        S = substitution_matrix(gi, nvars, d, ctx)
        lam = ctx.one if character is None else character[k]
        for r in range(len(mons)):
            rows.append([S[r][c] - (lam if r == c else ctx.zero) for c in range(len(mons))])
    K = em.kernel(rows, len(mons), ctx)
    return [MForm.from_vector(v, nvars, d, ctx) for v in K]


def gradient(f, p):
    return [f.partial(i).evaluate(p) for i in range(f.nvars)]


def hessian(f, p):
    grads = [f.partial(i) for i in range(f.nvars)]
    return [[g.partial(j).evaluate(p) for j in range(f.nvars)] for g in grads]


class NotSingular(ValueError):
    pass


def hessian_rank_affine(f, p, chart=None, normal=None):
    """Rank of the quadratic part of f at the singular point p.

    `chart` is a basis of the ambient linear space containing p (for X_t:
    the hyperplane sum x_i = 0); default is all of C^n. `normal` is a vector
    along which the gradient is allowed to point (the hyperplane normal).
    The affine chart is p + span(u_1, ..., u_m) with the u_k completing p to
    a basis of the chart, and the quadratic part is u^T H(p) u.
    """
    ctx = f.ctx
    n = f.nvars
    if chart is None:
        chart = em.eye(n, ctx)
    if not f.evaluate(p).is_zero():
        raise NotSingular("point not on the hypersurface")
    g = gradient(f, p)
    if normal is None:
        if any(not x.is_zero() for x in g):
            raise NotSingular("nonzero gradient")
    else:
        if em.rank([g, normal]) > 1 and any(not x.is_zero() for x in g):
            raise NotSingular("gradient not along the normal")
    # complete p to a basis of the chart
    basis = [list(p)]
    for v in chart:
        if em.rank(basis + [v]) > len(basis):
            basis.append(v)
    U = basis[1:]
    H = hessian(f, p)
    Q = [[sum_dot(u, em.matvec(H, w), ctx) for w in U] for u in U]
    return em.rank(Q) if any(not x.is_zero() for r in Q for x in r) else 0


def sum_dot(u, v, ctx):
    s = ctx.zero
    for a, b in zip(u, v):
        if not a.is_zero() and not b.is_zero():
            s = s + a * b
    return s


# ---------------------------------------------------------------------------
# binary forms

class BinaryForm(object):
    """c[0] s^d + c[1] s^(d-1) t + ... + c[d] t^d."""

    __slots__ = ("ctx", "c")

    def __init__(self, coeffs, ctx):
        self.ctx = ctx
        self.c = [ctx(x) for x in coeffs]

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return all(x.is_zero() for x in self.c)

    def __repr__(self):
        return "BinaryForm(%s)" % [em.pretty(x) for x in self.c]

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.c == other.c

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            if isinstance(other, (int, Fraction, CycNum)) and self.degree == 0:
                return BinaryForm([self.c[0] + other], self.ctx)
            return NotImplemented
        if self.is_zero() and self.degree != other.degree:
            return other
        if other.is_zero() and self.degree != other.degree:
            return self
        assert self.degree == other.degree, (self.degree, other.degree)
        return BinaryForm([a + b for a, b in zip(self.c, other.c)], self.ctx)

    __radd__ = __add__

    def __neg__(self):
        return BinaryForm([-x for x in self.c], self.ctx)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        ctx = self.ctx
        if not isinstance(other, BinaryForm):
            o = ctx(other)
            return BinaryForm([x * o for x in self.c], ctx)
        acc = [None] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a.is_zero():
                continue
            for j, b in enumerate(other.c):
                if b.is_zero():
                    continue
                t = a.p * b.p
                acc[i + j] = t if acc[i + j] is None else acc[i + j] + t
        return BinaryForm([ctx.zero if p is None else CycNum(ctx, ctx._reduce(p))
                           for p in acc], ctx)

    __rmul__ = __mul__

    def ds(self):
        d = self.degree
        return BinaryForm([self.c[k] * (d - k) for k in range(d)], self.ctx)

    def dt(self):
        return BinaryForm([self.c[k] * k for k in range(1, self.degree + 1)], self.ctx)

    def evaluate(self, s, t):
        ctx = self.ctx
        r = ctx.zero
        d = self.degree
        for k, x in enumerate(self.c):
            r = r + x * (ctx(s) ** (d - k)) * (ctx(t) ** k)
        return r

    def substitute_linear(self, M):
        "f(M (s, t)): s -> M00 s + M01 t, t -> M10 s + M11 t."
        ctx = self.ctx
        ls = BinaryForm([M[0][0], M[0][1]], ctx)
        lt = BinaryForm([M[1][0], M[1][1]], ctx)
        d = self.degree
        out = BinaryForm([0] * (d + 1), ctx)
        ps = [BinaryForm([1], ctx)]
        pt = [BinaryForm([1], ctx)]
        for _ in range(d):
            ps.append(ps[-1] * ls)
            pt.append(pt[-1] * lt)
        for k, x in enumerate(self.c):
            if not x.is_zero():
                out = out + ps[d - k] * pt[k] * x
        return out

    # univariate view: F(x) = f(x, 1), highest power first
    def _dehomog(self):
        return trim_poly(list(self.c))

    def t_multiplicity(self):
        "Multiplicity of the root [1:0] (the factor t)."
        k = 0
        for x in self.c:
            if x.is_zero():
                k += 1
            else:
                break
        return k


def trim_poly(cs):
    "Drop leading zeros from a highest-first coefficient list."
    i = 0
    while i < len(cs) and cs[i].is_zero():
        i += 1
    return cs[i:]


def _poly_divmod(a, b):
    "Highest-first univariate division over the field."
    a = list(a)
    ctx = b[0].ctx
    inv = b[0].inverse()
    q = []
    while len(a) >= len(b):
        f = a[0] * inv
        q.append(f)
        for i in range(len(b)):
            a[i] = a[i] - f * b[i]
        a = a[1:]
    return q, trim_poly(a)


def _poly_gcd(a, b):
    a, b = trim_poly(a), trim_poly(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    inv = a[0].inverse()
    return [x * inv for x in a]


def binary_gcd(f, g):
    "Monic gcd as a binary form."
    ctx = f.ctx
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    m = min(f.t_multiplicity(), g.t_multiplicity())
    F, G = f._dehomog(), g._dehomog()
    h = _poly_gcd(F, G)
    # homogenize and multiply by t^m
    return BinaryForm([ctx.zero] * m + h, ctx)


def distinct_root_count(f):
    "Number of distinct roots on P^1 of a nonzero binary form."
    if f.is_zero():
        raise ValueError("zero form")
    d = f.degree
    if d == 0:
        return 0
    g = binary_gcd(f.ds(), f.dt())
    return d - g.degree


def is_squarefree(f):
    return distinct_root_count(f) == f.degree


def is_perfect_square_quadratic(f):
    assert f.degree == 2
    a, b, c = f.c
    return not f.is_zero() and (b * b - 4 * a * c).is_zero()


def common_root_degree(forms):
    "Degree of the gcd of a list of binary forms (number of common roots with multiplicity)."
    g = None
    for f in forms:
        if f.is_zero():
            continue
        g = f if g is None else binary_gcd(g, f)
    if g is None:
        raise ValueError("all forms zero")
    return g.degree


class CurveParam(object):
    "A map P^1 -> P^n given by binary forms of a common degree."

    def __init__(self, components):
        self.components = list(components)
        self.ctx = self.components[0].ctx
        degs = {c.degree for c in self.components}
        assert len(degs) == 1
        self.degree = degs.pop()

    def check_basepoint_free(self):
        return common_root_degree(self.components) == 0

    def transform(self, A):
        "The curve A . c."
        n = len(self.components)
        out = []
        for i in range(n):
            acc = BinaryForm([0] * (self.degree + 1), self.ctx)
            for j in range(n):
                if not A[i][j].is_zero():
                    acc = acc + self.components[j] * A[i][j]
            out.append(acc)
        return CurveParam(out)

    def reparametrize(self, M):
        return CurveParam([c.substitute_linear(M) for c in self.components])

    def point(self, s, t):
        return [c.evaluate(s, t) for c in self.components]

    def ds(self):
        return CurveParam([c.ds() for c in self.components])

    def dt(self):
        return CurveParam([c.dt() for c in self.components])


def line_param(u, v, ctx):
    "s u + t v."
    return CurveParam([BinaryForm([a, b], ctx) for a, b in zip(u, v)])


def restrict(f, curve):
    "f composed with the parametrization, a binary form of degree deg f * deg c."
    ctx = f.ctx
    d = f.degree * curve.degree
    one = BinaryForm([1], ctx)
    zero = BinaryForm([0] * (d + 1), ctx)
    r = f.substitute(curve.components, one, zero)
    if r.degree != d:
        r = BinaryForm([0] * (d + 1), ctx) + r
    return r
