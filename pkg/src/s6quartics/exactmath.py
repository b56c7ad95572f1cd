"""
Exact arithmetic in Q and in the cyclotomic fields Q(zeta_N), with dense
linear algebra over them.

Elements are polynomials in zeta reduced modulo the N-th cyclotomic
polynomial; the polynomial arithmetic itself is delegated to flint.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

import flint

Rational = Fraction

DEFAULT_ORDER = 120


class FieldMismatch(ValueError):
    pass


class FieldTooSmall(ArithmeticError):
    """A root of unity or square root is missing from the current field.

    `required` is the smallest cyclotomic order containing the element and
    `suggested` the smallest order containing both it and the current field.
    """

    def __init__(self, what, required, current):
        self.what = what
        self.required = required
        self.current = current
        self.suggested = required * current // gcd(required, current)
        ArithmeticError.__init__(
            self, "%s needs Q(zeta_%d); current field is Q(zeta_%d), use N=%d"
            % (what, required, current, self.suggested))


def factorint(n):
    fs = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            fs[p] = fs.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        fs[n] = fs.get(n, 0) + 1
    return fs


def totient(n):
    r = n
    for p in factorint(n):
        r = r // p * (p - 1)
    return r


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    "Phi_n over Z from x^n - 1 = prod_{d | n} Phi_d."
    num = flint.fmpz_poly([-1] + [0] * (n - 1) + [1])
    for d in divisors(n)[:-1]:
        num, rem = divmod(num, cyclotomic_poly(d))
        assert rem == 0
    return num


def _powmod(a, e, m):
    r = flint.fmpq_poly([1])
    while e:
        if e & 1:
            r = (r * a) % m
        a = (a * a) % m
        e >>= 1
    return r


def _fmpq(x):
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    return flint.fmpq(x)


def _to_fraction(c):
    return Fraction(int(c.p), int(c.q))


class FieldCtx(object):
    """The field Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1)."""

    def __init__(self, N):
        assert N >= 1
        self.N = N
        self.degree = totient(N)
        phi = cyclotomic_poly(N)
        assert phi.degree() == self.degree
        self.phi = flint.fmpq_poly(phi)
        x = flint.fmpq_poly([0, 1])
        # zeta has exact order N modulo phi
        assert _powmod(x, N, self.phi) == 1
        for p in factorint(N):
            assert _powmod(x, N // p, self.phi) != 1
        self._pow = [self._reduce(pow(x, k)) for k in range(N)]
        self.zero = CycNum(self, flint.fmpq_poly([]))
        self.one = CycNum(self, flint.fmpq_poly([1]))

    def __repr__(self):
        return "FieldCtx(%d)" % self.N

    def __reduce__(self):
        return (field, (self.N,))

    @property
    def phi_coeffs(self):
        return [_to_fraction(c) for c in self.phi.coeffs()]

    def _reduce(self, p):
        if p.degree() >= self.degree:
            p = p % self.phi
        return p

    def __call__(self, x):
        if isinstance(x, CycNum):
            if x.ctx is not self:
                raise FieldMismatch("%s vs %s" % (x.ctx, self))
            return x
        if isinstance(x, (int, Fraction)):
            return CycNum(self, flint.fmpq_poly([_fmpq(x)]))
        raise TypeError("cannot coerce %r" % (x,))

    def from_coeffs(self, cs):
        assert len(cs) <= self.degree
        return CycNum(self, flint.fmpq_poly([_fmpq(c) for c in cs]))

    def zeta(self, k=1, n=None):
        "zeta_n^k; n defaults to N."
        if n is None:
            n = self.N
        if self.N % n:
            raise FieldTooSmall("zeta_%d" % n, n, self.N)
        e = (k * (self.N // n)) % self.N
        return CycNum(self, self._pow[e])

    def has_root(self, n):
        return self.N % n == 0

    def sqrt(self, q):
        return sqrt_rational(q, self)


@lru_cache(maxsize=None)
def field(N=DEFAULT_ORDER):
    "The shared context for Q(zeta_N)."
    return FieldCtx(N)


class CycNum(object):
    __slots__ = ("ctx", "p", "_key")

    def __init__(self, ctx, p):
        self.ctx = ctx
        self.p = p
        self._key = None

    # coercion
    def _other(self, b):
        if isinstance(b, CycNum):
            if b.ctx is not self.ctx:
                raise FieldMismatch("%s vs %s" % (self.ctx, b.ctx))
            return b.p
        if isinstance(b, int):
            return flint.fmpq_poly([b])
        if isinstance(b, Fraction):
            return flint.fmpq_poly([_fmpq(b)])
        return None

    def __add__(self, b):
        q = self._other(b)
        if q is None:
            return NotImplemented
        return CycNum(self.ctx, self.p + q)
    __radd__ = __add__

    def __sub__(self, b):
        q = self._other(b)
        if q is None:
            return NotImplemented
        return CycNum(self.ctx, self.p - q)

    def __rsub__(self, b):
        q = self._other(b)
        if q is None:
            return NotImplemented
        return CycNum(self.ctx, q - self.p)

    def __neg__(self):
        return CycNum(self.ctx, -self.p)

    def __pos__(self):
        return self

    def __mul__(self, b):
        q = self._other(b)
        if q is None:
            return NotImplemented
        return CycNum(self.ctx, self.ctx._reduce(self.p * q))
    __rmul__ = __mul__

    def inverse(self):
        if self.p.is_zero():
            raise ZeroDivisionError("inverse of zero in %s" % self.ctx)
        if self.p.degree() == 0:
            return CycNum(self.ctx, flint.fmpq_poly([1 / self.p[0]]))
        g, s, _ = self.p.xgcd(self.ctx.phi)
        assert g.degree() == 0
        return CycNum(self.ctx, self.ctx._reduce(s / g[0]))

    def __truediv__(self, b):
        if isinstance(b, CycNum):
            if b.ctx is not self.ctx:
                raise FieldMismatch("%s vs %s" % (self.ctx, b.ctx))
            return self * b.inverse()
        if isinstance(b, (int, Fraction)):
            if b == 0:
                raise ZeroDivisionError("division by zero")
            return CycNum(self.ctx, self.p / _fmpq(b))
        return NotImplemented

    def __rtruediv__(self, b):
        return self.ctx(b) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return CycNum(self.ctx, _powmod(self.p, e, self.ctx.phi))

    def __eq__(self, b):
        if isinstance(b, CycNum):
            return self.ctx is b.ctx and self.p == b.p
        q = self._other(b)
        if q is None:
            return NotImplemented
        return self.p == q

    def __ne__(self, b):
        r = self.__eq__(b)
        return r if r is NotImplemented else not r

    def __bool__(self):
        return not self.p.is_zero()

    def is_zero(self):
        return self.p.is_zero()

    @property
    def key(self):
        if self._key is None:
            p = self.p
            self._key = (tuple(map(int, p.numer().coeffs())), int(p.denom()))
        return self._key

    def __hash__(self):
        if self.p.degree() <= 0:
            return hash(self.to_rational())
        return hash(self.key)

    @property
    def coeffs(self):
        cs = [_to_fraction(c) for c in self.p.coeffs()]
        return tuple(cs + [Fraction(0)] * (self.ctx.degree - len(cs)))

    def is_rational(self):
        return self.p.degree() <= 0

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        if self.p.is_zero():
            return Fraction(0)
        return _to_fraction(self.p[0])

    def galois(self, k):
        "The automorphism zeta -> zeta^k."
        ctx = self.ctx
        if gcd(k, ctx.N) != 1:
            raise ValueError("k=%d not a unit mod %d" % (k, ctx.N))
        r = flint.fmpq_poly([])
        for i, c in enumerate(self.p.coeffs()):
            if c != 0:
                r += c * ctx._pow[(i * k) % ctx.N]
        return CycNum(ctx, ctx._reduce(r))

    def conj(self):
        return self.galois(-1)

    def __repr__(self):
        if self.is_rational():
            return str(self.to_rational())
        terms = []
        for i, c in enumerate(self.p.coeffs()):
            if c != 0:
                terms.append("%s*z^%d" % (c, i) if i else str(c))
        return "(%s)_%d" % (" + ".join(terms), self.ctx.N)

    def serialize(self):
        return {"order": self.ctx.N,
                "coeffs": [str(c) for c in self.coeffs]}


def embed(a, target):
    "Image of a under zeta_M -> zeta_N^(N/M)."
    src = a.ctx
    if target.N % src.N:
        raise FieldMismatch("cannot embed Q(zeta_%d) in Q(zeta_%d)"
                            % (src.N, target.N))
    m = target.N // src.N
    r = flint.fmpq_poly([])
    for i, c in enumerate(a.p.coeffs()):
        if c != 0:
            r += c * target._pow[(i * m) % target.N]
    return CycNum(target, target._reduce(r))


def restrict_field(a, target):
    "Inverse of embed; raises if a does not lie in the image."
    src = a.ctx
    if src.N % target.N:
        raise FieldMismatch("Q(zeta_%d) is not a subfield of Q(zeta_%d)"
                            % (target.N, src.N))
    basis = [embed(target.zeta(k), src) for k in range(target.degree)]
    A = [[b.coeffs[i] for b in basis] for i in range(src.degree)]
    x = solve_rational(A, list(a.coeffs))
    if x is None:
        raise FieldMismatch("%s does not lie in Q(zeta_%d)" % (a, target.N))
    return target.from_coeffs(x)


# ---------------------------------------------------------------------------
# square roots of rationals via quadratic Gauss sums

def squarefree_part(n):
    "n = s * k^2 with s squarefree; returns (s, k)."
    assert n > 0
    s, k = 1, 1
    for p, e in factorint(n).items():
        if e % 2:
            s *= p
        k *= p ** (e // 2)
    return s, k


def quadratic_conductor(d):
    "Conductor of Q(sqrt d) for squarefree d != 1."
    return abs(d) if d % 4 == 1 else 4 * abs(d)


def _legendre(a, p):
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _gauss_sum(p, ctx):
    "sqrt(p*) with p* = (-1)^((p-1)/2) p, for an odd prime p dividing N."
    g = ctx.zero
    for a in range(1, p):
        g = g + _legendre(a, p) * ctx.zeta(a, p)
    return g


def sqrt_rational(q, ctx):
    """The principal square root of the rational q in Q(zeta_N): positive
    real for q > 0, positive imaginary for q < 0.

    Odd primes contribute Gauss sums, which equal sqrt(p) for p = 1 mod 4
    and i sqrt(p) for p = 3 mod 4; what is left is one of 1, -1, 2, -2,
    whose roots come from zeta_8. The accumulated power of i is removed at
    the end. Raises FieldTooSmall naming the conductor of Q(sqrt q).
    """
    q = Fraction(q)
    if q == 0:
        return ctx.zero
    n = q.numerator * q.denominator
    s, k = squarefree_part(abs(n))
    d = s if n > 0 else -s
    if d != 1:
        need = quadratic_conductor(d)
        if ctx.N % need:
            raise FieldTooSmall("sqrt(%s)" % q, need, ctx.N)
    r = ctx(Fraction(k, q.denominator))
    rest = d
    phase = 0
    for p in factorint(s):
        if p == 2:
            continue
        pstar = p if p % 4 == 1 else -p
        r = r * _gauss_sum(p, ctx)
        phase += p % 4 == 3
        rest //= pstar
    if rest == -1:
        r = r * ctx.zeta(1, 4)
    elif rest == 2:
        r = r * (ctx.zeta(1, 8) + ctx.zeta(7, 8))
    elif rest == -2:
        r = r * (ctx.zeta(1, 8) + ctx.zeta(3, 8))
    else:
        assert rest == 1
    phase += rest < 0
    if (phase // 2) % 2:
        r = -r
    assert r * r == q
    return r


def pretty(x):
    "Short exact rendering: a rational, +-sqrt(q), or the coefficient vector."
    if x.is_rational():
        return str(x.to_rational())
    y = x * x
    if y.is_rational():
        q = y.to_rational()
        try:
            r = sqrt_rational(q, x.ctx)
        except FieldTooSmall:
            return repr(x)
        c = "sqrt(%s)" % q
        return c if x == r else "-" + c
    return repr(x)


# ---------------------------------------------------------------------------
# dense linear algebra; a matrix is a list of rows

def zeros(m, n, ctx):
    return [[ctx.zero] * n for _ in range(m)]


def eye(n, ctx):
    A = zeros(n, n, ctx)
    for i in range(n):
        A[i][i] = ctx.one
    return A


def to_mat(rows, ctx):
    return [[ctx(x) for x in row] for row in rows]


def matmul(A, B):
    Bt = list(zip(*B))
    out = []
    for row in A:
        r = []
        for col in Bt:
            s = None
            for a, b in zip(row, col):
                if a.p.is_zero() or b.p.is_zero():
                    continue
                t = a.p * b.p
                s = t if s is None else s + t
            ctx = row[0].ctx
            r.append(ctx.zero if s is None else CycNum(ctx, ctx._reduce(s)))
        out.append(r)
    return out


def matvec(A, v):
    out = []
    for row in A:
        s = None
        for a, b in zip(row, v):
            if a.p.is_zero() or b.p.is_zero():
                continue
            t = a.p * b.p
            s = t if s is None else s + t
        ctx = row[0].ctx
        out.append(ctx.zero if s is None else CycNum(ctx, ctx._reduce(s)))
    return out


def transpose(A):
    return [list(r) for r in zip(*A)]


def trace(A):
    t = A[0][0]
    for i in range(1, len(A)):
        t = t + A[i][i]
    return t


def mat_key(A):
    return tuple(x.key for row in A for x in row)


def is_zero_mat(A):
    return all(x.p.is_zero() for row in A for x in row)


def scale(c, A):
    return [[c * x for x in row] for row in A]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _cost(x):
    "Pivot preference: rationals first, then short polynomials."
    return x.p.degree() if not x.p.is_zero() else 10 ** 9


def rref(A, ncols=None):
    """Reduced row echelon form.

    Gauss-Jordan with one inversion per pivot row; among the rows available
    for a column, the entry with the simplest polynomial is chosen.
    Pivots are searched in the first ncols columns only; row operations act
    on full rows. Returns (R, pivots) with R the first len(pivots) rows.
    """
    rows = [list(r) for r in A if any(not x.p.is_zero() for x in r)]
    if not rows:
        return [], []
    n = ncols if ncols is not None else len(rows[0])
    width = len(rows[0])
    ctx = rows[0][0].ctx
    pivots = []
    r = 0
    for c in range(n):
        best, bcost = None, None
        for i in range(r, len(rows)):
            x = rows[i][c]
            if not x.p.is_zero():
                k = _cost(x)
                if best is None or k < bcost:
                    best, bcost = i, k
                    if k == 0:
                        break
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        inv = rows[r][c].inverse()
        prow = [x * inv for x in rows[r]]
        rows[r] = prow
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if not f.p.is_zero():
                    fp = f.p
                    row = rows[i]
                    for j in range(c, width):
                        pj = prow[j].p
                        if not pj.is_zero():
                            row[j] = CycNum(ctx, row[j].p - ctx._reduce(fp * pj))
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(A):
    return len(rref(A)[1])


def kernel(A, ncols=None, ctx=None):
    """Basis of the right kernel {v : A v = 0} as a list of vectors.

    Each basis vector has a 1 in one free column and 0 in the others.
    """
    if ncols is None:
        ncols = len(A[0])
    if ctx is None:
        ctx = A[0][0].ctx
    R, piv = rref(A, ncols)
    pset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pset:
            continue
        v = [ctx.zero] * ncols
        v[f] = ctx.one
        for row, c in zip(R, piv):
            if not row[f].p.is_zero():
                v[c] = -row[f]
        basis.append(v)
    return basis


def solve(A, b):
    "One solution of A x = b, or None when inconsistent."
    ctx = A[0][0].ctx
    n = len(A[0])
    aug = [list(row) + [ctx(bi)] for row, bi in zip(A, b)]
    R, piv = rref(aug, n + 1)
    if n in piv:
        return None
    x = [ctx.zero] * n
    for row, c in zip(R, piv):
        x[c] = row[n]
    return x


def solve_rational(A, b):
    "Exact solve over Q with Fractions; None when inconsistent."
    n = len(A[0])
    rows = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    piv = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    for row in rows[r:]:
        if row[n] != 0:
            return None
    x = [Fraction(0)] * n
    for row, c in zip(rows, piv):
        x[c] = row[n]
    return x


def inverse(A):
    n = len(A)
    ctx = A[0][0].ctx
    aug = [list(row) + e for row, e in zip(A, eye(n, ctx))]
    R, piv = rref(aug, n)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def det(A):
    "Determinant by fraction-free (Bareiss) elimination."
    n = len(A)
    ctx = A[0][0].ctx
    M = [list(r) for r in A]
    sign = 1
    prev = ctx.one
    for k in range(n - 1):
        if M[k][k].is_zero():
            p = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if p is None:
                return ctx.zero
            M[k], M[p] = M[p], M[k]
            sign = -sign
        pinv = prev.inverse()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) * pinv
        prev = M[k][k]
    return M[n - 1][n - 1] * sign


def det_rational(A):
    "Bareiss over the integers/rationals."
    n = len(A)
    M = [[Fraction(x) for x in r] for r in A]
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def intersect(B1, B2, ctx):
    "Intersection of two subspaces given by lists of basis vectors."
    if not B1 or not B2:
        return []
    n = len(B1[0])
    A = [[B1[j][i] for j in range(len(B1))] + [-B2[j][i] for j in range(len(B2))]
         for i in range(n)]
    K = kernel(A, ctx=ctx)
    out = []
    for v in K:
        w = [ctx.zero] * n
        for j, b in enumerate(B1):
            if not v[j].is_zero():
                w = [x + v[j] * y for x, y in zip(w, b)]
        out.append(w)
    return row_basis(out, ctx)


def row_basis(vectors, ctx=None):
    "Canonical (reduced echelon) basis of the span."
    if not vectors:
        return []
    R, _ = rref(vectors)
    return R


def subspace_key(vectors):
    R = row_basis(vectors)
    return tuple(x.key for row in R for x in row)


def eigenspace_root_of_unity(A, k, n):
    "Kernel of A - zeta_n^k I."
    ctx = A[0][0].ctx
    if ctx.N % n:
        raise FieldTooSmall("zeta_%d" % n, n, ctx.N)
    lam = ctx.zeta(k, n)
    M = [[(x - lam if i == j else x) for j, x in enumerate(row)]
         for i, row in enumerate(A)]
    return kernel(M)


def mat_order(A, limit=10000):
    ctx = A[0][0].ctx
    I = eye(len(A), ctx)
    B = A
    for k in range(1, limit):
        if B == I:
            return k
        B = matmul(B, A)
    raise ValueError("order exceeds %d" % limit)


def mat_pow(A, e):
    ctx = A[0][0].ctx
    R = eye(len(A), ctx)
    B = A
    while e:
        if e & 1:
            R = matmul(R, B)
        B = matmul(B, B)
        e >>= 1
    return R
