"""
Registry of verification checks over a shared, lazily built World, run in
dependency order and reported as deterministic JSON.
"""

import json
import random
import time
from fractions import Fraction
from functools import cached_property

from . import __version__
from . import exactmath as em
from . import permgrp as pg
from . import reptheory as rt
from . import forms as fm
from . import geom3 as g3
from . import quartic4 as q4


# ---------------------------------------------------------------------------
# expected tables

S3 = ("sqrt", -3)

# (order, cycle type, W, W5, U4, counts in the ten subgroups below)
TABLE1_GROUPS = ["S6", "A6", "S5nst", "A5st", "A5nst", "S4nst", "A4nst", "F36", "F20", "D12nst"]
TABLE1 = [
    (1, (), 6, 5, 4, [1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
    (2, (), 6, 5, -4, [1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
    (2, (2,), 4, -3, 0, [30, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (4, (2, 2), 2, 1, 0, [90, 90, 30, 30, 30, 6, 6, 18, 10, 6]),
    (4, (2, 2, 2), 0, 1, 0, [30, 0, 20, 0, 0, 12, 0, 0, 0, 8]),
    (6, (3,), 3, 2, 2, [40, 40, 0, 20, 0, 0, 0, 4, 0, 0]),
    (3, (3,), 3, 2, -2, [40, 40, 0, 20, 0, 0, 0, 4, 0, 0]),
    (6, (3, 2), 1, 0, 0, [120, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (6, (3, 2), 1, 0, 0, [120, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (6, (3, 3), 0, -1, -1, [40, 40, 20, 0, 20, 8, 8, 4, 0, 2]),
    (3, (3, 3), 0, -1, 1, [40, 40, 20, 0, 20, 8, 8, 4, 0, 2]),
    (8, (4,), 2, -1, 0, [180, 0, 60, 0, 0, 12, 0, 0, 20, 0]),
    (8, (4, 2), 0, -1, 0, [180, 180, 0, 0, 0, 0, 0, 36, 0, 0]),
    (10, (5,), 1, 0, 1, [144, 144, 24, 24, 24, 0, 0, 0, 4, 0]),
    (5, (5,), 1, 0, -1, [144, 144, 24, 24, 24, 0, 0, 0, 4, 0]),
    (12, (6,), 0, 1, (S3, 1), [120, 0, 20, 0, 0, 0, 0, 0, 0, 2]),
    (12, (6,), 0, 1, (S3, -1), [120, 0, 20, 0, 0, 0, 0, 0, 0, 2]),
]

TABLE2_GROUPS = ["D10", "S3p", "V4", "mu5"]
TABLE2 = [
    (1, (), [1, 1, 1, 1]),
    (2, (), [1, 1, 1, 1]),
    (4, (2, 2), [10, 6, 6, 0]),
    (6, (3, 3), [0, 2, 0, 0]),
    (3, (3, 3), [0, 2, 0, 0]),
    (10, (5,), [4, 0, 0, 4]),
    (5, (5,), [4, 0, 0, 4]),
]


def row_label(row):
    return "%s/o%d" % ("[%s]" % ",".join(map(str, row[1])) if row[1] else "id", row[0])


# ---------------------------------------------------------------------------
# JSON rendering of exact values

def jsonable(x):
    if isinstance(x, em.CycNum):
        if x.is_rational():
            return str(x.to_rational())
        return x.serialize()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, g3.ProjLine):
        return jsonable(x.basis)
    return repr(x)


class Verdict(object):
    """Collects expectations; any mismatch makes the check fail and is kept
    as a counterexample."""

    def __init__(self):
        self.witness = {}
        self.mismatches = []

    def expect(self, what, actual, expected):
        if actual != expected:
            self.mismatches.append({"what": what, "expected": expected, "actual": actual})
        return actual == expected

    def record(self, key, value):
        self.witness[key] = value

    @property
    def ok(self):
        return not self.mismatches


# ---------------------------------------------------------------------------
# the shared constructions

class World(object):
    """Groups, representations and geometric objects, built once on demand."""

    def __init__(self, order=em.DEFAULT_ORDER, seed=0):
        self.ctx = em.field(order)
        self.seed = seed
        self._lifts = {}

    @cached_property
    def cover(self):
        return rt.CoverGroup(self.ctx)

    def lift(self, g):
        "The lift of a permutation recorded first in the cover."
        if g not in self._lifts:
            G = self.cover
            if not self._lifts:
                for p, h in G.elements:
                    self._lifts.setdefault(p, h)
            else:
                self._lifts[g] = G.mat(G.lifts_of([g])[0])
        return self._lifts[g]

    def lift_gens(self, H):
        return [self.lift(g) for g in H.gens]

    def proj_mats(self, H):
        return [self.lift(g) for g in H.elements]

    def group(self, name):
        return pg.named(name)

    def counts(self, name):
        G = self.cover
        return G.fusion(G.preimage(self.group(name)))

    @cached_property
    def u4_character(self):
        return rt.character_of(self.cover, rt.u4(self.cover))

    @cached_property
    def w_character(self):
        return rt.character_of(self.cover, rt.w_rep(self.cover))

    @cached_property
    def w5_character(self):
        return rt.character_of(self.cover, rt.w5_rep(self.cover))

    @cached_property
    def table1_assignment(self):
        """Class index for each expected row, matched on (order, cycle
        type) and, where two classes share these, on the U4 value."""
        G = self.cover
        used = set()
        out = []
        for row in TABLE1:
            cands = [c for c, l in enumerate(G.labels)
                     if c not in used and l.order == row[0] and tuple(l.ctype) == row[1]]
            exact = [c for c in cands if self.u4_character[c] == self.value(row[4])]
            pick = (exact or cands or [None])[0]
            if pick is not None:
                used.add(pick)
            out.append(pick)
        return out

    def value(self, v):
        if isinstance(v, tuple) and v[0] == S3:
            return em.sqrt_rational(-3, self.ctx) * v[1]
        return self.ctx(v)

    # -- P^4 side

    @cached_property
    def model(self):
        return q4.HyperplaneModel(self.ctx)

    @cached_property
    def p4_orbits(self):
        return q4.build_orbits(self.ctx)

    # -- P^3 side

    @cached_property
    def double_five(self):
        A5, A4 = self.group("A5nst"), self.group("A4nst")
        L1, L1p = g3.fixed_lines(self.lift_gens(A4), self.proj_mats(A4), self.ctx)
        reps = A5.left_cosets(A4)
        Ls = [L1.image(self.lift(g)) for g in reps]
        Lps = [L1p.image(self.lift(g)) for g in reps]
        return Ls, Lps

    @cached_property
    def cubics(self):
        return g3.twisted_cubics(self.lift_gens(self.group("A5nst")), self.ctx)

    @cached_property
    def sextets(self):
        """(L^1, L^2): the A6-orbits of the two lines fixed by A5st; L^1 is
        the one met by the first invariant cubic."""
        A5s, A6 = self.group("A5st"), self.group("A6")
        a, b = g3.fixed_lines(self.lift_gens(A5s), self.proj_mats(A5s), self.ctx)
        Fa = g3.line_orbit(a, self.lift_gens(A6))
        Fb = g3.line_orbit(b, self.lift_gens(A6))
        c1 = self.cubics[0]
        if g3.curve_line_intersection(c1, Fa[0]) == 0:
            Fa, Fb = Fb, Fa
        return Fa, Fb

    @cached_property
    def cubic_translates(self):
        reps = self.group("A6").left_cosets(self.group("A5nst"))
        c1, c2 = self.cubics
        return ([c1.transform(self.lift(g)) for g in reps],
                [c2.transform(self.lift(g)) for g in reps])

    @cached_property
    def developables(self):
        c1, c2 = self.cubics
        return g3.tangent_developable(c1, self.ctx), g3.tangent_developable(c2, self.ctx)

    @cached_property
    def census_a5(self):
        A5 = self.group("A5nst")
        return g3.small_orbit_census(self.proj_mats(A5), self.lift_gens(A5), 15)

    @cached_property
    def six_system(self):
        return g3.system_through_lines(self.sextets[0])

    @cached_property
    def ten_system(self):
        Ls, Lps = self.double_five
        return g3.system_through_lines(Ls + Lps)

    @cached_property
    def six_image(self):
        A6 = self.group("A6")
        return q4.identify_image(self.six_system, A6,
                                 [self.group("A5st"), self.group("A5nst")], self.lift, self.ctx)

    @cached_property
    def ten_image(self):
        return q4.identify_image(self.ten_system, self.group("S5nst"),
                                 [self.group("F20")], self.lift, self.ctx)


# ---------------------------------------------------------------------------
# checks

REGISTRY = {}


class CheckSpec(object):
    def __init__(self, name, runner, deps=(), claim=""):
        self.name = name
        self.runner = runner
        self.deps = tuple(deps)
        self.claim = claim


def check(name, deps=(), claim=""):
    def deco(fn):
        if name in REGISTRY:
            raise ValueError("duplicate check %s" % name)
        REGISTRY[name] = CheckSpec(name, fn, deps, claim)
        return fn
    return deco


@check("reps.spin_lift", claim="the spin lift generates a double cover of order 1440 inside SL4")
def check_spin_lift(w):
    v = Verdict()
    G = w.cover
    v.expect("order", G.order, 1440)
    v.expect("contains -I", G.z is not None, True)
    v.expect("generator determinants", [em.det(h) == 1 for h in G.mat_gens], [True] * len(G.mat_gens))
    B = G.lift.plucker
    bad = []
    for i, (g, h) in enumerate(G.elements):
        if em.matmul(rt.wedge2(h), B) != em.matmul(B, em.to_mat(rt.so6_model(g), w.ctx)):
            bad.append(i)
    v.expect("wedge square reproduces the SO6 model on every element", bad, [])
    v.record("order", G.order)
    v.record("generator_lifts", G.mat_gens)
    return v


def compare_table1(w, rows=TABLE1):
    G = w.cover
    v = Verdict()
    assign = w.table1_assignment
    matrix = []
    for r, (row, c) in enumerate(zip(rows, assign)):
        label = row_label(row)
        if c is None:
            v.expect("row %d %s class" % (r, label), None, "present")
            matrix.append(None)
            continue
        got = [w.w_character[c], w.w5_character[c], w.u4_character[c]]
        matrix.append(got)
        for k, name in enumerate(["W", "W5", "U4"]):
            exp = w.value(row[2 + k])
            if got[k] != exp:
                v.mismatches.append({"row": r, "class": label, "column": name,
                                     "expected": exp, "actual": got[k],
                                     "expected_text": em.pretty(exp), "actual_text": em.pretty(got[k])})
    v.record("classes", [row_label(row) for row in rows])
    v.record("characters", matrix)
    return v


@check("table1.classes", deps=["reps.spin_lift"], claim="17 classes of the cover with the tabulated sizes")
def check_table1_classes(w):
    v = Verdict()
    G = w.cover
    v.expect("number of classes", len(G.classes), 17)
    sizes = [len(G.classes[c]) if c is not None else None for c in w.table1_assignment]
    v.expect("class sizes", sizes, [row[5][0] for row in TABLE1])
    v.record("labels", [l.name() for l in G.labels])
    v.record("sizes", sizes)
    return v


@check("table1.characters", deps=["table1.classes"], claim="character columns W, W5, U4")
def check_table1_characters(w):
    return compare_table1(w)


@check("table1.subgroups", deps=["table1.classes"], claim="fusion counts of ten subgroups")
def check_table1_subgroups(w):
    v = Verdict()
    cols = {}
    for k, name in enumerate(TABLE1_GROUPS):
        counts = w.counts(name)
        got = [counts[c] for c in w.table1_assignment]
        v.expect("column %s" % name, got, [row[5][k] for row in TABLE1])
        v.expect("column %s total" % name, sum(counts), 2 * len(w.group(name)))
        cols[name] = got
    v.record("columns", cols)
    return v


@check("table2.subgroups", deps=["table1.classes"], claim="fusion counts of four subgroups of 2.A5")
def check_table2(w):
    v = Verdict()
    G = w.cover
    cols = {}
    for k, name in enumerate(TABLE2_GROUPS):
        counts = w.counts(name)
        got = []
        for order, ctype, _ in TABLE2:
            got.append(sum(counts[c] for c, l in enumerate(G.labels)
                           if l.order == order and tuple(l.ctype) == ctype))
        v.expect("column %s" % name, got, [row[2][k] for row in TABLE2])
        v.expect("column %s has no other classes" % name, sum(got), sum(counts))
        cols[name] = got
    v.record("columns", cols)
    return v


def _restriction(w, name, chi):
    "Norm and trivial multiplicity of chi restricted to the preimage of a subgroup."
    G = w.cover
    counts = w.counts(name)
    norm = rt.inner(G, counts, chi, chi)
    triv = rt.trivial_multiplicity(G, counts, chi)
    return norm.to_rational(), triv.to_rational()


def _split_dims(mats, elements, ctx):
    parts, C = rt.split_isotypic(mats, elements, ctx)
    return sorted(len(p) for p in parts), len(C)


@check("reps.u4_restrictions", deps=["reps.spin_lift"], claim="U4 restricted to subgroups of the cover")
def check_u4_restrictions(w):
    v = Verdict()
    chi = w.u4_character
    out = {}
    for name in ["A6", "S5nst", "A5nst", "S4nst", "F36", "F20"]:
        n, _ = _restriction(w, name, chi)
        C = rt.commutant(w.lift_gens(w.group(name)), w.ctx)
        v.expect("%s irreducible (norm)" % name, n, 1)
        v.expect("%s commutant" % name, len(C), 1)
        out[name] = {"norm": n, "commutant": len(C)}
    for name in ["A5st", "A4nst", "D12nst"]:
        n, _ = _restriction(w, name, chi)
        H = w.group(name)
        dims, c = _split_dims(w.lift_gens(H), w.proj_mats(H), w.ctx)
        v.expect("%s norm" % name, n, 2)
        v.expect("%s splitting" % name, dims, [2, 2])
        out[name] = {"norm": n, "commutant": c, "pieces": dims}
    # subgroups of 2.A5: two distinct planes, plane plus two characters,
    # two equal planes, four distinct characters
    expect = {"D10": (2, [2, 2], 2), "S3p": (3, [1, 1, 2], 3), "V4": (4, None, 4), "mu5": (4, [1, 1, 1, 1], 4)}
    for name, (norm, dims, comm) in expect.items():
        n, _ = _restriction(w, name, chi)
        H = w.group(name)
        C = rt.commutant(w.lift_gens(H), w.ctx)
        v.expect("%s norm" % name, n, norm)
        v.expect("%s commutant" % name, len(C), comm)
        rec = {"norm": n, "commutant": len(C)}
        if dims is not None:
            got, _ = _split_dims(w.lift_gens(H), w.proj_mats(H), w.ctx)
            v.expect("%s splitting" % name, got, dims)
            rec["pieces"] = got
        else:
            v.expect("%s commutant non-commutative" % name, rt.is_commutative(C), False)
        out[name] = rec
    v.record("restrictions", out)
    return v


@check("reps.w5_restrictions", deps=["reps.spin_lift"], claim="W5 restricted to subgroups of S6")
def check_w5_restrictions(w):
    v = Verdict()
    chi = w.w5_character
    out = {}
    for name in ["A6", "S5nst", "A5nst"]:
        n, t = _restriction(w, name, chi)
        v.expect("%s irreducible" % name, n, 1)
        out[name] = {"norm": n, "trivial": t}
    n, t = _restriction(w, "A5st", chi)
    v.expect("A5st norm", n, 2)
    v.expect("A5st trivial", t, 1)
    out["A5st"] = {"norm": n, "trivial": t}
    n, t = _restriction(w, "D12nst", chi)
    H = w.group("D12nst")
    mats = [rt.w5_matrix(g, w.ctx) for g in H.gens]
    dims, c = _split_dims(mats, [rt.w5_matrix(g, w.ctx) for g in H.elements], w.ctx)
    v.expect("D12nst norm", n, 3)
    v.expect("D12nst trivial", t, 1)
    v.expect("D12nst splitting", dims, [1, 2, 2])
    out["D12nst"] = {"norm": n, "trivial": t, "pieces": dims}
    v.record("restrictions", out)
    return v


def _dual_sym(w, d):
    return rt.sym_power_character(w.cover, rt.dual(w.u4_character, w.cover), d)


@check("reps.sym_u4", deps=["reps.spin_lift"], claim="symmetric powers of the dual of U4")
def check_sym_u4(w):
    v = Verdict()
    G = w.cover
    res = {}
    for d in (2, 4):
        _, t = _restriction(w, "A6", _dual_sym(w, d))
        v.expect("A6 Sym^%d trivial multiplicity" % d, t, 0)
        res["A6 Sym%d trivial" % d] = t
    chi2 = _dual_sym(w, 2)
    n, t = _restriction(w, "A5nst", chi2)
    v.expect("A5nst Sym^2 norm", n, 3)
    v.expect("A5nst Sym^2 trivial", t, 0)
    H = w.group("A5nst")
    dual = lambda A: em.transpose(em.inverse(A))
    gens = [rt.sym_power_matrix(dual(A), 2, w.ctx) for A in w.lift_gens(H)]
    elems = [rt.sym_power_matrix(dual(A), 2, w.ctx) for A in w.proj_mats(H)]
    dims, c = _split_dims(gens, elems, w.ctx)
    v.expect("A5nst Sym^2 commutant", c, 3)
    v.expect("A5nst Sym^2 pieces", dims, [3, 3, 4])
    res["A5nst Sym2"] = {"norm": n, "pieces": dims, "commutant": c}
    _, t3 = _restriction(w, "A5nst", _dual_sym(w, 3))
    v.expect("A5nst Sym^3 trivial", t3, 0)
    _, t4 = _restriction(w, "A5nst", _dual_sym(w, 4))
    v.expect("A5nst Sym^4 trivial", t4, 2)
    res["A5nst Sym3 trivial"] = t3
    res["A5nst Sym4 trivial"] = t4
    v.record("multiplicities", res)
    return v


@check("reps.sym_w5", deps=["reps.spin_lift"], claim="quadratic and quartic invariants of W5")
def check_sym_w5(w):
    v = Verdict()
    G = w.cover
    sgn = rt.sign_character(G)
    res = {}
    for name in ["S6", "A6", "S5nst"]:
        counts = w.counts(name)
        for d, expected in ((2, 1), (4, 2)):
            chi = rt.sym_power_character(G, w.w5_character, d)
            t = rt.trivial_multiplicity(G, counts, chi).to_rational()
            s = rt.inner(G, counts, chi, sgn).to_rational()
            one_dim = t if name == "A6" else t + s
            v.expect("%s Sym^%d trivial" % (name, d), t, expected)
            v.expect("%s Sym^%d one-dimensional total" % (name, d), one_dim, expected)
            res["%s Sym%d" % (name, d)] = {"trivial": t, "sign": s}
    v.record("multiplicities", res)
    return v


@check("forms.invariants", deps=["reps.sym_u4", "reps.sym_w5"],
       claim="invariant forms agree with character predictions")
def check_invariant_forms(w):
    v = Verdict()
    G = w.cover
    dims = {}
    for name, expected in (("A5nst", [0, 0, 0, 2]), ("A6", [0, 0, 0, 0]), ("S5nst", [0, 0, 0, 1])):
        H = w.group(name)
        inv = [em.inverse(A) for A in w.lift_gens(H)]
        got, pred = [], []
        for d in range(1, 5):
            got.append(len(fm.invariant_forms(inv, 4, d, w.ctx)))
            chi = _dual_sym(w, d)
            pred.append(int(rt.trivial_multiplicity(G, w.counts(name), chi).to_rational()))
        v.expect("%s dimensions" % name, got, expected)
        v.expect("%s character prediction" % name, pred, got)
        dims[name] = got
    # W5 model: one quadric and two quartics, as predicted for S6
    inv = [em.inverse(rt.w5_matrix(g, w.ctx)) for g in w.group("S6").gens]
    w5dims = [len(fm.invariant_forms(inv, 5, d, w.ctx)) for d in (2, 4)]
    v.expect("S6 on W5, degrees 2 and 4", w5dims, [1, 2])
    dims["S6 on W5"] = w5dims
    v.record("dimensions", dims)
    return v


# -- P^4

@check("p4.orbits", claim="orbit lengths 6, 10, 15, 30 and fifteen lines")
def check_p4_orbits(w):
    v = Verdict()
    O = w.p4_orbits
    lens = {k: len(x) for k, x in O.items()}
    v.expect("lengths", lens, {"Sigma6": 6, "Sigma10": 10, "Sigma15": 15, "Sigma30": 30, "L15": 15})
    v.expect("points on the hyperplane",
             all(w.model.on_hyperplane(p) for k in ("Sigma6", "Sigma10", "Sigma15", "Sigma30") for p in O[k]), True)
    v.record("lengths", lens)
    return v


SINGULAR_CONDITIONS = {"Sigma6": Fraction(7, 10), "Sigma10": Fraction(1, 6),
                       "Sigma15": Fraction(1, 2), "Sigma30": q4.ALL_T}
SAMPLE_T = [Fraction(1, 4), Fraction(1, 2), Fraction(1, 6), Fraction(7, 10), Fraction(0), Fraction(1)]


@check("p4.singular_table", deps=["p4.orbits"], claim="singular points of X_t by orbit, all nodes")
def check_singular_table(w):
    v = Verdict()
    O = w.p4_orbits
    conds = {}
    for name, expected in SINGULAR_CONDITIONS.items():
        got = {q4.singular_t_condition(list(p), w.ctx) for p in O[name]}
        v.expect("%s condition on every orbit point" % name, got, {expected})
        conds[name] = sorted(map(str, got))
    table = {}
    for t in SAMPLE_T:
        row = {}
        for name, expected in SINGULAR_CONDITIONS.items():
            p = list(O[name][0])
            sing = q4.is_singular(w.model, t, p)
            should = expected == q4.ALL_T or expected == t
            v.expect("X_%s singular at %s" % (t, name), sing, should)
            rank = None
            if sing and t != Fraction(1, 4):
                rank = q4.node_rank(w.model, t, p)
                v.expect("X_%s node at %s" % (t, name), rank, 4)
            row[name] = {"singular": sing, "hessian_rank": rank}
        table[str(t)] = row
    v.record("conditions", conds)
    v.record("table", table)
    return v


@check("p4.lines15", deps=["p4.orbits"], claim="X_t is singular along the fifteen lines exactly at t = 1/4")
def check_lines15(w):
    v = Verdict()
    O = w.p4_orbits
    L = O["L15"]
    sols = [q4.line_t_condition(B, w.ctx) for B in L]
    v.expect("solved t per line", set(sols), {Fraction(1, 4)})
    v.expect("singular at 1/4", [q4.singular_along_line(B, Fraction(1, 4), w.ctx) for B in L], [True] * 15)
    v.expect("not singular at 1/2", any(q4.singular_along_line(B, Fraction(1, 2), w.ctx) for B in L), False)
    inside = [any(q4.on_line(B, p) for B in L) for p in O["Sigma30"]]
    v.expect("Sigma30 on the lines", all(inside), True)
    v.record("t", sols[0])
    return v


@check("p4.census", deps=["p4.orbits"], claim="short orbits of A6 and the D12 fixed point in P^4")
def check_p4_census(w):
    v = Verdict()
    O = w.p4_orbits
    orbs, fam = q4.orbit_census_p4(w.group("A6"), 6, w.ctx)
    v.expect("A6 orbits of length <= 6", [len(o) for o in orbs], [6])
    v.expect("no families", len(fam), 0)
    six = {g3.point_key(p) for p in O["Sigma6"]}
    if orbs:
        v.expect("the short orbit is Sigma6", {g3.point_key(p) for p in orbs[0]}, six)
    fp = q4.fixed_points_p4(w.group("D12nst"), w.ctx)
    ten = {g3.point_key(p) for p in O["Sigma10"]}
    v.expect("D12 fixed points", len(fp), 1)
    v.expect("D12 fixed point in Sigma10", all(g3.point_key(p) in ten for p in fp), True)
    s2 = {k: w.model.s2.evaluate(q4.orbit_seed(k, w.ctx)) for k in ("Sigma6", "Sigma10")}
    v.expect("s2 at Sigma6", s2["Sigma6"], w.ctx(30))
    v.expect("s2 at Sigma10", s2["Sigma10"], w.ctx(6))
    v.record("s2", s2)
    v.record("d12_fixed", fp)
    return v


# -- P^3

@check("p3.double_five", deps=["reps.u4_restrictions"], claim="double five of lines and its transversals")
def check_double_five(w):
    v = Verdict()
    Ls, Lps = w.double_five
    prof = g3.incidence_profile(Ls + Lps)
    v.expect("incidence profile", prof, g3.double_five_profile())
    for i in range(5):
        others = [Ls[j] for j in range(5) if j != i]
        n, T = g3.transversals(*others)
        v.expect("transversal count omitting L%d" % i, n, 1)
        v.expect("transversal omitting L%d is L%d'" % (i, i), bool(T) and T[0] == Lps[i], True)
        others = [Lps[j] for j in range(5) if j != i]
        n, T = g3.transversals(*others)
        v.expect("transversal omitting L%d' is L%d" % (i, i), n == 1 and T[0] == Ls[i], True)
    S5 = w.group("S5nst")
    orb = g3.line_orbit(Ls[0], w.lift_gens(S5))
    v.expect("S5 orbit of L1 is the ten lines", {l.key for l in orb}, {l.key for l in Ls + Lps})
    F20 = w.group("F20")
    v.expect("F20 transitive on the ten lines", len(g3.line_orbit(Ls[0], w.lift_gens(F20))), 10)
    mu5 = w.group("mu5")
    v.expect("order 5 subgroup orbits", sorted(len(g3.line_orbit(l, w.lift_gens(mu5))) for l in (Ls[0], Lps[0])), [5, 5])
    verdict, _ = g3.quadric_tangency_check(Lps[0], Lps[1], Lps[2], Lps[3])
    v.expect("L4' against the quadric through L1', L2', L3'", verdict, "tangent")
    verdict2, _ = g3.quadric_tangency_check(Lps[0], Lps[1], Lps[2], Ls[3])
    v.expect("L4 against the same quadric", verdict2, "contained")
    v.record("profile", prof)
    v.record("tangency", [verdict, verdict2])
    return v


@check("p3.census", deps=["reps.spin_lift"], claim="short orbits of A5, A6 and S5 in P^3")
def check_p3_census(w):
    v = Verdict()
    orbs, fam = w.census_a5
    v.expect("A5 orbits of length <= 15", [len(o) for o in orbs], [10, 10, 12, 12])
    v.expect("A5 families", len(fam), 0)
    out = {"A5nst": [len(o) for o in orbs]}
    for name, bound in (("A6", 15), ("S5nst", 11)):
        H = w.group(name)
        o, f = g3.small_orbit_census(w.proj_mats(H), w.lift_gens(H), bound)
        v.expect("%s orbits of length <= %d" % (name, bound), [len(x) for x in o], [])
        v.expect("%s families" % name, len(f), 0)
        out[name] = [len(x) for x in o]
    v.record("census", out)
    v.record("a5_representatives", [o[0] for o in orbs])
    return v


@check("p3.five_lines_orbits", deps=["p3.double_five", "p3.census"],
       claim="points of L1..L5 with nontrivial stabilizer have orbits of length at least 20")
def check_five_lines_orbits(w):
    v = Verdict()
    Ls, _ = w.double_five
    A5 = w.group("A5nst")
    gens = w.lift_gens(A5)
    lengths = set()
    pointwise = 0
    for A in w.proj_mats(A5):
        for E in g3.eigenspaces(A):
            for L in Ls:
                I = em.intersect(E, L.basis, w.ctx)
                if len(I) == 1:
                    lengths.add(len(g3.point_orbit(I[0], gens)))
                elif len(I) == 2:
                    pointwise += 1
    v.expect("no line fixed pointwise", pointwise, 0)
    v.expect("shortest orbit >= 20", bool(lengths) and min(lengths) >= 20, True)
    v.record("orbit_lengths", sorted(lengths))
    return v


@check("p3.six_lines", deps=["reps.u4_restrictions"], claim="the two sextets of lines are disjoint")
def check_six_lines(w):
    v = Verdict()
    F1, F2 = w.sextets
    v.expect("sextet sizes", [len(F1), len(F2)], [6, 6])
    prof = g3.incidence_profile(F1 + F2)
    v.expect("twelve lines pairwise skew", prof, [[0] * 12 for _ in range(12)])
    return v


@check("p3.twisted_cubics", deps=["p3.six_lines"], claim="the two invariant twisted cubics")
def check_twisted_cubics(w):
    v = Verdict()
    c1, c2 = w.cubics
    gens = w.lift_gens(w.group("A5nst"))
    for k, c in enumerate((c1, c2)):
        v.expect("cubic %d base point free" % k, c.check_basepoint_free(), True)
        v.expect("cubic %d invariant" % k, g3.is_invariant_curve(c, gens), True)
        Q = g3.quadrics_through(c)
        v.expect("cubic %d quadrics" % k, len(Q), 3)
        inv = rt.is_invariant([q.coefficient_vector() for q in Q],
                              [fm.substitution_matrix(em.inverse(A), 4, 2, w.ctx) for A in gens], w.ctx)
        v.expect("cubic %d quadric net invariant" % k, inv, True)
    Q1 = em.subspace_key([q.coefficient_vector() for q in g3.quadrics_through(c1)])
    Q2 = em.subspace_key([q.coefficient_vector() for q in g3.quadrics_through(c2)])
    v.expect("different quadric nets", Q1 != Q2, True)
    v.expect("cubics disjoint", g3.curves_disjoint(c1, c2), True)
    F1, F2 = w.sextets
    C1, C2 = w.cubic_translates
    m1 = [[g3.curve_line_intersection(c, L) for L in F1 + F2] for c in C1]
    m2 = [[g3.curve_line_intersection(c, L) for L in F1 + F2] for c in C2]
    v.expect("C^1 against L^1, L^2", m1, [[2] * 6 + [0] * 6 for _ in range(6)])
    v.expect("C^2 against L^1, L^2", m2, [[0] * 6 + [2] * 6 for _ in range(6)])
    v.record("intersections_C1", m1)
    v.record("intersections_C2", m2)
    return v


@check("p3.pencil", deps=["p3.twisted_cubics", "p3.census"], claim="the invariant pencil and its special members")
def check_pencil(w):
    v = Verdict()
    ctx = w.ctx
    H = w.group("A5nst")
    gens = w.lift_gens(H)
    inv = fm.invariant_forms([em.inverse(A) for A in gens], 4, 4, ctx)
    v.expect("invariant quartics", len(inv), 2)
    S1, S2 = w.developables
    c1, c2 = w.cubics
    span = [f.coefficient_vector() for f in inv]
    v.expect("S1, S2 in the pencil", em.rank(span + [S1.coefficient_vector(), S2.coefficient_vector()]), 2)
    v.expect("S1, S2 distinct", em.rank([S1.coefficient_vector(), S2.coefficient_vector()]), 2)
    v.expect("S1 singular along C1", g3.singular_along(S1, c1), True)
    v.expect("S2 singular along C2", g3.singular_along(S2, c2), True)
    orbs, _ = w.census_a5
    tens = [o for o in orbs if len(o) == 10]
    twelves = [o for o in orbs if len(o) == 12]
    members = []
    for k, O in enumerate(tens):
        R = g3.pencil_member_through(S1, S2, list(O[0]))
        members.append(R)
        v.expect("R%d singular on its orbit" % k, all(g3.is_singular_at(R, list(p)) for p in O), True)
        ranks = {fm.hessian_rank_affine(R, list(p)) for p in O}
        v.expect("R%d nodes" % k, ranks, {3})
        other = tens[1 - k]
        v.expect("R%d avoids the other 10-orbit" % k, any(R.evaluate(list(p)).is_zero() for p in other), False)
        sing12 = [g3.is_singular_at(R, list(O2[0])) for O2 in twelves]
        v.expect("R%d smooth at the 12-orbits" % k, any(sing12), False)
    vecs = [f.coefficient_vector() for f in [S1, S2] + members]
    pair = all(em.rank([vecs[i], vecs[j]]) == 2 for i in range(4) for j in range(i + 1, 4))
    v.expect("S1, S2, R1, R2 pairwise distinct", pair, True)
    # base curves
    for name, S, c in (("S1 on C2", S1, c2), ("S2 on C1", S2, c1)):
        r = fm.restrict(S, c)
        v.expect("%s degree" % name, (r.degree, r.is_zero()), (12, False))
        v.expect("%s squarefree" % name, fm.is_squarefree(r), True)
        Q = g3.quadrics_through(c)
        hits = [O for O in twelves
                if all(S.evaluate(list(p)).is_zero() and all(q.evaluate(list(p)).is_zero() for q in Q) for p in O)]
        v.expect("%s roots form one 12-orbit" % name, len(hits), 1)
    # a random member is smooth at every census point
    rng = random.Random(w.seed)
    a, b = rng.randint(1, 1000), rng.randint(1, 1000)
    P = S1.scale(ctx(a)) + S2.scale(ctx(b))
    v.expect("random member smooth at census points",
             any(g3.is_singular_at(P, list(O[0])) for O in orbs), False)
    v.record("random_member", [a, b])
    return v


@check("p3.quartic_five_lines", deps=["p3.double_five"], claim="the invariant quartic through five lines")
def check_quartic_five_lines(w):
    v = Verdict()
    Ls, Lps = w.double_five
    gens = w.lift_gens(w.group("A5nst"))
    extra = g3.invariance_rows([em.inverse(A) for A in gens], 4, 4, w.ctx)
    S = g3.system_through_lines(Ls, extra_rows=extra)
    v.expect("dimension", len(S), 1)
    if len(S) == 1:
        f = S.basis[0]
        v.expect("contains none of L1'..L5'",
                 [fm.restrict(f, L.param()).is_zero() for L in Lps], [False] * 5)
    v.record("dimension", len(S))
    return v


# -- the two linear systems

def _system_checks(v, w, system, group):
    v.expect("vector dimension", len(system), 5)
    v.expect("basis vanishes on the lines", system.verify(), True)
    rho = q4.action_matrices(system, w.lift_gens(group))
    C = rt.commutant(rho, w.ctx)
    v.expect("irreducible action", len(C), 1)
    v.record("dimension", len(system))
    v.record("commutant", len(C))


@check("a6.system", deps=["p3.six_lines"], claim="quartics through six lines form an irreducible five-dimensional system")
def check_a6_system(w):
    v = Verdict()
    _system_checks(v, w, w.six_system, w.group("A6"))
    return v


def _image_checks(v, w, res, expected):
    ctx = w.ctx
    v.expect("t", res.t, expected)
    total = [sum((c[i] for c in res.coords), ctx.zero) for i in range(5)]
    v.expect("coordinates sum to zero", all(x.is_zero() for x in total), True)
    v.record("t", res.t)
    v.record("subgroup", res.subgroup)
    v.record("semi_invariant", res.semi)


@check("a6.extract_t", deps=["a6.system"], claim="the six-line image is X_t with t = 7/10")
def check_a6_extract(w):
    v = Verdict()
    _image_checks(v, w, w.six_image, Fraction(7, 10))
    return v


@check("a6.contraction", deps=["a6.extract_t", "p3.twisted_cubics"], claim="the six cubics are contracted to Sigma6")
def check_a6_contraction(w):
    v = Verdict()
    qs = w.six_image.qs
    C1, _ = w.cubic_translates
    pts = []
    for k, c in enumerate(C1):
        r = q4.contraction_check(qs, c)
        v.expect("cubic %d contracted" % k, r.contracted, True)
        if r.contracted:
            pts.append(r.point)
    keys = {g3.point_key(p) for p in pts}
    six = {g3.point_key(list(p)) for p in w.p4_orbits["Sigma6"]}
    v.expect("images form Sigma6", keys, six)
    t = Fraction(7, 10)
    v.expect("images singular on X_7/10", all(q4.is_singular(w.model, t, p) for p in pts), True)
    v.expect("images off the quadric", all(not w.model.s2.evaluate(p).is_zero() for p in pts), True)
    ctx = w.ctx
    generic = g3.ProjLine([[ctx(1), ctx(2), ctx(3), ctx(5)], [ctx(0), ctx(1), ctx(-1), ctx(7)]])
    r = q4.contraction_check(qs, generic.param())
    v.expect("generic line not contracted", r.contracted, False)
    v.record("images", pts)
    return v


@check("s5.system", deps=["p3.double_five"], claim="quartics through the ten lines")
def check_s5_system(w):
    v = Verdict()
    _system_checks(v, w, w.ten_system, w.group("S5nst"))
    return v


@check("s5.extract_t", deps=["s5.system"], claim="the ten-line image is X_t with t = 1/6")
def check_s5_extract(w):
    v = Verdict()
    _image_checks(v, w, w.ten_image, Fraction(1, 6))
    # the other lift of S5 differs by the sign character
    S5 = w.group("S5nst")
    alt = lambda g: em.scale(pg.sign(g), w.lift(g))
    res = q4.identify_image(w.ten_system, S5, [w.group("F20")], alt, w.ctx)
    v.expect("t for the other sign choice", res.t, w.ten_image.t)
    return v


@check("s5.contraction", deps=["s5.extract_t"], claim="the ten lines Lambda_ij go to singular points of X_1/6")
def check_s5_contraction(w):
    v = Verdict()
    Ls, Lps = w.double_five
    qs = w.ten_image.qs
    S5 = w.group("S5nst")
    D12 = w.group("D12nst")
    conj = []
    for g in S5.elements:
        gi = pg.inv(g)
        conj.append({pg.mul(pg.mul(g, h), gi) for h in D12.elements})
    ten = {g3.point_key(list(p)) for p in w.p4_orbits["Sigma10"]}
    t = Fraction(1, 6)
    pts, stabs = [], []
    for i in range(5):
        for j in range(i + 1, 5):
            lam = q4.lambda_line(Ls[i], Lps[i], Ls[j], Lps[j], w.ctx)
            r = q4.contraction_check(qs, lam.param())
            v.expect("Lambda_%d%d contracted" % (i, j), r.contracted, True)
            if not r.contracted:
                continue
            pts.append(r.point)
            v.expect("Lambda_%d%d image in Sigma10" % (i, j), g3.point_key(r.point) in ten, True)
            v.expect("Lambda_%d%d image singular" % (i, j), q4.is_singular(w.model, t, r.point), True)
            stab = {g for g in S5.elements if lam.image(w.lift(g)) == lam}
            stabs.append(len(stab))
            v.expect("Lambda_%d%d stabilizer contains D12" % (i, j), any(c <= stab for c in conj), True)
    v.expect("ten distinct images", len({g3.point_key(p) for p in pts}), 10)
    v.record("stabilizer_orders", stabs)
    v.record("images", pts)
    return v


# -- arithmetic

@check("arith.identities", claim="lattice determinant and anticanonical degrees")
def check_identities(w):
    v = Verdict()
    r = q4.numeric_identities()
    v.expect("determinant", r["determinant"], 300)
    v.expect("six lines", r["six_lines"], 4)
    v.expect("ten lines", r["ten_lines"], 14)
    v.expect("six-line terms", sum(r["six_terms"]), r["six_lines"])
    v.expect("ten-line terms", sum(r["ten_terms"]), r["ten_lines"])
    v.witness.update(r)
    return v


@check("arith.rh_search", claim="Riemann-Hurwitz for A6 leaves only genus 10")
def check_rh(w):
    v = Verdict()
    found = q4.rh_search(q4.RHSearch(360, [72, 90, 120, 180, 360], 2, 15))
    v.expect("genera", sorted(found), [10])
    v.record("solutions", {str(g): s for g, s in found.items()})
    return v


# ---------------------------------------------------------------------------
# running

class UnknownCheck(KeyError):
    pass


class CheckReport(object):
    def __init__(self, name, status, witness, millis=None):
        self.name = name
        self.status = status
        self.witness = witness
        self.millis = millis

    def as_dict(self):
        return {"name": self.name, "status": self.status,
                "witness": jsonable(self.witness), "millis": self.millis}


def order_checks(selection=None):
    "Selected checks plus their prerequisites, in dependency order."
    if selection is None:
        selection = list(REGISTRY)
    for name in selection:
        if name not in REGISTRY:
            raise UnknownCheck(name)
    out, state = [], {}

    def visit(n):
        s = state.get(n)
        if s == 1:
            raise ValueError("dependency cycle at %s" % n)
        if s == 2:
            return
        state[n] = 1
        for d in REGISTRY[n].deps:
            visit(d)
        state[n] = 2
        out.append(n)

    for n in selection:
        visit(n)
    return out


def run_one(spec, world, timings=False):
    t0 = time.perf_counter()
    try:
        v = spec.runner(world)
        witness = dict(v.witness)
        if v.mismatches:
            witness["mismatches"] = v.mismatches
        status = "pass" if v.ok else "fail"
    except em.FieldTooSmall as e:
        status = "fail"
        witness = {"error": "field too small", "what": e.what,
                   "required_order": e.required, "current_order": e.current,
                   "minimal_order": e.suggested}
    except Exception as e:            # a crashed check is a failed check
        status = "fail"
        witness = {"error": "%s: %s" % (type(e).__name__, e)}
    millis = round(1000 * (time.perf_counter() - t0), 1) if timings else None
    return CheckReport(spec.name, status, witness, millis)


def run(selection=None, order=em.DEFAULT_ORDER, seed=0, timings=False, world=None, log=None):
    world = world or World(order, seed)
    reports = {}
    out = []
    for name in order_checks(selection):
        spec = REGISTRY[name]
        failed = [d for d in spec.deps if reports[d].status != "pass"]
        if failed:
            r = CheckReport(name, "skipped", {"reason": "prerequisite not passed", "prerequisites": failed})
        else:
            r = run_one(spec, world, timings)
        reports[name] = r
        out.append(r)
        if log:
            log(r)
    return out


def report_dict(reports, order=em.DEFAULT_ORDER, seed=0):
    return {"metadata": {"field_order": order, "seed": seed, "version": __version__},
            "checks": [r.as_dict() for r in reports]}


def dumps(reports, order=em.DEFAULT_ORDER, seed=0):
    return json.dumps(report_dict(reports, order, seed), indent=2, sort_keys=True) + "\n"


def emit_report(reports, path, order=em.DEFAULT_ORDER, seed=0):
    with open(path, "w") as fh:
        fh.write(dumps(reports, order, seed))
    return path
