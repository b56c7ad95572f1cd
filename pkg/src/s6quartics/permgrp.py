"""
Permutation groups on six letters: S6, A6, the standard and nonstandard
S5/A5 and the smaller subgroups named after them, conjugacy classes and
class-fusion counts.

A permutation is a tuple of images; (a*b)(i) = a(b(i)).
"""

from collections import Counter
from functools import lru_cache
from itertools import permutations


def identity(n=6):
    return tuple(range(n))


def mul(a, b):
    return tuple(a[i] for i in b)


def inv(a):
    r = [0] * len(a)
    for i, j in enumerate(a):
        r[j] = i
    return tuple(r)


def from_cycles(cycles, n=6):
    img = list(range(n))
    for c in cycles:
        for i in range(len(c)):
            img[c[i]] = c[(i + 1) % len(c)]
    return tuple(img)


def cycles(a):
    seen = set()
    out = []
    for i in range(len(a)):
        if i in seen:
            continue
        c = [i]
        seen.add(i)
        j = a[i]
        while j != i:
            c.append(j)
            seen.add(j)
            j = a[j]
        out.append(tuple(c))
    return out


def cycle_type(a):
    "Nontrivial cycle lengths in decreasing order, e.g. (2, 2) for (01)(23)."
    return tuple(sorted((len(c) for c in cycles(a) if len(c) > 1), reverse=True))


def sign(a):
    return -1 if sum(len(c) - 1 for c in cycles(a)) % 2 else 1


def order(a):
    from math import lcm
    r = 1
    for c in cycles(a):
        r = lcm(r, len(c))
    return r


def fixed_points(a):
    return [i for i in range(len(a)) if a[i] == i]


def closure(gens, mul_fn, key_fn, one):
    """Enumerate the group generated by gens by breadth-first search on
    right multiplication. Returns elements in discovery order."""
    elems = [one]
    seen = {key_fn(one): 0}
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in gens:
            y = mul_fn(x, g)
            k = key_fn(y)
            if k not in seen:
                seen[k] = len(elems)
                elems.append(y)
        i += 1
    return elems, seen


class PermGroup(object):
    def __init__(self, gens, n=6, name=None):
        self.n = n
        self.gens = [tuple(g) for g in gens]
        self.name = name
        self.elements, self._index = closure(self.gens, mul, lambda x: x, identity(n))

    def __len__(self):
        return len(self.elements)

    order = property(__len__)

    def __contains__(self, g):
        return tuple(g) in self._index

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return "PermGroup(%s, order=%d)" % (self.name or "?", len(self))

    def is_subgroup_of(self, G):
        return all(g in G for g in self.gens)

    def is_transitive(self):
        orbit = {self.elements[0][0]}
        orbit = {g[0] for g in self.elements}
        return len(orbit) == self.n

    def orbit(self, i):
        return sorted({g[i] for g in self.elements})

    def stabilizer_elements(self, i):
        return [g for g in self.elements if g[i] == i]

    def subgroup(self, pred, name=None):
        return PermGroup(_gens_for([g for g in self.elements if pred(g)], self.n),
                         self.n, name)

    def left_cosets(self, H):
        "Representatives g_0 = id, g_1, ... of G/H, in discovery order."
        reps = []
        covered = set()
        for g in self.elements:
            if g in covered:
                continue
            reps.append(g)
            for h in H.elements:
                covered.add(mul(g, h))
        return reps


def _gens_for(elements, n):
    "A small generating set for the subgroup with the given element list."
    target = set(elements)
    gens = []
    current = {identity(n)}
    for g in sorted(elements, key=lambda x: (-order(x), x)):
        if g in current:
            continue
        gens.append(g)
        current = set(PermGroup(gens, n).elements)
        if current == target:
            break
    return gens


def generate(gens, n=6, name=None):
    return PermGroup(gens, n, name)


def conjugacy_classes(G):
    "Partition of G into conjugacy classes, as lists, in discovery order."
    seen = set()
    classes = []
    gens = G.gens + [inv(g) for g in G.gens]
    for x in G.elements:
        if x in seen:
            continue
        cls = [x]
        seen.add(x)
        i = 0
        while i < len(cls):
            y = cls[i]
            for g in gens:
                z = mul(mul(g, y), inv(g))
                if z not in seen:
                    seen.add(z)
                    cls.append(z)
            i += 1
        classes.append(cls)
    return classes


# ---------------------------------------------------------------------------
# the outer automorphism: S5 acting on its six Sylow 5-subgroups

@lru_cache(maxsize=None)
def _sylow5():
    S5 = list(permutations(range(5)))
    subs = set()
    for g in S5:
        if order(g) == 5:
            subs.add(frozenset(PermGroup([g], 5).elements))
    return sorted(subs, key=lambda s: sorted(s))


def nonstandard_embedding(g5):
    "The image in S6 of a permutation of five letters."
    P = _sylow5()
    img = []
    for s in P:
        t = frozenset(mul(mul(g5, x), inv(g5)) for x in s)
        img.append(P.index(t))
    return tuple(img)


def nonstandard_s5():
    gens = [from_cycles([(0, 1)], 5), from_cycles([(0, 1, 2, 3, 4)], 5)]
    return PermGroup([nonstandard_embedding(g) for g in gens], 6, "S5nst")


# ---------------------------------------------------------------------------
# named subgroups: 'std' entries are cycles on six letters, 'nst' entries are
# cycles on five letters pushed through the nonstandard embedding

SUBGROUPS = {
    "S6": ("std", [[(0, 1)], [(0, 1, 2, 3, 4, 5)]], 720),
    "A6": ("std", [[(0, 1, 2)], [(1, 2, 3, 4, 5)]], 360),
    "S5st": ("std", [[(0, 1)], [(0, 1, 2, 3, 4)]], 120),
    "A5st": ("std", [[(0, 1, 2)], [(0, 1, 2, 3, 4)]], 60),
    "S5nst": ("nst", [[(0, 1)], [(0, 1, 2, 3, 4)]], 120),
    "A5nst": ("nst", [[(0, 1, 2)], [(0, 1, 2, 3, 4)]], 60),
    "S4nst": ("nst", [[(0, 1)], [(0, 1, 2, 3)]], 24),
    "A4nst": ("nst", [[(0, 1, 2)], [(0, 1), (2, 3)]], 12),
    "D12nst": ("nst", [[(0, 1, 2)], [(0, 1)], [(3, 4)]], 12),
    "F36": ("std", [[(0, 1, 2)], [(3, 4, 5)], [(0, 3, 1, 4), (2, 5)]], 36),
    "F20": ("nst", [[(0, 1, 2, 3, 4)], [(1, 2, 4, 3)]], 20),
    "D10": ("nst", [[(0, 1, 2, 3, 4)], [(1, 4), (2, 3)]], 10),
    "S3p": ("nst", [[(0, 1, 2)], [(0, 1), (3, 4)]], 6),
    "V4": ("nst", [[(0, 1), (2, 3)], [(0, 2), (1, 3)]], 4),
    "mu5": ("nst", [[(0, 1, 2, 3, 4)]], 5),
    "trivial": ("std", [], 1),
}


@lru_cache(maxsize=None)
def named(name):
    kind, words, expected = SUBGROUPS[name]
    if kind == "std":
        gens = [from_cycles(w, 6) for w in words]
    else:
        gens = [nonstandard_embedding(from_cycles(w, 5)) for w in words]
    G = PermGroup(gens, 6, name)
    if len(G) != expected:
        raise AssertionError("%s has order %d, expected %d" % (name, len(G), expected))
    return G


def s6_class_label(g):
    return cycle_type(g)


def fusion_counts(H_elements, label_of):
    "Number of elements of H in each ambient class label."
    return Counter(label_of(h) for h in H_elements)
