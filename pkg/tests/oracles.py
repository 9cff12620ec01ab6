"""Independent brute-force oracles for the test suite.

Everything here computes definitions literally (full double loops, no
shortcuts), so it stays independent of the library's algorithms: classes by
conjugating with every element, derived subgroups from all commutators,
characteristic polynomials by permutation expansion, and so on.
"""

import itertools
import math


def brute_element_order(G, g):
    acc = g
    k = 1
    while acc != G.identity:
        acc = G.mul(acc, g)
        k += 1
    return k


def brute_conjugacy_partition(G):
    """Set of frozensets: the classes via conjugation by every element."""
    classes = []
    seen = set()
    for g in G.elements:
        if g in seen:
            continue
        cls = frozenset(G.mul(G.inv(x), G.mul(g, x)) for x in G.elements)
        seen.update(cls)
        classes.append(cls)
    return set(classes)


def brute_centralizer(G, xs):
    xs = list(xs)
    return [g for g in G.elements
            if all(G.mul(g, x) == G.mul(x, g) for x in xs)]


def brute_normalizer(G, members):
    mset = set(members)
    out = []
    for g in G.elements:
        gi = G.inv(g)
        if {G.mul(gi, G.mul(h, g)) for h in members} == mset:
            out.append(g)
    return out


def brute_subgroup_closure(G, gens):
    members = {G.identity}
    frontier = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(members) + list(gens):
                for z in (G.mul(x, y), G.mul(y, x)):
                    if z not in members:
                        members.add(z)
                        nxt.append(z)
        frontier = nxt
    return members


def brute_derived_subgroup(G, members):
    comms = [G.mul(G.inv(a), G.mul(G.inv(b), G.mul(a, b)))
             for a in members for b in members]
    return brute_subgroup_closure(G, comms)


def brute_is_solvable(G):
    current = set(G.elements)
    while True:
        nxt = brute_derived_subgroup(G, current)
        if nxt == current:
            return len(current) == 1
        current = nxt
        if len(current) == 1:
            return True


def brute_is_rational(G):
    for g in G.elements:
        o = brute_element_order(G, g)
        cls = {G.mul(G.inv(x), G.mul(g, x)) for x in G.elements}
        for m in range(1, o):
            if math.gcd(m, o) == 1:
                gm = g
                for _ in range(m - 1):
                    gm = G.mul(gm, g)
                if gm not in cls:
                    return False
    return True


def brute_is_cut(G):
    for g in G.elements:
        o = brute_element_order(G, g)
        cls = {G.mul(G.inv(x), G.mul(g, x)) for x in G.elements}
        cls |= {G.mul(G.inv(x), G.mul(G.inv(g), x)) for x in G.elements}
        for m in range(1, o):
            if math.gcd(m, o) == 1:
                gm = g
                for _ in range(m - 1):
                    gm = G.mul(gm, g)
                if gm not in cls:
                    return False
    return True


# --- polynomial / matrix oracles over GF(p) ---

def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return tuple(out)


def brute_charpoly(entries, n, p):
    """det(xI - M) via the Leibniz permutation expansion over GF(p)[x]."""
    def entry(i, j):
        # the (i, j) entry of xI - M as a polynomial
        if i == j:
            return ((-entries[i * n + j]) % p, 1)
        return ((-entries[i * n + j]) % p,)

    total = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        term = (1,)
        for i in range(n):
            term = poly_mul(term, entry(i, perm[i]), p)
        for k, c in enumerate(term):
            total[k] = (total[k] + sign * c) % p
    return tuple(total)


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def brute_orbit(act, v):
    """Orbit by applying every group element (no BFS)."""
    v = tuple(x % act.p for x in v)
    return {act.apply(v, g) for g in act.group.elements}
