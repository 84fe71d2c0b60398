"""Slow reference computations kept separate from the package code paths."""

from itertools import product

from sharpknot.polynomials import LaurentPoly


def bracket_by_enumeration(d) -> LaurentPoly:
    """Sum over all 2**c states, counting loops with union-find on arc labels."""
    total = LaurentPoly()
    loop = LaurentPoly({2: -1, -2: -1})
    n = len(d.crossings)
    for state in product((0, 1), repeat=n):
        parent = {}

        def find(a):
            parent.setdefault(a, a)
            while parent[a] != a:
                a = parent[a]
            return a

        def union(a, b):
            parent[find(a)] = find(b)

        for x, s in zip(d.crossings, state):
            a, b, c, dd = x.slots
            if s == 0:
                union(a, b)
                union(c, dd)
            else:
                union(a, dd)
                union(b, c)
        loops = len({find(a) for a in parent}) + d.free_loops
        aexp = state.count(0) - state.count(1)
        total = total + (loop ** (loops - 1)).shift(aexp)
    if n == 0:
        total = loop ** (d.free_loops - 1)
    return total


def seifert_circles_by_union(d) -> int:
    parent = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            a = parent[a]
        return a

    for x in d.crossings:
        a, b, c, dd = x.slots
        # incoming under + outgoing over, incoming over + outgoing under
        if x.sign > 0:
            pairs = ((a, b), (dd, c))
        else:
            pairs = ((a, dd), (b, c))
        for u, v in pairs:
            parent[find(u)] = find(v)
    return len({find(a) for a in parent}) + d.free_loops
