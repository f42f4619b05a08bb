"""Shared fixtures-in-code for the test suite: golden inputs, generators,
and the slow randomized-order closure used as the confluence reference."""

from __future__ import annotations

import itertools
import random

from minmaxperm import (
    ArcKind,
    PrecedenceGraph,
    Permutation,
    Profile,
    validate_permutation,
)
from minmaxperm.profiles import Direction, KConstraint

L = Direction.LEFT_TO_RIGHT
R = Direction.RIGHT_TO_LEFT
U = Direction.UNKNOWN

# Running example: permutation and its gap-1 constraints (t, dir, m, M).
GOLDEN_PERM = (0, 6, 4, 7, 2, 9, 1, 8, 5, 3, 10)
GOLDEN_ENTRIES = [
    (0, L, 0, 9), (1, R, 1, 9), (2, L, 1, 9), (3, R, 1, 9), (4, L, 1, 9),
    (5, R, 1, 9), (6, L, 4, 7), (7, L, 1, 9), (8, R, 1, 9), (9, L, 1, 10),
]

# Second worked example for silent-constraint analysis.
SETTING_PERM = (0, 7, 4, 10, 2, 1, 12, 8, 3, 9, 5, 11, 6, 13)

# The 30-entry circuit-construction profile, n = 29.
CIRCUIT_ENTRIES = [
    (0, L, 0, 27), (1, L, 1, 29), (2, R, 1, 29), (3, L, 1, 29), (4, R, 1, 29),
    (5, L, 1, 29), (6, R, 1, 29), (7, R, 3, 21), (8, L, 1, 29), (9, R, 1, 29),
    (10, L, 1, 29), (11, R, 1, 29), (12, L, 8, 25), (13, L, 1, 29), (14, R, 1, 29),
    (15, R, 10, 27), (16, L, 1, 29), (17, R, 1, 29), (18, R, 16, 22), (19, L, 1, 29),
    (20, R, 1, 29), (21, R, 5, 22), (22, L, 1, 29), (23, R, 1, 29), (24, R, 15, 25),
    (25, L, 1, 29), (26, R, 1, 29), (27, L, 1, 29), (28, R, 2, 29), (29, L, 2, 30),
]

# Directed profile on n=2 with no witness: entry (0,1) claims M=2, which no
# permutation of {0,1,2,3} can deliver together with 1 left of 2.
UNSAT2_ENTRIES = [(0, L, 0, 2), (1, L, 1, 2), (2, L, 2, 3)]


def make_profile(entries, n=None, directed=True, k=1) -> Profile:
    n = n if n is not None else len(entries) - 1
    cons = {}
    for t, d, m, M in entries:
        if not directed:
            d = U
        cons[(t, 1)] = KConstraint(t=t, i=1, dir=d, m=m, M=M)
    return Profile(n=n, k=k, directed=directed, constraints=cons)


def golden_profile(directed=True) -> Profile:
    return make_profile(GOLDEN_ENTRIES, directed=directed)


def golden_swap_family(directed: bool) -> set[Permutation]:
    """The witnesses obtained by permuting the values {3,5,8} across their
    slots in the golden permutation (the family the recorded example names)."""
    out = set()
    for combo in itertools.permutations((3, 5, 8)):
        elems = list(GOLDEN_PERM)
        elems[7], elems[8], elems[9] = combo
        out.add(validate_permutation(elems))
    return out


def circuit_profile() -> Profile:
    return make_profile(CIRCUIT_ENTRIES, n=29)


def unsat2_profile() -> Profile:
    return make_profile(UNSAT2_ENTRIES, n=2)


def all_perms(n: int):
    for inner in itertools.permutations(range(1, n + 1)):
        yield Permutation(n=n, elems=(0, *inner, n + 1))


def identity_perm(n: int) -> Permutation:
    return Permutation(n=n, elems=tuple(range(n + 2)))


def dual_perm(P: Permutation) -> Permutation:
    """Reverse of the value-complement; maps x to n+1-x and flips positions."""
    comp = [P.n + 1 - v for v in P.elems]
    return Permutation(n=P.n, elems=tuple(reversed(comp)))


def random_perm(rng: random.Random, n: int) -> Permutation:
    inner = list(range(1, n + 1))
    rng.shuffle(inner)
    return Permutation(n=n, elems=(0, *inner, n + 1))


def random_valid_directed(rng: random.Random, n: int) -> Profile:
    """Uniform random profile satisfying the validity gate (bounds, extreme
    occurrences, boundary entries left-to-right)."""
    cons = {}
    for t in range(n + 1):
        if t == 0:
            m, M, d = 0, rng.randint(1, n), L
        elif t == n:
            m, M, d = rng.randint(1, n), n + 1, L
        else:
            m, M, d = rng.randint(1, t), rng.randint(t + 1, n), rng.choice((L, R))
        cons[(t, 1)] = KConstraint(t=t, i=1, dir=d, m=m, M=M)
    return Profile(n=n, k=1, directed=True, constraints=cons)


def mutate_undirected(rng: random.Random, F: Profile) -> Profile:
    """Random valid edits of the m/M values of an undirected gap-1 profile."""
    cons = dict(F.constraints)
    n = F.n
    for _ in range(rng.randint(1, 3)):
        t = rng.randint(0, n)
        c = cons[(t, 1)]
        m, M = c.m, c.M
        if rng.random() < 0.5 and t >= 1:
            m = rng.randint(1, t)
        elif t <= n - 1:
            M = rng.randint(t + 1, n)
        cons[(t, 1)] = KConstraint(t=t, i=1, dir=U, m=m, M=M)
    return Profile(n=n, k=1, directed=False, constraints=cons)


def mutate_directed(rng: random.Random, F: Profile) -> Profile:
    """A few random valid edits of a directed gap-1 profile (bounds and
    boundary directions preserved)."""
    cons = dict(F.constraints)
    n = F.n
    for _ in range(rng.randint(1, 3)):
        t = rng.randint(0, n)
        c = cons[(t, 1)]
        m, M, d = c.m, c.M, c.dir
        move = rng.random()
        if move < 0.4 and t >= 1:
            m = rng.randint(1, t)
        elif move < 0.8 and t <= n - 1:
            M = rng.randint(t + 1, n)
        elif 1 <= t <= n - 1:
            d = L if d is R else R
        cons[(t, 1)] = KConstraint(t=t, i=1, dir=d, m=m, M=M)
    return Profile(n=n, k=1, directed=True, constraints=cons)


def seed_graph(F: Profile) -> PrecedenceGraph:
    """The pre-closure graph of the directed pipeline (R- and B-arcs only)."""
    g = PrecedenceGraph(F.n)
    for c in F.entries():
        t = c.t
        tl, tr = (t, t + 1) if c.dir is L else (t + 1, t)
        g.add_arc(tl, tr, ArcKind.R)
        for x, y in ((tl, c.m), (c.m, tr), (tl, c.M), (c.M, tr)):
            g.add_arc(x, y, ArcKind.B)
    return g


def reference_close(graph: PrecedenceGraph, records, b_pairs, rng: random.Random):
    """Fixpoint computed by applying one randomly chosen applicable rule
    instance at a time; order-independence of the result is the property
    under test."""
    g = graph.copy()
    V = g.num_vertices
    while True:
        cands = []
        for x in range(V):
            for c in range(V):
                if g.has_arc(x, c):
                    for y in range(V):
                        if y != x and g.has_arc(c, y) and not g.has_arc(x, y):
                            cands.append((x, y, ArcKind.T))
        for r in records:
            a = r.top
            t, u = r.basis
            if g.has_arc(a, t) and not g.has_arc(a, u):
                cands.append((a, u, ArcKind.NB))
            if g.has_arc(a, u) and not g.has_arc(a, t):
                cands.append((a, t, ArcKind.NB))
            if g.has_arc(t, a) and not g.has_arc(u, a):
                cands.append((u, a, ArcKind.NB))
            if g.has_arc(u, a) and not g.has_arc(t, a):
                cands.append((t, a, ArcKind.NB))
        for bp in b_pairs:
            for side in (bp.plus, bp.minus):
                if any(g.has_arc(x, y) for x, y in side):
                    cands.extend((x, y, ArcKind.B)
                                 for x, y in side if not g.has_arc(x, y))
        if not cands:
            return g
        x, y, kind = rng.choice(cands)
        g.add_arc(x, y, kind)


def profile_restricted(F: Profile, k: int) -> Profile:
    """F with gaps above k dropped (for the refinement property)."""
    cons = {key: c for key, c in F.constraints.items() if key[1] <= k}
    return Profile(n=F.n, k=k, directed=F.directed, constraints=cons)
