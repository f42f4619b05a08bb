"""Precedence digraph over {0..n+1} and the arc-propagation algorithms.

Arcs (x, y) assert "x lies left of y" in every permutation compatible with
the profile under construction.  Four rules create arcs:

  R   the given relative order of a consecutive pair,
  B   a betweenness fact (m and M sit between t and t+1),
  T   transitivity,
  NB  a non-betweenness fact: once an arc ties the top of an NB-constraint
      to one basis element, the same orientation is forced on the other.

`build_easy_arcs` seeds R/B arcs from a directed profile and closes under
T/NB; NB-constraints that the closure orients neither way are reported as
silent.  `build_closure` is the reusable closure engine; the undirected
pipeline also feeds it silent betweenness pairs whose orientations (the
arc sets Arcs+/Arcs-) propagate as a unit.

Adjacency is kept as per-vertex bitmasks; every graph here has at most a
few dozen vertices, and closure is called once per candidate setting.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CyclicGraph,
    KMismatch,
    NotDirected,
    PreconditionViolation,
    ProfileValidationError,
)
from .profiles import (
    Direction,
    NBRecord,
    Permutation,
    Profile,
    b_constraints,
    nb_records,
    validate_permutation,
    validate_profile,
)


class ArcKind(enum.Enum):
    R = "R"
    B = "B"
    T = "T"
    NB = "NB"


class PrecedenceGraph:
    """Simple digraph on {0..n+1}; each arc remembers the rule that first
    derived it (diagnostic only, never consulted by the algorithms)."""

    __slots__ = ("n", "rows", "kinds")

    def __init__(self, n: int):
        self.n = n
        self.rows: list[int] = [0] * (n + 2)
        self.kinds: dict[tuple[int, int], ArcKind] = {}

    @property
    def num_vertices(self) -> int:
        return self.n + 2

    def copy(self) -> "PrecedenceGraph":
        g = PrecedenceGraph.__new__(PrecedenceGraph)
        g.n = self.n
        g.rows = list(self.rows)
        g.kinds = dict(self.kinds)
        return g

    def has_arc(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def add_arc(self, x: int, y: int, kind: ArcKind) -> bool:
        """Add (x, y) unless it is a self-loop or already present."""
        if x == y or self.rows[x] >> y & 1:
            return False
        self.rows[x] |= 1 << y
        self.kinds[(x, y)] = kind
        return True

    def arcs(self) -> list[tuple[int, int, ArcKind]]:
        out = []
        for x in range(len(self.rows)):
            r = self.rows[x]
            while r:
                b = r & -r
                y = b.bit_length() - 1
                out.append((x, y, self.kinds[(x, y)]))
                r ^= b
        return out

    def arc_pairs(self) -> set[tuple[int, int]]:
        return {(x, y) for x, y, _ in self.arcs()}

    @property
    def num_arcs(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrecedenceGraph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __repr__(self) -> str:
        return f"PrecedenceGraph(n={self.n}, arcs={self.num_arcs})"


class Verdict(enum.Enum):
    SAT_SO_FAR = "sat-so-far"
    NO = "no"


@dataclass(frozen=True)
class EasyArcsResult:
    """Closed graph, remaining silent NB-constraints, and the cycle verdict."""

    graph: PrecedenceGraph
    silent: tuple[NBRecord, ...]
    verdict: Verdict

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.SAT_SO_FAR


@dataclass(frozen=True)
class BArcPair:
    """The two orientations of one betweenness pair, as concrete arc sets.

    plus places t left of t+1 (with m, M in between), minus the reverse.
    Self-loops from degenerate facts (m = t, M = t+1) are already dropped.
    """

    t: int
    plus: tuple[tuple[int, int], ...]
    minus: tuple[tuple[int, int], ...]


def _loop_free(arcs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    seen = []
    for x, y in arcs:
        if x != y and (x, y) not in seen:
            seen.append((x, y))
    return tuple(seen)


def b_arc_pairs(F: Profile) -> list[BArcPair]:
    """Arcs+/Arcs- for every entry of a gap-1 profile, ascending t."""
    out = []
    for bc in b_constraints(F):
        t, m, M = bc.t, bc.m, bc.M
        plus = _loop_free([(t, t + 1), (t, m), (t, M), (m, t + 1), (M, t + 1)])
        minus = _loop_free([(t + 1, t), (m, t), (M, t), (t + 1, m), (t + 1, M)])
        out.append(BArcPair(t=t, plus=plus, minus=minus))
    return out


# ---------------------------------------------------------------------------
# Closure engine
# ---------------------------------------------------------------------------

def _transitive_pass(g: PrecedenceGraph) -> bool:
    """One full transitive-closure sweep (boolean Floyd-Warshall)."""
    rows = g.rows
    V = len(rows)
    before = list(rows)
    for c in range(V):
        rc = rows[c]
        if not rc:
            continue
        bit = 1 << c
        for x in range(V):
            if rows[x] & bit:
                rows[x] |= rc
    changed = False
    for x in range(V):
        rows[x] &= ~(1 << x)
        new = rows[x] & ~before[x]
        while new:
            b = new & -new
            g.kinds[(x, b.bit_length() - 1)] = ArcKind.T
            new ^= b
            changed = True
    return changed


def _nb_pass(g: PrecedenceGraph, records: Sequence[NBRecord]) -> bool:
    changed = False
    for rec in records:
        a = rec.top
        t, u = rec.basis
        ra = g.rows[a]
        bt, bu = 1 << t, 1 << u
        if ra & bt and not ra & bu:
            changed |= g.add_arc(a, u, ArcKind.NB)
        elif ra & bu and not ra & bt:
            changed |= g.add_arc(a, t, ArcKind.NB)
        ba = 1 << a
        if g.rows[t] & ba and not g.rows[u] & ba:
            changed |= g.add_arc(u, a, ArcKind.NB)
        elif g.rows[u] & ba and not g.rows[t] & ba:
            changed |= g.add_arc(t, a, ArcKind.NB)
    return changed


def _b_pass(g: PrecedenceGraph, pairs: Sequence[BArcPair]) -> bool:
    changed = False
    for bp in pairs:
        if any(g.has_arc(x, y) for x, y in bp.plus):
            for x, y in bp.plus:
                changed |= g.add_arc(x, y, ArcKind.B)
        if any(g.has_arc(x, y) for x, y in bp.minus):
            for x, y in bp.minus:
                changed |= g.add_arc(x, y, ArcKind.B)
    return changed


def close(graph: PrecedenceGraph, records: Sequence[NBRecord],
          b_pairs: Sequence[BArcPair] = ()) -> PrecedenceGraph:
    """Least fixpoint of the T, NB and (optionally) B rules over the input.

    The rules are monotone and inflationary, so the fixpoint is unique
    regardless of application order.  The output may contain 2-cycles when
    the constraints are contradictory; callers run has_cycle.
    """
    g = graph.copy()
    while True:
        changed = _transitive_pass(g)
        changed |= _nb_pass(g, records)
        if b_pairs:
            changed |= _b_pass(g, b_pairs)
        if not changed:
            return g


def build_closure(G: PrecedenceGraph, NBc: Sequence[NBRecord]) -> PrecedenceGraph:
    """NB-transitive closure: T and NB rules only (the directed pipeline)."""
    return close(G, NBc)


def is_settled(G: PrecedenceGraph, r: NBRecord) -> bool:
    """Whether one orientation of the NB-constraint is fully present."""
    a = r.top
    t, u = r.basis
    return (G.has_arc(a, t) and G.has_arc(a, u)) or \
           (G.has_arc(t, a) and G.has_arc(u, a))


# ---------------------------------------------------------------------------
# DAG utilities
# ---------------------------------------------------------------------------

def _in_masks(g: PrecedenceGraph) -> list[int]:
    V = len(g.rows)
    incoming = [0] * V
    for x in range(V):
        r = g.rows[x]
        while r:
            b = r & -r
            incoming[b.bit_length() - 1] |= 1 << x
            r ^= b
    return incoming


def has_cycle(G: PrecedenceGraph) -> bool:
    incoming = _in_masks(G)
    V = len(G.rows)
    remaining = (1 << V) - 1
    while remaining:
        picked = False
        r = remaining
        while r:
            b = r & -r
            v = b.bit_length() - 1
            if not incoming[v] & remaining:
                remaining &= ~b
                picked = True
                break
            r ^= b
        if not picked:
            return True
    return False


def topo_sort(G: PrecedenceGraph) -> Permutation:
    """Topological order with smallest-vertex tie-breaking, as a Permutation.

    Raises CyclicGraph when no order exists.  The order starts with 0 and
    ends with n+1 whenever the graph's constraints pin them there, which is
    the case for every graph the solvers produce.
    """
    incoming = _in_masks(G)
    V = len(G.rows)
    remaining = (1 << V) - 1
    order = []
    for _ in range(V):
        v = -1
        r = remaining
        while r:
            b = r & -r
            cand = b.bit_length() - 1
            if not incoming[cand] & remaining:
                v = cand
                break
            r ^= b
        if v < 0:
            raise CyclicGraph("graph has a directed cycle; no topological order")
        order.append(v)
        remaining &= ~(1 << v)
    return validate_permutation(order)


# ---------------------------------------------------------------------------
# Build-Easy-Arcs (directed pipeline entry)
# ---------------------------------------------------------------------------

def require_solver_profile(F: Profile, *, directed: bool) -> None:
    """The hard gate run before any solver: structural validity plus, for
    directed inputs, full directionality with the boundary pairs running
    left-to-right (0 and n+1 are pinned to the outermost places, so any
    other boundary direction admits no permutation and is rejected)."""
    if F.k != 1:
        raise KMismatch(f"solvers operate on gap-1 profiles, got k={F.k}")
    violations = validate_profile(F)
    if violations:
        raise ProfileValidationError(violations)
    if directed:
        if not F.directed:
            raise NotDirected("profile is undirected")
        if any(c.dir is Direction.UNKNOWN for c in F.entries()):
            raise NotDirected("directed profile has entries with unknown direction")
        if F.entry(0).dir is not Direction.LEFT_TO_RIGHT \
                or F.entry(F.n).dir is not Direction.LEFT_TO_RIGHT:
            raise PreconditionViolation(
                "entries (0,1) and (n,n+1) must run left-to-right: "
                "0 and n+1 occupy the outermost places")
    else:
        if F.directed:
            raise PreconditionViolation("expected an undirected profile")


def build_easy_arcs(F: Profile) -> EasyArcsResult:
    """Seed R- and B-arcs from a directed gap-1 profile, close under the
    T/NB rules, and report the NB-constraints left silent.

    Verdict is NO exactly when the closed graph contains a directed cycle;
    the graph and silent set are returned either way.
    """
    require_solver_profile(F, directed=True)
    g = PrecedenceGraph(F.n)
    for c in F.entries():
        t = c.t
        tl, tr = (t, t + 1) if c.dir is Direction.LEFT_TO_RIGHT else (t + 1, t)
        g.add_arc(tl, tr, ArcKind.R)
        for x, y in ((tl, c.m), (c.m, tr), (tl, c.M), (c.M, tr)):
            g.add_arc(x, y, ArcKind.B)
    records = tuple(nb_records(F))
    g = build_closure(g, records)
    silent = tuple(r for r in records if not is_settled(g, r))
    verdict = Verdict.NO if has_cycle(g) else Verdict.SAT_SO_FAR
    return EasyArcsResult(graph=g, silent=silent, verdict=verdict)


def endpoint_seeded_graph(n: int) -> PrecedenceGraph:
    """Graph carrying only what the pinned endpoints give: 0 before
    everything, everything before n+1 (the undirected pipeline's seed)."""
    g = PrecedenceGraph(n)
    for x in range(1, n + 2):
        g.add_arc(0, x, ArcKind.R)
    for x in range(0, n + 1):
        g.add_arc(x, n + 1, ArcKind.R)
    return g


def to_dot(G: PrecedenceGraph) -> str:
    """DOT rendering with the arc kind as edge label (debug dumps)."""
    lines = ["digraph precedence {"]
    for v in range(G.num_vertices):
        lines.append(f"  {v};")
    for x, y, kind in G.arcs():
        lines.append(f'  {x} -> {y} [label="{kind.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
