"""Solvers for profile satisfiability: linear, FPT, undirected, brute force.

All three structured solvers share the same skeleton: derive arcs, close,
and read a witness off a topological order.  A returned witness is always
re-verified against the input profile (recompute and compare) before being
handed out; a verification failure on a fully settled acyclic graph is
impossible by construction and raises InternalInconsistency rather than
leaking a bad answer.

The brute-force enumerator is the independent oracle: it never touches the
precedence machinery, it just matches every candidate permutation's
recomputed profile against the target.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ._kernels import iter_perm_arrays, match_profile
from .errors import (
    InternalInconsistency,
    MismatchedN,
    NotDirected,
    NotLinear,
    TooLarge,
)
from .graph import (
    ArcKind,
    BArcPair,
    PrecedenceGraph,
    Verdict,
    b_arc_pairs,
    build_closure,
    build_easy_arcs,
    close,
    endpoint_seeded_graph,
    has_cycle,
    is_settled,
    require_solver_profile,
    topo_sort,
)
from .profiles import (
    NBRecord,
    Permutation,
    Profile,
    compute_profile,
    is_linear,
    nb_records,
    nb_set,
)

DEFAULT_BRUTE_CAP = 9


class Orientation(enum.Enum):
    """Chosen side for a silent NB-constraint."""

    TOP_FIRST = "top-first"      # arcs top->t, top->t+1
    BASIS_FIRST = "basis-first"  # arcs t->top, t+1->top


class BOrientation(enum.Enum):
    """Chosen side for a silent betweenness pair (undirected case)."""

    PLUS = "+"   # t left of t+1
    MINUS = "-"


@dataclass(frozen=True)
class Setting:
    """A total orientation choice over the silent constraints of one run."""

    nb: tuple[tuple[NBRecord, Orientation], ...]
    b: tuple[tuple[int, BOrientation], ...] = ()


@dataclass(frozen=True)
class SolveOutcome:
    """Witness permutation, or None for the verdict No, plus diagnostics."""

    witness: Permutation | None
    silent_nb: tuple[NBRecord, ...] = ()
    silent_b: tuple[int, ...] = ()
    settings_tested: int = 0

    @property
    def is_no(self) -> bool:
        return self.witness is None


def verify(P: Permutation, F: Profile) -> bool:
    """Recompute P's profile at F's span and directedness and compare."""
    if P.n != F.n:
        raise MismatchedN(f"permutation has n={P.n}, profile n={F.n}")
    return compute_profile(P, F.k, F.directed) == F


def brute_force_solutions(F: Profile, cap_n: int = DEFAULT_BRUTE_CAP) -> list[Permutation]:
    """Every permutation whose profile equals F, in lexicographic order.

    Exhaustive over all n! candidates; refuses n beyond cap_n.
    """
    if F.n > cap_n:
        raise TooLarge(f"n={F.n} exceeds the enumeration cap {cap_n}")
    m, M, d = F.to_arrays()
    out: list[Permutation] = []
    for rows in iter_perm_arrays(F.n):
        mask = match_profile(rows, F.k, m, M, d)
        for row in rows[mask]:
            out.append(Permutation(n=F.n, elems=tuple(int(v) for v in row)))
    return out


def _checked_witness(g: PrecedenceGraph, F: Profile, context: str) -> Permutation:
    w = topo_sort(g)
    if not verify(w, F):
        raise InternalInconsistency(
            f"{context}: topological order {w} does not reproduce the profile")
    return w


def _nb_setting_arcs(rec: NBRecord, orient: Orientation) -> tuple[tuple[int, int], tuple[int, int]]:
    t, u = rec.basis
    a = rec.top
    if orient is Orientation.TOP_FIRST:
        return (a, t), (a, u)
    return (t, a), (u, a)


def _setting_from_counter(counter: int, silent_b: list[BArcPair],
                          silent_nb: list[NBRecord]) -> Setting:
    """Decode one binary-counter value: B pairs occupy the low bits (in
    ascending t), NB records the high bits (sorted by basis, then top);
    bit value 0 means Plus / TopFirst."""
    b = tuple(
        (bp.t, BOrientation.MINUS if counter >> j & 1 else BOrientation.PLUS)
        for j, bp in enumerate(silent_b))
    base = len(silent_b)
    nb = tuple(
        (rec, Orientation.BASIS_FIRST if counter >> (base + j) & 1 else Orientation.TOP_FIRST)
        for j, rec in enumerate(silent_nb))
    return Setting(nb=nb, b=b)


def _apply_setting(g: PrecedenceGraph, setting: Setting,
                   pairs_by_t: dict[int, BArcPair]) -> None:
    for t, orient in setting.b:
        bp = pairs_by_t[t]
        arcs = bp.plus if orient is BOrientation.PLUS else bp.minus
        for x, y in arcs:
            g.add_arc(x, y, ArcKind.B)
    for rec, orient in setting.nb:
        for x, y in _nb_setting_arcs(rec, orient):
            g.add_arc(x, y, ArcKind.NB)


def solve_linear(F: Profile) -> SolveOutcome:
    """Polynomial decision procedure for directed linear gap-1 profiles.

    Repeatedly picks the silent top with the largest NB set (ties: smallest
    top), sets it after the smallest silent basis naming it, and re-closes;
    linearity guarantees no cycle ever appears after a clean start, so the
    loop always drains the silent set.
    """
    if not F.directed:
        raise NotDirected("the linear solver needs a directed profile")
    if not is_linear(F):
        raise NotLinear("profile intervals do not form an inclusion chain")
    res = build_easy_arcs(F)
    if res.verdict is Verdict.NO:
        return SolveOutcome(witness=None, silent_nb=res.silent)
    g = res.graph
    silent = list(res.silent)
    rounds = 0
    while silent:
        tops = {r.top for r in silent}
        b1 = max(tops, key=lambda c: (len(nb_set(F, c)), -c))
        a1 = min(r.basis[0] for r in silent if r.top == b1)
        g = g.copy()
        g.add_arc(a1, b1, ArcKind.NB)
        g = build_closure(g, silent)
        if has_cycle(g):
            raise InternalInconsistency(
                "linear profile produced a cycle while draining silent constraints")
        still = [r for r in silent if not is_settled(g, r)]
        if len(still) == len(silent):
            raise InternalInconsistency("silent set failed to shrink")
        silent = still
        rounds += 1
    w = _checked_witness(g, F, "linear solver")
    return SolveOutcome(witness=w, silent_nb=res.silent, settings_tested=rounds)


def solve_fpt_directed(F: Profile) -> SolveOutcome:
    """Exact solver for directed gap-1 profiles: enumerate the 2^s
    orientations of the s silent NB-constraints in binary-counter order.

    The first setting whose closure is acyclic yields the witness; if none
    is, the answer is No.
    """
    if not F.directed:
        raise NotDirected("the FPT solver needs a directed profile")
    res = build_easy_arcs(F)
    if res.verdict is Verdict.NO:
        return SolveOutcome(witness=None, silent_nb=res.silent)
    silent = list(res.silent)
    for counter in range(1 << len(silent)):
        setting = _setting_from_counter(counter, [], silent)
        g = res.graph.copy()
        _apply_setting(g, setting, {})
        g = build_closure(g, silent)
        if has_cycle(g):
            continue
        w = _checked_witness(g, F, "FPT solver")
        return SolveOutcome(witness=w, silent_nb=res.silent, settings_tested=counter + 1)
    return SolveOutcome(witness=None, silent_nb=res.silent,
                        settings_tested=1 << len(silent))


def undirected_base(F: Profile) -> tuple[PrecedenceGraph, list[NBRecord],
                                         list[BArcPair], list[NBRecord], list[BArcPair]]:
    """Shared front end of the undirected pipeline.

    Seeds the endpoint arcs, closes under T/NB/B, and splits the constraint
    sets into settled and silent.  Returns (graph, nb_records, b_pairs,
    silent_nb, silent_b).
    """
    require_solver_profile(F, directed=False)
    records = nb_records(F)
    pairs = b_arc_pairs(F)
    g = close(endpoint_seeded_graph(F.n), records, pairs)
    silent_nb = [r for r in records if not is_settled(g, r)]
    silent_b = [bp for bp in pairs
                if not g.has_arc(bp.t, bp.t + 1) and not g.has_arc(bp.t + 1, bp.t)]
    return g, records, pairs, silent_nb, silent_b


def solve_undirected(F: Profile, method: str = "fpt",
                     cap_n: int = DEFAULT_BRUTE_CAP) -> SolveOutcome:
    """Solver for undirected gap-1 profiles.

    method "brute" delegates to the exhaustive oracle (n <= cap_n).
    method "fpt" runs the generalized pipeline: no R/B arcs exist up front,
    so the closure engine also propagates betweenness pairs (one arc of
    Arcs+ drags in all of Arcs+, same for Arcs-), and the silent B pairs
    and silent NB records are enumerated jointly, B bits low.
    """
    if method == "brute":
        require_solver_profile(F, directed=False)
        sols = brute_force_solutions(F, cap_n)
        return SolveOutcome(witness=sols[0] if sols else None)
    if method != "fpt":
        raise ValueError(f"unknown method {method!r}")
    g0, records, pairs, silent_nb, silent_b = undirected_base(F)
    diag = dict(silent_nb=tuple(silent_nb), silent_b=tuple(bp.t for bp in silent_b))
    if has_cycle(g0):
        return SolveOutcome(witness=None, **diag)
    pairs_by_t = {bp.t: bp for bp in pairs}
    total = 1 << (len(silent_b) + len(silent_nb))
    for counter in range(total):
        setting = _setting_from_counter(counter, silent_b, silent_nb)
        g = g0.copy()
        _apply_setting(g, setting, pairs_by_t)
        g = close(g, records, pairs)
        if has_cycle(g):
            continue
        w = _checked_witness(g, F, "undirected solver")
        return SolveOutcome(witness=w, settings_tested=counter + 1, **diag)
    return SolveOutcome(witness=None, settings_tested=total, **diag)
