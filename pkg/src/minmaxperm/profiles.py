"""Permutation and profile data model.

Permutations live on {0, ..., n+1} with 0 pinned to the first position and
n+1 to the last; the two sentinels make a permutation distinguishable from
its reverse.  A profile records, for every value pair (t, t+i) with gap
i <= k, the minimum and maximum element of the contiguous segment of the
permutation delimited by t and t+i (both included).  A directed profile
additionally records which of t, t+i sits further left.

Every betweenness fact a profile encodes decomposes into B-constraints
("m and M lie between t and t+i") and NB-constraints ("each value outside
[m, M] does not lie between t and t+i"); the decomposition helpers at the
bottom feed the precedence-graph solvers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadEndpoints,
    COutOfRange,
    KMismatch,
    MismatchedN,
    NotBijection,
    PreconditionViolation,
)


class Direction(enum.Enum):
    """Relative position of t and t+i: which one is further left."""

    LEFT_TO_RIGHT = ">"  # t left of t+i
    RIGHT_TO_LEFT = "<"  # t+i left of t
    UNKNOWN = "?"

    @property
    def symbol(self) -> str:
        return self.value


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0, ..., n+1} with fixed endpoints 0 and n+1."""

    n: int
    elems: tuple[int, ...]

    def positions(self) -> tuple[int, ...]:
        """Inverse map: positions()[v] is the index of value v."""
        pos = [0] * (self.n + 2)
        for idx, v in enumerate(self.elems):
            pos[v] = idx
        return tuple(pos)

    def to_array(self) -> np.ndarray:
        return np.array(self.elems, dtype=np.int8)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.elems)


def validate_permutation(seq: Sequence[int]) -> Permutation:
    """Check that seq is a permutation of {0..n+1} with pinned endpoints.

    n is inferred from the length.  Raises NotBijection or BadEndpoints.
    """
    elems = tuple(int(v) for v in seq)
    n = len(elems) - 2
    if n < 1:
        raise NotBijection(f"need at least 3 elements, got {len(elems)}")
    if set(elems) != set(range(n + 2)):
        raise NotBijection(f"not a bijection onto 0..{n + 1}: {elems}")
    if elems[0] != 0 or elems[-1] != n + 1:
        raise BadEndpoints(f"must start with 0 and end with {n + 1}: {elems}")
    return Permutation(n=n, elems=elems)


@dataclass(frozen=True)
class KConstraint:
    """One profile entry: the pair (t, t+i) with its segment min m and max M."""

    t: int
    i: int
    dir: Direction
    m: int
    M: int

    @property
    def interval(self) -> tuple[int, int]:
        return (self.m, self.M)


@dataclass(frozen=True)
class ProfileViolation:
    """One failed validity check, attached to the offending entry."""

    t: int
    i: int
    reason: str

    def __str__(self) -> str:
        return f"entry (t={self.t}, i={self.i}): {self.reason}"


def profile_pairs(n: int, k: int) -> list[tuple[int, int]]:
    """Admissible (t, i) pairs of an n, k profile, in canonical (i, t) order."""
    return [(t, i) for i in range(1, k + 1) for t in range(0, n + 2 - i)]


class Profile:
    """A full (t, t+i) constraint map for all gaps 1 <= i <= k.

    Structural requirements are enforced at construction: exactly one
    constraint per admissible (t, i) pair, and an undirected profile has
    every direction Unknown.  Value bounds are *not* enforced here; they
    are what validate_profile reports on.  A directed profile may carry
    Unknown entries only when produced from a set of permutations whose
    members disagree on that pair.
    """

    __slots__ = ("n", "k", "directed", "constraints")

    def __init__(self, n: int, k: int, directed: bool,
                 constraints: dict[tuple[int, int], KConstraint]):
        if not 1 <= k <= n + 1:
            raise PreconditionViolation(f"need 1 <= k <= n+1, got k={k}, n={n}")
        expected = profile_pairs(n, k)
        if set(constraints) != set(expected):
            missing = sorted(set(expected) - set(constraints))
            extra = sorted(set(constraints) - set(expected))
            raise PreconditionViolation(
                f"constraint keys do not cover the (t, i) grid "
                f"(missing {missing[:4]}, extra {extra[:4]})")
        for (t, i), c in constraints.items():
            if (c.t, c.i) != (t, i):
                raise PreconditionViolation(f"constraint at key ({t},{i}) labeled ({c.t},{c.i})")
            if not directed and c.dir is not Direction.UNKNOWN:
                raise PreconditionViolation(f"undirected profile with direction at ({t},{i})")
        self.n = n
        self.k = k
        self.directed = directed
        self.constraints = dict(constraints)

    def entry(self, t: int, i: int = 1) -> KConstraint:
        return self.constraints[(t, i)]

    def entries(self) -> list[KConstraint]:
        """All constraints in canonical (i, t) order."""
        return [self.constraints[p] for p in profile_pairs(self.n, self.k)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Profile):
            return NotImplemented
        return (self.n == other.n and self.k == other.k
                and self.directed == other.directed
                and self.constraints == other.constraints)

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Profile(n={self.n}, k={self.k}, {kind}, {len(self.constraints)} entries)"

    def to_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(m, M, dir) int8 arrays in canonical order; dir is +1/-1/0."""
        ents = self.entries()
        m = np.array([c.m for c in ents], dtype=np.int8)
        M = np.array([c.M for c in ents], dtype=np.int8)
        d = np.array([_DIR_CODE[c.dir] for c in ents], dtype=np.int8)
        return m, M, d

    def canonical_code(self) -> bytes:
        """Byte encoding suitable for grouping profiles by equality."""
        m, M, d = self.to_arrays()
        return m.tobytes() + M.tobytes() + d.tobytes()

    @classmethod
    def from_arrays(cls, n: int, k: int, directed: bool,
                    m: np.ndarray, M: np.ndarray, d: np.ndarray) -> "Profile":
        constraints = {}
        for idx, (t, i) in enumerate(profile_pairs(n, k)):
            constraints[(t, i)] = KConstraint(
                t=t, i=i, dir=_DIR_FROM_CODE[int(d[idx])],
                m=int(m[idx]), M=int(M[idx]))
        return cls(n=n, k=k, directed=directed, constraints=constraints)


_DIR_CODE = {Direction.LEFT_TO_RIGHT: 1, Direction.RIGHT_TO_LEFT: -1, Direction.UNKNOWN: 0}
_DIR_FROM_CODE = {1: Direction.LEFT_TO_RIGHT, -1: Direction.RIGHT_TO_LEFT, 0: Direction.UNKNOWN}


def _segment(P: Permutation, pos: Sequence[int], t: int, i: int) -> tuple[int, int, Direction]:
    a, b = pos[t], pos[t + i]
    lo, hi = (a, b) if a < b else (b, a)
    seg = P.elems[lo:hi + 1]
    d = Direction.LEFT_TO_RIGHT if a < b else Direction.RIGHT_TO_LEFT
    return min(seg), max(seg), d


def compute_profile(P: Permutation, k: int, directed: bool) -> Profile:
    """The k-profile of a single permutation.

    For every value pair (t, t+i) with 1 <= i <= k, records the min and max
    of the segment of P between the positions of t and t+i inclusive.
    """
    if not 1 <= k <= P.n + 1:
        raise PreconditionViolation(f"need 1 <= k <= n+1, got k={k}, n={P.n}")
    pos = P.positions()
    constraints = {}
    for t, i in profile_pairs(P.n, k):
        m, M, d = _segment(P, pos, t, i)
        if not directed:
            d = Direction.UNKNOWN
        constraints[(t, i)] = KConstraint(t=t, i=i, dir=d, m=m, M=M)
    return Profile(n=P.n, k=k, directed=directed, constraints=constraints)


def compute_set_profile(perms: Iterable[Permutation], k: int, directed: bool) -> Profile:
    """The joint k-profile of a set of permutations.

    Per entry, m and M are taken over the union of the per-permutation
    segments.  When directed, an entry keeps its direction only if all
    permutations agree on it; otherwise it is marked Unknown.
    """
    ps = list(perms)
    if not ps:
        raise PreconditionViolation("need at least one permutation")
    n = ps[0].n
    if any(p.n != n for p in ps):
        raise MismatchedN(f"permutations of mixed sizes: {sorted({p.n for p in ps})}")
    if not 1 <= k <= n + 1:
        raise PreconditionViolation(f"need 1 <= k <= n+1, got k={k}, n={n}")
    positions = [p.positions() for p in ps]
    constraints = {}
    for t, i in profile_pairs(n, k):
        per = [_segment(p, pos, t, i) for p, pos in zip(ps, positions)]
        m = min(x[0] for x in per)
        M = max(x[1] for x in per)
        dirs = {x[2] for x in per}
        d = dirs.pop() if directed and len(dirs) == 1 else Direction.UNKNOWN
        constraints[(t, i)] = KConstraint(t=t, i=i, dir=d, m=m, M=M)
    return Profile(n=n, k=k, directed=directed, constraints=constraints)


def validate_profile(F: Profile) -> list[ProfileViolation]:
    """Structural validity checks; empty list means ok.

    Checks the bound invariant 0 <= m <= t < t+i <= M <= n+1 per entry, and
    that the extreme values occur only where the fixed endpoints force them:
    m = 0 only at t = 0, M = n+1 only at t+i = n+1.  A profile violating
    the latter admits no permutation, because 0 (n+1) could not be the
    leftmost (rightmost) element.
    """
    out: list[ProfileViolation] = []
    n = F.n
    for c in F.entries():
        if not (0 <= c.m <= c.t):
            out.append(ProfileViolation(c.t, c.i, f"m={c.m} outside [0, t={c.t}]"))
        if not (c.t + c.i <= c.M <= n + 1):
            out.append(ProfileViolation(c.t, c.i, f"M={c.M} outside [t+i={c.t + c.i}, {n + 1}]"))
        if c.m == 0 and c.t != 0:
            out.append(ProfileViolation(c.t, c.i, "m=0 outside the t=0 entries"))
        if c.M == n + 1 and c.t + c.i != n + 1:
            out.append(ProfileViolation(c.t, c.i, f"M={n + 1} outside the t+i={n + 1} entries"))
    return out


def is_linear(F: Profile) -> bool:
    """Whether the intervals [m_t, M_t], 1 <= t <= n-1, form an inclusion chain.

    Equal intervals count as comparable.  Defined for k = 1 only.
    """
    if F.k != 1:
        raise KMismatch(f"linearity is defined for k=1, got k={F.k}")
    ivals = sorted(
        (F.entry(t).interval for t in range(1, F.n)),
        key=lambda mm: (mm[0], -mm[1]))
    return all(ivals[j][1] >= ivals[j + 1][1] for j in range(len(ivals) - 1))


def nb_set(F: Profile, c: int) -> set[int]:
    """NB(c): all t in 1..n-1 whose entry excludes c, i.e. c < m_t or M_t < c."""
    if F.k != 1:
        raise KMismatch(f"NB sets are defined for k=1, got k={F.k}")
    if not 1 <= c <= F.n:
        raise COutOfRange(f"need 1 <= c <= {F.n}, got {c}")
    return {t for t in range(1, F.n)
            if c < F.entry(t).m or F.entry(t).M < c}


@dataclass(frozen=True)
class BConstraintPair:
    """The two betweenness facts of one entry: m and M lie between t and t+1.

    A fact is vacuous when its subject coincides with an endpoint of the
    basis pair; vacuous facts generate no arcs.
    """

    t: int
    m: int
    M: int

    @property
    def m_vacuous(self) -> bool:
        return self.m in (self.t, self.t + 1)

    @property
    def M_vacuous(self) -> bool:
        return self.M in (self.t, self.t + 1)


@dataclass(frozen=True, order=True)
class NBRecord:
    """A non-betweenness fact: value `top` does not lie between basis values.

    The basis is the consecutive pair (t, t+1); sort order is (basis, top).
    """

    basis: tuple[int, int]
    top: int

    def __str__(self) -> str:
        return f"not({self.basis[0]} <-{self.top}-> {self.basis[1]})"


def b_constraints(F: Profile) -> list[BConstraintPair]:
    """The B-constraint pair of every gap-1 entry, ascending t."""
    if F.k != 1:
        raise KMismatch(f"B/NB decomposition is defined for k=1, got k={F.k}")
    return [BConstraintPair(t=c.t, m=c.m, M=c.M)
            for c in F.entries()]


def nb_records(F: Profile) -> list[NBRecord]:
    """All NB-constraints of a gap-1 profile, sorted by (basis, top).

    Entry t contributes one record per value outside [m_t, M_t]:
    tops 0..m_t-1 and M_t+1..n+1.
    """
    if F.k != 1:
        raise KMismatch(f"B/NB decomposition is defined for k=1, got k={F.k}")
    out = []
    for c in F.entries():
        basis = (c.t, c.t + 1)
        for top in range(0, c.m):
            out.append(NBRecord(basis=basis, top=top))
        for top in range(c.M + 1, F.n + 2):
            out.append(NBRecord(basis=basis, top=top))
    out.sort()
    return out
