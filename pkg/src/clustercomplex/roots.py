"""Catalogs of exceptional dimension vectors.

Two regimes are supported: representation-finite algebras of any rank, where
the catalog is the full set of positive roots, and representation-infinite
rank-2 algebras, where the catalog is a window of the two one-parameter
families obtained by repeatedly shifting the projectives forward and the
injectives backward.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .algebra import (
    AlgebraData,
    DimVector,
    euler_form,
    injective_dimv,
    length,
    projective_dimv,
    unit_vector,
)
from .errors import (
    NotFiniteType,
    NotRankTwo,
    OracleViolation,
    SearchLimitExceeded,
    UnsupportedAlgebra,
)

FINITE = "finite"
RANK2_INFINITE = "rank2-infinite"
UNSUPPORTED = "unsupported"

PREPROJ = "preproj"
PREINJ = "preinj"

ROOT_LIMIT = 10 ** 6


@dataclass(frozen=True)
class Indec:
    """Numerical stand-in for an exceptional indecomposable.

    q is the self-pairing <dimv, dimv>, the length of the endomorphism
    skew-field.  component/t/vertex tag the twist orbit: ("preproj", t, i)
    stands for the t-th forward shift of the i-th projective, ("preinj", t, i)
    for the t-th backward shift of the i-th injective.
    """

    id: int
    dimv: DimVector
    q: int
    component: str | None = None
    t: int | None = None
    vertex: int | None = None


@dataclass
class RootCatalog:
    """Ordered, immutable-by-convention list of Indec entries."""

    kind: str
    algebra: AlgebraData
    entries: tuple[Indec, ...]
    cutoff: int | None = None
    _by_dimv: dict | None = field(default=None, repr=False, compare=False)
    _homext: list | None = field(default=None, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def by_dimv(self) -> dict[DimVector, Indec]:
        if self._by_dimv is None:
            self._by_dimv = {e.dimv: e for e in self.entries}
        return self._by_dimv

    def dimvs(self) -> list[DimVector]:
        return [e.dimv for e in self.entries]


def simple_reflection(algebra: AlgebraData, i: int, x: Sequence[int]) -> DimVector:
    """Reflect x in the i-th coordinate: only x_i changes, by sum_j c_ij x_j."""
    shift = sum(algebra.cartan[i][j] * x[j] for j in range(algebra.n))
    return tuple(c - shift if k == i else c for k, c in enumerate(x))


def symmetrized_form(algebra: AlgebraData, x: Sequence[int], y: Sequence[int]) -> int:
    """<x, y> + <y, x>; invariant under every simple reflection."""
    return euler_form(algebra, x, y) + euler_form(algebra, y, x)


def classify_type(algebra: AlgebraData) -> str:
    """FINITE, RANK2_INFINITE, or UNSUPPORTED.

    Finiteness is detected by positive definiteness of diag(u) * C, which is
    orientation-independent.
    """
    sym = [[algebra.symmetrizer[i] * algebra.cartan[i][j] for j in range(algebra.n)]
           for i in range(algebra.n)]
    if linalg.is_positive_definite(sym):
        return FINITE
    if algebra.n == 2 and algebra.cartan[0][1] * algebra.cartan[1][0] >= 4:
        return RANK2_INFINITE
    return UNSUPPORTED


def positive_roots(algebra: AlgebraData) -> RootCatalog:
    """All positive roots, as the reflection closure of the unit vectors.

    Entries are sorted by (length, coordinates) and get ids in that order.
    """
    if classify_type(algebra) != FINITE:
        raise NotFiniteType("positive_roots requires a representation-finite algebra")
    n = algebra.n
    orbit: dict[DimVector, int] = {}
    queue: deque[DimVector] = deque()
    for i in range(n):
        e = unit_vector(n, i)
        orbit[e] = i
        queue.append(e)
    while queue:
        x = queue.popleft()
        for i in range(n):
            y = simple_reflection(algebra, i, x)
            if y not in orbit and all(c >= 0 for c in y):
                orbit[y] = orbit[x]
                queue.append(y)
                if len(orbit) > ROOT_LIMIT:
                    raise SearchLimitExceeded(f"more than {ROOT_LIMIT} root candidates")
    roots = sorted(orbit, key=lambda v: (length(algebra, v), v))
    entries = []
    for idx, dimv in enumerate(roots):
        q = euler_form(algebra, dimv, dimv)
        expected = algebra.symmetrizer[orbit[dimv]]
        if q != expected:
            raise OracleViolation(f"root {dimv} has q = {q}, expected {expected}")
        entries.append(Indec(id=idx, dimv=dimv, q=q))
    return RootCatalog(kind=FINITE, algebra=algebra, entries=tuple(entries))


def _rank2_roles(algebra: AlgebraData) -> tuple[int, int]:
    """(source, sink) of the unique arrow; (0, 1) when there is no arrow."""
    if algebra.arrows:
        ((src, snk),) = algebra.arrows
        return src, snk
    return 0, 1


def _chain(seed0: DimVector, seed1: DimVector, mult0: int, mult1: int, steps: int) -> list[DimVector]:
    """Alternating two-term recurrence next = m * last - second_last.

    The multiplier alternates: terms at even positions (like seed0) use mult0,
    terms at odd positions use mult1.  Stops at the first vector with a
    negative or all-zero coordinate pattern, or after `steps` terms.
    """
    out = [seed0, seed1]
    while len(out) < steps:
        mult = mult0 if len(out) % 2 == 0 else mult1
        nxt = tuple(mult * a - b for a, b in zip(out[-1], out[-2]))
        if any(c < 0 for c in nxt) or all(c == 0 for c in nxt):
            break
        out.append(nxt)
    return out[:steps]


def rank2_sequences(algebra: AlgebraData, t_max: int) -> RootCatalog:
    """Shift orbits of the projectives and injectives of a rank-2 algebra.

    Writing src -> snk for the arrow, the forward family starts at
    P(snk), P(src) and satisfies

        next snk-term = r * (last src-term) - (previous snk-term)
        next src-term = s * (last snk-term) - (previous src-term)

    with r = -c[src][snk] and s = -c[snk][src]; the backward family starts at
    I(src), I(snk) with the roles of r, s and of the two vertices swapped.
    In the finite case the two families exhaust each other and the merged
    catalog is the set of positive roots, kept here in quiver order.  In the
    infinite case they stay disjoint and each term is tagged with its family.
    """
    if algebra.n != 2:
        raise NotRankTwo("rank2_sequences requires exactly two vertices")
    if t_max < 0:
        raise ValueError("t_max must be non-negative")
    kind = classify_type(algebra)
    src, snk = _rank2_roles(algebra)
    r = -algebra.cartan[src][snk]
    s = -algebra.cartan[snk][src]
    steps = 2 * (t_max + 1)

    prep = _chain(projective_dimv(algebra, snk), projective_dimv(algebra, src), r, s, steps)
    prei = _chain(injective_dimv(algebra, src), injective_dimv(algebra, snk), s, r, steps)

    def make(idx: int, dimv: DimVector, comp: str, pos: int, even_vertex: int, odd_vertex: int) -> Indec:
        vertex = even_vertex if pos % 2 == 0 else odd_vertex
        q = euler_form(algebra, dimv, dimv)
        if q != algebra.symmetrizer[vertex]:
            raise OracleViolation(f"{comp} term {dimv} has q = {q}, "
                                  f"expected u[{vertex}] = {algebra.symmetrizer[vertex]}")
        return Indec(id=idx, dimv=dimv, q=q, component=comp, t=pos // 2, vertex=vertex)

    entries: list[Indec] = []
    for pos, dimv in enumerate(prep):
        entries.append(make(len(entries), dimv, PREPROJ, pos, snk, src))
    if kind == FINITE:
        known = {e.dimv for e in entries}
        for pos in range(len(prei) - 1, -1, -1):
            if prei[pos] not in known:
                entries.append(make(len(entries), prei[pos], PREINJ, pos, src, snk))
        return RootCatalog(kind=FINITE, algebra=algebra, entries=tuple(entries), cutoff=t_max)
    forward = {e.dimv for e in entries}
    for pos in range(len(prei) - 1, -1, -1):
        if prei[pos] in forward:
            raise OracleViolation(f"families intersect at {prei[pos]} although rs >= 4")
        entries.append(make(len(entries), prei[pos], PREINJ, pos, src, snk))
    return RootCatalog(kind=RANK2_INFINITE, algebra=algebra, entries=tuple(entries), cutoff=t_max)


def catalog_for(algebra: AlgebraData, t_max: int = 10) -> RootCatalog:
    """Dispatch on the algebra type; raises UnsupportedAlgebra outside scope."""
    kind = classify_type(algebra)
    if kind == FINITE:
        return positive_roots(algebra)
    if kind == RANK2_INFINITE:
        return rank2_sequences(algebra, t_max)
    raise UnsupportedAlgebra("representation-infinite of rank >= 3")
