"""Hom/ext lengths between catalog members, rigidity, and support.

Between distinct members of a finite catalog at most one of hom and ext is
nonzero, so the pair is recovered from the sign of b = <x, y>.  In the
infinite rank-2 case the same rule applies within each family; across
families there are no maps backward (forward member to backward member has
ext 0, the reverse has hom 0), which the oracle asserts at build time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .algebra import euler_form
from .errors import MixedCatalogs, NotFiniteType, OracleViolation, UnknownId
from .roots import FINITE, PREINJ, PREPROJ, Indec, RootCatalog


def _pair(catalog: RootCatalog, x: Indec, y: Indec) -> tuple[int, int]:
    b = euler_form(catalog.algebra, x.dimv, y.dimv)
    if x.id == y.id:
        result = (x.q, 0)
    elif catalog.kind == FINITE or x.component == y.component:
        result = (max(b, 0), max(-b, 0))
    elif x.component == PREPROJ and y.component == PREINJ:
        if b < 0:
            raise OracleViolation(f"forward-to-backward pairing {x.dimv} -> {y.dimv} is {b} < 0")
        result = (b, 0)
    elif x.component == PREINJ and y.component == PREPROJ:
        if b > 0:
            raise OracleViolation(f"backward-to-forward pairing {x.dimv} -> {y.dimv} is {b} > 0")
        result = (0, -b)
    else:
        raise OracleViolation(f"untagged members {x.dimv}, {y.dimv} in infinite catalog")
    assert result[0] - result[1] == b
    return result


def _tables(catalog: RootCatalog) -> list[list[tuple[int, int]]]:
    if catalog._homext is None:
        es = catalog.entries
        catalog._homext = [[_pair(catalog, x, y) for y in es] for x in es]
    return catalog._homext


def _check_member(catalog: RootCatalog, x: Indec) -> None:
    if not (0 <= x.id < len(catalog.entries)) or catalog.entries[x.id] is not x:
        raise MixedCatalogs(f"{x} does not belong to this catalog")


def hom_ext(catalog: RootCatalog, x: Indec, y: Indec) -> tuple[int, int]:
    """(hom length, ext length) for the ordered pair (x, y)."""
    _check_member(catalog, x)
    _check_member(catalog, y)
    return _tables(catalog)[x.id][y.id]


def ext_of(catalog: RootCatalog, i: int, j: int) -> int:
    return _tables(catalog)[i][j][1]


def _validate_ids(catalog: RootCatalog, ids: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(set(ids)))
    for i in out:
        if not (0 <= i < len(catalog.entries)):
            raise UnknownId(f"no catalog member with id {i}")
    return out


def is_rigid(catalog: RootCatalog, ids: Iterable[int]) -> bool:
    """True when ext vanishes for every ordered pair (self-pairs are free)."""
    members = _validate_ids(catalog, ids)
    table = _tables(catalog)
    return all(table[i][j][1] == 0 for i in members for j in members)


def support(catalog: RootCatalog, ids: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    """(supported vertices, complementary vertices) of a set of members."""
    members = _validate_ids(catalog, ids)
    supp = frozenset(v for i in members for v, c in enumerate(catalog.entries[i].dimv) if c > 0)
    sigma = frozenset(range(catalog.algebra.n)) - supp
    return supp, sigma


def iter_rigid_sets(catalog: RootCatalog,
                    within: frozenset[int] | None = None,
                    max_size: int | None = None):
    """Yield every rigid subset (as a sorted id tuple), the empty set included.

    `within` restricts to members supported inside the given vertex set.
    Sets larger than the algebra rank cannot be rigid and are never produced.
    """
    n = catalog.algebra.n
    cap = n if max_size is None else min(max_size, n)
    table = _tables(catalog)
    if within is None:
        pool = list(range(len(catalog.entries)))
    else:
        pool = [e.id for e in catalog.entries
                if all(c == 0 for v, c in enumerate(e.dimv) if v not in within)]

    def compatible(i: int, j: int) -> bool:
        return table[i][j][1] == 0 and table[j][i][1] == 0

    stack: list[int] = []

    def extend(start: int):
        yield tuple(stack)
        if len(stack) == cap:
            return
        for k in range(start, len(pool)):
            cand = pool[k]
            if all(compatible(m, cand) for m in stack):
                stack.append(cand)
                yield from extend(k + 1)
                stack.pop()

    yield from extend(0)


@dataclass
class UniquenessReport:
    """Result of the dimension-vector uniqueness sweep."""

    ok: bool
    checked: int
    collisions: list[tuple]


def rigid_dimv_unique(catalog: RootCatalog, bound: int = 2) -> UniquenessReport:
    """No two distinct rigid multiplicity combinations share a total dimension vector.

    Every rigid id set is expanded with all multiplicities in 1..bound per
    member; the total dimension vectors must be pairwise distinct.
    """
    if catalog.kind != FINITE:
        raise NotFiniteType("uniqueness sweep requires a finite catalog")
    n = catalog.algebra.n
    totals: dict[tuple, tuple] = {}
    collisions = []
    checked = 0
    for ids in iter_rigid_sets(catalog):
        if not ids:
            continue
        mults = [1] * len(ids)
        while True:
            total = tuple(sum(m * catalog.entries[i].dimv[k] for m, i in zip(mults, ids))
                          for k in range(n))
            key = tuple(zip(ids, mults))
            if total in totals and totals[total] != key:
                collisions.append((totals[total], key, total))
            else:
                totals[total] = key
            checked += 1
            pos = 0
            while pos < len(mults) and mults[pos] == bound:
                mults[pos] = 1
                pos += 1
            if pos == len(mults):
                break
            mults[pos] += 1
    return UniquenessReport(ok=not collisions, checked=checked, collisions=collisions)


def independent_dimvs(catalog: RootCatalog, ids: Sequence[int]) -> bool:
    """Exact rank check: the members' dimension vectors are linearly independent."""
    members = _validate_ids(catalog, ids)
    if not members:
        return True
    vectors = [catalog.entries[i].dimv for i in members]
    return linalg.rank(vectors) == len(vectors)
