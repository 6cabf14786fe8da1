"""Symmetrizable Cartan data with an acyclic orientation, and its Euler form.

An algebra is described entirely by three pieces of integer data: a
symmetrizable generalized Cartan matrix C, a symmetrizer u of positive
integers, and an acyclic arrow set.  The Euler matrix E is derived from
them: E[i][i] = u[i], E[i][j] = c_ij * u_i for an arrow (i, j), and 0
elsewhere.  Dimension vectors are plain tuples of ints; the bilinear form
<x, y> = x^T E y plays the role of hom-length minus ext-length.

Vertices are 0-based everywhere in this package; JSON input and output use
1-based labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    ArrowWithoutEntry,
    CyclicOrientation,
    DimensionMismatch,
    NegativeCoordinate,
    NonIntegralSolution,
    NotSymmetrizable,
    ParseError,
)

DimVector = tuple[int, ...]


@dataclass(frozen=True)
class AlgebraData:
    """Validated Cartan data.  Immutable; all operations on it are pure."""

    n: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    arrows: frozenset[tuple[int, int]]
    euler: tuple[tuple[int, ...], ...]


def build_algebra(cartan: Sequence[Sequence[int]],
                  symmetrizer: Sequence[int],
                  arrows: Iterable[tuple[int, int]]) -> AlgebraData:
    """Validate Cartan matrix, symmetrizer and orientation; compute the Euler matrix."""
    c = tuple(tuple(int(x) for x in row) for row in cartan)
    u = tuple(int(x) for x in symmetrizer)
    n = len(c)
    if len(u) != n or any(len(row) != n for row in c):
        raise DimensionMismatch(f"inconsistent shapes: C is {len(c)} rows, u has {len(u)} entries")
    for i in range(n):
        if c[i][i] != 2:
            raise ValueError(f"c[{i}][{i}] = {c[i][i]}, diagonal entries must be 2")
        for j in range(n):
            if i != j and c[i][j] > 0:
                raise ValueError(f"c[{i}][{j}] = {c[i][j]}, off-diagonal entries must be <= 0")
        if u[i] < 1:
            raise ValueError(f"symmetrizer entry u[{i}] = {u[i]} must be positive")
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] * c[i][j] != u[j] * c[j][i]:
                raise NotSymmetrizable(
                    f"u[{i}]*c[{i}][{j}] = {u[i] * c[i][j]} != {u[j] * c[j][i]} = u[{j}]*c[{j}][{i}]")

    arrow_set = frozenset((int(a), int(b)) for a, b in arrows)
    for (i, j) in arrow_set:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ValueError(f"invalid arrow ({i}, {j})")
        if c[i][j] == 0:
            raise ArrowWithoutEntry(f"arrow ({i}, {j}) but c[{i}][{j}] = 0")
    for i in range(n):
        for j in range(i + 1, n):
            if c[i][j] < 0 and (i, j) not in arrow_set and (j, i) not in arrow_set:
                raise ValueError(f"c[{i}][{j}] < 0 but no arrow between {i} and {j}")

    _check_acyclic(n, arrow_set)

    euler = tuple(
        tuple(u[i] if i == j else (c[i][j] * u[i] if (i, j) in arrow_set else 0)
              for j in range(n))
        for i in range(n))
    return AlgebraData(n=n, cartan=c, symmetrizer=u, arrows=arrow_set, euler=euler)


def _check_acyclic(n: int, arrows: frozenset[tuple[int, int]]) -> None:
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for (i, j) in arrows:
        out[i].append(j)
        indeg[j] += 1
    queue = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if seen != n:
        raise CyclicOrientation("orientation contains an oriented cycle")


def euler_form(algebra: AlgebraData, x: Sequence[int], y: Sequence[int]) -> int:
    """The bilinear form x^T E y."""
    if len(x) != algebra.n or len(y) != algebra.n:
        raise DimensionMismatch(f"expected {algebra.n} coordinates")
    e = algebra.euler
    return sum(x[i] * e[i][j] * y[j]
               for i in range(algebra.n) for j in range(algebra.n) if e[i][j])


def length(algebra: AlgebraData, x: Sequence[int]) -> int:
    """Total length sum_i u_i * x_i of a non-negative dimension vector."""
    if len(x) != algebra.n:
        raise DimensionMismatch(f"expected {algebra.n} coordinates")
    if any(c < 0 for c in x):
        raise NegativeCoordinate(f"negative coordinate in {tuple(x)}")
    return sum(u * c for u, c in zip(algebra.symmetrizer, x))


def restrict(algebra: AlgebraData, sigma: Iterable[int]) -> AlgebraData:
    """Delete the vertices in sigma; the result is again valid Cartan data.

    The remaining vertices are renumbered in increasing order.
    """
    drop = set(sigma)
    kept = [v for v in range(algebra.n) if v not in drop]
    index = {v: k for k, v in enumerate(kept)}
    cartan = [[algebra.cartan[a][b] for b in kept] for a in kept]
    symm = [algebra.symmetrizer[v] for v in kept]
    arrows = [(index[a], index[b]) for (a, b) in algebra.arrows if a in index and b in index]
    return build_algebra(cartan, symm, arrows)


def unit_vector(n: int, i: int) -> DimVector:
    return tuple(1 if k == i else 0 for k in range(n))


def format_dimv(dimv: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in dimv) + ")"


def _solve_dimv(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> DimVector:
    sol = linalg.solve_square(matrix, rhs)
    if sol is None or any(c.denominator != 1 or c < 0 for c in sol):
        raise NonIntegralSolution(f"no non-negative integral solution for rhs {tuple(rhs)}")
    return tuple(int(c) for c in sol)


def projective_dimv(algebra: AlgebraData, i: int) -> DimVector:
    """Dimension vector p_i with <p_i, e_j> = delta_ij * u_i; solves E^T p = u_i e_i."""
    n = algebra.n
    transpose = [[algebra.euler[r][c] for r in range(n)] for c in range(n)]
    rhs = [algebra.symmetrizer[i] if k == i else 0 for k in range(n)]
    return _solve_dimv(transpose, rhs)


def injective_dimv(algebra: AlgebraData, i: int) -> DimVector:
    """Dimension vector q_i with <e_j, q_i> = delta_ij * u_i; solves E q = u_i e_i."""
    rhs = [algebra.symmetrizer[i] if k == i else 0 for k in range(algebra.n)]
    return _solve_dimv(algebra.euler, rhs)


def components(algebra: AlgebraData) -> list[tuple[int, ...]]:
    """Connected components of the underlying diagram (nonzero Cartan couplings)."""
    seen: set[int] = set()
    comps = []
    for start in range(algebra.n):
        if start in seen:
            continue
        stack = [start]
        comp = set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            for w in range(algebra.n):
                if w != v and algebra.cartan[v][w] != 0 and w not in comp:
                    stack.append(w)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(algebra: AlgebraData) -> bool:
    return len(components(algebra)) <= 1


# -- JSON interchange --------------------------------------------------------
#
# {"n": 2, "cartan": [[2,-1],[-3,2]], "symmetrizer": [3,1], "arrows": [[1,2]]}
# with 1-based vertex labels.

def algebra_to_dict(algebra: AlgebraData) -> dict:
    return {
        "n": algebra.n,
        "cartan": [list(row) for row in algebra.cartan],
        "symmetrizer": list(algebra.symmetrizer),
        "arrows": sorted([a + 1, b + 1] for (a, b) in algebra.arrows),
    }


def algebra_from_dict(data: dict) -> AlgebraData:
    try:
        cartan = data["cartan"]
        symmetrizer = data["symmetrizer"]
        arrows = [(int(a) - 1, int(b) - 1) for a, b in data.get("arrows", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed algebra data: {exc}") from exc
    if "n" in data and int(data["n"]) != len(cartan):
        raise ParseError(f"declared n = {data['n']} but cartan has {len(cartan)} rows")
    return build_algebra(cartan, symmetrizer, arrows)


def load_algebra(path: str) -> AlgebraData:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read algebra from {path}: {exc}") from exc
    return algebra_from_dict(data)
