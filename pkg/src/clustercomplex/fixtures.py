"""Bundled Cartan-data fixtures, named by diagram type and symmetrizer."""

from __future__ import annotations

from .algebra import AlgebraData, build_algebra

# name -> (cartan, symmetrizer, arrows); vertices 0-based, source -> sink
_FIXTURES: dict[str, tuple] = {
    "a1": ([[2]], [1], []),
    "a1xa1": ([[2, 0], [0, 2]], [1, 1], []),
    "a2": ([[2, -1], [-1, 2]], [1, 1], [(0, 1)]),
    "a3": ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [1, 1, 1], [(0, 1), (1, 2)]),
    "b2": ([[2, -1], [-2, 2]], [2, 1], [(0, 1)]),
    "b3": ([[2, -1, 0], [-1, 2, -1], [0, -2, 2]], [2, 2, 1], [(0, 1), (1, 2)]),
    "c3": ([[2, -1, 0], [-1, 2, -2], [0, -1, 2]], [1, 1, 2], [(0, 1), (1, 2)]),
    "d4": ([[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
           [1, 1, 1, 1], [(0, 1), (1, 2), (1, 3)]),
    "g2": ([[2, -1], [-3, 2]], [3, 1], [(0, 1)]),
    "kronecker": ([[2, -2], [-2, 2]], [1, 1], [(0, 1)]),
    "valued15": ([[2, -1], [-5, 2]], [5, 1], [(0, 1)]),
    # representation-infinite of rank 3; only useful as a negative control
    "affine_a2": ([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], [1, 1, 1],
                  [(0, 1), (0, 2), (1, 2)]),
}

FINITE_FIXTURES = ("a1", "a1xa1", "a2", "a3", "b2", "b3", "c3", "d4", "g2")
RANK2_INFINITE_FIXTURES = ("kronecker", "valued15")


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)


def fixture(name: str) -> AlgebraData:
    key = name.lower().replace("-", "_")
    if key not in _FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(fixture_names())}")
    cartan, symmetrizer, arrows = _FIXTURES[key]
    return build_algebra(cartan, symmetrizer, arrows)
