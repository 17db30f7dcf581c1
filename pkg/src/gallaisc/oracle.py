"""Closed-form answers for the triangular ladder and the prism.

These are written out by hand from explicit index ranges and never call
the Gallai machinery; tests compare them against the computed pipeline.
Vertex labels follow :func:`gallaisc.generators.triangular_ladder` and
:func:`gallaisc.generators.prism`.
"""

from __future__ import annotations

from .errors import InvalidParameter

Face = tuple[int, ...]


def _tri(*vs: int) -> Face:
    return tuple(sorted(vs))


def _check(n: int) -> None:
    if n < 3:
        raise InvalidParameter(f"closed forms hold for n >= 3, got {n}")


def omega_triangular_ladder(n: int) -> set[Face]:
    _check(n)
    # consecutive triples along the boundary 2n-path, minus the two that close a triangle
    omega = {_tri(i, i + 1, i + 2) for i in range(1, 2 * n - 1)}
    omega -= {_tri(n - 1, n, n + 1), _tri(2 * n - 1, 2 * n, 1)}
    omega |= {_tri(i, i + 1, 2 * n + 1 - i) for i in range(1, n)}
    omega |= {_tri(i, i + 1, 2 * n - 1 - i) for i in range(1, n - 1)}
    omega |= {_tri(i, 2 * n - 1 - i, 2 * n - i) for i in range(1, n - 1)}
    omega |= {_tri(i, 2 * n + 1 - i, 2 * n + 2 - i) for i in range(2, n)}
    return omega


def omega_prism(n: int) -> set[Face]:
    _check(n)
    omega: set[Face] = set()
    for j in range(4, 3 * n):
        if j % 3:
            omega |= {_tri(j, j + 1, j - 3), _tri(j, j + 1, j - 2)}
    for j in range(1, 3 * n - 3):
        if j % 3:
            omega |= {_tri(j, j + 1, j + 3), _tri(j, j + 1, j + 4)}
    for j in range(2, n + 1):
        omega |= {_tri(3 * j, 3 * j - 2, 3 * j - 3), _tri(3 * j, 3 * j - 2, 3 * j - 5)}
    for j in range(1, n):
        omega |= {_tri(3 * j, 3 * j - 2, 3 * j + 3), _tri(3 * j, 3 * j - 2, 3 * j + 1)}
    omega |= {_tri(j, j + 3, j + 6) for j in range(1, 3 * n - 5)}
    return omega


def fvec_triangular_ladder(n: int) -> tuple[int, int, int]:
    _check(n)
    return (2 * n, 8 * n - 10, 6 * n - 10)


def fvec_prism(n: int) -> tuple[int, int, int]:
    _check(n)
    return (3 * n, 15 * n - 15, 15 * n - 18)


ORACLES = {
    "omega-triangular-ladder": omega_triangular_ladder,
    "omega-prism": omega_prism,
    "fvec-triangular-ladder": fvec_triangular_ladder,
    "fvec-prism": fvec_prism,
}
