"""Simplicial complexes given by their facets.

A complex is stored as its ground set plus the inclusion-maximal facets,
each a sorted tuple. The f-vector never counts the empty face, so the
Euler characteristic here is the ordinary (non-reduced) one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import EmptyComplex, EmptyFace, InvalidVertex, TooLarge

Face = tuple[int, ...]
FVector = tuple[int, ...]

#: Budget on the sum over facets of 2**|F|, the work done by enumerate_faces.
FACE_LIMIT = 10**7


@dataclass(frozen=True)
class SimplicialComplex:
    ground: frozenset[int]
    facets: tuple[Face, ...]

    @property
    def vertices(self) -> list[int]:
        return sorted(self.ground)

    def __contains__(self, face: Iterable[int]) -> bool:
        s = set(face)
        return any(s.issubset(F) for F in self.facets)


def maximal_sets(sets: Iterable[Iterable[int]]) -> list[Face]:
    """Inclusion-maximal members of ``sets`` as sorted tuples, deduplicated."""
    uniq = sorted({frozenset(s) for s in sets}, key=len, reverse=True)
    kept: list[frozenset[int]] = []
    for s in uniq:
        if not any(s <= t for t in kept):
            kept.append(s)
    return sorted(tuple(sorted(s)) for s in kept)


def minimal_sets(sets: Iterable[Iterable[int]]) -> list[Face]:
    """Inclusion-minimal members of ``sets`` as sorted tuples, deduplicated."""
    uniq = sorted({frozenset(s) for s in sets}, key=len)
    kept: list[frozenset[int]] = []
    for s in uniq:
        if not any(t <= s for t in kept):
            kept.append(s)
    return sorted(tuple(sorted(s)) for s in kept)


def make_complex(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex generated by ``facets``; non-maximal generators are dropped."""
    facets = [tuple(F) for F in facets]
    if not facets:
        raise EmptyComplex("a complex needs at least one facet")
    for F in facets:
        if not F:
            raise EmptyFace("facets must be nonempty")
        if any(not isinstance(v, int) or v < 1 for v in F):
            raise InvalidVertex(f"facet {F} has a non-positive vertex")
    kept = maximal_sets(facets)
    return SimplicialComplex(frozenset(v for F in kept for v in F), tuple(kept))


def void_complex() -> SimplicialComplex:
    """The complex whose only face is the empty set (f-vector ``()``)."""
    return SimplicialComplex(frozenset(), ())


def dimension(c: SimplicialComplex) -> int:
    return max((len(F) - 1 for F in c.facets), default=-1)


def is_pure(c: SimplicialComplex) -> bool:
    return len({len(F) for F in c.facets}) <= 1


def enumerate_faces(c: SimplicialComplex, limit: int = FACE_LIMIT) -> list[list[Face]]:
    """All nonempty faces, grouped so that ``result[k]`` holds the k-faces.

    Each group is sorted lexicographically.
    """
    work = sum(2 ** len(F) for F in c.facets)
    if work > limit:
        raise TooLarge(f"face enumeration needs {work} subset visits (limit {limit})")
    dim = dimension(c)
    layers: list[set[Face]] = [set() for _ in range(dim + 1)]
    for F in c.facets:
        for k in range(1, len(F) + 1):
            layers[k - 1].update(combinations(F, k))
    return [sorted(layer) for layer in layers]


def f_vector(c: SimplicialComplex, limit: int = FACE_LIMIT) -> FVector:
    return tuple(len(layer) for layer in enumerate_faces(c, limit))


def euler_characteristic(fvec: Iterable[int]) -> int:
    return sum((-1) ** k * f for k, f in enumerate(fvec))


def format_fvector(fvec: FVector) -> str:
    return f"f = ({', '.join(map(str, fvec))}), chi = {euler_characteristic(fvec)}"


def facet_document(c: SimplicialComplex) -> str:
    """One facet per line, vertices space-separated and sorted."""
    return "".join(" ".join(map(str, F)) + "\n" for F in c.facets)
