"""Square-free monomial ideals and the facet / non-face correspondences.

An ideal in k[x_1, ..., x_nvars] is represented by the supports of its
minimal generators. Two complexes hang off each ideal:

* the facet complex, whose facets are the generator supports (its ground
  set is only the variables that divide some generator);
* the non-face (Stanley-Reisner) complex on all ``nvars`` variables,
  whose faces are the supports of monomials outside the ideal.

An ideal is an f-ideal when both complexes have the same f-vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .complex import (
    FVector,
    Face,
    SimplicialComplex,
    dimension,
    enumerate_faces,
    f_vector,
    make_complex,
    minimal_sets,
    void_complex,
)
from .errors import GallaiEdgeless, InvalidVariable, NoEdges, TooLarge, UnitIdeal, FormatError
from .gallai import gallai
from .graph import Graph

#: Budget on faces visited by the depth-first non-face enumeration.
NONFACE_LIMIT = 4_000_000


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple[Face, ...]

    def degrees(self) -> set[int]:
        return {len(s) for s in self.gens}

    def contains(self, support: Iterable[int]) -> bool:
        """Is the square-free monomial with this support in the ideal?"""
        s = set(support)
        return any(s.issuperset(g) for g in self.gens)


@dataclass(frozen=True)
class FIdealReport:
    is_f_ideal: bool
    facet_fvec: FVector
    nonface_fvec: FVector

    def render(self) -> str:
        return (
            f"facet   f = ({', '.join(map(str, self.facet_fvec))})\n"
            f"nonface f = ({', '.join(map(str, self.nonface_fvec))})\n"
            f"{'true' if self.is_f_ideal else 'false'}\n"
        )


def make_ideal(nvars: int, supports: Iterable[Iterable[int]]) -> MonomialIdeal:
    """Ideal generated by the given supports, reduced to a minimal generating set."""
    supports = [tuple(s) for s in supports]
    for s in supports:
        if not s:
            raise UnitIdeal("an empty support generates the whole ring")
        for v in s:
            if not 1 <= v <= nvars:
                raise InvalidVariable(f"variable {v} outside 1..{nvars}")
    return MonomialIdeal(nvars, tuple(minimal_sets(supports)))


def edge_ideal(g: Graph) -> MonomialIdeal:
    if not g.edges:
        raise NoEdges("edge ideal of an edgeless graph is zero")
    return MonomialIdeal(g.n, g.edges)


def facet_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    if not ideal.gens:
        return void_complex()
    return make_complex(ideal.gens)


def nonface_complex(ideal: MonomialIdeal, limit: int = NONFACE_LIMIT) -> SimplicialComplex:
    """Stanley-Reisner complex of ``ideal`` by exhaustive depth-first search.

    Faces are grown in increasing vertex order; a branch is cut as soon as
    the new vertex completes a generator support, which also removes every
    superset of that set. Maximal faces are kept as facets.
    """
    n = ideal.nvars
    masks = [sum(1 << (v - 1) for v in g) for g in ideal.gens]
    # generators containing v, the only ones that can be completed by adding v
    through = [[m for m in masks if m >> v & 1] for v in range(n)]

    def addable(face: int, v: int) -> bool:
        grown = face | (1 << v)
        return all(m & grown != m for m in through[v])

    facets: list[Face] = []
    visited = 0
    stack = [(0, 0)]  # (face bitmask, next vertex index)
    while stack:
        face, start = stack.pop()
        visited += 1
        if visited > limit:
            raise TooLarge(f"non-face enumeration exceeded {limit} faces")
        for v in range(n - 1, start - 1, -1):
            if not face >> v & 1 and addable(face, v):
                stack.append((face | (1 << v), v + 1))
        if face and all(face >> v & 1 or not addable(face, v) for v in range(n)):
            facets.append(tuple(v + 1 for v in range(n) if face >> v & 1))
    if not facets:
        return void_complex()
    return SimplicialComplex(frozenset(v for F in facets for v in F), tuple(sorted(facets)))


def facet_ideal(c: SimplicialComplex, nvars: int | None = None) -> MonomialIdeal:
    """Ideal generated by the facets of ``c``."""
    nvars = max(c.ground, default=0) if nvars is None else nvars
    return make_ideal(nvars, c.facets)


def nonface_ideal(c: SimplicialComplex, nvars: int | None = None) -> MonomialIdeal:
    """Stanley-Reisner ideal: generated by the minimal non-faces of ``c`` within 1..nvars."""
    nvars = max(c.ground, default=0) if nvars is None else nvars
    if any(v > nvars for v in c.ground):
        raise InvalidVariable(f"complex uses vertices beyond 1..{nvars}")
    minimal = [(v,) for v in range(1, nvars + 1) if v not in c.ground]
    faces = {F for layer in enumerate_faces(c) for F in layer}
    ground = sorted(c.ground)
    # a minimal non-face of size k has every (k-1)-subset a face, so k <= dim + 2
    for k in range(2, dimension(c) + 3):
        for cand in combinations(ground, k):
            if cand in faces:
                continue
            if all(sub in faces for sub in combinations(cand, k - 1)):
                minimal.append(cand)
    return make_ideal(nvars, minimal)


def is_f_ideal(ideal: MonomialIdeal, limit: int = NONFACE_LIMIT) -> FIdealReport:
    fac = f_vector(facet_complex(ideal))
    non = f_vector(nonface_complex(ideal, limit))
    return FIdealReport(fac == non, fac, non)


def is_f_graph(g: Graph) -> bool:
    return is_f_ideal(edge_ideal(g)).is_f_ideal


def is_f_gallai(g: Graph) -> bool:
    gg = gallai(g).graph
    if not gg.edges:
        raise GallaiEdgeless("the Gallai graph has no edges")
    return is_f_graph(gg)


# -- ideal document format -------------------------------------------------


def to_document(ideal: MonomialIdeal) -> str:
    lines = [f"{ideal.nvars} {len(ideal.gens)}"]
    lines.extend(" ".join(map(str, g)) for g in ideal.gens)
    return "\n".join(lines) + "\n"


def parse_document(text: str) -> MonomialIdeal:
    """Parse ``"nvars q"`` followed by ``q`` lines of variable indices."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise FormatError("first line must be 'nvars q'")
    try:
        nvars, q = map(int, rows[0])
        supports = [[int(x) for x in r] for r in rows[1:]]
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if len(supports) != q:
        raise FormatError(f"header announces {q} generators, found {len(supports)}")
    return make_ideal(nvars, supports)
