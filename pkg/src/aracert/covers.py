"""Minimal vertex covers, i.e. the minimal primes of a facet ideal, and the
height / big height read off from them."""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .complexes import SimplicialComplex, from_mask, monomial_key, to_mask
from .errors import AraError, CapExceeded

ORACLE_CAP = 22


def cover_key(cover):
    return (len(cover), monomial_key(cover))


def is_vertex_cover(delta: SimplicialComplex, A) -> bool:
    """True when every facet of ``delta`` meets ``A`` (labels or ordinals)."""
    A = _as_ordinals(delta, A)
    return all(f & A for f in delta.facets)


def _as_ordinals(delta, A) -> frozenset:
    out = set()
    for a in A:
        if isinstance(a, str):
            out.add(delta.vertices.ordinal(a))
        elif isinstance(a, int) and 0 <= a < delta.n_vertices:
            out.add(a)
        else:
            raise AraError(f"unknown vertex {a!r}")
    return frozenset(out)


def minimal_vertex_covers(delta: SimplicialComplex, backend=None) -> list[frozenset]:
    """All minimal vertex covers, sorted by size then by ordinals."""
    masks = [to_mask(f) for f in delta.facets]
    found = _kernels.minimal_transversals(masks, delta.n_vertices, backend=backend)
    return sorted((from_mask(m) for m in found), key=cover_key)


def minimal_vertex_covers_oracle(delta: SimplicialComplex) -> list[frozenset]:
    """Exhaustive-subset reference for :func:`minimal_vertex_covers` (tests only)."""
    import numpy as np

    n = delta.n_vertices
    if n > ORACLE_CAP:
        raise CapExceeded(f"oracle handles at most {ORACLE_CAP} vertices, got {n}")
    subsets = np.arange(1 << n, dtype=np.int64)
    covering = np.ones(1 << n, dtype=bool)
    for f in delta.facets:
        covering &= (subsets & to_mask(f)) != 0
    minimal = covering.copy()
    for v in range(n):
        has_v = (subsets >> v) & 1 == 1
        without = subsets ^ (1 << v)
        minimal &= ~(has_v & covering[without])
    return sorted((from_mask(int(s)) for s in np.flatnonzero(minimal)), key=cover_key)


@dataclass(frozen=True)
class CoverSummary:
    covers: tuple[frozenset, ...]
    height: int
    bight: int
    unmixed: bool

    def to_json(self, vertices) -> dict:
        return {
            "covers": [vertices.labels(c) for c in self.covers],
            "height": self.height,
            "bight": self.bight,
            "unmixed": self.unmixed,
        }


def cover_summary(delta: SimplicialComplex, backend=None) -> CoverSummary:
    covers = minimal_vertex_covers(delta, backend=backend)
    sizes = [len(c) for c in covers]
    return CoverSummary(tuple(covers), min(sizes), max(sizes), min(sizes) == max(sizes))
