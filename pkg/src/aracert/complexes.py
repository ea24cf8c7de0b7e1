"""Vertices, squarefree monomials, simplicial complexes and their constructions.

A squarefree monomial is stored as a ``frozenset`` of vertex ordinals (its
support). Ordinals index into a :class:`VertexTable`; the ordinal order is
the variable order every generator ordering is built from.

Constructors that attach new vertices (whiskers, grafted facets) place the
base vertices first, in input order, followed by the fresh vertices grouped
by the base vertex or block they belong to.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import AraError

Monomial = frozenset


def monomial_key(m: Iterable[int]) -> tuple[int, ...]:
    """Canonical sort key: the increasing ordinal sequence of the support."""
    return tuple(sorted(m))


def to_mask(m: Iterable[int]) -> int:
    mask = 0
    for v in m:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


@dataclass(frozen=True)
class VertexTable:
    names: tuple[str, ...]
    index: Mapping[str, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        index = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise AraError(f"vertex labels must be nonempty strings, got {name!r}")
            if name in index:
                raise AraError(f"duplicate vertex label {name!r}")
            index[name] = i
        object.__setattr__(self, "index", index)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, label):
        return label in self.index

    def ordinal(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise AraError(f"unknown vertex {label!r}") from None

    def monomial(self, labels: Iterable[str]) -> frozenset:
        return frozenset(self.ordinal(x) for x in labels)

    def labels(self, m: Iterable[int]) -> list[str]:
        return [self.names[v] for v in sorted(m)]

    def render(self, m: Iterable[int]) -> str:
        return "*".join(self.labels(m))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets; a graph when every facet has two vertices.

    ``meta`` records how the complex was built (``kind``, ``n_base`` and the
    family parameters).  The generator orderings used for certification read
    it; it survives JSON round trips under the ``construction`` key.
    """

    vertices: VertexTable
    facets: tuple[frozenset, ...]
    meta: dict = field(default_factory=dict, hash=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_graph(self) -> bool:
        return all(len(f) == 2 for f in self.facets)

    @property
    def n_base(self) -> int:
        return self.meta.get("n_base", self.n_vertices)

    def facet_labels(self) -> list[list[str]]:
        return [self.vertices.labels(f) for f in self.facets]

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(self.n_vertices)}
        for f in self.facets:
            for a in f:
                adj[a].update(f - {a})
        return adj

    def check(self):
        """Raise ``AraError`` unless the facets are valid and pairwise incomparable."""
        n = self.n_vertices
        for f in self.facets:
            if not f:
                raise AraError("empty facet")
            if min(f) < 0 or max(f) >= n:
                raise AraError(f"facet {sorted(f)} references an unknown vertex")
        for i, f in enumerate(self.facets):
            for j, g in enumerate(self.facets):
                if i != j and f <= g:
                    raise AraError(f"facet {self.vertices.labels(f)} is not maximal")
        return self

    def to_json(self) -> dict:
        out = {"vertices": list(self.vertices.names), "facets": self.facet_labels()}
        if self.meta:
            out["construction"] = dict(self.meta)
        return out

    @classmethod
    def from_json(cls, data) -> "SimplicialComplex":
        if not isinstance(data, dict) or "vertices" not in data or "facets" not in data:
            raise AraError("complex JSON needs 'vertices' and 'facets'")
        table = VertexTable(tuple(data["vertices"]))
        facets = [_label_facet(table, f) for f in data["facets"]]
        return _make_complex(table, facets, data.get("construction") or {})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _label_facet(table: VertexTable, labels) -> frozenset:
    labels = list(labels)
    if not labels:
        raise AraError("empty facet")
    return table.monomial(labels)


def _make_complex(table: VertexTable, facets: Iterable[frozenset], meta=None) -> SimplicialComplex:
    facets = {frozenset(f) for f in facets}
    for f in facets:
        if not f:
            raise AraError("empty facet")
    maximal = [f for f in facets if not any(f < g for g in facets)]
    maximal.sort(key=monomial_key)
    return SimplicialComplex(table, tuple(maximal), dict(meta or {})).check()


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal held by its minimal generators."""

    ambient: VertexTable
    generators: tuple[frozenset, ...]

    def __post_init__(self):
        gens = tuple(frozenset(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if len(set(gens)) != len(gens):
            raise AraError("duplicate generators")
        n = len(self.ambient)
        for g in gens:
            if not g:
                raise AraError("empty generator")
            if min(g) < 0 or max(g) >= n:
                raise AraError("generator references an unknown vertex")
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i != j and g <= h:
                    raise AraError(
                        f"{self.ambient.render(g)} divides {self.ambient.render(h)}; "
                        "generators must be minimal"
                    )

    def __len__(self):
        return len(self.generators)

    def render(self) -> list[str]:
        return [self.ambient.render(g) for g in self.generators]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.ambient.names),
            "generators": [self.ambient.labels(g) for g in self.generators],
        }


def build_complex(labels: Sequence[str], facets: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Complex on ``labels`` whose facets are the maximal sets among ``facets``."""
    table = VertexTable(tuple(labels))
    return _make_complex(table, [_label_facet(table, f) for f in facets])


def cycle_graph(n: int) -> SimplicialComplex:
    if n < 3:
        raise AraError("n must be ≥ 3")
    table = VertexTable(tuple(f"x{i}" for i in range(1, n + 1)))
    edges = [frozenset({i, (i + 1) % n}) for i in range(n)]
    return _make_complex(table, edges, {"kind": "cycle", "n": n})


def path_graph(n: int) -> SimplicialComplex:
    if n < 1:
        raise AraError("n must be ≥ 1")
    table = VertexTable(tuple(f"x{i}" for i in range(1, n + 1)))
    return _make_complex(table, [frozenset({i, i + 1}) for i in range(n - 1)])


def _require_graph(G: SimplicialComplex):
    for f in G.facets:
        if len(f) != 2:
            raise AraError(f"facet {G.vertices.labels(f)} is not an edge")


def edge_ideal(G: SimplicialComplex) -> MonomialIdeal:
    _require_graph(G)
    return MonomialIdeal(G.vertices, G.facets)


def facet_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal(delta.vertices, delta.facets)


def _fresh(taken: set, preferred: str) -> str:
    label = preferred
    while label in taken:
        label += "'"
    taken.add(label)
    return label


def _blocks(G: SimplicialComplex, partition, allow_empty=False) -> list[frozenset]:
    blocks = []
    seen = set()
    for block in partition:
        b = G.vertices.monomial(block)
        if not b and not allow_empty:
            raise AraError("empty block in partition")
        if b & seen:
            labels = G.vertices.labels(b & seen)
            raise AraError(f"partition blocks overlap at {labels}")
        seen |= b
        blocks.append(b)
    missing = set(range(G.n_vertices)) - seen
    if missing:
        raise AraError(f"partition does not cover {G.vertices.labels(missing)}")
    return blocks


def _whisker_blocks(G, blocks, kind_meta) -> SimplicialComplex:
    taken = set(G.vertices.names)
    names = list(G.vertices.names)
    facets = list(G.facets)
    for i, b in enumerate(blocks, start=1):
        w = len(names)
        names.append(_fresh(taken, f"y{i}"))
        facets.extend(frozenset({v, w}) for v in b)
    meta = {"kind": "whisker", "n_base": G.n_vertices,
            "blocks": [G.vertices.labels(b) for b in blocks]}
    meta.update(kind_meta)
    return _make_complex(VertexTable(tuple(names)), facets, meta)


def partition_whisker(G: SimplicialComplex, partition) -> SimplicialComplex:
    """Join one new vertex ``y_i`` to every vertex of block ``W_i`` of a vertex partition."""
    _require_graph(G)
    return _whisker_blocks(G, _blocks(G, partition), {})


def is_clique(G: SimplicialComplex, vertices: Iterable[int]) -> bool:
    adj = G.adjacency()
    vs = list(vertices)
    return all(b in adj[a] for i, a in enumerate(vs) for b in vs[i + 1:])


def clique_whisker(G: SimplicialComplex, partition, allow_empty: bool = False) -> SimplicialComplex:
    """Fully clique-whiskered graph over a clique vertex-partition.

    An empty block (only with ``allow_empty``) contributes an isolated vertex.
    """
    _require_graph(G)
    blocks = _blocks(G, partition, allow_empty=allow_empty)
    for b in blocks:
        if not is_clique(G, b):
            raise AraError(f"block {G.vertices.labels(b)} is not a clique")
    return _whisker_blocks(G, blocks, {"clique": True})


def sunlet(n: int) -> SimplicialComplex:
    C = cycle_graph(n)
    S = partition_whisker(C, [[x] for x in C.vertices.names])
    meta = dict(S.meta, family="sunlet", n=n)
    return SimplicialComplex(S.vertices, S.facets, meta)


def _per_vertex(G: SimplicialComplex, counts, what: str) -> list:
    if isinstance(counts, Mapping):
        unknown = set(counts) - set(G.vertices.names)
        if unknown:
            raise AraError(f"unknown vertex {sorted(unknown)[0]!r} in {what}")
        return [counts.get(x) for x in G.vertices.names]
    if isinstance(counts, int):
        return [counts] * G.n_vertices
    counts = list(counts)
    if len(counts) != G.n_vertices:
        raise AraError(f"{what} needs one entry per vertex")
    return counts


def multiwhisker(G: SimplicialComplex, counts) -> SimplicialComplex:
    """Attach ``k_i`` whiskers ``x_i y_{i,j}`` to every vertex (``counts`` int, list or map)."""
    _require_graph(G)
    ks = _per_vertex(G, counts, "whisker counts")
    for x, k in zip(G.vertices.names, ks):
        if not isinstance(k, int) or k < 1:
            raise AraError(f"whisker count for {x} must be ≥ 1")
    taken = set(G.vertices.names)
    names = list(G.vertices.names)
    facets = list(G.facets)
    for i, k in enumerate(ks):
        for j in range(1, k + 1):
            facets.append(frozenset({i, len(names)}))
            names.append(_fresh(taken, f"y{i + 1}_{j}"))
    meta = {"kind": "multiwhisker", "n_base": G.n_vertices, "counts": ks}
    return _make_complex(VertexTable(tuple(names)), facets, meta)


def multiwhisker_cycle(n: int, k: int) -> SimplicialComplex:
    if k < 1:
        raise AraError("k must be ≥ 1")
    M = multiwhisker(cycle_graph(n), k)
    return SimplicialComplex(M.vertices, M.facets,
                             dict(M.meta, family="multiwhisker-cycle", n=n, k=k))


@dataclass(frozen=True)
class GraftSpec:
    """Per base vertex, the fresh-vertex count of every facet to attach."""

    mode: str
    facets: Mapping[str, tuple[int, ...]]

    def __post_init__(self):
        if self.mode not in ("graft", "multigraft"):
            raise AraError(f"unknown graft mode {self.mode!r}")
        facets = {}
        for x, sizes in self.facets.items():
            sizes = (sizes,) if isinstance(sizes, int) else tuple(sizes)
            if not sizes:
                raise AraError(f"vertex {x} needs at least one facet")
            if self.mode == "graft" and len(sizes) != 1:
                raise AraError(f"graft mode attaches exactly one facet to {x}")
            for s in sizes:
                if not isinstance(s, int) or s < 1:
                    raise AraError(f"facet on {x} must have ≥ 1 fresh vertex (dimension ≥ 1)")
            facets[x] = sizes
        object.__setattr__(self, "facets", facets)

    @classmethod
    def uniform(cls, delta: SimplicialComplex, sizes, mode=None) -> "GraftSpec":
        sizes = (sizes,) if isinstance(sizes, int) else tuple(sizes)
        mode = mode or ("graft" if len(sizes) == 1 else "multigraft")
        return cls(mode, {x: sizes for x in delta.vertices.names})

    @classmethod
    def from_json(cls, data) -> "GraftSpec":
        if not isinstance(data, dict) or "facets" not in data:
            raise AraError("graft spec JSON needs 'facets'")
        return cls(data.get("mode", "multigraft"), dict(data["facets"]))

    def to_json(self) -> dict:
        return {"mode": self.mode, "facets": {x: list(s) for x, s in self.facets.items()}}


def multigraft(delta: SimplicialComplex, spec: GraftSpec) -> SimplicialComplex:
    """Attach ``m_i`` new facets to each ``x_i``, pairwise meeting only in ``x_i``.

    Fresh vertices are labelled ``<base>#w<k>`` when a vertex gets one facet
    and ``<base>#w<j>.<k>`` otherwise.
    """
    if isinstance(spec, Mapping):
        spec = GraftSpec("multigraft", spec)
    unknown = set(spec.facets) - set(delta.vertices.names)
    if unknown:
        raise AraError(f"graft spec names unknown vertex {sorted(unknown)[0]!r}")
    missing = [x for x in delta.vertices.names if x not in spec.facets]
    if missing:
        raise AraError(f"graft spec has no facet for {missing[0]!r}")
    taken = set(delta.vertices.names)
    names = list(delta.vertices.names)
    facets = list(delta.facets)
    graft_facets = []
    for i, x in enumerate(delta.vertices.names):
        sizes = spec.facets[x]
        for j, size in enumerate(sizes, start=1):
            f = {i}
            for k in range(1, size + 1):
                tag = f"{x}#w{k}" if len(sizes) == 1 else f"{x}#w{j}.{k}"
                f.add(len(names))
                names.append(_fresh(taken, tag))
            graft_facets.append(frozenset(f))
    facets.extend(graft_facets)
    kind = "graft" if all(len(s) == 1 for s in spec.facets.values()) else "multigraft"
    meta = {"kind": kind, "n_base": delta.n_vertices,
            "sizes": [list(spec.facets[x]) for x in delta.vertices.names]}
    return _make_complex(VertexTable(tuple(names)), facets, meta)


def graft(delta: SimplicialComplex, spec) -> SimplicialComplex:
    """Attach one new facet to each vertex; the new facets are pairwise disjoint."""
    if isinstance(spec, int):
        spec = GraftSpec.uniform(delta, spec, mode="graft")
    elif isinstance(spec, Mapping):
        spec = GraftSpec("graft", spec)
    if any(len(s) != 1 for s in spec.facets.values()):
        raise AraError("graft attaches exactly one facet per vertex")
    return multigraft(delta, spec)


def graft_facets(delta_prime: SimplicialComplex) -> dict[int, list[frozenset]]:
    """Added facets of a (multi)grafted complex, keyed by base ordinal."""
    n = delta_prime.n_base
    out = {i: [] for i in range(n)}
    for f in delta_prime.facets:
        if max(f) >= n:
            base = f & frozenset(range(n))
            (i,) = base
            out[i].append(f)
    return out


def load_complex(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise AraError(f"{path}: malformed JSON ({exc.msg})") from None
    return SimplicialComplex.from_json(data)
