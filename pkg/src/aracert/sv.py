"""Schmitt–Vogel partitions: checking the layered divisibility conditions,
emitting the layer sums, and the explicit partitions for sunlet and
multiwhisker cycle graphs.

A partition is a list of layers ``P_0, ..., P_r``. Layer ``i`` contributes
the polynomial ``q_i``, the sum of ``p^e(p)`` over its monomials. The checks
are exponent independent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

from .complexes import MonomialIdeal, VertexTable, monomial_key, multiwhisker_cycle, sunlet
from .errors import AraError


class Term(NamedTuple):
    """One monomial ``p`` of a layer, variables in written order, and ``e(p)``."""

    variables: tuple[int, ...]
    exponent: int = 1

    @property
    def support(self) -> frozenset:
        return frozenset(self.variables)


@dataclass(frozen=True)
class SvPartition:
    ambient: VertexTable
    sets: tuple[tuple[Term, ...], ...]

    def __post_init__(self):
        sets = tuple(tuple(Term(tuple(t[0]), t[1]) for t in layer) for layer in self.sets)
        object.__setattr__(self, "sets", sets)
        n = len(self.ambient)
        for layer in sets:
            for t in layer:
                if not t.variables:
                    raise AraError("empty monomial in partition")
                if len(set(t.variables)) != len(t.variables):
                    raise AraError("partition monomials must be squarefree")
                if min(t.variables) < 0 or max(t.variables) >= n:
                    raise AraError("partition monomial references an unknown vertex")
                if not isinstance(t.exponent, int) or t.exponent < 1:
                    raise AraError("exponents must be integers ≥ 1")

    @classmethod
    def from_labels(cls, ambient: VertexTable, layers, exponents=None) -> "SvPartition":
        """Layers as lists of label sequences; ``exponents`` maps a label tuple to ``e(p)``."""
        exponents = exponents or {}
        sets = []
        for layer in layers:
            terms = []
            for labels in layer:
                labels = tuple(labels)
                terms.append(Term(tuple(ambient.ordinal(x) for x in labels), exponents.get(labels, 1)))
            sets.append(tuple(terms))
        return cls(ambient, tuple(sets))

    @property
    def size(self) -> int:
        return len(self.sets)

    def monomials(self) -> set[frozenset]:
        """The set ``P``: union of all layers."""
        return {t.support for layer in self.sets for t in layer}

    def with_exponents(self, exponent_of) -> "SvPartition":
        sets = tuple(tuple(Term(t.variables, exponent_of(t)) for t in layer) for layer in self.sets)
        return SvPartition(self.ambient, sets)

    def to_json(self, with_vertices=True) -> dict:
        out = {"sets": [[{"m": [self.ambient.names[v] for v in t.variables], "e": t.exponent}
                         for t in layer] for layer in self.sets]}
        if with_vertices:
            out["vertices"] = list(self.ambient.names)
        return out

    @classmethod
    def from_json(cls, data, ambient: VertexTable) -> "SvPartition":
        if not isinstance(data, dict) or not isinstance(data.get("sets"), list):
            raise AraError("partition JSON needs a 'sets' list")
        if "vertices" in data and tuple(data["vertices"]) != ambient.names:
            raise AraError("ambient mismatch: partition and ideal use different vertex tables")
        sets = []
        for layer in data["sets"]:
            terms = []
            for entry in layer:
                if isinstance(entry, dict):
                    labels, e = entry.get("m", []), entry.get("e", 1)
                else:
                    labels, e = entry, 1
                try:
                    terms.append(Term(tuple(ambient.ordinal(x) for x in labels), e))
                except AraError as exc:
                    raise AraError(f"ambient mismatch: {exc}") from None
            sets.append(tuple(terms))
        return cls(ambient, tuple(sets))


def _divides(d: frozenset, a: frozenset, b: frozenset) -> bool:
    # squarefree d divides a*b iff its support lies in the union
    return d <= (a | b)


class Violation(NamedTuple):
    condition: str
    layer: int
    witness: tuple


@dataclass
class SvReport:
    conditions_ok: bool
    violations: list = field(default_factory=list)
    size: int = 0
    radical_cover_ok: bool | None = None
    uncovered: list = field(default_factory=list)
    foreign: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.conditions_ok and bool(self.radical_cover_ok)

    def to_json(self, ambient: VertexTable) -> dict:
        def show(w):
            return ambient.render(w) if isinstance(w, frozenset) else w

        return {
            "size": self.size,
            "conditions_ok": self.conditions_ok,
            "radical_cover_ok": self.radical_cover_ok,
            "violations": [{"condition": v.condition, "layer": v.layer,
                            "witness": [show(w) for w in v.witness]} for v in self.violations],
            "uncovered_generators": [ambient.render(m) for m in self.uncovered],
            "foreign_monomials": [ambient.render(m) for m in self.foreign],
        }


def verify_sv_conditions(part: SvPartition) -> SvReport:
    """Check the layer conditions and report every violation found.

    Condition (i) holds by definition, ``P`` being the union of the layers.
    (ii): ``P_0`` has one element. (iii): for every layer ``i ≥ 1`` and
    distinct ``p, p'`` in it, some monomial of an earlier layer divides
    ``p p'``. An empty layer is a structural violation.
    """
    violations = []
    layers = [[t.support for t in layer] for layer in part.sets]
    if not layers:
        violations.append(Violation("structure", 0, ("no layers",)))
    for i, layer in enumerate(layers):
        if not layer:
            violations.append(Violation("structure", i, ("empty layer",)))
    if layers and len(set(layers[0])) != 1:
        violations.append(Violation("ii", 0, tuple(layers[0])))
    earlier = set(layers[0]) if layers else set()
    for i in range(1, len(layers)):
        distinct = list(dict.fromkeys(layers[i]))
        for a in range(len(distinct)):
            for b in range(a + 1, len(distinct)):
                p, q = distinct[a], distinct[b]
                if not any(_divides(d, p, q) for d in earlier):
                    violations.append(Violation("iii", i, (p, q)))
        earlier.update(layers[i])
    return SvReport(not violations, violations, part.size)


class RadicalCover(NamedTuple):
    ok: bool
    uncovered: list
    foreign: list

    def __bool__(self):
        return self.ok


def verify_radical_cover(part: SvPartition, ideal: MonomialIdeal) -> RadicalCover:
    """Whether ``(P)`` and ``I`` have the same radical.

    Both are squarefree monomial ideals, so this holds exactly when each
    generator of ``I`` is a multiple of some ``p`` in ``P`` and each ``p`` is
    a multiple of some generator of ``I``.
    """
    if part.ambient.names != ideal.ambient.names:
        raise AraError("ambient mismatch: partition and ideal use different vertex tables")
    P = sorted(part.monomials(), key=monomial_key)
    uncovered = [g for g in ideal.generators if not any(p <= g for p in P)]
    foreign = [p for p in P if not any(g <= p for g in ideal.generators)]
    return RadicalCover(not uncovered and not foreign, uncovered, foreign)


def check_partition(part: SvPartition, ideal: MonomialIdeal) -> SvReport:
    report = verify_sv_conditions(part)
    cover = verify_radical_cover(part, ideal)
    report.radical_cover_ok = cover.ok
    report.uncovered = cover.uncovered
    report.foreign = cover.foreign
    return report


def sv_generators(part: SvPartition) -> list[tuple[Term, ...]]:
    """The layer sums ``q_0, ..., q_r`` as tuples of terms in canonical order."""
    return [tuple(sorted(layer, key=lambda t: monomial_key(t.variables))) for layer in part.sets]


def render_term(ambient: VertexTable, term: Term) -> str:
    power = f"^{term.exponent}" if term.exponent != 1 else ""
    return "*".join(ambient.names[v] + power for v in term.variables)


def render_polynomial(ambient: VertexTable, poly) -> str:
    return " + ".join(render_term(ambient, t) for t in poly)


def render_generators(part: SvPartition) -> list[str]:
    return [f"q{i} = {render_polynomial(part.ambient, q)}" for i, q in enumerate(sv_generators(part))]


def _sunlet_layers(n: int, y) -> list[list[tuple[str, ...]]]:
    def x(i):
        return f"x{i}"

    def edge(i, j):
        return (x(i), x(j))

    def wh(i):
        return (x(i), y(i))

    if n == 3:
        return [[edge(1, 2)], [edge(1, 3), edge(2, 3)], [wh(1), wh(2), wh(3)]]
    if n == 4:
        return [[edge(1, 2)], [edge(1, 4), edge(2, 3)], [wh(1), wh(2), edge(3, 4)],
                [wh(3), wh(4)]]
    if n == 5:
        return [[edge(1, 2)], [edge(1, 5), edge(2, 3)], [wh(1), edge(4, 5)],
                [wh(2), edge(3, 4), wh(3) + wh(5)], [wh(3), wh(4), wh(5)]]
    layers = [[edge(1, 2)], [edge(1, n), edge(2, 3)]]
    layers += [[wh(i), edge(i + 1, i + 2)] for i in range(2, n - 3)]
    layers += [
        [wh(1), edge(n - 1, n)],
        [wh(n - 3), edge(n - 2, n - 1), wh(n - 2) + wh(n)],
        [wh(n - 2), wh(n - 1), wh(n)],
    ]
    return layers


def sunlet_sv(n: int) -> SvPartition:
    """The ``n``-layer partition for the sunlet graph on ``C_n``."""
    if not isinstance(n, int) or n < 3:
        raise AraError("n must be ≥ 3")
    return SvPartition.from_labels(sunlet(n).vertices, _sunlet_layers(n, lambda i: f"y{i}"))


def multiwhisker_cycle_sv(n: int, k: int) -> SvPartition:
    """Partition with ``ceil(n/2) + floor(n/2) k`` layers for ``C_n`` with ``k`` whiskers per vertex."""
    if not isinstance(n, int) or n < 3:
        raise AraError("n must be ≥ 3")
    if not isinstance(k, int) or k < 1:
        raise AraError("k must be ≥ 1")
    ambient = multiwhisker_cycle(n, k).vertices

    def wh(i, j):
        return (f"x{i}", f"y{i}_{j}")

    if n == 3:
        layers = [[("x1", "x2")], [("x1", "x3"), ("x2", "x3")]]
        layers += [[wh(1, j), wh(2, j), wh(3, j)] for j in range(1, k + 1)]
        return SvPartition.from_labels(ambient, layers)

    layers = _sunlet_layers(n, lambda i: f"y{i}_1")
    half = n // 2
    for j in range(2, k + 1):
        if n % 2 == 0:
            layers += [[wh(2 * m + 1, j), wh(2 * m + 2, j)] for m in range(half)]
        else:
            layers += [[wh(2 * m + 1, j), wh(2 * m + 2, j), wh(n, j) + wh(2 * m + 3, j)]
                       for m in range(half - 1)]
            layers.append([wh(n - 2, j), wh(n - 1, j), wh(n, j)])
    return SvPartition.from_labels(ambient, layers)


def load_partition(path, ambient: VertexTable) -> SvPartition:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise AraError(f"{path}: malformed JSON ({exc.msg})") from None
    return SvPartition.from_json(data, ambient)
