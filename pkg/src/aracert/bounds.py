"""Arithmetical-rank certificates.

The lower bound is the big height, read off the minimal vertex covers. Upper
bounds come from verified Schmitt–Vogel partitions (one polynomial per layer)
and from admissible-symbol searches (the longest admissible symbol under any
ordering bounds the L-length, which bounds ara). Every admitted upper bound
keeps the witness that reproduces it.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .complexes import SimplicialComplex, facet_ideal
from .covers import cover_summary
from .errors import AraError, BudgetExceeded, MissingMetadata
from .resolutions import (
    DEFAULT_BUDGET,
    GeneratorOrdering,
    given_ordering,
    l_length,
    lex_ordering,
    max_admissible_length,
    construction_ordering,
    whisker_ordering,
)
from .sv import SvPartition, check_partition, multiwhisker_cycle_sv, sunlet_sv


def expected_multiwhisker_value(n: int, k: int) -> int:
    if not isinstance(n, int) or n < 3:
        raise AraError("n must be ≥ 3")
    if not isinstance(k, int) or k < 1:
        raise AraError("k must be ≥ 1")
    return (n + 1) // 2 + (n // 2) * k


def ideal_digest(ideal) -> str:
    blob = json.dumps(ideal.to_json(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


@dataclass
class UpperBound:
    kind: str                  # "sv" or "lyubeznik"
    value: int | None
    source: str
    complete: bool = True
    partition: SvPartition | None = None
    ordering: GeneratorOrdering | None = None
    symbol: tuple = ()
    nodes: int = 0

    def to_json(self) -> dict:
        out = {"kind": self.kind, "value": self.value, "source": self.source}
        if not self.complete:
            out["complete"] = False
        if self.partition is not None:
            part = self.partition.to_json(with_vertices=False)
            out["partition_digest"] = hashlib.sha256(
                json.dumps(part, sort_keys=True).encode()).hexdigest()
            out["partition"] = part["sets"]
        if self.ordering is not None:
            out["ordering"] = self.ordering.to_json()
            out["witness_symbol"] = list(self.symbol)
            out["nodes"] = self.nodes
        return out


@dataclass
class AraCertificate:
    digest: str
    n_generators: int
    height: int
    bight: int
    cover: frozenset
    uppers: list = field(default_factory=list)
    rejected: list = field(default_factory=list)
    vertices: tuple = ()

    @property
    def ara_lower(self) -> int:
        return self.bight

    @property
    def ara_upper(self) -> int | None:
        values = [u.value for u in self.uppers if u.complete and u.value is not None]
        return min(values) if values else None

    @property
    def equal(self) -> bool:
        return self.ara_upper is not None and self.ara_upper == self.ara_lower

    @property
    def stci(self) -> bool:
        return self.equal and self.height == self.ara_upper

    @property
    def exact(self) -> bool:
        return all(u.complete for u in self.uppers)

    def to_json(self) -> dict:
        return {
            "ideal": {"digest": self.digest, "generators": self.n_generators},
            "lower": {"bight": self.bight, "height": self.height,
                      "cover": [self.vertices[v] for v in sorted(self.cover)]},
            "uppers": [u.to_json() for u in self.uppers],
            "rejected": self.rejected,
            "ara_lower": self.ara_lower,
            "ara_upper": self.ara_upper,
            "equal": self.equal,
            "stci": self.stci,
            "exact": self.exact,
        }


def explicit_partition(delta: SimplicialComplex) -> SvPartition:
    family = delta.meta.get("family")
    if family == "sunlet":
        return sunlet_sv(delta.meta["n"])
    if family == "multiwhisker-cycle":
        return multiwhisker_cycle_sv(delta.meta["n"], delta.meta["k"])
    raise MissingMetadata("no explicit partition is known for this complex")


_ORDERINGS = {
    "whisker": whisker_ordering,
    "lex": lex_ordering,
    "paper": construction_ordering,
    "given": lambda delta: given_ordering(facet_ideal(delta)),
}


def _listify(x):
    if x is None:
        return []
    if isinstance(x, (list, tuple)):
        return list(x)
    return [x]


def certify(delta: SimplicialComplex, *, covers: bool = True, sv=None, lyu=None,
            lyu_exhaustive: bool = False, budget: int = DEFAULT_BUDGET,
            backend=None) -> AraCertificate:
    """Bound ara of the facet ideal of ``delta`` from below and above.

    ``sv`` takes ``"paper"`` or :class:`SvPartition` objects; ``lyu`` takes
    ordering sources (``"whisker"``, ``"lex"``, ``"paper"``, ``"given"``) or
    :class:`GeneratorOrdering` objects. A partition that fails either check is
    listed under ``rejected`` and bounds nothing. A search that runs out of
    budget is kept as an incomplete entry and clears ``exact``.
    """
    if not covers:
        raise AraError("the covers strategy is required for the lower bound")
    ideal = facet_ideal(delta)
    summary = cover_summary(delta, backend=backend)
    cover = next(c for c in summary.covers if len(c) == summary.bight)
    cert = AraCertificate(ideal_digest(ideal), len(ideal), summary.height, summary.bight,
                          cover, vertices=delta.vertices.names)

    for item in _listify(sv):
        source = "paper" if item == "paper" else "given"
        part = explicit_partition(delta) if item == "paper" else item
        report = check_partition(part, ideal)
        if report.ok:
            cert.uppers.append(UpperBound("sv", part.size, source, partition=part))
        else:
            cert.rejected.append({"kind": "sv", "source": source,
                                  "report": report.to_json(part.ambient)})

    for item in _listify(lyu):
        if isinstance(item, GeneratorOrdering):
            ordering, source = item, "given-ordering"
        else:
            try:
                ordering, source = _ORDERINGS[item](delta), item
            except KeyError:
                raise AraError(f"unknown ordering source {item!r}") from None
        try:
            found = max_admissible_length(ordering, budget, backend=backend)
        except BudgetExceeded as exc:
            cert.uppers.append(UpperBound("lyubeznik", None, source, complete=False,
                                          ordering=ordering, nodes=exc.nodes or budget))
            continue
        cert.uppers.append(UpperBound("lyubeznik", found.length, source, ordering=ordering,
                                      symbol=found.symbol, nodes=found.nodes))

    if lyu_exhaustive:
        try:
            res = l_length(ideal, "exhaustive", budget=budget, backend=backend)
        except BudgetExceeded as exc:
            cert.uppers.append(UpperBound("lyubeznik", None, "exhaustive", complete=False,
                                          nodes=exc.nodes or budget))
        else:
            cert.uppers.append(UpperBound("lyubeznik", res.value, "exhaustive",
                                          ordering=res.ordering, symbol=res.symbol,
                                          nodes=res.nodes))

    cert.uppers.sort(key=lambda u: (u.kind, u.value if u.value is not None else 1 << 30, u.source))
    return cert


def recheck(cert: AraCertificate, delta: SimplicialComplex, backend=None) -> bool:
    """Re-derive every bound in ``cert`` from its stored witness."""
    ideal = facet_ideal(delta)
    if ideal_digest(ideal) != cert.digest:
        return False
    if any(not (f & cert.cover) for f in delta.facets):
        return False
    # the cover witnesses bight >= |cover| only if it is a minimal cover
    for v in cert.cover:
        if all(f & (cert.cover - {v}) for f in delta.facets):
            return False
    if len(cert.cover) != cert.bight:
        return False
    for u in cert.uppers:
        if not u.complete:
            continue
        if u.kind == "sv":
            report = check_partition(u.partition, ideal)
            if not report.ok or u.partition.size != u.value:
                return False
        else:
            found = max_admissible_length(u.ordering, max(u.nodes, 1), backend=backend)
            if found.length != u.value or found.symbol != u.symbol:
                return False
    return True
