"""Taylor symbols, L-admissibility and Lyubeznik resolutions.

Symbols are strictly increasing tuples of 0-based positions into a
:class:`GeneratorOrdering`. The empty tuple is the basis element of the
degree-0 module, so ``d_1(e_i) = u_i e_()``.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple

from . import _kernels
from .complexes import MonomialIdeal, SimplicialComplex, facet_ideal, monomial_key, to_mask
from .errors import AraError, BudgetExceeded, CapExceeded, MissingMetadata

DEFAULT_BUDGET = 10_000_000
RESOLUTION_CAP = 24
TAYLOR_CAP = 12
EXHAUSTIVE_CAP = 9


@dataclass(frozen=True)
class GeneratorOrdering:
    ideal: MonomialIdeal
    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        if sorted(order) != list(range(len(self.ideal))):
            raise AraError("ordering is not a permutation of the generators")

    @classmethod
    def of(cls, ideal: MonomialIdeal, monomials) -> "GeneratorOrdering":
        """Ordering listing ``monomials`` (supports) in the given sequence."""
        where = {g: i for i, g in enumerate(ideal.generators)}
        try:
            return cls(ideal, tuple(where[frozenset(m)] for m in monomials))
        except KeyError as exc:
            raise AraError("monomial is not a generator of the ideal") from exc

    @property
    def gens(self) -> list[frozenset]:
        return [self.ideal.generators[i] for i in self.order]

    def __len__(self):
        return len(self.order)

    def masks(self) -> list[int]:
        return [to_mask(g) for g in self.gens]

    def render(self) -> list[str]:
        return [self.ideal.ambient.render(g) for g in self.gens]

    def to_json(self) -> list[list[str]]:
        return [self.ideal.ambient.labels(g) for g in self.gens]


def _check_symbol(ordering, symbol) -> tuple[int, ...]:
    symbol = tuple(symbol)
    if not symbol:
        raise AraError("empty symbol")
    if any(b <= a for a, b in zip(symbol, symbol[1:])):
        raise AraError(f"symbol {symbol} is not strictly increasing")
    if symbol[0] < 0 or symbol[-1] >= len(ordering):
        raise AraError(f"symbol {symbol} index out of range")
    return symbol


def symbol_lcm(ordering: GeneratorOrdering, symbol) -> frozenset:
    gens = ordering.gens
    return frozenset().union(*(gens[i] for i in _check_symbol(ordering, symbol)))


def is_admissible(ordering: GeneratorOrdering, symbol) -> bool:
    """No earlier generator ``u_q`` (``q < i_t``) divides the lcm of any proper suffix.

    The suffix starting at the last entry is not tested, which only matters
    for non-minimal generator lists.
    """
    symbol = _check_symbol(ordering, symbol)
    gens = ordering.gens
    for t in range(len(symbol) - 1):
        tail = frozenset().union(*(gens[i] for i in symbol[t:]))
        if any(gens[q] <= tail for q in range(symbol[t])):
            return False
    return True


class AdmissibleMax(NamedTuple):
    length: int
    symbol: tuple[int, ...]
    nodes: int


def max_admissible_length(ordering: GeneratorOrdering, node_budget: int = DEFAULT_BUDGET,
                          backend=None) -> AdmissibleMax:
    """Length of the longest admissible symbol, with the lexicographically least witness.

    Raises :class:`BudgetExceeded` when the search visits more than
    ``node_budget`` nodes.
    """
    if node_budget < 1:
        raise AraError("node budget must be ≥ 1")
    length, symbol, nodes = _kernels.max_admissible(
        ordering.masks(), len(ordering.ideal.ambient), node_budget, backend=backend)
    return AdmissibleMax(length, tuple(symbol), nodes)


@dataclass(frozen=True)
class LyubeznikResolution:
    ordering: GeneratorOrdering
    symbols: dict = field(hash=False)
    differentials: dict = field(hash=False)

    @property
    def length(self) -> int:
        return max(self.symbols, default=0)

    def ranks(self) -> list[int]:
        return [len(self.symbols.get(s, ())) for s in range(self.length + 1)]

    def to_json(self) -> dict:
        amb = self.ordering.ideal.ambient
        return {
            "ordering": self.ordering.to_json(),
            "length": self.length,
            "ranks": self.ranks(),
            "symbols": {str(s): [list(sym) for sym in syms] for s, syms in self.symbols.items()},
            "differentials": [
                {"symbol": list(sym),
                 "terms": [{"delete_pos": j, "sign": sign, "monomial": amb.labels(m)}
                           for j, sign, m in terms]}
                for sym, terms in sorted(self.differentials.items(), key=lambda kv: (len(kv[0]), kv[0]))
                if sym
            ],
        }


def _chain_complex(ordering, symbols) -> LyubeznikResolution:
    gens = ordering.gens
    by_len = defaultdict(list)
    diffs = {(): ()}
    by_len[0].append(())
    for sym in sorted(symbols, key=lambda s: (len(s), s)):
        by_len[len(sym)].append(sym)
        full = frozenset().union(*(gens[i] for i in sym))
        terms = []
        for j in range(len(sym)):
            rest = sym[:j] + sym[j + 1:]
            sub = frozenset().union(*(gens[i] for i in rest))
            terms.append((j, -1 if j % 2 else 1, full - sub))
        diffs[sym] = tuple(terms)
    return LyubeznikResolution(ordering, dict(by_len), diffs)


def lyubeznik_resolution(ordering: GeneratorOrdering, cap: int = RESOLUTION_CAP) -> LyubeznikResolution:
    """Subcomplex of the Taylor resolution spanned by the admissible symbols."""
    if len(ordering) > cap:
        raise CapExceeded(f"full resolution enumeration is capped at {cap} generators, got {len(ordering)}")
    return _chain_complex(ordering, _kernels.admissible_symbols(ordering.masks()))


def taylor_resolution(ordering: GeneratorOrdering) -> LyubeznikResolution:
    """The full Taylor complex, every nonempty subset being a symbol."""
    mu = len(ordering)
    if mu > TAYLOR_CAP:
        raise CapExceeded(f"Taylor complex is capped at {TAYLOR_CAP} generators, got {mu}")
    syms = [c for s in range(1, mu + 1) for c in itertools.combinations(range(mu), s)]
    return _chain_complex(ordering, syms)


class ComplexCheck(NamedTuple):
    ok: bool
    symbol: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_complex(res: LyubeznikResolution) -> ComplexCheck:
    """Check deletion-closure and that every ``d(d(e))`` cancels term by term."""
    diffs = res.differentials
    for sym, terms in diffs.items():
        if not sym:
            continue
        acc = defaultdict(Counter)
        for j, sign, m in terms:
            rest = sym[:j] + sym[j + 1:]
            if rest not in diffs:
                return ComplexCheck(False, sym, f"face {rest} is not in the complex")
            for k, sign2, m2 in diffs[rest]:
                tau = rest[:k] + rest[k + 1:]
                acc[tau][tuple(sorted(list(m) + list(m2)))] += sign * sign2
        for tau, coeffs in acc.items():
            if any(c for c in coeffs.values()):
                return ComplexCheck(False, sym, f"d∘d has a nonzero coefficient on e{tau}")
    return ComplexCheck(True)


def whisker_ordering(G: SimplicialComplex) -> GeneratorOrdering:
    """Edges by smallest base vertex, base-base edges before whiskers, then the other end."""
    if G.meta.get("kind") not in ("whisker", "multiwhisker"):
        raise MissingMetadata("whisker ordering needs a complex built by partition/clique/multi-whiskering")
    nb = G.n_base

    def key(edge):
        base = [v for v in edge if v < nb]
        if not base or len(edge) != 2:
            raise AraError(f"{G.vertices.labels(edge)} is not a base or whisker edge")
        a = min(base)
        (b,) = edge - {a}
        return (a, 0 if b < nb else 1, b)

    ideal = facet_ideal(G)
    return GeneratorOrdering.of(ideal, sorted(ideal.generators, key=key))


def lex_ordering(delta: SimplicialComplex) -> GeneratorOrdering:
    """Generators compared as increasing ordinal sequences (base vertices come first)."""
    if delta.meta.get("kind") not in ("graft", "multigraft", "multiwhisker"):
        raise MissingMetadata("lex ordering needs a complex built by graft or multigraft")
    ideal = facet_ideal(delta)
    return GeneratorOrdering.of(ideal, sorted(ideal.generators, key=monomial_key))


def given_ordering(ideal: MonomialIdeal) -> GeneratorOrdering:
    return GeneratorOrdering(ideal, tuple(range(len(ideal))))


def construction_ordering(delta: SimplicialComplex) -> GeneratorOrdering:
    kind = delta.meta.get("kind")
    if kind == "whisker":
        return whisker_ordering(delta)
    if kind in ("graft", "multigraft", "multiwhisker"):
        return lex_ordering(delta)
    raise MissingMetadata("no construction ordering is known for this complex")


class LLength(NamedTuple):
    value: int
    exact: bool
    ordering: GeneratorOrdering
    symbol: tuple[int, ...]
    nodes: int


def l_length(source, strategy: str = "exhaustive", samples: int = 100, seed=None,
             budget: int = DEFAULT_BUDGET, backend=None) -> LLength:
    """Minimum longest-admissible-symbol length over a set of orderings.

    ``exhaustive`` tries every ordering (at most 9 generators) and is exact;
    ``paper`` uses the construction ordering of a complex; ``random`` tries
    ``samples`` seeded shuffles. Only ``exhaustive`` results are exact.
    """
    if isinstance(source, SimplicialComplex):
        ideal = facet_ideal(source)
    else:
        ideal = source
    mu = len(ideal)
    if strategy == "exhaustive":
        if mu > EXHAUSTIVE_CAP:
            raise CapExceeded(f"exhaustive L-length is capped at {EXHAUSTIVE_CAP} generators, got {mu}")
        orders = itertools.permutations(range(mu))
    elif strategy == "paper":
        if not isinstance(source, SimplicialComplex):
            raise MissingMetadata("paper strategy needs a constructed complex")
        orders = [construction_ordering(source).order]
    elif strategy == "random":
        if seed is None:
            raise AraError("random strategy needs a seed")
        rng = random.Random(seed)
        orders = []
        for _ in range(samples):
            perm = list(range(mu))
            rng.shuffle(perm)
            orders.append(tuple(perm))
    else:
        raise AraError(f"unknown strategy {strategy!r}")

    best = None
    spent = 0
    for order in orders:
        ordering = GeneratorOrdering(ideal, order)
        try:
            found = max_admissible_length(ordering, budget - spent, backend=backend)
        except BudgetExceeded as exc:
            raise BudgetExceeded(f"L-length search exceeded {budget} nodes", budget) from exc
        spent += found.nodes
        if spent >= budget:
            raise BudgetExceeded(f"L-length search exceeded {budget} nodes", spent)
        if best is None or found.length < best[0]:
            best = (found.length, ordering, found.symbol)
    return LLength(best[0], strategy == "exhaustive", best[1], best[2], spent)
