import itertools
import random

import pytest

from aracert import _kernels
from aracert.complexes import GraftSpec, MonomialIdeal, VertexTable, build_complex

ACCEPTANCE = []


def record(criterion, ok, detail=""):
    ACCEPTANCE.append((criterion, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}")


@pytest.fixture(params=_kernels.BACKENDS)
def backend(request):
    return request.param


def labels(n, prefix="x"):
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def random_graph(rng, n, p=0.5):
    xs = labels(n)
    edges = [[a, b] for a, b in itertools.combinations(xs, 2) if rng.random() < p]
    return build_complex(xs, edges)


def random_partition(rng, names):
    names = list(names)
    rng.shuffle(names)
    t = rng.randint(1, len(names))
    cuts = sorted(rng.sample(range(1, len(names)), t - 1))
    return [names[a:b] for a, b in zip([0] + cuts, cuts + [len(names)])]


def random_clique_partition(rng, G):
    adj = G.adjacency()
    order = list(range(G.n_vertices))
    rng.shuffle(order)
    blocks = []
    for v in order:
        fits = [b for b in blocks if all(u in adj[v] for u in b)]
        if fits and rng.random() < 0.7:
            rng.choice(fits).append(v)
        else:
            blocks.append([v])
    return [[G.vertices.names[v] for v in b] for b in blocks]


def random_complex(rng, n, max_facets, max_size=None, cover_vertices=True):
    """Random complex on ``n`` vertices; every vertex lies in some facet."""
    xs = labels(n)
    max_size = max_size or n
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, min(max_size, n))
        facets.append(rng.sample(xs, size))
    if cover_vertices:
        used = {x for f in facets for x in f}
        facets += [[x] for x in xs if x not in used]
    return build_complex(xs, facets)


def random_graft_spec(rng, delta, multi, max_m=3, max_fresh=2):
    facets = {}
    for x in delta.vertices.names:
        m = rng.randint(1, max_m) if multi else 1
        facets[x] = [rng.randint(1, max_fresh) for _ in range(m)]
    return GraftSpec("multigraft" if multi else "graft", facets)


def random_ideal(rng, n_vars, max_gens):
    xs = labels(n_vars)
    table = VertexTable(tuple(xs))
    while True:
        gens = set()
        for _ in range(rng.randint(1, max_gens)):
            size = rng.randint(1, n_vars)
            gens.add(frozenset(rng.sample(range(n_vars), size)))
        gens = [g for g in gens if not any(h < g for h in gens)]
        if gens:
            rng.shuffle(gens)
            return MonomialIdeal(table, tuple(gens))


@pytest.fixture
def rng():
    return random.Random(20261015)


def random_ideal_of_size(rng, n_vars, mu, max_degree=3):
    """Random squarefree ideal with exactly ``mu`` minimal generators."""
    xs = labels(n_vars)
    table = VertexTable(tuple(xs))
    while True:
        gens = []
        for _ in range(50 * mu):
            g = frozenset(rng.sample(range(n_vars), rng.randint(1, min(max_degree, n_vars))))
            if not any(h <= g or g <= h for h in gens):
                gens.append(g)
                if len(gens) == mu:
                    return MonomialIdeal(table, tuple(gens))
