import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aracert.complexes import (
    MonomialIdeal,
    VertexTable,
    build_complex,
    cycle_graph,
    edge_ideal,
    facet_ideal,
    graft,
    multigraft,
    partition_whisker,
    path_graph,
    sunlet,
)
from aracert.errors import AraError, BudgetExceeded, CapExceeded, MissingMetadata
from aracert.resolutions import (
    GeneratorOrdering,
    given_ordering,
    is_admissible,
    l_length,
    lex_ordering,
    lyubeznik_resolution,
    max_admissible_length,
    symbol_lcm,
    taylor_resolution,
    verify_complex,
    whisker_ordering,
)

from conftest import random_ideal


def naive_admissible(u, idx):
    """The definition with 1-based indices: u_q does not divide lcm(u_{i_t},...,u_{i_s})
    for all 1 <= t < s and all 1 <= q < i_t."""
    s = len(idx)
    for t in range(1, s):
        lcm = set()
        for r in range(t, s + 1):
            lcm |= u[idx[r - 1]]
        for q in range(1, idx[t - 1]):
            if u[q] <= lcm:
                return False
    return True


def ordering_of(labels, gens):
    table = VertexTable(tuple(labels))
    ideal = MonomialIdeal(table, tuple(table.monomial(g) for g in gens))
    return given_ordering(ideal)


def test_symbol_lcm():
    o = ordering_of(["x1", "x2", "x3", "y3"], [["x1", "x2"], ["x2", "x3"], ["x3", "y3"]])
    r = o.ideal.ambient.render
    assert r(symbol_lcm(o, (0,))) == "x1*x2"
    assert r(symbol_lcm(o, (0, 1))) == "x1*x2*x3"
    assert r(symbol_lcm(o, (0, 2))) == "x1*x2*x3*y3"
    with pytest.raises(AraError):
        symbol_lcm(o, (0, 3))
    with pytest.raises(AraError):
        symbol_lcm(o, (1, 0))


def test_singletons_admissible():
    o = whisker_ordering(sunlet(4))
    assert all(is_admissible(o, (i,)) for i in range(len(o)))


@pytest.mark.parametrize("blocks, i", [([["x1"], ["x2"]], 2), ([["x1", "x2"]], 1)])
def test_two_vertex_base_case_rejected(blocks, i):
    G = partition_whisker(path_graph(2), blocks)
    o = whisker_ordering(G)
    assert o.render() == ["x1*x2", "x1*y1", f"x2*y{i}"]
    assert not is_admissible(o, (0, 1, 2))


def test_path_symbol():
    # q ranges below i_1 = 1: nothing to test, so the pair is admissible
    o = ordering_of(["x1", "x2", "x3", "x4"], [["x1", "x2"], ["x2", "x3"], ["x3", "x4"]])
    assert is_admissible(o, (0, 2)) is True
    assert is_admissible(o, (0, 2)) == naive_admissible([None] + o.gens, (1, 3))
    o = ordering_of(["x1", "x2", "x3", "x4"], [["x1", "x2"], ["x3", "x4"]])
    assert is_admissible(o, (0, 1))


def test_is_admissible_matches_definition(rng):
    for _ in range(120):
        I = random_ideal(rng, rng.randint(1, 6), 6)
        o = GeneratorOrdering(I, tuple(rng.sample(range(len(I)), len(I))))
        u = [None] + o.gens
        for s in range(1, len(o) + 1):
            for sym in itertools.combinations(range(len(o)), s):
                assert is_admissible(o, sym) == naive_admissible(u, tuple(i + 1 for i in sym))


def test_max_admissible_small():
    single = ordering_of(["x1", "x2"], [["x1", "x2"]])
    assert max_admissible_length(single) == (1, (0,), 1)
    assert max_admissible_length(whisker_ordering(sunlet(3))).length == 3
    tri = graft(build_complex(["x1", "x2", "x3"], [["x1", "x2", "x3"]]), 1)
    assert max_admissible_length(lex_ordering(tri)).length == 3


def test_max_admissible_matches_enumeration(rng, backend):
    for _ in range(80):
        I = random_ideal(rng, rng.randint(1, 7), 7)
        o = GeneratorOrdering(I, tuple(rng.sample(range(len(I)), len(I))))
        syms = [sym for s in range(1, len(o) + 1)
                for sym in itertools.combinations(range(len(o)), s)
                if naive_admissible([None] + o.gens, tuple(i + 1 for i in sym))]
        longest = max(len(s) for s in syms)
        witness = min(s for s in syms if len(s) == longest)
        assert max_admissible_length(o, backend=backend)[:2] == (longest, witness)


def test_budget_exhaustion():
    with pytest.raises(BudgetExceeded):
        max_admissible_length(whisker_ordering(sunlet(8)), node_budget=10)
    with pytest.raises(AraError):
        max_admissible_length(whisker_ordering(sunlet(3)), node_budget=0)


def test_resolution_single_generator():
    res = lyubeznik_resolution(ordering_of(["x1", "x2"], [["x1", "x2"]]))
    assert res.length == 1
    assert res.differentials[(0,)] == ((0, 1, frozenset({0, 1})),)
    assert verify_complex(res)


def test_resolution_two_generators():
    o = ordering_of(["x1", "x2", "x3"], [["x1", "x2"], ["x2", "x3"]])
    res = lyubeznik_resolution(o)
    # d(e_12) = x1 e_2 - x3 e_1
    assert res.differentials[(0, 1)] == ((0, 1, frozenset({0})), (1, -1, frozenset({2})))
    assert verify_complex(res)


def test_resolution_sunlet3():
    o = whisker_ordering(sunlet(3))
    res = lyubeznik_resolution(o)
    assert res.length == 3 == max_admissible_length(o).length
    assert verify_complex(res)


def test_taylor_complex_is_complex(rng):
    for _ in range(30):
        I = random_ideal(rng, rng.randint(1, 6), 5)
        assert verify_complex(taylor_resolution(given_ordering(I)))


def test_verify_complex_catches_broken_input():
    o = ordering_of(["x1", "x2", "x3"], [["x1", "x2"], ["x2", "x3"]])
    res = lyubeznik_resolution(o)
    res.differentials[(0, 1)] = ((0, 1, frozenset({0})), (1, 1, frozenset({2})))
    check = verify_complex(res)
    assert not check and check.symbol == (0, 1)
    res = lyubeznik_resolution(o)
    del res.differentials[(1,)]
    assert not verify_complex(res)


def test_resolution_cap():
    with pytest.raises(CapExceeded):
        lyubeznik_resolution(whisker_ordering(sunlet(13)))


def test_deletion_closed(rng):
    for _ in range(60):
        I = random_ideal(rng, rng.randint(1, 7), 7)
        o = GeneratorOrdering(I, tuple(rng.sample(range(len(I)), len(I))))
        syms = {s for s in itertools.chain.from_iterable(lyubeznik_resolution(o).symbols.values())}
        for s in syms:
            for j in range(len(s)):
                assert s[:j] + s[j + 1:] in syms


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 7))
def test_disjoint_supports_full_taylor(mu):
    labels = [f"x{i}" for i in range(1, 2 * mu + 1)]
    o = ordering_of(labels, [[labels[2 * i], labels[2 * i + 1]] for i in range(mu)])
    assert max_admissible_length(o).length == mu
    assert l_length(o.ideal, "exhaustive" if mu <= 5 else "random", samples=5, seed=1).value == mu


def test_l_length():
    disjoint = ordering_of(["x1", "x2", "x3", "x4"], [["x1", "x2"], ["x3", "x4"]]).ideal
    assert l_length(disjoint).value == 2 and l_length(disjoint).exact
    res = l_length(sunlet(3), "paper")
    assert res.value <= 3 and not res.exact
    single = ordering_of(["x1"], [["x1"]]).ideal
    assert l_length(single)[:2] == (1, True)
    with pytest.raises(CapExceeded):
        l_length(edge_ideal(sunlet(5)))
    with pytest.raises(AraError):
        l_length(disjoint, "random")


def test_l_length_bounded_by_any_ordering(rng):
    for _ in range(10):
        I = random_ideal(rng, 5, 6)
        exact = l_length(I).value
        o = GeneratorOrdering(I, tuple(rng.sample(range(len(I)), len(I))))
        assert exact <= max_admissible_length(o).length


def test_random_strategy_reproducible():
    a = l_length(sunlet(4), "random", samples=20, seed=7)
    b = l_length(sunlet(4), "random", samples=20, seed=7)
    assert a.value == b.value and a.ordering == b.ordering and not a.exact


def test_whisker_ordering_examples():
    assert whisker_ordering(sunlet(3)).render() == [
        "x1*x2", "x1*x3", "x1*y1", "x2*x3", "x2*y2", "x3*y3"]
    G = partition_whisker(cycle_graph(3), [["x1", "x2"], ["x3"]])
    assert whisker_ordering(G).render() == ["x1*x2", "x1*x3", "x1*y1", "x2*x3", "x2*y1", "x3*y2"]
    E = partition_whisker(path_graph(2), [["x1"], ["x2"]])
    assert whisker_ordering(E).render() == ["x1*x2", "x1*y1", "x2*y2"]
    with pytest.raises(MissingMetadata):
        whisker_ordering(cycle_graph(3))


def test_lex_ordering_examples():
    tri = graft(build_complex(["x1", "x2", "x3"], [["x1", "x2", "x3"]]), 1)
    assert lex_ordering(tri).render() == ["x1*x2*x3", "x1*x1#w1", "x2*x2#w1", "x3*x3#w1"]
    D = multigraft(path_graph(2), {"x1": [1, 1], "x2": [1]})
    assert lex_ordering(D).render() == ["x1*x2", "x1*x1#w1.1", "x1*x1#w2.1", "x2*x2#w1"]
    one = graft(build_complex(["x1"], [["x1"]]), 1)
    assert lex_ordering(one).render() == ["x1*x1#w1"]
    with pytest.raises(MissingMetadata):
        lex_ordering(sunlet(3))


def test_ordering_validation():
    I = facet_ideal(sunlet(3))
    with pytest.raises(AraError):
        GeneratorOrdering(I, (0, 0, 1, 2, 3, 4))
    with pytest.raises(AraError):
        GeneratorOrdering.of(I, [frozenset({0, 5})])
