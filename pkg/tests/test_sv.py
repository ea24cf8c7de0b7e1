import json
from collections import Counter

import pytest

from aracert.complexes import MonomialIdeal, VertexTable, edge_ideal, multiwhisker_cycle, sunlet
from aracert.bounds import expected_multiwhisker_value
from aracert.errors import AraError
from aracert.sv import (
    SvPartition,
    Term,
    check_partition,
    multiwhisker_cycle_sv,
    render_generators,
    sunlet_sv,
    sv_generators,
    verify_radical_cover,
    verify_sv_conditions,
)

# The displayed q-lists, transcribed with x_i y_i written as x{i}*y{i}.
GOLDEN = {
    3: ["q0 = x1*x2",
        "q1 = x1*x3 + x2*x3",
        "q2 = x1*y1 + x2*y2 + x3*y3"],
    4: ["q0 = x1*x2",
        "q1 = x1*x4 + x2*x3",
        "q2 = x1*y1 + x2*y2 + x3*x4",
        "q3 = x3*y3 + x4*y4"],
    5: ["q0 = x1*x2",
        "q1 = x1*x5 + x2*x3",
        "q2 = x1*y1 + x4*x5",
        "q3 = x2*y2 + x3*x4 + x3*y3*x5*y5",
        "q4 = x3*y3 + x4*y4 + x5*y5"],
    # general scheme at n = 6: q_2 is the only middle line, q_{n-3} = q_3
    6: ["q0 = x1*x2",
        "q1 = x1*x6 + x2*x3",
        "q2 = x2*y2 + x3*x4",
        "q3 = x1*y1 + x5*x6",
        "q4 = x3*y3 + x4*x5 + x4*y4*x6*y6",
        "q5 = x4*y4 + x5*y5 + x6*y6"],
}


@pytest.mark.parametrize("n", sorted(GOLDEN))
def test_golden_sunlet_texts(n):
    assert render_generators(sunlet_sv(n)) == GOLDEN[n]


def naive_conditions(part):
    """All-pairs re-check with exponent vectors and real products."""
    layers = [[Counter(t.variables) for t in layer] for layer in part.sets]
    if not layers or any(not layer for layer in layers) or len(layers[0]) != 1:
        return False
    for i in range(1, len(layers)):
        earlier = [d for layer in layers[:i] for d in layer]
        for a in range(len(layers[i])):
            for b in range(a + 1, len(layers[i])):
                prod = layers[i][a] + layers[i][b]
                if not any(all(prod[v] >= c for v, c in d.items()) for d in earlier):
                    return False
    return True


def naive_radical(part, ideal):
    P = part.monomials()
    return (all(any(p <= g for p in P) for g in ideal.generators)
            and all(any(g <= p for g in ideal.generators) for p in P))


def move(part, i, a, j):
    sets = [list(layer) for layer in part.sets]
    t = sets[i].pop(a)
    sets[j].append(t)
    return SvPartition(part.ambient, tuple(tuple(layer) for layer in sets))


@pytest.mark.parametrize("n", range(3, 13))
def test_sunlet_partition_valid(n):
    part = sunlet_sv(n)
    report = check_partition(part, edge_ideal(sunlet(n)))
    assert report.ok and report.size == n
    assert naive_conditions(part)


@pytest.mark.parametrize("n", range(3, 10))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_multiwhisker_partition_valid(n, k):
    part = multiwhisker_cycle_sv(n, k)
    report = check_partition(part, edge_ideal(multiwhisker_cycle(n, k)))
    assert report.ok
    assert report.size == expected_multiwhisker_value(n, k)


def test_sunlet5_has_degree_four_monomial():
    part = sunlet_sv(5)
    r = part.ambient.render
    assert "x3*x5*y3*y5" in [r(t.support) for t in part.sets[3]]


def test_multiwhisker_n3_layers():
    part = multiwhisker_cycle_sv(3, 3)
    assert part.size == 5
    assert render_generators(part)[4] == "q4 = x1*y1_3 + x2*y2_3 + x3*y3_3"


def test_multiwhisker_odd_product_terms():
    text = render_generators(multiwhisker_cycle_sv(5, 2))
    assert "q5 = x1*y1_2 + x2*y2_2 + x5*y5_2*x3*y3_2" in text
    assert text[-1] == "q6 = x3*y3_2 + x4*y4_2 + x5*y5_2"


def test_multiwhisker_even_pairs():
    text = render_generators(multiwhisker_cycle_sv(4, 2))
    assert text[4:] == ["q4 = x1*y1_2 + x2*y2_2", "q5 = x3*y3_2 + x4*y4_2"]


def test_mutation_detected():
    part = sunlet_sv(3)
    r = part.ambient.render
    bad = move(part, 1, 1, 2)
    assert [r(t.support) for t in bad.sets[2]] == ["x1*y1", "x2*y2", "x3*y3", "x2*x3"]
    report = verify_sv_conditions(bad)
    assert not report.conditions_ok
    found = {(v.condition, tuple(sorted(r(m) for m in v.witness))) for v in report.violations}
    # x1*x2 divides x2*x3 * x1*y1, so that pair is fine
    assert found == {("iii", ("x2*x3", "x2*y2")), ("iii", ("x2*x3", "x3*y3")), ("iii", ("x2*y2", "x3*y3"))}


def test_checker_matches_naive_under_moves():
    checked = broken = 0
    for part, G in [(sunlet_sv(n), sunlet(n)) for n in (3, 4, 5, 6, 7)] + \
                   [(multiwhisker_cycle_sv(n, 2), multiwhisker_cycle(n, 2)) for n in (4, 5)]:
        I = edge_ideal(G)
        for i, layer in enumerate(part.sets):
            for a in range(len(layer)):
                for j in range(part.size):
                    if j == i:
                        continue
                    mutated = move(part, i, a, j)
                    expected = naive_conditions(mutated) and naive_radical(mutated, I)
                    assert check_partition(mutated, I).ok == expected
                    checked += 1
                    broken += not expected
    assert checked > 100 and broken > 0


def test_structure_violations():
    amb = VertexTable(("x1", "x2", "x3"))
    two = SvPartition.from_labels(amb, [[("x1", "x2"), ("x2", "x3")]])
    assert [v.condition for v in verify_sv_conditions(two).violations] == ["ii"]
    empty = SvPartition.from_labels(amb, [[("x1", "x2")], []])
    assert [v.condition for v in verify_sv_conditions(empty).violations] == ["structure"]
    assert not verify_sv_conditions(SvPartition(amb, ())).conditions_ok
    with pytest.raises(AraError):
        SvPartition.from_labels(amb, [[("x1", "x1")]])
    with pytest.raises(AraError):
        SvPartition.from_labels(amb, [[("x1", "x4")]])


def test_radical_cover():
    G = sunlet(6)
    assert verify_radical_cover(sunlet_sv(6), edge_ideal(G))
    extra = G.vertices.monomial(["x4", "y4", "x6", "y6"])
    assert extra in sunlet_sv(6).monomials()
    I3 = edge_ideal(sunlet(3))
    amb = I3.ambient
    missing = SvPartition.from_labels(amb, [[("x1", "x2")], [("x1", "x3"), ("x2", "x3")],
                                            [("x1", "y1"), ("x2", "y2")]])
    res = verify_radical_cover(missing, I3)
    assert not res and [amb.render(m) for m in res.uncovered] == ["x3*y3"]


def test_foreign_monomial():
    G = sunlet(3)
    names = G.vertices.names + ("x4",)
    amb = VertexTable(names)
    I = MonomialIdeal(amb, tuple(amb.monomial(G.vertices.labels(g)) for g in edge_ideal(G).generators))
    layers = [[("x1", "x2")], [("x1", "x3"), ("x2", "x3")],
              [("x1", "y1"), ("x2", "y2"), ("x3", "y3")], [("x1", "x4")]]
    res = verify_radical_cover(SvPartition.from_labels(amb, layers), I)
    assert not res and [amb.render(m) for m in res.foreign] == ["x1*x4"]
    with pytest.raises(AraError, match="ambient mismatch"):
        verify_radical_cover(SvPartition.from_labels(amb, layers), edge_ideal(G))


def test_exponents():
    amb = VertexTable(("x1", "x2"))
    part = SvPartition.from_labels(amb, [[("x1", "x2")]], exponents={("x1", "x2"): 2})
    assert render_generators(part) == ["q0 = x1^2*x2^2"]
    assert sv_generators(part) == [(Term((0, 1), 2),)]
    assert render_generators(SvPartition.from_labels(amb, [[("x1", "x2")]])) == ["q0 = x1*x2"]
    with pytest.raises(AraError):
        SvPartition.from_labels(amb, [[("x1", "x2")]], exponents={("x1", "x2"): 0})


def test_exponents_do_not_change_checks(rng):
    for n in (3, 5, 7):
        I = edge_ideal(sunlet(n))
        for part in (sunlet_sv(n), move(sunlet_sv(n), n - 1, 0, 1)):
            base = check_partition(part, I)
            powered = check_partition(part.with_exponents(lambda t: rng.randint(1, 5)), I)
            assert (base.conditions_ok, base.radical_cover_ok) == (powered.conditions_ok, powered.radical_cover_ok)
            assert len(base.violations) == len(powered.violations)


def test_json_round_trip():
    part = multiwhisker_cycle_sv(5, 2).with_exponents(lambda t: len(t.variables))
    data = json.loads(json.dumps(part.to_json()))
    assert SvPartition.from_json(data, part.ambient) == part
    assert data["sets"][0] == [{"m": ["x1", "x2"], "e": 2}]
    with pytest.raises(AraError, match="ambient mismatch"):
        SvPartition.from_json(data, sunlet(5).vertices)


def test_bad_parameters():
    with pytest.raises(AraError):
        sunlet_sv(2)
    with pytest.raises(AraError):
        multiwhisker_cycle_sv(3, 0)
