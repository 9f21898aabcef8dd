import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twolift import catalog
from twolift.graph import (
    CapExceeded,
    Graph,
    GraphParseError,
    Signing,
    add_loops,
    apply_lift,
    disjoint_union,
    enumerate_signings,
    girth,
    girth_boost,
    graph_from_json,
    is_bipartite,
    k_lift,
    minor,
    parse_graph,
    random_signing,
    signing_from_index,
    signing_to_perms,
    subdivision,
    tensor_product,
    times_k2,
)
from twolift.models import widom_rowlinson
from twolift.partition import partition_value

from conftest import multigraphs, simple_graphs
from oracles import brute_girth, lift_edges


# -- parsing ---------------------------------------------------------------------


def test_parse_k2():
    g = parse_graph("2 1\n0 1")
    assert (g.n, g.edges) == (2, ((0, 1),))


def test_parse_loop():
    g = parse_graph("1 1\n0 0")
    assert g.loop_count() == 1 and girth(g) == 1


def test_parse_c4_with_comments():
    g = parse_graph("# square\n4 4\n0 1\n1 2\n# middle\n2 3\n3 0\n")
    assert g.edges == ((0, 1), (1, 2), (2, 3), (3, 0))


def test_parse_parallel_edges_kept_in_order():
    g = parse_graph("2 3\n0 1\n1 0\n0 1")
    assert g.edges == ((0, 1), (1, 0), (0, 1))
    assert girth(g) == 2


@pytest.mark.parametrize(
    "text, where",
    [
        ("2 1\n0 2", "line 2"),
        ("2 1\n0 x", "line 2"),
        ("-1 0", "line 1"),
        ("2 2\n0 1", "2 edges"),
        ("", "header"),
        ("3 1\n0 1 2", "line 2"),
    ],
)
def test_parse_errors_name_the_line(text, where):
    with pytest.raises(GraphParseError, match=where):
        parse_graph(text)


def test_json_round_trip():
    g = catalog.petersen()
    assert graph_from_json(json.dumps(g.to_json())) == g


@given(multigraphs())
def test_text_round_trip(g):
    assert parse_graph(g.to_text()) == g


# -- structure -------------------------------------------------------------------


@pytest.mark.parametrize(
    "g, expected",
    [
        (catalog.cycle(5), 5),
        (catalog.path(4), float("inf")),
        (catalog.petersen(), 5),
        (catalog.heawood(), 6),
        (catalog.complete(4), 3),
        (catalog.complete_bipartite(3, 3), 4),
    ],
)
def test_girth_examples(g, expected):
    assert girth(g) == expected


@given(multigraphs(max_n=7, max_m=9))
def test_girth_matches_oracle(g):
    assert girth(g) == brute_girth(g.n, g.edges)


def test_bipartite_examples():
    assert is_bipartite(catalog.complete_bipartite(3, 3)) is not None
    assert is_bipartite(catalog.cycle(5)) is None
    assert is_bipartite(Graph(2, ((0, 1), (1, 1)))) is None


@given(multigraphs())
def test_bipartition_is_proper(g):
    side = is_bipartite(g)
    if side is not None:
        assert all(side[u] != side[v] for u, v in g.edges)
    else:
        assert not any(
            all((mask >> u & 1) != (mask >> v & 1) for u, v in g.edges) for mask in range(2**g.n)
        )


# -- lifts -----------------------------------------------------------------------


def test_all_plus_is_two_copies():
    g = catalog.complete(4)
    assert apply_lift(Signing.constant(g, 1)).edge_multiset() == disjoint_union(g, g).edge_multiset()


def test_all_minus_is_times_k2_up_to_labels():
    g = catalog.complete(3)
    lifted = apply_lift(Signing.constant(g, -1))
    tk = times_k2(g)
    # times_k2 uses (u, i) -> 2u + i, the lift uses u + i n
    perm = [0] * tk.n
    for u in range(g.n):
        for i in range(2):
            perm[2 * u + i] = u + i * g.n
    assert tk.relabel(perm).edge_multiset() == lifted.edge_multiset()


def test_k2_crossed_is_two_disjoint_edges():
    g = catalog.complete(2)
    h = apply_lift(Signing(g, (-1,)))
    assert h.edges == ((0, 3), (2, 1))
    assert len(h.components()) == 2


@given(multigraphs(), st.data())
def test_lift_matches_definition(g, data):
    signs = tuple(data.draw(st.sampled_from((1, -1))) for _ in range(g.m))
    h = apply_lift(Signing(g, signs))
    assert list(h.edges) == lift_edges(g.n, g.edges, signs)


@given(multigraphs(), st.data())
def test_lift_doubles_degrees(g, data):
    signs = tuple(data.draw(st.sampled_from((1, -1))) for _ in range(g.m))
    h = apply_lift(Signing(g, signs))
    assert h.degrees() == g.degrees() * 2


@given(multigraphs(max_m=5), st.data())
def test_signing_lift_equals_two_fold_cover(g, data):
    signs = tuple(data.draw(st.sampled_from((1, -1))) for _ in range(g.m))
    s = Signing(g, signs)
    assert k_lift(g, signing_to_perms(s), 2) == apply_lift(s)


def test_k_lift_examples():
    g = catalog.complete(2)
    assert k_lift(g, [[0]], 1) == g
    h = k_lift(g, [[1, 2, 0]], 3)
    assert h.m == 3 and all(d == 1 for d in h.degrees())


def test_enumeration_order_and_index():
    g = catalog.complete(3)
    seq = [str(s) for s in enumerate_signings(g)]
    assert seq[:3] == ["+++", "++-", "+-+"] and seq[-1] == "---"
    assert all(s.index() == t for t, s in enumerate(enumerate_signings(g)))
    assert [str(s) for s in enumerate_signings(g, start=2, stop=4)] == seq[2:4]


def test_enumeration_cap_refuses():
    with pytest.raises(CapExceeded) as err:
        list(enumerate_signings(catalog.complete(5), cap=100))
    assert err.value.required == 2**10


def test_random_signing_is_seeded():
    g = catalog.petersen()
    a = [str(random_signing(g, random.Random(3))) for _ in range(2)]
    assert a[0] == a[1]


def test_bipartite_lifts_share_partition_functions():
    g = catalog.cycle(6)
    m = widom_rowlinson()
    assert partition_value(apply_lift(Signing.constant(g, 1)), m) == partition_value(
        apply_lift(Signing.constant(g, -1)), m
    )


@given(simple_graphs(max_n=5), st.data())
def test_lift_never_lowers_girth(g, data):
    t = data.draw(st.integers(0, 2**g.m - 1))
    assert girth(apply_lift(signing_from_index(g, t))) >= girth(g)


@given(simple_graphs(max_n=5), st.data())
def test_lift_preserves_regularity(g, data):
    t = data.draw(st.integers(0, 2**g.m - 1))
    h = apply_lift(signing_from_index(g, t))
    assert h.is_regular() == g.is_regular()


# -- girth boosting --------------------------------------------------------------


def test_boost_k4_to_4():
    res = girth_boost(catalog.complete(4), 4)
    assert res.reached and res.girths == [3, 4] and res.exhaustive_steps == [True]


def test_boost_already_done():
    res = girth_boost(catalog.cycle(5), 5)
    assert res.reached and res.graphs == [catalog.cycle(5)]


def test_boost_k4_to_6():
    res = girth_boost(catalog.complete(4), 6)
    assert res.reached and len(res.graphs) >= 3 and girth(res.graphs[-1]) >= 6


def test_boost_budget_exhausted_is_flagged():
    res = girth_boost(catalog.complete(4), 50, budget=2)
    assert not res.reached and res.status == "budget-exhausted" and len(res.graphs) == 3


def test_boost_is_deterministic():
    a = girth_boost(catalog.petersen(), 6, seed=5)
    b = girth_boost(catalog.petersen(), 6, seed=5)
    assert a.graphs == b.graphs


# -- transforms ------------------------------------------------------------------


def test_tensor_k2_k2_is_two_edges():
    h = tensor_product(catalog.complete(2), catalog.complete(2))
    assert h.n == 4 and h.m == 2 and len(h.components()) == 2


def test_subdivision_examples():
    assert girth(subdivision(catalog.cycle(3))) == 6
    s2 = subdivision(subdivision(catalog.cycle(3)))
    assert s2.n == 12 and s2.is_regular(2) and girth(s2) == 12


@given(multigraphs())
def test_subdivision_is_bipartite(g):
    assert is_bipartite(subdivision(g)) is not None


def test_add_loops_k2():
    g = add_loops(catalog.complete(2))
    assert g.loop_count() == 2 and g.m == 3


def test_minor_contract_and_delete():
    c4 = catalog.cycle(4)
    assert minor(c4, contract=[0]).edge_multiset() == [(0, 1), (0, 2), (1, 2)]
    assert minor(c4, delete=[0]).m == 3
    # contracting one of two parallel edges leaves a loop
    par = Graph(2, ((0, 1), (0, 1)))
    assert minor(par, contract=[0]).edges == ((0, 0),)


@settings(max_examples=30)
@given(st.integers(3, 4), st.integers(6, 10), st.integers(0, 10**6))
def test_random_regular_generator(d, n, seed):
    if n * d % 2:
        n += 1
    g = catalog.random_regular(d, n, seed)
    assert g.is_simple() and g.is_regular(d)
    assert g == catalog.random_regular(d, n, seed)


@settings(max_examples=30)
@given(st.integers(1, 4), st.integers(4, 7), st.integers(0, 10**6))
def test_random_bipartite_regular_generator(d, n, seed):
    g = catalog.random_bipartite_regular(d, n, seed)
    assert g.is_simple() and g.is_regular(d) and is_bipartite(g) is not None
    assert all(u < n <= v for u, v in g.edges)


def test_catalog_names():
    names = catalog.named_graphs()
    for key in ["K2", "K3", "K4", "K5", "C4", "C5", "C6", "C8", "K3,3", "Petersen", "Heawood", "P4"]:
        assert key in names
    assert catalog.get_graph("k_{3,3}") == names["K3,3"]
    with pytest.raises(KeyError):
        catalog.get_graph("Moebius")
