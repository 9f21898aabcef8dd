import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twolift import catalog
from twolift.graph import CapExceeded, Graph, disjoint_union
from twolift.models import ModelError, SpinModel, coloring, hardcore, ising, potts, widom_rowlinson
from twolift.partition import (
    RCParams,
    edge_probabilities,
    eval_I,
    eval_rc_polynomial,
    fkg_check,
    hom,
    hom_cycle_oracle,
    independent_set_counts,
    matching_counts,
    matrix_power_trace,
    partition_value,
    potts_sidorenko_bounds,
    random_cluster,
    rc_polynomial,
    tutte_from_rc,
)

from conftest import int_models, multigraphs
from oracles import (
    brute_independent_counts,
    brute_matching_counts,
    brute_partition,
    cycle_hom_trace,
    subset_random_cluster,
)


def c6():
    return SpinModel(tuple(tuple(int((i - j) % 6 in (1, 5)) for j in range(6)) for i in range(6)))


def test_small_values():
    assert partition_value(catalog.complete(2), hardcore()) == 3
    assert partition_value(catalog.cycle(4), hardcore()) == 7
    assert hom(catalog.cycle(4), coloring(3)) == 18 == 2**4 + 2


def test_cycle_homs():
    C6 = c6()
    assert hom(catalog.cycle(8), C6) == 516 == cycle_hom_trace(8, C6.A) == hom_cycle_oracle(8, C6)
    assert hom(disjoint_union(catalog.cycle(4), catalog.cycle(4)), C6) == 1296 == cycle_hom_trace(4, C6.A) ** 2


def test_matrix_power_trace():
    assert matrix_power_trace(((1, 1), (1, 0)), 5) == 11  # Lucas number


def test_float_model():
    g = catalog.cycle(5)
    m = ising(0.3, 0.1)
    assert partition_value(g, m) == pytest.approx(brute_partition(g.n, g.edges, m.A, m.nu), rel=1e-12)


def test_large_exact_values_use_big_integers():
    m = SpinModel(((10**6, 1), (1, 10**6)))
    g = catalog.complete(4)
    assert partition_value(g, m) == brute_partition(g.n, g.edges, m.A)


def test_cap_refusal():
    with pytest.raises(CapExceeded) as err:
        partition_value(catalog.petersen(), widom_rowlinson(), cap=1000)
    assert err.value.required == 3**10


def test_hom_needs_01():
    with pytest.raises(ModelError):
        hom(catalog.complete(2), potts(2, 1))
    with pytest.raises(ModelError):
        hom(catalog.complete(2), hardcore(2))


@settings(max_examples=60)
@given(multigraphs(max_n=5, max_m=6), int_models(max_q=3))
def test_partition_oracle(g, m):
    assert partition_value(g, m) == brute_partition(g.n, g.edges, m.A, m.nu)


@settings(max_examples=30)
@given(multigraphs(max_n=4, max_m=5), multigraphs(max_n=4, max_m=5), int_models(max_q=3))
def test_multiplicative_over_components(g1, g2, m):
    assert partition_value(disjoint_union(g1, g2), m) == partition_value(g1, m) * partition_value(g2, m)


@settings(max_examples=30)
@given(multigraphs(max_n=5, max_m=6), int_models(max_q=3))
def test_small_block_agrees(g, m):
    assert partition_value(g, m, block=2) == partition_value(g, m)


# -- counting ----------------------------------------------------------------------


def test_count_examples():
    assert independent_set_counts(catalog.cycle(4)) == [1, 4, 2]
    assert independent_set_counts(catalog.complete(3)) == [1, 3]
    assert matching_counts(catalog.cycle(4)) == [1, 4, 2]
    assert matching_counts(catalog.complete(2)) == [1, 1]
    assert matching_counts(catalog.complete(4)) == [1, 6, 3]


@given(multigraphs(max_n=7, max_m=9))
def test_counts_match_oracles(g):
    assert independent_set_counts(g) == brute_independent_counts(g.n, g.edges)
    assert matching_counts(g) == brute_matching_counts(g.n, g.edges)


@given(multigraphs(max_n=6, max_m=7), st.fractions(min_value=Fraction(1, 5), max_value=3, max_denominator=5))
def test_independence_polynomial_is_hardcore(g, lam):
    assert eval_I(g, lam) == partition_value(g, hardcore(lam))


# -- random cluster ----------------------------------------------------------------


def test_rc_examples():
    assert random_cluster(catalog.complete(3), 2, 1) == 28
    assert random_cluster(catalog.complete(2), 2, 1) == 6
    assert random_cluster(catalog.empty(3), 5, 7) == 125
    assert edge_probabilities(catalog.complete(2), 2, 1, 0) == (Fraction(2, 3), Fraction(1, 3))


def test_loop_factor():
    g = Graph(1, ((0, 0), (0, 0)))
    assert random_cluster(g, 3, Fraction(1, 2)) == 3 * Fraction(3, 2) ** 2


@settings(max_examples=50)
@given(
    multigraphs(max_n=5, max_m=8),
    st.fractions(min_value=0, max_value=4, max_denominator=4),
    st.fractions(min_value=0, max_value=3, max_denominator=4),
)
def test_rc_matches_subset_oracle(g, q, w):
    assert random_cluster(g, q, w) == subset_random_cluster(g.n, g.edges, q, w)


@settings(max_examples=30)
@given(multigraphs(max_n=4, max_m=5), st.integers(1, 3), st.fractions(min_value=0, max_value=2, max_denominator=3))
def test_rc_is_potts_for_integer_q(g, q, w):
    assert random_cluster(g, q, w) == partition_value(g, potts(q, w))


@settings(max_examples=30)
@given(multigraphs(max_n=5, max_m=7))
def test_memo_does_not_change_polynomial(g):
    assert rc_polynomial(g, memo=True) == rc_polynomial(g, memo=False)


def test_rc_budget():
    with pytest.raises(CapExceeded):
        rc_polynomial(catalog.petersen(), memo=False, budget=100)


def test_rc_params_validation():
    with pytest.raises(ValueError):
        RCParams(-1, 1)
    with pytest.raises(ValueError):
        RCParams(1, -1)


def test_tutte_conversion():
    # T(K3; x, y) = x^2 + x + y
    x, y = Fraction(3), Fraction(5)
    assert tutte_from_rc(catalog.complete(3), x, y) == x**2 + x + y
    # T(C4; 2, 2) = 2^4 spanning subgraphs
    assert tutte_from_rc(catalog.cycle(4), 2, 2) == 16


def test_fkg_example():
    res = fkg_check(catalog.cycle(4), 2, 1, 0, 1)
    assert res.lhs >= res.rhs and res.ok and isinstance(res.lhs, Fraction)


@settings(max_examples=40)
@given(multigraphs(max_n=5, max_m=7), st.sampled_from([1, 2, 3]), st.sampled_from([Fraction(1, 2), 1, 2]), st.data())
def test_fkg_property(g, q, w, data):
    if g.m < 2:
        return
    e, f = data.draw(st.lists(st.integers(0, g.m - 1), min_size=2, max_size=2, unique=True))
    assert fkg_check(g, q, w, e, f).ok


@settings(max_examples=40)
@given(multigraphs(max_n=5, max_m=7), st.sampled_from([1, Fraction(3, 2), 2, 3]), st.sampled_from([0, Fraction(1, 2), 1, 2]))
def test_potts_sidorenko(g, q, w):
    z = random_cluster(g, q, w)
    b1, b2 = potts_sidorenko_bounds(g, q, w)
    assert z >= b1 and z >= b2


def test_eval_polynomial_consistency():
    poly = rc_polynomial(catalog.petersen())
    assert eval_rc_polynomial(poly, 2, 1) == partition_value(catalog.petersen(), potts(2, 1))
    rng = random.Random(1)
    for _ in range(3):
        q, w = Fraction(rng.randint(1, 9), 3), Fraction(rng.randint(0, 9), 4)
        assert eval_rc_polynomial(poly, q, w) == random_cluster(catalog.petersen(), q, w)
