'''
    Tests the 2-SAT list coloring, the exact oracles and magnet precoloring.
'''
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p6bull.constants import AT_LEAST_FIVE
from p6bull.exceptions import ContractError
from p6bull.generate import from_networkx
from p6bull.graph import build
from p6bull.listcolor import (
    chromatic_small,
    exact_k_color,
    exact_list_color,
    iter_precolorings,
    lists_from_precoloring,
    magnet_color,
    strongly_connected_components,
    two_list_color,
)
from p6bull.oracles import ExactOracle
from p6bull.patterns import DOUBLE_WHEEL, F0, F_PATTERNS, find_induced, is_magnet

from .utils import assert_proper, clique, cycle, path, to_networkx


def _random_graph(rng: random.Random, n: int, p: float):
    return from_networkx(nx.gnp_random_graph(n, p, seed=rng.getrandbits(32)))


############################################################
# 2-SAT
############################################################
# region
def test_scc_on_cycle_and_chain():
    comp = strongly_connected_components([[1], [2], [0], [4], []])
    assert comp[0] == comp[1] == comp[2]
    assert len({comp[0], comp[3], comp[4]}) == 3
    # 4 is reachable from 3, so its component completes first
    assert comp[4] < comp[3]
    assert comp[0] == 0


def test_triangle_with_two_colors():
    lists = {v: frozenset({1, 2}) for v in range(3)}
    assert two_list_color(clique(3), lists) is None


def test_edge_with_singleton():
    lists = {0: frozenset({1}), 1: frozenset({1, 2})}
    assert two_list_color(build(2, [(0, 1)]), lists) == {0: 1, 1: 2}


def test_c5_with_one_fixed_vertex():
    lists = {v: frozenset({1, 2}) for v in range(4)}
    lists[4] = frozenset({3})
    coloring = two_list_color(cycle(5), lists)
    assert coloring is not None
    assert coloring[4] == 3
    assert_proper(cycle(5), coloring)


def test_empty_list_is_infeasible():
    assert two_list_color(path(2), {0: frozenset(), 1: frozenset({1})}) is None


def test_list_too_long():
    with pytest.raises(ContractError):
        two_list_color(path(2), {0: frozenset({1, 2, 3}), 1: frozenset({1})})


def test_partial_domain():
    # vertex 2 is outside the list domain and does not constrain anything
    coloring = two_list_color(path(3), {0: frozenset({1}), 1: frozenset({1, 2})})
    assert coloring == {0: 1, 1: 2}


def test_two_list_matches_exact_on_random_instances():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 12)
        G = _random_graph(rng, n, rng.choice((0.2, 0.4, 0.6)))
        lists = {v: frozenset(rng.sample((1, 2, 3, 4), rng.randint(1, 2))) for v in range(n)}
        fast = two_list_color(G, lists)
        exact = exact_list_color(G, lists)
        assert (fast is None) == (exact is None), (G, lists)
        if fast is not None:
            assert all(fast[v] in lists[v] for v in range(n))
            assert_proper(G, fast)
# endregion


############################################################
# Exact oracles
############################################################
# region
def test_exact_list_color_k5():
    lists = {v: frozenset({1, 2, 3, 4}) for v in range(5)}
    assert exact_list_color(clique(5), lists) is None


def test_exact_list_color_empty():
    assert exact_list_color(build(0, []), {}) == {}


def test_exact_list_color_respects_lists():
    lists = {0: frozenset({4}), 1: frozenset({3, 4}), 2: frozenset({1, 3, 4})}
    coloring = exact_list_color(clique(3), lists)
    assert coloring == {0: 4, 1: 3, 2: 1}


@pytest.mark.parametrize('G, k, feasible', [
    (cycle(5), 2, False),
    (cycle(5), 3, True),
    (DOUBLE_WHEEL.graph, 4, False),
    (clique(5), 4, False),
    (clique(4), 4, True),
    (build(3, []), 1, True),
])
def test_exact_k_color(G, k, feasible):
    coloring = exact_k_color(G, k)
    assert (coloring is not None) == feasible
    if coloring is not None:
        assert_proper(G, coloring, k)


def test_exact_k_color_edge_cases():
    assert exact_k_color(build(0, []), 3) == {}
    assert exact_k_color(path(2), 0) is None


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=9), st.floats(min_value=0.1, max_value=0.9), st.integers(0, 10 ** 6))
def test_exact_k_color_monotone_and_matches_networkx(n, p, seed):
    G = _random_graph(random.Random(seed), n, p)
    H = to_networkx(G)
    greedy = max(nx.greedy_color(H, strategy='DSATUR').values(), default=-1) + 1
    feasible = [exact_k_color(G, k) is not None for k in range(1, 6)]
    # monotone in k
    assert feasible == sorted(feasible)
    # greedy colorings are upper bounds on the chromatic number
    if greedy <= 5:
        assert feasible[greedy - 1]


@pytest.mark.parametrize('G, expected', [
    (build(0, []), 0),
    (build(3, []), 1),
    (path(4), 2),
    (build(4, [(0, 1), (2, 3)]), 2),
    (cycle(5), 3),
    (clique(4), 4),
    (clique(5), AT_LEAST_FIVE),
    (DOUBLE_WHEEL.graph, AT_LEAST_FIVE),
])
def test_chromatic_small(G, expected):
    assert chromatic_small(G) == expected
    assert chromatic_small(G, ExactOracle()) == expected


def test_oracle_counts_calls():
    oracle = ExactOracle()
    chromatic_small(cycle(5), oracle)
    assert oracle.calls['k_color'] == 1
    oracle.list_color(path(2), {0: frozenset({1}), 1: frozenset({1, 2})})
    assert oracle.total_calls == 2
# endregion


############################################################
# Precoloring
############################################################
# region
def test_iter_precolorings_order():
    colorings = list(iter_precolorings(path(2), [0, 1], palette=(1, 2, 3)))
    assert [(c[0], c[1]) for c in colorings] == [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]


def test_iter_precolorings_with_base():
    colorings = list(iter_precolorings(path(3), [1], base={0: 1, 2: 2}))
    assert colorings == [{0: 1, 2: 2, 1: 3}, {0: 1, 2: 2, 1: 4}]


def test_iter_precolorings_counts():
    # proper 4-colorings of K3
    assert len(list(iter_precolorings(clique(3), [0, 1, 2]))) == 24
    assert list(iter_precolorings(path(2), [])) == [{}]


def test_lists_from_precoloring():
    lists = lists_from_precoloring(cycle(5), {0: 1, 2: 2})
    assert lists == {1: frozenset({3, 4}), 3: frozenset({1, 3, 4}), 4: frozenset({2, 3, 4})}
    lists = lists_from_precoloring(cycle(5), {0: 1, 2: 2}, targets=frozenset({1}))
    assert lists == {1: frozenset({3, 4})}
# endregion


############################################################
# Magnets
############################################################
# region
def test_magnet_k5_triangle():
    result = magnet_color(clique(5), frozenset({0, 1, 2}))
    assert not result.feasible
    assert result.trials == 24
    assert result.two_sat_calls == 24


def test_magnet_double_wheel():
    F = frozenset({0, 1, 5, 6})
    assert is_magnet(DOUBLE_WHEEL.graph, F)
    assert not magnet_color(DOUBLE_WHEEL.graph, F).feasible


def test_magnet_k4_plus_vertex():
    G = build(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)])
    result = magnet_color(G, frozenset({0, 1, 2, 3}))
    assert result.feasible
    assert result.trials == 1
    assert_proper(G, result.coloring)
    assert result.coloring[4] in (3, 4)


def test_magnet_precondition():
    with pytest.raises(ContractError):
        magnet_color(path(2), frozenset({0}))
    with pytest.raises(ContractError):
        magnet_color(path(2), frozenset({0, 5}))


@pytest.mark.parametrize('pattern', F_PATTERNS, ids=[p.name for p in F_PATTERNS])
def test_magnet_on_f_pattern_matches_oracle(pattern):
    result = magnet_color(pattern.graph, frozenset(range(pattern.order)))
    assert result.feasible == (exact_k_color(pattern.graph, 4) is not None)


def test_magnet_on_f0_with_attachments_matches_oracle():
    rng = random.Random(7)
    checked = 0
    for _ in range(300):
        edges = list(F0.edges)
        for x in (7, 8):
            edges.extend((x, v) for v in range(x) if rng.random() < 0.5)
        G = build(9, edges)
        embedding = find_induced(G, F0)
        if embedding is None or not is_magnet(G, embedding.vertices):
            continue
        result = magnet_color(G, embedding.vertices)
        assert result.feasible == (exact_k_color(G, 4) is not None)
        if result.feasible:
            assert_proper(G, result.coloring)
        checked += 1
    assert checked > 0
# endregion
