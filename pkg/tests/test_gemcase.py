'''
    Tests the gem-anchored partition, its structural checks and the precoloring procedure.
'''
import dataclasses

import pytest

from p6bull.constants import PALETTE
from p6bull.datastructures import DecisionContext, Outcome, Status
from p6bull.exceptions import ContractError, InvariantViolationError
from p6bull.gemcase import (
    big_components,
    build_partition,
    color_with_gem,
    describe_partition,
    extend_precoloring,
    peel_and_extend,
    precolored_set,
    select_w_star,
    verify_partition,
)
from p6bull.graph import build
from p6bull.listcolor import exact_k_color, exact_list_color, iter_precolorings
from p6bull.oracles import ExactOracle
from p6bull.patterns import GEM, Embedding, find_induced, is_in_class
from p6bull.pipeline import decide4

from .utils import assert_proper, cycle

IDENTITY = Embedding('gem', (0, 1, 2, 3, 4))

############################################################
# Example graphs: the gem 0..4 (path 0-1-2-3, hub 4) plus attachments
############################################################
# region
# x = 5 sees v1 and v4
GEM_X = build(6, list(GEM.edges) + [(5, 0), (5, 3)])
# plus w = 6 on v5 and x, z = 7 on w and x
GEM_XWZ = build(8, list(GEM.edges) + [(5, 0), (5, 3), (6, 4), (6, 5), (7, 6), (7, 5)])
# plus a vertex 6 hanging off x only
GEM_X_Z0 = build(7, list(GEM.edges) + [(5, 0), (5, 3), (6, 5)])
# two adjacent X vertices
GEM_XX = build(7, list(GEM.edges) + [(5, 0), (5, 3), (6, 0), (6, 3), (5, 6)])
# a second V5 vertex adjacent to v5
GEM_V5_EDGE = build(7, list(GEM.edges) + [(5, 0), (5, 3), (6, 0), (6, 1), (6, 2), (6, 3), (6, 4)])
# plus w = 7 on x and on one or both sides of the V5 edge 4-6
GEM_V5_WA = build(8, list(GEM_V5_EDGE.edges()) + [(7, 5), (7, 4)])
GEM_V5_WB = build(8, list(GEM_V5_EDGE.edges()) + [(7, 5), (7, 6)])
GEM_V5_WD = build(8, list(GEM_V5_EDGE.edges()) + [(7, 5), (7, 4), (7, 6)])
# GEM_XWZ plus z = 8 on z and x: w sees only part of Z1
GEM_Z_STAR = build(9, list(GEM_XWZ.edges()) + [(8, 7), (8, 5)])
# endregion


def _ctx():
    return DecisionContext(oracle=ExactOracle())


def _extends(G, f) -> bool:
    lists = {v: frozenset({f[v]}) if v in f else frozenset(PALETTE) for v in range(G.n)}
    return exact_list_color(G, lists) is not None


############################################################
# Partition
############################################################
# region
def test_examples_are_in_class():
    for G in (GEM_X, GEM_XWZ, GEM_X_Z0, GEM_XX, GEM_V5_EDGE, GEM_V5_WA, GEM_V5_WB, GEM_V5_WD, GEM_Z_STAR):
        assert is_in_class(G) is None
        assert find_induced(G, GEM) == IDENTITY


def test_partition_of_gem():
    P = build_partition(GEM.graph, IDENTITY)
    assert P.S == (0, 1, 2, 3, 4)
    assert P.V == tuple(frozenset({i}) for i in range(5))
    assert P.X == P.W == P.Z == P.Z0 == P.Z1 == frozenset()
    assert verify_partition(GEM.graph, P) == ['a']


def test_partition_with_x():
    P = build_partition(GEM_X, IDENTITY)
    assert P.V == tuple(frozenset({i}) for i in range(5))
    assert P.X == frozenset({5})
    assert P.W == P.Z == frozenset()
    assert verify_partition(GEM_X, P) == []


def test_partition_with_w_and_z():
    P = build_partition(GEM_XWZ, IDENTITY)
    assert P.X == frozenset({5})
    assert P.W == frozenset({6})
    assert P.Z == P.Z1 == frozenset({7})
    assert P.Z0 == frozenset()
    assert verify_partition(GEM_XWZ, P) == []
    assert select_w_star(GEM_XWZ, P) == 6
    assert big_components(GEM_XWZ, P) == []


def test_partition_with_z0():
    P = build_partition(GEM_X_Z0, IDENTITY)
    assert P.Z0 == frozenset({6})
    assert P.Z1 == frozenset()
    assert verify_partition(GEM_X_Z0, P) == []


def test_partition_v5_edge():
    P = build_partition(GEM_V5_EDGE, IDENTITY)
    assert P.V[4] == frozenset({4, 6})
    (data,) = big_components(GEM_V5_EDGE, P)
    assert data.A == frozenset({4})
    assert data.B == frozenset({6})
    assert data.W_A == data.W_B == data.W_D == frozenset()


@pytest.mark.parametrize('G, W_A, W_B, W_D', [
    (GEM_V5_WA, {7}, set(), set()),
    (GEM_V5_WB, set(), {7}, set()),
    (GEM_V5_WD, set(), set(), {7}),
], ids=['a', 'b', 'd'])
def test_partition_v5_edge_with_w(G, W_A, W_B, W_D):
    P = build_partition(G, IDENTITY)
    assert P.V[4] == frozenset({4, 6})
    assert P.W == frozenset({7})
    assert P.Z == frozenset()
    assert verify_partition(G, P) == []
    (data,) = big_components(G, P)
    assert (data.A, data.B) == ({4}, {6})
    assert (data.W_A, data.W_B, data.W_D) == (W_A, W_B, W_D)


def test_partition_with_partial_w_star():
    P = build_partition(GEM_Z_STAR, IDENTITY)
    assert P.W == frozenset({6})
    assert P.Z == P.Z1 == frozenset({7, 8})
    assert verify_partition(GEM_Z_STAR, P) == []
    # w* = 6 sees 7 but not 8
    assert select_w_star(GEM_Z_STAR, P) == 6


def test_corrupted_partition():
    P = build_partition(GEM_X, IDENTITY)
    broken = dataclasses.replace(P, X=frozenset(), W=frozenset({5}))
    violated = verify_partition(GEM_X, broken)
    assert 'a' in violated
    assert 'e' in violated

    overlapping = dataclasses.replace(P, W=frozenset({5}))
    assert 'c' in verify_partition(GEM_X, overlapping)


def test_partition_needs_a_gem():
    with pytest.raises(ContractError):
        build_partition(cycle(5), IDENTITY)
    with pytest.raises(ContractError):
        build_partition(GEM_X, Embedding('gem', (4, 0, 1, 2, 3)))


def test_lexicographic_gem_anchor():
    assert find_induced(GEM_XWZ, GEM) == IDENTITY


def test_describe_partition():
    P = build_partition(GEM_XWZ, IDENTITY)
    assert describe_partition(P) == {
        'V1': [0], 'V2': [1], 'V3': [2], 'V4': [3], 'V5': [4],
        'X': [5], 'W': [6], 'Z0': [], 'Z1': [7],
    }


def test_precolored_set():
    assert precolored_set(build_partition(GEM_X, IDENTITY)) == [0, 1, 2, 3, 5]
    assert precolored_set(build_partition(GEM_XX, IDENTITY)) == [0, 1, 2, 3, 4, 5, 6]
# endregion


############################################################
# Precoloring extension
############################################################
# region
@pytest.mark.parametrize(
    'G',
    [GEM_X, GEM_XWZ, GEM_XX, GEM_V5_EDGE, GEM_V5_WA, GEM_V5_WB, GEM_V5_WD, GEM_Z_STAR],
    ids=['x', 'xwz', 'xx', 'v5-edge', 'v5-wa', 'v5-wb', 'v5-wd', 'z-star'],
)
def test_extension_matches_exact_search(G):
    P = build_partition(G, IDENTITY)
    for f in iter_precolorings(G, precolored_set(P)):
        coloring = extend_precoloring(G, P, f, _ctx())
        assert (coloring is not None) == _extends(G, f), f
        if coloring is not None:
            assert_proper(G, coloring)
            assert all(coloring[v] == c for v, c in f.items())


@pytest.mark.parametrize(
    'G',
    [GEM_X, GEM_XWZ, GEM_V5_EDGE, GEM_V5_WA, GEM_V5_WB, GEM_Z_STAR],
    ids=['x', 'xwz', 'v5-edge', 'v5-wa', 'v5-wb', 'z-star'],
)
def test_swapping_free_colors_keeps_verdict(G):
    P = build_partition(G, IDENTITY)
    swap = {1: 1, 2: 2, 3: 4, 4: 3}
    for f in iter_precolorings(G, precolored_set(P)):
        if len({f[v] for v in P.S[:4]}) != 2:
            continue
        swapped = {v: swap[c] for v, c in f.items()}
        assert (extend_precoloring(G, P, f, _ctx()) is None) == (extend_precoloring(G, P, swapped, _ctx()) is None)


def test_v5_edge_blocks_forced_case():
    P = build_partition(GEM_V5_EDGE, IDENTITY)
    f = {0: 1, 1: 2, 2: 1, 3: 3, 5: 2}
    assert extend_precoloring(GEM_V5_EDGE, P, f, _ctx()) is None


@pytest.mark.parametrize('G, phi_side, other_side', [(GEM_V5_WA, 4, 6), (GEM_V5_WB, 6, 4)], ids=['a', 'b'])
def test_stable_sides_give_private_w_side_the_x_color(G, phi_side, other_side):
    # two colors on v1..v4; the side of the V5 edge with a private W-neighbor takes the color of x
    P = build_partition(G, IDENTITY)
    f = {0: 1, 1: 2, 2: 1, 3: 2, 5: 3}
    coloring = extend_precoloring(G, P, f, _ctx())
    assert_proper(G, coloring)
    assert coloring[phi_side] == 3
    assert coloring[other_side] == 4
    assert coloring[7] != 3


def test_forced_v5_precolors_w_star_and_a_z1_neighbor():
    # three colors on v1..v4 force v5 to 4; x = 2 differs from it, so w* and its Z1 neighbor are precolored
    P = build_partition(GEM_Z_STAR, IDENTITY)
    f = {0: 1, 1: 2, 2: 1, 3: 3, 5: 2}
    ctx = _ctx()
    coloring = extend_precoloring(GEM_Z_STAR, P, f, ctx)
    assert_proper(GEM_Z_STAR, coloring)
    assert all(coloring[v] == c for v, c in f.items())
    assert coloring[4] == 4
    assert ctx.stats.precolorings >= 1
    assert ctx.stats.two_sat_calls >= 1
# endregion


############################################################
# color_with_gem and peeling
############################################################
# region
@pytest.mark.parametrize('G', [GEM_X, GEM_XWZ, GEM_XX], ids=['x', 'xwz', 'xx'])
def test_color_with_gem(G):
    ctx = _ctx()
    outcome = color_with_gem(G, build_partition(G, IDENTITY), ctx)
    assert outcome.status is Status.four_colorable
    assert_proper(G, outcome.coloring)
    assert [event.step for event in ctx.trace] == ['gem-precolor', 'gem-extend']
    assert ctx.stats.precolorings >= 1


def test_color_with_gem_trace_details():
    ctx = _ctx()
    color_with_gem(GEM_X, build_partition(GEM_X, IDENTITY), ctx)
    assert '|X|=1' in ctx.trace[0].detail
    assert ctx.trace[1].detail.startswith('case ')

    ctx = _ctx()
    color_with_gem(GEM_XX, build_partition(GEM_XX, IDENTITY), ctx)
    assert '|X|=2' in ctx.trace[0].detail
    assert ctx.trace[1].detail == 'precolored S + X'


def test_color_with_gem_preconditions():
    with pytest.raises(ContractError):
        color_with_gem(GEM_X_Z0, build_partition(GEM_X_Z0, IDENTITY))
    with pytest.raises(InvariantViolationError) as exc_info:
        color_with_gem(GEM.graph, build_partition(GEM.graph, IDENTITY))
    assert exc_info.value.claims == ['x-clique']


def test_peel_without_z0_passes_through():
    def recurse(sub):
        raise AssertionError('no recursion expected')

    outcome = peel_and_extend(GEM_X, build_partition(GEM_X, IDENTITY), recurse)
    assert outcome.is_colorable


def test_peel_z0():
    ctx = _ctx()
    P = build_partition(GEM_X_Z0, IDENTITY)
    inner = decide4(GEM_X)
    outcome = peel_and_extend(GEM_X_Z0, P, lambda sub: decide4(sub), ctx)
    assert outcome.is_colorable
    assert_proper(GEM_X_Z0, outcome.coloring)
    assert outcome.coloring[6] != outcome.coloring[5]
    assert {v: outcome.coloring[v] for v in range(6)} == inner.coloring
    assert ctx.trace[0].step == 'peel-z0'


def test_peel_propagates_infeasible():
    outcome = peel_and_extend(GEM_X_Z0, build_partition(GEM_X_Z0, IDENTITY), lambda sub: Outcome.not_four_colorable())
    assert outcome.status is Status.not_four_colorable


def test_gem_examples_match_oracle():
    for G in (GEM_X, GEM_XWZ, GEM_X_Z0, GEM_XX, GEM_V5_WA, GEM_V5_WB, GEM_V5_WD, GEM_Z_STAR):
        outcome = decide4(G)
        assert outcome.is_colorable == (exact_k_color(G, 4) is not None)
# endregion
