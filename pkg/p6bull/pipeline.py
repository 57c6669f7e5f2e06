'''
    Top-level decision procedure: is a (P6, bull)-free graph 4-colorable, and if so, a 4-coloring.

    The graph is split into components and co-components, reduced to a quasi-prime graph, and then
    routed by the small structures it contains: K5 or a double wheel (reject), one of F0..F6
    (precolor it as a magnet), a gem (gem-anchored precoloring), or none of these (gem-free route).
'''
import logging
from typing import List, Optional, Tuple

from p6bull.constants import PALETTE
from p6bull.datastructures import DecisionContext, Outcome, TraceEvent
from p6bull.exceptions import InvariantViolationError
from p6bull.gemcase import build_partition, describe_partition, peel_and_extend, verify_partition
from p6bull.gemfree import GemFreeRoute, decide_gemfree
from p6bull.graph import Graph, complement, component_masks, induced_mask, is_clique_mask, verify_coloring
from p6bull.listcolor import chromatic_small, magnet_color
from p6bull.modular import lift_coloring, quasi_prime_reduce
from p6bull.oracles import ColoringOracle, ExactOracle
from p6bull.patterns import DOUBLE_WHEEL, F_PATTERNS, GEM, K5, find_induced, is_in_class, is_magnet
from p6bull.types import Coloring

logger = logging.getLogger(__name__)


def decide4(G: Graph, oracle: Optional[ColoringOracle] = None, strict_class: bool = True) -> Outcome:
    return decide4_with_trace(G, oracle=oracle, strict_class=strict_class)[0]


def decide4_with_trace(
    G: Graph,
    oracle: Optional[ColoringOracle] = None,
    strict_class: bool = True,
) -> Tuple[Outcome, List[TraceEvent]]:
    ctx = DecisionContext(oracle=oracle or ExactOracle(), strict_class=strict_class)
    ctx.stats.class_checked = strict_class
    calls_before = ctx.oracle.total_calls

    try:
        outcome = _decide(G, ctx)
    except InvariantViolationError as e:
        logger.error('invariant violation on a graph with %d vertices: %s', G.n, e)
        ctx.log('invariant-violation', f"{', '.join(e.claims)}: {e.detail}")
        outcome = Outcome.invariant_violation(e.claims, e.detail)

    if outcome.is_colorable and not verify_coloring(G, outcome.coloring, len(PALETTE)):
        logger.error('decide4 produced an improper coloring on a graph with %d vertices', G.n)
        outcome = Outcome.invariant_violation(['soundness'], 'returned coloring is not a proper 4-coloring')

    ctx.stats.oracle_calls = ctx.oracle.total_calls - calls_before
    outcome.stats = ctx.stats
    return outcome, ctx.trace


def _recurse(ctx: DecisionContext, sub: Graph) -> Outcome:
    ctx.depth += 1
    try:
        return _decide(sub, ctx)
    finally:
        ctx.depth -= 1


def _lift(outcome: Outcome, mapping: Tuple[int, ...]) -> Coloring:
    return {mapping[i]: c for i, c in outcome.coloring.items()}


def _decide(G: Graph, ctx: DecisionContext) -> Outcome:
    ctx.stats.max_depth = max(ctx.stats.max_depth, ctx.depth)

    if ctx.strict_class:
        witness = is_in_class(G)
        if witness is not None:
            ctx.log('class', f"induced {witness.pattern} at {list(witness.mapping)}")
            if ctx.depth > 0:
                raise InvariantViolationError(['class'], f"derived graph contains an induced {witness.pattern}")
            return Outcome.out_of_class(witness)

    if G.n <= 1:
        ctx.log('trivial', f"{G.n} vertices")
        return Outcome.four_colorable({v: 1 for v in range(G.n)})

    comps = component_masks(G)
    if len(comps) > 1:
        ctx.log('components', f"{len(comps)} components")
        ctx.route('components')
        coloring: Coloring = {}
        for comp in comps:
            sub, mapping = induced_mask(G, comp)
            outcome = _recurse(ctx, sub)
            if not outcome.is_colorable:
                return outcome
            coloring.update(_lift(outcome, mapping))
        return Outcome.four_colorable(coloring)

    co_comps = component_masks(complement(G))
    if len(co_comps) > 1:
        return _decide_co_components(G, co_comps, ctx)

    reduction = quasi_prime_reduce(G, ctx.oracle)
    if reduction is None:
        ctx.log('reduce', 'a maximal module is not 3-colorable')
        ctx.route('reduce')
        return Outcome.not_four_colorable()
    if reduction.rounds:
        ctx.log('reduce', f"{G.n} -> {reduction.graph.n} vertices, {len(reduction.records)} modules replaced")
        ctx.route('reduce')

    outcome = _decide_reduced(reduction.graph, ctx)
    if outcome.is_colorable and reduction.rounds:
        return Outcome.four_colorable(lift_coloring(outcome.coloring, reduction))
    return outcome


def _decide_co_components(G: Graph, co_comps: List[int], ctx: DecisionContext) -> Outcome:
    '''Co-components are complete to each other, so chi(G) is the sum of their chromatic numbers.'''
    ctx.route('co-components')
    parts = []
    for comp in co_comps:
        sub, mapping = induced_mask(G, comp)
        parts.append((sub, mapping, chromatic_small(sub, ctx.oracle)))
    total = sum(chi for _, _, chi in parts)
    ctx.log('co-components', f"chromatic numbers {[chi for _, _, chi in parts]}")
    if total > len(PALETTE):
        return Outcome.not_four_colorable()

    coloring: Coloring = {}
    offset = 0
    for sub, mapping, chi in parts:
        sub_coloring = ctx.oracle.k_color(sub, chi)
        if sub_coloring is None:
            raise InvariantViolationError(['co-components'], f"co-component has no {chi}-coloring")
        coloring.update({mapping[i]: c + offset for i, c in sub_coloring.items()})
        offset += chi
    return Outcome.four_colorable(coloring)


def _decide_reduced(G: Graph, ctx: DecisionContext) -> Outcome:
    '''G is connected, co-connected and quasi-prime.'''
    for pattern in (K5, DOUBLE_WHEEL):
        embedding = find_induced(G, pattern)
        if embedding is not None:
            ctx.log('reject', f"{pattern.name} at {list(embedding.mapping)}")
            ctx.route(f'reject:{pattern.name}')
            return Outcome.not_four_colorable()

    # F1..F6 are magnets only once F0 is known to be absent
    for pattern in F_PATTERNS:
        embedding = find_induced(G, pattern)
        if embedding is None:
            continue
        if not is_magnet(G, embedding.vertices):
            raise InvariantViolationError([pattern.name], f"{pattern.name} at {list(embedding.mapping)} is not a magnet")
        ctx.log('magnet', f"{pattern.name} at {list(embedding.mapping)}")
        ctx.route(f'magnet:{pattern.name}')
        return _magnet_outcome(G, embedding.vertices, ctx)

    gem = find_induced(G, GEM)
    if gem is not None:
        return _decide_with_gem(G, gem, ctx)

    verdict = decide_gemfree(G, len(PALETTE), ctx.oracle, check_class=False)
    ctx.log('gem-free', verdict.route.value)
    ctx.route(f'gem-free:{verdict.route.value}')
    if verdict.route is GemFreeRoute.perfect and not verdict.feasible:
        # K5 was rejected above, so a perfect graph here has omega <= 4
        raise InvariantViolationError(['perfect'], "perfect graph without K5 reported as not 4-colorable")
    if verdict.feasible:
        return Outcome.four_colorable(verdict.coloring)
    return Outcome.not_four_colorable()


def _magnet_outcome(G: Graph, F, ctx: DecisionContext) -> Outcome:
    result = magnet_color(G, F)
    ctx.stats.precolorings += result.trials
    ctx.stats.two_sat_calls += result.two_sat_calls
    if result.feasible:
        return Outcome.four_colorable(result.coloring)
    return Outcome.not_four_colorable()


def _decide_with_gem(G: Graph, gem, ctx: DecisionContext) -> Outcome:
    ctx.log('gem', f"v1..v5 = {list(gem.mapping)}")
    if is_magnet(G, gem.vertices):
        ctx.log('gem-magnet', 'the gem is a magnet')
        ctx.route('gem-magnet')
        return _magnet_outcome(G, gem.vertices, ctx)

    ctx.route('gem')
    P = build_partition(G, gem)
    logger.debug('gem partition: %s', describe_partition(P))
    violated = verify_partition(G, P)
    if violated:
        raise InvariantViolationError(violated, f"gem partition {describe_partition(P)}")
    ctx.log('gem-partition', f"|X|={len(P.X)}, |W|={len(P.W)}, |Z0|={len(P.Z0)}, |Z1|={len(P.Z1)}")

    if not P.Z0 and not is_clique_mask(G, P.mask('X')):
        # a non-clique homogeneous X; reduction removes those before routing
        raise InvariantViolationError(['x-clique'], f"X = {sorted(P.X)} is not a clique in a quasi-prime graph")

    return peel_and_extend(G, P, lambda sub: _recurse(ctx, sub), ctx)
