'''
    Deciding 4-colorability of a quasi-prime graph that contains a gem.

    The gem v1..v5 (path v1-v2-v3-v4, v5 adjacent to all four) splits the vertex set into
    V1..V5, X, W and Z = Z0 + Z1. `verify_partition` checks the structural facts (a)..(k) that hold
    for every input reaching this stage; the coloring procedure relies on them and reports any
    failure as an invariant violation instead of guessing.

    Items:
        a   X is not empty
        b   X is anticomplete to V2, V3, V5 and complete to V1, V4
        c   the sets are pairwise disjoint and cover V(G)
        d   V5 is complete to V1..V4
        e   W is complete to X and anticomplete to V1..V4
        f   Z is anticomplete to V1..V4
        g   Z1 is complete to X
        h   every component of X is homogeneous and a clique
        i   every component of Z0 is homogeneous and a clique
        j   X is homogeneous in G - Z0
        k   if Z1 is not empty, some w* in W has N(w*) & Z1 complete to Z1 - N(w*)
'''
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from p6bull.constants import PALETTE
from p6bull.datastructures import DecisionContext, Outcome
from p6bull.exceptions import ContractError, InvariantViolationError
from p6bull.graph import (
    Graph,
    bipartition_mask,
    component_masks,
    induced_mask,
    is_clique_mask,
    is_stable_mask,
    iter_bits,
    lowest,
    mask_of,
    popcount,
    to_set,
    verify_coloring,
)
from p6bull.listcolor import iter_precolorings, lists_from_precoloring, two_list_color
from p6bull.modular import is_homogeneous_mask
from p6bull.oracles import ExactOracle
from p6bull.patterns import GEM, Embedding
from p6bull.types import Coloring, ColoringMap, VertexSet

logger = logging.getLogger(__name__)

Recurse = Callable[[Graph], Outcome]


@dataclass(frozen=True)
class GemPartition:
    S: Tuple[int, int, int, int, int]
    V: Tuple[VertexSet, VertexSet, VertexSet, VertexSet, VertexSet]
    X: VertexSet
    W: VertexSet
    Z: VertexSet
    Z0: VertexSet
    Z1: VertexSet

    def mask(self, name: str) -> int:
        '''Bitmask of one part: "V1".."V5", "X", "W", "Z", "Z0", "Z1" or "S".'''
        if name == 'S':
            return mask_of(self.S)
        if name.startswith('V'):
            return mask_of(self.V[int(name[1:]) - 1])
        return mask_of(getattr(self, name))


@dataclass
class BigComponentData:
    A: VertexSet
    B: VertexSet
    W_A: VertexSet
    W_B: VertexSet
    W_D: VertexSet
    d: Optional[int] = None


def _complete(G: Graph, a: int, b: int) -> bool:
    return all(G.adj[v] & b & ~(1 << v) == b & ~(1 << v) for v in iter_bits(a))


def _anticomplete(G: Graph, a: int, b: int) -> bool:
    return all(G.adj[v] & b == 0 for v in iter_bits(a))


def _check_gem(G: Graph, gem: Embedding) -> None:
    mapping = gem.mapping
    if len(mapping) != 5 or len(set(mapping)) != 5 or any(not 0 <= v < G.n for v in mapping):
        raise ContractError(f"{list(mapping)} is not five distinct vertices of the graph")
    for i in range(5):
        for j in range(i + 1, 5):
            if G.has_edge(mapping[i], mapping[j]) != GEM.graph.has_edge(i, j):
                raise ContractError(f"{list(mapping)} does not induce a gem with roles v1..v5")


def build_partition(G: Graph, gem: Embedding) -> GemPartition:
    _check_gem(G, gem)
    S = tuple(gem.mapping)
    s_mask = mask_of(S)
    v1, v2, v3, v4, v5 = S
    inner = mask_of((v1, v2, v3, v4))

    V: List[int] = []
    for vi in S:
        own = G.adj[vi] & s_mask
        V.append(mask_of(
            x for x in range(G.n)
            if G.adj[x] & s_mask & ~(1 << vi) == own
        ))

    X = mask_of(
        x for x in range(G.n)
        if G.has_edge(x, v1) and G.has_edge(x, v4) and not G.has_edge(x, v2) and not G.has_edge(x, v3)
    )
    W = mask_of(x for x in range(G.n) if G.adj[x] & inner == 0 and G.adj[x] & V[4])
    Z = mask_of(x for x in range(G.n) if G.adj[x] & (inner | V[4]) == 0 and not (V[4] >> x & 1))
    Z1 = 0
    for comp in component_masks(G, Z):
        if any(G.adj[z] & W for z in iter_bits(comp)):
            Z1 |= comp

    return GemPartition(
        S=S,  # type: ignore[arg-type]
        V=tuple(to_set(m) for m in V),  # type: ignore[arg-type]
        X=to_set(X),
        W=to_set(W),
        Z=to_set(Z),
        Z0=to_set(Z & ~Z1),
        Z1=to_set(Z1),
    )


def select_w_star(G: Graph, P: GemPartition) -> Optional[int]:
    '''Least vertex of W with a neighbor in Z1 whose Z1-neighborhood is complete to the rest of Z1.'''
    Z1 = P.mask('Z1')
    for w in sorted(P.W):
        seen = G.adj[w] & Z1
        if seen and _complete(G, seen, Z1 & ~seen):
            return w
    return None


def verify_partition(G: Graph, P: GemPartition) -> List[str]:
    V1, V2, V3, V4, V5 = (P.mask(f'V{i}') for i in range(1, 6))
    X, W, Z, Z0, Z1 = (P.mask(name) for name in ('X', 'W', 'Z', 'Z0', 'Z1'))
    inner = V1 | V2 | V3 | V4
    failed = []

    if not X:
        failed.append('a')

    if not (_anticomplete(G, X, V2 | V3 | V5) and _complete(G, X, V1 | V4)):
        failed.append('b')

    parts = [V1, V2, V3, V4, V5, X, W, Z]
    union = 0
    disjoint = True
    for part in parts:
        disjoint &= union & part == 0
        union |= part
    roles_ok = all(P.mask(f'V{i + 1}') >> P.S[i] & 1 for i in range(5))
    if not (disjoint and union == G.full and roles_ok and Z0 & Z1 == 0 and Z0 | Z1 == Z):
        failed.append('c')

    if not _complete(G, V5, inner):
        failed.append('d')

    if not (_complete(G, W, X) and _anticomplete(G, W, inner)):
        failed.append('e')

    if not _anticomplete(G, Z, inner):
        failed.append('f')

    if not _complete(G, Z1, X):
        failed.append('g')

    if not all(is_homogeneous_mask(G, c) and is_clique_mask(G, c) for c in component_masks(G, X)):
        failed.append('h')

    if not all(is_homogeneous_mask(G, c) and is_clique_mask(G, c) for c in component_masks(G, Z0)):
        failed.append('i')

    rest = G.full & ~Z0
    if not all(G.adj[v] & X in (0, X) for v in iter_bits(rest & ~X)):
        failed.append('j')

    if Z1 and select_w_star(G, P) is None:
        failed.append('k')

    return failed


def big_components(G: Graph, P: GemPartition) -> Optional[List[BigComponentData]]:
    '''
        Bipartitions the components of G[V5] with at least two vertices, or returns None if one of them
        is not bipartite. A_i holds the least vertex of its component.
    '''
    W = P.mask('W')
    result = []
    for comp in component_masks(G, P.mask('V5')):
        if popcount(comp) < 2:
            continue
        split = bipartition_mask(G, comp)
        if split is None:
            return None
        A, B = split
        W_A = W_B = W_D = 0
        for w in iter_bits(W):
            sees_a, sees_b = bool(G.adj[w] & A), bool(G.adj[w] & B)
            if sees_a and sees_b:
                W_D |= 1 << w
            elif sees_a:
                W_A |= 1 << w
            elif sees_b:
                W_B |= 1 << w
        result.append(BigComponentData(to_set(A), to_set(B), to_set(W_A), to_set(W_B), to_set(W_D)))
    return result


def _check_lists(lists: Mapping[int, frozenset], where: str) -> None:
    for v, colors in lists.items():
        if len(colors) > 2:
            raise InvariantViolationError(['lists'], f"{where}: vertex {v} keeps {len(colors)} colors")


def _finish_with_two_sat(G: Graph, precoloring: ColoringMap, ctx: DecisionContext, where: str) -> Optional[Coloring]:
    lists = lists_from_precoloring(G, precoloring)
    _check_lists(lists, where)
    ctx.stats.two_sat_calls += 1
    extension = two_list_color(G, lists)
    if extension is None:
        return None
    return {**precoloring, **extension}


def _extend_forced_v5(G: Graph, P: GemPartition, f: ColoringMap, ctx: DecisionContext) -> Optional[Coloring]:
    '''
        The precoloring leaves every vertex of V5 a single color q: fix V5 to q, then either split into
        a 3-coloring of G[W + Z] and a 2-list problem on V1..V4 (x0 has color q), or add w* and z*
        to the precolored set and finish with 2-list coloring.
    '''
    x0 = next(iter(P.X))
    V5 = P.mask('V5')

    v5_lists = lists_from_precoloring(G, f, frozenset(iter_bits(V5)))
    distinct = set(v5_lists.values())
    if any(not colors for colors in distinct):
        return None
    if len(distinct) != 1 or len(next(iter(distinct))) != 1:
        raise InvariantViolationError(['d'], f"V5 lists {sorted(map(sorted, distinct))} are not one forced color")
    (q,) = next(iter(distinct))
    if not is_stable_mask(G, V5):
        return None

    base: Coloring = {**f, **{y: q for y in iter_bits(V5)}}
    if f[x0] == q:
        inner = P.mask('V1') | P.mask('V2') | P.mask('V3') | P.mask('V4')
        side = inner & ~mask_of(base)
        side_lists = lists_from_precoloring(G, base, to_set(side))
        _check_lists(side_lists, 'V1..V4')
        ctx.stats.two_sat_calls += 1
        side_coloring = two_list_color(G, side_lists)
        if side_coloring is None:
            return None

        rest = P.mask('W') | P.mask('Z')
        colors = tuple(c for c in PALETTE if c != q)
        rest_lists = lists_from_precoloring(G, base, to_set(rest))
        if any(lst != frozenset(colors) for lst in rest_lists.values()):
            raise InvariantViolationError(['e', 'g'], "W + Z does not see exactly the forced color")
        sub, mapping = induced_mask(G, rest)
        g = ctx.oracle.k_color(sub, 3)
        if g is None:
            return None
        return {**base, **side_coloring, **{mapping[i]: colors[c - 1] for i, c in g.items()}}

    extra: List[int] = []
    Z1 = P.mask('Z1')
    if Z1:
        w_star = select_w_star(G, P)
        if w_star is None:
            raise InvariantViolationError(['k'], "no vertex w* in W")
        extra.append(w_star)
        if not _complete(G, 1 << w_star, Z1):
            extra.append(lowest(G.adj[w_star] & Z1))

    for g in iter_precolorings(G, extra, base):
        ctx.stats.precolorings += 1
        coloring = _finish_with_two_sat(G, g, ctx, 'forced V5')
        if coloring is not None:
            return coloring
    return None


def _extend_stable_sides(G: Graph, P: GemPartition, f: ColoringMap, ctx: DecisionContext) -> Optional[Coloring]:
    '''
        f uses two colors on v1..v4 and V1..V4 are stable. V1 + V3 and V2 + V4 take the colors of
        v1 and v2, V5 must be bipartite, and f extends iff H = G[Z1 + W + T + {v1, v2}] is
        3-colorable, where T holds one vertex per big component of V5 complete to its W-set.
    '''
    v1, v2 = P.S[0], P.S[1]
    x0 = next(iter(P.X))
    alpha, beta, phi = f[v1], f[v2], f[x0]
    (other,) = [c for c in PALETTE if c not in (alpha, beta, phi)]

    components = big_components(G, P)
    if components is None:
        return None

    T = 0
    for data in components:
        if data.W_A and data.W_B:
            component = sorted(data.A | data.B)
            raise InvariantViolationError(['wb'], f"both sides of V5 component {component} have private W-neighbors")
        if data.W_B:
            data.A, data.B, data.W_A, data.W_B = data.B, data.A, data.W_B, data.W_A
        W_D = mask_of(data.W_D)
        for d in sorted(data.B):
            if G.adj[d] & W_D == W_D:
                data.d = d
                break
        else:
            raise InvariantViolationError(['uc'], f"no vertex of {sorted(data.B)} is complete to {sorted(data.W_D)}")
        T |= 1 << data.d
    if not is_stable_mask(G, T):
        raise InvariantViolationError(['T'], f"{sorted(to_set(T))} is not stable")

    H = P.mask('Z1') | P.mask('W') | T | (1 << v1) | (1 << v2)
    sub, mapping = induced_mask(G, H)
    g = ctx.oracle.k_color(sub, 3)
    if g is None:
        return None

    position = {v: i for i, v in enumerate(mapping)}
    g1, g2 = g[position[v1]], g[position[v2]]
    (g3,) = {1, 2, 3} - {g1, g2}
    relabel = {g1: alpha, g2: beta, g3: other}

    coloring: Coloring = {}
    for i in (1, 3):
        coloring.update({v: alpha for v in P.V[i - 1]})
    for i in (2, 4):
        coloring.update({v: beta for v in P.V[i - 1]})
    coloring.update({v: phi for v in P.V[4]})
    for data in components:
        coloring.update({v: phi for v in data.A})
        coloring.update({v: other for v in data.B})
    coloring[x0] = phi
    coloring.update({mapping[i]: relabel[c] for i, c in g.items()})

    if set(coloring) != set(range(G.n)):
        raise InvariantViolationError(['c'], "lifted coloring does not cover every vertex")
    if not verify_coloring(G, coloring, len(PALETTE)) or any(coloring[v] != c for v, c in f.items()):
        raise InvariantViolationError(['ft'], "3-coloring of H does not lift to a 4-coloring extending f")
    return coloring


def _first_inner_edge(G: Graph, P: GemPartition) -> Optional[Tuple[int, int]]:
    for i in range(4):
        Vi = P.mask(f'V{i + 1}')
        for a in iter_bits(Vi):
            b_mask = G.adj[a] & Vi & ~((1 << (a + 1)) - 1)
            if b_mask:
                return a, lowest(b_mask)
    return None


def precolored_set(P: GemPartition) -> List[int]:
    if len(P.X) >= 2:
        return list(P.S) + sorted(P.X)
    return list(P.S[:4]) + sorted(P.X)


def extend_precoloring(
    G: Graph,
    P: GemPartition,
    f: ColoringMap,
    ctx: Optional[DecisionContext] = None,
) -> Optional[Coloring]:
    '''
        Whether the precoloring f of `precolored_set(P)` extends to a 4-coloring of G, and one such
        extension. Expects a verified partition with Z0 empty and X a clique on 1 to 3 vertices.
    '''
    if ctx is None:
        ctx = DecisionContext(oracle=ExactOracle())
    if len(P.X) >= 2:
        return _finish_with_two_sat(G, f, ctx, 'S + X')

    used = {f[v] for v in P.S[:4]}
    if len(used) == 4:
        return None
    if len(used) == 3:
        return _extend_forced_v5(G, P, f, ctx)

    edge = _first_inner_edge(G, P)
    if edge is None:
        return _extend_stable_sides(G, P, f, ctx)

    for g in iter_precolorings(G, [v for v in edge if v not in f], f):
        ctx.stats.precolorings += 1
        coloring = _extend_forced_v5(G, P, g, ctx)
        if coloring is not None:
            return coloring
    return None


def color_with_gem(G: Graph, P: GemPartition, ctx: Optional[DecisionContext] = None) -> Outcome:
    if ctx is None:
        ctx = DecisionContext(oracle=ExactOracle())
    X = P.mask('X')
    if P.Z0:
        raise ContractError("Z0 must be empty; use peel_and_extend")
    if not X or not is_clique_mask(G, X):
        raise InvariantViolationError(['x-clique'], f"X = {sorted(P.X)} is not a non-empty clique")
    if popcount(X) > 3:
        raise InvariantViolationError(['x-size'], f"X = {sorted(P.X)} has more than 3 vertices")

    precolor = precolored_set(P)
    ctx.log('gem-precolor', f"|X|={popcount(X)}, P={precolor}")
    for f in iter_precolorings(G, precolor):
        ctx.stats.precolorings += 1
        coloring = extend_precoloring(G, P, f, ctx)
        if coloring is None:
            continue
        if not verify_coloring(G, coloring, len(PALETTE)):
            raise InvariantViolationError(['extension'], f"extension of {dict(f)} is not a proper 4-coloring")
        ctx.log('gem-extend', _describe_case(P, f))
        return Outcome.four_colorable(coloring)

    ctx.log('gem-extend', 'no precoloring extends')
    return Outcome.not_four_colorable()


def _describe_case(P: GemPartition, f: ColoringMap) -> str:
    if len(P.X) >= 2:
        return 'precolored S + X'
    used = len({f[v] for v in P.S[:4]})
    return f"case {1 if used == 3 else 2}, f={[f[v] for v in precolored_set(P)]}"


def peel_and_extend(G: Graph, P: GemPartition, recurse: Recurse, ctx: Optional[DecisionContext] = None) -> Outcome:
    '''
        G is 4-colorable iff G - Z0 is. Colors G - Z0 with `recurse`, moves every component of X onto a
        prefix of the colors of a largest one, then gives each component of Z0 colors missing from
        its largest neighboring X-component.
    '''
    if ctx is None:
        ctx = DecisionContext(oracle=ExactOracle())
    Z0 = P.mask('Z0')
    if not Z0:
        return color_with_gem(G, P, ctx)

    ctx.log('peel-z0', f"removing {sorted(P.Z0)}")
    sub, mapping = induced_mask(G, G.full & ~Z0)
    outcome = recurse(sub)
    if not outcome.is_colorable:
        return outcome
    coloring: Coloring = {mapping[i]: c for i, c in outcome.coloring.items()}

    x_components = component_masks(G, P.mask('X'))
    if x_components:
        largest = max(x_components, key=lambda c: (popcount(c), -lowest(c)))
        prefix = sorted(coloring[v] for v in iter_bits(largest))
        for comp in x_components:
            for v, c in zip(iter_bits(comp), prefix):
                coloring[v] = c

    for U in component_masks(G, Z0):
        touching = [Y for Y in x_components if any(G.adj[u] & Y for u in iter_bits(U))]
        if not touching:
            raise InvariantViolationError(['GmZ0'], f"Z0 component {sorted(to_set(U))} has no neighbor in X")
        Y = max(touching, key=lambda c: (popcount(c), -lowest(c)))
        free = [c for c in PALETTE if c not in {coloring[y] for y in iter_bits(Y)}]
        if len(free) < popcount(U):
            raise InvariantViolationError(['GmZ0'], f"Z0 component {sorted(to_set(U))} does not fit next to {sorted(to_set(Y))}")
        for u, c in zip(iter_bits(U), free):
            coloring[u] = c

    if not verify_coloring(G, coloring, len(PALETTE)):
        raise InvariantViolationError(['GmZ0'], "extension to Z0 is not a proper 4-coloring")
    return Outcome.four_colorable(coloring)


def describe_partition(P: GemPartition) -> Dict[str, List[int]]:
    parts = {f'V{i + 1}': sorted(P.V[i]) for i in range(5)}
    parts.update({name: sorted(getattr(P, name)) for name in ('X', 'W', 'Z0', 'Z1')})
    return parts
