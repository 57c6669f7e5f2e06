'''
    Immutable simple undirected graphs stored as adjacency bitmasks.

    Vertices are the integers 0..n-1. Vertex sets are passed around either as `frozenset`s
    (public API) or as int bitmasks (the `*_mask` helpers used by the other modules' inner loops).
'''
from dataclasses import dataclass
from typing import Collection, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from p6bull.exceptions import ContractError, GraphError
from p6bull.types import VertexSet


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    '''Yields the set bits of mask in increasing order.'''
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def to_set(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: Tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return to_set(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> List[Tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")

    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _checked_mask(G: Graph, S: Collection[int]) -> int:
    mask = mask_of(S)
    if mask & ~G.full:
        raise ContractError(f"vertex set {sorted(S)} is not within 0..{G.n - 1}")
    return mask


def is_complete_to(G: Graph, v: int, S: Collection[int]) -> bool:
    mask = _checked_mask(G, S)
    if mask >> v & 1:
        raise ContractError(f"vertex {v} belongs to the set it is compared against")
    return G.adj[v] & mask == mask


def is_anticomplete_to(G: Graph, v: int, S: Collection[int]) -> bool:
    mask = _checked_mask(G, S)
    if mask >> v & 1:
        raise ContractError(f"vertex {v} belongs to the set it is compared against")
    return G.adj[v] & mask == 0


def neighborhood_mask(G: Graph, mask: int) -> int:
    '''Vertices outside mask with a neighbor inside it.'''
    out = 0
    for v in iter_bits(mask):
        out |= G.adj[v]
    return out & ~mask


def component_masks(G: Graph, mask: Optional[int] = None) -> List[int]:
    '''Connected components of G[mask], ordered by least vertex.'''
    remaining = G.full if mask is None else mask
    result = []
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= G.adj[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        result.append(comp)
        remaining &= ~comp
    return result


def components(G: Graph) -> List[VertexSet]:
    return [to_set(c) for c in component_masks(G)]


def is_connected(G: Graph, mask: Optional[int] = None) -> bool:
    return len(component_masks(G, mask)) == 1


def complement(G: Graph) -> Graph:
    full = G.full
    return Graph(G.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(G.adj)))


def induced_mask(G: Graph, mask: int) -> Tuple[Graph, Tuple[int, ...]]:
    mapping = tuple(iter_bits(mask))
    position = {v: i for i, v in enumerate(mapping)}
    adj = []
    for v in mapping:
        adj.append(mask_of(position[u] for u in iter_bits(G.adj[v] & mask)))
    return Graph(len(mapping), tuple(adj)), mapping


def induced(G: Graph, S: Collection[int]) -> Tuple[Graph, Tuple[int, ...]]:
    '''
        Returns G[S] on vertices 0..|S|-1 together with the mapping back to G,
        i.e. mapping[i] is the vertex of G that vertex i of the subgraph stands for.
    '''
    return induced_mask(G, _checked_mask(G, S))


def is_clique_mask(G: Graph, mask: int) -> bool:
    return all(G.adj[v] & mask == mask & ~(1 << v) for v in iter_bits(mask))


def is_stable_mask(G: Graph, mask: int) -> bool:
    return all(G.adj[v] & mask == 0 for v in iter_bits(mask))


def is_clique(G: Graph, S: Collection[int]) -> bool:
    return is_clique_mask(G, _checked_mask(G, S))


def is_stable(G: Graph, S: Collection[int]) -> bool:
    return is_stable_mask(G, _checked_mask(G, S))


def bipartition_mask(G: Graph, mask: int) -> Optional[Tuple[int, int]]:
    '''
        Two-colors the connected subgraph G[mask] starting from its least vertex.
        Returns (A, B) with the least vertex in A, or None if G[mask] has an odd cycle.
    '''
    if mask == 0:
        return 0, 0

    side_a = frontier = mask & -mask
    side_b = 0
    seen = side_a
    into_b = True
    while frontier:
        reach = neighborhood_mask(G, frontier) & mask
        if into_b:
            if reach & side_a:
                return None
            frontier = reach & ~seen
            side_b |= frontier
        else:
            if reach & side_b:
                return None
            frontier = reach & ~seen
            side_a |= frontier
        seen |= frontier
        into_b = not into_b

    if not (is_stable_mask(G, side_a) and is_stable_mask(G, side_b)):
        return None
    return side_a, side_b


def is_bipartite_component(G: Graph, S: Collection[int]) -> Optional[Tuple[VertexSet, VertexSet]]:
    mask = _checked_mask(G, S)
    if mask and not is_connected(G, mask):
        raise ContractError(f"G[{sorted(S)}] is not connected")
    split = bipartition_mask(G, mask)
    if split is None:
        return None
    return to_set(split[0]), to_set(split[1])


def verify_coloring(G: Graph, c: Mapping[int, int], k: Optional[int] = None) -> bool:
    '''
        True iff c is a proper coloring of G. When k is given the colors must also lie in 1..k.
    '''
    if set(c) != set(range(G.n)):
        missing = sorted(set(range(G.n)) - set(c))
        extra = sorted(set(c) - set(range(G.n)))
        raise ContractError(f"coloring is not total on the vertex set (missing={missing}, extra={extra})")

    if k is not None and any(not 1 <= color <= k for color in c.values()):
        return False
    return all(c[u] != c[v] for u, v in G.edges())


def clique_number(G: Graph) -> int:
    '''Size of a maximum clique, by bitset branch and bound.'''
    best = 0

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if candidates == 0:
            best = max(best, size)
            return
        while candidates:
            if size + popcount(candidates) <= best:
                return
            v = lowest(candidates)
            expand(size + 1, candidates & G.adj[v])
            candidates &= ~(1 << v)

    expand(0, G.full)
    return best
