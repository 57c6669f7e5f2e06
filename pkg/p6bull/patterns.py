'''
    The fixed small graphs the decision procedure looks for, and induced-subgraph detection for them.
'''
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from p6bull.graph import Graph, build, complement, component_masks, iter_bits, mask_of, popcount
from p6bull.types import VertexSet


@dataclass(frozen=True)
class Pattern:
    name: str
    order: int
    edges: Tuple[Tuple[int, int], ...]
    graph: Graph = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'graph', build(self.order, self.edges))


@dataclass(frozen=True)
class Embedding:
    '''
        An induced copy of a pattern: vertex i of the pattern is mapped to host vertex mapping[i].
    '''
    pattern: str
    mapping: Tuple[int, ...]

    @property
    def vertices(self) -> VertexSet:
        return frozenset(self.mapping)

    def role(self, i: int) -> int:
        return self.mapping[i]


def _cycle(k: int) -> List[Tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


def _path(k: int) -> List[Tuple[int, int]]:
    return [(i, i + 1) for i in range(k - 1)]


def _complete(k: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(k) for j in range(i + 1, k)]


# Vertex i of every pattern below is v_{i+1} of the usual drawing.
_GEM_EDGES = [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]
_F1_EDGES = _path(5) + [(5, i) for i in range(5)]
_F3_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]

P4 = Pattern('P4', 4, tuple(_path(4)))
P6 = Pattern('P6', 6, tuple(_path(6)))
C5 = Pattern('C5', 5, tuple(_cycle(5)))
K3 = Pattern('K3', 3, tuple(_complete(3)))
K4 = Pattern('K4', 4, tuple(_complete(4)))
K5 = Pattern('K5', 5, tuple(_complete(5)))
# a-b-c-d with e on b and c
BULL = Pattern('bull', 5, ((0, 1), (1, 2), (2, 3), (1, 4), (2, 4)))
GEM = Pattern('gem', 5, tuple(_GEM_EDGES))
BROOM = Pattern('broom', 6, tuple(_GEM_EDGES + [(4, 5)]))
DOUBLE_WHEEL = Pattern(
    'doubleWheel', 7,
    tuple(_cycle(5) + [(5, 6)] + [(5, i) for i in range(5)] + [(6, i) for i in range(5)]),
)
F0 = Pattern('F0', 7, tuple(_cycle(5) + [(5, i) for i in range(5)] + [(6, i) for i in range(4)]))
F1 = Pattern('F1', 6, tuple(_F1_EDGES))
F2 = Pattern('F2', 6, tuple(_F1_EDGES + [(0, 4)]))
F3 = Pattern('F3', 6, tuple(_F3_EDGES))
F4 = Pattern('F4', 6, tuple(_F3_EDGES + [(0, 5)]))
F5 = Pattern('F5', 6, tuple(complement(build(6, _cycle(6))).edges()))
F6 = Pattern(
    'F6', 7,
    tuple(_cycle(5) + [(5, 0), (5, 1), (5, 2), (5, 4)] + [(6, 1), (6, 2), (6, 3), (6, 4), (6, 5)]),
)

CATALOGUE: Dict[str, Pattern] = {
    p.name: p
    for p in (P4, P6, C5, K3, K4, K5, BULL, GEM, BROOM, DOUBLE_WHEEL, F0, F1, F2, F3, F4, F5, F6)
}
F_PATTERNS: Tuple[Pattern, ...] = (F0, F1, F2, F3, F4, F5, F6)


def _search(G: Graph, p: Pattern) -> Iterator[Tuple[int, ...]]:
    '''
        Ordered-tuple backtracking. Host vertices are tried in increasing order for each
        pattern vertex in turn, so embeddings come out in lexicographic order.
    '''
    k = p.order
    if k > G.n:
        return
    pattern_adj = p.graph.adj
    min_degree = [popcount(a) for a in pattern_adj]
    host_degree = [popcount(a) for a in G.adj]
    mapping: List[int] = []

    def extend(i: int, used: int) -> Iterator[Tuple[int, ...]]:
        if i == k:
            yield tuple(mapping)
            return
        candidates = G.full & ~used
        for j, host in enumerate(mapping):
            if pattern_adj[i] >> j & 1:
                candidates &= G.adj[host]
            else:
                candidates &= ~G.adj[host]
        for v in iter_bits(candidates):
            if host_degree[v] < min_degree[i]:
                continue
            mapping.append(v)
            yield from extend(i + 1, used | (1 << v))
            mapping.pop()

    yield from extend(0, 0)


def find_induced(G: Graph, p: Pattern) -> Optional[Embedding]:
    for mapping in _search(G, p):
        return Embedding(p.name, mapping)
    return None


def find_all_induced(G: Graph, p: Pattern) -> Iterator[Embedding]:
    for mapping in _search(G, p):
        yield Embedding(p.name, mapping)


def is_in_class(G: Graph) -> Optional[Embedding]:
    '''Returns None when G is (P6, bull)-free, else an induced P6 or bull.'''
    return find_induced(G, P6) or find_induced(G, BULL)


def is_p3_connected(G: Graph) -> bool:
    if G.n == 0 or len(component_masks(G)) != 1:
        return False

    edges = G.edges()
    index = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    # two edges sharing v induce a P3 iff their other ends are non-adjacent
    for v in range(G.n):
        nbrs = list(iter_bits(G.adj[v]))
        for x, a in enumerate(nbrs):
            for b in nbrs[x + 1:]:
                if not G.has_edge(a, b):
                    ea = index[(min(v, a), max(v, a))]
                    eb = index[(min(v, b), max(v, b))]
                    parent[find(ea)] = find(eb)

    return len({find(i) for i in range(len(edges))}) <= 1


def is_magnet_mask(G: Graph, F: int) -> bool:
    for v in iter_bits(G.full & ~F):
        inside = G.adj[v] & F
        if not any(G.adj[u] & inside for u in iter_bits(inside)):
            return False
    return True


def is_magnet(G: Graph, F: VertexSet) -> bool:
    return is_magnet_mask(G, mask_of(F))
