'''
    List-coloring engines.

    * `two_list_color` solves list coloring with lists of size at most 2 through 2-SAT.
    * `exact_list_color` and `exact_k_color` are exact backtracking searches. They stand in for the
      polynomial 3-coloring and perfect-graph coloring algorithms of the literature and are reached
      through `p6bull.oracles.ColoringOracle` so that a faster engine can be swapped in.
    * `magnet_color` precolors a magnet and finishes each precoloring with `two_list_color`.
'''
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from p6bull.constants import AT_LEAST_FIVE, PALETTE
from p6bull.exceptions import ContractError, InvariantViolationError
from p6bull.graph import Graph, bipartition_mask, component_masks, iter_bits, mask_of, popcount
from p6bull.patterns import is_magnet_mask
from p6bull.types import Coloring, ColoringMap, ListAssignment, VertexSet

if TYPE_CHECKING:
    from p6bull.oracles import ColoringOracle

logger = logging.getLogger(__name__)


@dataclass
class PrecolorResult:
    coloring: Optional[Coloring]
    trials: int = 0
    two_sat_calls: int = 0

    @property
    def feasible(self) -> bool:
        return self.coloring is not None


def check_list_coloring(G: Graph, lists: ListAssignment, coloring: ColoringMap) -> None:
    '''Raises InvariantViolationError unless coloring is proper on the list domain and respects the lists.'''
    if set(coloring) != set(lists):
        raise InvariantViolationError(['list-coloring'], 'coloring domain differs from list domain')
    for v, color in coloring.items():
        if color not in lists[v]:
            raise InvariantViolationError(['list-coloring'], f'vertex {v} got {color}, not in {sorted(lists[v])}')
        for u in iter_bits(G.adj[v]):
            if u in coloring and coloring[u] == color:
                raise InvariantViolationError(['list-coloring'], f'edge ({u}, {v}) is monochromatic')


def strongly_connected_components(successors: Sequence[Sequence[int]]) -> List[int]:
    '''
        Iterative Tarjan. Returns the component id of every node; ids are assigned in order of
        completion, which is a reverse topological order of the condensation.
    '''
    n = len(successors)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: List[int] = []
    counter = 0
    comp_count = 0

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            v, i = work[-1]
            if i < len(successors[v]):
                work[-1] = (v, i + 1)
                w = successors[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue

            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1

    return comp


def two_list_color(G: Graph, lists: ListAssignment) -> Optional[Coloring]:
    '''
        Colors G[dom(lists)] from lists of size at most 2, or returns None if that is impossible.

        Vertex number i of the domain owns literals 2i ("takes its smaller color") and 2i+1
        ("takes its larger color"), which are each other's negation.
    '''
    domain = sorted(lists)
    options: Dict[int, Tuple[int, ...]] = {}
    for v in domain:
        opts = tuple(sorted(lists[v]))
        if len(opts) > 2:
            raise ContractError(f"list of vertex {v} has {len(opts)} colors, at most 2 allowed")
        options[v] = opts
    if any(not opts for opts in options.values()):
        return None

    position = {v: i for i, v in enumerate(domain)}
    implications: List[List[int]] = [[] for _ in range(2 * len(domain))]

    def add_clause(a: int, b: int) -> None:
        implications[a ^ 1].append(b)
        implications[b ^ 1].append(a)

    def literal(v: int, color: int) -> int:
        return 2 * position[v] + options[v].index(color)

    for v in domain:
        if len(options[v]) == 1:
            lit = 2 * position[v]
            add_clause(lit, lit)

    domain_mask = mask_of(domain)
    for u in domain:
        for w in iter_bits(G.adj[u] & domain_mask):
            if w < u:
                continue
            for color in set(options[u]) & set(options[w]):
                add_clause(literal(u, color) ^ 1, literal(w, color) ^ 1)

    comp = strongly_connected_components(implications)
    coloring: Coloring = {}
    for v in domain:
        first = 2 * position[v]
        if comp[first] == comp[first + 1]:
            return None
        coloring[v] = options[v][0] if comp[first] < comp[first + 1] else options[v][1]

    check_list_coloring(G, lists, coloring)
    return coloring


def exact_list_color(G: Graph, lists: ListAssignment) -> Optional[Coloring]:
    '''Backtracking list coloring; branches on the vertex with the fewest remaining colors.'''
    assignment: Coloring = {}

    def search(remaining: Dict[int, int]) -> bool:
        if not remaining:
            return True
        v = min(remaining, key=lambda u: (popcount(remaining[u]), u))
        for color in iter_bits(remaining[v]):
            bit = 1 << color
            pruned: Dict[int, int] = {}
            for u, colors in remaining.items():
                if u == v:
                    continue
                if G.has_edge(u, v):
                    colors &= ~bit
                    if not colors:
                        break
                pruned[u] = colors
            else:
                assignment[v] = color
                if search(pruned):
                    return True
                del assignment[v]
        return False

    if not search({v: mask_of(colors) for v, colors in lists.items()}):
        return None

    coloring = dict(sorted(assignment.items()))
    check_list_coloring(G, lists, coloring)
    return coloring


def exact_k_color(G: Graph, k: int) -> Optional[Coloring]:
    '''
        Exact k-coloring with DSATUR branching order. A vertex may only open color used+1,
        which removes the k! relabelings of every solution from the search.
    '''
    n = G.n
    if n == 0:
        return {}
    if k < 1:
        return None

    color = [0] * n
    # bit c of saturation[v] is set when some neighbor of v has color c
    saturation = [0] * n
    degree = [popcount(a) for a in G.adj]

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if color[v]:
                continue
            key = (popcount(saturation[v]), degree[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def search(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        for c in range(1, min(k, used + 1) + 1):
            if saturation[v] >> c & 1:
                continue
            color[v] = c
            touched = [u for u in iter_bits(G.adj[v]) if not saturation[u] >> c & 1]
            for u in touched:
                saturation[u] |= 1 << c
            if search(colored + 1, max(used, c)):
                return True
            for u in touched:
                saturation[u] &= ~(1 << c)
            color[v] = 0
        return False

    if not search(0, 0):
        return None
    return dict(enumerate(color))


def chromatic_small(G: Graph, oracle: Optional['ColoringOracle'] = None) -> int:
    '''
        The chromatic number of G when it is at most 4, otherwise AT_LEAST_FIVE.
    '''
    if G.n == 0:
        return 0
    if G.m == 0:
        return 1
    if all(bipartition_mask(G, comp) is not None for comp in component_masks(G)):
        return 2

    k_color = oracle.k_color if oracle is not None else exact_k_color
    for k in (3, 4):
        if k_color(G, k) is not None:
            return k
    return AT_LEAST_FIVE


def iter_precolorings(
    G: Graph,
    vertices: Sequence[int],
    base: Optional[ColoringMap] = None,
    palette: Sequence[int] = PALETTE,
) -> Iterator[Coloring]:
    '''
        Yields every proper coloring of `vertices` that is compatible with `base`, merged with `base`.

        Colorings are produced in lexicographic order of the color tuple assigned to `vertices`
        in the given order.
    '''
    base = dict(base or {})
    order = list(vertices)
    current: Coloring = {}

    def extend(i: int) -> Iterator[Coloring]:
        if i == len(order):
            yield {**base, **current}
            return
        v = order[i]
        blocked = {
            colored[u]
            for colored in (base, current)
            for u in iter_bits(G.adj[v])
            if u in colored
        }
        for color in palette:
            if color in blocked:
                continue
            current[v] = color
            yield from extend(i + 1)
            del current[v]

    yield from extend(0)


def lists_from_precoloring(
    G: Graph,
    precoloring: ColoringMap,
    targets: Optional[VertexSet] = None,
    palette: Sequence[int] = PALETTE,
) -> Dict[int, frozenset]:
    '''Palette minus the colors of precolored neighbors, for every target vertex.'''
    if targets is None:
        targets = frozenset(v for v in range(G.n) if v not in precoloring)
    lists = {}
    for v in sorted(targets):
        taken = {precoloring[u] for u in iter_bits(G.adj[v]) if u in precoloring}
        lists[v] = frozenset(c for c in palette if c not in taken)
    return lists


def magnet_color(G: Graph, F: VertexSet) -> PrecolorResult:
    '''
        Tries every proper 4-coloring of G[F]. Each vertex outside F has two adjacent neighbors in F,
        so it keeps at most two colors and the rest is a 2-list coloring problem.
    '''
    F_mask = mask_of(F)
    if F_mask & ~G.full:
        raise ContractError(f"{sorted(F)} is not a vertex set of the graph")
    if not is_magnet_mask(G, F_mask):
        raise ContractError(f"{sorted(F)} is not a magnet")

    result = PrecolorResult(coloring=None)
    for f in iter_precolorings(G, sorted(F)):
        result.trials += 1
        lists = lists_from_precoloring(G, f)
        result.two_sat_calls += 1
        extension = two_list_color(G, lists)
        if extension is not None:
            result.coloring = dict(sorted({**f, **extension}.items()))
            logger.debug('magnet %s: precoloring %d extends', sorted(F), result.trials)
            return result

    logger.debug('magnet %s: none of %d precolorings extends', sorted(F), result.trials)
    return result
