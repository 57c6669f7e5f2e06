'''
    Instance generation: seeded rejection sampling into the (P6, bull)-free class, constructive
    in-class families, and exhaustive enumeration of small labeled graphs.
'''
import itertools
import logging
import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from p6bull.constants import GENERATE_MAX_ATTEMPTS
from p6bull.exceptions import ContractError
from p6bull.graph import Graph, build
from p6bull.patterns import GEM, is_in_class

logger = logging.getLogger(__name__)


@dataclass
class Instance:
    instance_id: str
    graph: Graph
    seed: Optional[int] = None
    source: str = 'random'


def from_networkx(H: nx.Graph) -> Graph:
    '''Relabels the nodes of H to 0..n-1 in sorted order.'''
    index = {v: i for i, v in enumerate(sorted(H.nodes))}
    return build(len(index), [(index[u], index[v]) for u, v in H.edges])


def generate_in_class(n: int, p: float, seed: int) -> Optional[Graph]:
    '''One G(n, p) draw from the given seed, kept only if it is (P6, bull)-free.'''
    if n < 1:
        raise ContractError(f"n must be at least 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ContractError(f"edge probability must lie in [0, 1], got {p}")
    G = from_networkx(nx.gnp_random_graph(n, p, seed=seed))
    return G if is_in_class(G) is None else None


def complete_graph(n: int) -> Graph:
    return from_networkx(nx.complete_graph(n))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    return from_networkx(nx.complete_multipartite_graph(*sizes))


def blow_up(G: Graph, v: int, module: Graph) -> Graph:
    '''
        Substitutes `module` for vertex v: every module vertex gets the neighborhood of v.
        The module takes the place of v and the vertices after it are shifted up.
    '''
    k = module.n
    if k < 1:
        raise ContractError("module must have at least one vertex")

    def shift(u: int) -> int:
        return u if u < v else u + k - 1

    edges = [(shift(a), shift(b)) for a, b in G.edges() if v not in (a, b)]
    for u in G.neighbors(v):
        edges.extend((shift(u), v + i) for i in range(k))
    edges.extend((v + a, v + b) for a, b in module.edges())
    return build(G.n + k - 1, edges)


# Neighborhoods in the gem v1..v5 (vertices 0..4) of each role an attached vertex can take
_ROLES = {
    'V1': (1, 4), 'V2': (0, 2, 4), 'V3': (1, 3, 4), 'V4': (2, 4), 'V5': (0, 1, 2, 3),
    'X': (0, 3), 'W': (), 'Z': (),
}


def gem_attachment(seed: int, extra: int, p: float = 0.5) -> Optional[Graph]:
    '''
        A gem plus `extra` vertices, each attached to the gem with the neighborhood of one of the
        roles V1..V5, X, W or Z, and to the earlier extra vertices at random. The first extra vertex
        is always of role X. A V5 vertex may also be joined to v5, growing a component of V5 that
        later W vertices see part of. Returns None if the result is not (P6, bull)-free.
    '''
    rng = random.Random(seed)
    edges = list(GEM.edges)
    roles: List[str] = []
    for i in range(extra):
        v = 5 + i
        role = 'X' if i == 0 else rng.choice(sorted(_ROLES))
        edges.extend((v, u) for u in _ROLES[role])
        if role == 'V5' and rng.random() < p:
            edges.append((v, 4))
        elif role == 'W':
            # W is complete to X and has at least one neighbor in V5
            edges.extend((v, 5 + j) for j, r in enumerate(roles) if r == 'X')
            v5 = [4] + [5 + j for j, r in enumerate(roles) if r == 'V5']
            seen = [u for u in v5 if rng.random() < p] or [rng.choice(v5)]
            edges.extend((v, u) for u in seen)
        roles.append(role)
        for j in range(i):
            if rng.random() < p:
                edges.append((v, 5 + j))
    G = build(5 + extra, edges)
    if is_in_class(G) is not None:
        return None
    logger.debug('gem attachment seed=%d roles=%s', seed, roles)
    return G


def exhaustive_graphs(n: int) -> Iterator[Graph]:
    '''Every labeled graph on n vertices.'''
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield build(n, [pair for i, pair in enumerate(pairs) if bits >> i & 1])


def sample_instances(
    count: int,
    nmin: int,
    nmax: int,
    probabilities: Sequence[float],
    seed: int,
) -> Iterator[Instance]:
    '''
        `count` in-class instances. Slot i draws n and p from a generator seeded by `seed`, then retries
        derived seeds until a draw is in class or GENERATE_MAX_ATTEMPTS is reached.
    '''
    if nmin < 1 or nmax < nmin:
        raise ContractError(f"invalid vertex range [{nmin}, {nmax}]")
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(nmin, nmax)
        p = probabilities[rng.randrange(len(probabilities))]
        base = rng.getrandbits(32)
        for attempt in range(GENERATE_MAX_ATTEMPTS):
            draw_seed = base + attempt
            G = generate_in_class(n, p, draw_seed)
            if G is not None:
                yield Instance(f"r{seed}-{i:05d}", G, draw_seed, f"gnp n={n} p={p}")
                break
        else:
            logger.warning('slot %d: no in-class graph with n=%d p=%.2f after %d draws', i, n, p, GENERATE_MAX_ATTEMPTS)


Family = Callable[[random.Random, int], Optional[Tuple[Graph, Optional[int], str]]]


def _gem_family(rng: random.Random, max_extra: int):
    draw_seed = rng.getrandbits(32)
    extra = rng.randint(1, max_extra)
    G = gem_attachment(draw_seed, extra)
    return None if G is None else (G, draw_seed, f"gem+{extra}")


def _multipartite_family(rng: random.Random, max_extra: int):
    sizes = [rng.randint(1, 3) for _ in range(rng.randint(2, 5))]
    return complete_multipartite(sizes), None, f"multipartite {','.join(map(str, sizes))}"


def _complete_family(rng: random.Random, max_extra: int):
    n = rng.randint(2, 6)
    return complete_graph(n), None, f"complete {n}"


def _blow_up_family(rng: random.Random, max_extra: int):
    '''An in-class G(n, p) draw with one vertex replaced by a small in-class module.'''
    n = rng.randint(4, 8)
    p = rng.choice((0.3, 0.5, 0.7))
    k = rng.randint(2, 4)
    v = rng.randrange(n)
    draw_seed = rng.getrandbits(32)
    base = generate_in_class(n, p, draw_seed)
    module = generate_in_class(k, 0.5, draw_seed + 1)
    if base is None or module is None:
        return None
    G = blow_up(base, v, module)
    if is_in_class(G) is not None:
        return None
    return G, draw_seed, f"blow-up n={n} p={p} v={v} k={k}"


# Gem attachments take every other slot; the rest rotate through the other families
_FAMILIES: Dict[str, Family] = {
    'gem': _gem_family,
    'multipartite': _multipartite_family,
    'blow-up': _blow_up_family,
    'complete': _complete_family,
}
_ROTATION = ('gem', 'multipartite', 'gem', 'blow-up', 'gem', 'complete')


def constructive_instances(count: int, seed: int, max_extra: int = 6) -> Iterator[Instance]:
    '''
        In-class instances built to reach structures rejection sampling rarely draws: gem attachments
        with 1..max_extra extra vertices, complete multipartite graphs, complete graphs and blow-ups.
        Slot i takes its family from a fixed rotation and redraws until the result is in class.
    '''
    rng = random.Random(seed)
    produced = 0
    attempts = 0
    while produced < count and attempts < count * GENERATE_MAX_ATTEMPTS:
        attempts += 1
        family = _ROTATION[produced % len(_ROTATION)]
        drawn = _FAMILIES[family](rng, max_extra)
        if drawn is None:
            continue
        G, draw_seed, source = drawn
        yield Instance(f"g{seed}-{produced:05d}", G, draw_seed, source)
        produced += 1
