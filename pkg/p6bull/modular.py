'''
    Homogeneous sets, maximal modules and the reduction to quasi-prime graphs.

    A set S is homogeneous when every vertex outside S sees all of S or none of it. It is proper when
    2 <= |S| < n. Modules are computed by splitter closure: the smallest homogeneous set containing a
    seed is found by repeatedly adding every outside vertex that distinguishes two seed members.
'''
import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Collection, Dict, List, Optional, Tuple

from p6bull.constants import EXHAUSTIVE_LIMIT
from p6bull.exceptions import ContractError, InvariantViolationError
from p6bull.graph import (
    Graph,
    complement,
    induced_mask,
    is_clique_mask,
    is_connected,
    iter_bits,
    mask_of,
    popcount,
    to_set,
    verify_coloring,
)
from p6bull.listcolor import chromatic_small, exact_k_color
from p6bull.types import Coloring, ColoringMap, VertexSet

if TYPE_CHECKING:
    from p6bull.oracles import ColoringOracle

logger = logging.getLogger(__name__)


@dataclass
class ModulePartition:
    parts: List[VertexSet]


@dataclass
class ReductionRecord:
    module: Tuple[int, ...]
    chromatic: int
    clique: Tuple[int, ...]
    # color classes 1..chromatic, numbered by least vertex
    coloring: Dict[int, int] = field(default_factory=dict)


@dataclass
class ReductionRound:
    '''One pass over the maximal modules. kept[i] is the input vertex behind output vertex i, or None.'''
    input_n: int
    output: Graph
    kept: Tuple[Optional[int], ...]
    records: List[ReductionRecord]


@dataclass
class QuasiPrimeReduction:
    graph: Graph
    rounds: List[ReductionRound] = field(default_factory=list)

    @property
    def records(self) -> List[ReductionRecord]:
        return [record for r in self.rounds for record in r.records]


def is_homogeneous_mask(G: Graph, mask: int) -> bool:
    for v in iter_bits(G.full & ~mask):
        seen = G.adj[v] & mask
        if seen and seen != mask:
            return False
    return True


def is_homogeneous(G: Graph, S: Collection[int]) -> bool:
    return is_homogeneous_mask(G, mask_of(S))


def closure_mask(G: Graph, mask: int) -> int:
    while True:
        splitters = 0
        for v in iter_bits(G.full & ~mask):
            seen = G.adj[v] & mask
            if seen and seen != mask:
                splitters |= 1 << v
        if not splitters:
            return mask
        mask |= splitters


def module_closure(G: Graph, S: Collection[int]) -> VertexSet:
    '''Smallest homogeneous set containing S.'''
    return to_set(closure_mask(G, mask_of(S)))


def _homogeneous_masks(G: Graph) -> List[int]:
    if G.n > EXHAUSTIVE_LIMIT:
        raise ContractError(f"exhaustive enumeration is limited to {EXHAUSTIVE_LIMIT} vertices, got {G.n}")
    return [mask for mask in range(1, 1 << G.n) if is_homogeneous_mask(G, mask)]


def homogeneous_sets(G: Graph) -> List[VertexSet]:
    '''Every non-empty homogeneous set, by subset enumeration.'''
    return [to_set(mask) for mask in _homogeneous_masks(G)]


def count_modules(G: Graph) -> int:
    '''
        Number of homogeneous sets that nest with or are disjoint from every other homogeneous set.
    '''
    masks = _homogeneous_masks(G)
    count = 0
    for s in masks:
        if all(t & s in (0, s, t) for t in masks):
            count += 1
    return count


def maximal_modules(G: Graph) -> ModulePartition:
    '''
        Maximal proper modules of a graph that is connected and co-connected.

        In such a graph every homogeneous set other than V(G) lies inside one maximal module, so the
        module of u is u together with every pair closure M(u, v) that is not the whole vertex set.
    '''
    if G.n < 2:
        raise ContractError(f"maximal modules need at least 2 vertices, got {G.n}")
    if not is_connected(G) or not is_connected(complement(G)):
        raise ContractError("maximal modules need a connected and co-connected graph")

    parts: List[VertexSet] = []
    assigned = 0
    for u in range(G.n):
        if assigned >> u & 1:
            continue
        module = 1 << u
        for v in range(G.n):
            if v == u or module >> v & 1:
                continue
            pair = closure_mask(G, (1 << u) | (1 << v))
            if pair != G.full:
                module |= pair
        parts.append(to_set(module))
        assigned |= module

    return ModulePartition(parts)


def is_prime(G: Graph) -> bool:
    '''No homogeneous set S with 2 <= |S| < n.'''
    return all(
        closure_mask(G, (1 << u) | (1 << v)) == G.full
        for u in range(G.n)
        for v in range(u + 1, G.n)
    )


def is_quasi_prime(G: Graph) -> bool:
    '''Every proper homogeneous set is a clique.'''
    if G.n <= EXHAUSTIVE_LIMIT:
        return all(
            is_clique_mask(G, mask)
            for mask in _homogeneous_masks(G)
            if popcount(mask) >= 2 and mask != G.full
        )
    # a non-clique proper homogeneous set contains a non-adjacent pair whose closure is proper
    return all(
        closure_mask(G, (1 << u) | (1 << v)) == G.full
        for u in range(G.n)
        for v in range(u + 1, G.n)
        if not G.has_edge(u, v)
    )


def _canonical_classes(coloring: ColoringMap) -> Dict[int, int]:
    '''Renumbers color classes 1, 2, ... in order of their least vertex.'''
    relabel: Dict[int, int] = {}
    for v in sorted(coloring):
        relabel.setdefault(coloring[v], len(relabel) + 1)
    return {v: relabel[coloring[v]] for v in sorted(coloring)}


def _reduce_once(G: Graph, oracle: Optional['ColoringOracle']) -> Optional[ReductionRound]:
    partition = maximal_modules(G)
    k_color = oracle.k_color if oracle is not None else exact_k_color

    # output vertex blocks, one per maximal module, in order of least vertex
    blocks: List[Tuple[int, int]] = []
    kept: List[Optional[int]] = []
    records: List[ReductionRecord] = []
    for part in sorted(partition.parts, key=min):
        mask = mask_of(part)
        start = len(kept)
        if is_clique_mask(G, mask):
            kept.extend(sorted(part))
        else:
            sub, mapping = induced_mask(G, mask)
            chi = chromatic_small(sub, oracle)
            if chi >= 4:
                logger.debug('module %s needs %d colors: not 4-colorable', sorted(part), chi)
                return None
            sub_coloring = k_color(sub, chi)
            if sub_coloring is None:
                raise InvariantViolationError(['module-chromatic'], f"module {sorted(part)} has no {chi}-coloring")
            kept.extend([None] * chi)
            records.append(ReductionRecord(
                module=mapping,
                chromatic=chi,
                clique=tuple(range(start, start + chi)),
                coloring=_canonical_classes({mapping[i]: c for i, c in sub_coloring.items()}),
            ))
        blocks.append((mask, len(kept) - start))

    # modules are homogeneous, so adjacency between two blocks is decided by one representative each
    adj = [0] * len(kept)
    offset = 0
    block_vertices = []
    for mask, size in blocks:
        block_vertices.append(list(range(offset, offset + size)))
        offset += size
    for i, (mask_i, _) in enumerate(blocks):
        rep_i = (mask_i & -mask_i).bit_length() - 1
        for j, (mask_j, _) in enumerate(blocks):
            if i == j:
                continue
            rep_j = (mask_j & -mask_j).bit_length() - 1
            if G.has_edge(rep_i, rep_j):
                for a in block_vertices[i]:
                    adj[a] |= mask_of(block_vertices[j])
        # every block is a clique in the output
        inside = mask_of(block_vertices[i])
        for a in block_vertices[i]:
            adj[a] |= inside & ~(1 << a)

    return ReductionRound(input_n=G.n, output=Graph(len(kept), tuple(adj)), kept=tuple(kept), records=records)


def quasi_prime_reduce(G: Graph, oracle: Optional['ColoringOracle'] = None) -> Optional[QuasiPrimeReduction]:
    '''
        Replaces every maximal module that is not a clique by a clique of size chi(G[M]).

        Returns None when some maximal module needs 4 or more colors, since it is complete to its
        non-empty neighborhood and G is then not 4-colorable. The result is checked for
        quasi-primeness and reduced again if the check fails.
    '''
    if G.n < 2 or not is_connected(G) or not is_connected(complement(G)):
        raise ContractError("quasi_prime_reduce needs a connected and co-connected graph on at least 2 vertices")

    reduction = QuasiPrimeReduction(graph=G)
    while True:
        current = reduction.graph
        round_ = _reduce_once(current, oracle)
        if round_ is None:
            return None
        if not round_.records:
            return reduction
        reduction.rounds.append(round_)
        reduction.graph = round_.output
        if is_quasi_prime(round_.output):
            return reduction
        logger.warning('reduced graph on %d vertices is not quasi-prime, reducing again', round_.output.n)


def lift_coloring(c: ColoringMap, reduction: QuasiPrimeReduction) -> Coloring:
    '''
        Turns a proper coloring of the reduced graph into one of the original graph. Every replaced
        module takes its stored coloring, with class j mapped to the color of the j-th clique vertex.
    '''
    if not verify_coloring(reduction.graph, c):
        raise ContractError("coloring of the reduced graph is not proper")

    current: Coloring = dict(c)
    for round_ in reversed(reduction.rounds):
        lifted: Coloring = {}
        for out_v, in_v in enumerate(round_.kept):
            if in_v is not None:
                lifted[in_v] = current[out_v]
        for record in round_.records:
            for v, cls in record.coloring.items():
                lifted[v] = current[record.clique[cls - 1]]
        current = dict(sorted(lifted.items()))

    return current
