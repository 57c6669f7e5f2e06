'''
    Decision path for (P6, bull, gem)-free graphs.

    Without an induced C5 such a graph is perfect: P6-freeness rules out longer odd holes and
    gem-freeness rules out odd antiholes. Perfect graphs are colored by the exact oracle and
    cross-checked against their clique number. Graphs with a C5 have bounded clique-width; that
    route is served by the exact oracle as well.
'''
import enum
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

from p6bull.exceptions import ContractError, InvariantViolationError
from p6bull.graph import Graph, clique_number, complement, induced_mask, is_connected, mask_of
from p6bull.listcolor import exact_k_color
from p6bull.modular import is_homogeneous_mask, is_prime, maximal_modules
from p6bull.patterns import C5, GEM, K3, P4, find_induced, is_in_class
from p6bull.types import Coloring

if TYPE_CHECKING:
    from p6bull.oracles import ColoringOracle

logger = logging.getLogger(__name__)


class GemFreeRoute(enum.Enum):
    perfect = 'perfect'
    contains_c5 = 'contains_c5'


@dataclass
class GemFreeVerdict:
    route: GemFreeRoute
    coloring: Optional[Coloring]

    @property
    def feasible(self) -> bool:
        return self.coloring is not None


def _require_gem_free_class(G: Graph) -> None:
    witness = is_in_class(G)
    if witness is not None:
        raise ContractError(f"graph contains an induced {witness.pattern} at {list(witness.mapping)}")
    gem = find_induced(G, GEM)
    if gem is not None:
        raise ContractError(f"graph contains an induced gem at {list(gem.mapping)}")


def decide_gemfree(
    G: Graph,
    k: int,
    oracle: Optional['ColoringOracle'] = None,
    check_class: bool = True,
) -> GemFreeVerdict:
    if check_class:
        _require_gem_free_class(G)

    k_color = oracle.k_color if oracle is not None else exact_k_color
    if find_induced(G, C5) is None:
        coloring = k_color(G, k)
        omega = clique_number(G)
        if (coloring is not None) != (omega <= k):
            raise InvariantViolationError(
                ['perfect'],
                f"perfect route: omega={omega}, k={k}, but the oracle says {'yes' if coloring else 'no'}",
            )
        logger.debug('gem-free graph on %d vertices is perfect, omega=%d', G.n, omega)
        return GemFreeVerdict(GemFreeRoute.perfect, coloring)

    logger.debug('gem-free graph on %d vertices contains a C5', G.n)
    return GemFreeVerdict(GemFreeRoute.contains_c5, k_color(G, k))


def check_triangle_free_theorem(G: Graph) -> bool:
    '''
        A prime (P6, bull, gem)-free graph that contains a C5 is triangle-free.
        Returns whether G is triangle-free after checking the other conditions.
    '''
    _require_gem_free_class(G)
    if find_induced(G, C5) is None:
        raise ContractError("graph contains no induced C5")
    if not is_prime(G):
        raise ContractError("graph is not prime")
    return find_induced(G, K3) is None


def check_module_cograph_claim(G: Graph) -> bool:
    '''
        In a connected and co-connected (P6, bull, gem)-free graph every maximal module is P4-free.
        Returns False as soon as some maximal module induces a P4.
    '''
    _require_gem_free_class(G)
    if G.n < 2 or not is_connected(G) or not is_connected(complement(G)):
        raise ContractError("graph must be connected and co-connected with at least 2 vertices")

    for part in maximal_modules(G).parts:
        mask = mask_of(part)
        if not is_homogeneous_mask(G, mask):
            raise InvariantViolationError(['module'], f"{sorted(part)} is not homogeneous")
        sub, _ = induced_mask(G, mask)
        if find_induced(sub, P4) is not None:
            return False
    return True
