'''
    The coloring engine the decision procedure delegates its black-box calls to.

    The pipeline needs two things it does not solve itself: k-coloring of small or structured
    subgraphs and general list coloring. Any object implementing `ColoringOracle` can be passed
    as `oracle=` to swap the exact searches for a faster implementation.
'''
import abc
from collections import Counter
from typing import Optional

from p6bull.graph import Graph
from p6bull.listcolor import exact_k_color, exact_list_color
from p6bull.types import Coloring, ListAssignment


class ColoringOracle(abc.ABC):
    def __init__(self) -> None:
        self.calls: Counter = Counter()

    @abc.abstractmethod
    def k_color(self, G: Graph, k: int) -> Optional[Coloring]:
        raise NotImplementedError()

    @abc.abstractmethod
    def list_color(self, G: Graph, lists: ListAssignment) -> Optional[Coloring]:
        raise NotImplementedError()

    @property
    def total_calls(self) -> int:
        return sum(self.calls.values())


class ExactOracle(ColoringOracle):
    def k_color(self, G: Graph, k: int) -> Optional[Coloring]:
        self.calls['k_color'] += 1
        return exact_k_color(G, k)

    def list_color(self, G: Graph, lists: ListAssignment) -> Optional[Coloring]:
        self.calls['list_color'] += 1
        return exact_list_color(G, lists)
