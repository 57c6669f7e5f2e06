import enum
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, List, Optional

from p6bull.patterns import Embedding
from p6bull.types import Coloring

if TYPE_CHECKING:
    from p6bull.oracles import ColoringOracle


class Status(enum.Enum):
    four_colorable = 'four_colorable'
    not_four_colorable = 'not_four_colorable'
    out_of_class = 'out_of_class'
    invariant_violation = 'invariant_violation'


@dataclass
class TraceEvent:
    depth: int
    step: str
    detail: str = ''

    def __str__(self) -> str:
        return f"{'  ' * self.depth}{self.step}" + (f": {self.detail}" if self.detail else '')


@dataclass
class Stats:
    routes: List[str] = field(default_factory=list)
    precolorings: int = 0
    two_sat_calls: int = 0
    oracle_calls: int = 0
    max_depth: int = 0
    class_checked: bool = True


@dataclass
class Outcome:
    status: Status
    coloring: Optional[Coloring] = None
    witness: Optional[Embedding] = None
    report: List[str] = field(default_factory=list)
    detail: str = ''
    stats: Stats = field(default_factory=Stats)

    @classmethod
    def four_colorable(cls, coloring: Coloring) -> 'Outcome':
        return cls(Status.four_colorable, coloring=dict(sorted(coloring.items())))

    @classmethod
    def not_four_colorable(cls) -> 'Outcome':
        return cls(Status.not_four_colorable)

    @classmethod
    def out_of_class(cls, witness: Embedding) -> 'Outcome':
        return cls(Status.out_of_class, witness=witness)

    @classmethod
    def invariant_violation(cls, claims: Iterable[str], detail: str = '') -> 'Outcome':
        return cls(Status.invariant_violation, report=list(claims), detail=detail)

    @property
    def is_colorable(self) -> bool:
        return self.status is Status.four_colorable


@dataclass
class DecisionContext:
    '''
        Shared state of one decide4 run: the oracle, the counters and the trace.
        Recursive calls share the context and bump `depth`.
    '''
    oracle: 'ColoringOracle'
    stats: Stats = field(default_factory=Stats)
    trace: List[TraceEvent] = field(default_factory=list)
    depth: int = 0
    strict_class: bool = True

    def log(self, step: str, detail: str = '') -> None:
        self.trace.append(TraceEvent(self.depth, step, detail))

    def route(self, tag: str) -> None:
        self.stats.routes.append(tag)
