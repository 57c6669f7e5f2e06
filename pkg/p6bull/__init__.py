__version__ = "0.1.0"

from .datastructures import Outcome, Stats, Status, TraceEvent
from .exceptions import ContractError, DimacsParseError, GraphError, InvariantViolationError, P6BullError
from .graph import Graph, build, verify_coloring
from .oracles import ColoringOracle, ExactOracle
from .pipeline import decide4, decide4_with_trace
