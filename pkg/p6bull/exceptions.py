from typing import Iterable, List


class P6BullError(Exception):
    pass


class GraphError(P6BullError, ValueError):
    '''
        Raised when a graph cannot be constructed, e.g. a self-loop or an endpoint out of range.
    '''


class ContractError(P6BullError, ValueError):
    '''
        Raised when an operation is called outside of its precondition.
    '''


class DimacsParseError(P6BullError, ValueError):
    def __init__(
        self,
        line_no: int,
        reason: str,
    ) -> None:
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class InvariantViolationError(P6BullError):
    '''
        A structural claim that is supposed to hold for every input reaching this point did not.

        `claims` holds the identifiers of the failing claims, e.g. ["wb"] or ["a", "c"].
    '''
    def __init__(
        self,
        claims: Iterable[str],
        detail: str = '',
    ) -> None:
        self.claims: List[str] = list(claims)
        self.detail = detail
        super().__init__(f"invariant violated: {', '.join(self.claims)}" + (f" ({detail})" if detail else ''))
