'''
    DIMACS ".col" graphs and "v <index> <color>" coloring files. Both use 1-based vertex numbers.
'''
import logging
from typing import Iterable, Mapping, Optional

from p6bull.exceptions import DimacsParseError
from p6bull.graph import Graph, build
from p6bull.types import Coloring

logger = logging.getLogger(__name__)


def _int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise DimacsParseError(line_no, f"{what} must be an integer, got {token!r}") from None


def parse_dimacs(text: str) -> Graph:
    n: Optional[int] = None
    declared_m = 0
    edges = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == 'c':
            continue

        if tokens[0] == 'p':
            if n is not None:
                raise DimacsParseError(line_no, "duplicate problem line")
            if len(tokens) != 4 or tokens[1] not in ('edge', 'col'):
                raise DimacsParseError(line_no, "expected 'p edge <n> <m>'")
            n = _int(tokens[2], line_no, 'vertex count')
            declared_m = _int(tokens[3], line_no, 'edge count')
            if n < 0 or declared_m < 0:
                raise DimacsParseError(line_no, "counts must be non-negative")
            continue

        if tokens[0] == 'e':
            if n is None:
                raise DimacsParseError(line_no, "edge before the problem line")
            if len(tokens) != 3:
                raise DimacsParseError(line_no, "expected 'e <u> <v>'")
            u = _int(tokens[1], line_no, 'endpoint')
            v = _int(tokens[2], line_no, 'endpoint')
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsParseError(line_no, f"endpoint out of range 1..{n}")
            if u == v:
                raise DimacsParseError(line_no, f"self-loop at vertex {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
            continue

        raise DimacsParseError(line_no, f"unknown line type {tokens[0]!r}")

    if n is None:
        raise DimacsParseError(0, "missing problem line")
    if len(edges) != declared_m:
        logger.warning('problem line declares %d edges, found %d distinct edges', declared_m, len(edges))
    return build(n, sorted(edges))


def dump_dimacs(G: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p edge {G.n} {G.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    return '\n'.join(lines) + '\n'


def parse_coloring(text: str, n: int) -> Coloring:
    coloring: Coloring = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == 'c':
            continue
        if tokens[0] != 'v' or len(tokens) != 3:
            raise DimacsParseError(line_no, "expected 'v <index> <color>'")
        v = _int(tokens[1], line_no, 'vertex')
        color = _int(tokens[2], line_no, 'color')
        if not 1 <= v <= n:
            raise DimacsParseError(line_no, f"vertex out of range 1..{n}")
        if v - 1 in coloring:
            raise DimacsParseError(line_no, f"vertex {v} colored twice")
        coloring[v - 1] = color
    return coloring


def dump_coloring(coloring: Mapping[int, int]) -> str:
    return ''.join(f"v {v + 1} {coloring[v]}\n" for v in sorted(coloring))
