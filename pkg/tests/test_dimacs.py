import logging

import pytest

from p6bull.dimacs import dump_coloring, dump_dimacs, parse_coloring, parse_dimacs
from p6bull.exceptions import DimacsParseError
from p6bull.graph import build

from .utils import cycle, path


def test_parse():
    G = parse_dimacs('c a path\np edge 3 2\ne 1 2\n\ne 3 2\n')
    assert G == path(3)


def test_parse_col_problem_line():
    assert parse_dimacs('p col 2 1\ne 1 2\n') == build(2, [(0, 1)])


def test_parse_isolated_vertices():
    G = parse_dimacs('p edge 4 0\n')
    assert G.n == 4
    assert G.m == 0


def test_parse_duplicate_edges(caplog):
    with caplog.at_level(logging.WARNING, logger='p6bull.dimacs'):
        G = parse_dimacs('p edge 2 2\ne 1 2\ne 2 1\n')
    assert G.m == 1
    assert 'declares 2 edges, found 1' in caplog.text


@pytest.mark.parametrize('text, line_no, reason', [
    ('c nothing\n', 0, 'missing problem line'),
    ('e 1 2\np edge 2 1\n', 1, 'edge before the problem line'),
    ('p edge 2 1\np edge 2 1\n', 2, 'duplicate problem line'),
    ('p graph 2 1\n', 1, "expected 'p edge <n> <m>'"),
    ('p edge two 1\n', 1, "vertex count must be an integer, got 'two'"),
    ('p edge 2 1\ne 1 3\n', 2, 'endpoint out of range 1..2'),
    ('p edge 2 1\ne 0 1\n', 2, 'endpoint out of range 1..2'),
    ('p edge 2 1\nc ok\ne 2 2\n', 3, 'self-loop at vertex 2'),
    ('p edge 2 1\ne 1\n', 2, "expected 'e <u> <v>'"),
    ('p edge 2 1\nx 1 2\n', 2, "unknown line type 'x'"),
])
def test_parse_errors(text, line_no, reason):
    with pytest.raises(DimacsParseError) as exc_info:
        parse_dimacs(text)
    assert exc_info.value.line_no == line_no
    assert exc_info.value.reason == reason
    assert str(exc_info.value) == f"line {line_no}: {reason}"


def test_dump():
    assert dump_dimacs(path(3), ['a path']) == 'c a path\np edge 3 2\ne 1 2\ne 2 3\n'


@pytest.mark.parametrize('G', [build(0, []), path(4), cycle(5), build(3, [])])
def test_dump_then_parse(G):
    assert parse_dimacs(dump_dimacs(G, ['comment'])) == G


############################################################
# Colorings
############################################################
# region
def test_parse_coloring():
    assert parse_coloring('c colors\nv 2 3\nv 1 1\n', 2) == {0: 1, 1: 3}


def test_dump_coloring():
    assert dump_coloring({1: 3, 0: 1}) == 'v 1 1\nv 2 3\n'


@pytest.mark.parametrize('text, line_no', [
    ('v 1 1\nv 1 2\n', 2),
    ('v 3 1\n', 1),
    ('v 1\n', 1),
    ('e 1 2\n', 1),
    ('v 1 red\n', 1),
])
def test_parse_coloring_errors(text, line_no):
    with pytest.raises(DimacsParseError) as exc_info:
        parse_coloring(text, 2)
    assert exc_info.value.line_no == line_no
# endregion
