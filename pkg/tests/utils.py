import difflib
import itertools
import json

import networkx as nx

from p6bull.graph import Graph, build, verify_coloring


class SortedDecoder(json.JSONDecoder):
    def __init__(self, *args, **kwargs):
        json.JSONDecoder.__init__(self, *args, object_hook=self.object_hook, **kwargs)

    def object_hook(self, obj):
        new_obj = {}
        for k, v in obj.items():
            if isinstance(v, list) and len(v) != 0 and isinstance(v[0], dict):
                # Sort lists of dicts by their json string so their order does not matter
                tmp_dict = {json.dumps(d): d for d in v}
                new_obj[k] = [tmp_dict[k] for k in sorted(tmp_dict)]
            else:
                new_obj[k] = v
        return new_obj


def assert_json(
    actual,
    expected,
):
    '''
        Prints a nicer diff when the assertion fails.

        Source: https://github.com/pytest-dev/pytest/issues/1531#issuecomment-723590313
    '''
    left = json.dumps(actual, indent=2, sort_keys=True)
    right = json.dumps(expected, indent=2, sort_keys=True)

    if json.loads(left, cls=SortedDecoder) != json.loads(right, cls=SortedDecoder):
        diff = difflib.unified_diff(
            left.splitlines(True),
            right.splitlines(True),
            fromfile="left",
            tofile="right",
        )
        assert 0, "\n" + "".join(diff)


def cycle(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def clique(n: int) -> Graph:
    return build(n, itertools.combinations(range(n), 2))


def to_networkx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def assert_proper(G: Graph, coloring, k: int = 4):
    assert verify_coloring(G, coloring, k), f"improper coloring {coloring} of {G!r}"
