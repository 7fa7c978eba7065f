"""Strongly Koszul edge rings of graphs.

Graphs are passed as text: graph6, an edge list ("u v" per line) or JSON
({"n": ..., "edges": [[u, v], ...]}). Results are plain dicts.
"""

import json

from . import _core
from ._core import DisconnectedGraphError, ParseError, UnsupportedSizeError

__version__ = _core.__version__

__all__ = [
    "DisconnectedGraphError",
    "ParseError",
    "UnsupportedSizeError",
    "classify",
    "edges",
    "groebner",
    "oracle",
    "to_graph6",
    "toric",
    "veronese",
]


def to_graph6(graph, format="auto"):
    return _core.to_graph6(graph, format)


def edges(graph, format="auto"):
    """Return (n, [(u, v), ...]) with 1-based vertices."""
    return _core.edges(graph, format)


def classify(graph, format="auto"):
    return json.loads(_core.classify_json(graph, format))


def oracle(graph, degree_bound=4, format="auto"):
    return json.loads(_core.oracle_json(graph, degree_bound, format))


def toric(graph, degree_bound=4, format="auto"):
    return json.loads(_core.toric_json(graph, degree_bound, format))


def groebner(graph, attempts=1000, seed=0, degree_bound=4, format="auto"):
    return json.loads(_core.groebner_json(graph, attempts, seed, degree_bound, format))


def veronese(n, d, degree_bound=4):
    return json.loads(_core.veronese_json(n, d, degree_bound))
