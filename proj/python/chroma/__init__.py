"""Weighted H-chromatic invariants of graphs, DAGs and posets.

Graphs are dicts like {"n": 3, "edges": [[0, 1], [1, 2]], "weights": [2, 1, 1]};
DAGs use "arcs" and posets "leq" (or "cover") in place of "edges".
"""

import json

from . import _core
from ._core import ChromaError, set_threads, threads, suites

__all__ = [
    "ChromaError",
    "canonical",
    "compare",
    "compute",
    "corpus",
    "expand",
    "set_threads",
    "suites",
    "threads",
    "verify",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def compute(graph, host="", kind="graph"):
    """Return (text, json_dict) for the chromatic function at `host`.

    The default host is complete:W+1, W the total weight.
    """
    text, data = _core.compute(_dump(graph), host, kind)
    return text, json.loads(data)


def expand(graph, k=1):
    """Signed p-basis expansion at level k, as (text, json_dict)."""
    text, data = _core.expand(_dump(graph), k)
    return text, json.loads(data)


def compare(a, b, kind="graph", strategy="hom-count"):
    return json.loads(_core.compare(_dump(a), _dump(b), kind, strategy))


def canonical(graph):
    return json.loads(_core.canonical(_dump(graph)))


def corpus(n, weight_bound):
    """One representative per isomorphism class, weights in 1..weight_bound."""
    return [json.loads(g) for g in _core.corpus(n, weight_bound)]


def verify(suite, trials=-1, seed=1):
    """Run a property suite; returns (ok, report_text)."""
    return _core.verify(suite, trials, seed)
