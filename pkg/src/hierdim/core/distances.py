"""Shortest-path distances, bipartiteness and walk-through-U distances.

All functions are pure. ``all_pairs_distances`` is memoised on the (hashable,
frozen) Graph and returns a read-only matrix, so repeated calls from the
search, product and bounds code share one computation.
"""

import logging
from functools import lru_cache
from typing import Sequence, Union

import networkx as nx
import numpy as np

from ..models.graph import DistanceMatrix, Graph, check_subset, check_vertex

logger = logging.getLogger(__name__)


@lru_cache(maxsize=512)
def all_pairs_distances(graph: Graph) -> DistanceMatrix:
    """Exact shortest-path distances; INFINITE edges are never traversed.

    Unweighted graphs use breadth-first search (hop counts), weighted graphs
    use Dijkstra relaxation over the finite edges.

    Args:
        graph: A validated Graph

    Returns:
        A read-only DistanceMatrix
    """
    g = graph.to_networkx(finite_only=True)
    if graph.is_weighted:
        d = np.zeros((graph.n, graph.n), dtype=np.float64)
        lengths = nx.all_pairs_dijkstra_path_length(g, weight="weight")
    else:
        d = np.zeros((graph.n, graph.n), dtype=np.int64)
        lengths = nx.all_pairs_shortest_path_length(g)
    for source, row in lengths:
        for target, value in row.items():
            d[source, target] = value
    d.flags.writeable = False
    logger.debug("Computed distances for %r", graph)
    return DistanceMatrix(d=d, weighted=graph.is_weighted)


def is_bipartite(graph: Graph) -> bool:
    """True iff the graph (INFINITE edges included) has no odd cycle."""
    return nx.is_bipartite(graph.to_networkx())


def u_distance_matrix(graph: Graph, u: Sequence[int]) -> np.ndarray:
    """Matrix of shortest walk-through-U lengths d_{G(U)}.

    A shortest u,v-walk through U splits at its U-vertex w into two shortest
    paths, so d_{G(U)}(u, v) = min over w in U of d(u, w) + d(w, v).

    Raises:
        EmptySubset: If ``u`` is empty
    """
    members = list(check_subset(graph.n, u))
    d = all_pairs_distances(graph).d
    via = d[:, members][:, :, None] + d[members, :][None, :, :]
    result = via.min(axis=1)
    result.flags.writeable = False
    return result


def u_distance(graph: Graph, u: Sequence[int], a: int, b: int) -> Union[int, float]:
    """Length of a shortest a,b-walk that visits some vertex of ``u``."""
    members = check_subset(graph.n, u)
    a = check_vertex(graph.n, a)
    b = check_vertex(graph.n, b)
    dm = all_pairs_distances(graph)
    best = min(dm.d[a, w] + dm.d[w, b] for w in members)
    return float(best) if dm.weighted else int(best)
