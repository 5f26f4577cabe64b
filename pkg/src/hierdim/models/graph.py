"""Graph models for the hierdim toolkit.

This module defines the immutable simple graph every computation runs on,
the all-pairs distance matrix derived from it, and the helpers used to
validate vertex subsets.

Vertices are the dense ids ``0..n-1``. Edge weights are optional; a graph
without weights counts hops. The string marker ``INFINITE`` keeps an edge in
the adjacency structure while excluding it from every shortest path.
"""

import logging
import math
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.errors import (
    BadParameter,
    Disconnected,
    DuplicateEdge,
    EmptySubset,
    Loop,
    NonPositiveWeight,
    UnknownVertex,
)

logger = logging.getLogger(__name__)

INFINITE = "inf"

EdgeWeight = Union[float, Literal["inf"]]
Edge = Tuple[int, int]
VertexSubset = Tuple[int, ...]
Representation = Tuple[Union[int, float], ...]


def _normalize_weight(edge: Edge, weight: Any) -> EdgeWeight:
    if weight == INFINITE or (isinstance(weight, float) and math.isinf(weight) and weight > 0):
        return INFINITE
    if isinstance(weight, bool) or not isinstance(weight, (int, float)):
        raise NonPositiveWeight(f"Edge {edge} has non-numeric weight {weight!r}")
    if math.isnan(weight) or weight <= 0:
        raise NonPositiveWeight(f"Edge {edge} has weight {weight}; weights must be positive")
    return float(weight)


class Graph(BaseModel):
    """Immutable connected simple graph.

    Required Fields:
    - n: number of vertices, ids are 0..n-1
    - edges: unordered pairs, stored as (min, max) sorted lexicographically

    Optional Fields:
    - weights: one weight per edge (aligned with ``edges``), or None for hop counts
    - labels: (vertex, label) pairs, cosmetic only
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Vertex count")
    edges: Tuple[Edge, ...] = Field(default=(), description="Sorted (u, v) pairs with u < v")
    weights: Optional[Tuple[EdgeWeight, ...]] = Field(None, description="Weight per edge or None")
    labels: Tuple[Tuple[int, str], ...] = Field(default=(), description="Cosmetic vertex labels")

    @model_validator(mode="before")
    @classmethod
    def normalize_edges(cls, data: Any) -> Any:
        """Orient, sort and validate edges; align weights with the sorted order."""
        if not isinstance(data, dict):
            return data
        data = dict(data)
        n = data.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            return data

        raw_edges = list(data.get("edges") or ())
        raw_weights = data.get("weights")
        if raw_weights is not None:
            raw_weights = list(raw_weights)
            if len(raw_weights) != len(raw_edges):
                raise NonPositiveWeight(
                    f"Got {len(raw_weights)} weights for {len(raw_edges)} edges"
                )

        seen: Dict[Edge, int] = {}
        for index, pair in enumerate(raw_edges):
            u, v = (int(x) for x in pair)
            if u == v:
                raise Loop(f"Loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < n:
                    raise UnknownVertex(f"Edge ({u}, {v}) uses vertex {x} outside 0..{n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdge(f"Edge {key} listed more than once")
            seen[key] = index

        ordered = sorted(seen)
        data["edges"] = tuple(ordered)
        if raw_weights is not None:
            data["weights"] = tuple(_normalize_weight(key, raw_weights[seen[key]]) for key in ordered)

        labels = data.get("labels") or ()
        if isinstance(labels, dict):
            labels = labels.items()
        normalized_labels = []
        for vertex, label in labels:
            vertex = int(vertex)
            if not 0 <= vertex < n:
                raise UnknownVertex(f"Label for vertex {vertex} outside 0..{n - 1}")
            normalized_labels.append((vertex, str(label)))
        data["labels"] = tuple(sorted(normalized_labels))
        return data

    @model_validator(mode="after")
    def check_connected(self) -> "Graph":
        """Reject graphs whose finite-weight part is disconnected."""
        if self.n > 1 and not nx.is_connected(self.to_networkx(finite_only=True)):
            raise Disconnected(f"Graph on {self.n} vertices is disconnected over finite-weight edges")
        return self

    @property
    def m(self) -> int:
        """Number of edges, INFINITE ones included."""
        return len(self.edges)

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    def weight(self, index: int) -> EdgeWeight:
        """Weight of the edge at ``index`` in ``edges`` (1 when unweighted)."""
        return 1.0 if self.weights is None else self.weights[index]

    def finite_edges(self) -> List[Tuple[int, int, float]]:
        """Edges that carry distance, as (u, v, weight) triples."""
        result = []
        for index, (u, v) in enumerate(self.edges):
            w = self.weight(index)
            if w != INFINITE:
                result.append((u, v, float(w)))
        return result

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def label(self, vertex: int) -> str:
        return dict(self.labels).get(vertex, str(vertex))

    def to_networkx(self, finite_only: bool = False) -> nx.Graph:
        """Convert to a networkx graph with a ``weight`` attribute on every edge.

        Args:
            finite_only: Drop INFINITE-weight edges (distance view)

        Returns:
            An undirected networkx graph on nodes 0..n-1
        """
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        for index, (u, v) in enumerate(self.edges):
            w = self.weight(index)
            if finite_only and w == INFINITE:
                continue
            g.add_edge(u, v, weight=math.inf if w == INFINITE else w)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Build an unweighted Graph from a networkx graph, relabelling nodes in sorted order."""
        relabelled = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls(n=relabelled.number_of_nodes(), edges=list(relabelled.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, weighted={self.is_weighted})"


class DistanceMatrix(BaseModel):
    """All-pairs shortest-path distances of a Graph.

    ``d`` is read-only; hop counts are int64, weighted distances float64.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: np.ndarray = Field(..., description="n x n symmetric distance matrix")
    weighted: bool = Field(False, description="True when distances come from edge weights")

    @property
    def n(self) -> int:
        return int(self.d.shape[0])

    def distance(self, u: int, v: int) -> Union[int, float]:
        value = self.d[u, v]
        return float(value) if self.weighted else int(value)

    def diameter(self) -> Union[int, float]:
        value = self.d.max()
        return float(value) if self.weighted else int(value)


def check_vertex(graph_n: int, vertex: int) -> int:
    """Validate a single vertex id against a vertex count."""
    if isinstance(vertex, bool) or not 0 <= int(vertex) < graph_n:
        raise UnknownVertex(f"Vertex {vertex} outside 0..{graph_n - 1}")
    return int(vertex)


def check_subset(graph_n: int, members: Sequence[int], nonempty: bool = True) -> VertexSubset:
    """Validate an ordered list of distinct vertex ids.

    Args:
        graph_n: Vertex count of the host graph
        members: Candidate subset, order preserved
        nonempty: Raise EmptySubset when ``members`` is empty

    Returns:
        The subset as a tuple of ints

    Raises:
        EmptySubset: If empty and ``nonempty`` is set
        UnknownVertex: If a member is out of range
        BadParameter: If a member is repeated
    """
    subset = tuple(check_vertex(graph_n, v) for v in members)
    if nonempty and not subset:
        raise EmptySubset("Vertex subset must be nonempty")
    if len(set(subset)) != len(subset):
        raise BadParameter(f"Vertex subset {list(subset)} repeats a vertex")
    return subset
