"""Graph construction and the JSON graph format.

Graph file format::

    {"n": 4, "edges": [[0, 1], [1, 2, 2.5], [2, 3, "inf"]], "labels": {"0": "a"}}

A missing weight means 1. Emission is deterministic: edges sorted by
(min endpoint, max endpoint), weights written only for weighted graphs and
as integers when integral.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from ..core.client import HierDimService
from ..models.graph import INFINITE, Graph

logger = logging.getLogger(__name__)


def plain_number(value: Union[int, float]) -> Union[int, float]:
    """Emit integral floats as ints so documents are stable across dtypes."""
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return value


class GraphsAPI(HierDimService):
    """Service for building graphs and moving them in and out of JSON."""

    def build_graph(
        self,
        n: int,
        edges: Sequence[Sequence[int]],
        weights: Optional[Sequence[Union[float, str]]] = None,
        labels: Optional[Dict[int, str]] = None,
    ) -> Graph:
        """Validate and build a Graph.

        Args:
            n: Vertex count (vertices are 0..n-1)
            edges: Unordered vertex pairs
            weights: Optional positive weights aligned with ``edges``; "inf" marks
                an edge that keeps adjacency but never carries distance
            labels: Optional cosmetic labels

        Returns:
            The validated Graph

        Raises:
            DuplicateEdge, Loop, UnknownVertex, NonPositiveWeight, Disconnected
        """
        graph = Graph(n=n, edges=list(edges), weights=None if weights is None else list(weights), labels=labels or {})
        logger.info("Built %r", graph)
        return graph

    def graph_from_dict(self, data: Dict[str, Any]) -> Graph:
        """Parse a graph document.

        A document wrapping the graph under ``"graph"`` (gallery and product
        output) is unwrapped first.
        """
        if "graph" in data and isinstance(data["graph"], dict):
            data = data["graph"]
        raw_edges = data.get("edges", [])
        pairs: List[List[int]] = []
        weights: List[Union[float, str]] = []
        weighted = False
        for item in raw_edges:
            pairs.append([item[0], item[1]])
            if len(item) > 2:
                weighted = True
                weights.append(INFINITE if item[2] == INFINITE else item[2])
            else:
                weights.append(1.0)
        labels = {int(k): v for k, v in (data.get("labels") or {}).items()}
        return self.build_graph(data["n"], pairs, weights if weighted else None, labels)

    def graph_to_dict(self, graph: Graph) -> Dict[str, Any]:
        """Graph document with edges sorted and weights only when weighted."""
        edges: List[List[Any]] = []
        for index, (u, v) in enumerate(graph.edges):
            if graph.is_weighted:
                w = graph.weight(index)
                edges.append([u, v, w if w == INFINITE else plain_number(w)])
            else:
                edges.append([u, v])
        result: Dict[str, Any] = {"n": graph.n, "edges": edges}
        if graph.labels:
            result["labels"] = {str(v): label for v, label in graph.labels}
        return result

    def read_graph(self, path: Union[str, Path]) -> Graph:
        """Read a graph document from a file, or from stdin when ``path`` is '-'."""
        if str(path) == "-":
            data = json.load(sys.stdin)
        else:
            with open(path) as handle:
                data = json.load(handle)
        return self.graph_from_dict(data)

    def write_graph(self, graph: Graph, path: Union[str, Path]) -> None:
        with open(path, "w") as handle:
            json.dump(self.graph_to_dict(graph), handle, separators=(",", ":"))
            handle.write("\n")
