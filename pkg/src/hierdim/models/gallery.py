"""Named graph models.

A NamedGraph carries the expected structural invariants it must satisfy and,
for graphs built as hierarchical products, the chain of product steps that
produces it.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from .graph import Graph
from .product import ProductSpec


class Expectation(BaseModel):
    """Structural values a named graph must have; None means unchecked."""
    order: Optional[int] = None
    size: Optional[int] = None
    regular_degree: Optional[int] = None
    girth: Optional[int] = None
    triangles: Optional[int] = None
    bipartite: Optional[bool] = None


class NamedGraph(BaseModel):
    """A gallery graph.

    Required Fields:
    - name: registry name, e.g. "path-cycle-1-4"
    - graph: the graph itself

    Optional Fields:
    - parameters: constructor arguments
    - decomposition: product steps, each step's G being the previous result
    - expected: structural invariants checked at construction
    """
    name: str
    graph: Graph
    parameters: Dict[str, Any] = Field(default_factory=dict)
    decomposition: List[ProductSpec] = Field(default_factory=list)
    expected: Expectation = Field(default_factory=Expectation)


class SelfCheck(BaseModel):
    """Measured structure of a named graph against its expectation."""
    name: str
    order: int
    size: int
    regular_degree: Optional[int] = Field(None, description="Common degree, or None if irregular")
    girth: Optional[int] = Field(None, description="Shortest cycle length, or None if acyclic")
    triangles: int
    bipartite: bool
    expected: Expectation
    passed: bool
    failures: List[str] = Field(default_factory=list)
