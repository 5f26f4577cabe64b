"""Customer coding models.

Customers are the vertices of a weighted graph built from an ambient road
network: two customers are joined when a shortest route between them passes
no other customer, or when their family names start with the same letter.
A name-only edge is weighted INFINITE, so it never carries distance.
"""

import logging
import unicodedata
from enum import Enum
from typing import List, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from ..core.errors import BadParameter, DuplicateLocation, NonPositiveWeight, UnknownVertex
from .graph import INFINITE, Edge, Graph

logger = logging.getLogger(__name__)


class Customer(BaseModel):
    """A customer placed on an ambient vertex."""
    id: str = Field(..., min_length=1)
    family_name: str = Field(..., description="Nonempty family name")
    location: int = Field(..., description="Ambient vertex id")

    @field_validator("family_name")
    @classmethod
    def check_family_name(cls, v: str) -> str:
        v = unicodedata.normalize("NFC", v.strip())
        if not v:
            raise BadParameter("Family name must be nonempty")
        return v

    @property
    def initial(self) -> str:
        """First letter of the family name, upper-cased for display."""
        return self.family_name[0].upper()

    @property
    def letter_key(self) -> str:
        """Case-folded first letter used to compare customers."""
        return self.family_name[0].casefold()


class CustomerRoster(BaseModel):
    """Ambient road network plus customers at pairwise distinct locations."""
    ambient: Graph
    customers: List[Customer] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_locations(self) -> "CustomerRoster":
        if self.ambient.weights is not None and INFINITE in self.ambient.weights:
            raise NonPositiveWeight("Ambient road network edges must carry finite weights")
        seen = {}
        ids = set()
        for customer in self.customers:
            if not 0 <= customer.location < self.ambient.n:
                raise UnknownVertex(
                    f"Customer {customer.id} at {customer.location} outside 0..{self.ambient.n - 1}"
                )
            if customer.location in seen:
                raise DuplicateLocation(
                    f"Customers {seen[customer.location]} and {customer.id} share location {customer.location}"
                )
            if customer.id in ids:
                raise BadParameter(f"Customer id {customer.id} listed more than once")
            seen[customer.location] = customer.id
            ids.add(customer.id)
        return self


class EdgeOrigin(str, Enum):
    """Which adjacency rule produced a customer-graph edge."""
    GEODESIC = "geodesic"
    NAME_ONLY = "name_only"
    BOTH = "both"


class CustomerEdge(BaseModel):
    u: int
    v: int
    origin: EdgeOrigin


class CustomerGraph(BaseModel):
    """Weighted customer graph; vertex i is ``roster.customers[i]``."""
    roster: CustomerRoster
    graph: Graph
    origins: List[CustomerEdge] = Field(default_factory=list)
    geodesic_rule: str = "any"

    def origin(self, u: int, v: int) -> Optional[EdgeOrigin]:
        key: Edge = (min(u, v), max(u, v))
        for edge in self.origins:
            if (edge.u, edge.v) == key:
                return edge.origin
        return None

    def name_only_edges(self) -> List[Edge]:
        return [(e.u, e.v) for e in self.origins if e.origin is EdgeOrigin.NAME_ONLY]


class CustomerCode(BaseModel):
    """Code (F, r(v|S)) of one customer."""
    customer: str
    letter: str
    code: List[Union[int, float]]


class CodeBook(BaseModel):
    """Landmark customers and one code per customer, in roster order."""
    kind: str = Field("local", description="'local' or 'metric' landmark model")
    basis: List[int]
    codes: List[CustomerCode]


class CodeBookReport(BaseModel):
    """Outcome of checking a CodeBook against its customer graph."""
    valid: bool
    basis_is_generator: bool
    local: int = Field(..., description="Code length of the book (|basis|)")
    metric: int = Field(..., description="Metric dimension of the customer graph")
    failures: List[str] = Field(default_factory=list)
