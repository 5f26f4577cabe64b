"""Dimension result models.

A DimensionResult records the exact minimum size of a generator of the
requested kind together with the lexicographically least witness basis and,
on request, every minimum basis.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class DimensionKind(str, Enum):
    """Which pairs a landmark set has to separate."""
    METRIC = "metric"
    LOCAL = "local"
    U_LOCAL = "u_local"


class DimensionResult(BaseModel):
    """Exact dimension with its witness basis.

    Required Fields:
    - kind: metric, local or u_local
    - value: size of a minimum generator
    - basis: lexicographically least minimum generator (sorted ids)
    """
    kind: DimensionKind = Field(..., description="Generator kind")
    value: int = Field(..., ge=0, description="Dimension")
    basis: List[int] = Field(..., description="Lexicographically least minimum generator")
    u: Optional[List[int]] = Field(None, description="U for u_local searches")
    all_minimum_bases: Optional[List[List[int]]] = Field(None, description="Every minimum generator")

    def to_dict(self) -> Dict[str, Any]:
        """Document for the CLI: value, basis and, when computed, all bases."""
        data: Dict[str, Any] = {"value": self.value, "basis": list(self.basis)}
        if self.all_minimum_bases is not None:
            data["all_minimum_bases"] = [list(b) for b in self.all_minimum_bases]
        return data
