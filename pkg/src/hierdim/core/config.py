"""Runtime settings for the hierdim toolkit.

Values come from explicit arguments first, then ``HIERDIM_*`` environment
variables, then the defaults below.
"""

import logging
import os
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .errors import BadParameter

logger = logging.getLogger(__name__)

DEFAULT_MAX_EXACT = 64
DEFAULT_TOLERANCE = 1e-9

_ENV_VARS = {
    "max_exact_vertices": "HIERDIM_MAX_EXACT",
    "workers": "HIERDIM_WORKERS",
    "geodesic_rule": "HIERDIM_GEODESIC_RULE",
    "log_level": "HIERDIM_LOG_LEVEL",
}


class Settings(BaseModel):
    """Toolkit configuration shared by every service."""

    model_config = ConfigDict(frozen=True)

    max_exact_vertices: int = Field(DEFAULT_MAX_EXACT, description="Largest product order verified by exact search")
    workers: int = Field(1, description="Parallel workers for dimension search")
    geodesic_rule: Literal["any", "all"] = Field("any", description="Quantifier of the customer-free geodesic rule")
    log_level: str = Field("WARNING", description="Logging level used by the CLI")
    tolerance: float = Field(DEFAULT_TOLERANCE, description="Equality tolerance for weighted distances")

    @classmethod
    def from_env(cls, **overrides: Any) -> "Settings":
        """Build settings from overrides, falling back to the environment.

        Args:
            **overrides: Field values that take precedence; ``None`` means unset

        Returns:
            A validated Settings instance

        Raises:
            BadParameter: If a value is out of range or cannot be parsed
        """
        values: Dict[str, Any] = {}
        for name, env_var in _ENV_VARS.items():
            value: Optional[Any] = overrides.get(name)
            if value is None:
                value = os.environ.get(env_var)
                if value is not None:
                    logger.debug("Using %s=%s from environment", env_var, value)
            if value is not None:
                values[name] = value
        if overrides.get("tolerance") is not None:
            values["tolerance"] = overrides["tolerance"]

        try:
            if "max_exact_vertices" in values:
                values["max_exact_vertices"] = int(values["max_exact_vertices"])
            if "workers" in values:
                values["workers"] = int(values["workers"])
            if "geodesic_rule" in values:
                values["geodesic_rule"] = str(values["geodesic_rule"]).lower()
            if "log_level" in values:
                values["log_level"] = str(values["log_level"]).upper()
        except ValueError as e:
            raise BadParameter(f"Invalid setting: {e}") from e

        if values.get("geodesic_rule", "any") not in ("any", "all"):
            raise BadParameter(f"geodesic rule must be 'any' or 'all', got {values['geodesic_rule']!r}")
        if values.get("workers", 1) < 1:
            raise BadParameter(f"workers must be at least 1, got {values['workers']}")
        if values.get("max_exact_vertices", DEFAULT_MAX_EXACT) < 1:
            raise BadParameter(f"max exact vertices must be positive, got {values['max_exact_vertices']}")
        return cls(**values)
