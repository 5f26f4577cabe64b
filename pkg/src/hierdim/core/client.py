"""hierdim toolkit entry point.

The toolkit is organized into services, one per concern:

1. graphs - graph construction and the JSON graph format
2. dimension - representations, generator predicates and exact dimensions
3. products - hierarchical, Cartesian, join and corona products
4. bounds - product dimension bounds checked against exact search
5. gallery - named example graphs with structural self-checks
6. delivery - customer graphs and landmark codes

Example:
    >>> from hierdim import HierDimClient
    >>> client = HierDimClient()
    >>> c5 = client.gallery.cycle(5)
    >>> client.dimension.find_dimension(c5, "local").value
    2
"""

import importlib
import inspect
import logging
from typing import Any, Dict, Optional

from .config import Settings
from .errors import InstanceTooLarge

logger = logging.getLogger(__name__)


class HierDimService:
    """Base class for hierdim services.

    Provides shared settings, a lazily created back-reference to the client
    (so services can call each other), and the exact-search size guard.

    Args:
        settings: Toolkit settings; read from the environment when omitted
        client: Owning client, created on first use when omitted
    """

    def __init__(self, settings: Optional[Settings] = None, client: Optional["HierDimClient"] = None):
        self.settings = settings or Settings.from_env()
        self._client = client

    @property
    def client(self) -> "HierDimClient":
        if self._client is None:
            self._client = HierDimClient(settings=self.settings)
        return self._client

    def _guard_size(self, order: int, limit: Optional[int] = None) -> None:
        """Raise InstanceTooLarge when ``order`` exceeds the exact-search guard."""
        limit = self.settings.max_exact_vertices if limit is None else limit
        if order > limit:
            logger.error("Instance with %d vertices exceeds exact-search limit %d", order, limit)
            raise InstanceTooLarge(f"{order} vertices exceed the exact-search limit of {limit}")


class HierDimClient:
    """Main entry point for the hierdim toolkit.

    Services are discovered from ``hierdim.api.__all__``: every
    HierDimService subclass found in those modules is registered under its
    module name and reachable as an attribute.

    Example:
        >>> client = HierDimClient(workers=4)
        >>> client.products.cartesian_product(g, h)
        >>> client.bounds.verify_bounds(spec)
    """

    def __init__(
        self,
        settings: Optional[Settings] = None,
        max_exact_vertices: Optional[int] = None,
        workers: Optional[int] = None,
        geodesic_rule: Optional[str] = None,
    ):
        """Initialize the client and its services.

        Args:
            settings: Complete settings; individual arguments are ignored when given
            max_exact_vertices: Exact-search guard (HIERDIM_MAX_EXACT)
            workers: Parallel search workers (HIERDIM_WORKERS)
            geodesic_rule: 'any' or 'all' (HIERDIM_GEODESIC_RULE)
        """
        self.settings = settings or Settings.from_env(
            max_exact_vertices=max_exact_vertices,
            workers=workers,
            geodesic_rule=geodesic_rule,
        )
        logger.info("Initializing hierdim client with %s", self.settings)
        self._api_registry: Dict[str, HierDimService] = {}
        self._load_api_modules()

    def _load_api_modules(self) -> None:
        """Import every module in the api package and register its services."""
        api_package = importlib.import_module("hierdim.api")
        for module_name in getattr(api_package, "__all__", []):
            try:
                module = importlib.import_module(f"hierdim.api.{module_name}")
            except ImportError as e:
                logger.warning("Could not import API module %s: %s", module_name, e)
                continue
            for _, obj in inspect.getmembers(module, inspect.isclass):
                if issubclass(obj, HierDimService) and obj is not HierDimService and obj.__module__ == module.__name__:
                    self._api_registry[module_name] = obj(self.settings, client=self)

    def __getattr__(self, name: str) -> Any:
        """Access services by name, e.g. ``client.dimension``."""
        registry = self.__dict__.get("_api_registry", {})
        if name in registry:
            return registry[name]
        raise AttributeError(f"'{self.__class__.__name__}' has no attribute '{name}'")
