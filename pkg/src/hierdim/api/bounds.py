"""Product dimension bounds checked against exact search.

Two families of bounds are evaluated for G(U) ⊓ H:

- the sandwich bound, available when some local metric basis of G lies in U;
- the general upper bound n(H)(dim_l(G) - k) + k with k = |S_G ∩ U|.

verify_bounds computes both next to the exact product dimension and records
every violation instead of raising.
"""

import logging
from typing import List, Optional

from ..core.client import HierDimService
from ..models.bounds import BasisBound, BoundsReport, CoronaBound, GeneralBound, JoinWitness, SandwichBounds
from ..models.dimension import DimensionResult
from ..models.graph import Graph
from ..models.product import ProductSpec

logger = logging.getLogger(__name__)


class BoundsAPI(HierDimService):
    """Service for evaluating and verifying product bounds."""

    def _local_bases(self, graph: Graph, known: Optional[DimensionResult] = None) -> DimensionResult:
        if known is not None and known.all_minimum_bases is not None:
            return known
        return self.client.dimension.local_dimension(graph, enumerate_all=True)

    def sandwich_bounds(
        self,
        spec: ProductSpec,
        g_result: Optional[DimensionResult] = None,
        h_result: Optional[DimensionResult] = None,
    ) -> SandwichBounds:
        """Sandwich bounds, decided by enumerating every local metric basis of G.

        Args:
            spec: The product instance
            g_result: Local dimension of G; searched again unless it lists all minimum bases
            h_result: Local dimension of H, if already known
        """
        g_result = self._local_bases(spec.g, g_result)
        h_result = h_result or self.client.dimension.local_dimension(spec.h)
        u = set(spec.u)
        inside = [basis for basis in g_result.all_minimum_bases if set(basis) <= u]
        if not inside:
            logger.info("No local metric basis of G lies inside U=%s", list(spec.u))
            return SandwichBounds(applicable=False)

        u_local = self.client.dimension.u_local_dimension(spec.g, spec.u).value
        return SandwichBounds(
            applicable=True,
            lower=max(u_local, h_result.value),
            upper=max(g_result.value, h_result.value),
            basis_in_u=list(inside[0]),
            u_local=u_local,
        )

    def general_upper_bound(
        self,
        spec: ProductSpec,
        g_result: Optional[DimensionResult] = None,
        h_result: Optional[DimensionResult] = None,
    ) -> GeneralBound:
        """General upper bound for every local metric basis of G, and the smallest.

        A basis with k < |S_G| gives n(H)(|S_G| - k) + k. A basis inside U
        gives max(|S_G|, dim_l(H)): the fibre-free construction is then the
        diagonal pairing, which needs as many landmarks as S_H.
        """
        g_result = self._local_bases(spec.g, g_result)
        h_result = h_result or self.client.dimension.local_dimension(spec.h)
        u = set(spec.u)

        per_basis: List[BasisBound] = []
        for basis in g_result.all_minimum_bases:
            k = len(u.intersection(basis))
            if k == len(basis):
                bound = max(len(basis), h_result.value)
            else:
                bound = spec.h.n * (len(basis) - k) + k
            per_basis.append(BasisBound(basis=list(basis), k=k, bound=bound))

        best = min(per_basis, key=lambda entry: entry.bound)
        return GeneralBound(bound=best.bound, best_k=best.k, witness=best.basis, per_basis=per_basis)

    def verify_bounds(self, spec: ProductSpec, max_exact: Optional[int] = None) -> BoundsReport:
        """Exact dim_l(G(U) ⊓ H) next to both bounds and both generator constructions.

        Args:
            spec: The product instance
            max_exact: Size guard in product vertices; defaults to the configured value

        Returns:
            BoundsReport; ``consistent`` is False when any bound or construction fails

        Raises:
            InstanceTooLarge: If n(G)·n(H) exceeds the guard
        """
        self._guard_size(spec.order, max_exact)
        dimension = self.client.dimension
        products = self.client.products

        g_result = self._local_bases(spec.g)
        h_result = dimension.local_dimension(spec.h)
        sandwich = self.sandwich_bounds(spec, g_result, h_result)
        general = self.general_upper_bound(spec, g_result, h_result)

        product = products.hierarchical_product(spec)
        exact = dimension.local_dimension(product.graph)

        constructed = products.fibered_generator(spec, general.witness, h_result.basis)
        constructed_valid = dimension.is_local_metric_generator(product.graph, constructed)

        violations: List[str] = []
        if sandwich.applicable:
            if not sandwich.lower <= exact.value <= sandwich.upper:
                violations.append(
                    f"sandwich: expected {sandwich.lower} <= {exact.value} <= {sandwich.upper}"
                )
            diagonal = products.diagonal_generator(spec, sandwich.basis_in_u, h_result.basis)
            if not dimension.is_local_metric_generator(product.graph, diagonal):
                violations.append(f"diagonal generator {list(diagonal)} does not resolve the product")
        for entry in general.per_basis:
            if exact.value > entry.bound:
                violations.append(f"general: basis {entry.basis} (k={entry.k}) bounds by {entry.bound} < {exact.value}")
        if not constructed_valid:
            violations.append(f"fibered generator {list(constructed)} does not resolve the product")
        if len(constructed) > general.bound:
            violations.append(f"fibered generator has {len(constructed)} vertices, bound is {general.bound}")

        if violations:
            logger.error("Bound violations for %r: %s", product.graph, violations)
        else:
            logger.info("Bounds hold for %r: exact %d, general %d", product.graph, exact.value, general.bound)

        return BoundsReport(
            n_g=spec.g.n,
            n_h=spec.h.n,
            u=list(spec.u),
            g_local=g_result.value,
            h_local=h_result.value,
            u_local=sandwich.u_local,
            sandwich_applicable=sandwich.applicable,
            sandwich_lower=sandwich.lower,
            sandwich_upper=sandwich.upper,
            general_upper=general.bound,
            best_k=general.best_k,
            exact=exact.value,
            g_witness=general.witness,
            h_witness=list(h_result.basis),
            product_basis=list(exact.basis),
            constructed_generator=list(constructed),
            constructed_valid=constructed_valid,
            consistent=not violations,
            violations=violations,
        )

    def corona_bound(self, g: Graph, h: Graph, max_exact: Optional[int] = None) -> CoronaBound:
        """Bound dim_l(G ⊙ H) through (H + K1)({apex}) ⊓ G.

        When some local metric basis of H + K1 avoids the apex, k = 0 and the
        bound is n(G)·dim_l(H + K1). The exact value is included when the
        corona fits the size guard.
        """
        products = self.client.products
        cone = products.join(h, Graph(n=1))
        apex = h.n
        spec = products.spec(cone, [apex], g)
        cone_result = self._local_bases(cone)
        g_result = self.client.dimension.local_dimension(g)
        general = self.general_upper_bound(spec, cone_result, g_result)
        bases = cone_result.all_minimum_bases or [cone_result.basis]

        exact: Optional[int] = None
        limit = self.settings.max_exact_vertices if max_exact is None else max_exact
        if spec.order <= limit:
            exact = self.client.dimension.local_dimension(products.corona(g, h)).value
            if exact > general.bound:
                logger.error("Corona bound %d below exact value %d", general.bound, exact)
        else:
            logger.info("Corona with %d vertices exceeds the guard; exact value skipped", spec.order)

        return CoronaBound(
            n_g=g.n,
            n_h=h.n,
            cone_local=cone_result.value,
            apex_in_some_basis=any(apex in basis for basis in bases),
            apex_free_basis=any(apex not in basis for basis in bases),
            bound=general.bound,
            best_k=general.best_k,
            exact=exact,
        )

    def join_witness(self, h: Graph, t: int, max_exact: Optional[int] = None) -> JoinWitness:
        """Exact dim_l(H + K_t) against n(H)(t - 1).

        The closed form needs hypotheses on H that are not checked here, so
        disagreement is reported rather than raised.
        """
        self._guard_size(h.n + t, max_exact)
        joined = self.client.products.join(h, self.client.gallery.complete(t))
        result = self.client.dimension.local_dimension(joined)
        quoted = h.n * (t - 1)
        if result.value != quoted:
            logger.info("dim_l(H + K_%d) = %d differs from n(H)(t-1) = %d", t, result.value, quoted)
        return JoinWitness(
            n_h=h.n,
            t=t,
            exact=result.value,
            quoted=quoted,
            agrees=result.value == quoted,
            basis=list(result.basis),
        )
