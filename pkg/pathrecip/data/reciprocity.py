from fractions import Fraction
from typing import Dict, Optional, Tuple
import logging

from pathrecip.core.config import settings
from pathrecip.core.errors import DimensionError, SingularMatrixError
from pathrecip.core.exact import (
    ExactMatrix,
    SubsetIndex,
    adjugate_k,
    char_poly,
    compound_k,
    det_bareiss,
    format_rational,
    mat_pow,
)
from pathrecip.data.network import PlanarNetwork
from pathrecip.data.recurrence import LinearRecurrence
from pathrecip.models.schemas import ReciprocityRecord, ReciprocityReport, RecurrenceSummary

logger = logging.getLogger(__name__)


class ReciprocityEngine:
    """
    Counts f_G(I,J;n) of non-intersecting path tuples on G^n as entries of
    com_k(P_G)^n, and their extension to negative n through adj_k(P_G)/det(P_G).
    """

    def __init__(self, cache_size: Optional[int] = None):
        self.cache: Dict[Tuple, object] = {}
        self.cache_size = cache_size if cache_size is not None else settings.cache_size

    def _cached(self, net: PlanarNetwork, kind: str, k: int, build):
        cache_key = (net.signature, kind, k)
        if cache_key in self.cache:
            logger.debug(f"Cache hit for {kind} (k={k}) of {net.name or '<unnamed>'}")
            return self.cache[cache_key]
        value = build()
        if self.cache_size > 0:
            while len(self.cache) >= self.cache_size:
                # dicts keep insertion order, so the first key is the oldest
                self.cache.pop(next(iter(self.cache)))
            self.cache[cache_key] = value
        return value

    def clear_cache(self):
        self.cache.clear()

    def path_matrix(self, net: PlanarNetwork) -> ExactMatrix:
        return self._cached(net, "path", 0, net.path_matrix)

    def path_determinant(self, net: PlanarNetwork) -> Fraction:
        return self._cached(net, "det", 0, lambda: det_bareiss(self.path_matrix(net)))

    def compound(self, net: PlanarNetwork, k: int) -> ExactMatrix:
        return self._cached(net, "compound", k, lambda: compound_k(self.path_matrix(net), k))

    def inverse_compound(self, net: PlanarNetwork, k: int) -> ExactMatrix:
        """com_k(P_G)^-1 = adj_k(P_G) / det(P_G)."""
        det = self._require_nonsingular(net)

        def build():
            adjugate = adjugate_k(self.path_matrix(net), k)
            return adjugate if det == 1 else adjugate.scale(1 / det)

        return self._cached(net, "inverse", k, build)

    def _require_nonsingular(self, net: PlanarNetwork) -> Fraction:
        det = self.path_determinant(net)
        if det == 0:
            logger.warning(f"Network {net.name or '<unnamed>'} has a singular path matrix")
            raise SingularMatrixError()
        return det

    def _check_subsets(self, net: PlanarNetwork, i: SubsetIndex, j: SubsetIndex) -> int:
        if len(i) != len(j):
            raise DimensionError(f"|I| = {len(i)} but |J| = {len(j)}")
        for subset in (i, j):
            if subset.ambient != net.m:
                raise DimensionError(
                    f"subset {subset} lives in [{subset.ambient}] but the network has {net.m} sources"
                )
        net.require_valid()
        return len(i)

    def f_value(self, net: PlanarNetwork, i: SubsetIndex, j: SubsetIndex, n: int) -> Fraction:
        if n < 0:
            raise DimensionError(f"f_value needs n >= 0, got {n}; use f_negative or f_at")
        k = self._check_subsets(net, i, j)
        power = mat_pow(self.compound(net, k), n)
        return power[i.rank(), j.rank()]

    def f_negative(self, net: PlanarNetwork, i: SubsetIndex, j: SubsetIndex, n: int) -> Fraction:
        if n < 1:
            raise DimensionError(f"f_negative needs n >= 1, got {n}")
        k = self._check_subsets(net, i, j)
        power = mat_pow(self.inverse_compound(net, k), n)
        return power[i.rank(), j.rank()]

    def f_at(self, net: PlanarNetwork, i: SubsetIndex, j: SubsetIndex, n: int) -> Fraction:
        return self.f_value(net, i, j, n) if n >= 0 else self.f_negative(net, i, j, -n)

    def f_recurrence(self, net: PlanarNetwork, i: SubsetIndex, j: SubsetIndex) -> LinearRecurrence:
        """Recurrence of order C(m,k) from the characteristic polynomial of com_k(P_G)."""
        k = self._check_subsets(net, i, j)
        self._require_nonsingular(net)
        compound = self.compound(net, k)
        logger.info(
            f"Building order {compound.rows} recurrence for I={i}, J={j} on {net.name or '<unnamed>'}"
        )
        row, col = i.rank(), j.rank()
        initial = []
        power = ExactMatrix.identity(compound.rows)
        for _ in range(compound.rows):
            initial.append(power[row, col])
            power = power @ compound
        return LinearRecurrence.from_char_poly(char_poly(compound), initial)

    def recurrence_summary(self, net: PlanarNetwork, i: SubsetIndex, j: SubsetIndex) -> RecurrenceSummary:
        recurrence = self.f_recurrence(net, i, j)
        gf = recurrence.generating_function()
        return RecurrenceSummary(
            order=recurrence.order,
            coefficients=list(recurrence.coefficients),
            initial_values=list(recurrence.initial_values),
            numerator=list(gf.numerator.coefficients),
            denominator=list(gf.denominator.coefficients),
            generating_function=str(gf),
        )

    def check_reciprocity(
        self, net: PlanarNetwork, i: SubsetIndex, j: SubsetIndex, n_max: int
    ) -> ReciprocityReport:
        """
        Compare f(I,J;-n) with (-1)^(sigma(I)+sigma(J)) det(P_G)^(-n) f(J^c,I^c;n)
        for n = 1..n_max.
        """
        self._check_subsets(net, i, j)
        det = self._require_nonsingular(net)
        logger.info(f"Checking reciprocity for I={i}, J={j} up to n={n_max} on {net.name or '<unnamed>'}")

        sign = -1 if (i.sigma + j.sigma) % 2 else 1
        j_c, i_c = j.complement(), i.complement()
        records = []
        for n in range(1, n_max + 1):
            negative = self.f_negative(net, i, j, n)
            det_power = 1 / det**n
            complementary = self.f_value(net, j_c, i_c, n)
            passed = negative == sign * det_power * complementary
            if not passed:
                logger.warning(
                    f"Reciprocity fails at n={n}: {format_rational(negative)} vs "
                    f"{sign} * {format_rational(det_power)} * {format_rational(complementary)}"
                )
            records.append(
                ReciprocityRecord(
                    n=n,
                    negative_value=negative,
                    sign=sign,
                    det_power=det_power,
                    complementary_value=complementary,
                    passed=passed,
                )
            )
        return ReciprocityReport(
            network_id=net.name,
            sources=list(i.elements),
            sinks=list(j.elements),
            ambient=net.m,
            n_max=n_max,
            determinant=det,
            records=records,
        )


# Global instance
reciprocity_engine = ReciprocityEngine()
