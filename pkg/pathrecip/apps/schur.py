"""
Skew Schur functions at repeated evaluation points.

s_{lambda/mu}(z^n), with z^n the concatenation of n copies of z, is a count of
non-intersecting paths on the n-th power of a grid network whose vertical edges
in column c weigh z_c. Reading that count at negative n gives
(-1)^{|lambda/mu|} s_{lambda^t/mu^t}(z_rev^n).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

from pathrecip.core.config import settings
from pathrecip.core.errors import CapacityError, DimensionError, ShapeError
from pathrecip.core.exact import (
    RationalLike,
    RationalPolynomial,
    SubsetIndex,
    parse_rational_list,
    to_rational,
)
from pathrecip.data.network import Edge, PlanarNetwork
from pathrecip.data.reciprocity import reciprocity_engine
from pathrecip.models.schemas import SchurReciprocityReport, SchurRecord
from pathrecip.apps.partitions import Partition, SkewShape, content

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalPoint:
    values: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(to_rational(v) for v in self.values))

    @classmethod
    def of(cls, *values: RationalLike) -> "EvalPoint":
        return cls(tuple(values))

    @classmethod
    def parse(cls, text: str) -> "EvalPoint":
        return cls(tuple(parse_rational_list(text)))

    @property
    def k(self) -> int:
        return len(self.values)

    def reversed(self) -> "EvalPoint":
        return EvalPoint(self.values[::-1])

    def repeated(self, n: int) -> "EvalPoint":
        """z^n: n copies of z one after another."""
        if n < 0:
            raise DimensionError(f"z^n needs n >= 0 here, got {n}")
        return EvalPoint(self.values * n)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class Tableau:
    """Semistandard filling: rows weakly increase, columns strictly increase."""

    shape: SkewShape
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        expected = [max(0, last - first + 1) for first, last in self.shape.rows()]
        if [len(row) for row in rows] != expected:
            raise ShapeError(f"row lengths {[len(row) for row in rows]} do not fit {self.shape}")
        entries = self.entries()
        for (r, c), value in entries.items():
            if value < 1:
                raise ShapeError(f"tableau entry {value} at ({r},{c}) is not positive")
            right = entries.get((r, c + 1))
            if right is not None and right < value:
                raise ShapeError(f"row {r} decreases at column {c}")
            below = entries.get((r + 1, c))
            if below is not None and below <= value:
                raise ShapeError(f"column {c} does not strictly increase at row {r}")

    def entries(self) -> Dict[Tuple[int, int], int]:
        entries = {}
        for r, ((first, _), row) in enumerate(zip(self.shape.rows(), self.rows), 1):
            for offset, value in enumerate(row):
                entries[(r, first + offset)] = value
        return entries

    def weight(self, values: Sequence[Fraction]) -> Fraction:
        """prod over cells of values[entry - 1]."""
        return prod((values[v - 1] for row in self.rows for v in row), start=Fraction(1))


@dataclass(frozen=True)
class SchurNetwork:
    """
    Grid with N = lambda_1 + l(lambda) horizontal tracks and k interior columns.
    Vertices are s{r}, v{c}_{r} and t{r}; the vertical edge v{c}_{r} -> v{c}_{r+1}
    carries the tag c until ``instantiate`` replaces it by z_c.
    """

    outer: Partition
    k: int
    vertices: Tuple[str, ...]
    horizontal: Tuple[Tuple[str, str], ...]
    vertical: Tuple[Tuple[str, str, int], ...]

    @property
    def tracks(self) -> int:
        return max(1, self.outer.part(1) + self.outer.length)

    @property
    def sources(self) -> Tuple[str, ...]:
        return tuple(f"s{r}" for r in range(1, self.tracks + 1))

    @property
    def sinks(self) -> Tuple[str, ...]:
        return tuple(f"t{r}" for r in range(1, self.tracks + 1))

    def instantiate(self, z: EvalPoint) -> PlanarNetwork:
        if z.k != self.k:
            raise DimensionError(f"network has {self.k} columns but z has {z.k} values")
        edges = [Edge(tail, head, 1) for tail, head in self.horizontal]
        edges.extend(Edge(tail, head, z.values[column - 1]) for tail, head, column in self.vertical)
        return PlanarNetwork(
            self.vertices, tuple(edges), self.sources, self.sinks, name=f"schur_{self.outer}_z{z}"
        )


def build_schur_network(outer: Partition, k: int) -> SchurNetwork:
    if k < 1:
        raise DimensionError(f"Schur network needs k >= 1 columns, got {k}")
    tracks = max(1, outer.part(1) + outer.length)
    vertices = [f"s{r}" for r in range(1, tracks + 1)]
    horizontal = []
    vertical = []
    for r in range(1, tracks + 1):
        trail = [f"s{r}"] + [f"v{c}_{r}" for c in range(1, k + 1)] + [f"t{r}"]
        horizontal.extend(zip(trail, trail[1:]))
    for c in range(1, k + 1):
        vertices.extend(f"v{c}_{r}" for r in range(1, tracks + 1))
        vertical.extend((f"v{c}_{r}", f"v{c}_{r + 1}", c) for r in range(1, tracks))
    vertices.extend(f"t{r}" for r in range(1, tracks + 1))
    return SchurNetwork(outer, k, tuple(vertices), tuple(horizontal), tuple(vertical))


def schur_boundary_subsets(shape: SkewShape) -> Tuple[SubsetIndex, SubsetIndex]:
    """I = {mu_l + 1, mu_{l-1} + 2, ..., mu_1 + l} and J likewise from lambda, l = l(lambda)."""
    length = shape.outer.length
    ambient = shape.outer.part(1) + length
    sources = tuple(shape.inner.part(length + 1 - a) + a for a in range(1, length + 1))
    sinks = tuple(shape.outer.part(length + 1 - a) + a for a in range(1, length + 1))
    return SubsetIndex(sources, ambient), SubsetIndex(sinks, ambient)


def schur_eval(shape: SkewShape, z: EvalPoint, n: int) -> Fraction:
    """s_{lambda/mu}(z^n) for any integer n."""
    if shape.is_empty:
        return Fraction(1)
    if z.k == 0:
        return Fraction(0)
    net = build_schur_network(shape.outer, z.k).instantiate(z)
    sources, sinks = schur_boundary_subsets(shape)
    return reciprocity_engine.f_at(net, sources, sinks, n)


def ssyt_enumerate(shape: SkewShape, max_entry: int, capacity: Optional[int] = None) -> List[Tableau]:
    """All semistandard tableaux of the shape with entries in 1..max_entry, row by row."""
    cells = list(shape.cells())
    candidates = max(max_entry, 0) ** len(cells)
    capacity = capacity if capacity is not None else settings.oracle_capacity
    if candidates > capacity:
        raise CapacityError(candidates, capacity, "fillings")

    found: List[Tableau] = []
    filling: Dict[Tuple[int, int], int] = {}

    def place(index: int):
        if index == len(cells):
            rows = [
                tuple(filling[(r, c)] for c in range(first, last + 1))
                for r, (first, last) in enumerate(shape.rows(), 1)
            ]
            found.append(Tableau(shape, tuple(rows)))
            return
        r, c = cells[index]
        low = max(filling.get((r, c - 1), 1), filling.get((r - 1, c), 0) + 1)
        for value in range(low, max_entry + 1):
            filling[(r, c)] = value
            place(index + 1)
        filling.pop((r, c), None)

    place(0)
    return found


def ssyt_weighted_sum(shape: SkewShape, values: Sequence[RationalLike]) -> Fraction:
    """s_{lambda/mu}(x_1..x_N) by summing tableau weights with x_i = values[i-1]."""
    values = [to_rational(v) for v in values]
    return sum((t.weight(values) for t in ssyt_enumerate(shape, len(values))), Fraction(0))


def elementary_eval(m: int, z: EvalPoint, n: int) -> Fraction:
    """e_m(z^n) = s_{(1^m)}(z^n)."""
    if m < 0:
        raise DimensionError(f"e_m needs m >= 0, got {m}")
    return schur_eval(SkewShape(Partition((1,) * m)), z, n)


def homogeneous_eval(m: int, z: EvalPoint, n: int) -> Fraction:
    """h_m(z^n) = s_{(m)}(z^n)."""
    if m < 0:
        raise DimensionError(f"h_m needs m >= 0, got {m}")
    return schur_eval(SkewShape(Partition((m,))), z, n)


def _power_sum(z: Sequence[Fraction], m: int) -> Fraction:
    return sum((x**m for x in z), Fraction(0))


def power_sum_eval(parts: Partition, z: EvalPoint, n: int) -> Fraction:
    """p_lambda(z^n) = n^l(lambda) p_lambda(z); a polynomial in n, so any integer n is fine."""
    return Fraction(n) ** parts.length * prod(
        (_power_sum(z.values, p) for p in parts.parts), start=Fraction(1)
    )


def power_sum_direct(parts: Partition, z: EvalPoint, n: int) -> Fraction:
    """p_lambda(z^n) summed over the nk repeated values."""
    values = z.repeated(n).values
    return prod((_power_sum(values, p) for p in parts.parts), start=Fraction(1))


def omega_power_sum_sign(parts: Partition) -> int:
    """omega(p_lambda) = (-1)^(|lambda| - l(lambda)) p_lambda."""
    return -1 if (parts.size - parts.length) % 2 else 1


def hook_content(parts: Partition, n: int) -> Fraction:
    """s_lambda(1^n) = prod over cells of (n + content) / hook length."""
    return prod(
        (Fraction(n + content(r, c), parts.hook_length(r, c)) for r, c in parts.cells()),
        start=Fraction(1),
    )


def interpolate(points: Sequence[Tuple[int, Fraction]]) -> RationalPolynomial:
    """Lagrange interpolation through (x_i, y_i) with distinct x_i."""
    result = RationalPolynomial(())
    for i, (x_i, y_i) in enumerate(points):
        basis = RationalPolynomial((Fraction(1),))
        for j, (x_j, _) in enumerate(points):
            if j != i:
                basis = basis * RationalPolynomial((Fraction(-x_j), Fraction(1)))
                basis = basis.scale(Fraction(1, x_i - x_j))
        result = result + basis.scale(y_i)
    return result


def schur_eval_polynomial(shape: SkewShape, z: EvalPoint) -> RationalPolynomial:
    """The polynomial in n agreeing with s_{lambda/mu}(z^n) at n = 0..|lambda/mu|."""
    return interpolate([(n, schur_eval(shape, z, n)) for n in range(shape.size + 1)])


def check_schur_reciprocity(shape: SkewShape, z: EvalPoint, n_max: int) -> SchurReciprocityReport:
    """
    Compare s_{lambda/mu}(z^-n) with (-1)^{|lambda/mu|} s_{lambda^t/mu^t}(z_rev^n) for
    n = 1..n_max, and the transpose side at z_rev with the one at z.
    """
    logger.info(f"Checking Schur reciprocity for {shape} at z={z} up to n={n_max}")
    sign = -1 if shape.size % 2 else 1
    transposed = shape.transpose()
    records = []
    for n in range(1, n_max + 1):
        negative = schur_eval(shape, z, -n)
        reversed_side = schur_eval(transposed, z.reversed(), n)
        plain_side = schur_eval(transposed, z, n)
        passed = negative == sign * reversed_side and reversed_side == plain_side
        if not passed:
            logger.warning(
                f"Schur reciprocity fails for {shape} at n={n}: {negative} vs "
                f"{sign} * {reversed_side} (unreversed {plain_side})"
            )
        records.append(
            SchurRecord(
                n=n,
                negative_value=negative,
                sign=sign,
                transpose_reversed=reversed_side,
                transpose_unreversed=plain_side,
                passed=passed,
            )
        )
    return SchurReciprocityReport(
        outer=list(shape.outer.parts),
        inner=list(shape.inner.parts),
        z=list(z.values),
        n_max=n_max,
        records=records,
    )
