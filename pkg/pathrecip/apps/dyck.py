"""
Fans of bounded Dyck paths.

d(m,k;n) counts m-fans of (2k+1)-bounded Dyck paths of semilength n. It is the
count of non-intersecting m-tuples [m] -> [m] on the n-th power of a two layer
zig-zag network with m+k sources, so it extends to negative n, where
d(m,k;-n) = d(k,m;n+1).

Plane partitions of the staircase delta_n with entries in 0..m are the same
thing as m-fans of semilength n: the cell in row r, column c sits over lattice
position i = n - r + c and covers the heights h-2..h with h = n - r - c + 2. Its
entry is the number of fan paths lying at or below height h-2 at position i.
For an r-bounded fan the cells with h >= r + 1 always hold m and are dropped,
which leaves the skew shape delta_n / delta_{n-r+1}.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Dict, List, Optional, Sequence, Tuple

from pathrecip.core.config import settings
from pathrecip.core.errors import CapacityError, DimensionError, ShapeError
from pathrecip.core.exact import SubsetIndex
from pathrecip.data.network import PlanarNetwork
from pathrecip.data.reciprocity import reciprocity_engine
from pathrecip.models.schemas import DyckReciprocityReport, DyckRecord
from pathrecip.apps.partitions import SkewShape, staircase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DyckPath:
    steps: Tuple[int, ...]  # +1 up, -1 down

    def __post_init__(self):
        steps = tuple(int(s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        if any(s not in (1, -1) for s in steps):
            raise ShapeError(f"Dyck steps must be +1 or -1, got {steps}")
        height = 0
        for s in steps:
            height += s
            if height < 0:
                raise ShapeError("Dyck path goes below the x-axis")
        if height != 0:
            raise ShapeError("Dyck path does not return to the x-axis")

    @classmethod
    def from_heights(cls, heights: Sequence[int]) -> "DyckPath":
        if not heights or heights[0] != 0:
            raise ShapeError("Dyck height sequence must start at 0")
        return cls(tuple(b - a for a, b in zip(heights, heights[1:])))

    @classmethod
    def parse(cls, text: str) -> "DyckPath":
        """``"UUDD"`` style words."""
        mapping = {"U": 1, "D": -1}
        try:
            return cls(tuple(mapping[ch] for ch in text.strip().upper()))
        except KeyError as e:
            raise ShapeError(f"unknown Dyck step {e.args[0]!r}")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    @property
    def heights(self) -> Tuple[int, ...]:
        return tuple(itertools.accumulate(self.steps, initial=0))

    @property
    def max_height(self) -> int:
        return max(self.heights)

    def is_bounded(self, r: Optional[int]) -> bool:
        return r is None or self.max_height <= r

    def __le__(self, other: "DyckPath") -> bool:
        """Pointwise comparison of paths with the same semilength."""
        if len(self.steps) != len(other.steps):
            return False
        return all(a <= b for a, b in zip(self.heights, other.heights))

    def __str__(self) -> str:
        return "".join("U" if s > 0 else "D" for s in self.steps)


@dataclass(frozen=True)
class DyckFan:
    """D_1 <= D_2 <= ... <= D_m, all of one semilength."""

    paths: Tuple[DyckPath, ...]
    semilength: int

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        for path in self.paths:
            if path.semilength != self.semilength:
                raise ShapeError(
                    f"fan path {path} has semilength {path.semilength}, expected {self.semilength}"
                )
        for lower, upper in zip(self.paths, self.paths[1:]):
            if not lower <= upper:
                raise ShapeError(f"fan paths {lower} and {upper} are not nested")

    @classmethod
    def from_heights(cls, heights: Sequence[Sequence[int]], semilength: Optional[int] = None) -> "DyckFan":
        paths = tuple(DyckPath.from_heights(h) for h in heights)
        if semilength is None:
            if not paths:
                raise ShapeError("the semilength of an empty fan must be given")
            semilength = paths[0].semilength
        return cls(paths, semilength)

    @property
    def m(self) -> int:
        return len(self.paths)

    def is_bounded(self, r: Optional[int]) -> bool:
        return all(p.is_bounded(r) for p in self.paths)


def _reading_key(cell: Tuple[int, int]) -> Tuple[int, int]:
    # left to right along the lattice, then bottom to top
    r, c = cell
    return c - r, -(r + c)


@dataclass(frozen=True)
class PlanePartition:
    """Entries of a (skew) shape, weakly decreasing along rows and down columns."""

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
            if value < 0:
                raise ShapeError(f"negative entry {value} at ({r},{c})")
            for neighbour in ((r, c + 1), (r + 1, c)):
                if neighbour in entries and entries[neighbour] > value:
                    raise ShapeError(f"entries increase from ({r},{c}) to {neighbour}")

    def entries(self) -> Dict[Tuple[int, int], int]:
        """Cell (row, column) to entry."""
        entries = {}
        for r, ((first, _), row) in enumerate(zip(self.shape.rows(), self.rows), 1):
            for offset, value in enumerate(row):
                entries[(r, first + offset)] = value
        return entries

    def entry(self, r: int, c: int) -> int:
        return self.entries()[(r, c)]

    def reading(self) -> List[int]:
        """Entries read bottom to top, left to right; the alternating sequence when r = 3."""
        entries = self.entries()
        return [entries[cell] for cell in sorted(entries, key=_reading_key)]

    def __str__(self) -> str:
        return " / ".join(",".join(str(x) for x in row) for row in self.rows)


def build_dyck_network(m: int, k: int) -> PlanarNetwork:
    """
    Sources s1..sN, middle vertices u1..uN, sinks t1..tN with N = m + k.
    s_i feeds u_{i-1} and u_i; u_j feeds t_j and t_{j+1}; all weights are 1.
    """
    if m < 0 or k < 0:
        raise DimensionError(f"Dyck network needs m, k >= 0, got m={m}, k={k}")
    size = m + k
    if size == 0:
        raise DimensionError("Dyck network needs m + k >= 1")
    sources = [f"s{i}" for i in range(1, size + 1)]
    middle = [f"u{i}" for i in range(1, size + 1)]
    sinks = [f"t{i}" for i in range(1, size + 1)]
    edges = []
    for i in range(1, size + 1):
        if i >= 2:
            edges.append((f"s{i}", f"u{i - 1}", 1))
        edges.append((f"s{i}", f"u{i}", 1))
    for j in range(1, size + 1):
        edges.append((f"u{j}", f"t{j}", 1))
        if j + 1 <= size:
            edges.append((f"u{j}", f"t{j + 1}", 1))
    return PlanarNetwork.build(sources + middle + sinks, edges, sources, sinks, name=f"dyck_{m}_{k}")


def _fan_subsets(m: int, k: int) -> Tuple[PlanarNetwork, SubsetIndex]:
    net = build_dyck_network(m, k)
    return net, SubsetIndex(tuple(range(1, m + 1)), m + k)


def d_value(m: int, k: int, n: int) -> Fraction:
    """d(m,k;n) for any integer n."""
    if m < 0 or k < 0:
        raise DimensionError(f"d(m,k;n) needs m, k >= 0, got m={m}, k={k}")
    if m == 0:
        return Fraction(1)
    net, first = _fan_subsets(m, k)
    return reciprocity_engine.f_at(net, first, first, n)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def enumerate_dyck_paths(n: int, r: Optional[int] = None) -> List[DyckPath]:
    """All Dyck paths of semilength n with height <= r (no bound when r is None), up steps first."""
    if n < 0:
        raise DimensionError(f"semilength must be >= 0, got {n}")
    found: List[DyckPath] = []
    steps: List[int] = []

    def extend(height: int, ups: int):
        if len(steps) == 2 * n:
            found.append(DyckPath(tuple(steps)))
            return
        if ups < n and (r is None or height < r):
            steps.append(1)
            extend(height + 1, ups + 1)
            steps.pop()
        if height > 0:
            steps.append(-1)
            extend(height - 1, ups)
            steps.pop()

    extend(0, 0)
    return found


def enumerate_fans(m: int, r: Optional[int], n: int, capacity: Optional[int] = None) -> List[DyckFan]:
    """All m-fans of r-bounded Dyck paths of semilength n, by backtracking over nested chains."""
    if m < 0:
        raise DimensionError(f"fan size must be >= 0, got {m}")
    paths = enumerate_dyck_paths(n, r)
    candidates = comb(len(paths) + m - 1, m) if paths else 0
    capacity = capacity if capacity is not None else settings.oracle_capacity
    if candidates > capacity:
        raise CapacityError(candidates, capacity, "fans")
    bound = "unbounded" if r is None else f"{r}-bounded"
    logger.info(f"Enumerating {m}-fans of {bound} Dyck paths of semilength {n}")

    above = [[b for b, upper in enumerate(paths) if lower <= upper] for lower in paths]
    fans: List[DyckFan] = []
    chain: List[int] = []

    def extend():
        if len(chain) == m:
            fans.append(DyckFan(tuple(paths[a] for a in chain), n))
            return
        options = above[chain[-1]] if chain else range(len(paths))
        for b in options:
            chain.append(b)
            extend()
            chain.pop()

    extend()
    return fans


def fan_shape(n: int, r: Optional[int] = None) -> SkewShape:
    """delta_n, or delta_n / delta_{n-r+1} for r-bounded fans."""
    outer = staircase(n)
    if r is None:
        return SkewShape(outer)
    return SkewShape(outer, staircase(max(0, n - r + 1)))


def fan_to_plane_partition(fan: DyckFan, r: Optional[int] = None) -> PlanePartition:
    if not fan.is_bounded(r):
        raise ShapeError(f"fan is not {r}-bounded")
    n = fan.semilength
    shape = fan_shape(n, r)
    heights = [p.heights for p in fan.paths]
    rows = []
    for row, (first, last) in enumerate(shape.rows(), 1):
        values = []
        for col in range(first, last + 1):
            i = n - row + col
            h = n - row - col + 2
            values.append(sum(1 for y in heights if y[i] <= h - 2))
        rows.append(tuple(values))
    return PlanePartition(shape, tuple(rows))


def plane_partition_to_fan(pp: PlanePartition, m: int, n: Optional[int] = None) -> DyckFan:
    """
    Inverse of ``fan_to_plane_partition``: path j has height
    (i mod 2) + 2 * #{cells over position i with entry < j} at position i.
    """
    if n is None:
        if not pp.shape.outer.parts:
            raise ShapeError("the semilength must be given for an empty staircase")
        n = pp.shape.outer.length + 1
    if pp.shape.outer != staircase(n):
        raise ShapeError(f"{pp.shape} is not a staircase of semilength {n}")
    by_position = {}
    for (r, c), value in pp.entries().items():
        if value > m:
            raise ShapeError(f"entry {value} exceeds the fan size {m}")
        by_position.setdefault(n - r + c, []).append(value)
    paths = []
    for j in range(1, m + 1):
        heights = [i % 2 + 2 * sum(1 for v in by_position.get(i, ()) if v < j) for i in range(2 * n + 1)]
        paths.append(DyckPath.from_heights(heights))
    return DyckFan(tuple(paths), n)


def proctor_count(n: int, m: int) -> Fraction:
    """Plane partitions of delta_n with entries <= m: prod_{i<j} (2m+i+j-1)/(i+j-1)."""
    if n < 1 or m < 0:
        raise DimensionError(f"proctor_count needs n >= 1 and m >= 0, got n={n}, m={m}")
    return prod(
        (Fraction(2 * m + i + j - 1, i + j - 1) for i in range(1, n + 1) for j in range(i + 1, n + 1)),
        start=Fraction(1),
    )


def is_alternating(sequence: Sequence[int]) -> bool:
    """a_1 <= a_2 >= a_3 <= ..."""
    for t, (a, b) in enumerate(zip(sequence, sequence[1:])):
        if (t % 2 == 0 and a > b) or (t % 2 == 1 and a < b):
            return False
    return True


def alternating_sequence_count(m: int, n: int, capacity: Optional[int] = None) -> Fraction:
    """Brute-force count of a_1 <= a_2 >= ... of length 2n-3 with 0 <= a_i <= m."""
    if n < 2 or m < 0:
        raise DimensionError(f"alternating sequences need n >= 2 and m >= 0, got n={n}, m={m}")
    length = 2 * n - 3
    candidates = (m + 1) ** length
    capacity = capacity if capacity is not None else settings.oracle_capacity
    if candidates > capacity:
        raise CapacityError(candidates, capacity, "sequences")
    count = sum(1 for seq in itertools.product(range(m + 1), repeat=length) if is_alternating(seq))
    return Fraction(count)


def check_dyck_reciprocity(m: int, k: int, n_max: int) -> DyckReciprocityReport:
    """d(m,k;-n) by running the (m,k) recurrence backwards against d(k,m;n+1) computed forwards."""
    net, first = _fan_subsets(m, k)
    logger.info(f"Checking Dyck reciprocity for m={m}, k={k} up to n={n_max}")
    recurrence = reciprocity_engine.f_recurrence(net, first, first)
    records = []
    for n in range(1, n_max + 1):
        negative = recurrence.extend_negative(n)
        shifted = d_value(k, m, n + 1)
        passed = negative == shifted
        if not passed:
            logger.warning(f"d({m},{k};-{n}) = {negative} but d({k},{m};{n + 1}) = {shifted}")
        records.append(DyckRecord(n=n, negative_value=negative, shifted_value=shifted, passed=passed))
    return DyckReciprocityReport(m=m, k=k, n_max=n_max, records=records)
