"""Integer partitions, skew shapes and staircases, in English (top-left) notation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from pathrecip.core.errors import ShapeError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts. Trailing zeros are dropped."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = [int(p) for p in self.parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ShapeError(f"partition {parts} has a negative part")
        if any(b > a for a, b in zip(parts, parts[1:])):
            raise ShapeError(f"partition {parts} is not weakly decreasing")
        object.__setattr__(self, "parts", tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """``"3,2,2"``; the empty string is the empty partition."""
        try:
            return cls(tuple(int(part) for part in text.split(",") if part.strip()))
        except ValueError as e:
            if isinstance(e, ShapeError):
                raise
            raise ShapeError(f"not a comma separated list of integers: {text!r}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """lambda_i, 1-based, with lambda_i = 0 past the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1)))

    def cells(self) -> Iterator[Tuple[int, int]]:
        """(row, column), 1-based, row by row."""
        for r, length in enumerate(self.parts, 1):
            for c in range(1, length + 1):
                yield r, c

    def contains(self, other: "Partition") -> bool:
        return other.length <= self.length and all(
            other.part(i) <= self.part(i) for i in range(1, other.length + 1)
        )

    def hook_length(self, r: int, c: int) -> int:
        return self.part(r) - c + self.transpose().part(c) - r + 1

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def content(r: int, c: int) -> int:
    return c - r


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ShapeError(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def of(cls, outer: Sequence[int], inner: Sequence[int] = ()) -> "SkewShape":
        return cls(Partition(tuple(outer)), Partition(tuple(inner)))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    def transpose(self) -> "SkewShape":
        return SkewShape(self.outer.transpose(), self.inner.transpose())

    def rows(self) -> List[Tuple[int, int]]:
        """Per outer row, the 1-based column range (first, last) of its cells; first > last for an empty row."""
        return [(self.inner.part(r) + 1, self.outer.part(r)) for r in range(1, self.outer.length + 1)]

    def cells(self) -> Iterator[Tuple[int, int]]:
        for r, (first, last) in enumerate(self.rows(), 1):
            for c in range(first, last + 1):
                yield r, c

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}" if self.inner.parts else str(self.outer)


def staircase(n: int) -> Partition:
    """delta_n = (n-1, n-2, ..., 1)."""
    if n < 0:
        raise ShapeError(f"staircase needs n >= 0, got {n}")
    return Partition(tuple(range(n - 1, 0, -1)))
