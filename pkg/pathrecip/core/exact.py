"""
Exact rational linear algebra.

Scalars are ``fractions.Fraction``. Matrices and polynomials are immutable
values. Subsets of [m] are 1-based and ordered lexicographically, which is also
the row/column order of compound and adjugate matrices.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from pathrecip.core.errors import DimensionError

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (integer p, positive integer q) into a reduced Fraction."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"not a rational of the form 'p' or 'p/q': {text!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not exact scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def parse_rational_list(text: str) -> List[Fraction]:
    """Comma separated rationals, e.g. ``"1,1/2,-3"``; the empty string is the empty list."""
    return [parse_rational(part) for part in text.split(",") if part.strip()]


@dataclass(frozen=True)
class SubsetIndex:
    """A subset of [ambient] stored as its strictly increasing 1-based elements."""

    elements: Tuple[int, ...]
    ambient: int

    def __post_init__(self):
        elements = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        if self.ambient < 0:
            raise DimensionError(f"negative ambient size {self.ambient}")
        if any(b <= a for a, b in zip(elements, elements[1:])):
            raise DimensionError(f"subset {list(elements)} is not strictly increasing")
        if elements and (elements[0] < 1 or elements[-1] > self.ambient):
            raise DimensionError(f"subset {list(elements)} is not inside [1, {self.ambient}]")

    @classmethod
    def of(cls, elements: Iterable[int], ambient: int) -> "SubsetIndex":
        return cls(tuple(sorted(elements)), ambient)

    @classmethod
    def full(cls, ambient: int) -> "SubsetIndex":
        return cls(tuple(range(1, ambient + 1)), ambient)

    @classmethod
    def parse(cls, text: str, ambient: int) -> "SubsetIndex":
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise DimensionError(f"subset list must be comma separated integers: {text!r}")
        if len(set(values)) != len(values):
            raise DimensionError(f"subset list repeats an index: {text!r}")
        return cls.of(values, ambient)

    @classmethod
    def all_of_size(cls, ambient: int, size: int) -> List["SubsetIndex"]:
        return [cls(c, ambient) for c in combinations(range(1, ambient + 1), size)]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    @property
    def sigma(self) -> int:
        return sum(self.elements)

    def complement(self) -> "SubsetIndex":
        present = set(self.elements)
        return SubsetIndex(
            tuple(i for i in range(1, self.ambient + 1) if i not in present), self.ambient
        )

    def rank(self) -> int:
        """Position of this subset among all |I|-subsets of [ambient] in lexicographic order."""
        size = len(self.elements)
        position = 0
        previous = 0
        for t, element in enumerate(self.elements):
            for v in range(previous + 1, element):
                position += comb(self.ambient - v, size - t - 1)
            previous = element
        return position

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(to_rational(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative matrix shape {self.rows}x{self.cols}")
        if len(entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionError(f"index ({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))
        )

    def trace(self) -> Fraction:
        _require_square(self, "trace")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def scale(self, factor: RationalLike) -> "ExactMatrix":
        factor = to_rational(factor)
        return ExactMatrix(self.rows, self.cols, tuple(factor * x for x in self.entries))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return ExactMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def __str__(self) -> str:
        cells = [[format_rational(x) for x in row] for row in self.to_rows()]
        if not cells or not cells[0]:
            return f"[{self.rows}x{self.cols} matrix]"
        widths = [max(len(r[j]) for r in cells) for j in range(self.cols)]
        return "\n".join(
            "  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells
        )


def _require_square(m: ExactMatrix, what: str):
    if not m.is_square:
        raise DimensionError(f"{what} needs a square matrix, got {m.rows}x{m.cols}")


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    columns = [b.column(j) for j in range(b.cols)]
    entries = []
    for i in range(a.rows):
        row = a.row(i)
        for col in columns:
            entries.append(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)))
    return ExactMatrix(a.rows, b.cols, tuple(entries))


def mat_pow(m: ExactMatrix, n: int) -> ExactMatrix:
    """M^n by repeated squaring; M^0 is the identity."""
    _require_square(m, "matrix power")
    if n < 0:
        raise DimensionError(f"matrix power needs a nonnegative exponent, got {n}")
    result = ExactMatrix.identity(m.rows)
    base = m
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def det_bareiss(m: ExactMatrix) -> Fraction:
    """
    Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first multiplied by the lcm of its denominators so that the
    elimination runs over integers; the product of those multipliers is divided
    back out at the end. The determinant of the 0x0 matrix is 1.
    """
    _require_square(m, "determinant")
    n = m.rows
    if n == 0:
        return Fraction(1)

    cleared = 1
    grid = []
    for row in m.to_rows():
        multiplier = lcm(*(x.denominator for x in row))
        cleared *= multiplier
        grid.append([(x * multiplier).numerator for x in row])

    sign = 1
    previous_pivot = 1
    for k in range(n - 1):
        if grid[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if grid[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            grid[k], grid[swap] = grid[swap], grid[k]
            sign = -sign
        pivot = grid[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division (Sylvester's identity)
                grid[i][j] = (grid[i][j] * pivot - grid[i][k] * grid[k][j]) // previous_pivot
            grid[i][k] = 0
        previous_pivot = pivot
    return Fraction(sign * grid[n - 1][n - 1], cleared)


def submatrix(m: ExactMatrix, i: SubsetIndex, j: SubsetIndex) -> ExactMatrix:
    """M[I, J], keeping the order of I and J."""
    if len(i) and i.elements[-1] > m.rows:
        raise DimensionError(f"row subset {i} exceeds {m.rows} rows")
    if len(j) and j.elements[-1] > m.cols:
        raise DimensionError(f"column subset {j} exceeds {m.cols} columns")
    return ExactMatrix(
        len(i), len(j), tuple(m[r - 1, c - 1] for r in i.elements for c in j.elements)
    )


def _subsets_for(m: ExactMatrix, k: int, what: str) -> List[SubsetIndex]:
    _require_square(m, what)
    if not 0 <= k <= m.rows:
        raise DimensionError(f"{what}: k={k} outside 0..{m.rows}")
    return SubsetIndex.all_of_size(m.rows, k)


def compound_k(m: ExactMatrix, k: int) -> ExactMatrix:
    """k-th compound: entry (I, J) = det(M[I, J]) over lexicographically ordered k-subsets."""
    subsets = _subsets_for(m, k, "compound matrix")
    return ExactMatrix(
        len(subsets),
        len(subsets),
        tuple(det_bareiss(submatrix(m, a, b)) for a in subsets for b in subsets),
    )


def adjugate_k(m: ExactMatrix, k: int) -> ExactMatrix:
    """k-th adjugate: entry (I, J) = (-1)^(sigma(I)+sigma(J)) det(M[J^c, I^c])."""
    subsets = _subsets_for(m, k, "adjugate matrix")
    complements = [s.complement() for s in subsets]
    entries = []
    for a, a_c in zip(subsets, complements):
        for b, b_c in zip(subsets, complements):
            minor = det_bareiss(submatrix(m, b_c, a_c))
            entries.append(-minor if (a.sigma + b.sigma) % 2 else minor)
    return ExactMatrix(len(subsets), len(subsets), tuple(entries))


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial; ``coefficients[i]`` multiplies x^i. The zero polynomial has no coefficients."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        coefficients = [to_rational(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_rational(x)
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def evaluate_matrix(self, m: ExactMatrix) -> ExactMatrix:
        _require_square(m, "matrix polynomial")
        identity = ExactMatrix.identity(m.rows)
        value = ExactMatrix.zeros(m.rows, m.rows)
        for c in reversed(self.coefficients):
            value = value @ m + identity.scale(c)
        return value

    def monic(self) -> "RationalPolynomial":
        if self.is_zero:
            raise DimensionError("the zero polynomial has no monic form")
        lead = self.leading
        return RationalPolynomial(tuple(c / lead for c in self.coefficients))

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return RationalPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def scale(self, factor: RationalLike) -> "RationalPolynomial":
        factor = to_rational(factor)
        return RationalPolynomial(tuple(c * factor for c in self.coefficients))

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if self.is_zero or other.is_zero:
            return RationalPolynomial(())
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return RationalPolynomial(tuple(product))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            magnitude = abs(c)
            monomial = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            if not monomial:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = monomial
            elif magnitude.denominator == 1:
                body = f"{magnitude}{monomial}"
            else:
                body = f"{magnitude}*{monomial}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(terms)


def char_poly(m: ExactMatrix) -> RationalPolynomial:
    """det(xI - M) by the Faddeev-LeVerrier iteration; monic of degree m."""
    _require_square(m, "characteristic polynomial")
    n = m.rows
    if n == 0:
        raise DimensionError("characteristic polynomial of an empty matrix")
    coefficients = [Fraction(0)] * (n + 1)
    coefficients[n] = Fraction(1)
    identity = ExactMatrix.identity(n)
    product = ExactMatrix.zeros(n, n)
    for k in range(1, n + 1):
        aux = product + identity.scale(coefficients[n - k + 1])
        product = m @ aux
        coefficients[n - k] = -product.trace() / k
    return RationalPolynomial(tuple(coefficients))


def power_series_divide(
    numerator: Sequence[Fraction], denominator: Sequence[Fraction], terms: int
) -> List[Fraction]:
    """First ``terms`` Taylor coefficients of numerator/denominator; needs denominator[0] != 0."""
    if not denominator or denominator[0] == 0:
        raise DimensionError("power series division needs a nonzero constant term")
    out: List[Fraction] = []
    for n in range(terms):
        acc = Fraction(numerator[n]) if n < len(numerator) else Fraction(0)
        for i in range(1, min(n, len(denominator) - 1) + 1):
            acc -= denominator[i] * out[n - i]
        out.append(acc / denominator[0])
    return out
