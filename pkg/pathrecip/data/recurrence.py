"""
Linear recurrences with constant coefficients

    f(n+d) + a_1 f(n+d-1) + ... + a_d f(n) = 0,   a_d != 0,

their backward extension to negative n, and their rational generating functions.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from pathrecip.core.errors import RecurrenceError
from pathrecip.core.exact import (
    RationalLike,
    RationalPolynomial,
    format_rational,
    power_series_divide,
    to_rational,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalGF:
    """F(x) = P(x)/Q(x) with deg P < deg Q and Q(0) = 1."""

    numerator: RationalPolynomial
    denominator: RationalPolynomial

    def __post_init__(self):
        if self.denominator.coefficient(0) != 1:
            raise RecurrenceError("generating function denominator must have Q(0) = 1")
        if self.numerator.degree >= self.denominator.degree:
            raise RecurrenceError("generating function must have deg P < deg Q")

    def series(self, terms: int) -> List[Fraction]:
        return power_series_divide(self.numerator.coefficients, self.denominator.coefficients, terms)

    def negative_series(self, terms: int) -> List[Fraction]:
        """
        Coefficients of x^1..x^terms in -F(1/x).

        Multiplying top and bottom by x^d (d = deg Q) turns -F(1/x) into
        -x^d P(1/x) / x^d Q(1/x), a power series with zero constant term.
        """
        d = self.denominator.degree
        top = [Fraction(0)] * (d + 1)
        for i, c in enumerate(self.numerator.coefficients):
            top[d - i] = -c
        bottom = [self.denominator.coefficient(d - i) for i in range(d + 1)]
        return power_series_divide(top, bottom, terms + 1)[1:]

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


@dataclass(frozen=True)
class LinearRecurrence:
    coefficients: Tuple[Fraction, ...]  # a_1..a_d
    initial_values: Tuple[Fraction, ...]  # f(0)..f(d-1)

    def __post_init__(self):
        coefficients = tuple(to_rational(a) for a in self.coefficients)
        initial_values = tuple(to_rational(v) for v in self.initial_values)
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "initial_values", initial_values)
        if coefficients and coefficients[-1] == 0:
            raise RecurrenceError("the last recurrence coefficient a_d must be nonzero")
        if len(initial_values) != len(coefficients):
            raise RecurrenceError(
                f"order {len(coefficients)} recurrence needs {len(coefficients)} initial values, "
                f"got {len(initial_values)}"
            )

    @classmethod
    def from_char_poly(
        cls, p: RationalPolynomial, initial: Sequence[RationalLike]
    ) -> "LinearRecurrence":
        """a_i is the coefficient of x^(d-i) in p after normalizing p to be monic."""
        if p.is_zero:
            raise RecurrenceError("the zero polynomial defines no recurrence")
        p = p.monic()
        if p.coefficient(0) == 0:
            raise RecurrenceError("characteristic polynomial has p(0) = 0, so a_d would vanish")
        d = p.degree
        if len(initial) != d:
            raise RecurrenceError(f"degree {d} polynomial needs {d} initial values, got {len(initial)}")
        return cls(tuple(p.coefficient(d - i) for i in range(1, d + 1)), tuple(initial))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def char_poly(self) -> RationalPolynomial:
        d = self.order
        return RationalPolynomial(tuple(self.coefficients[d - 1 - i] for i in range(d)) + (Fraction(1),))

    def _step_forward(self, window: List[Fraction]) -> Fraction:
        d = self.order
        return -sum((self.coefficients[i - 1] * window[d - i] for i in range(1, d + 1)), Fraction(0))

    def forward_values(self, count: int) -> List[Fraction]:
        """f(0)..f(count-1)."""
        if self.order == 0:
            return [Fraction(0)] * count
        values = list(self.initial_values[:count])
        window = list(self.initial_values)
        while len(values) < count:
            new = self._step_forward(window)
            values.append(new)
            window = window[1:] + [new]
        return values

    def eval_forward(self, n: int) -> Fraction:
        if n < 0:
            raise RecurrenceError(f"eval_forward needs n >= 0, got {n}")
        return self.forward_values(n + 1)[n]

    def backward_values(self, count: int) -> List[Fraction]:
        """f(-1), f(-2), ..., f(-count) by running the recurrence backwards."""
        d = self.order
        if d == 0:
            raise RecurrenceError("an order 0 recurrence has no backward extension")
        alpha_d = self.coefficients[-1]
        window = list(self.initial_values)  # f(j)..f(j+d-1)
        values = []
        for _ in range(count):
            # f(j-1) = -(f(j-1+d) + a_1 f(j-2+d) + ... + a_{d-1} f(j)) / a_d
            acc = window[d - 1]
            for i in range(1, d):
                acc += self.coefficients[i - 1] * window[d - 1 - i]
            new = -acc / alpha_d
            values.append(new)
            window = [new] + window[:-1]
        return values

    def extend_negative(self, n: int) -> Fraction:
        if n < 1:
            raise RecurrenceError(f"extend_negative needs n >= 1, got {n}")
        return self.backward_values(n)[-1]

    def value(self, n: int) -> Fraction:
        return self.eval_forward(n) if n >= 0 else self.extend_negative(-n)

    def generating_function(self) -> RationalGF:
        d = self.order
        if d == 0:
            raise RecurrenceError("an order 0 recurrence has no generating function denominator")
        q = (Fraction(1),) + self.coefficients
        p = []
        for i in range(d):
            p.append(sum((q[t] * self.initial_values[i - t] for t in range(i + 1)), Fraction(0)))
        return RationalGF(RationalPolynomial(tuple(p)), RationalPolynomial(q))

    def negative_series_check(self, terms: int) -> bool:
        """Does -F(1/x) expand to f(-1) x + f(-2) x^2 + ... for the first ``terms`` terms?"""
        expected = self.backward_values(terms)
        series = self.generating_function().negative_series(terms)
        if series != expected:
            shown = ", ".join(format_rational(v) for v in series)
            wanted = ", ".join(format_rational(v) for v in expected)
            logger.warning(f"Negative series mismatch: [{shown}] vs backward values [{wanted}]")
            return False
        return True
