"""
Exact arithmetic helpers.

All bound values are ``Fraction`` instances; floats appear only when a value
is printed. Binomial coefficients follow the usual convention that
C(a, b) = 0 whenever b < 0, b > a or a < 0.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .errors import InvalidParameterError

Rational = Fraction


def binom(a: int, b: int) -> int:
    """C(a, b) with the zero convention for out-of-range arguments."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def floor_rat(x: Fraction) -> int:
    return x.numerator // x.denominator


def ceil_rat(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class RatioTable:
    """
    The ratios C(s, t) / C(n, t) for s = 0..n.

    Entries for s < 0 read as zero, so callers may index with expressions
    such as n - d(u) - d(v) - 2 without clamping.
    """

    n: int
    t: int
    r: Tuple[Fraction, ...]

    def __getitem__(self, s: int) -> Fraction:
        if s < 0:
            return Fraction(0)
        return self.r[s]


def ratio_table(n: int, t: int) -> RatioTable:
    """
    Build the table by the downward recurrence r[s] = r[s+1] * (s+1-t) / (s+1).

    Raises:
        InvalidParameterError: If t < 0 or t > n
    """
    if n < 0 or t < 0 or t > n:
        raise InvalidParameterError(f"ratio table needs 0 <= t <= n, got n={n}, t={t}")

    r = [Fraction(0)] * (n + 1)
    r[n] = Fraction(1)
    for s in range(n - 1, t - 1, -1):
        r[s] = r[s + 1] * (s + 1 - t) / (s + 1)
    return RatioTable(n=n, t=t, r=tuple(r))


@dataclass(frozen=True)
class RatioColumn:
    """C(s, t) / C(n, t) for a fixed support of s values at one t."""

    n: int
    t: int
    values: Dict[int, Fraction]

    def __getitem__(self, s: int) -> Fraction:
        if s < 0:
            return Fraction(0)
        return self.values[s]

    def weighted_sum(self, counts: Mapping[int, int]) -> Fraction:
        """Sum of count * C(s, t) / C(n, t) over a count mapping keyed by s."""
        total = Fraction(0)
        for s, c in counts.items():
            if s >= 0 and c:
                total += c * self.values[s]
        return total


def ratio_sweep(
    n: int, support: Iterable[int], t_start: int, t_stop: int
) -> Iterator[RatioColumn]:
    """
    Yield ratio columns for t = t_start..t_stop.

    Each step updates every ratio in place with
    r(s, t+1) = r(s, t) * (s - t) / (n - t), so a sweep over all t costs
    O(|support|) rational operations per t. Ratios for s close to n keep
    small numerators and denominators, which is what makes sweeps over
    very large sparse graphs practical.

    Raises:
        InvalidParameterError: If the range is not inside [0, n]
    """
    if t_start < 0 or t_stop > n or n < 0:
        raise InvalidParameterError(
            f"sweep range must lie in [0, {n}], got [{t_start}, {t_stop}]"
        )
    denominator = binom(n, t_start)
    values = {
        s: Fraction(binom(s, t_start), denominator) for s in set(support) if 0 <= s <= n
    }
    t = t_start
    while t <= t_stop:
        yield RatioColumn(n=n, t=t, values=dict(values))
        if t == t_stop:
            return
        for s, r in values.items():
            if r:
                values[s] = Fraction(r.numerator * (s - t), r.denominator * (n - t))
        t += 1
