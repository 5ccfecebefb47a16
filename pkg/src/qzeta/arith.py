"""Elementary arithmetic functions and brute-force cross-check oracles.

Everything here is deliberately independent of the series machinery:
divisor power sums come from trial division or a sieve, representation
counts from memoized tuple enumeration, and the pentagonal series from
iterating the generalized pentagonal exponents. These routes exist so
series-derived results can be checked against something that shares no
code with them.
"""

from functools import lru_cache
from math import isqrt

from .series import QSeries

# Largest n the tuple-enumeration oracle accepts. Past this point the
# convolution route is the intended tool; the cap keeps the oracle cheap
# without tempting anyone to lean on it at scale.
BRUTE_FORCE_CAP = 50


def triangular(n: int) -> int:
    """n-th triangular number n(n+1)/2, starting from T_0 = 0."""
    if n < 0:
        raise ValueError(f"triangular index must be non-negative, got {n}")
    return n * (n + 1) // 2


def sigma5(n: int) -> int:
    """Sum of fifth powers of the divisors of n, by trial division."""
    if n < 1:
        raise ValueError(f"sigma5 is defined for n >= 1, got {n}")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d**5
            e = n // d
            if e != d:
                total += e**5
    return total


class DivisorSumTable:
    """sigma5(n) for all 1 <= n <= limit, filled by a divisor sieve."""

    __slots__ = ("values", "limit")

    def __init__(self, values, limit):
        self.values = values
        self.limit = limit

    @classmethod
    def build(cls, limit: int) -> "DivisorSumTable":
        if limit < 1:
            raise ValueError(f"table limit must be >= 1, got {limit}")
        values = [0] * (limit + 1)
        for d in range(1, limit + 1):
            d5 = d**5
            for multiple in range(d, limit + 1, d):
                values[multiple] += d5
        return cls(values, limit)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(f"sigma5 table covers 1..{self.limit}, got {n}")
        return self.values[n]

    def __len__(self):
        return self.limit


@lru_cache(maxsize=None)
def _triangulars_up_to(limit):
    out = []
    k = 0
    while triangular(k) <= limit:
        out.append(triangular(k))
        k += 1
    return tuple(out)


@lru_cache(maxsize=None)
def _count_tuples(parts: int, total: int) -> int:
    if parts == 0:
        return 1 if total == 0 else 0
    return sum(
        _count_tuples(parts - 1, total - t) for t in _triangulars_up_to(total)
    )


def triangular_representations(n: int, parts: int) -> int:
    """Ordered tuples of `parts` triangular numbers (zeros allowed) summing to n.

    Counts by memoized depth-first enumeration over the triangular numbers,
    independent of any series convolution. Refuses n above BRUTE_FORCE_CAP;
    use the power-of-psi route for larger n.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if parts < 0:
        raise ValueError(f"parts must be non-negative, got {parts}")
    if n > BRUTE_FORCE_CAP:
        raise ValueError(
            f"brute-force count capped at n <= {BRUTE_FORCE_CAP}, got {n}"
        )
    return _count_tuples(parts, n)


def t12_bruteforce(n: int) -> int:
    """Representations of n as an ordered sum of 12 triangular numbers."""
    return triangular_representations(n, 12)


def pentagonal_series(order: int) -> QSeries:
    """sum_{k in Z} (-1)^k q^{k(3k-1)/2} truncated at the given order.

    By Euler's pentagonal number theorem this equals prod(1 - q^n); it is
    the independent second route to that product. Exponents are generated
    by iterating k = 1, 2, 3, ... and taking both k and -k until both
    generalized pentagonal numbers exceed the order.
    """
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    k = 1
    while True:
        lo = k * (3 * k - 1) // 2
        hi = k * (3 * k + 1) // 2
        if lo > order:
            break
        sign = -1 if k % 2 else 1
        coeffs[lo] += sign
        if hi <= order:
            coeffs[hi] += sign
        k += 1
    return QSeries(coeffs, order)
