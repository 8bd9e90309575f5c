"""Exact integer primitives: binomial coefficients, p-adic valuations, and
truncated binomial values.

Everything in this package is arbitrary-precision integer arithmetic; no
floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (exponent-scale inputs)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_odd_prime(n: int) -> bool:
    return n != 2 and is_prime(n)


def odd_primes_up_to(limit: int) -> list[int]:
    """Odd primes in [3, limit], ascending."""
    return [n for n in range(3, limit + 1, 2) if is_prime(n)]


def binom(n: int, v: int) -> int:
    """Binomial coefficient C(n, v) via the multiplicative formula.

    Each intermediate division is exact: after the k-th multiplication the
    running product is C(n - v + k, k) * k!-free, i.e. divisible by k.
    """
    if n < 0 or v < 0:
        raise DomainError(f"binom requires non-negative arguments, got ({n}, {v})")
    if v > n:
        raise DomainError(f"binom requires v <= n, got v={v} > n={n}")
    v = min(v, n - v)
    acc = 1
    for k in range(1, v + 1):
        acc = acc * (n - v + k) // k
    return acc


@dataclass(frozen=True)
class Valuation:
    """p-adic valuation of an integer.

    ``infinite`` is set only for the valuation of 0, which is divisible by
    every power of p; when it is set, ``value`` is meaningless and must not
    be compared numerically.
    """

    value: int
    infinite: bool = False


def valuation(x: int, p: int) -> Valuation:
    """Largest e with p**e dividing x; infinite for x = 0."""
    if p < 2 or not is_prime(p):
        raise DomainError(f"valuation base must be a prime >= 2, got {p}")
    if x == 0:
        return Valuation(0, infinite=True)
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return Valuation(e)


def truncated_binomial_value(a: int, b: int, n: int) -> int:
    """(a + b)**n - a**n - b**n, exactly.

    The divisibility structure studied elsewhere in the package needs n to
    be an odd prime, but the value itself is defined for any n >= 1 and the
    even-exponent case is used by the identity checks.
    """
    return (a + b) ** n - a**n - b**n


def truncated_binomial_sum(a: int, b: int, n: int) -> int:
    """Interior of the binomial expansion: sum of C(n,v)*a**v*b**(n-v), 0 < v < n.

    Equal to ``truncated_binomial_value(a, b, n)`` by the binomial theorem;
    kept as an independent route so identity checks do not reuse the closed
    form they are meant to confirm.
    """
    acc = 0
    for v in range(1, n):
        acc += binom(n, v) * a**v * b ** (n - v)
    return acc
