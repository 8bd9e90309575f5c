"""Dense bivariate homogeneous integer polynomials.

A form of degree d is stored as coefficients (c_0, ..., c_d) meaning
sum_i c_i * a**(d-i) * b**i, so c_0 carries the pure-a term and c_d the
pure-b term.  The zero polynomial is canonically degree 0 with
coefficients (0,).  Degrees never exceed the exponent under study, so a
dense representation is both exact and fast enough.

The central objects are the truncated binomial

    U_n(a, b) = (a + b)**n - a**n - b**n

whose interior coefficients are the Pascal row C(n, 1) .. C(n, n-1), and
its factor stack

    U_n = n * a * b * (a + b) * T**e * H

with T = a**2 + a*b + b**2, e determined by n mod 6, and H the exact
integer cofactor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, StackInconsistencyError
from .intmath import binom, is_odd_prime


@dataclass(frozen=True)
class HomogeneousPoly:
    degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise DomainError(f"degree must be non-negative, got {self.degree}")
        if len(self.coefficients) != self.degree + 1:
            raise DomainError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )
        if self.degree > 0 and not any(self.coefficients):
            raise DomainError("the zero polynomial must be degree 0 with coefficients (0,)")

    @classmethod
    def of(cls, coefficients) -> "HomogeneousPoly":
        """Build from a coefficient sequence, collapsing all-zero input to ZERO."""
        cs = tuple(int(c) for c in coefficients)
        if not cs or not any(cs):
            return ZERO
        return cls(len(cs) - 1, cs)

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def evaluate(self, a: int, b: int, mod: int | None = None) -> int:
        """Exact value at (a, b); with ``mod`` every step is reduced."""
        acc = self.coefficients[0]
        bp = 1
        for c in self.coefficients[1:]:
            bp = bp * b if mod is None else bp * b % mod
            acc = acc * a + c * bp
            if mod is not None:
                acc %= mod
        return acc if mod is None else acc % mod

    def reduce_mod(self, m: int) -> "HomogeneousPoly":
        """Coefficients reduced into [0, m); evaluation commutes with reduction."""
        if m < 2:
            raise DomainError(f"modulus must be >= 2, got {m}")
        cs = tuple(c % m for c in self.coefficients)
        if not any(cs):
            return ZERO
        return HomogeneousPoly(self.degree, cs)

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (self.degree + other.degree + 1)
        for i, ci in enumerate(self.coefficients):
            if ci:
                for j, cj in enumerate(other.coefficients):
                    out[i + j] += ci * cj
        return HomogeneousPoly(self.degree + other.degree, tuple(out))

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if other.is_zero():
            return self
        if self.is_zero():
            return HomogeneousPoly(other.degree, tuple(-c for c in other.coefficients))
        if self.degree != other.degree:
            raise DomainError("cannot subtract homogeneous forms of different degree")
        cs = tuple(x - y for x, y in zip(self.coefficients, other.coefficients))
        if not any(cs):
            return ZERO
        return HomogeneousPoly(self.degree, cs)


ZERO = HomogeneousPoly(0, (0,))
A = HomogeneousPoly(1, (1, 0))
B = HomogeneousPoly(1, (0, 1))
A_PLUS_B = HomogeneousPoly(1, (1, 1))
TRINOMIAL = HomogeneousPoly(2, (1, 1, 1))  # a**2 + a*b + b**2


def _const(k: int) -> HomogeneousPoly:
    return HomogeneousPoly(0, (k,))


@dataclass(frozen=True)
class TruncatedBinomial:
    """U_n as a polynomial: zero end coefficients, Pascal row inside."""

    n: int
    poly: HomogeneousPoly


@dataclass(frozen=True)
class DivisionFailure:
    """Outcome of a non-exact division; carries the nonzero remainder."""

    remainder: HomogeneousPoly


@dataclass(frozen=True)
class FactorStack:
    """U_n = n * a * b * (a+b) * T**trinomial_exponent * cofactor."""

    n: int
    trinomial_exponent: int
    cofactor: HomogeneousPoly

    def expansion(self) -> HomogeneousPoly:
        """Re-expand the product; must equal U_n coefficient for coefficient."""
        prod = _const(self.n) * A * B * A_PLUS_B
        for _ in range(self.trinomial_exponent):
            prod = prod * TRINOMIAL
        return prod * self.cofactor


def build_truncated(n: int) -> TruncatedBinomial:
    """Truncated binomial of odd prime degree n."""
    if not is_odd_prime(n):
        raise DomainError(f"exponent must be an odd prime, got {n}")
    cs = [0] * (n + 1)
    for v in range(1, n):
        cs[v] = binom(n, v)
    return TruncatedBinomial(n, HomogeneousPoly(n, tuple(cs)))


def exact_divide(p: HomogeneousPoly, q: HomogeneousPoly) -> HomogeneousPoly | DivisionFailure:
    """Exact quotient p / q over the integers, or a DivisionFailure.

    Success means p == q * quotient with integer coefficients.  On failure
    the reported remainder is p - q * (partial quotient at the point the
    division stalled); it is never zero.  Failure is an expected outcome,
    not an error: several divisibility questions in this package hinge on
    it.
    """
    if q.is_zero():
        raise DomainError("cannot divide by the zero polynomial")
    if p.is_zero():
        return ZERO
    if p.degree < q.degree:
        return DivisionFailure(p)

    qc = q.coefficients
    # q = a**trail * b**lead * core with core having nonzero end coefficients;
    # the monomial part must divide p outright or nothing else can.
    lead = next(i for i, c in enumerate(qc) if c)
    trail = next(i for i, c in enumerate(reversed(qc)) if c)
    pc = p.coefficients
    if any(pc[:lead]) or (trail and any(pc[len(pc) - trail :])):
        return DivisionFailure(p)

    core_q = qc[lead : len(qc) - trail]
    rem = list(pc[lead : len(pc) - trail])
    steps = len(rem) - len(core_q)  # quotient degree == p.degree - q.degree
    quot = [0] * (steps + 1)
    for k in range(steps + 1):
        t, r = divmod(rem[k], core_q[0])
        if r:
            return DivisionFailure(_partial_remainder(p, q, quot))
        quot[k] = t
        if t:
            for j, c in enumerate(core_q):
                rem[k + j] -= t * c
    if any(rem):
        return DivisionFailure(_partial_remainder(p, q, quot))
    return HomogeneousPoly(p.degree - q.degree, tuple(quot))


def _partial_remainder(p: HomogeneousPoly, q: HomogeneousPoly, quot: list[int]) -> HomogeneousPoly:
    if not any(quot):
        return p
    partial = HomogeneousPoly(p.degree - q.degree, tuple(quot))
    return p - q * partial


def trinomial_exponent(n: int) -> int:
    """Multiplicity of T = a**2 + a*b + b**2 in U_n: 0, 1 or 2 by n mod 6."""
    if not is_odd_prime(n):
        raise DomainError(f"exponent must be an odd prime, got {n}")
    if n == 3:
        return 0
    return 2 if n % 6 == 1 else 1


def factor_stack(n: int) -> FactorStack:
    """Divide U_n by n, a, b, (a+b) and T**e in that fixed order.

    Every stage must be exact; an inexact stage raises
    StackInconsistencyError because it would contradict the verified
    divisibility structure, i.e. it indicates a bug rather than bad input.
    """
    tb = build_truncated(n)
    e = trinomial_exponent(n)
    cofactor = tb.poly
    for stage in [_const(n), A, B, A_PLUS_B] + [TRINOMIAL] * e:
        out = exact_divide(cofactor, stage)
        if isinstance(out, DivisionFailure):
            raise StackInconsistencyError(
                f"stack division for n={n} by {stage.coefficients} left a remainder"
            )
        cofactor = out
    return FactorStack(n, e, cofactor)
