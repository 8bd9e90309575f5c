"""Identity checks and the first-case incompatibility pipeline.

Two binomial identities tie the three Fermat terms A**n + B**n - C**n to a
power of (A + B - C) minus two truncated binomials:

    odd n:   A**n + B**n - C**n = (A+B-C)**n - U(A, B) - U(A+B, -C)
    even n:  A**n + B**n - C**n = (A+B-C)**n - 2*C**n - U(A, B) - U(A+B, -C)

On a hypothetical first-case counterexample A + B - C = 2*beta*n and the
odd identity collapses to the core constraint

    (2*beta*n)**n = U(A, B) + U(A+B, -C).

The right-hand argument pair of the second term sums to a multiple of n,
which pins the n-adic valuation of U(A+B, -C) at 2 when beta is coprime
to n.  The pipeline therefore asks whether U(A, B) can attain valuation 2
on admissible residues: if it cannot, the constraint's sides are
incompatible and the first case holds for that exponent per this
criterion.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .errors import BoundExceededError, DomainError
from .intmath import (
    is_odd_prime,
    odd_primes_up_to,
    truncated_binomial_sum,
    truncated_binomial_value,
    valuation,
)
from .poly import TRINOMIAL, factor_stack
from .residues import (
    DEFAULT_EXPONENT_BOUND,
    ResiduePair,
    admissible_pairs,
    valuation_classes,
    zero_set,
)

OUTCOME_PROVEN_K1 = "proven_k1"
OUTCOME_PROVEN_DICHOTOMY = "proven_dichotomy"
OUTCOME_INCONCLUSIVE = "inconclusive"

#: The dichotomy outcome compares valuation >= 3 on one side against
#: exactly 2 on the other, which presumes beta coprime to n; reports carry
#: this code so the conclusion is never overstated.
CAVEAT_BETA_NONUNIT_VALUATION = "BETA_NONUNIT_VALUATION"


@dataclass(frozen=True)
class IdentityTriple:
    """An (A, B, C) instance with exponent n >= 2 and derived beta."""

    a_val: int
    b_val: int
    c_val: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError(f"identity exponent must be >= 2, got {self.n}")

    @property
    def beta(self) -> int | None:
        """(A + B - C) / (2n) when exact, else None."""
        return beta_of(self.a_val, self.b_val, self.c_val, self.n)


@dataclass(frozen=True)
class IdentityWitness:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityTrialReport:
    n: int
    trials: int
    seed: int
    failures: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class ProofReport:
    """Outcome of the incompatibility pipeline for one exponent.

    proven_k1: the valuation of U(A, B) is 1 on every admissible class.
    proven_dichotomy: the valuation is 1 or >= 3, never 2.
    inconclusive: valuation exactly 2 is attainable; witnesses listed.
    """

    n: int
    outcome: str
    pair_count: int
    trinomial_zeros: tuple[ResiduePair, ...]
    cofactor_zeros: tuple[ResiduePair, ...]
    v2_witnesses: tuple[tuple[int, int], ...]
    caveats: tuple[str, ...]
    elapsed: float


@dataclass(frozen=True)
class LawCheck:
    law: str
    checked: int
    failures: tuple[tuple[int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class SquareLawException:
    """Sample where the divisible argument has valuation >= 2.

    These violate the unqualified "divisible only by n**2" claim and are
    reported separately from failures: with the qualifier (argument
    valuation exactly 1) the law has no known exceptions.
    """

    a: int
    b: int
    divisible_argument: str
    argument_valuation: int
    u_valuation: int


@dataclass(frozen=True)
class DivisibilityLawReport:
    n: int
    sample_count: int
    seed: int
    laws: tuple[LawCheck, ...]
    square_law_exceptions: tuple[SquareLawException, ...]

    @property
    def all_pass(self) -> bool:
        return all(law.passed for law in self.laws)

    def law(self, name: str) -> LawCheck:
        for check in self.laws:
            if check.law == name:
                return check
        raise KeyError(name)


def beta_of(a_val: int, b_val: int, c_val: int, n: int) -> int | None:
    """(A + B - C) / (2n) when the division is exact, otherwise None."""
    q, r = divmod(a_val + b_val - c_val, 2 * n)
    return q if r == 0 else None


def verify_identity(t: IdentityTriple) -> IdentityWitness:
    """Check the n-odd/n-even identity on one triple, both sides computed
    independently: direct powers on the left, binomial-coefficient sums on
    the right."""
    a, b, c, n = t.a_val, t.b_val, t.c_val, t.n
    lhs = a**n + b**n - c**n
    rhs = (
        (a + b - c) ** n
        - truncated_binomial_sum(a, b, n)
        - truncated_binomial_sum(a + b, -c, n)
    )
    if n % 2 == 0:
        rhs -= 2 * c**n
    return IdentityWitness(lhs, rhs)


def core_equation_residual(t: IdentityTriple) -> int:
    """Imbalance of the core constraint: U(A,B) + U(A+B,-C) - (2*beta*n)**n.

    For odd n this equals C**n - A**n - B**n, so it vanishes exactly when
    the Fermat equation holds.
    """
    beta = t.beta
    if beta is None:
        raise DomainError(
            f"A + B - C = {t.a_val + t.b_val - t.c_val} is not divisible by 2n = {2 * t.n}"
        )
    a, b, c, n = t.a_val, t.b_val, t.c_val, t.n
    rhs = truncated_binomial_value(a, b, n) + truncated_binomial_value(a + b, -c, n)
    return rhs - (2 * beta * n) ** n


def identity_trials(
    n: int, trials: int, seed: int, magnitude: int = 1_000_000
) -> IdentityTrialReport:
    """Run seeded random identity checks for one exponent."""
    if n < 2:
        raise DomainError(f"identity exponent must be >= 2, got {n}")
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    rng = random.Random(seed * 1_000_003 + n)
    failures = []
    for _ in range(trials):
        a = rng.randint(-magnitude, magnitude)
        b = rng.randint(-magnitude, magnitude)
        c = rng.randint(-magnitude, magnitude)
        if not verify_identity(IdentityTriple(a, b, c, n)).equal:
            failures.append((a, b, c))
    return IdentityTrialReport(n, trials, seed, tuple(failures))


def prove_first_case(n: int, bound: int = DEFAULT_EXPONENT_BOUND) -> ProofReport:
    """Run the full incompatibility pipeline for one odd prime exponent."""
    if not is_odd_prime(n):
        raise DomainError(f"exponent must be an odd prime, got {n}")
    started = time.perf_counter()
    summary = valuation_classes(n, bound=bound)
    stack = factor_stack(n)
    enum = admissible_pairs(n)
    trinomial_zeros = tuple(zero_set(TRINOMIAL, n, enum))
    cofactor_zeros = tuple(zero_set(stack.cofactor, n, enum))

    if summary.class_one_universal:
        outcome, caveats = OUTCOME_PROVEN_K1, ()
    elif not summary.v2_attainable:
        outcome, caveats = OUTCOME_PROVEN_DICHOTOMY, (CAVEAT_BETA_NONUNIT_VALUATION,)
    else:
        outcome, caveats = OUTCOME_INCONCLUSIVE, ()

    return ProofReport(
        n=n,
        outcome=outcome,
        pair_count=enum.count,
        trinomial_zeros=trinomial_zeros,
        cofactor_zeros=cofactor_zeros,
        v2_witnesses=summary.v2_witnesses,
        caveats=caveats,
        elapsed=time.perf_counter() - started,
    )


def scan(max_n: int, bound: int = DEFAULT_EXPONENT_BOUND) -> list[ProofReport]:
    """One report per odd prime in [3, max_n], ascending; deterministic."""
    if max_n < 3:
        raise DomainError(f"scan requires max_n >= 3, got {max_n}")
    if max_n > bound:
        raise BoundExceededError(f"max_n {max_n} exceeds the exponent bound {bound}")
    return [prove_first_case(p, bound=bound) for p in odd_primes_up_to(max_n)]


def check_divisibility_laws(n: int, sample_count: int, seed: int) -> DivisibilityLawReport:
    """Empirically test the divisibility laws of U_n on seeded samples.

    Laws checked: U is always even; T divides U for n = 6k +/- 1; T**2
    divides U for n = 6k + 1; and the qualified square law: when exactly
    one of a, b, a+b is divisible by n with valuation exactly 1, the
    valuation of U is exactly 2.  Samples whose divisible argument has
    valuation >= 2 are reported as exceptions to the unqualified claim,
    not as failures.  Two deterministic probes (1, n-1) and (1, n**2 - 1)
    are always included so both sides of the qualifier show up.
    """
    if not is_odd_prime(n):
        raise DomainError(f"exponent must be an odd prime, got {n}")
    if sample_count < 1:
        raise DomainError(f"sample_count must be >= 1, got {sample_count}")

    rng = random.Random(seed * 1_000_003 + n)
    trinomial_applies = n % 6 in (1, 5)
    square_applies = n % 6 == 1

    even_failures: list[tuple[int, int]] = []
    trinomial_failures: list[tuple[int, int]] = []
    trinomial_square_failures: list[tuple[int, int]] = []
    for _ in range(sample_count):
        a = rng.randint(-1_000_000, 1_000_000)
        b = rng.randint(-1_000_000, 1_000_000)
        if a == 0 and b == 0:
            a = 1
        u = truncated_binomial_value(a, b, n)
        if u % 2:
            even_failures.append((a, b))
        if trinomial_applies:
            trin = a * a + a * b + b * b
            if u % trin:
                trinomial_failures.append((a, b))
            if square_applies and u % (trin * trin):
                trinomial_square_failures.append((a, b))

    square_failures: list[tuple[int, int]] = []
    exceptions: list[SquareLawException] = []
    samples = [(1, n - 1), (1, n * n - 1)]
    for _ in range(sample_count):
        samples.append(_one_divisible_sample(rng, n))
    for a, b in samples:
        name, arg = _single_divisible_argument(a, b, n)
        arg_val = valuation(arg, n).value
        u_val = valuation(truncated_binomial_value(a, b, n), n).value
        if arg_val == 1:
            if u_val != 2:
                square_failures.append((a, b))
        else:
            exceptions.append(SquareLawException(a, b, name, arg_val, u_val))

    laws = [LawCheck("evenness", sample_count, tuple(even_failures))]
    if trinomial_applies:
        laws.append(LawCheck("trinomial_divides", sample_count, tuple(trinomial_failures)))
    if square_applies:
        laws.append(
            LawCheck("trinomial_square_divides", sample_count, tuple(trinomial_square_failures))
        )
    laws.append(LawCheck("square_valuation", len(samples), tuple(square_failures)))

    return DivisibilityLawReport(
        n=n,
        sample_count=sample_count,
        seed=seed,
        laws=tuple(laws),
        square_law_exceptions=tuple(exceptions),
    )


def _one_divisible_sample(rng: random.Random, n: int) -> tuple[int, int]:
    """Random (a, b) with exactly one of a, b, a+b divisible by n."""
    k = rng.randint(1, 10_000)
    other = rng.randint(1, 1_000_000)
    if other % n == 0:
        other += 1
    kind = rng.randrange(3)
    if kind == 0:
        return n * k, other
    if kind == 1:
        return other, n * k
    return other, n * k - other


def _single_divisible_argument(a: int, b: int, n: int) -> tuple[str, int]:
    hits = [(name, x) for name, x in (("a", a), ("b", b), ("a+b", a + b)) if x % n == 0]
    if len(hits) != 1:
        raise DomainError(f"expected exactly one n-divisible argument among ({a}, {b}, {a + b})")
    return hits[0]
