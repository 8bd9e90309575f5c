"""Residue analysis modulo an odd prime n.

The first case of the Fermat problem restricts attention to arguments with
a, b and a+b all coprime to n, so only remainder pairs (delta_a, delta_b)
with both entries in [1, n-1] and delta_a + delta_b != n matter, and by
symmetry of every form studied here only the half with delta_a >= delta_b
needs testing.  That leaves exactly (n-1)**2 / 2 pairs.

``valuation_classes`` decides which n-adic valuations U_n can attain on
such arguments.  The decision is exact and finite because of a lifting
fact: every coefficient of U_n and of its formal partial derivatives is
divisible by n, so changing an argument by a multiple of n**2 changes
U_n by a multiple of n**3.  U_n mod n**3 therefore only depends on the
arguments mod n**2, and enumerating the n**2 lifts of a base pair with
arithmetic mod n**3 settles whether valuation exactly 2 is attainable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceededError, DomainError
from .intmath import is_odd_prime
from .poly import HomogeneousPoly, _const, build_truncated, exact_divide

#: Largest exponent the analyzers accept by default.  The lift enumeration
#: is O(n**4) modular evaluations in the worst case; 101 keeps that cheap.
DEFAULT_EXPONENT_BOUND = 101


@dataclass(frozen=True)
class ResiduePair:
    """Admissible remainder pair modulo n: 1 <= delta_b <= delta_a <= n-1, sum != n."""

    delta_a: int
    delta_b: int
    modulus: int

    def __post_init__(self) -> None:
        n = self.modulus
        if not 1 <= self.delta_b <= self.delta_a <= n - 1:
            raise DomainError(
                f"residue pair ({self.delta_a}, {self.delta_b}) out of range for modulus {n}"
            )
        if self.delta_a + self.delta_b == n:
            raise DomainError(
                f"residue pair ({self.delta_a}, {self.delta_b}) has sum {n}, which is excluded"
            )


@dataclass(frozen=True)
class ResidueEnumeration:
    modulus: int
    pairs: tuple[ResiduePair, ...]

    @property
    def count(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class ValuationClassSummary:
    """Attainable n-adic valuation classes of U_n on admissible arguments.

    class_one_universal: (U_n / n) never vanishes mod n, so the valuation is
    1 for every admissible argument.
    v2_attainable: some lift attains valuation exactly 2; each witness in
    ``v2_witnesses`` is a lifted pair (a, b) mod n**2 with that valuation.
    high_class_pairs: base pairs all of whose lifts have valuation >= 3.
    """

    modulus: int
    class_one_universal: bool
    v2_attainable: bool
    v2_witnesses: tuple[tuple[int, int], ...]
    high_class_pairs: tuple[ResiduePair, ...]


def admissible_pairs(n: int) -> ResidueEnumeration:
    """All admissible pairs mod n in lexicographic order; count is (n-1)**2/2."""
    if not is_odd_prime(n):
        raise DomainError(f"modulus must be an odd prime, got {n}")
    pairs = tuple(
        ResiduePair(da, db, n)
        for da in range(1, n)
        for db in range(1, da + 1)
        if da + db != n
    )
    return ResidueEnumeration(n, pairs)


def zero_set(
    poly: HomogeneousPoly, n: int, pairs: ResidueEnumeration
) -> list[ResiduePair]:
    """Admissible pairs where the form vanishes mod n, in enumeration order."""
    if pairs.modulus != n:
        raise DomainError(
            f"enumeration is for modulus {pairs.modulus}, not {n}"
        )
    return [
        pr for pr in pairs.pairs if poly.evaluate(pr.delta_a, pr.delta_b, mod=n) == 0
    ]


def valuation_classes(
    n: int, bound: int = DEFAULT_EXPONENT_BOUND
) -> ValuationClassSummary:
    """Classify attainable valuations of U_n under first-case constraints.

    Base pairs where U_n/n vanishes mod n are expanded into all n**2 lifts
    (delta_a + i*n, delta_b + j*n) and tested with arithmetic mod n**3; the
    first lift of valuation exactly 2 is recorded per base pair.
    """
    if not is_odd_prime(n):
        raise DomainError(f"exponent must be an odd prime, got {n}")
    if n > bound:
        raise BoundExceededError(f"exponent {n} exceeds the scan bound {bound}")

    enum = admissible_pairs(n)
    u_over_n = exact_divide(build_truncated(n).poly, _const(n))
    assert isinstance(u_over_n, HomogeneousPoly)  # interior Pascal row, n prime
    zero_base = zero_set(u_over_n, n, enum)

    n2, n3 = n * n, n**3
    witnesses: list[tuple[int, int]] = []
    high: list[ResiduePair] = []
    for pr in zero_base:
        found: tuple[int, int] | None = None
        for i in range(n):
            a = pr.delta_a + i * n
            pa = pow(a, n, n3)
            for j in range(n):
                b = pr.delta_b + j * n
                u = (pow(a + b, n, n3) - pa - pow(b, n, n3)) % n3
                # every lift keeps U == 0 mod n**2; valuation is exactly 2
                # precisely when the mod-n**3 value is nonzero
                assert u % n2 == 0
                if u:
                    found = (a, b)
                    break
            if found:
                break
        if found:
            witnesses.append(found)
        else:
            high.append(pr)

    return ValuationClassSummary(
        modulus=n,
        class_one_universal=not zero_base,
        v2_attainable=bool(witnesses),
        v2_witnesses=tuple(witnesses),
        high_class_pairs=tuple(high),
    )
