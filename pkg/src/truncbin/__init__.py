"""Exact truncated-binomial arithmetic and first-case Fermat checks.

The package constructs U_n(a, b) = (a + b)**n - a**n - b**n exactly,
verifies its factor structure, enumerates admissible residue pairs modulo
an odd prime exponent, and decides which n-adic valuations U_n can attain
under first-case constraints.  All arithmetic is exact integer arithmetic.
"""

from .atlas import ScanAtlas, proof_report_to_dict
from .errors import BoundExceededError, DomainError, StackInconsistencyError
from .intmath import (
    Valuation,
    binom,
    is_odd_prime,
    is_prime,
    odd_primes_up_to,
    truncated_binomial_sum,
    truncated_binomial_value,
    valuation,
)
from .poly import (
    TRINOMIAL,
    DivisionFailure,
    FactorStack,
    HomogeneousPoly,
    TruncatedBinomial,
    build_truncated,
    exact_divide,
    factor_stack,
    trinomial_exponent,
)
from .prover import (
    CAVEAT_BETA_NONUNIT_VALUATION,
    OUTCOME_INCONCLUSIVE,
    OUTCOME_PROVEN_DICHOTOMY,
    OUTCOME_PROVEN_K1,
    DivisibilityLawReport,
    IdentityTriple,
    IdentityTrialReport,
    IdentityWitness,
    LawCheck,
    ProofReport,
    SquareLawException,
    beta_of,
    check_divisibility_laws,
    core_equation_residual,
    identity_trials,
    prove_first_case,
    scan,
    verify_identity,
)
from .residues import (
    DEFAULT_EXPONENT_BOUND,
    ResidueEnumeration,
    ResiduePair,
    ValuationClassSummary,
    admissible_pairs,
    valuation_classes,
    zero_set,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "CAVEAT_BETA_NONUNIT_VALUATION",
    "DEFAULT_EXPONENT_BOUND",
    "DivisibilityLawReport",
    "DivisionFailure",
    "DomainError",
    "FactorStack",
    "HomogeneousPoly",
    "IdentityTriple",
    "IdentityTrialReport",
    "IdentityWitness",
    "LawCheck",
    "OUTCOME_INCONCLUSIVE",
    "OUTCOME_PROVEN_DICHOTOMY",
    "OUTCOME_PROVEN_K1",
    "ProofReport",
    "ResidueEnumeration",
    "ResiduePair",
    "ScanAtlas",
    "SquareLawException",
    "StackInconsistencyError",
    "TRINOMIAL",
    "TruncatedBinomial",
    "Valuation",
    "ValuationClassSummary",
    "admissible_pairs",
    "beta_of",
    "binom",
    "build_truncated",
    "check_divisibility_laws",
    "core_equation_residual",
    "exact_divide",
    "factor_stack",
    "identity_trials",
    "is_odd_prime",
    "is_prime",
    "odd_primes_up_to",
    "proof_report_to_dict",
    "prove_first_case",
    "scan",
    "trinomial_exponent",
    "truncated_binomial_sum",
    "truncated_binomial_value",
    "valuation",
    "valuation_classes",
    "verify_identity",
    "zero_set",
]
