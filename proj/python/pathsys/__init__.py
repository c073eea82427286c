"""Path systems on graphs: consistency, metrizability and reducibility.

Exact rationals are returned as strings ("3/2"); convert with
fractions.Fraction when arithmetic is needed.
"""

import json

from . import _core
from ._core import (
    InputError,
    ParseError,
    PathSystem,
    admissibility_failure,
    admissible_primes,
    find_reduction,
    is_admissible,
    is_consistent,
    is_metrizable,
    legendre,
    max_nonresidue_run,
    reduced_digraph,
    symmetrized_lp,
    verify_reduction,
)

__all__ = [
    "InputError",
    "ParseError",
    "PathSystem",
    "admissibility_failure",
    "admissible_primes",
    "audit",
    "check",
    "find_reduction",
    "is_admissible",
    "is_consistent",
    "is_metrizable",
    "legendre",
    "max_nonresidue_run",
    "paley_verify",
    "reduced_digraph",
    "symmetrized_lp",
    "verify_reduction",
]


def _decode(result):
    result["report"] = json.loads(result["report"])
    return result


def paley_verify(prime, direct_lp=False, search_reduction=False, budget=100_000_000):
    return _decode(_core.paley_verify(prime, direct_lp, search_reduction, budget))


def check(input, budget=100_000_000):
    return _decode(_core.check(str(input), budget))


def audit(max_prime, min_prime=3, seed=20240229, samples=200):
    return _decode(_core.audit(max_prime, min_prime, seed, samples))
