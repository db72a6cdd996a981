"""Independent counting methods used to validate the closed form.

Two methods that share no code with the inclusion-exclusion formula:
exhaustive recursive enumeration (exponential, budget-guarded) and a
generating-function dynamic program, the coefficient of x^n in the product
of (1 + x + ... + x^{a_j}) over all elements. The DP is polynomial in the
dimension and also serves instances too wide for inclusion-exclusion.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from math import prod
from typing import Union

from .core import (
    CapacityError,
    CountMethod,
    MultisetSpec,
    SpecLike,
    _check_n,
    as_spec,
    count_upper_constrained,
)

#: Default cap on the compositions the brute-force oracle may visit.
DEFAULT_BUDGET_ITEMS = 10_000_000


class BudgetExceededError(Exception):
    """The brute-force oracle would visit more compositions than allowed."""


@dataclass(frozen=True)
class Budget:
    """Upper bound on compositions the brute-force oracle may visit."""

    max_items: int = DEFAULT_BUDGET_ITEMS

    def __post_init__(self) -> None:
        if not isinstance(self.max_items, int) or self.max_items < 1:
            raise ValueError(f"max_items must be a positive integer, got {self.max_items!r}")


@dataclass(frozen=True)
class CountTable:
    """Per-cardinality sub-multiset counts for one spec, indexed by n (0..N)."""

    spec: MultisetSpec
    counts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, n: int) -> int:
        return self.counts[n]


def count_brute_force(spec: SpecLike, n: int, budget: Budget | None = None) -> int:
    """Count sub-multisets of cardinality n by explicit enumeration.

    Recurses position by position over every feasible x_j, so the work is
    proportional to the number of compositions of the whole spec. Refuses to
    start when the instance estimate prod(a_j + 1) exceeds the budget.
    """
    a = as_spec(spec).multiplicities
    _check_n(n)
    if budget is None:
        budget = Budget()
    estimate = prod(m + 1 for m in a)
    if estimate > budget.max_items:
        raise BudgetExceededError(
            f"instance has an estimated {estimate} compositions, over the "
            f"budget of {budget.max_items}"
        )
    # Zero bounds force x_j = 0 and can be dropped up front; this also keeps
    # the recursion depth within log2(budget).
    a = tuple(m for m in a if m > 0)
    suffix_left = list(accumulate(reversed(a), initial=0))[::-1]

    def walk(j: int, remaining: int) -> int:
        if j == len(a):
            return 1 if remaining == 0 else 0
        lo = max(0, remaining - suffix_left[j + 1])
        hi = min(a[j], remaining)
        return sum(walk(j + 1, remaining - v) for v in range(lo, hi + 1))

    return walk(0, n)


def _multiply_bounded(coeffs: list[int], bound: int) -> list[int]:
    """Multiply a coefficient list by 1 + x + ... + x^bound, same truncation.

    New coefficient t is the window sum of the old coefficients t-bound..t,
    taken from one prefix-sum pass.
    """
    prefix = list(accumulate(coeffs))
    shift = bound + 1
    if shift >= len(prefix):
        return prefix
    return prefix[:shift] + [hi - lo for hi, lo in zip(prefix[shift:], prefix)]


def _bounded_product_coeffs(multiplicities: tuple[int, ...], limit: int) -> list[int]:
    """Coefficients 0..limit of the product of (1 + x + ... + x^{a_j})."""
    coeffs = [0] * (limit + 1)
    coeffs[0] = 1
    for m in multiplicities:
        if m > 0:  # a factor of 1 changes nothing
            coeffs = _multiply_bounded(coeffs, m)
    return coeffs


def count_dp(spec: SpecLike, n: int) -> int:
    """Count sub-multisets of cardinality n as a generating-function
    coefficient.

    Convolves the factors (1 + x + ... + x^{a_j}) one element at a time,
    truncated at degree n since higher coefficients never flow back down.
    Polynomial cost, arbitrary dimension.
    """
    a = as_spec(spec).multiplicities
    _check_n(n)
    return _bounded_product_coeffs(a, n)[n]


def full_table(spec: SpecLike) -> CountTable:
    """Counts for every cardinality 0..N in a single polynomial product."""
    spec = as_spec(spec)
    return CountTable(spec, tuple(_bounded_product_coeffs(spec.multiplicities, spec.cardinality)))


@dataclass(frozen=True)
class AgreementReport:
    """Outcome of running every applicable counting method on one instance."""

    spec: MultisetSpec
    n: int
    values: dict[CountMethod, int]
    skipped: dict[CountMethod, str]

    @property
    def agree(self) -> bool:
        return len(set(self.values.values())) <= 1


def count(
    spec: SpecLike,
    n: int,
    method: CountMethod = CountMethod.DYNAMIC_PROGRAMMING,
    budget: Budget | None = None,
) -> int:
    """Count sub-multisets of cardinality n with the chosen method."""
    if method is CountMethod.INCLUSION_EXCLUSION:
        return count_upper_constrained(spec, n)
    if method is CountMethod.BRUTE_FORCE:
        return count_brute_force(spec, n, budget)
    return count_dp(spec, n)


def cross_check(spec: SpecLike, n: int, budget: Budget | None = None) -> AgreementReport:
    """Run every method whose preconditions hold and report their values.

    A method that refuses the instance (inclusion-exclusion over capacity,
    brute force over budget) is recorded as skipped, not failed; the report's
    agree flag covers the methods that actually ran.
    """
    spec = as_spec(spec)
    values: dict[CountMethod, int] = {}
    skipped: dict[CountMethod, str] = {}
    try:
        values[CountMethod.INCLUSION_EXCLUSION] = count_upper_constrained(spec, n)
    except CapacityError as exc:
        skipped[CountMethod.INCLUSION_EXCLUSION] = str(exc)
    values[CountMethod.DYNAMIC_PROGRAMMING] = count_dp(spec, n)
    try:
        values[CountMethod.BRUTE_FORCE] = count_brute_force(spec, n, budget)
    except BudgetExceededError as exc:
        skipped[CountMethod.BRUTE_FORCE] = str(exc)
    return AgreementReport(spec, n, values, skipped)
