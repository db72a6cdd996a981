"""Materialize the counted set: stream, rank and unrank bounded compositions.

Compositions (x_1, ..., x_k) with sum n and 0 <= x_j <= a_j are produced in
ascending lexicographic order with position 1 most significant. rank and
unrank convert between a composition and its 0-based position in that order
without enumerating, by prefix counting against per-suffix count tables.
"""
from __future__ import annotations

from itertools import accumulate
from typing import Iterator, Sequence

from .core import SpecLike, _check_n, as_spec
from .oracles import _multiply_bounded

Composition = tuple[int, ...]


def _suffix_totals(a: tuple[int, ...]) -> list[int]:
    # suffix_totals[j] = a_j + ... + a_k (0 at j = k)
    return list(accumulate(reversed(a), initial=0))[::-1]


def _suffix_tables(a: tuple[int, ...], n: int) -> list[list[int]]:
    """tables[j][s] = number of ways to finish positions j.. with sum s."""
    tables: list[list[int]] = [[]] * (len(a) + 1)
    coeffs = [1] + [0] * n
    tables[len(a)] = coeffs
    for j in range(len(a) - 1, -1, -1):
        if a[j] > 0:
            coeffs = _multiply_bounded(coeffs, a[j])
        tables[j] = coeffs
    return tables


def _validated(a: tuple[int, ...], n: int, x: Sequence[int]) -> Composition:
    x = tuple(x)
    if len(x) != len(a):
        raise ValueError(f"composition has {len(x)} entries, spec has {len(a)}")
    for j, (v, bound) in enumerate(zip(x, a)):
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"entry {j} must be a non-negative integer, got {v!r}")
        if v > bound:
            raise ValueError(f"entry {j} is {v}, over its bound {bound}")
    if sum(x) != n:
        raise ValueError(f"composition sums to {sum(x)}, expected {n}")
    return x


def iterate(spec: SpecLike, n: int, *, start: Sequence[int] | None = None) -> Iterator[Composition]:
    """Yield every composition of n under the spec's bounds, in ascending
    lexicographic order.

    Yields exactly count_upper_constrained(spec, n) tuples, each exactly
    once; the stream is empty when the count is zero. Generation is
    incremental, nothing is materialized. With `start` (a valid composition
    for the same spec and n) the stream begins at that composition instead of
    the first one.
    """
    a = as_spec(spec).multiplicities
    _check_n(n)
    if start is not None:
        start = _validated(a, n, start)
    return _emit(a, _suffix_totals(a), 0, n, [], start)


def _emit(
    a: tuple[int, ...],
    suffix_totals: list[int],
    j: int,
    remaining: int,
    acc: list[int],
    start: Composition | None,
) -> Iterator[Composition]:
    if j == len(a):
        if remaining == 0:  # always true when k > 0, thanks to the window
            yield tuple(acc)
        return
    # Feasibility window: what is left must fit in the remaining bounds.
    lo = max(0, remaining - suffix_totals[j + 1])
    hi = min(a[j], remaining)
    first = start[j] if start is not None else lo
    for v in range(first, hi + 1):
        acc.append(v)
        # The start constraint only binds along the prefix equal to start.
        yield from _emit(a, suffix_totals, j + 1, remaining - v,
                         acc, start if v == first and start is not None else None)
        acc.pop()


def rank(spec: SpecLike, n: int, x: Sequence[int]) -> int:
    """0-based lexicographic position of composition x among all compositions
    of n under the spec's bounds.

    For each position, adds the number of completions below the chosen entry:
    sum over v < x_j of the count of suffixes with the leftover sum. Rejects
    x when it violates a bound or the sum.
    """
    a = as_spec(spec).multiplicities
    _check_n(n)
    x = _validated(a, n, x)
    tables = _suffix_tables(a, n)
    suffix_totals = _suffix_totals(a)
    position = 0
    remaining = n
    for j, chosen in enumerate(x):
        table = tables[j + 1]
        lo = max(0, remaining - suffix_totals[j + 1])
        for v in range(lo, chosen):
            position += table[remaining - v]
        remaining -= chosen
    return position


def unrank(spec: SpecLike, n: int, r: int) -> Composition:
    """Composition of n at 0-based lexicographic position r; inverse of rank.

    Raises IndexError when r is not below the total count.
    """
    a = as_spec(spec).multiplicities
    _check_n(n)
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"rank must be a non-negative integer, got {r!r}")
    tables = _suffix_tables(a, n)
    total = tables[0][n]
    if r >= total:
        raise IndexError(f"rank {r} out of range, only {total} compositions")
    suffix_totals = _suffix_totals(a)
    out: list[int] = []
    remaining = n
    for j in range(len(a)):
        table = tables[j + 1]
        v = max(0, remaining - suffix_totals[j + 1])
        while True:
            below = table[remaining - v]
            if r < below:
                break
            r -= below
            v += 1
        out.append(v)
        remaining -= v
    return tuple(out)
