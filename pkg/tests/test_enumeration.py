"""Lexicographic streaming of compositions and rank/unrank round trips."""
import random
from itertools import product

import pytest

from submultisets import count_upper_constrained, iterate, rank, unrank

# The nine compositions of 5 under bounds (2, 3, 3), ascending lexicographic;
# frozen from an independent cartesian-product enumeration.
NINE = [
    (0, 2, 3), (0, 3, 2), (1, 1, 3),
    (1, 2, 2), (1, 3, 1), (2, 0, 3),
    (2, 1, 2), (2, 2, 1), (2, 3, 0),
]


def dumb_list(a, n):
    return sorted(x for x in product(*(range(m + 1) for m in a)) if sum(x) == n)


class TestIterate:
    def test_first_item(self):
        assert next(iterate((2, 3, 3), 5)) == (0, 2, 3)

    def test_counterexample_stream(self):
        assert list(iterate((2, 3, 3), 5)) == NINE

    def test_two_unit_elements(self):
        assert list(iterate((1, 1), 1)) == [(0, 1), (1, 0)]

    def test_empty_stream_when_count_zero(self):
        assert list(iterate((2, 2), 5)) == []

    def test_empty_spec(self):
        assert list(iterate((), 0)) == [()]
        assert list(iterate((), 3)) == []

    def test_zero_multiplicity_pinned(self):
        assert list(iterate((0, 2), 1)) == [(0, 1)]

    def test_matches_dumb_enumeration(self):
        rng = random.Random(99)
        for _ in range(25):
            k = rng.randint(1, 4)
            a = tuple(rng.randint(0, 4) for _ in range(k))
            n = rng.randint(0, sum(a) + 1)
            assert list(iterate(a, n)) == dumb_list(a, n)

    def test_stream_is_strictly_increasing_and_valid(self):
        a, n = (3, 2, 4), 6
        items = list(iterate(a, n))
        assert len(items) == count_upper_constrained(a, n)
        assert all(sum(x) == n for x in items)
        assert all(all(0 <= v <= m for v, m in zip(x, a)) for x in items)
        assert all(x < y for x, y in zip(items, items[1:]))

    def test_start_composition(self):
        assert list(iterate((2, 3, 3), 5, start=NINE[3])) == NINE[3:]

    def test_start_must_be_valid(self):
        with pytest.raises(ValueError):
            next(iterate((2, 3, 3), 5, start=(0, 0, 5)))

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            iterate((1, 2), -1)


class TestRank:
    def test_first_listed(self):
        assert rank((2, 3, 3), 5, (0, 2, 3)) == 0

    def test_last_listed(self):
        assert rank((2, 3, 3), 5, (2, 3, 0)) == 8

    def test_two_unit_elements(self):
        assert rank((1, 1), 1, (1, 0)) == 1

    def test_accepts_lists(self):
        assert rank((2, 3, 3), 5, [1, 1, 3]) == 2

    def test_matches_stream_positions(self):
        a, n = (2, 3, 3), 5
        for i, x in enumerate(iterate(a, n)):
            assert rank(a, n, x) == i

    @pytest.mark.parametrize("bad", [
        (0, 2),          # wrong length
        (3, 0, 2),       # over bound
        (0, 2, 2),       # wrong sum
        (-1, 3, 3),      # negative entry
    ])
    def test_invalid_composition_rejected(self, bad):
        with pytest.raises(ValueError):
            rank((2, 3, 3), 5, bad)


class TestUnrank:
    def test_first(self):
        assert unrank((2, 3, 3), 5, 0) == (0, 2, 3)

    def test_two_unit_elements(self):
        assert unrank((1, 1), 1, 1) == (1, 0)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            unrank((2, 3, 3), 5, 9)
        with pytest.raises(IndexError):
            unrank((2, 2), 5, 0)  # the stream is empty

    def test_negative_rank_rejected(self):
        with pytest.raises(ValueError):
            unrank((2, 3, 3), 5, -1)

    def test_reproduces_stream(self):
        a, n = (2, 3, 3), 5
        assert [unrank(a, n, r) for r in range(9)] == NINE


class TestBijection:
    SPECS = [((2, 3, 3), 5), ((4, 4), 3), ((1, 1, 1, 1), 2), ((0, 3, 2), 4), ((5,), 5)]

    @pytest.mark.parametrize("a,n", SPECS)
    def test_round_trips(self, a, n):
        total = count_upper_constrained(a, n)
        for r in range(total):
            x = unrank(a, n, r)
            assert rank(a, n, x) == r
        for i, x in enumerate(iterate(a, n)):
            assert unrank(a, n, rank(a, n, x)) == x
            assert rank(a, n, x) == i

    @pytest.mark.parametrize("a,n", SPECS)
    def test_rank_extremes(self, a, n):
        items = list(iterate(a, n))
        if items:
            assert rank(a, n, items[0]) == 0
            assert rank(a, n, items[-1]) == len(items) - 1
