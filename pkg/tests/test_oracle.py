import random
from math import comb

import pytest

from spt.errors import ResourceLimit
from spt.graphs import complete, cycle
from spt.oracle import (EnumerationBox, bmax_naive, enumerate_monomials, minimal_covers_naive,
                        minimize_generators, ordinary_generators_naive, symbolic_generators_naive)


def test_enumerate_small_boxes():
    assert list(enumerate_monomials(EnumerationBox(2, 1, 1))) == [(0, 0), (0, 1), (1, 0)]
    assert len(list(enumerate_monomials(EnumerationBox(3, 2, 2)))) == 10
    assert list(enumerate_monomials(EnumerationBox(1, 0, 5))) == [(0,)]


@pytest.mark.parametrize("n, d", [(2, 5), (3, 4), (4, 6), (5, 3)])
def test_stars_and_bars_count(n, d):
    box = EnumerationBox(n, d, d)
    got = list(enumerate_monomials(box))
    assert len(got) == comb(n + d, n) == box.volume()
    assert len(set(got)) == len(got)
    assert got == sorted(got, key=lambda m: (sum(m), m))


def test_enumerate_respects_cap_and_budget():
    got = list(enumerate_monomials(EnumerationBox(3, 6, 2)))
    assert max(max(m) for m in got) == 2 and len(got) == 27
    with pytest.raises(ResourceLimit):
        list(enumerate_monomials(EnumerationBox(6, 10, 10), budget=100))


def test_bmax_naive_examples():
    assert bmax_naive(5, cycle(5).edges, (2, 2, 1, 1, 1)) == 3
    assert bmax_naive(3, cycle(3).edges, (1, 1, 1)) == 1
    assert bmax_naive(4, complete(4).edges, (1, 1, 1, 1)) == 2
    with pytest.raises(ResourceLimit):
        bmax_naive(3, cycle(3).edges, (7, 7, 7))


def test_minimize_generators_examples():
    assert minimize_generators([(1, 1, 0), (2, 1, 0)]) == [(1, 1, 0)]
    assert minimize_generators([]) == []
    assert minimize_generators([(1, 1, 0), (0, 1, 1)]) == [(0, 1, 1), (1, 1, 0)]


def test_minimize_idempotent_and_order_free():
    rng = random.Random(3)
    for _ in range(50):
        ms = [tuple(rng.randint(0, 3) for _ in range(4)) for _ in range(rng.randint(0, 15))]
        once = minimize_generators(ms)
        assert minimize_generators(once) == once
        rng.shuffle(ms)
        assert minimize_generators(ms) == once


def test_naive_covers_c5():
    assert len(minimal_covers_naive(5, cycle(5).edges)) == 5


def test_naive_generators_c3():
    # I^(2) of the triangle: x1x2x3 absorbs the three mixed products
    sym = symbolic_generators_naive(3, cycle(3).edges, 2)
    assert sym == [(1, 1, 1), (0, 2, 2), (2, 0, 2), (2, 2, 0)]
    assert len(ordinary_generators_naive(3, cycle(3).edges, 2)) == 6
