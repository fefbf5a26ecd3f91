from fractions import Fraction

import pytest

from spt.errors import InvalidArgument, OutOfScope
from spt.graphs import complete, cycle
from spt.ideals import EdgeIdeal
from spt.invariants import (containment_check, in_T, multichoose,
                            resurgence_closed, resurgence_report, sdefect_bruteforce,
                            sdefect_closed, witness_pair, witness_sequence)


def test_multichoose():
    assert multichoose(3, 2) == 6
    assert multichoose(0, 0) == 1 and multichoose(0, 2) == 0
    assert multichoose(5, -1) == 0


def test_resurgence_closed():
    assert resurgence_closed(1) == Fraction(4, 3)
    assert resurgence_closed(2) == Fraction(6, 5)


def test_in_T_example():
    # alpha(I^(6)) on C_5 is 10, which is not below 2r = 10
    assert not in_T(2, 6, 5)
    assert containment_check(EdgeIdeal(cycle(5)), 6, 5).contained


def test_in_T_bound():
    for n in (1, 2, 3):
        rho = resurgence_closed(n)
        for m in range(1, 31):
            for r in range(1, 31):
                if in_T(n, m, r):
                    assert Fraction(m, r) < rho


def test_witnesses():
    for n in (1, 2, 3):
        rho = resurgence_closed(n)
        seq = [witness_sequence(n, k) for k in range(7)]
        for k in range(7):
            assert in_T(n, *witness_pair(n, k))
        assert all(a < b for a, b in zip(seq, seq[1:]))
        for k in range(2, 7):
            assert abs(seq[k] - rho) < Fraction(1, k)


def test_witness_step_stays_in_T():
    for n in (1, 2, 3):
        for m in range(1, 25):
            for r in range(1, 25):
                if in_T(n, m, r):
                    assert in_T(n, m + 2 * n + 2, r + 2 * n + 1)


def test_sdefect_closed_values():
    assert [sdefect_closed(1, t) for t in (1, 2, 3)] == [0, 1, 3]
    assert [sdefect_closed(2, t) for t in range(1, 6)] == [0, 0, 1, 5, 15]
    assert [sdefect_closed(3, t) for t in range(1, 8)] == [0, 0, 0, 1, 7, 28, 84]
    with pytest.raises(OutOfScope):
        sdefect_closed(2, 6)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sdefect_agrees_with_enumeration(n):
    ideal = EdgeIdeal(cycle(2 * n + 1))
    for t in range(1, 2 * n + 2):
        assert sdefect_closed(n, t) == sdefect_bruteforce(ideal, t)


def test_containment_reports():
    ideal = EdgeIdeal(cycle(3))
    rep = containment_check(ideal, 2, 2)
    assert not rep.contained and rep.witness == (1, 1, 1) and rep.alpha_comparison is False
    ok = containment_check(ideal, 4, 3)
    assert ok.contained and ok.witness is None
    assert ok.to_dict() == {"m": 4, "r": 3, "contained": True, "method": "generator-check",
                            "alpha_comparison": True, "witness": None}


def test_containment_off_cycle_has_no_alpha():
    rep = containment_check(EdgeIdeal(complete(4)), 2, 2)
    assert rep.alpha_comparison is None and rep.contained is False


def test_containment_agrees_on_grid():
    for n in (1, 2):
        ideal = EdgeIdeal(cycle(2 * n + 1))
        for m in range(1, 13):
            for r in range(1, 13):
                rep = containment_check(ideal, m, r)
                assert rep.contained == (not in_T(n, m, r))


def test_argument_checks():
    with pytest.raises(InvalidArgument):
        in_T(0, 1, 1)
    with pytest.raises(InvalidArgument):
        witness_pair(1, -1)
    with pytest.raises(InvalidArgument):
        containment_check(EdgeIdeal(cycle(3)), 0, 1)


def test_resurgence_report_shape():
    rep = resurgence_report(1, 2)
    assert rep["resurgence"] == "4/3"
    assert [w["ratio"] for w in rep["witnesses"]] == ["1/1", "6/5", "5/4"]
    assert all(w["in_T"] for w in rep["witnesses"])


def test_resurgence_ratio_not_attained_on_triangle():
    ideal = EdgeIdeal(cycle(3))
    for k in range(1, 6):
        assert not in_T(1, 4 * k, 3 * k)
        assert containment_check(ideal, 4 * k, 3 * k).contained
