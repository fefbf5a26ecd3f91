from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spt.errors import ConsistencyError, InvalidArgument
from spt.graphs import complete, cycle
from spt.ideals import EdgeIdeal
from spt.optimization import (Infeasible, LinearProgram, Unbounded, alpha_bruteforce, alpha_program,
                              alpha_sandwich, alpha_subprogram, alpha_symbolic_closed,
                              check_certificate, fraction_str, lp_solve, subprogram_dual_certificate,
                              witness_monomial)


def test_fraction_str():
    assert fraction_str(Fraction(0)) == "0/1"
    assert fraction_str(Fraction(-6, 4)) == "-3/2"


def test_floats_rejected():
    with pytest.raises(InvalidArgument):
        LinearProgram(((1,),), (0.5,), (1,))


def test_shape_checks():
    with pytest.raises(InvalidArgument):
        LinearProgram(((1, 1),), (1, 2), (1, 1))
    with pytest.raises(InvalidArgument):
        LinearProgram(((1,),), (1,), (1, 1))


def test_small_lp():
    # min y1 + y2 s.t. y1 + 2y2 >= 4, 3y1 + y2 >= 6
    res = lp_solve(LinearProgram(((1, 2), (3, 1)), (4, 6), (1, 1)))
    assert res.value == Fraction(14, 5)
    assert res.point == (Fraction(8, 5), Fraction(6, 5))
    assert res.dual == (Fraction(2, 5), Fraction(1, 5))


def test_negative_rhs_and_redundant_rows():
    res = lp_solve(LinearProgram(((1, 1), (1, 1), (-1, 0)), (2, 2, -5), (1, 2)))
    assert res.value == 2


def test_infeasible_and_unbounded():
    with pytest.raises(Infeasible):
        lp_solve(LinearProgram(((-1,),), (1,), (1,)))
    with pytest.raises(Unbounded):
        lp_solve(LinearProgram(((1,),), (1,), (-1,)))


def test_certificate_rejects_bad_points():
    prog = LinearProgram(((1, 2), (3, 1)), (4, 6), (1, 1))
    with pytest.raises(ConsistencyError):
        check_certificate(prog, (0, 0), (0, 0))
    with pytest.raises(ConsistencyError):
        check_certificate(prog, (Fraction(8, 5), Fraction(6, 5)), (Fraction(1, 5), Fraction(1, 5)))


def test_lp_json_round_trip_and_text():
    prog = alpha_program(cycle(5), 3)
    assert LinearProgram.from_json(prog.to_json()) == prog
    assert '"0.' not in prog.to_json()
    lines = prog.to_text().splitlines()
    assert len(lines) == 6 and lines[-1].split()[-1] == "min"


lp_entries = st.integers(0, 4)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda nv: st.integers(1, 4).flatmap(lambda nr: st.tuples(
    st.tuples(*[st.tuples(*[lp_entries] * nv)] * nr),
    st.tuples(*[st.integers(-3, 6)] * nr),
    st.tuples(*[st.integers(1, 5)] * nv)))))
def test_strong_duality_random(prog_args):
    A, c, b = prog_args
    prog = LinearProgram(A, c, b)
    try:
        res = lp_solve(prog)
    except Infeasible:
        # some row with positive rhs must then be all zero
        assert any(r > 0 and not any(row) for row, r in zip(A, c))
        return
    assert check_certificate(prog, res.point, res.dual) == res.value


@pytest.mark.parametrize("n", [1, 2, 3])
def test_subprogram_value(n):
    for t in range(1, 7):
        res = lp_solve(alpha_subprogram(cycle(2 * n + 1), t))
        assert res.value == Fraction((2 * n + 1) * t, n + 1)
        y, x, value = subprogram_dual_certificate(n, t)
        assert value == res.value


def test_subprogram_needs_odd_cycle():
    with pytest.raises(InvalidArgument):
        alpha_subprogram(cycle(6), 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_full_program_dominates_subprogram(n):
    g = cycle(2 * n + 1)
    for t in range(1, 9):
        assert lp_solve(alpha_program(g, t)).value >= lp_solve(alpha_subprogram(g, t)).value


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sandwich(n):
    ideal = EdgeIdeal(cycle(2 * n + 1))
    for t in range(1, 7):
        s = alpha_sandwich(n, t)
        brute = alpha_bruteforce(ideal, t)
        assert s["lp_bound"] <= brute <= s["witness_degree"]
        assert brute == s["closed"] == alpha_symbolic_closed(n, t)


def test_witness_monomials_are_members():
    for n in range(1, 5):
        ideal = EdgeIdeal(cycle(2 * n + 1))
        for t in range(1, 11):
            w = witness_monomial(n, t)
            assert len(w) == 2 * n + 1
            assert ideal.in_symbolic_power(w, t)
            assert sum(w) == alpha_symbolic_closed(n, t)


def test_ordinary_alpha_is_2t():
    for g in (cycle(5), complete(4)):
        ideal = EdgeIdeal(g)
        for t in (1, 2, 3):
            assert alpha_bruteforce(ideal, t, symbolic=False) == 2 * t


def test_alpha_argument_checks():
    with pytest.raises(InvalidArgument):
        alpha_symbolic_closed(0, 3)
    with pytest.raises(InvalidArgument):
        alpha_bruteforce(EdgeIdeal(cycle(3)), 0)
