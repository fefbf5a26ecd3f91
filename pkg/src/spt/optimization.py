"""Exact rational linear programming and the minimal degree alpha(I^(t)).

The solver is a two-phase tableau simplex over ``fractions.Fraction`` with
Bland's rule, so it terminates on degenerate programs and never rounds.
The alpha program bounds alpha(I^(t)) from below; alpha itself only comes from
the closed formula or from brute-force search.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConsistencyError, InvalidArgument, SptError
from .graphs import Graph, cover_matrix
from .monomials import Monomial


class Infeasible(SptError):
    pass


class Unbounded(SptError):
    pass


def _exact(v) -> Fraction:
    if isinstance(v, float):
        raise InvalidArgument(f"floating point value {v!r} rejected; use int or Fraction")
    return Fraction(v)


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class LinearProgram:
    """minimize objective . y  subject to  matrix y >= rhs,  y >= 0."""

    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    objective: tuple[Fraction, ...]

    def __post_init__(self):
        A = tuple(tuple(_exact(v) for v in row) for row in self.matrix)
        c = tuple(_exact(v) for v in self.rhs)
        b = tuple(_exact(v) for v in self.objective)
        if len(A) != len(c):
            raise InvalidArgument(f"{len(A)} constraint rows but {len(c)} right-hand sides")
        if any(len(row) != len(b) for row in A):
            raise InvalidArgument("every constraint row needs one entry per variable")
        object.__setattr__(self, "matrix", A)
        object.__setattr__(self, "rhs", c)
        object.__setattr__(self, "objective", b)

    @property
    def num_rows(self):
        return len(self.matrix)

    @property
    def num_vars(self):
        return len(self.objective)

    def to_dict(self):
        return {
            "sense": "minimize",
            "matrix": [[fraction_str(v) for v in row] for row in self.matrix],
            "rhs": [fraction_str(v) for v in self.rhs],
            "objective": [fraction_str(v) for v in self.objective],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        return cls(tuple(tuple(Fraction(v) for v in row) for row in d["matrix"]),
                   tuple(Fraction(v) for v in d["rhs"]),
                   tuple(Fraction(v) for v in d["objective"]))

    def to_text(self) -> str:
        """Plain-text tableau: one line per constraint, then the objective."""
        cells = [[str(v) for v in row] + [">=", str(r)] for row, r in zip(self.matrix, self.rhs)]
        cells.append([str(v) for v in self.objective] + ["min", ""])
        widths = [max(len(r[k]) for r in cells) for k in range(len(cells[0]))]
        return "\n".join(" ".join(s.rjust(w) for s, w in zip(r, widths)).rstrip() for r in cells)


@dataclass(frozen=True)
class LPResult:
    value: Fraction
    point: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]
    pivots: int

    def to_dict(self):
        return {"value": fraction_str(self.value),
                "point": [fraction_str(v) for v in self.point],
                "dual": [fraction_str(v) for v in self.dual],
                "pivots": self.pivots}


def check_certificate(prog: LinearProgram, point, dual) -> Fraction:
    """Verify primal and dual feasibility and equal objectives; return the value.

    The dual is  maximize rhs . x  subject to  matrix^T x <= objective,  x >= 0.
    """
    A, c, b = prog.matrix, prog.rhs, prog.objective
    if any(v < 0 for v in point) or any(v < 0 for v in dual):
        raise ConsistencyError("negative primal or dual component")
    for row, r in zip(A, c):
        if sum(a * y for a, y in zip(row, point)) < r:
            raise ConsistencyError("primal point violates a constraint")
    for j in range(prog.num_vars):
        if sum(A[i][j] * dual[i] for i in range(prog.num_rows)) > b[j]:
            raise ConsistencyError("dual point violates a constraint")
    primal = sum((bj * y for bj, y in zip(b, point)), Fraction(0))
    dualv = sum((ci * x for ci, x in zip(c, dual)), Fraction(0))
    if primal != dualv:
        raise ConsistencyError(f"duality gap: primal {primal} vs dual {dualv}")
    return primal


def lp_solve(prog: LinearProgram) -> LPResult:
    """Exact optimum of ``prog`` with a strong-duality certificate."""
    m, n = prog.num_rows, prog.num_vars
    # columns: y (n), surplus s (m), artificial a (m); row i: sign*(A y - s) + a = sign*c
    width = n + 2 * m
    art0 = n + m
    signs = [1 if r >= 0 else -1 for r in prog.rhs]
    rows = []
    for i in range(m):
        sg = signs[i]
        row = [sg * v for v in prog.matrix[i]] + [Fraction(0)] * (2 * m) + [sg * prog.rhs[i]]
        row[n + i] = Fraction(-sg)
        row[art0 + i] = Fraction(1)
        rows.append(row)
    basis = [art0 + i for i in range(m)]
    pivots = 0

    def pivot(r, col):
        nonlocal pivots
        pr = rows[r]
        p = pr[col]
        if p != 1:
            rows[r] = pr = [v / p for v in pr]
        for k in range(len(rows)):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], pr)]
        basis[r] = col
        pivots += 1

    def run(cost, allowed):
        # Bland: entering = lowest-index improving column, leaving = min ratio, lowest basic index
        while True:
            duals = [cost[b] for b in basis]
            entering = None
            for col in range(width):
                if not allowed(col) or col in basis:
                    continue
                reduced = cost[col] - sum(d * row[col] for d, row in zip(duals, rows))
                if reduced < 0:
                    entering = col
                    break
            if entering is None:
                return
            best = None
            for r, row in enumerate(rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    key = (ratio, basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                raise Unbounded("objective is unbounded below")
            pivot(best[1], entering)

    phase1 = [Fraction(0)] * art0 + [Fraction(1)] * m
    run(phase1, lambda col: True)
    if sum(rows[r][-1] for r in range(len(rows)) if basis[r] >= art0) != 0:
        raise Infeasible("constraints admit no non-negative solution")
    # drive zero-level artificials out of the basis, dropping redundant rows
    r = 0
    while r < len(rows):
        if basis[r] >= art0:
            col = next((c for c in range(art0) if rows[r][c] != 0), None)
            if col is None:
                del rows[r]
                del basis[r]
                continue
            pivot(r, col)
        r += 1
    cost = list(prog.objective) + [Fraction(0)] * (2 * m)
    run(cost, lambda col: col < art0)

    point = [Fraction(0)] * n
    for r, b in enumerate(basis):
        if b < n:
            point[b] = rows[r][-1]
    # simplex multipliers from the artificial columns, which hold B^{-1}
    duals = [cost[b] for b in basis]
    dual = tuple(signs[i] * sum((d * row[art0 + i] for d, row in zip(duals, rows)), Fraction(0))
                 for i in range(m))
    value = check_certificate(prog, point, dual)
    return LPResult(value, tuple(point), dual, pivots)


# -- alpha programs ----------------------------------------------------------

def alpha_program(graph: Graph, t: int) -> LinearProgram:
    """All minimal vertex covers as rows: minimize sum y, cover weights >= t."""
    rows = cover_matrix(graph).rows
    n = graph.num_vertices
    return LinearProgram(rows, (t,) * len(rows), (1,) * n)


def alpha_subprogram(graph: Graph, t: int) -> LinearProgram:
    """The rows of the 2n+1 smallest covers (size n+1) of the odd cycle C_{2n+1}."""
    if not graph.is_odd_cycle():
        raise InvalidArgument("the alpha subprogram is defined for odd cycles")
    size = graph.num_vertices
    half = (size - 1) // 2
    rows = cover_matrix(graph).rows[:size]
    if any(sum(r) != half + 1 for r in rows):
        raise ConsistencyError("leading cover matrix rows are not the size n+1 covers")
    return LinearProgram(rows, (t,) * size, (1,) * size)


def subprogram_dual_certificate(n: int, t: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...], Fraction]:
    """The explicit optimal pair y* = t/(n+1), x* = 1/(n+1) for the subprogram,
    checked against the actual constraint rows; returns (y*, x*, value)."""
    from .graphs import cycle

    prog = alpha_subprogram(cycle(2 * n + 1), t)
    y = (Fraction(t, n + 1),) * (2 * n + 1)
    x = (Fraction(1, n + 1),) * (2 * n + 1)
    value = check_certificate(prog, y, x)
    if value != Fraction((2 * n + 1) * t, n + 1):
        raise ConsistencyError(f"certificate value {value} differs from (2n+1)t/(n+1)")
    return y, x, value


def alpha_symbolic_closed(n: int, t: int) -> int:
    """alpha(I(C_{2n+1})^(t)) = 2t - floor(t/(n+1))."""
    if n < 1 or t < 1:
        raise InvalidArgument("need n >= 1 and t >= 1")
    return 2 * t - t // (n + 1)


def witness_monomial(n: int, t: int) -> Monomial:
    """x_1^{s+d} x_2^{s+d} x_3^s ... x_{2n+1}^s with t = s(n+1) + d, 0 <= d <= n."""
    if n < 1 or t < 0:
        raise InvalidArgument("need n >= 1 and t >= 0")
    s, d = divmod(t, n + 1)
    return (s + d, s + d) + (s,) * (2 * n - 1)


def alpha_bruteforce(ideal, t: int, symbolic: bool = True) -> int:
    """Least degree of a monomial in I^(t) (or I^t), by ascending degree search."""
    from .ideals import exponent_box

    if t < 1:
        raise InvalidArgument("t must be >= 1")
    X = exponent_box(ideal.num_vars, 2 * t, t, ideal.budget)
    W = X @ ideal._cover_rows.T
    in_symbolic = (W >= t).all(axis=1)
    degrees = X.sum(axis=1)
    if symbolic:
        hits = degrees[in_symbolic]
        if len(hits) == 0:
            raise ConsistencyError("no element of I^(t) inside the search box")
        return int(hits.min())
    # I^t is inside I^(t), so only those rows need the exact edge-count test
    for row, deg in zip(X[in_symbolic].tolist(), degrees[in_symbolic].tolist()):
        if ideal.in_ordinary_power(row, t):
            return int(deg)
    raise ConsistencyError("no element of I^t inside the search box")


def alpha_sandwich(n: int, t: int) -> dict:
    """LP lower bound, witness degree upper bound, and the closed value between them."""
    from .graphs import cycle

    g = cycle(2 * n + 1)
    lower = lp_solve(alpha_program(g, t)).value
    upper = sum(witness_monomial(n, t))
    closed = alpha_symbolic_closed(n, t)
    return {"lp_bound": lower, "closed": closed, "witness_degree": upper}
