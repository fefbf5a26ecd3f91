"""Resurgence, the containment set T, and symbolic defects for odd cycles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ConsistencyError, InvalidArgument, OutOfScope
from .factorization import max_edge_count
from .ideals import EdgeIdeal
from .optimization import alpha_symbolic_closed, fraction_str

ALPHA_COMPARISON = "alpha-comparison"
GENERATOR_CHECK = "generator-check"


def in_T(n: int, m: int, r: int) -> bool:
    """Whether I^(m) is not contained in I^r for I = I(C_{2n+1}), via minimal degrees."""
    if n < 1 or m < 1 or r < 1:
        raise InvalidArgument("need n, m, r >= 1")
    return alpha_symbolic_closed(n, m) < 2 * r


def resurgence_closed(n: int) -> Fraction:
    if n < 1:
        raise InvalidArgument("need n >= 1")
    return Fraction(2 * n + 2, 2 * n + 1)


def witness_pair(n: int, k: int) -> tuple[int, int]:
    """(m_k, r_k) = (n+1 + k(2n+2), n+1 + k(2n+1)); every pair lies in T."""
    if n < 1 or k < 0:
        raise InvalidArgument("need n >= 1 and k >= 0")
    return (n + 1 + k * (2 * n + 2), n + 1 + k * (2 * n + 1))


def witness_sequence(n: int, k: int) -> Fraction:
    m, r = witness_pair(n, k)
    return Fraction(m, r)


def multichoose(p: int, q: int) -> int:
    """Number of size-q multisets drawn from p items; 0 for q < 0."""
    if p < 0:
        raise InvalidArgument("p must be >= 0")
    if q < 0:
        return 0
    if q == 0:
        return 1
    return comb(p + q - 1, q)


def sdefect_closed(n: int, t: int) -> int:
    if n < 1 or t < 1:
        raise InvalidArgument("need n >= 1 and t >= 1")
    if t > 2 * n + 1:
        raise OutOfScope(f"no closed form for t = {t} > 2n+1 = {2 * n + 1}")
    if t <= n:
        return 0
    if t == n + 1:
        return 1
    return sum(comb(2 * n + 1, l) * multichoose(l, t - (n + 1) - l) for l in range(1, 2 * n + 2))


def sdefect_bruteforce(ideal: EdgeIdeal, t: int) -> int:
    """Minimal monomial generators of I^(t) that are not in I^t."""
    return sum(1 for g in ideal.symbolic_minimal_generators(t) if not ideal.in_ordinary_power(g, t))


@dataclass(frozen=True)
class ContainmentReport:
    m: int
    r: int
    contained: bool
    method: str
    alpha_comparison: bool | None = None
    witness: tuple[int, ...] | None = None

    def to_dict(self):
        return {
            "m": self.m,
            "r": self.r,
            "contained": self.contained,
            "method": self.method,
            "alpha_comparison": self.alpha_comparison,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def _min_edge_count(ideal: EdgeIdeal, m: int):
    """Smallest b(g) over the minimal generators g of I^(m), with the first g attaining it."""
    key = ("min_b", m)
    cache = ideal._cache
    if key not in cache:
        best = None
        for g in ideal.symbolic_minimal_generators(m):
            b = max_edge_count(ideal.graph, g)
            if best is None or b < best[0]:
                best = (b, g)
        cache[key] = best
    return cache[key]


def containment_check(ideal: EdgeIdeal, m: int, r: int) -> ContainmentReport:
    """Decide I^(m) subset I^r by checking every minimal generator of I^(m).

    On odd cycles the minimal-degree criterion is evaluated too and must agree.
    """
    if m < 1 or r < 1:
        raise InvalidArgument("need m, r >= 1")
    b, g = _min_edge_count(ideal, m)
    contained = b >= r
    alpha = None
    if ideal.graph.is_odd_cycle():
        n = (ideal.graph.num_vertices - 1) // 2
        alpha = not in_T(n, m, r)
        if alpha != contained:
            raise ConsistencyError(f"generator check and alpha comparison disagree at m={m}, r={r}")
    return ContainmentReport(m, r, contained, GENERATOR_CHECK, alpha, None if contained else g)


def resurgence_report(n: int, witnesses: int = 6) -> dict:
    rho = resurgence_closed(n)
    rows = []
    for k in range(witnesses + 1):
        m, r = witness_pair(n, k)
        rows.append({"k": k, "m": m, "r": r, "ratio": fraction_str(Fraction(m, r)), "in_T": in_T(n, m, r)})
    return {"n": n, "resurgence": fraction_str(rho), "witnesses": rows}
