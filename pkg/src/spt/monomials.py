"""Monomials as exponent tuples over x_1..x_N.

A monomial is a plain ``tuple[int, ...]``; index ``i-1`` holds the exponent of
``x_i``. Helpers here validate at the boundary and stay dependency-free.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Sequence

from .errors import InvalidArgument, ParseError

Monomial = tuple[int, ...]


def monomial(exponents: Iterable[int]) -> Monomial:
    m = tuple(int(e) for e in exponents)
    if any(e < 0 for e in m):
        raise InvalidArgument(f"exponents must be non-negative: {m}")
    return m


def degree(m: Sequence[int]) -> int:
    return sum(m)


def vertex_weight(m: Sequence[int], vertices: Iterable[int]) -> int:
    """Sum of the exponents of ``m`` at the given 1-based vertex indices."""
    total = 0
    for v in vertices:
        if not 1 <= v <= len(m):
            raise InvalidArgument(f"vertex {v} out of range 1..{len(m)}")
        total += m[v - 1]
    return total


def divides(p: Sequence[int], m: Sequence[int]) -> bool:
    if len(p) != len(m):
        raise InvalidArgument(f"length mismatch: {len(p)} vs {len(m)}")
    return all(a <= b for a, b in zip(p, m))


def multiply(p: Sequence[int], m: Sequence[int]) -> Monomial:
    if len(p) != len(m):
        raise InvalidArgument(f"length mismatch: {len(p)} vs {len(m)}")
    return tuple(a + b for a, b in zip(p, m))


def sort_key(m: Sequence[int]):
    """Degree first, then ascending lexicographic order of the exponents."""
    return (sum(m), tuple(m))


def product_of_all(n: int, power: int = 1) -> Monomial:
    """(x_1 x_2 ... x_n)^power."""
    return (power,) * n


_TERM = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse(text: str, num_vars: int) -> Monomial:
    """Parse ``x1^2*x2^2*x3`` or a bare vector ``2,2,1,1,1``; ``1`` is the constant."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty monomial")
    if "x" not in s and s != "1":
        try:
            exps = [int(p) for p in s.split(",")]
        except ValueError:
            raise ParseError(f"bad exponent vector {text!r}") from None
        if len(exps) != num_vars:
            raise ParseError(f"expected {num_vars} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ParseError(f"negative exponent in {text!r}")
        return tuple(exps)
    exps = [0] * num_vars
    if s == "1":
        return tuple(exps)
    for term in s.split("*"):
        match = _TERM.match(term)
        if not match:
            raise ParseError(f"bad factor {term!r} in {text!r}")
        var = int(match.group(1))
        if not 1 <= var <= num_vars:
            raise ParseError(f"variable x{var} out of range 1..{num_vars}")
        exps[var - 1] += int(match.group(2) or 1)
    return tuple(exps)


def format_monomial(m: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def to_json(m: Sequence[int]) -> str:
    return json.dumps(list(m))


def from_json(text: str) -> Monomial:
    return monomial(json.loads(text))
