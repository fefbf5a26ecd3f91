"""Brute-force reference engines for cross-validation.

Nothing here imports the optimized paths. Every routine is the most direct
reading of its definition so that agreement with the fast code means something.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .config import budget as _budget
from .errors import InvalidArgument, ResourceLimit


@dataclass(frozen=True)
class EnumerationBox:
    num_vars: int
    max_degree: int
    exponent_cap: int

    def __post_init__(self):
        if min(self.num_vars, self.max_degree, self.exponent_cap) < 0:
            raise InvalidArgument(f"box bounds must be non-negative: {self}")

    def volume(self) -> int:
        """Exact number of exponent vectors in the box."""
        # counts[d] = vectors so far with degree d
        counts = [1] + [0] * self.max_degree
        for _ in range(self.num_vars):
            nxt = [0] * (self.max_degree + 1)
            for d, c in enumerate(counts):
                if c:
                    for e in range(min(self.exponent_cap, self.max_degree - d) + 1):
                        nxt[d + e] += c
            counts = nxt
        return sum(counts)


def _compositions(num_vars, total, cap):
    # ascending lex order of vectors with the given degree
    if num_vars == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(cap, total) + 1):
        rest_max = cap * (num_vars - 1)
        if total - first > rest_max:
            continue
        for tail in _compositions(num_vars - 1, total - first, cap):
            yield (first,) + tail


def enumerate_monomials(box: EnumerationBox, budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every exponent vector in the box once, degree first then ascending lex."""
    limit = _budget(budget)
    if box.volume() > limit:
        raise ResourceLimit(f"box {box} has {box.volume()} points, budget is {limit}")
    for d in range(box.max_degree + 1):
        yield from _compositions(box.num_vars, d, box.exponent_cap)


def bmax_naive(num_vertices: int, edges: Sequence[tuple[int, int]], m: Sequence[int]) -> int:
    """Largest number of edges (with repetition) whose product divides m.

    Plain recursion: try every multiplicity for the first edge, recurse on the rest.
    """
    if sum(m) > 20:
        raise ResourceLimit("bmax_naive is limited to degree 20")
    edges = list(edges)

    def rec(idx, caps):
        if idx == len(edges):
            return 0
        i, j = edges[idx]
        best = 0
        b = 0
        while b <= caps[i - 1] and b <= caps[j - 1]:
            nxt = list(caps)
            nxt[i - 1] -= b
            nxt[j - 1] -= b
            best = max(best, b + rec(idx + 1, nxt))
            b += 1
        return best

    return rec(0, list(m))


def minimal_covers_naive(num_vertices: int, edges: Sequence[tuple[int, int]]) -> set[frozenset[int]]:
    """Complements of the maximal independent sets, by scanning all subsets."""
    vertices = range(1, num_vertices + 1)
    edge_sets = [frozenset(e) for e in edges]

    def independent(s):
        return not any(e <= s for e in edge_sets)

    indep = []
    for size in range(num_vertices + 1):
        for combo in combinations(vertices, size):
            s = frozenset(combo)
            if independent(s):
                indep.append(s)
    maximal = [s for s in indep if not any(s < u for u in indep)]
    return {frozenset(vertices) - s for s in maximal}


def strictly_divides(p, m):
    return p != m and all(a <= b for a, b in zip(p, m))


def minimize_generators(monomials) -> list[tuple[int, ...]]:
    """Drop every monomial that is a proper multiple of another one."""
    uniq = set(tuple(m) for m in monomials)
    kept = [m for m in uniq if not any(strictly_divides(p, m) for p in uniq)]
    return sorted(kept, key=lambda m: (sum(m), m))


def symbolic_generators_naive(num_vertices, edges, t, max_degree=None):
    """Minimal generators of I^(t) by scanning the box and filtering pairwise."""
    covers = minimal_covers_naive(num_vertices, edges)
    box = EnumerationBox(num_vertices, 2 * t if max_degree is None else max_degree, t)
    members = [m for m in enumerate_monomials(box)
               if all(sum(m[v - 1] for v in c) >= t for c in covers)]
    return minimize_generators(members)


def ordinary_generators_naive(num_vertices, edges, t):
    """Minimal generators of I^t as all products of t edges, filtered."""
    prods = [tuple([0] * num_vertices)]
    for _ in range(t):
        nxt = set()
        for p in prods:
            for i, j in edges:
                q = list(p)
                q[i - 1] += 1
                q[j - 1] += 1
                nxt.add(tuple(q))
        prods = nxt
    return minimize_generators(prods)
