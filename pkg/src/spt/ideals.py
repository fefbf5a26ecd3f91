"""Ordinary and symbolic powers of edge ideals, on monomials and generator sets.

Membership in I^t is ``b(m) >= t``; membership in I^(t) is ``w_V(m) >= t`` for
every minimal vertex cover V. Generator sets are found by scanning a bounded
exponent box with numpy and keeping the members that stop being members when
any single exponent drops by one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .config import budget as _budget
from .errors import InvalidArgument, ResourceLimit
from .factorization import max_edge_count
from .graphs import Graph, cover_matrix, minimal_vertex_covers
from .monomials import Monomial, sort_key


@dataclass(frozen=True)
class GeneratorSet:
    """Monomials pairwise incomparable under divisibility, sorted degree-then-lex."""

    monomials: tuple[Monomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "monomials", tuple(sorted(set(self.monomials), key=sort_key)))

    def __len__(self):
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    def __contains__(self, m):
        return tuple(m) in set(self.monomials)

    def as_set(self) -> set[Monomial]:
        return set(self.monomials)

    def generates(self, m: Sequence[int]) -> bool:
        """True when some element divides m, i.e. m lies in the ideal they generate."""
        if not self.monomials:
            return False
        return bool((np.asarray(self.monomials) <= np.asarray(m)).all(axis=1).any())

    def to_json(self) -> str:
        return json.dumps([list(m) for m in self.monomials], separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "GeneratorSet":
        return cls(tuple(tuple(m) for m in json.loads(text)))


def box_volume(num_vars: int, max_degree: int, cap: int) -> int:
    if max_degree < 0:
        return 0
    counts = np.zeros(max_degree + 1, dtype=object)
    counts[0] = 1
    for _ in range(num_vars):
        nxt = np.zeros_like(counts)
        for e in range(min(cap, max_degree) + 1):
            nxt[e:] += counts[: max_degree + 1 - e]
        counts = nxt
    return int(counts.sum())


def exponent_box(num_vars: int, max_degree: int, cap: int, budget: int | None = None) -> np.ndarray:
    """All exponent vectors with degree <= max_degree and entries <= cap,
    as rows sorted by degree then ascending lex."""
    limit = _budget(budget)
    volume = box_volume(num_vars, max_degree, cap)
    if volume > limit:
        raise ResourceLimit(f"exponent box ({num_vars} vars, degree <= {max_degree}, cap {cap}) "
                            f"has {volume} points, budget is {limit}")
    if max_degree < 0:
        return np.zeros((0, num_vars), dtype=np.int32)
    rows = np.zeros((1, 0), dtype=np.int32)
    deg = np.zeros(1, dtype=np.int32)
    for _ in range(num_vars):
        parts, degs = [], []
        for e in range(min(cap, max_degree) + 1):
            keep = deg + e <= max_degree
            if not keep.any():
                break
            block = np.empty((int(keep.sum()), rows.shape[1] + 1), dtype=np.int32)
            block[:, :-1] = rows[keep]
            block[:, -1] = e
            parts.append(block)
            degs.append(deg[keep] + e)
        rows = np.concatenate(parts)
        deg = np.concatenate(degs)
    order = np.lexsort(tuple(rows[:, c] for c in range(num_vars - 1, -1, -1)) + (deg,))
    return rows[order]


@dataclass(frozen=True)
class DecompositionReport:
    graph: Graph
    t: int
    holds: bool
    witness: Monomial | None
    symbolic_generators: int
    rhs_generators: int
    d_generators: int

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "symbolic_generators": self.symbolic_generators,
            "rhs_generators": self.rhs_generators,
            "d_generators": self.d_generators,
        }


@dataclass
class EdgeIdeal:
    """Edge ideal of a graph with its minimal vertex covers cached."""

    graph: Graph
    budget: int | None = None
    covers: list[tuple[int, ...]] = field(init=False)
    _cover_rows: np.ndarray = field(init=False, repr=False)
    _cache: dict = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        self.covers = minimal_vertex_covers(self.graph)
        rows = cover_matrix(self.graph).rows
        self._cover_rows = np.array(rows, dtype=np.int32).reshape(len(rows), self.graph.num_vertices)

    @property
    def num_vars(self) -> int:
        return self.graph.num_vertices

    def generators(self) -> GeneratorSet:
        n = self.num_vars
        gens = []
        for i, j in self.graph.edges:
            m = [0] * n
            m[i - 1] = m[j - 1] = 1
            gens.append(tuple(m))
        return GeneratorSet(tuple(gens))

    def _check(self, m):
        if len(m) != self.num_vars:
            raise InvalidArgument(f"monomial has {len(m)} exponents, expected {self.num_vars}")

    # -- membership ---------------------------------------------------------

    def cover_weights(self, m: Sequence[int]) -> list[int]:
        self._check(m)
        return [sum(m[v - 1] for v in c) for c in self.covers]

    def in_ordinary_power(self, m: Sequence[int], t: int) -> bool:
        self._check(m)
        if t <= 0:
            return True
        return max_edge_count(self.graph, m) >= t

    def in_symbolic_power(self, m: Sequence[int], t: int) -> bool:
        if t <= 0:
            self._check(m)
            return True
        return min(self.cover_weights(m)) >= t

    def l_membership(self, m: Sequence[int], t: int) -> bool:
        return sum(m) >= 2 * t and self.in_symbolic_power(m, t)

    def d_membership(self, m: Sequence[int], t: int) -> bool:
        return sum(m) < 2 * t and self.in_symbolic_power(m, t)

    # -- generator sets -----------------------------------------------------

    def _symbolic_box(self, t: int, max_degree: int) -> np.ndarray:
        X = exponent_box(self.num_vars, max_degree, t, self.budget)
        A = self._cover_rows
        W = X @ A.T
        member = (W >= t).all(axis=1)
        X, W = X[member], W[member]
        keep = np.ones(len(X), dtype=bool)
        for i in range(self.num_vars):
            lowered = (W - A[:, i]) >= t
            keep &= ~(lowered.all(axis=1) & (X[:, i] > 0))
        return X[keep]

    def symbolic_minimal_generators(self, t: int, extra_degree: int = 0) -> GeneratorSet:
        """Minimal generators of I^(t) inside the box degree <= 2t (+extra), exponents <= t."""
        if t < 1:
            raise InvalidArgument("t must be >= 1")
        key = ("sym", t, extra_degree)
        if key not in self._cache:
            X = self._symbolic_box(t, 2 * t + extra_degree)
            self._cache[key] = GeneratorSet(tuple(map(tuple, X.tolist())))
        return self._cache[key]

    def d_generators(self, t: int) -> GeneratorSet:
        """Divisibility-minimal elements of D(t) (degree < 2t, every cover weight >= t)."""
        if t < 1:
            raise InvalidArgument("t must be >= 1")
        key = ("d", t)
        if key not in self._cache:
            X = self._symbolic_box(t, 2 * t - 1)
            self._cache[key] = GeneratorSet(tuple(map(tuple, X.tolist())))
        return self._cache[key]

    def d_elements(self, t: int) -> list[Monomial]:
        """Every element of the finite set D(t), not only the minimal ones."""
        if t < 1:
            return []
        # exponents above t can occur in D(t), so the cap is the degree bound
        X = exponent_box(self.num_vars, 2 * t - 1, 2 * t - 1, self.budget)
        X = X[(X @ self._cover_rows.T >= t).all(axis=1)]
        return [tuple(r) for r in X.tolist()]

    def ordinary_power_generators(self, t: int) -> GeneratorSet:
        """Minimal generators of I^t: the distinct products of t edge monomials."""
        if t < 1:
            raise InvalidArgument("t must be >= 1")
        key = ("ord", t)
        if key in self._cache:
            return self._cache[key]
        edges = self.graph.edges
        count = comb(len(edges) + t - 1, t)
        limit = _budget(self.budget)
        if count > limit:
            raise ResourceLimit(f"{count} edge products exceed budget {limit}")
        E = np.zeros((len(edges), self.num_vars), dtype=np.int32)
        for k, (i, j) in enumerate(edges):
            E[k, i - 1] = E[k, j - 1] = 1
        prods = set()
        for combo in combinations_with_replacement(range(len(edges)), t):
            prods.add(tuple(E[list(combo)].sum(axis=0).tolist()))
        # all products have degree 2t, so distinct ones are pairwise incomparable
        result = GeneratorSet(tuple(prods))
        self._cache[key] = result
        return result

    def check_decomposition(self, t: int) -> DecompositionReport:
        """Test I^(t) == I^t + (D(t)) by mutual divisibility of minimal generators."""
        lhs = self.symbolic_minimal_generators(t)
        dgens = self.d_generators(t)
        rhs = minimize(list(self.ordinary_power_generators(t)) + list(dgens))
        witness = None
        for g in lhs:
            if not rhs.generates(g):
                witness = g
                break
        if witness is None:
            for g in rhs:
                if not lhs.generates(g):
                    witness = g
                    break
        return DecompositionReport(self.graph, t, witness is None, witness,
                                   len(lhs), len(rhs), len(dgens))

    def check_l_equality(self, t: int, extra_degree: int = 0) -> LEqualityReport:
        """Search L(t) for monomials outside I^t (degrees 2t..2t+extra_degree).

        Exponents above 2t can be lowered without leaving L(t) or entering
        I^t, so the cap 2t loses no witnesses.
        """
        if t < 1:
            raise InvalidArgument("t must be >= 1")
        top = 2 * t + extra_degree
        X = exponent_box(self.num_vars, top, 2 * t, self.budget)
        X = X[X.sum(axis=1) >= 2 * t]
        X = X[(X @ self._cover_rows.T >= t).all(axis=1)]
        bad = [tuple(g) for g in X.tolist() if max_edge_count(self.graph, g) < t]
        return LEqualityReport(t, not bad, bad[0] if bad else None, len(bad), top)


@dataclass(frozen=True)
class LEqualityReport:
    t: int
    holds: bool
    witness: Monomial | None
    violations: int
    max_degree: int

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "violations": self.violations,
            "max_degree": self.max_degree,
        }


def minimize(monomials: Iterable[Sequence[int]]) -> GeneratorSet:
    """Keep the divisibility-minimal monomials (numpy pairwise comparison)."""
    uniq = sorted(set(tuple(m) for m in monomials), key=sort_key)
    if not uniq:
        return GeneratorSet(())
    X = np.asarray(uniq)
    keep = []
    for idx, m in enumerate(X):
        # only lower-or-equal degree candidates can divide; uniq is degree sorted
        below = X[:idx]
        if len(below) and (below <= m).all(axis=1).any():
            continue
        keep.append(uniq[idx])
    return GeneratorSet(tuple(keep))
