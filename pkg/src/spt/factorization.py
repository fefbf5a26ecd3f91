"""Optimal edge factorizations of monomials.

Writing ``m = prod x_i^{a_i} * prod e^{b_e}`` with the total edge count
``b(m) = sum b_e`` as large as possible is an integer edge packing with vertex
capacities ``m_i``. Cycles get a direct routine (fix the wrap-around edge,
then a path is solved greedily from one end); other graphs use exact
branch-and-bound after peeling pendant edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidArgument
from .graphs import Edge, Graph
from .monomials import Monomial


def _path_greedy(caps: list[int]) -> int:
    """Max packing on the path 1-2-...-k; greedy from the leaf is optimal."""
    total = 0
    for i in range(len(caps) - 1):
        b = min(caps[i], caps[i + 1])
        total += b
        caps[i + 1] -= b
    return total


def _cycle_max(m: Sequence[int]) -> int:
    n = len(m)
    best = 0
    for wrap in range(min(m[0], m[n - 1]) + 1):
        caps = list(m)
        caps[0] -= wrap
        caps[n - 1] -= wrap
        best = max(best, wrap + _path_greedy(caps))
    return best


def _packing(edges: Sequence[Edge], caps: dict[int, int]) -> int:
    """Exact max edge packing over ``edges`` with capacities ``caps`` (mutated)."""
    edges = [e for e in edges if caps[e[0]] > 0 and caps[e[1]] > 0]
    total = 0
    # a vertex with a single live edge: saturating that edge is always optimal
    while True:
        incident: dict[int, list[Edge]] = {}
        for e in edges:
            incident.setdefault(e[0], []).append(e)
            incident.setdefault(e[1], []).append(e)
        leaf = next((es[0] for v, es in incident.items() if len(es) == 1), None)
        if leaf is None:
            break
        i, j = leaf
        b = min(caps[i], caps[j])
        total += b
        caps[i] -= b
        caps[j] -= b
        edges = [e for e in edges if e != leaf and caps[e[0]] > 0 and caps[e[1]] > 0]
    if not edges:
        return total
    return total + _branch_and_bound(edges, caps)


def _branch_and_bound(edges: list[Edge], caps: dict[int, int]) -> int:
    caps = dict(caps)
    k = len(edges)
    # vertices touched by edges[idx:] for the capacity bound
    touched = [set() for _ in range(k + 1)]
    for idx in range(k - 1, -1, -1):
        touched[idx] = touched[idx + 1] | set(edges[idx])

    # greedy incumbent
    greedy_caps = dict(caps)
    best = 0
    for i, j in edges:
        b = min(greedy_caps[i], greedy_caps[j])
        greedy_caps[i] -= b
        greedy_caps[j] -= b
        best += b

    def bound(idx):
        return sum(caps[v] for v in touched[idx]) // 2

    def go(idx, acc):
        nonlocal best
        if acc > best:
            best = acc
        if idx == k or acc + bound(idx) <= best:
            return
        i, j = edges[idx]
        top = min(caps[i], caps[j])
        for b in range(top, -1, -1):
            caps[i] -= b
            caps[j] -= b
            go(idx + 1, acc + b)
            caps[i] += b
            caps[j] += b

    go(0, 0)
    return best


def max_edge_count(graph: Graph, m: Sequence[int]) -> int:
    """b(m): the largest number of edge monomials whose product divides m."""
    if len(m) != graph.num_vertices:
        raise InvalidArgument(f"monomial has {len(m)} exponents, graph has {graph.num_vertices} vertices")
    if graph.is_cycle():
        return _cycle_max(m)
    caps = {v: m[v - 1] for v in range(1, graph.num_vertices + 1)}
    return _packing(graph.edges, caps)


@dataclass(frozen=True)
class Factorization:
    """``prod x_i^{ancillary[i-1]} * prod e^{edge_exponents[k]}`` over ``graph.edges``."""

    graph: Graph
    ancillary: tuple[int, ...]
    edge_exponents: tuple[int, ...]
    optimal: bool = False

    def __post_init__(self):
        if len(self.ancillary) != self.graph.num_vertices:
            raise InvalidArgument("ancillary vector has the wrong length")
        if len(self.edge_exponents) != len(self.graph.edges):
            raise InvalidArgument("edge exponent vector has the wrong length")
        if any(a < 0 for a in self.ancillary) or any(b < 0 for b in self.edge_exponents):
            raise InvalidArgument("factorization exponents must be non-negative")

    @property
    def edge_count(self) -> int:
        return sum(self.edge_exponents)

    def edge_map(self) -> dict[Edge, int]:
        return {e: b for e, b in zip(self.graph.edges, self.edge_exponents) if b}

    def monomial(self) -> Monomial:
        exps = list(self.ancillary)
        for (i, j), b in zip(self.graph.edges, self.edge_exponents):
            exps[i - 1] += b
            exps[j - 1] += b
        return tuple(exps)

    def cycle_exponent(self, j: int) -> int:
        """b_j for the cycle edge e_j = x_j x_{j+1} (indices mod N)."""
        return self.edge_exponents[self.graph.edge_index(self.graph.cycle_edge(j))]

    def ancillary_at(self, i: int) -> int:
        return self.ancillary[(i - 1) % self.graph.num_vertices]

    def to_dict(self) -> dict:
        return {
            "ancillary": list(self.ancillary),
            "edges": {f"({i},{j})": b for (i, j), b in self.edge_map().items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def __str__(self):
        parts = [f"x{i}^{a}" if a > 1 else f"x{i}" for i, a in enumerate(self.ancillary, 1) if a]
        cyc = self.graph.is_cycle()
        for (i, j), b in self.edge_map().items():
            if cyc:
                name = f"e{i}" if j == i + 1 else f"e{j}"
            else:
                name = f"e({i},{j})"
            parts.append(f"{name}^{b}" if b > 1 else name)
        return " * ".join(parts) if parts else "1"


def cycle_factorization(graph: Graph, ancillary: Sequence[int], cycle_exponents: dict[int, int]) -> Factorization:
    """Build a factorization on a cycle from cyclic edge indices ``{j: b_j}``."""
    if not graph.is_cycle():
        raise InvalidArgument("cycle_factorization needs a cycle graph")
    exps = [0] * len(graph.edges)
    for j, b in cycle_exponents.items():
        exps[graph.edge_index(graph.cycle_edge(j))] += b
    f = Factorization(graph, tuple(ancillary), tuple(exps))
    return _with_flag(f)


def _with_flag(f: Factorization) -> Factorization:
    optimal = f.edge_count == max_edge_count(f.graph, f.monomial())
    return Factorization(f.graph, f.ancillary, f.edge_exponents, optimal)


def optimal_factorization(graph: Graph, m: Sequence[int]) -> Factorization:
    """An optimal factorization; ties go to the lexicographically smallest
    edge-exponent vector in the graph's sorted edge order."""
    target = max_edge_count(graph, m)
    caps = {v: m[v - 1] for v in range(1, graph.num_vertices + 1)}
    edges = graph.edges
    chosen = []
    need = target
    for idx, (i, j) in enumerate(edges):
        rest = edges[idx + 1:]
        picked = None
        for b in range(min(caps[i], caps[j]) + 1):
            if b > need:
                break
            trial = dict(caps)
            trial[i] -= b
            trial[j] -= b
            if b + _packing(rest, trial) == need:
                picked = b
                break
        assert picked is not None, "lexicographic search lost the optimum"
        chosen.append(picked)
        caps[i] -= picked
        caps[j] -= picked
        need -= picked
    ancillary = tuple(caps[v] for v in range(1, graph.num_vertices + 1))
    return Factorization(graph, ancillary, tuple(chosen), optimal=True)


def find_evens_pattern(f: Factorization) -> tuple[int, int] | None:
    """First (j, k) with ancillaries at x_j and x_{j+2k+1} joined by the edges
    e_j..e_{j+2k} whose odd offsets e_{j+1}, e_{j+3}, ... are all present."""
    g = f.graph
    if not g.is_cycle():
        raise InvalidArgument("the odd-path pattern is defined on cycles only")
    n = g.num_vertices
    for j in range(1, n + 1):
        if f.ancillary_at(j) < 1:
            continue
        k = 0
        while 2 * k + 1 <= n:
            end = j + 2 * k + 1
            need = 2 if (end - j) % n == 0 else 1
            if f.ancillary_at(end) >= need:
                return (j, k)
            # extending to k+1 needs the next odd-offset edge
            if f.cycle_exponent(j + 2 * k + 1) < 1:
                break
            k += 1
    return None


def has_evens_pattern(f: Factorization) -> bool:
    return find_evens_pattern(f) is not None


def rewrite_odd_path(f: Factorization, j: int, k: int) -> Factorization:
    """Trade the ancillaries x_j, x_{j+2k+1} and the edges e_{j+1}, e_{j+3}, ...,
    e_{j+2k-1} for e_j, e_{j+2}, ..., e_{j+2k}: one more edge, same monomial."""
    g = f.graph
    if not g.is_cycle():
        raise InvalidArgument("rewrite_odd_path needs a cycle graph")
    n = g.num_vertices
    if k < 0 or 2 * k + 1 > n:
        raise InvalidArgument(f"k={k} out of range for a cycle of length {n}")
    anc = list(f.ancillary)
    exps = list(f.edge_exponents)
    ends = [(j - 1) % n, (j + 2 * k) % n]
    for v in ends:
        anc[v] -= 1
    for h in range(k):
        exps[g.edge_index(g.cycle_edge(j + 2 * h + 1))] -= 1
    for h in range(k + 1):
        exps[g.edge_index(g.cycle_edge(j + 2 * h))] += 1
    if min(anc) < 0 or min(exps) < 0:
        raise InvalidArgument(f"no odd-path pattern at j={j}, k={k}")
    return _with_flag(Factorization(g, tuple(anc), tuple(exps)))
