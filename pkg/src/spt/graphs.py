"""Simple graphs on vertices 1..N, minimal vertex covers, and the cover matrix.

Vertices are 1-based everywhere in the public API so that vertex ``i``
corresponds to the variable ``x_i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .config import MAX_COVER_VERTICES
from .errors import InvalidArgument, ParseError, ResourceLimit

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.num_vertices < 1:
            raise InvalidArgument("a graph needs at least one vertex")
        normalized = set()
        for i, j in self.edges:
            if i == j:
                raise InvalidArgument(f"self-loop at vertex {i}")
            i, j = min(i, j), max(i, j)
            if i < 1 or j > self.num_vertices:
                raise InvalidArgument(f"edge ({i},{j}) out of range 1..{self.num_vertices}")
            normalized.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj = {v: set() for v in range(1, self.num_vertices + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edge_index(self, edge: Edge) -> int:
        i, j = edge
        return self.edges.index((min(i, j), max(i, j)))

    def is_cycle(self) -> bool:
        """True when the graph is exactly cycle(N) with its canonical labelling."""
        return self.num_vertices >= 3 and self.edges == _cycle_edges(self.num_vertices)

    def is_odd_cycle(self) -> bool:
        return self.is_cycle() and self.num_vertices % 2 == 1

    def cycle_edge(self, j: int) -> Edge:
        """The j-th cycle edge e_j = x_j x_{j+1}, indices taken mod N (1-based)."""
        n = self.num_vertices
        a = (j - 1) % n + 1
        b = a % n + 1
        return (min(a, b), max(a, b))

    def to_edge_list(self) -> str:
        lines = [str(self.num_vertices)] + [f"{i} {j}" for i, j in self.edges]
        return "\n".join(lines) + "\n"


def _cycle_edges(n):
    return tuple(sorted({(min(i, i % n + 1), max(i, i % n + 1)) for i in range(1, n + 1)}))


def cycle(num_vertices: int) -> Graph:
    if num_vertices < 3:
        raise InvalidArgument(f"cycle needs at least 3 vertices, got {num_vertices}")
    return Graph(num_vertices, _cycle_edges(num_vertices))


def complete(num_vertices: int) -> Graph:
    if num_vertices < 2:
        raise InvalidArgument(f"complete graph needs at least 2 vertices, got {num_vertices}")
    edges = tuple((i, j) for i in range(1, num_vertices + 1) for j in range(i + 1, num_vertices + 1))
    return Graph(num_vertices, edges)


def cycle_with_pendant(cycle_size: int, attach_at: int) -> Graph:
    """Odd cycle on 1..cycle_size plus vertex cycle_size+1 joined to attach_at."""
    if cycle_size < 3 or cycle_size % 2 == 0:
        raise InvalidArgument(f"cycle_size must be odd and >= 3, got {cycle_size}")
    if not 1 <= attach_at <= cycle_size:
        raise InvalidArgument(f"attach_at must lie in 1..{cycle_size}, got {attach_at}")
    return Graph(cycle_size + 1, _cycle_edges(cycle_size) + ((attach_at, cycle_size + 1),))


def from_edge_list(text: str) -> Graph:
    """Parse ``N`` on the first line followed by one ``i j`` pair per line.

    Blank lines and ``#`` comments are ignored. Duplicate edges collapse.
    """
    num_vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"expected integers, got {raw!r}", lineno) from None
        if num_vertices is None:
            if len(values) != 1 or values[0] < 1:
                raise ParseError(f"first line must be a positive vertex count, got {raw!r}", lineno)
            num_vertices = values[0]
            continue
        if len(values) != 2:
            raise ParseError(f"expected 'i j', got {raw!r}", lineno)
        i, j = values
        if i == j:
            raise ParseError(f"self-loop at vertex {i}", lineno)
        for v in (i, j):
            if not 1 <= v <= num_vertices:
                raise ParseError(f"vertex {v} out of range 1..{num_vertices}", lineno)
        edges.append((i, j))
    if num_vertices is None:
        raise ParseError("empty edge list")
    return Graph(num_vertices, tuple(edges))


def cover_sort_key(cover: tuple[int, ...]):
    # size first, then the 0/1 row in descending lex order, which is the same
    # as ascending lex order of the sorted vertex tuple
    return (len(cover), cover)


def minimal_vertex_covers(graph: Graph) -> list[tuple[int, ...]]:
    """All inclusion-minimal vertex covers, sorted as the cover matrix rows.

    Backtracking over vertices in order: leaving a vertex out forces all its
    neighbours in, and a vertex that is in while all its neighbours are in
    owns no edge, so that branch cannot lead to a minimal cover.
    """
    n = graph.num_vertices
    if n > MAX_COVER_VERTICES:
        raise ResourceLimit(f"cover enumeration limited to {MAX_COVER_VERTICES} vertices, got {n}")
    nbr = [0] * (n + 1)
    for v, adj in graph.neighbors.items():
        for u in adj:
            nbr[v] |= 1 << u
    found = []

    def redundant(v, inside):
        return nbr[v] & inside == nbr[v]

    def go(v, inside, outside):
        if v > n:
            # every included vertex must own an edge towards the outside
            if all(not redundant(u, inside) for u in range(1, n + 1) if inside >> u & 1):
                found.append(tuple(u for u in range(1, n + 1) if inside >> u & 1))
            return
        bit = 1 << v
        if inside & bit:
            go(v + 1, inside, outside)
            return
        # v undecided: try leaving it out
        if not nbr[v] & outside:
            go(v + 1, inside | nbr[v], outside | bit)
        # try putting it in; prune if every neighbour is already forced in
        if not redundant(v, inside):
            go(v + 1, inside | bit, outside)

    go(1, 0, 0)
    found.sort(key=cover_sort_key)
    return found


@dataclass(frozen=True)
class CoverMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def row_sums(self):
        return [sum(r) for r in self.rows]

    def to_json(self) -> str:
        return json.dumps({"rows": [list(r) for r in self.rows]}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "CoverMatrix":
        return cls(tuple(tuple(r) for r in json.loads(text)["rows"]))


def cover_matrix(graph: Graph) -> CoverMatrix:
    n = graph.num_vertices
    rows = []
    for cover in minimal_vertex_covers(graph):
        members = set(cover)
        rows.append(tuple(1 if j in members else 0 for j in range(1, n + 1)))
    return CoverMatrix(tuple(rows))
