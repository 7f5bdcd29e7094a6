"""Value-semantic graph, colouring, and permutation types.

Graphs are finite, simple, undirected, on vertex set 0..n-1, stored densely:
``rows[v]`` is an int whose bit ``u`` is set iff {u, v} is an edge.  All types
are immutable values and every operation is a pure function, so instances can
be shared across threads without coordination.

The dense representation targets small graphs; ``VERTEX_CAP`` (default 64)
bounds the vertex count and anything larger is an error, not a fallback.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VERTEX_CAP = 64


class ZeroVertexError(ValueError):
    """Raised by operations that reject graphs with zero vertices."""


class VertexCapError(ValueError):
    """Raised when a graph exceeds the configured vertex cap."""


def _check_size(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > VERTEX_CAP:
        raise VertexCapError(f"{n} vertices exceeds the cap of {VERTEX_CAP}")


@dataclass(frozen=True, slots=True)
class Graph:
    """A simple undirected graph as an adjacency bit-matrix."""

    n: int
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_size(self.n)
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has neighbour bits outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if ((rows[u] >> v) & 1) != ((rows[v] >> u) & 1):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(v, v + 1) for v in range(n - 1)])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.rows[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        """Vertex degrees sorted ascending."""
        return tuple(sorted(row.bit_count() for row in self.rows))

    def component_count(self) -> int:
        """Number of connected components (n for the edgeless graph on n vertices)."""
        return len(component_masks(self.n, self.rows))

    def is_connected(self) -> bool:
        return self.component_count() == 1

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """A proper two-colouring as a pair of vertex sets, or None if an odd cycle exists."""
        sides = bipartition_masks(self.n, self.rows)
        if sides is None:
            return None
        mask_a = 0
        mask_b = 0
        for a, b in sides:
            mask_a |= a
            mask_b |= b
        return frozenset(bits(mask_a)), frozenset(bits(mask_b))

    def is_bipartite(self) -> bool:
        return bipartition_masks(self.n, self.rows) is not None

    def circuit_rank(self) -> int:
        """Cyclomatic number: edges - vertices + components.  Zero iff a forest."""
        return self.num_edges() - self.n + self.component_count()

    def vertex_connectivity(self) -> int:
        """Minimum number of vertex deletions that disconnect the graph.

        Returns 0 for a disconnected graph and n - 1 for the complete graph
        (which no deletion disconnects); otherwise the smallest k such that
        deleting some k vertices leaves a disconnected graph.
        """
        n = self.n
        if n == 0:
            raise ZeroVertexError("vertex connectivity of the zero-vertex graph is undefined")
        if self.component_count() != 1:
            return 0
        full = (1 << n) - 1
        if all(self.rows[v] == full ^ (1 << v) for v in range(n)):
            return n - 1
        best = n - 2
        for s in range(n):
            for t in range(s + 1, n):
                if not self.has_edge(s, t):
                    best = min(best, self._local_connectivity(s, t, best))
        return best

    def _local_connectivity(self, s: int, t: int, limit: int) -> int:
        # Max internally vertex-disjoint s-t paths: unit-capacity max flow on
        # the split digraph (v_in = 2v, v_out = 2v+1), capped at `limit`.
        n = self.n
        res: list[dict[int, int]] = [{} for _ in range(2 * n)]
        for v in range(n):
            res[2 * v][2 * v + 1] = 1
            res[2 * v + 1][2 * v] = 0
        for u, v in self.edges():
            res[2 * u + 1][2 * v] = 1
            res[2 * v][2 * u + 1] = 0
            res[2 * v + 1][2 * u] = 1
            res[2 * u][2 * v + 1] = 0
        source, sink = 2 * s + 1, 2 * t
        flow = 0
        while flow < limit:
            prev = {source: source}
            queue = deque([source])
            while queue and sink not in prev:
                x = queue.popleft()
                for y, cap in res[x].items():
                    if cap > 0 and y not in prev:
                        prev[y] = x
                        queue.append(y)
            if sink not in prev:
                break
            y = sink
            while y != source:
                x = prev[y]
                res[x][y] -= 1
                res[y][x] += 1
                y = x
            flow += 1
        return flow


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection on 0..n-1; ``image[v]`` is where v is sent."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation of 0..{len(image) - 1}: {image}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.image)
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """The permutation applying `other` first, then self."""
        if len(other) != len(self):
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.image[w] for w in other.image))


@dataclass(frozen=True, slots=True)
class Colouring:
    """An ordered partition of 0..n-1 into non-empty colour cells."""

    cells: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        cells = tuple(frozenset(c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        seen: set[int] = set()
        total = 0
        for i, cell in enumerate(cells):
            if not cell:
                raise ValueError(f"cell {i} is empty")
            if cell & seen:
                raise ValueError(f"cell {i} overlaps an earlier cell")
            seen |= cell
            total += len(cell)
        if seen != set(range(total)):
            raise ValueError(f"cells do not partition 0..{total - 1}")

    @classmethod
    def unit(cls, n: int) -> Colouring:
        """The single-cell colouring of 0..n-1."""
        if n < 1:
            raise ZeroVertexError("the unit colouring needs at least one vertex")
        return cls((frozenset(range(n)),))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    def cell_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)


def permute_graph(graph: Graph, sigma: Permutation) -> Graph:
    """The graph with edge {sigma(u), sigma(v)} for every edge {u, v}."""
    if len(sigma) != graph.n:
        raise ValueError(f"permutation length {len(sigma)} != vertex count {graph.n}")
    image = sigma.image
    rows = [0] * graph.n
    for v, row in enumerate(graph.rows):
        new_row = 0
        u = 0
        while row:
            if row & 1:
                new_row |= 1 << image[u]
            row >>= 1
            u += 1
        rows[image[v]] = new_row
    return Graph(graph.n, tuple(rows))


def permute_colouring(sigma: Permutation, colouring: Colouring) -> Colouring:
    """Maps each cell through sigma, keeping cell order."""
    if len(sigma) != colouring.n:
        raise ValueError(f"permutation length {len(sigma)} != colouring size {colouring.n}")
    return Colouring(tuple(frozenset(sigma.image[v] for v in cell) for cell in colouring.cells))


def is_colour_preserving(sigma: Permutation, colouring: Colouring) -> bool:
    """True iff sigma maps every colour cell onto itself."""
    return permute_colouring(sigma, colouring).cells == colouring.cells


def normalize_colouring(colouring: Colouring) -> Colouring:
    """The colouring with the same cell sizes whose cells are consecutive blocks.

    Cell i becomes {s, ..., s + |cell i| - 1} where s is the total size of the
    earlier cells.
    """
    cells = []
    start = 0
    for size in colouring.cell_sizes():
        cells.append(frozenset(range(start, start + size)))
        start += size
    return Colouring(tuple(cells))


def component_masks(n: int, rows: Sequence[int]) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest member."""
    full = (1 << n) - 1
    seen = 0
    comps = []
    while seen != full:
        unseen = ~seen & full
        frontier = unseen & -unseen
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= rows[b.bit_length() - 1]
                m ^= b
            frontier = nxt & ~comp
        seen |= comp
        comps.append(comp)
    return comps


def bipartition_masks(n: int, rows: Sequence[int]) -> list[tuple[int, int]] | None:
    """Per-component (side_a, side_b) bitmask pairs, or None if not bipartite.

    Each component's smallest vertex lands in side_a, so the result is
    deterministic.
    """
    sides = []
    for comp in component_masks(n, rows):
        start = comp & -comp
        side_a = start
        side_b = 0
        frontier = start
        frontier_in_a = True
        while frontier:
            nbrs = 0
            m = frontier
            while m:
                bit = m & -m
                nbrs |= rows[bit.bit_length() - 1]
                m ^= bit
            nbrs &= comp
            if frontier_in_a:
                if nbrs & side_a:
                    return None
                new = nbrs & ~side_b
                side_b |= new
            else:
                if nbrs & side_b:
                    return None
                new = nbrs & ~side_a
                side_a |= new
            frontier = new
            frontier_in_a = not frontier_in_a
        sides.append((side_a, side_b))
    return sides


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b
