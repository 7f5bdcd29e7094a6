"""Canonical labelling by individualization and equitable refinement.

The search refines the input colouring to the coarsest equitable one, then
repeatedly individualizes each member of the first smallest non-singleton
cell and recurses.  Every discrete colouring (leaf) reads off a candidate
relabelling; the canonical graph is the candidate whose upper-triangle
bit-vector is lexicographically greatest.  Automorphisms discovered when two
leaves produce the same candidate prune sibling branches; pruning never
changes the result, only how many leaves are visited.

Refinement is deterministic: splitter cells are taken from a FIFO worklist
seeded with the cells left to right, a splitting cell is replaced in place by
its fragments in ascending neighbour-count order, and new fragments join the
back of the worklist.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import codec
from .core import Colouring, Graph, Permutation, ZeroVertexError

Invariant = Callable[[Graph, Colouring, int], object]


@dataclass(frozen=True, slots=True)
class CanonResult:
    """Outcome of a canonical labelling search."""

    canonical_graph: Graph
    labelling: Permutation
    automorphism_generators: tuple[Permutation, ...]
    leaf_count: int


def _refine_cells(rows: Sequence[int], cells: list[list[int]], alpha: deque[int]) -> None:
    """Refine cells in place to the coarsest equitable partition.

    alpha holds splitter masks still to be processed.
    """
    bc = int.bit_count
    while alpha:
        smask = alpha.popleft()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            first = bc(rows[cell[0]] & smask)
            for v in cell:
                if bc(rows[v] & smask) != first:
                    break
            else:
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault(bc(rows[v] & smask), []).append(v)
            frags = [groups[count] for count in sorted(groups)]
            cells[i : i + 1] = frags
            for frag in frags:
                fmask = 0
                for v in frag:
                    fmask |= 1 << v
                alpha.append(fmask)
            i += len(frags)


def _split_by_invariant(graph: Graph, cells: list[list[int]], invariant: Invariant) -> bool:
    """One pass of invariant-based cell splitting; True if anything split."""
    colouring = Colouring(tuple(frozenset(c) for c in cells))
    changed = False
    i = 0
    while i < len(cells):
        cell = cells[i]
        if len(cell) == 1:
            i += 1
            continue
        groups: dict[object, list[int]] = {}
        for v in cell:
            groups.setdefault(invariant(graph, colouring, v), []).append(v)
        if len(groups) == 1:
            i += 1
            continue
        frags = [groups[key] for key in sorted(groups)]
        cells[i : i + 1] = frags
        i += len(frags)
        changed = True
    return changed


def _refine_full(
    rows: Sequence[int],
    cells: list[list[int]],
    alpha: deque[int],
    graph: Graph | None,
    invariant: Invariant | None,
) -> None:
    _refine_cells(rows, cells, alpha)
    if invariant is None:
        return
    assert graph is not None
    while _split_by_invariant(graph, cells, invariant):
        _refine_cells(rows, cells, deque(_cell_masks(cells)))


def _cell_masks(cells: Iterable[list[int]]) -> list[int]:
    masks = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        masks.append(m)
    return masks


def _search(
    n: int,
    rows: Sequence[int],
    init_cells: list[list[int]],
    prune: bool = True,
    graph: Graph | None = None,
    invariant: Invariant | None = None,
) -> tuple[int, list[int], list[tuple[int, ...]], int]:
    """Run the canonical search; returns (best key, best order, generators, leaves)."""
    total_bits = n * (n - 1) // 2
    gens: list[tuple[int, ...]] = []
    gen_seen: set[tuple[int, ...]] = set()
    best_key = -1
    best_order: list[int] = []
    leaf_count = 0

    def process_leaf(cells: list[list[int]]) -> None:
        nonlocal best_key, best_order, leaf_count
        leaf_count += 1
        order = [c[0] for c in cells]
        key = 0
        for j in range(1, n):
            rj = rows[order[j]]
            for i in range(j):
                key = (key << 1) | ((rj >> order[i]) & 1)
        if key > best_key:
            best_key = key
            best_order = order
        elif key == best_key:
            sigma = [0] * n
            for j in range(n):
                sigma[best_order[j]] = order[j]
            sig = tuple(sigma)
            if sig not in gen_seen:
                gen_seen.add(sig)
                gens.append(sig)

    def orbit_reaches(v: int, targets: list[int], base: list[int]) -> bool:
        relevant = [g for g in gens if all(g[b] == b for b in base)]
        if not relevant:
            return False
        goal = set(targets)
        orbit = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for g in relevant:
                y = g[x]
                if y in goal:
                    return True
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        return False

    def recurse(cells: list[list[int]], base: list[int]) -> None:
        target = -1
        target_size = n + 1
        lead = 0
        counting_lead = True
        for idx, cell in enumerate(cells):
            size = len(cell)
            if size == 1 and counting_lead:
                lead += 1
                continue
            counting_lead = False
            if 1 < size < target_size:
                target = idx
                target_size = size
        if target < 0:
            process_leaf(cells)
            return
        if prune and best_key >= 0 and lead >= 2:
            pk = 0
            for j in range(1, lead):
                rj = rows[cells[j][0]]
                for i in range(j):
                    pk = (pk << 1) | ((rj >> cells[i][0]) & 1)
            if pk < best_key >> (total_bits - lead * (lead - 1) // 2):
                return
        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            if prune and explored and orbit_reaches(v, explored, base):
                continue
            child = [list(c) for c in cells]
            child[target : target + 1] = [[v], [w for w in cell if w != v]]
            _refine_full(rows, child, deque([1 << v]), graph, invariant)
            base.append(v)
            recurse(child, base)
            base.pop()
            explored.append(v)

    cells = [sorted(c) for c in init_cells]
    _refine_full(rows, cells, deque(_cell_masks(cells)), graph, invariant)
    recurse(cells, [])
    return best_key, best_order, gens, leaf_count


def _canon_key(n: int, rows: Sequence[int]) -> int:
    """Canonical upper-triangle key of a raw adjacency, unit colouring."""
    return _search(n, rows, [list(range(n))])[0]


def _canon_key_and_gens(n: int, rows: Sequence[int]) -> tuple[int, list[tuple[int, ...]]]:
    key, _, gens, _ = _search(n, rows, [list(range(n))])
    return key, gens


def _cells_for(graph: Graph, colouring: Colouring | None) -> list[list[int]]:
    if colouring is None:
        return [list(range(graph.n))]
    if colouring.n != graph.n:
        raise ValueError(f"colouring covers {colouring.n} vertices, graph has {graph.n}")
    return [sorted(c) for c in colouring.cells]


def refine(graph: Graph, colouring: Colouring | None = None, invariant: Invariant | None = None) -> Colouring:
    """The coarsest equitable colouring finer than the input.

    Equitable means that for every pair of result cells all vertices of the
    first have the same number of neighbours in the second.  Passing an
    ``invariant`` function (graph, colouring, vertex) -> orderable key splits
    cells by key between refinement rounds; the default is pure degree
    refinement.
    """
    if graph.n == 0:
        raise ZeroVertexError("cannot refine a colouring of the zero-vertex graph")
    cells = _cells_for(graph, colouring)
    _refine_full(graph.rows, cells, deque(_cell_masks(cells)), graph, invariant)
    return Colouring(tuple(frozenset(c) for c in cells))


def canonical_label(
    graph: Graph,
    colouring: Colouring | None = None,
    *,
    prune: bool = True,
    invariant: Invariant | None = None,
) -> CanonResult:
    """Canonical form of a coloured graph.

    The result is invariant under relabelling: permuting the graph and its
    colouring identically yields the same canonical graph.  The labelling
    maps the input colouring onto consecutive blocks, and the returned
    automorphism generators fix both graph and colouring.  ``prune=False``
    disables automorphism and partial-candidate pruning (same result, more
    leaves explored).
    """
    if graph.n == 0:
        raise ZeroVertexError("cannot canonically label the zero-vertex graph")
    cells = _cells_for(graph, colouring)
    key, order, gens, leaves = _search(graph.n, graph.rows, cells, prune, graph, invariant)
    image = [0] * graph.n
    for position, v in enumerate(order):
        image[v] = position
    return CanonResult(
        canonical_graph=Graph(graph.n, tuple(codec.rows_from_key(graph.n, key))),
        labelling=Permutation(tuple(image)),
        automorphism_generators=tuple(Permutation(g) for g in gens),
        leaf_count=leaves,
    )


def are_isomorphic(
    g: Graph,
    h: Graph,
    g_colouring: Colouring | None = None,
    h_colouring: Colouring | None = None,
) -> bool:
    """Whether some colour-preserving permutation maps g onto h.

    Colourings default to the single-cell colouring, making this plain graph
    isomorphism.  Colourings with different cell-size sequences cannot be
    mapped onto each other, so the answer is False without a search.
    """
    if g.n == 0 or h.n == 0:
        raise ZeroVertexError("cannot test isomorphism of zero-vertex graphs")
    if g.n != h.n:
        return False
    g_cells = _cells_for(g, g_colouring)
    h_cells = _cells_for(h, h_colouring)
    if [len(c) for c in g_cells] != [len(c) for c in h_cells]:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return _search(g.n, g.rows, g_cells)[0] == _search(h.n, h.rows, h_cells)[0]


def automorphism_generators(graph: Graph, colouring: Colouring | None = None) -> list[Permutation]:
    """Permutations fixing the graph and colouring, found during the search.

    The generators span a subgroup of the colour-preserving automorphism
    group; generating the whole group is not guaranteed.
    """
    if graph.n == 0:
        raise ZeroVertexError("the zero-vertex graph has no automorphisms")
    cells = _cells_for(graph, colouring)
    _, _, gens, _ = _search(graph.n, graph.rows, cells)
    return [Permutation(g) for g in gens]


def remove_isomorphs(items: Iterable[Graph | str]) -> list[Graph | str]:
    """First representative of each isomorphism class, in input order.

    Items may be Graph values or Graph6/Sparse6 strings (mixed is fine);
    survivors keep their original form.  Decode failures are re-raised with
    the offending item's position.
    """
    kept: list[Graph | str] = []
    seen: set[tuple[int, int]] = set()
    for index, item in enumerate(items):
        try:
            graph = item if isinstance(item, Graph) else codec.decode(item)
            if graph.n == 0:
                raise ZeroVertexError("zero-vertex graph")
            key = (graph.n, _canon_key(graph.n, graph.rows))
        except ValueError as exc:
            raise type(exc)(f"item {index}: {exc}") from exc
        if key not in seen:
            seen.add(key)
            kept.append(item)
    return kept
