"""Exhaustive enumeration of non-isomorphic graphs and seeded random sampling.

Enumeration grows graphs one vertex at a time: every class on k-1 vertices is
extended by attaching the new vertex to each possible neighbourhood, children
failing monotone restrictions (bipartiteness, edge budget) are pruned, and the
survivors are deduplicated by canonical form.  Connectivity and the minimum
edge count are checked only on the final level, since induced subgraphs of a
valid graph need not satisfy them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import canon, codec
from .core import Graph, ZeroVertexError, _check_size, bipartition_masks, component_masks


@dataclass(frozen=True, slots=True)
class GenOptions:
    """Restrictions for exhaustive generation."""

    only_connected: bool = False
    only_bipartite: bool = False
    min_edges: int | None = None
    max_edges: int | None = None

    def __post_init__(self) -> None:
        for name in ("min_edges", "max_edges"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")
        if self.min_edges is not None and self.max_edges is not None and self.min_edges > self.max_edges:
            raise ValueError(f"min_edges {self.min_edges} exceeds max_edges {self.max_edges}")


@dataclass(frozen=True, slots=True)
class RandomModel:
    """Parameters for Bernoulli edge sampling: each of the C(n,2) possible
    edges is included independently with probability p."""

    n: int
    count: int
    p: float
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n == 0:
            raise ZeroVertexError("cannot sample zero-vertex graphs")
        if self.n < 0:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        _check_size(self.n)
        if self.count < 0:
            raise ValueError(f"sample count must be non-negative, got {self.count}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"edge probability must be in [0, 1], got {self.p}")


def _submasks(mask: int) -> list[int]:
    out = []
    s = mask
    while True:
        out.append(s)
        if s == 0:
            return out
        s = (s - 1) & mask


def _apply_to_mask(g: tuple[int, ...], mask: int) -> int:
    out = 0
    while mask:
        b = mask & -mask
        out |= 1 << g[b.bit_length() - 1]
        mask ^= b
    return out


def _orbit_reps(masks, gens: list[tuple[int, ...]]) -> list[int]:
    # One neighbourhood per orbit under the parent's automorphisms; children
    # of orbit-equivalent neighbourhoods are isomorphic, so reps suffice.
    if not gens:
        return list(masks)
    seen: set[int] = set()
    reps = []
    for m in masks:
        if m in seen:
            continue
        reps.append(m)
        stack = [m]
        seen.add(m)
        while stack:
            x = stack.pop()
            for g in gens:
                y = _apply_to_mask(g, x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return reps


def _neighbourhood_masks(parent: tuple[int, ...], opts: GenOptions) -> list[int]:
    m = len(parent)
    if opts.only_bipartite:
        # The child stays bipartite iff within each parent component the new
        # neighbourhood sits wholly inside one side of a proper 2-colouring.
        sides = bipartition_masks(m, parent)
        assert sides is not None  # parents were generated bipartite
        masks = [0]
        for a, b in sides:
            choices = _submasks(a) + [s for s in _submasks(b) if s]
            masks = [acc | choice for acc in masks for choice in choices]
    else:
        masks = list(range(1 << m))
    if opts.max_edges is not None:
        budget = opts.max_edges - sum(r.bit_count() for r in parent) // 2
        masks = [mask for mask in masks if mask.bit_count() <= budget]
    return masks


def _passes_final(n: int, rows: list[int], opts: GenOptions) -> bool:
    if opts.only_connected and len(component_masks(n, rows)) != 1:
        return False
    if opts.min_edges is not None and sum(r.bit_count() for r in rows) // 2 < opts.min_edges:
        return False
    return True


def generate_graphs(n: int, opts: GenOptions | None = None) -> list[str]:
    """Graph6 strings of all non-isomorphic graphs on n vertices matching opts.

    One canonical representative per isomorphism class, sorted ascending as
    byte strings.  Output is deterministic.
    """
    if n == 0:
        raise ZeroVertexError("cannot generate zero-vertex graphs")
    if n < 0:
        raise ValueError(f"vertex count must be positive, got {n}")
    _check_size(n)
    opts = opts or GenOptions()

    keys = {0}  # the 1-vertex graph
    for k in range(2, n + 1):
        parents = [tuple(codec.rows_from_key(k - 1, key)) for key in sorted(keys)]
        keys = set()
        new_bit = 1 << (k - 1)
        for parent in parents:
            gens = canon._canon_key_and_gens(k - 1, parent)[1] if k > 2 else []
            for mask in _orbit_reps(_neighbourhood_masks(parent, opts), gens):
                child = [parent[i] | (new_bit if (mask >> i) & 1 else 0) for i in range(k - 1)]
                child.append(mask)
                keys.add(canon._canon_key(k, child))

    return [
        codec.graph6_from_key(n, key)
        for key in sorted(keys)
        if _passes_final(n, codec.rows_from_key(n, key), opts)
    ]


def generate_random_graphs(model: RandomModel) -> list[Graph]:
    """Independent Bernoulli-edge samples, fully determined by the seed.

    Draws come from ``random.Random(seed)`` (Mersenne Twister), one uniform
    variate per vertex pair in upper-triangle column order (0,1), (0,2),
    (1,2), (0,3), ...; a pair becomes an edge when the variate is below p.
    """
    rng = random.Random(model.seed)
    uniform = rng.random
    n, p = model.n, model.p
    out = []
    for _ in range(model.count):
        rows = [0] * n
        for j in range(1, n):
            bit = 1 << j
            for i in range(j):
                if uniform() < p:
                    rows[i] |= bit
                    rows[j] |= 1 << i
        out.append(Graph(n, tuple(rows)))
    return out
