"""Shared oracles and generators for the test suite.

Everything here is deliberately independent of the canonical search: the
isomorphism oracles enumerate permutations outright so they can sit on the
other side of dual-route checks.
"""

from __future__ import annotations

import itertools
import os
import random
import subprocess
import sys
from typing import Iterator

from gcanon.core import Graph, Permutation


def run_module_cli(args, stdin_text="", env_extra=None):
    """Run `python -m gcanon ...` with src/ on the path."""
    env = dict(os.environ)
    env["PYTHONPATH"] = os.pathsep.join(
        [os.path.join(os.path.dirname(__file__), "..", "src"), env.get("PYTHONPATH", "")]
    )
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "gcanon", *args],
        input=stdin_text,
        capture_output=True,
        text=True,
        env=env,
    )


def all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def all_labelled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on n vertices (2^C(n,2) of them)."""
    pairs = all_pairs(n)
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[t] for t in range(len(pairs)) if (bits >> t) & 1])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [e for e in all_pairs(n) if rng.random() < p])


def random_permutation(rng: random.Random, n: int) -> Permutation:
    image = list(range(n))
    rng.shuffle(image)
    return Permutation(tuple(image))


def random_colouring(rng: random.Random, n: int) -> "Colouring":
    from gcanon.core import Colouring

    vertices = list(range(n))
    rng.shuffle(vertices)
    cells = []
    while vertices:
        size = rng.randint(1, len(vertices))
        cells.append(vertices[:size])
        vertices = vertices[size:]
    return Colouring(tuple(cells))


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """All-permutations isomorphism search (early exit per permutation)."""
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    edges = g.edges()
    hrows = h.rows
    for perm in itertools.permutations(range(g.n)):
        for u, v in edges:
            if not (hrows[perm[u]] >> perm[v]) & 1:
                break
        else:
            return True
    return False


def brute_force_colour_isomorphic(g, h, g_colouring, h_colouring) -> bool:
    """Searches permutations mapping cell i of g's colouring onto cell i of h's."""
    g_cells = [sorted(c) for c in g_colouring.cells]
    h_cells = [sorted(c) for c in h_colouring.cells]
    if [len(c) for c in g_cells] != [len(c) for c in h_cells]:
        return False
    edges = g.edges()
    m = g.num_edges()
    if m != h.num_edges():
        return False
    for choice in itertools.product(*[itertools.permutations(c) for c in h_cells]):
        image = [0] * g.n
        for sources, targets in zip(g_cells, choice):
            for v, w in zip(sources, targets):
                image[v] = w
        for u, v in edges:
            if not (h.rows[image[u]] >> image[v]) & 1:
                break
        else:
            return True
    return False


def closure_order(generators, n: int) -> int:
    """Order of the permutation group generated by the given images."""
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    gens = [tuple(g.image) if hasattr(g, "image") else tuple(g) for g in generators]
    while frontier:
        new = []
        for element in frontier:
            for g in gens:
                product = tuple(g[element[v]] for v in range(n))
                if product not in seen:
                    seen.add(product)
                    new.append(product)
        frontier = new
    return len(seen)
