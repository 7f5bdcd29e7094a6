"""Property-constraint filters over graphs.

A filter is a conjunction of constraints, each naming a property, a value
(bool, int, or inclusive range), and an optional negation.  Connectivity
follows the deletion-based convention: value 0 means disconnected, and a
positive k means the graph is connected and some k vertices (but no k-1)
disconnect it.  The single-vertex graph is connected and therefore matches
no Connectivity value at all, even though its vertex connectivity is 0 by
the complete-graph convention.

The accompanying text grammar (used by the CLI) is a comma-separated list of
``Name=value`` items, where value is an integer, an inclusive range
``lo..hi``, or ``true``/``false``, and a ``!`` before the name negates the
constraint: ``NumCycles=0,!Connectivity=0`` keeps exactly the trees.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import codec
from .core import Graph, ZeroVertexError, bits

BOOLEAN_PROPERTIES = frozenset({"Bipartite", "Regular", "Connected"})
INTEGER_PROPERTIES = frozenset(
    {"NumVertices", "NumEdges", "MinDegree", "MaxDegree", "Connectivity", "NumCycles", "Girth"}
)
PROPERTY_NAMES = BOOLEAN_PROPERTIES | INTEGER_PROPERTIES


class FilterSpecError(ValueError):
    """A malformed filter specification."""


@dataclass(frozen=True, slots=True)
class PropertyConstraint:
    """One clause: property name, target value or inclusive range, negation."""

    name: str
    value: bool | int | tuple[int, int]
    negate: bool = False

    def __post_init__(self) -> None:
        if self.name not in PROPERTY_NAMES:
            raise FilterSpecError(f"unknown property {self.name!r}")
        value = self.value
        if self.name in BOOLEAN_PROPERTIES:
            if not isinstance(value, bool):
                raise FilterSpecError(f"{self.name} takes a boolean, got {value!r}")
        elif isinstance(value, bool):
            raise FilterSpecError(f"{self.name} takes an integer or range, got {value!r}")
        elif isinstance(value, int):
            pass
        elif (
            isinstance(value, tuple)
            and len(value) == 2
            and all(isinstance(b, int) and not isinstance(b, bool) for b in value)
        ):
            if value[0] > value[1]:
                raise FilterSpecError(f"{self.name} range has lo > hi: {value}")
        else:
            raise FilterSpecError(f"{self.name} takes an integer or range, got {value!r}")

    def bounds(self) -> tuple[int, int]:
        if isinstance(self.value, tuple):
            return self.value
        assert isinstance(self.value, int)
        return self.value, self.value


@dataclass(frozen=True, slots=True)
class GraphFilter:
    """A conjunction of property constraints; empty means accept everything."""

    constraints: tuple[PropertyConstraint, ...] = ()

    def __post_init__(self) -> None:
        constraints = tuple(self.constraints)
        object.__setattr__(self, "constraints", constraints)
        names = [c.name for c in constraints]
        if len(names) != len(set(names)):
            raise FilterSpecError("more than one constraint for the same property")


def build_graph_filter(spec: Iterable[tuple[str, object]]) -> GraphFilter:
    """Build a filter from (key, value) pairs.

    Keys are property names or ``Negate<name>``; a negate key needs its base
    key present and a boolean value.
    """
    values: dict[str, object] = {}
    negates: dict[str, bool] = {}
    for key, value in spec:
        if key.startswith("Negate") and key[len("Negate") :] in PROPERTY_NAMES:
            base = key[len("Negate") :]
            if base in negates:
                raise FilterSpecError(f"duplicate key {key!r}")
            if not isinstance(value, bool):
                raise FilterSpecError(f"{key} takes a boolean, got {value!r}")
            negates[base] = value
        elif key in PROPERTY_NAMES:
            if key in values:
                raise FilterSpecError(f"duplicate key {key!r}")
            values[key] = value
        else:
            raise FilterSpecError(f"unknown key {key!r}")
    for base in negates:
        if base not in values:
            raise FilterSpecError(f"Negate{base} without a {base} constraint")
    constraints = tuple(
        PropertyConstraint(
            name,
            value if isinstance(value, (bool, int)) else _as_range(name, value),
            negates.get(name, False),
        )
        for name, value in values.items()
    )
    return GraphFilter(constraints)


def _as_range(name: str, value: object) -> tuple[int, int]:
    if isinstance(value, Sequence) and len(value) == 2:
        lo, hi = value
        if all(isinstance(b, int) and not isinstance(b, bool) for b in (lo, hi)):
            return int(lo), int(hi)
    raise FilterSpecError(f"{name} takes an integer or range, got {value!r}")


def parse_filter_spec(text: str) -> GraphFilter:
    """Parse the CLI filter grammar; blank text accepts every graph."""
    pairs: list[tuple[str, object]] = []
    for raw in text.split(","):
        item = raw.strip()
        if not item:
            if text.strip():
                raise FilterSpecError(f"empty filter item in {text!r}")
            continue
        if "=" not in item:
            raise FilterSpecError(f"expected Name=value in {item!r}")
        name, _, value_text = item.partition("=")
        name = name.strip()
        negated = name.startswith("!")
        if negated:
            name = name[1:].strip()
        if name not in PROPERTY_NAMES:
            raise FilterSpecError(f"unknown property in {item!r}")
        pairs.append((name, _parse_value(item, value_text.strip())))
        if negated:
            pairs.append((f"Negate{name}", True))
    return build_graph_filter(pairs)


def _parse_value(item: str, text: str) -> bool | int | tuple[int, int]:
    if text in ("true", "false"):
        return text == "true"
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        try:
            return int(lo_text), int(hi_text)
        except ValueError:
            raise FilterSpecError(f"bad range in {item!r}") from None
    try:
        return int(text)
    except ValueError:
        raise FilterSpecError(f"bad value in {item!r}") from None


def girth(graph: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    Breadth-first search from every vertex; each non-tree edge bounds the
    girth by dist(u) + dist(w) + 1, and the minimum over all roots is exact.
    """
    best: int | None = None
    for root in range(graph.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                continue
            for w in bits(graph.rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def _connectivity_matches(graph: Graph, lo: int, hi: int) -> bool:
    # 0-connected means disconnected; k-connected (k > 0) means some k
    # deletions, but no k-1, disconnect the graph.  The one-vertex graph is
    # connected and cannot be disconnected, so it matches no value, even
    # though vertex_connectivity() gives it 0 by the complete-graph rule.
    if not graph.is_connected():
        return lo <= 0 <= hi
    if graph.n == 1:
        return False
    if hi < 1:
        return False  # connected graphs on n >= 2 vertices have connectivity >= 1
    return lo <= graph.vertex_connectivity() <= hi


def _matches(constraint: PropertyConstraint, graph: Graph) -> bool:
    name = constraint.name
    if name in BOOLEAN_PROPERTIES:
        if name == "Bipartite":
            actual = graph.is_bipartite()
        elif name == "Regular":
            degrees = graph.degree_sequence()
            actual = degrees[0] == degrees[-1]
        else:
            actual = graph.is_connected()
        result = actual is constraint.value
    else:
        lo, hi = constraint.bounds()
        if name == "Connectivity":
            result = _connectivity_matches(graph, lo, hi)
        elif name == "Girth":
            g = girth(graph)
            result = g is not None and lo <= g <= hi
        else:
            value = {
                "NumVertices": graph.n,
                "NumEdges": graph.num_edges(),
                "MinDegree": graph.degree_sequence()[0],
                "MaxDegree": graph.degree_sequence()[-1],
                "NumCycles": graph.circuit_rank(),
            }[name]
            result = lo <= value <= hi
    return result != constraint.negate


def evaluate(graph_filter: GraphFilter, graph: Graph) -> bool:
    """Whether the graph satisfies every constraint of the filter."""
    if graph.n == 0:
        raise ZeroVertexError("cannot evaluate filters on the zero-vertex graph")
    return all(_matches(c, graph) for c in graph_filter.constraints)


def filter_graphs(items: Iterable[Graph | str], graph_filter: GraphFilter) -> list[Graph | str]:
    """The subsequence of items (graphs or graph strings) passing the filter.

    Decode and evaluation failures are re-raised with the item's position.
    """
    kept: list[Graph | str] = []
    for index, item in enumerate(items):
        try:
            graph = item if isinstance(item, Graph) else codec.decode(item)
            if evaluate(graph_filter, graph):
                kept.append(item)
        except ValueError as exc:
            raise type(exc)(f"item {index}: {exc}") from exc
    return kept
