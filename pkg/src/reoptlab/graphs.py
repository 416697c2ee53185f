"""Undirected graphs, vertex-cover checking and two exact cover solvers.

Node ids are opaque, whitespace-free string labels so that construction
roles stay directly addressable in tests and DOT output.  The exhaustive
minimum-cover search is the oracle; the budgeted branch-and-bound answers
the at-most-k decision on graphs too large for subset enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import InvalidHintError

DEFAULT_COVER_ORACLE_LIMIT = 24

Edge = tuple[str, str]


class UnknownNodeError(ValueError):
    """A referenced node is not part of the graph."""


class GraphTooLargeError(RuntimeError):
    """Node count exceeds the exhaustive-search limit."""


def edge(u: str, v: str) -> Edge:
    """Canonical unordered edge; self-loops are rejected."""
    if u == v:
        raise ValueError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    nodes: frozenset[str]
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"edge ({u!r}, {v!r}) is not in canonical order")
            if u not in self.nodes or v not in self.nodes:
                raise UnknownNodeError(f"edge ({u!r}, {v!r}) has an endpoint outside the node set")


def graph(nodes=(), edges=()) -> Graph:
    """Build a graph; endpoints are added to the node set automatically."""
    canonical = frozenset(edge(u, v) for u, v in edges)
    all_nodes = frozenset(nodes) | {n for e in canonical for n in e}
    return Graph(all_nodes, canonical)


def add_edges(g: Graph, pairs) -> Graph:
    canonical = frozenset(edge(u, v) for u, v in pairs)
    return Graph(g.nodes | {n for e in canonical for n in e}, g.edges | canonical)


def remove_edges(g: Graph, pairs) -> Graph:
    canonical = frozenset(edge(u, v) for u, v in pairs)
    return Graph(g.nodes, g.edges - canonical)


def is_cover(g: Graph, candidate) -> bool:
    """True iff every edge has at least one endpoint in the candidate set."""
    members = frozenset(candidate)
    unknown = members - g.nodes
    if unknown:
        raise UnknownNodeError(f"cover members outside the graph: {sorted(unknown)}")
    return all(u in members or v in members for u, v in g.edges)


class MinCover(NamedTuple):
    size: int
    cover: frozenset[str]


def min_cover_brute(g: Graph, limit: int = DEFAULT_COVER_ORACLE_LIMIT) -> MinCover:
    """Exhaustive minimum vertex cover, by subsets of increasing size.

    Among covers of minimum size the lexicographically least node set is
    returned, which makes oracle outputs reproducible golden values.
    """
    if len(g.nodes) > limit:
        raise GraphTooLargeError(f"{len(g.nodes)} nodes exceed the exhaustive limit of {limit}")
    order = sorted(g.nodes)
    edge_list = list(g.edges)
    for size in range(len(order) + 1):
        for combo in combinations(order, size):
            members = set(combo)
            if all(u in members or v in members for u, v in edge_list):
                return MinCover(size, frozenset(members))
    raise AssertionError("the full node set always covers")  # pragma: no cover


def decide_cover(g: Graph, budget: int) -> frozenset[str] | None:
    """A vertex cover of size at most ``budget``, or None if none exists."""
    return decide_cover_stats(g, budget)[0]


def decide_cover_stats(g: Graph, budget: int) -> tuple[frozenset[str] | None, int]:
    """Branch-and-bound at-most-k cover decision; returns (cover, nodes explored).

    Branching picks the highest-degree endpoint u of an uncovered edge
    (ties broken by label) and tries "u in the cover" before "u excluded,
    so all of u's neighbours are in the cover"; budget exhaustion prunes.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    adj: dict[str, set[str]] = {n: set() for n in g.nodes}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    chosen: list[str] = []
    explored = 0

    def detach(node):
        neighbours = adj.pop(node)
        for other in neighbours:
            adj[other].discard(node)
        return neighbours

    def attach(node, neighbours):
        adj[node] = neighbours
        for other in neighbours:
            adj[other].add(node)

    def search(k) -> bool:
        nonlocal explored
        explored += 1
        pick, degree = None, 0
        for node in sorted(adj):
            d = len(adj[node])
            if d > degree:
                pick, degree = node, d
        if pick is None:
            return True
        if k <= 0:
            return False
        neighbours = sorted(adj[pick])
        saved = detach(pick)
        chosen.append(pick)
        if search(k - 1):
            return True
        chosen.pop()
        attach(pick, saved)
        if len(neighbours) <= k:
            saved_all = [detach(n) for n in neighbours]
            chosen.extend(neighbours)
            if search(k - len(neighbours)):
                return True
            del chosen[-len(neighbours):]
            for node, nbrs in zip(reversed(neighbours), reversed(saved_all)):
                attach(node, nbrs)
        return False

    if search(budget):
        return frozenset(chosen), explored
    return None, explored


def warm_start_cover(g: Graph, old_cover, added_edges, budget: int) -> frozenset[str] | None:
    """Reuse a cover of the pre-change graph, falling back to a fresh decision.

    ``old_cover`` must cover the graph minus ``added_edges``.  When it also
    covers the added edges and fits the budget it is returned unchanged;
    otherwise the full graph is re-decided.
    """
    return warm_start_cover_stats(g, old_cover, added_edges, budget)[0]


def warm_start_cover_stats(g, old_cover, added_edges, budget: int):
    """Like ``warm_start_cover`` but returns (cover, hint_used, work_units)."""
    members = frozenset(old_cover)
    added = frozenset(edge(u, v) for u, v in added_edges)
    stray = added - g.edges
    if stray:
        raise ValueError(f"added edges not present in the graph: {sorted(stray)}")
    unknown = members - g.nodes
    if unknown:
        raise UnknownNodeError(f"cover members outside the graph: {sorted(unknown)}")
    base = g.edges - added
    if not all(u in members or v in members for u, v in base):
        raise InvalidHintError("old cover does not cover the pre-change graph")
    if len(members) <= budget and all(u in members or v in members for u, v in added):
        return members, True, len(added)
    cover, explored = decide_cover_stats(g, budget)
    return cover, False, explored


def serialize_edge_list(g: Graph) -> str:
    """Edge-list text: isolated nodes one per line, then "u v" pairs."""
    touched = {n for e in g.edges for n in e}
    lines = sorted(g.nodes - touched)
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_edge_list(text: str) -> Graph:
    nodes = set()
    edges = set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            nodes.add(parts[0])
        elif len(parts) == 2:
            edges.add(edge(parts[0], parts[1]))
        else:
            raise ValueError(f"malformed edge line: {line!r}")
    return graph(nodes, edges)
