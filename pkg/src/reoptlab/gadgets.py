"""Reduction from small-clause CNF to vertex cover, built for cheap edits.

Each variable x contributes six nodes: the literal nodes x and -x joined
by an edge, plus reserve nodes x', x'', -x', -x'' that make unit-clause
edits expressible as single edge additions.  A clause of two or three
literals becomes a clique whose members attach to their literal nodes; a
unit clause is just the edge between its literal node and the literal's
first reserve node.  With n variables, m literal occurrences and r
clauses, the graph has a vertex cover of n + m - r nodes exactly when the
formula is satisfiable.

Edits keep that correspondence:

* adding the unit clause l adds the edge (l, l') and leaves the budget
  alone (the clause contributes one occurrence and one clause, a wash);
* removing the unit clause l adds the edge (l', l'') and raises the
  budget by one, freeing l' to neutralize the forcing edge (l, l');
* re-adding a previously removed unit deletes its (l', l'') edge again,
  restoring the original graph and budget, since the forcing edge is
  still in place and merely needs to bite.

``build_full_gadget`` instantiates the graph of *all* three-literal
clauses over an alphabet; ``project_formula`` then selects any concrete
formula by deleting clause-to-literal edges only, so every formula over
the alphabet is a subgraph of one fixed graph with one fixed budget.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Mapping

from .cnf import ChangeSet, Clause, CnfFormula, clause, clause_sort_key, cnf, is_tautology
from .dimacs import parse_dimacs, serialize_dimacs
from .graphs import Graph, add_edges, edge, graph, remove_edges

ROLE_LITERAL = "literal"
ROLE_PRIME = "prime"
ROLE_DOUBLE_PRIME = "double_prime"
ROLE_CLAUSE = "clause_member"


class ClauseTooLargeError(ValueError):
    """Only clauses of one to three literals can be translated."""


class TautologyError(ValueError):
    """Tautological clauses have no gadget."""


class UnitAlreadyPresentError(ValueError):
    pass


class UnitNotPresentError(ValueError):
    pass


class ClauseOutsideUniverseError(ValueError):
    pass


class UnknownVariableError(ValueError):
    """The literal's variable has no nodes in this gadget."""


def literal_node(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"-x{-lit}"


def prime_node(lit: int) -> str:
    return literal_node(lit) + "'"


def double_prime_node(lit: int) -> str:
    return literal_node(lit) + "''"


def clause_node(index: int, position: int) -> str:
    return f"c{index}_{position}"


@dataclass(frozen=True)
class Gadget:
    graph: Graph
    budget: int
    roles: Mapping[str, str]
    source: CnfFormula


def ordered_clauses(formula: CnfFormula) -> list[Clause]:
    return sorted(formula.clauses, key=clause_sort_key)


def build_gadget(f: CnfFormula) -> Gadget:
    """Translate a formula (clauses of 1..3 literals, no tautologies)."""
    for cl in f.clauses:
        if not 1 <= len(cl) <= 3:
            raise ClauseTooLargeError(f"clause {cl} has {len(cl)} literals, need 1..3")
        if is_tautology(cl):
            raise TautologyError(f"clause {cl} is tautological")

    nodes: list[str] = []
    edges: list[tuple[str, str]] = []
    roles: dict[str, str] = {}
    for v in sorted(f.alphabet):
        for lit in (v, -v):
            nodes.append(literal_node(lit))
            roles[literal_node(lit)] = ROLE_LITERAL
            nodes.append(prime_node(lit))
            roles[prime_node(lit)] = ROLE_PRIME
            nodes.append(double_prime_node(lit))
            roles[double_prime_node(lit)] = ROLE_DOUBLE_PRIME
        edges.append(edge(literal_node(v), literal_node(-v)))

    occurrences = 0
    for index, cl in enumerate(ordered_clauses(f), start=1):
        occurrences += len(cl)
        if len(cl) == 1:
            edges.append(edge(literal_node(cl[0]), prime_node(cl[0])))
            continue
        members = [clause_node(index, pos) for pos in range(1, len(cl) + 1)]
        for member in members:
            nodes.append(member)
            roles[member] = ROLE_CLAUSE
        edges.extend(edge(a, b) for a, b in combinations(members, 2))
        edges.extend(edge(member, literal_node(lit)) for member, lit in zip(members, cl))

    budget = len(f.alphabet) + occurrences - len(f.clauses)
    return Gadget(graph(nodes, edges), budget, roles, f)


def gadget_add_unit(g: Gadget, lit: int) -> Gadget:
    """Add the unit clause ``lit``: one new edge, budget unchanged.

    Re-adding a unit that was removed earlier instead cancels the removal
    edge and gives the budget increment back.
    """
    if abs(lit) not in g.source.alphabet:
        raise UnknownVariableError(f"variable {abs(lit)} is not in the gadget alphabet")
    unit = clause(lit)
    if unit in g.source.clauses:
        raise UnitAlreadyPresentError(f"unit clause {unit} already present")
    forcing = edge(literal_node(lit), prime_node(lit))
    relaxing = edge(prime_node(lit), double_prime_node(lit))
    if forcing not in g.graph.edges:
        new_graph = add_edges(g.graph, [forcing])
        new_budget = g.budget
    else:
        if relaxing not in g.graph.edges:
            raise AssertionError("inconsistent gadget: forcing edge without its unit or removal")
        new_graph = remove_edges(g.graph, [relaxing])
        new_budget = g.budget - 1
    new_source = CnfFormula(g.source.alphabet, g.source.clauses | {unit})
    return Gadget(new_graph, new_budget, g.roles, new_source)


def gadget_remove_unit(g: Gadget, lit: int) -> Gadget:
    """Remove the unit clause ``lit``: one new edge, budget raised by one."""
    unit = clause(lit)
    if unit not in g.source.clauses:
        raise UnitNotPresentError(f"unit clause {unit} not present")
    relaxing = edge(prime_node(lit), double_prime_node(lit))
    if relaxing in g.graph.edges:
        raise AssertionError("inconsistent gadget: unit present with its removal edge")
    new_graph = add_edges(g.graph, [relaxing])
    new_source = CnfFormula(g.source.alphabet, g.source.clauses - {unit})
    return Gadget(new_graph, g.budget + 1, g.roles, new_source)


def clause_universe(alphabet) -> list[Clause]:
    """All non-tautological clauses of three distinct variables."""
    out = []
    for combo in combinations(sorted(alphabet), 3):
        for signs in product((1, -1), repeat=3):
            out.append(clause(*(s * v for s, v in zip(signs, combo))))
    return out


def build_full_gadget(alphabet) -> Gadget:
    """Gadget of every three-literal clause over the alphabet.

    The node count depends only on the alphabet size, so any formula over
    the alphabet can be carved out of this one graph by edge deletions.
    """
    universe = clause_universe(alphabet)
    return build_gadget(cnf(universe, alphabet=alphabet))


def project_formula(full: Gadget, f: CnfFormula) -> Graph:
    """Select a formula inside a full gadget by deleting clause-literal edges.

    Edges between clause nodes and literal nodes are removed for every
    universe clause not in ``f``; cliques and variable edges stay, so the
    result is a subgraph of the full graph on the same nodes.  The cover
    threshold for the result is the full gadget's own budget: the graph
    has a cover of that size exactly when ``f`` is satisfiable.
    """
    universe = ordered_clauses(full.source)
    if any(len(cl) < 2 for cl in universe):
        raise ValueError("projection requires a clique-only clause universe")
    missing = f.clauses - full.source.clauses
    if missing:
        raise ClauseOutsideUniverseError(f"clauses outside the universe: {sorted(missing)}")
    doomed = []
    for index, cl in enumerate(universe, start=1):
        if cl in f.clauses:
            continue
        members = [clause_node(index, pos) for pos in range(1, len(cl) + 1)]
        doomed.extend(edge(member, literal_node(lit)) for member, lit in zip(members, cl))
    return remove_edges(full.graph, doomed)


def apply_unit_changes(g: Gadget, changes: ChangeSet) -> Gadget:
    """Apply a change set of unit clauses as a sequence of gadget edits."""
    out = g
    for cl in changes.deletions:
        if len(cl) != 1:
            raise ClauseTooLargeError(f"only unit clauses can be edited, got {cl}")
        out = gadget_remove_unit(out, cl[0])
    for cl in changes.additions:
        if len(cl) != 1:
            raise ClauseTooLargeError(f"only unit clauses can be edited, got {cl}")
        out = gadget_add_unit(out, cl[0])
    return out


def gadget_to_json(g: Gadget) -> str:
    """Canonical JSON with the source formula embedded as DIMACS text."""
    obj = {
        "source": serialize_dimacs(g.source),
        "budget": g.budget,
        "nodes": sorted(g.graph.nodes),
        "edges": [list(e) for e in sorted(g.graph.edges)],
        "roles": dict(sorted(g.roles.items())),
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def gadget_from_json(text: str) -> Gadget:
    obj = json.loads(text)
    try:
        g = Graph(frozenset(obj["nodes"]), frozenset(edge(u, v) for u, v in obj["edges"]))
        return Gadget(g, obj["budget"], dict(obj["roles"]), parse_dimacs(obj["source"]))
    except KeyError as exc:
        raise ValueError(f"missing gadget field: {exc}") from None
