"""Satisfiability solvers: an exhaustive oracle and a deterministic DPLL.

Both solvers exist to cross-check constructions at desk scale, not to
compete: no clause learning, no preprocessing beyond clause
canonicalization.
"""

from __future__ import annotations

from .cnf import Assignment, CnfFormula, clause_sort_key, evaluate

DEFAULT_ORACLE_LIMIT = 20


class OracleLimitError(RuntimeError):
    """Alphabet too large for exhaustive enumeration."""


def iter_assignments(variables):
    """Yield all assignments over the variables in binary counting order.

    Bit i of the counter (least significant bit first) drives the i-th
    smallest variable, so the all-false assignment comes first.
    """
    order = sorted(variables)
    for counter in range(1 << len(order)):
        yield frozenset(v for i, v in enumerate(order) if counter >> i & 1)


def _check_limit(formula: CnfFormula, limit: int) -> None:
    if len(formula.alphabet) > limit:
        raise OracleLimitError(
            f"{len(formula.alphabet)} variables exceed the oracle limit of {limit}"
        )


def solve_brute(formula: CnfFormula, limit: int = DEFAULT_ORACLE_LIMIT) -> Assignment | None:
    """First satisfying assignment in enumeration order, or None if unsatisfiable."""
    _check_limit(formula, limit)
    for assignment in iter_assignments(formula.alphabet):
        if evaluate(formula, assignment):
            return assignment
    return None


def count_models(formula: CnfFormula, limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    """Number of satisfying assignments over the declared alphabet."""
    _check_limit(formula, limit)
    return sum(1 for a in iter_assignments(formula.alphabet) if evaluate(formula, a))


def solve_dpll(formula: CnfFormula) -> Assignment | None:
    return solve_dpll_stats(formula)[0]


def solve_dpll_stats(formula: CnfFormula) -> tuple[Assignment | None, int]:
    """DPLL with unit propagation; returns (model, work).

    Branching is deterministic: lowest unassigned variable id first,
    positive polarity first.  ``work`` counts decisions plus unit
    propagations, which is the solver-step currency used by the hint
    reuse measurements.
    """
    ordered = sorted(formula.clauses, key=clause_sort_key)
    work = 0

    def scan(assign):
        # Single pass over the clauses: detect conflicts, find the first
        # unit literal, and track the lowest branchable variable.
        unit = None
        branch = None
        satisfied = True
        for cl in ordered:
            cl_sat = False
            unassigned = []
            for lit in cl:
                val = assign.get(abs(lit))
                if val is None:
                    unassigned.append(lit)
                elif val == (lit > 0):
                    cl_sat = True
                    break
            if cl_sat:
                continue
            if not unassigned:
                return "conflict", None, None
            satisfied = False
            if unit is None and len(unassigned) == 1:
                unit = unassigned[0]
            low = min(abs(lit) for lit in unassigned)
            if branch is None or low < branch:
                branch = low
        if satisfied:
            return "sat", None, None
        return "open", unit, branch

    def search(assign):
        nonlocal work
        while True:
            state, unit, branch = scan(assign)
            if state == "conflict":
                return None
            if state == "sat":
                return frozenset(v for v, b in assign.items() if b)
            if unit is None:
                break
            assign[abs(unit)] = unit > 0
            work += 1
        for value in (True, False):
            work += 1
            child = dict(assign)
            child[branch] = value
            model = search(child)
            if model is not None:
                return model
        return None

    return search({}), work
