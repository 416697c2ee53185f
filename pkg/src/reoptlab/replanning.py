"""Planning-side constructions: SAT embedded in replanning, and goal folding.

``sat_to_replanning`` builds an add-only planning instance whose one-step
plan works only because a guard condition holds initially; deleting the
guard from the initial state leaves an instance that has a plan exactly
when the source formula is satisfiable.  The instance has exactly one
irredundant plan, so the hardness of replanning does not depend on which
plan was remembered.  ``goal_compilation`` folds an instance's goal into
a fresh operator and condition so that the goal part of every instance
becomes the constant "reach g".
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .cnf import CnfFormula, clause_sort_key
from .strips import (
    Goal,
    NegativePostconditionError,
    Plan,
    SearchBudgetError,
    StripsInstance,
    StripsOperator,
    check_positive_postconditions,
    is_applicable,
    make_instance,
    make_operator,
    satisfies_goal,
    validate_plan,
)


@dataclass(frozen=True)
class ReplanningCase:
    """An instance, a plan for it, and a pending initial-state change."""

    instance: StripsInstance
    original_plan: Plan
    add_to_initial: frozenset[str] = frozenset()
    remove_from_initial: frozenset[str] = frozenset()

    def __post_init__(self):
        for part in (self.add_to_initial, self.remove_from_initial):
            stray = part - self.instance.conditions
            if stray:
                raise ValueError(f"change mentions unknown conditions: {sorted(stray)}")
        if not validate_plan(self.instance, self.original_plan):
            raise ValueError("original plan does not solve the instance")


def sat_to_replanning(f: CnfFormula) -> ReplanningCase:
    """Embed satisfiability of ``f`` into replanning after one deletion.

    Conditions: a guard ``a``, truth tokens ``t<v>``/``f<v>`` per variable
    and one target ``c<j>`` per clause.  The goal asks for every target.
    Operator ``e`` grants all targets at once but needs the guard;
    assignment operators need the guard *absent*, and per-literal
    operators derive a clause target from the matching truth token.  The
    original plan is just ``(e,)``; the pending change deletes ``a``.
    """
    variables = sorted(f.alphabet)
    clauses = sorted(f.clauses, key=clause_sort_key)
    targets = [f"c{j}" for j in range(1, len(clauses) + 1)]

    conditions = {"a", *targets}
    operators: dict[str, StripsOperator] = {}
    for v in variables:
        conditions.add(f"t{v}")
        conditions.add(f"f{v}")
        operators[f"pl{v}"] = make_operator(neg_pre=(f"f{v}", "a"), pos_post=(f"t{v}",))
        operators[f"nl{v}"] = make_operator(neg_pre=(f"t{v}", "a"), pos_post=(f"f{v}",))
    for j, cl in enumerate(clauses, start=1):
        for lit in cl:
            token = f"t{lit}" if lit > 0 else f"f{-lit}"
            prefix = "pc" if lit > 0 else "nc"
            operators[f"{prefix}{j}_{abs(lit)}"] = make_operator(pos_pre=(token,), pos_post=(f"c{j}",))
    operators["e"] = make_operator(pos_pre=("a",), pos_post=targets)

    instance = make_instance(conditions, operators, initial=("a",), goal_true=targets)
    return ReplanningCase(instance, ("e",), remove_from_initial=frozenset({"a"}))


def apply_initial_change(case: ReplanningCase) -> StripsInstance:
    """The modified instance: initial state minus removals, plus additions."""
    initial = (case.instance.initial - case.remove_from_initial) | case.add_to_initial
    return StripsInstance(case.instance.conditions, case.instance.operators, initial, case.instance.goal)


def count_irredundant_plans(instance: StripsInstance, max_len: int | None = None,
                            max_nodes: int = 100_000) -> int:
    """Count valid plans (length <= max_len) with no removable single step.

    Only add-only instances are supported: there every prefix of a valid
    plan stays executable and every irredundant plan grows the state each
    step, so enumerating applicability-respecting sequences up to
    |conditions| steps is exhaustive.
    """
    if not check_positive_postconditions(instance):
        raise NegativePostconditionError("irredundant-plan counting needs an add-only instance")
    if max_len is None:
        max_len = len(instance.conditions)
    names = sorted(instance.operators)
    nodes = 0
    count = 0

    def is_irredundant(plan: Plan) -> bool:
        return not any(
            validate_plan(instance, plan[:i] + plan[i + 1:]) for i in range(len(plan))
        )

    def explore(state, plan):
        nonlocal nodes, count
        nodes += 1
        if nodes > max_nodes:
            raise SearchBudgetError(f"more than {max_nodes} plan prefixes explored")
        if satisfies_goal(state, instance.goal) and is_irredundant(plan):
            count += 1
        if len(plan) == max_len:
            return
        for name in names:
            op = instance.operators[name]
            if is_applicable(state, op):
                explore(state | op.pos_post, plan + (name,))

    explore(instance.initial, ())
    return count


def goal_compilation(instance: StripsInstance, goal_name: str = "g",
                     operator_name: str = "o") -> StripsInstance:
    """Fold the goal into one new operator and a constant single-condition goal.

    The new operator is applicable exactly in goal states of the original
    instance and produces the new goal condition, so plan existence is
    preserved.  Name collisions get a numeric suffix and a warning.
    """
    g = _fresh_name(goal_name, instance.conditions)
    o = _fresh_name(operator_name, instance.operators.keys())
    operators = dict(instance.operators)
    operators[o] = StripsOperator(
        instance.goal.must_true, instance.goal.must_false, frozenset({g}), frozenset()
    )
    return StripsInstance(
        instance.conditions | {g}, operators, instance.initial, Goal(frozenset({g}), frozenset())
    )


def _fresh_name(base: str, taken) -> str:
    taken = set(taken)
    if base not in taken:
        return base
    n = 1
    while f"{base}{n}" in taken:
        n += 1
    warnings.warn(f"name {base!r} already in use, using {base}{n!s} instead", stacklevel=3)
    return f"{base}{n}"
