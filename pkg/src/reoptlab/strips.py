"""Propositional STRIPS model and plan-existence search for add-only operators.

An operator carries positive/negative preconditions and positive/negative
postconditions over a fixed condition set.  Plans are sequences of
operator names.  ``plan_exists`` handles only instances whose operators
have no negative postconditions: states then only grow along a plan, so a
breadth-first search over the reachable state lattice with memoization is
complete.  General execution (negative postconditions included) is still
supported by ``apply_operator`` and ``validate_plan``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Mapping

DEFAULT_SEARCH_BUDGET = 500_000

Plan = tuple[str, ...]


class NotApplicableError(RuntimeError):
    """The operator's preconditions do not hold in the given state."""


class UnknownOperatorError(KeyError):
    """A plan step names an operator the instance does not define."""


class NegativePostconditionError(ValueError):
    """The instance is outside the add-only fragment the search supports."""


class SearchBudgetError(RuntimeError):
    """The configured search cap was exceeded."""


@dataclass(frozen=True)
class StripsOperator:
    pos_pre: frozenset[str] = frozenset()
    neg_pre: frozenset[str] = frozenset()
    pos_post: frozenset[str] = frozenset()
    neg_post: frozenset[str] = frozenset()

    def __post_init__(self):
        both = self.pos_pre & self.neg_pre
        if both:
            raise ValueError(f"conditions both required true and false: {sorted(both)}")


def make_operator(pos_pre=(), neg_pre=(), pos_post=(), neg_post=()) -> StripsOperator:
    return StripsOperator(frozenset(pos_pre), frozenset(neg_pre), frozenset(pos_post), frozenset(neg_post))


@dataclass(frozen=True)
class Goal:
    must_true: frozenset[str] = frozenset()
    must_false: frozenset[str] = frozenset()

    def __post_init__(self):
        both = self.must_true & self.must_false
        if both:
            raise ValueError(f"goal conditions both required true and false: {sorted(both)}")


@dataclass(frozen=True)
class StripsInstance:
    conditions: frozenset[str]
    operators: Mapping[str, StripsOperator]
    initial: frozenset[str]
    goal: Goal

    def __post_init__(self):
        object.__setattr__(self, "operators", dict(self.operators))
        if not self.initial <= self.conditions:
            raise ValueError(f"initial state outside conditions: {sorted(self.initial - self.conditions)}")
        for part in (self.goal.must_true, self.goal.must_false):
            if not part <= self.conditions:
                raise ValueError(f"goal outside conditions: {sorted(part - self.conditions)}")
        for name, op in self.operators.items():
            used = op.pos_pre | op.neg_pre | op.pos_post | op.neg_post
            if not used <= self.conditions:
                raise ValueError(f"operator {name!r} uses unknown conditions: {sorted(used - self.conditions)}")


def make_instance(conditions, operators, initial=(), goal_true=(), goal_false=()) -> StripsInstance:
    return StripsInstance(
        frozenset(conditions),
        dict(operators),
        frozenset(initial),
        Goal(frozenset(goal_true), frozenset(goal_false)),
    )


def is_applicable(state: frozenset[str], op: StripsOperator) -> bool:
    return op.pos_pre <= state and not op.neg_pre & state


def apply_operator(state, op: StripsOperator) -> frozenset[str]:
    """Execute one operator: add pos_post, delete neg_post, if applicable."""
    state = frozenset(state)
    missing = op.pos_pre - state
    if missing:
        raise NotApplicableError(f"positive preconditions not met: {sorted(missing)}")
    blocking = op.neg_pre & state
    if blocking:
        raise NotApplicableError(f"negative preconditions violated: {sorted(blocking)}")
    return (state | op.pos_post) - op.neg_post


def satisfies_goal(state: frozenset[str], goal: Goal) -> bool:
    return goal.must_true <= state and not goal.must_false & state


def _resolve(instance: StripsInstance, name: str) -> StripsOperator:
    try:
        return instance.operators[name]
    except KeyError:
        raise UnknownOperatorError(name) from None


def validate_plan(instance: StripsInstance, plan) -> bool:
    return validate_plan_stats(instance, plan)[0]


def validate_plan_stats(instance: StripsInstance, plan) -> tuple[bool, int]:
    """Check a plan; returns (valid, work) with work linear in |plan| * |conditions|."""
    state = instance.initial
    work = 0
    for name in plan:
        op = _resolve(instance, name)
        work += len(op.pos_pre) + len(op.neg_pre) + len(op.pos_post) + len(op.neg_post) + 1
        if not is_applicable(state, op):
            return False, work
        state = (state | op.pos_post) - op.neg_post
    work += len(instance.goal.must_true) + len(instance.goal.must_false) + 1
    return satisfies_goal(state, instance.goal), work


def check_positive_postconditions(instance: StripsInstance) -> bool:
    """True iff no operator has negative postconditions."""
    return all(not op.neg_post for op in instance.operators.values())


def plan_exists(instance: StripsInstance, max_states: int = DEFAULT_SEARCH_BUDGET) -> Plan | None:
    return plan_exists_stats(instance, max_states)[0]


def plan_exists_stats(instance: StripsInstance, max_states: int = DEFAULT_SEARCH_BUDGET) -> tuple[Plan | None, int]:
    """Breadth-first plan search for add-only instances; returns (plan, states expanded).

    Operators are expanded in name order, so the witness plan is
    deterministic.  Raises ``NegativePostconditionError`` on instances
    outside the add-only fragment and ``SearchBudgetError`` past
    ``max_states`` expansions.
    """
    offenders = sorted(n for n, op in instance.operators.items() if op.neg_post)
    if offenders:
        raise NegativePostconditionError(f"operators with negative postconditions: {offenders}")
    goal = instance.goal
    # Conditions never become false again, so any state overlapping
    # must_false is a dead end, the initial state included.
    if goal.must_false & instance.initial:
        return None, 0
    if satisfies_goal(instance.initial, goal):
        return (), 0
    names = sorted(instance.operators)
    visited = {instance.initial}
    queue: deque[tuple[frozenset[str], Plan]] = deque([(instance.initial, ())])
    expanded = 0
    while queue:
        state, plan = queue.popleft()
        expanded += 1
        if expanded > max_states:
            raise SearchBudgetError(f"more than {max_states} states expanded")
        for name in names:
            op = instance.operators[name]
            if not is_applicable(state, op):
                continue
            successor = state | op.pos_post
            if successor in visited or goal.must_false & successor:
                continue
            extended = plan + (name,)
            if satisfies_goal(successor, goal):
                return extended, expanded
            visited.add(successor)
            queue.append((successor, extended))
    return None, expanded


def instance_to_json(instance: StripsInstance) -> str:
    """Canonical JSON: operators map to [pos_pre, neg_pre, pos_post, neg_post]."""
    obj = {
        "conditions": sorted(instance.conditions),
        "operators": {
            name: [sorted(op.pos_pre), sorted(op.neg_pre), sorted(op.pos_post), sorted(op.neg_post)]
            for name, op in instance.operators.items()
        },
        "initial": sorted(instance.initial),
        "goal": {
            "must_true": sorted(instance.goal.must_true),
            "must_false": sorted(instance.goal.must_false),
        },
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def instance_from_json(text: str) -> StripsInstance:
    obj = json.loads(text)
    try:
        operators = {}
        for name, parts in obj["operators"].items():
            if len(parts) != 4:
                raise ValueError(f"operator {name!r} needs exactly four condition arrays")
            operators[name] = make_operator(*parts)
        return make_instance(
            obj["conditions"],
            operators,
            obj["initial"],
            obj["goal"]["must_true"],
            obj["goal"]["must_false"],
        )
    except KeyError as exc:
        raise ValueError(f"missing instance field: {exc}") from None
