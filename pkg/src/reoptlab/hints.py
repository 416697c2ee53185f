"""Hint reuse across problems, plus bounded-change compiled lookup tables.

A hint never constrains the problem; it may only speed the search up.
``reuse_model`` tries a remembered model against a changed formula before
falling back to the solver; ``reuse_plan`` scans the remembered plan's
suffixes against a changed planning instance before replanning from
scratch.  ``compile_table`` precomputes, for every subset of a declared
candidate-change universe up to a size bound, the solution of the changed
formula, so later lookups answer without any search at all.  Every reuse
path reports whether the hint was used and how much solver work was done,
so cold and hinted runs can be compared honestly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Mapping

from .cnf import Assignment, ChangeSet, Clause, CnfFormula, apply_changes, clause, evaluate
from .dimacs import parse_dimacs, serialize_dimacs
from .errors import InvalidHintError
from .solvers import solve_brute, solve_dpll, solve_dpll_stats
from .strips import StripsInstance, plan_exists_stats, validate_plan_stats

DEFAULT_TABLE_BUDGET = 1 << 16


class TableBudgetError(RuntimeError):
    """The candidate universe would need more entries than allowed."""


@dataclass(frozen=True)
class ElementaryChange:
    """A single clause addition ("add") or deletion ("del")."""

    op: str
    clause: Clause

    def __post_init__(self):
        if self.op not in {"add", "del"}:
            raise ValueError(f"change op must be 'add' or 'del', got {self.op!r}")
        object.__setattr__(self, "clause", clause(*self.clause))


def add_change(*literals: int) -> ElementaryChange:
    return ElementaryChange("add", literals)


def del_change(*literals: int) -> ElementaryChange:
    return ElementaryChange("del", literals)


class _Miss:
    """Sentinel for table lookups outside the compiled change universe."""

    def __repr__(self):
        return "MISS"


MISS = _Miss()


@dataclass(frozen=True)
class HintTable:
    """Solutions for every change subset of size at most ``bound``.

    Entries are keyed by candidate bitmask; a ``None`` value is an
    explicit marker that the changed formula is unsatisfiable.
    """

    base: CnfFormula
    candidates: tuple[ElementaryChange, ...]
    bound: int
    entries: Mapping[int, Assignment | None]


def subset_changes(candidates, indices) -> ChangeSet:
    """The change set selecting the given candidate indices."""
    adds = tuple(candidates[i].clause for i in indices if candidates[i].op == "add")
    dels = tuple(candidates[i].clause for i in indices if candidates[i].op == "del")
    return ChangeSet(additions=adds, deletions=dels)


def compile_table(base: CnfFormula, candidates, bound: int,
                  max_entries: int = DEFAULT_TABLE_BUDGET, verify: bool = False) -> HintTable:
    """Solve the changed formula for every candidate subset up to the bound.

    ``verify=True`` additionally cross-checks each verdict against the
    exhaustive oracle; use it in tests only.
    """
    candidates = tuple(candidates)
    if len(set(candidates)) != len(candidates):
        raise ValueError("duplicate candidate changes")
    added = {c.clause for c in candidates if c.op == "add"}
    deleted = {c.clause for c in candidates if c.op == "del"}
    conflict = added & deleted
    if conflict:
        raise ValueError(f"clauses offered both as addition and deletion: {sorted(conflict)}")
    effective = min(bound, len(candidates))
    total = sum(math.comb(len(candidates), size) for size in range(effective + 1))
    if total > max_entries:
        raise TableBudgetError(f"{total} entries exceed the table budget of {max_entries}")
    entries: dict[int, Assignment | None] = {}
    for size in range(effective + 1):
        for combo in combinations(range(len(candidates)), size):
            changed = apply_changes(base, subset_changes(candidates, combo))
            model = solve_dpll(changed)
            if verify and (model is None) != (solve_brute(changed) is None):
                raise AssertionError(f"solver disagreement on candidate subset {combo}")
            entries[sum(1 << i for i in combo)] = model
    return HintTable(base, candidates, bound, entries)


def lookup(table: HintTable, changes: ChangeSet):
    """Stored solution for a change set, or MISS if it is not in the table.

    A hit is either an assignment or None (recorded unsatisfiable); the
    caller must solve cold on MISS.
    """
    elements = {ElementaryChange("add", cl) for cl in changes.additions}
    elements |= {ElementaryChange("del", cl) for cl in changes.deletions}
    if len(elements) > table.bound:
        return MISS
    index = {candidate: i for i, candidate in enumerate(table.candidates)}
    mask = 0
    for element in elements:
        i = index.get(element)
        if i is None:
            return MISS
        mask |= 1 << i
    return table.entries[mask]


@dataclass(frozen=True)
class ReuseOutcome:
    """What a reuse attempt produced and what it cost.

    ``hint_used`` is True only when the returned solution is the hint
    itself (or a suffix of it, for plans).  ``work_units`` counts solver
    decisions plus propagations for formulas, expanded states for plans,
    and a size-linear pass for the fast paths.
    """

    solution: Any
    hint_used: bool
    work_units: int


def reuse_model(f: CnfFormula, changes: ChangeSet, hint) -> ReuseOutcome:
    """Try a remembered model of ``f`` against the changed formula.

    The hint must satisfy ``f``.  If it also satisfies the changed formula
    it is returned after a single linear pass; otherwise the changed
    formula is solved cold.
    """
    hint = frozenset(hint)
    if not evaluate(f, hint):
        raise InvalidHintError("hint does not satisfy the base formula")
    changed = apply_changes(f, changes)
    if evaluate(changed, hint):
        return ReuseOutcome(hint, True, len(changed.clauses))
    model, work = solve_dpll_stats(changed)
    return ReuseOutcome(model, False, work)


def reuse_plan(changed: StripsInstance, old_plan) -> ReuseOutcome:
    """Try the old plan's suffixes against a changed instance, longest first.

    The first suffix that validates is returned; if none does, a fresh
    plan search runs and its result (possibly None) is reported with
    ``hint_used`` false.
    """
    old_plan = tuple(old_plan)
    checked = 0
    for start in range(len(old_plan) + 1):
        suffix = old_plan[start:]
        ok, work = validate_plan_stats(changed, suffix)
        checked += work
        if ok:
            return ReuseOutcome(suffix, True, checked)
    plan, expanded = plan_exists_stats(changed)
    return ReuseOutcome(plan, False, expanded)


def table_to_json(table: HintTable) -> str:
    """Canonical JSON with the base formula embedded as DIMACS text."""
    obj = {
        "base": serialize_dimacs(table.base),
        "bound": table.bound,
        "candidates": [[c.op, list(c.clause)] for c in table.candidates],
        "entries": {
            f"0x{mask:x}": None if model is None else sorted(model)
            for mask, model in table.entries.items()
        },
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def table_from_json(text: str) -> HintTable:
    obj = json.loads(text)
    try:
        base = parse_dimacs(obj["base"])
        candidates = tuple(ElementaryChange(op, tuple(lits)) for op, lits in obj["candidates"])
        entries = {
            int(key, 16): None if model is None else frozenset(model)
            for key, model in obj["entries"].items()
        }
        bound = obj["bound"]
    except KeyError as exc:
        raise ValueError(f"missing table field: {exc}") from None
    for mask in entries:
        if mask.bit_count() > bound:
            raise ValueError(f"entry {mask:#x} selects more than {bound} changes")
    return HintTable(base, candidates, bound, entries)
