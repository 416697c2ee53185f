"""Oracle-equivalence sweeps over exhaustive and seeded random instances.

Each sweep returns a list of failure strings, one minimal reproducer per
counterexample; an empty list is a pass.  The sweeps drive every
construction against the exhaustive oracles, and they are exactly what
the ``verify`` command and the acceptance tests run.
"""

from __future__ import annotations

import random
from itertools import chain

from .cnf import ChangeSet, CnfFormula, clause, evaluate
from .dimacs import serialize_dimacs
from .enumeration import (
    iter_small_formulas,
    random_formula,
    random_hint_setup,
    random_plansat_instance,
)
from .gadgets import build_gadget, gadget_add_unit, gadget_remove_unit
from .graphs import decide_cover
from .hints import MISS, compile_table, lookup, subset_changes
from .reductions import reduce_fixed_model, reduce_unique_model, unique_model
from .replanning import (
    apply_initial_change,
    count_irredundant_plans,
    goal_compilation,
    sat_to_replanning,
)
from .solvers import count_models, solve_brute, solve_dpll
from .strips import instance_to_json, plan_exists, validate_plan

DEFAULT_SEED = 20260808


def describe_formula(f: CnfFormula) -> str:
    return serialize_dimacs(f).strip().replace("\n", " / ")


def sweep_solver_agreement(max_vars: int = 3, max_clauses: int = 3,
                           samples: int = 1000, sample_vars: int = 6,
                           sample_clauses: int = 6, seed: int = DEFAULT_SEED) -> list[str]:
    """DPLL verdicts must match exhaustive search; returned models must satisfy."""
    failures = []
    rng = random.Random(seed)
    sampled = (random_formula(rng, rng.randint(0, sample_vars), rng.randint(0, sample_clauses))
               for _ in range(samples))
    for f in chain(iter_small_formulas(max_vars, max_clauses), sampled):
        fast = solve_dpll(f)
        slow = solve_brute(f)
        if (fast is None) != (slow is None):
            failures.append(f"solver disagreement on {describe_formula(f)}")
        elif fast is not None and not evaluate(f, fast):
            failures.append(f"dpll returned a non-model {sorted(fast)} for {describe_formula(f)}")
    return failures


def sweep_fixed_model(max_vars: int = 3, max_clauses: int = 3) -> list[str]:
    """Known-model construction: hint satisfies, change is equisatisfiable, fresh var clean."""
    failures = []
    for g in iter_small_formulas(max_vars, max_clauses):
        inst = reduce_fixed_model(g)
        fresh = abs(inst.change_clause[0])
        modified = _apply_quietly(inst.formula, ChangeSet(additions=(inst.change_clause,)))
        problems = []
        if not evaluate(inst.formula, inst.hint_model):
            problems.append("hint fails the base formula")
        if fresh in g.alphabet:
            problems.append("fresh variable collides with the alphabet")
        if (solve_brute(g) is None) != (solve_brute(modified) is None):
            problems.append("equisatisfiability broken")
        if problems:
            failures.append(f"fixed-model on {describe_formula(g)}: {', '.join(problems)}")
    return failures


def sweep_unique_model(max_vars: int = 3, max_clauses: int = 3) -> list[str]:
    """Single-model construction: one model, the all-true one, swap equisatisfiable."""
    failures = []
    for g in iter_small_formulas(max_vars, max_clauses):
        inst = reduce_unique_model(g)
        problems = []
        if count_models(inst.formula) != 1:
            problems.append("model count is not 1")
        if not evaluate(inst.formula, unique_model(inst)):
            problems.append("the designated model is not a model")
        swapped = _apply_quietly(
            inst.formula,
            ChangeSet(additions=(inst.add_clause,), deletions=(inst.del_clause,)),
        )
        if (solve_brute(g) is None) != (solve_brute(swapped) is None):
            problems.append("swap equisatisfiability broken")
        if problems:
            failures.append(f"unique-model on {describe_formula(g)}: {', '.join(problems)}")
    return failures


def sweep_vc_gadget(max_vars: int = 3, max_clauses: int = 3,
                    random_samples: int = 500, random_vars: int = 4,
                    seed: int = DEFAULT_SEED, budget_offset: int = 0) -> list[str]:
    """Cover threshold tracks satisfiability, for base formulas and unit edits.

    ``budget_offset`` exists for fault-injection tests: any nonzero offset
    must make this sweep fail.
    """
    failures = []
    rng = random.Random(seed)
    sampled = (random_formula(rng, random_vars, max_clauses) for _ in range(random_samples))
    for f in chain(iter_small_formulas(max_vars, max_clauses), sampled):
        gadget = build_gadget(f)
        if _covers(gadget, budget_offset) != _satisfiable(f):
            failures.append(f"gadget verdict wrong for {describe_formula(f)}")
        for v in sorted(f.alphabet):
            for lit in (v, -v):
                unit = clause(lit)
                if unit in f.clauses:
                    mutated = gadget_remove_unit(gadget, lit)
                    target = CnfFormula(f.alphabet, f.clauses - {unit})
                    tag = f"remove {lit}"
                else:
                    mutated = gadget_add_unit(gadget, lit)
                    target = CnfFormula(f.alphabet, f.clauses | {unit})
                    tag = f"add {lit}"
                if _covers(mutated, budget_offset) != _satisfiable(target):
                    failures.append(f"gadget verdict wrong after {tag} on {describe_formula(f)}")
    return failures


def _covers(gadget, budget_offset: int) -> bool:
    return decide_cover(gadget.graph, max(gadget.budget + budget_offset, 0)) is not None


def _satisfiable(f: CnfFormula) -> bool:
    return solve_brute(f) is not None


def _apply_quietly(f: CnfFormula, changes: ChangeSet) -> CnfFormula:
    # The sweeps delete clauses that are knowingly present; rebuild without
    # going through the warning-emitting path.
    cls = (set(f.clauses) - set(changes.deletions)) | set(changes.additions)
    alphabet = set(f.alphabet)
    for cl in changes.additions:
        alphabet.update(abs(lit) for lit in cl)
    return CnfFormula(frozenset(alphabet), frozenset(cls))


def sweep_replanning(max_vars: int = 3, max_clauses: int = 3) -> list[str]:
    """Guard-deletion replanning: plan validity, unique irredundancy, equivalence."""
    failures = []
    for f in iter_small_formulas(max_vars, max_clauses):
        case = sat_to_replanning(f)
        problems = []
        if not validate_plan(case.instance, case.original_plan):
            problems.append("original plan invalid")
        if count_irredundant_plans(case.instance) != 1:
            problems.append("irredundant plan not unique")
        changed = apply_initial_change(case)
        if (plan_exists(changed) is not None) != _satisfiable(f):
            problems.append("replanning verdict wrong")
        if problems:
            failures.append(f"replanning on {describe_formula(f)}: {', '.join(problems)}")
    return failures


def sweep_goal_compilation(samples: int = 200, max_conditions: int = 6,
                           max_operators: int = 6, seed: int = DEFAULT_SEED) -> list[str]:
    """Folding the goal into a fresh operator preserves plan existence."""
    failures = []
    rng = random.Random(seed)
    for _ in range(samples):
        instance = random_plansat_instance(
            rng, rng.randint(1, max_conditions), rng.randint(1, max_operators)
        )
        before = plan_exists(instance) is not None
        after = plan_exists(goal_compilation(instance)) is not None
        if before != after:
            failures.append(
                "goal compilation changed the verdict on:\n" + instance_to_json(instance)
            )
    return failures


def sweep_hint_tables(configs: int = 50, seed: int = DEFAULT_SEED) -> list[str]:
    """Every table lookup matches the exhaustive verdict on the changed formula."""
    from itertools import combinations

    failures = []
    rng = random.Random(seed)
    for _ in range(configs):
        base, candidates, bound = random_hint_setup(
            rng,
            num_vars=rng.randint(1, 4),
            num_clauses=rng.randint(0, 4),
            num_candidates=rng.randint(0, 4),
            bound=rng.randint(0, 2),
        )
        table = compile_table(base, candidates, bound)
        for size in range(min(bound, len(candidates)) + 1):
            for combo in combinations(range(len(candidates)), size):
                changes = subset_changes(candidates, combo)
                got = lookup(table, changes)
                if got is MISS:
                    failures.append(f"unexpected miss for subset {combo} of {candidates}")
                    continue
                expected = solve_brute(_apply_quietly(base, changes))
                if (got is None) != (expected is None):
                    failures.append(
                        f"table verdict wrong for subset {combo} on {describe_formula(base)}"
                    )
                elif got is not None and not evaluate(_apply_quietly(base, changes), got):
                    failures.append(
                        f"table stores a non-model for subset {combo} on {describe_formula(base)}"
                    )
    return failures


SUITES = {
    "sat-reductions": (sweep_solver_agreement, sweep_fixed_model, sweep_unique_model),
    "vc-gadget": (sweep_vc_gadget,),
    "plan-reductions": (sweep_replanning, sweep_goal_compilation),
    "hint-tables": (sweep_hint_tables,),
}


def run_suite(name: str, max_vars: int | None = None, max_clauses: int | None = None,
              samples: int | None = None, seed: int | None = None) -> list[str]:
    """Run one named suite with optional scale overrides; returns failures."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    overrides = {}
    if max_vars is not None:
        overrides["max_vars"] = max_vars
    if max_clauses is not None:
        overrides["max_clauses"] = max_clauses
    if seed is not None:
        overrides["seed"] = seed
    failures = []
    for sweep in SUITES[name]:
        kwargs = dict(overrides)
        names = sweep.__code__.co_varnames[: sweep.__code__.co_argcount]
        if samples is not None:
            for alias in ("samples", "random_samples", "configs"):
                if alias in names:
                    kwargs[alias] = samples
        kwargs = {k: v for k, v in kwargs.items() if k in names}
        failures.extend(sweep(**kwargs))
    return failures
