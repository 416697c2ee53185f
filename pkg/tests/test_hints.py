import random
from itertools import combinations

import pytest

from reoptlab.cnf import ChangeSet, apply_changes, cnf, evaluate
from reoptlab.enumeration import iter_small_formulas, random_hint_setup
from reoptlab.errors import InvalidHintError
from reoptlab.hints import (
    MISS,
    ElementaryChange,
    TableBudgetError,
    add_change,
    compile_table,
    del_change,
    lookup,
    reuse_model,
    reuse_plan,
    subset_changes,
    table_from_json,
    table_to_json,
)
from reoptlab.reductions import reduce_fixed_model, reduce_unique_model, unique_model
from reoptlab.replanning import apply_initial_change, sat_to_replanning
from reoptlab.solvers import solve_dpll
from reoptlab.strips import make_instance, make_operator, validate_plan

from oracles import brute_sat


def test_elementary_change_validation():
    assert add_change(2, -1).clause == (-1, 2)
    with pytest.raises(ValueError):
        ElementaryChange("swap", (1,))


def test_compile_table_single_candidate():
    table = compile_table(cnf([(1,)]), [add_change(-1)], 1, verify=True)
    assert table.entries[0] == frozenset({1})
    assert table.entries[1] is None  # recorded unsatisfiable


def test_compile_table_bound_zero():
    table = compile_table(cnf([(1,)]), [add_change(-1)], 0)
    assert set(table.entries) == {0}


def test_compile_table_conflicting_full_subset():
    base = cnf((), alphabet={1})
    table = compile_table(base, [add_change(1), add_change(-1)], 2, verify=True)
    assert len(table.entries) == 4
    assert table.entries[0b11] is None
    assert table.entries[0b01] == frozenset({1})


def test_compile_table_rejects_bad_candidates():
    with pytest.raises(ValueError):
        compile_table(cnf(), [add_change(1), add_change(1)], 1)
    with pytest.raises(ValueError):
        compile_table(cnf([(1,)]), [add_change(1), del_change(1)], 1)


def test_compile_table_budget():
    candidates = [add_change(v) for v in range(1, 6)]
    with pytest.raises(TableBudgetError):
        compile_table(cnf(), candidates, 5, max_entries=8)


def test_lookup_hit_miss_and_bound():
    base = cnf([(1,)])
    candidates = (add_change(-1), add_change(2))
    table = compile_table(base, candidates, 1)
    assert lookup(table, ChangeSet(additions=((2,),))) == frozenset({1, 2})
    assert lookup(table, ChangeSet(additions=((-1,),))) is None
    assert lookup(table, ChangeSet(additions=((3,),))) is MISS  # unregistered clause
    assert lookup(table, ChangeSet(additions=((-1,), (2,)))) is MISS  # above the bound
    assert lookup(table, ChangeSet(deletions=((1,),))) is MISS  # wrong change kind


def test_table_completeness_sweep():
    rng = random.Random(19)
    for _ in range(20):
        base, candidates, bound = random_hint_setup(
            rng, num_vars=rng.randint(1, 4), num_clauses=rng.randint(0, 4),
            num_candidates=rng.randint(0, 4), bound=rng.randint(0, 2),
        )
        table = compile_table(base, candidates, bound, verify=True)
        for size in range(min(bound, len(candidates)) + 1):
            for combo in combinations(range(len(candidates)), size):
                changes = subset_changes(candidates, combo)
                stored = lookup(table, changes)
                assert stored is not MISS
                changed = apply_changes(base, changes)
                assert (stored is not None) == brute_sat(changed.clauses, changed.alphabet)
                if stored is not None:
                    assert evaluate(changed, stored)


def test_reuse_model_fast_path():
    f = cnf([(1,)])
    outcome = reuse_model(f, ChangeSet(additions=((1, 2),)), frozenset({1}))
    assert outcome.hint_used
    assert outcome.solution == frozenset({1})
    assert outcome.work_units == 2  # one pass over the two clauses


def test_reuse_model_requires_valid_hint():
    with pytest.raises(InvalidHintError):
        reuse_model(cnf([(1,)]), ChangeSet(), frozenset())


def test_reuse_model_fixed_model_scenario():
    # the guarded construction: the remembered model dies with the change
    for g in (cnf([(1,)]), cnf([(1,), (-1,)])):
        inst = reduce_fixed_model(g)
        changes = ChangeSet(additions=(inst.change_clause,))
        outcome = reuse_model(inst.formula, changes, inst.hint_model)
        assert not outcome.hint_used
        assert (outcome.solution is not None) == brute_sat(g.clauses, g.alphabet)


def test_reuse_model_unique_model_scenario_never_reuses():
    for g in iter_small_formulas(2, 2):
        inst = reduce_unique_model(g)
        changes = ChangeSet(additions=(inst.add_clause,), deletions=(inst.del_clause,))
        outcome = reuse_model(inst.formula, changes, unique_model(inst))
        assert not outcome.hint_used
        assert (outcome.solution is not None) == brute_sat(g.clauses, g.alphabet)


def test_reuse_model_verdicts_match_cold_solver():
    rng = random.Random(29)
    from reoptlab.enumeration import random_clause, random_satisfiable_formula

    for _ in range(100):
        f, model = random_satisfiable_formula(rng, 4, 4)
        changes = ChangeSet(additions=(random_clause(rng, 4),))
        outcome = reuse_model(f, changes, model)
        cold = solve_dpll(apply_changes(f, changes))
        assert (outcome.solution is not None) == (cold is not None)
        if outcome.hint_used:
            assert evaluate(apply_changes(f, changes), outcome.solution)


def test_reuse_plan_unchanged_instance_returns_full_plan():
    inst = make_instance(
        ["p", "q"],
        {"one": make_operator(pos_post=["p"]), "two": make_operator(pos_pre=["p"], pos_post=["q"])},
        goal_true=["q"],
    )
    outcome = reuse_plan(inst, ("one", "two"))
    assert outcome.hint_used
    assert outcome.solution == ("one", "two")


def test_reuse_plan_picks_longest_valid_suffix():
    changed = make_instance(
        ["p", "q"],
        {
            "seed": make_operator(neg_pre=["p"], pos_post=["p"]),
            "grow": make_operator(pos_pre=["p"], pos_post=["q"]),
        },
        initial=["p"],  # "seed" no longer applicable, its work already done
        goal_true=["q"],
    )
    outcome = reuse_plan(changed, ("seed", "grow"))
    assert outcome.hint_used
    assert outcome.solution == ("grow",)
    assert validate_plan(changed, outcome.solution)


def test_reuse_plan_goal_already_reached_keeps_empty_suffix():
    # the old step can no longer run, but nothing remains to be done
    inst = make_instance(["p"], {"set_p": make_operator(neg_pre=["p"], pos_post=["p"])},
                         initial=["p"], goal_true=["p"])
    outcome = reuse_plan(inst, ("set_p",))
    assert outcome.hint_used
    assert outcome.solution == ()


def test_reuse_plan_guard_removal_forces_fallback():
    case = sat_to_replanning(cnf([(1, 2), (-1,)]))
    changed = apply_initial_change(case)
    outcome = reuse_plan(changed, case.original_plan)
    assert not outcome.hint_used
    assert outcome.solution is not None
    assert validate_plan(changed, outcome.solution)

    dead = sat_to_replanning(cnf([(1,), (-1,)]))
    outcome = reuse_plan(apply_initial_change(dead), dead.original_plan)
    assert not outcome.hint_used
    assert outcome.solution is None


def test_table_json_round_trip():
    base = cnf([(1,), (1, -2)])
    table = compile_table(base, [add_change(2), del_change(1)], 2)
    text = table_to_json(table)
    assert table_from_json(text) == table
    assert '"0x3"' in text  # hex-keyed entries


def test_table_json_rejects_oversized_entry():
    base = cnf([(1,)])
    table = compile_table(base, [add_change(2), add_change(-2)], 2)
    text = table_to_json(table).replace('"bound": 2', '"bound": 1')
    with pytest.raises(ValueError):
        table_from_json(text)
