"""SAT-side constructions for solving under instance modification.

Three builders live here.  ``reduce_fixed_model`` maps a formula G to a
triple (F, change clause, known model) such that the known model satisfies
F but tells you nothing about whether F plus the change clause is
satisfiable.  ``reduce_unique_model`` strengthens this: it produces a
formula with exactly one model, so that *no* choice of model can help
once one clause is swapped for another.  ``make_nsat_instance`` pairs a
formula with a unary string encoding its variable count, the shape used by
the bounded-change compilation scenario.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import (
    Assignment,
    Clause,
    CnfFormula,
    clause,
    cnf,
    cross_disjoin,
    disjoin_literal,
    evaluate,
)
from .solvers import count_models


def fresh_variable(formula: CnfFormula) -> int:
    """Smallest variable id strictly above the formula's alphabet."""
    return max(formula.alphabet, default=0) + 1


@dataclass(frozen=True)
class FixedModelInstance:
    """A formula, a clause about to be added, and one known model."""

    formula: CnfFormula
    change_clause: Clause
    hint_model: Assignment

    def __post_init__(self):
        if not evaluate(self.formula, self.hint_model):
            raise ValueError("hint model does not satisfy the formula")


def reduce_fixed_model(g: CnfFormula) -> FixedModelInstance:
    """Embed satisfiability of ``g`` into a known-model instance.

    A fresh variable ``a`` is disjoined onto every clause of ``g``; the
    change clause is the unit clause for ``-a`` and the known model is
    ``{a}``.  Adding the change clause makes the result equisatisfiable
    with ``g``, yet ``{a}`` satisfies the base formula trivially.
    """
    a = fresh_variable(g)
    return FixedModelInstance(disjoin_literal(g, a), clause(-a), frozenset({a}))


@dataclass(frozen=True)
class UniqueModelInstance:
    """A single-model formula with a designated clause swap."""

    formula: CnfFormula
    add_clause: Clause
    del_clause: Clause


def reduce_unique_model(g: CnfFormula, verify: bool = False) -> UniqueModelInstance:
    """Embed satisfiability of ``g`` into a single-model instance.

    With fresh ``a`` and alphabet X of ``g``, the formula is
    {a} together with the pairwise disjunction of (units of X plus {a})
    and (clauses of g plus {-a}).  Its only model makes ``a`` and all of X
    true.  Swapping the clause {a} for {-a} yields a formula that is
    satisfiable iff ``g`` is.

    ``verify=True`` confirms the single-model property by exhaustive
    enumeration, which is exponential; leave it off outside tests.
    """
    if any(len(cl) == 0 for cl in g.clauses):
        raise ValueError("the construction does not support empty clauses")
    a = fresh_variable(g)
    full = g.alphabet | {a}
    left = cnf([(v,) for v in g.alphabet] + [(a,)], alphabet=full)
    right = cnf(list(g.clauses) + [(-a,)], alphabet=full)
    product = cross_disjoin(left, right)
    formula = CnfFormula(product.alphabet | {a}, product.clauses | {clause(a)})
    instance = UniqueModelInstance(formula, clause(-a), clause(a))
    if verify:
        n = count_models(formula)
        if n != 1:
            raise AssertionError(f"expected exactly one model, found {n}")
    return instance


def unique_model(instance: UniqueModelInstance) -> Assignment:
    """The single model of a unique-model instance: everything true."""
    return frozenset(instance.formula.alphabet)


@dataclass(frozen=True)
class NsatInstance:
    """A formula paired with a unary encoding of its variable count."""

    unary_part: str
    formula: CnfFormula

    def __post_init__(self):
        if self.unary_part != "1" * len(self.formula.alphabet):
            raise ValueError("unary part must be '1' repeated once per alphabet variable")


def make_nsat_instance(y: CnfFormula) -> NsatInstance:
    """Pair ``y`` with a unary string of length |alphabet|.

    The declared alphabet is counted, not merely the mentioned variables,
    so formulas over the same alphabet share a unary part.
    """
    return NsatInstance("1" * len(y.alphabet), y)
