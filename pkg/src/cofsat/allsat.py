"""All-solutions enumeration for leaf formulas, and solution gathering.

``all_solutions`` is a unit-propagating backtracker intended for the small
leaf formulas a decomposition produces; it is deliberately a different code
path from the dense truth-table evaluation in ``cnf.to_truth_table``, so the
two can cross-check each other.  ``gather`` reassembles a root-level
solution set from per-leaf results: each leaf's rows are extended by the
leaf's prefix, widened over any variables the branch left unconstrained,
then merged into one canonical (sorted, deduplicated) set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .boolfn import CapacityError
from .cnf import CnfFormula, PartialAssignment, SolutionSet, formula_vars, substitute
from .cnf import UNSAT
from .decompose import DEAD, SOLVABLE, DecompositionTree, WorkItem

__all__ = ["LeafResult", "all_solutions", "patch", "gather", "solve_leaf"]

MAX_ENUM_VARS = 20


@dataclass(frozen=True)
class LeafResult:
    """Solutions of one work item, over the item's formula universe."""

    item: WorkItem
    solutions: SolutionSet

    def __post_init__(self) -> None:
        if self.item.formula is None:
            raise ValueError("dead work items have no solutions to report")
        if self.solutions.over != self.item.formula.universe:
            raise ValueError("solutions are not over the item's universe")


def all_solutions(formula: CnfFormula) -> SolutionSet:
    """Every satisfying full assignment over the formula's universe.

    Backtracking search in ascending variable order with unit propagation;
    variables the clauses never touch are expanded to both values.  The
    empty formula over k variables yields all 2**k rows.
    """
    universe = formula.universe
    if len(universe) > MAX_ENUM_VARS:
        raise CapacityError(
            f"enumeration capped at {MAX_ENUM_VARS} variables, "
            f"formula has {len(universe)}")
    position = {v: j for j, v in enumerate(universe)}
    rows: list[int] = []

    def encode(bound: dict[int, bool]) -> int:
        row = 0
        for v, value in bound.items():
            if value:
                row |= 1 << position[v]
        return row

    def emit_all_completions(base: int, free: Sequence[int]) -> None:
        if not free:
            rows.append(base)
            return
        masks = [1 << position[v] for v in free]
        for combo in range(1 << len(free)):
            row = base
            for k, mask in enumerate(masks):
                if combo >> k & 1:
                    row |= mask
            rows.append(row)

    def search(f: CnfFormula, bound: dict[int, bool]) -> None:
        # Unit propagation: forced literals never branch.
        while True:
            unit = next((c for c in f.clauses if len(c) == 1), None)
            if unit is None:
                break
            lit = unit.literals[0]
            bound[lit.var] = lit.positive
            reduced = substitute(f, {lit.var: lit.positive})
            if reduced is UNSAT:
                return
            f = reduced
        if f.is_empty:
            emit_all_completions(encode(bound), f.universe)
            return
        branch_var = formula_vars(f)[0]
        for value in (False, True):
            reduced = substitute(f, {branch_var: value})
            if reduced is UNSAT:
                continue
            search(reduced, {**bound, branch_var: value})

    search(formula, {})
    return SolutionSet(universe, rows)


def solve_leaf(item: WorkItem) -> LeafResult:
    """Enumerate one live work item."""
    if item.formula is None:
        raise ValueError("cannot solve a dead work item")
    return LeafResult(item, all_solutions(item.formula))


def patch(prefix: PartialAssignment, solutions: SolutionSet) -> SolutionSet:
    """Extend every row by the branch prefix.

    The prefix must bind variables disjoint from the solution set's; the
    result is over the union, re-canonicalized.
    """
    overlap = set(prefix) & set(solutions.over)
    if overlap:
        raise ValueError(f"prefix re-binds solution variables {sorted(overlap)}")
    merged_over = tuple(sorted(set(prefix) | set(solutions.over)))
    position = {v: j for j, v in enumerate(merged_over)}
    prefix_bits = 0
    for v, value in prefix.items():
        if value:
            prefix_bits |= 1 << position[v]
    old_masks = [1 << position[v] for v in solutions.over]
    rows = []
    for row in solutions.rows:
        out = prefix_bits
        for j, mask in enumerate(old_masks):
            if row >> j & 1:
                out |= mask
        rows.append(out)
    return SolutionSet(merged_over, rows)


def _widen(solutions: SolutionSet, target_over: Sequence[int]) -> Iterable[int]:
    """Re-encode rows over a wider variable list, expanding missing
    variables to both values."""
    target = tuple(target_over)
    position = {v: j for j, v in enumerate(target)}
    known = set(solutions.over)
    missing = [v for v in target if v not in known]
    if set(solutions.over) - set(target):
        raise ValueError("solution set mentions variables outside the target")
    old_masks = [1 << position[v] for v in solutions.over]
    free_masks = [1 << position[v] for v in missing]
    for row in solutions.rows:
        base = 0
        for j, mask in enumerate(old_masks):
            if row >> j & 1:
                base |= mask
        for combo in range(1 << len(free_masks)):
            out = base
            for k, mask in enumerate(free_masks):
                if combo >> k & 1:
                    out |= mask
            yield out


def gather(
    tree: DecompositionTree, leaf_results: Iterable[LeafResult]
) -> SolutionSet:
    """Merge per-leaf solutions into the root-universe solution set.

    Every solvable leaf must appear in ``leaf_results`` (order and
    duplicates are irrelevant); trivial leaves need no result, their
    unconstrained variables are expanded directly.  Dead leaves contribute
    nothing, so an all-dead tree gathers to the empty set.
    """
    by_item: dict[WorkItem, SolutionSet] = {}
    for result in leaf_results:
        by_item[result.item] = result.solutions
    root_over = tree.root_universe
    rows: list[int] = []
    for leaf in tree.leaves():
        if leaf.status == DEAD:
            continue
        if leaf.status == SOLVABLE:
            solutions = by_item.get(leaf.item)
            if solutions is None:
                raise ValueError(
                    f"missing result for solvable leaf {leaf.node_id}")
        else:  # trivial: every assignment over the leaf universe works
            solutions = SolutionSet((), [0])
        patched = patch(leaf.item.prefix, solutions)
        rows.extend(_widen(patched, root_over))
    return SolutionSet(root_over, rows)
