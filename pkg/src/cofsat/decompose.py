"""Decomposition of CNF formulas into independent subproblems.

Two strategies are provided.  Clause-pivot decomposition branches on the
2**k - 1 partial assignments of one pivot clause: the input is satisfiable
iff at least one branch is, and the branch solution sets together (after
deduplication) recover the full solution set.  Variable-partition
decomposition repeatedly picks a block X1 of at most ``n0`` variables,
splits the clauses into (only-X1, mixed, only-X2), enumerates the X1
assignments consistent with the only-X1 clauses, and recurses on the
reduced formulas until every live leaf has at most ``n0`` variables.

Each subproblem is an immutable WorkItem (prefix assignment + reduced
formula) that can be shipped to any worker; the tree records how the items
were produced.  A simple closed-form cost model for the variable-partition
strategy is included.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .boolfn import CapacityError
from .cnf import (
    UNSAT,
    Clause,
    CnfFormula,
    PartialAssignment,
    partial_assignments,
    substitute,
)

__all__ = [
    "Partition",
    "WorkItem",
    "TreeNode",
    "DecompositionTree",
    "CostEstimate",
    "clause_pivot_decompose",
    "clause_pivot_tree",
    "choose_var_subset",
    "partition",
    "enumerate_c1_assignments",
    "var_partition_decompose",
    "estimate_cost",
]

log = logging.getLogger(__name__)

INTERNAL = "internal"
SOLVABLE = "solvable"
TRIVIAL = "trivial"
DEAD = "unsat"


@dataclass(frozen=True)
class Partition:
    """Three-way clause split induced by a variable block X1.

    ``only_x1`` clauses touch X1 variables only, ``only_x2`` clauses touch
    the complement only, ``mixed`` clauses touch both.
    """

    only_x1: tuple[Clause, ...]
    mixed: tuple[Clause, ...]
    only_x2: tuple[Clause, ...]
    x1: tuple[int, ...]
    x2: tuple[int, ...]


@dataclass(frozen=True)
class WorkItem:
    """A self-contained subproblem: accumulated prefix plus reduced formula.

    ``formula`` is None for a dead branch (the reduction falsified a clause,
    or the branch's local constraints admitted no assignment).
    """

    prefix: PartialAssignment
    formula: CnfFormula | None
    depth: int

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        if self.formula is not None:
            overlap = set(self.prefix) & set(self.formula.universe)
            if overlap:
                raise ValueError(
                    f"prefix binds formula variables {sorted(overlap)}")

    @property
    def is_dead(self) -> bool:
        return self.formula is None


@dataclass(frozen=True)
class TreeNode:
    node_id: int
    parent: int  # -1 for the root
    item: WorkItem
    status: str
    # For internal nodes: ("clause", pivot_index) or ("vars", x1 tuple).
    step: tuple | None = None


class DecompositionTree:
    """Nodes in preorder; node 0 is the root, parent links define the shape."""

    def __init__(self, nodes: Sequence[TreeNode]):
        if not nodes or nodes[0].parent != -1:
            raise ValueError("first node must be the root with parent -1")
        self._nodes = tuple(nodes)
        children: dict[int, list[int]] = {n.node_id: [] for n in self._nodes}
        for node in self._nodes[1:]:
            children[node.parent].append(node.node_id)
        self._children = {k: tuple(v) for k, v in children.items()}

    @property
    def nodes(self) -> tuple[TreeNode, ...]:
        return self._nodes

    @property
    def root(self) -> TreeNode:
        return self._nodes[0]

    @property
    def root_universe(self) -> tuple[int, ...]:
        assert self.root.item.formula is not None
        return self.root.item.formula.universe

    def children(self, node_id: int) -> tuple[int, ...]:
        return self._children[node_id]

    def leaves(self) -> list[TreeNode]:
        return [n for n in self._nodes if n.status != INTERNAL]

    def solvable_leaves(self) -> list[TreeNode]:
        return [n for n in self._nodes if n.status == SOLVABLE]

    @property
    def all_dead(self) -> bool:
        return all(n.status == DEAD for n in self.leaves())

    def serialize(self) -> str:
        """Line-oriented text form, one node per line.

        Grammar (all tokens space-separated)::

            <id> <parent> <depth> <status> q <prefix-literals> 0
                [u <universe-vars> 0 c <nclauses> (<clause-literals> 0)*]

        The prefix is written as signed literals in ascending variable
        order.  Leaves that carry a formula append its universe and an
        inline clause block; internal and dead nodes stop after the prefix.
        """
        lines = []
        for node in self._nodes:
            parts = [str(node.node_id), str(node.parent), str(node.item.depth),
                     node.status, "q"]
            parts.extend(str(lit) for lit in node.item.prefix.to_literals())
            parts.append("0")
            if node.status in (SOLVABLE, TRIVIAL):
                f = node.item.formula
                parts.append("u")
                parts.extend(str(v) for v in f.universe)
                parts.append("0")
                parts.extend(["c", str(len(f.clauses))])
                for clause in f.clauses:
                    parts.extend(str(lit) for lit in clause.to_ints())
                    parts.append("0")
            lines.append(" ".join(parts))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CostEstimate:
    """Closed-form time estimate for solving by repeated decomposition.

    ``depth`` levels of decomposition, each removing ``threshold`` of the
    ``total_vars`` variables, leave a remainder block of size ``remainder``;
    the model charges the leaf-solve time compounded over the depth plus one
    substitution pass per level.
    """

    total_vars: int
    threshold: int
    depth: int
    remainder: int
    leaf_solve_time: float
    substitution_time: float
    total_time: float


def _leaf_status(formula: CnfFormula | None, n0: int | None) -> str:
    if formula is None:
        return DEAD
    if formula.is_empty:
        return TRIVIAL
    if n0 is None or len(formula.universe) <= n0:
        return SOLVABLE
    return INTERNAL


def clause_pivot_decompose(
    formula: CnfFormula, pivot_index: int
) -> list[WorkItem]:
    """Branch on every partial assignment of the pivot clause.

    Returns one WorkItem per assignment, in canonical assignment order.
    Branches whose reduction falsifies a clause are kept, flagged dead.
    The input is satisfiable iff some branch is satisfiable; branch
    solution sets may overlap, so gathering deduplicates.
    """
    if not 0 <= pivot_index < len(formula.clauses):
        raise ValueError(
            f"pivot index {pivot_index} out of range for "
            f"{len(formula.clauses)} clauses")
    pivot = formula.clauses[pivot_index]
    items = []
    for q in partial_assignments(pivot):
        reduced = substitute(formula, q)
        items.append(WorkItem(
            prefix=q,
            formula=None if reduced is UNSAT else reduced,
            depth=1,
        ))
    return items


def clause_pivot_tree(formula: CnfFormula, pivot_index: int) -> DecompositionTree:
    """One-level tree around clause_pivot_decompose, for tracing and solving.

    Every live branch is a terminal leaf regardless of size, so leaves are
    flagged solvable (or trivial/dead) with no variable bound.
    """
    items = clause_pivot_decompose(formula, pivot_index)
    root = TreeNode(
        node_id=0, parent=-1,
        item=WorkItem(PartialAssignment(), formula, 0),
        status=INTERNAL, step=("clause", pivot_index))
    nodes = [root]
    for item in items:
        nodes.append(TreeNode(
            node_id=len(nodes), parent=0, item=item,
            status=_leaf_status(item.formula, None)))
    return DecompositionTree(nodes)


def choose_var_subset(formula: CnfFormula, n0: int) -> tuple[int, ...]:
    """Pick a block of min(n0, |universe|) variables for partitioning.

    Greedy: grow the block one variable at a time, each step taking the
    variable that maximizes the number of clauses whose variables are fully
    inside the block, breaking ties by smallest variable id.
    """
    if n0 < 1:
        raise ValueError("n0 must be at least 1")
    universe = formula.universe
    clause_var_sets = [set(c.vars) for c in formula.clauses]
    chosen: set[int] = set()
    target = min(n0, len(universe))
    while len(chosen) < target:
        best_var = None
        best_count = -1
        for v in universe:
            if v in chosen:
                continue
            candidate = chosen | {v}
            count = sum(1 for vs in clause_var_sets if vs <= candidate)
            if count > best_count:
                best_var, best_count = v, count
        assert best_var is not None
        chosen.add(best_var)
    return tuple(sorted(chosen))


def partition(formula: CnfFormula, x1: Iterable[int]) -> Partition:
    """Split clauses by the variable block x1 (see Partition)."""
    x1_set = set(x1)
    extra = x1_set - set(formula.universe)
    if extra:
        raise ValueError(f"x1 contains foreign variables {sorted(extra)}")
    x2 = tuple(v for v in formula.universe if v not in x1_set)
    x2_set = set(x2)
    only_x1, mixed, only_x2 = [], [], []
    for clause in formula.clauses:
        vs = set(clause.vars)
        if vs <= x1_set:
            only_x1.append(clause)
        elif vs <= x2_set:
            only_x2.append(clause)
        else:
            mixed.append(clause)
    return Partition(
        only_x1=tuple(only_x1), mixed=tuple(mixed), only_x2=tuple(only_x2),
        x1=tuple(sorted(x1_set)), x2=x2)


def enumerate_c1_assignments(
    clauses: Iterable[Clause], x1: Iterable[int]
) -> list[PartialAssignment]:
    """All full assignments over x1 satisfying every given clause.

    Canonical ascending order of the assignments' bit encodings over the
    sorted block.  An empty result means the clauses are unsatisfiable over
    x1, which kills the whole subproblem.
    """
    x1 = tuple(sorted(set(x1)))
    clauses = tuple(clauses)
    for clause in clauses:
        stray = set(clause.vars) - set(x1)
        if stray:
            raise ValueError(
                f"clause {clause} touches variables {sorted(stray)} outside the block")
    if len(x1) > 20:
        raise CapacityError(
            f"refusing to enumerate 2**{len(x1)} assignments")
    out = []
    for encoded in range(1 << len(x1)):
        bindings = PartialAssignment(
            (v, bool(encoded >> j & 1)) for j, v in enumerate(x1))
        if all(c.satisfied_by(bindings) for c in clauses):
            out.append(bindings)
    return out


def var_partition_decompose(formula: CnfFormula, n0: int) -> DecompositionTree:
    """Recursively decompose until every live leaf has at most n0 variables.

    At each internal node: choose a block X1, partition the clauses,
    enumerate the X1 assignments allowed by the only-X1 clauses, and create
    one child per assignment holding the reduction of the whole formula
    under it (mixed clauses shrink, only-X2 clauses ride along unchanged).
    A node whose block admits no assignment is a dead leaf; if every leaf
    is dead the formula is unsatisfiable.
    """
    if n0 < 1:
        raise ValueError("n0 must be at least 1")
    nodes: list[TreeNode] = []

    def build(item: WorkItem, parent: int) -> None:
        node_id = len(nodes)
        f = item.formula
        status = _leaf_status(f, n0)
        if status != INTERNAL:
            nodes.append(TreeNode(node_id, parent, item, status))
            return
        assert f is not None
        x1 = choose_var_subset(f, n0)
        part = partition(f, x1)
        allowed = enumerate_c1_assignments(part.only_x1, x1)
        if not allowed:
            log.debug("block %s admits no assignment; branch dead", x1)
            nodes.append(TreeNode(node_id, parent, item, DEAD))
            return
        nodes.append(TreeNode(node_id, parent, item, INTERNAL, step=("vars", x1)))
        for q in allowed:
            reduced = substitute(f, q)
            child = WorkItem(
                prefix=item.prefix.merged(q),
                formula=None if reduced is UNSAT else reduced,
                depth=item.depth + 1)
            build(child, node_id)

    build(WorkItem(PartialAssignment(), formula, 0), -1)
    return DecompositionTree(nodes)


def estimate_cost(
    total_vars: int,
    threshold: int,
    leaf_solve_time: float,
    substitution_time: float,
) -> CostEstimate:
    """Average-time model: leaf time to the power of the decomposition depth
    plus one substitution pass per level.

    depth = total_vars div threshold, remainder = total_vars mod threshold,
    total = leaf_solve_time**depth + depth * substitution_time.
    """
    if total_vars < 0:
        raise ValueError("total_vars must be nonnegative")
    if threshold < 1:
        raise ValueError("threshold must be at least 1")
    if leaf_solve_time < 0 or substitution_time < 0:
        raise ValueError("times must be nonnegative")
    depth = total_vars // threshold
    remainder = total_vars % threshold
    total = leaf_solve_time ** depth + depth * substitution_time
    return CostEstimate(
        total_vars=total_vars,
        threshold=threshold,
        depth=depth,
        remainder=remainder,
        leaf_solve_time=leaf_solve_time,
        substitution_time=substitution_time,
        total_time=total,
    )
