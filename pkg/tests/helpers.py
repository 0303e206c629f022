"""Shared test utilities: independent oracles and random generators.

The brute-force oracle here evaluates signed-literal clauses directly over
raw integers, touching none of the package's truth-table or backtracking
code, so it can arbitrate between them.
"""

from __future__ import annotations

import random
from typing import Sequence

from cofsat import BaseSet, CnfFormula, TruthTable


def brute_force_rows(
    clauses: Sequence[Sequence[int]], universe: Sequence[int]
) -> list[int]:
    """Satisfying assignments of signed-literal clauses, bit-encoded over
    the sorted universe (bit j = value of universe[j])."""
    universe = sorted(universe)
    position = {v: j for j, v in enumerate(universe)}
    rows = []
    for p in range(1 << len(universe)):
        if all(
            any((lit > 0) == bool(p >> position[abs(lit)] & 1) for lit in clause)
            for clause in clauses
        ):
            rows.append(p)
    return rows


def random_table(rng: random.Random, num_vars: int) -> TruthTable:
    return TruthTable(num_vars, rng.getrandbits(1 << num_vars))


def random_nonzero_table(rng: random.Random, num_vars: int) -> TruthTable:
    while True:
        t = random_table(rng, num_vars)
        if not t.is_zero:
            return t


def random_base(rng: random.Random, num_vars: int, size: int) -> BaseSet:
    return BaseSet(random_nonzero_table(rng, num_vars) for _ in range(size))


def random_3cnf_clauses(
    rng: random.Random, num_vars: int, num_clauses: int
) -> list[list[int]]:
    """Distinct 3-literal clauses over distinct variables (no tautologies,
    no duplicate clauses)."""
    seen = set()
    clauses = []
    attempts = 0
    while len(clauses) < num_clauses:
        attempts += 1
        if attempts > 200 * num_clauses:
            break  # tiny universes cannot host that many distinct clauses
        vars_ = rng.sample(range(1, num_vars + 1), 3)
        clause = [v if rng.random() < 0.5 else -v for v in vars_]
        key = frozenset(clause)
        if key in seen:
            continue
        seen.add(key)
        clauses.append(sorted(clause, key=abs))
    return clauses


def random_formula(
    rng: random.Random, num_vars: int, num_clauses: int
) -> CnfFormula:
    return CnfFormula(
        random_3cnf_clauses(rng, num_vars, num_clauses),
        universe=range(1, num_vars + 1))


EXAMPLE2_CLAUSES = [[-1, 2, 4], [-2, 3, -4], [1, 3, -4], [1, -3, -4]]


def example2_formula() -> CnfFormula:
    return CnfFormula(EXAMPLE2_CLAUSES, universe=[1, 2, 3, 4])
