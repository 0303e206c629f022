"""Command-line driver: parse DIMACS, decompose, solve leaves in parallel.

Exit status follows common solver conventions: 10 for satisfiable, 20 for
unsatisfiable, 0 for a decomposition-only run, 1 for any error.  Output is
deterministic and independent of the worker count, because gathering
canonicalizes the solution set.  Set COFSAT_LOG=DEBUG (or any logging level
name) for diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO

from .allsat import LeafResult, gather, solve_leaf
from .cnf import DimacsParseError, SolutionSet, parse_dimacs, to_truth_table
from .decompose import (
    SOLVABLE,
    TRIVIAL,
    DecompositionTree,
    clause_pivot_tree,
    var_partition_decompose,
)

__all__ = [
    "EXIT_OK",
    "EXIT_ERROR",
    "EXIT_SAT",
    "EXIT_UNSAT",
    "RunConfig",
    "run",
    "parallel_leaf_solve",
    "main",
]

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SAT = 10
EXIT_UNSAT = 20

MODES = ("sat", "allsat", "count", "decompose")
PIVOTS = ("clause", "vars")
FORMATS = ("text", "json")
ORACLE_MAX_VARS = 16


@dataclass
class RunConfig:
    """One solver invocation."""

    input_path: str
    mode: str = "sat"
    pivot_strategy: str = "vars"
    pivot_clause: int = 0
    n0: int = 8
    jobs: int = 1
    output_format: str = "text"
    verify: bool = False

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.pivot_strategy not in PIVOTS:
            raise ValueError(f"pivot strategy must be one of {PIVOTS}")
        if self.output_format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.n0 < 1:
            raise ValueError("n0 must be at least 1")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


def parallel_leaf_solve(tree: DecompositionTree, jobs: int) -> list[LeafResult]:
    """Solve every solvable leaf on a fixed-size worker pool.

    Work items are immutable and disjoint, so scheduling cannot affect the
    results; a worker failure propagates instead of yielding partial output.
    """
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    leaves = [n.item for n in tree.solvable_leaves()]
    if not leaves:
        return []
    if jobs == 1:
        return [solve_leaf(item) for item in leaves]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(solve_leaf, leaves))


def _build_tree(formula, config: RunConfig) -> DecompositionTree:
    if config.pivot_strategy == "clause":
        return clause_pivot_tree(formula, config.pivot_clause)
    return var_partition_decompose(formula, config.n0)


def _tree_as_json(tree: DecompositionTree) -> list[dict]:
    out = []
    for node in tree.nodes:
        entry = {
            "id": node.node_id,
            "parent": node.parent,
            "depth": node.item.depth,
            "status": node.status,
            "prefix": list(node.item.prefix.to_literals()),
        }
        if node.status in (SOLVABLE, TRIVIAL):
            entry["universe"] = list(node.item.formula.universe)
            entry["clauses"] = [
                list(c.to_ints()) for c in node.item.formula.clauses]
        out.append(entry)
    return out


def _verify_against_oracle(formula, solutions: SolutionSet) -> str | None:
    """Cross-check against dense truth-table evaluation; None means match."""
    table = to_truth_table(formula)
    expected = tuple(table.support())
    if solutions.rows != expected:
        return (f"verification mismatch: solver found {solutions.count} "
                f"solutions, oracle found {len(expected)}")
    return None


def run(config: RunConfig, out: IO[str] | None = None,
        err: IO[str] | None = None) -> int:
    """Execute one configured invocation; returns the process exit status."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        with open(config.input_path, "rb") as handle:
            formula = parse_dimacs(handle.read())
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    except DimacsParseError as exc:
        print(f"error: {config.input_path}: {exc}", file=err)
        return EXIT_ERROR
    log.debug("parsed %s: %d clauses over %d variables",
              config.input_path, len(formula.clauses), formula.num_vars)

    try:
        tree = _build_tree(formula, config)
        if config.mode == "decompose":
            if config.output_format == "json":
                print(json.dumps({"status": "OK", "tree": _tree_as_json(tree)}),
                      file=out)
            else:
                out.write(tree.serialize())
            return EXIT_OK

        results = parallel_leaf_solve(tree, config.jobs)
        solutions = gather(tree, results)
    except ValueError as exc:  # includes capacity errors
        print(f"error: {exc}", file=err)
        return EXIT_ERROR

    if config.verify and formula.num_vars <= ORACLE_MAX_VARS:
        mismatch = _verify_against_oracle(formula, solutions)
        if mismatch is not None:
            print(f"error: {mismatch}", file=err)
            return EXIT_ERROR
        log.debug("oracle cross-check passed (%d solutions)", solutions.count)

    sat = solutions.count > 0
    status = "SATISFIABLE" if sat else "UNSATISFIABLE"
    if config.output_format == "json":
        payload: dict = {"status": status, "count": solutions.count}
        if config.mode == "sat" and sat:
            payload["solutions"] = [list(solutions.row_to_literals(solutions.rows[0]))]
        elif config.mode == "allsat":
            payload["solutions"] = [
                list(solutions.row_to_literals(row)) for row in solutions.rows]
        print(json.dumps(payload), file=out)
    else:
        if config.mode == "sat":
            print(status, file=out)
            if sat:
                witness = solutions.row_to_literals(solutions.rows[0])
                print(" ".join([*(str(lit) for lit in witness), "0"]),
                      file=out)
        elif config.mode == "allsat":
            out.write(solutions.to_text())
        else:  # count
            print(solutions.count, file=out)
    return EXIT_SAT if sat else EXIT_UNSAT


def _configure_logging() -> None:
    level_name = os.environ.get("COFSAT_LOG", "").upper()
    if not level_name:
        return
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        try:
            level = int(level_name)
        except ValueError:
            level = logging.INFO
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s")


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cofsat",
        description="CNF satisfiability and all-solutions toolkit based on "
                    "cofactor decomposition.")
    parser.add_argument("--input", required=True, help="DIMACS CNF file")
    parser.add_argument("--mode", choices=MODES, default="sat")
    parser.add_argument("--pivot", choices=PIVOTS, default="vars",
                        dest="pivot_strategy",
                        help="decomposition strategy (default: vars)")
    parser.add_argument("--pivot-clause", type=int, default=0,
                        help="clause index for --pivot clause (default: 0)")
    parser.add_argument("--n0", type=int, default=8,
                        help="leaf size threshold for --pivot vars (default: 8)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel leaf workers (default: 1)")
    parser.add_argument("--format", choices=FORMATS, default="text",
                        dest="output_format")
    parser.add_argument("--verify", action="store_true",
                        help="cross-check results against the truth-table "
                             "oracle (formulas up to 16 variables)")
    return parser


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    args = build_arg_parser().parse_args(argv)
    try:
        config = RunConfig(
            input_path=args.input,
            mode=args.mode,
            pivot_strategy=args.pivot_strategy,
            pivot_clause=args.pivot_clause,
            n0=args.n0,
            jobs=args.jobs,
            output_format=args.output_format,
            verify=args.verify,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
