"""Symbolic CNF formulas: DIMACS I/O, clause SAT sets, and reduction.

Variables are positive integers as in DIMACS.  A clause is a set of
literals; a formula is an ordered, duplicate-free list of clauses together
with its variable universe.  Formulas and assignments are immutable values:
``substitute`` returns a new formula, so everything here is safe to share
across threads.

The key operations mirror the decomposition machinery: ``sat_set`` gives the
assignment making every literal of a clause true, ``partial_assignments``
enumerates its 2**k - 1 nonempty subsets in a fixed order, and
``substitute`` reduces a formula under a partial assignment, returning the
``UNSAT`` marker when a clause is falsified outright.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Union

from .boolfn import MAX_VARS, CapacityError, TruthTable

__all__ = [
    "NormalizationWarning",
    "DimacsParseError",
    "Literal",
    "Clause",
    "CnfFormula",
    "PartialAssignment",
    "SolutionSet",
    "UNSAT",
    "UnsatMarker",
    "parse_dimacs",
    "emit_dimacs",
    "sat_set",
    "partial_assignments",
    "substitute",
    "to_truth_table",
    "clause_vars",
    "formula_vars",
]


class NormalizationWarning(UserWarning):
    """A formula was silently normalized (tautology or duplicate dropped)."""


class DimacsParseError(ValueError):
    """Malformed DIMACS input; carries the 1-based source line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, order=True)
class Literal:
    """A variable occurrence with polarity; positive means unnegated."""

    var: int
    positive: bool

    def __post_init__(self) -> None:
        if self.var < 1:
            raise ValueError("variables are positive integers")

    @classmethod
    def from_int(cls, value: int) -> "Literal":
        if value == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(value), value > 0)

    def to_int(self) -> int:
        return self.var if self.positive else -self.var

    def negated(self) -> "Literal":
        return Literal(self.var, not self.positive)

    def __str__(self) -> str:
        return f"x{self.var}" if self.positive else f"x{self.var}'"


class Clause:
    """A disjunction of literals, stored deduplicated in variable order."""

    __slots__ = ("_literals",)

    def __init__(self, literals: Iterable[Union[Literal, int]]):
        seen = set()
        for lit in literals:
            if isinstance(lit, int):
                lit = Literal.from_int(lit)
            seen.add(lit)
        self._literals = tuple(sorted(seen))

    @property
    def literals(self) -> tuple[Literal, ...]:
        return self._literals

    @property
    def is_empty(self) -> bool:
        return not self._literals

    @property
    def is_tautology(self) -> bool:
        by_var: dict[int, bool] = {}
        for lit in self._literals:
            if by_var.get(lit.var, lit.positive) != lit.positive:
                return True
            by_var[lit.var] = lit.positive
        return False

    @property
    def vars(self) -> tuple[int, ...]:
        return tuple(sorted({lit.var for lit in self._literals}))

    def to_ints(self) -> tuple[int, ...]:
        return tuple(lit.to_int() for lit in self._literals)

    def satisfied_by(self, bindings: Mapping[int, bool]) -> bool:
        return any(
            lit.var in bindings and bindings[lit.var] == lit.positive
            for lit in self._literals)

    def __len__(self) -> int:
        return len(self._literals)

    def __iter__(self) -> Iterator[Literal]:
        return iter(self._literals)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Clause):
            return NotImplemented
        return self._literals == other._literals

    def __hash__(self) -> int:
        return hash(self._literals)

    def __str__(self) -> str:
        return "(" + " + ".join(str(lit) for lit in self._literals) + ")"

    def __repr__(self) -> str:
        return f"Clause({list(self.to_ints())!r})"


class UnsatMarker:
    """Sentinel result of a substitution that falsified a clause."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNSAT"


UNSAT = UnsatMarker()


class CnfFormula:
    """An ordered list of clauses over an explicit variable universe.

    Construction normalizes: tautological clauses and exact duplicates are
    dropped (with a NormalizationWarning), empty clauses are rejected.  The
    universe defaults to the variables that occur, and may be widened but
    never narrowed.
    """

    __slots__ = ("_clauses", "_universe")

    def __init__(
        self,
        clauses: Iterable[Union[Clause, Iterable[int]]],
        universe: Iterable[int] | None = None,
    ):
        normalized: list[Clause] = []
        seen: set[Clause] = set()
        for clause in clauses:
            if not isinstance(clause, Clause):
                clause = Clause(clause)
            if clause.is_empty:
                raise ValueError("formulas cannot contain the empty clause")
            if clause.is_tautology:
                warnings.warn(
                    f"dropped tautological clause {clause}", NormalizationWarning,
                    stacklevel=2)
                continue
            if clause in seen:
                warnings.warn(
                    f"dropped duplicate clause {clause}", NormalizationWarning,
                    stacklevel=2)
                continue
            seen.add(clause)
            normalized.append(clause)
        self._clauses = tuple(normalized)

        occurring = {v for c in self._clauses for v in c.vars}
        if universe is None:
            self._universe = tuple(sorted(occurring))
        else:
            universe_set = set(universe)
            missing = occurring - universe_set
            if missing:
                raise ValueError(
                    f"universe is missing occurring variables {sorted(missing)}")
            self._universe = tuple(sorted(universe_set))

    @property
    def clauses(self) -> tuple[Clause, ...]:
        return self._clauses

    @property
    def universe(self) -> tuple[int, ...]:
        return self._universe

    @property
    def num_vars(self) -> int:
        return len(self._universe)

    @property
    def is_empty(self) -> bool:
        return not self._clauses

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CnfFormula):
            return NotImplemented
        return self._clauses == other._clauses and self._universe == other._universe

    def __hash__(self) -> int:
        return hash((self._clauses, self._universe))

    def __str__(self) -> str:
        if not self._clauses:
            return "(empty)"
        return "".join(str(c) for c in self._clauses)

    def __repr__(self) -> str:
        return (f"CnfFormula({[list(c.to_ints()) for c in self._clauses]!r}, "
                f"universe={list(self._universe)!r})")


class PartialAssignment(Mapping):
    """An immutable finite mapping from variables to truth values."""

    __slots__ = ("_bindings", "_items")

    def __init__(
        self,
        bindings: Union[Mapping[int, bool], Iterable[tuple[int, bool]]] = (),
    ):
        if isinstance(bindings, Mapping):
            items = bindings.items()
        else:
            items = list(bindings)
        mapping: dict[int, bool] = {}
        for var, value in items:
            if var < 1:
                raise ValueError("variables are positive integers")
            value = bool(value)
            if mapping.get(var, value) != value:
                raise ValueError(f"conflicting bindings for variable {var}")
            mapping[var] = value
        self._bindings = mapping
        self._items = tuple(sorted(mapping.items()))

    @classmethod
    def from_literals(cls, literals: Iterable[int]) -> "PartialAssignment":
        return cls((abs(v), v > 0) for v in literals)

    def to_literals(self) -> tuple[int, ...]:
        return tuple(var if value else -var for var, value in self._items)

    def merged(self, other: "PartialAssignment") -> "PartialAssignment":
        """Union of two assignments; conflicting bindings raise ValueError."""
        return PartialAssignment(list(self._items) + list(other._items))

    def without(self, vars: Iterable[int]) -> "PartialAssignment":
        drop = set(vars)
        return PartialAssignment(
            (v, b) for v, b in self._items if v not in drop)

    def __getitem__(self, var: int) -> bool:
        return self._bindings[var]

    def __iter__(self) -> Iterator[int]:
        return iter(v for v, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __hash__(self) -> int:
        return hash(self._items)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PartialAssignment):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self._bindings == dict(other)
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}={int(b)}" for v, b in self._items)
        return f"PartialAssignment({{{inner}}})"


class SolutionSet:
    """Full assignments over an ordered variable list, canonically stored.

    Rows are bit-encoded integers (bit j is the value of ``over[j]``), kept
    sorted and duplicate-free.
    """

    __slots__ = ("_over", "_rows")

    def __init__(self, over: Iterable[int], rows: Iterable[int] = ()):
        self._over = tuple(sorted(set(over)))
        limit = 1 << len(self._over)
        unique = sorted(set(rows))
        for row in unique:
            if not 0 <= row < limit:
                raise ValueError(f"row {row} out of range for {len(self._over)} variables")
        self._rows = tuple(unique)

    @classmethod
    def from_assignments(
        cls, over: Iterable[int], assignments: Iterable[Mapping[int, bool]]
    ) -> "SolutionSet":
        over = tuple(sorted(set(over)))
        position = {v: j for j, v in enumerate(over)}
        rows = []
        for assignment in assignments:
            if set(assignment) != set(over):
                raise ValueError("assignment does not match the variable list")
            row = 0
            for v, value in assignment.items():
                if value:
                    row |= 1 << position[v]
            rows.append(row)
        return cls(over, rows)

    @classmethod
    def complete(cls, over: Iterable[int]) -> "SolutionSet":
        """All assignments over the variable list."""
        over = tuple(sorted(set(over)))
        if len(over) > 20:
            raise CapacityError(
                f"refusing to enumerate 2**{len(over)} assignments")
        return cls(over, range(1 << len(over)))

    @property
    def over(self) -> tuple[int, ...]:
        return self._over

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def count(self) -> int:
        return len(self._rows)

    def row_to_literals(self, row: int) -> tuple[int, ...]:
        return tuple(
            v if row >> j & 1 else -v for j, v in enumerate(self._over))

    def assignments(self) -> Iterator[PartialAssignment]:
        for row in self._rows:
            yield PartialAssignment(
                (v, bool(row >> j & 1)) for j, v in enumerate(self._over))

    def to_text(self, count_only: bool = False) -> str:
        """One row per line as 0-terminated signed literals, or just the count."""
        if count_only:
            return f"{self.count}\n"
        return "".join(
            " ".join([*(str(lit) for lit in self.row_to_literals(row)), "0"])
            + "\n"
            for row in self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self._rows)

    def __contains__(self, row: int) -> bool:
        return row in self._rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SolutionSet):
            return NotImplemented
        return self._over == other._over and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._over, self._rows))

    def __repr__(self) -> str:
        return f"SolutionSet(over={self._over!r}, rows={len(self._rows)})"


# -- DIMACS ---------------------------------------------------------------


def parse_dimacs(source: Union[str, bytes]) -> CnfFormula:
    """Parse DIMACS CNF text into a formula over universe {1..nvars}.

    Comment lines start with 'c'; a single ``p cnf <nvars> <nclauses>``
    header precedes the clauses; clauses are 0-terminated signed integers
    and may span lines.  Normalization (dropped tautologies or duplicates)
    and a clause count differing from the header produce warnings, not
    errors.
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8")

    num_vars = None
    num_clauses_declared = 0
    raw_clauses: list[list[int]] = []
    current: list[int] = []
    current_start_line = 0

    for lineno, line in enumerate(source.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            if num_vars is not None:
                raise DimacsParseError("duplicate header", lineno)
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsParseError(f"malformed header {stripped!r}", lineno)
            try:
                num_vars = int(parts[2])
                num_clauses_declared = int(parts[3])
            except ValueError:
                raise DimacsParseError(f"malformed header {stripped!r}", lineno) from None
            if num_vars < 0 or num_clauses_declared < 0:
                raise DimacsParseError("negative counts in header", lineno)
            continue
        if num_vars is None:
            raise DimacsParseError("clause before header", lineno)
        for token in stripped.split():
            try:
                value = int(token)
            except ValueError:
                raise DimacsParseError(f"bad token {token!r}", lineno) from None
            if value == 0:
                if not current:
                    raise DimacsParseError("empty clause", lineno)
                raw_clauses.append(current)
                current = []
                continue
            if abs(value) > num_vars:
                raise DimacsParseError(
                    f"literal {value} out of range 1..{num_vars}", lineno)
            if not current:
                current_start_line = lineno
            current.append(value)

    if num_vars is None:
        raise DimacsParseError("missing 'p cnf' header", 1)
    if current:
        raise DimacsParseError("unterminated clause", current_start_line)
    if len(raw_clauses) != num_clauses_declared:
        warnings.warn(
            f"header declares {num_clauses_declared} clauses, found {len(raw_clauses)}",
            NormalizationWarning, stacklevel=2)

    formula = CnfFormula(raw_clauses, universe=range(1, num_vars + 1))
    if len(formula.clauses) != len(raw_clauses):
        warnings.warn(
            f"normalization reduced {len(raw_clauses)} clauses to "
            f"{len(formula.clauses)}", NormalizationWarning, stacklevel=2)
    return formula


def emit_dimacs(formula: CnfFormula) -> str:
    """Serialize to DIMACS text: LF newlines, one clause per line.

    Round-trips exactly through parse_dimacs for normalized formulas, i.e.
    those whose universe is {1..nvars}.
    """
    num_vars = max(formula.universe, default=0)
    lines = [f"p cnf {num_vars} {len(formula.clauses)}"]
    for clause in formula.clauses:
        lines.append(" ".join(str(lit) for lit in clause.to_ints()) + " 0")
    return "\n".join(lines) + "\n"


# -- clause-level operations ----------------------------------------------


def sat_set(clause: Clause) -> PartialAssignment:
    """The assignment making every literal of the clause true."""
    if clause.is_empty:
        raise ValueError("the empty clause has no SAT set")
    return PartialAssignment((lit.var, lit.positive) for lit in clause)


def partial_assignments(clause: Clause) -> list[PartialAssignment]:
    """All 2**k - 1 nonempty subsets of the clause's SAT set.

    Emitted in canonical order: ascending subset size, then lexicographic by
    literal position within the variable-sorted clause.
    """
    if clause.is_empty:
        raise ValueError("the empty clause defines no partial assignments")
    literals = clause.literals
    out = []
    for size in range(1, len(literals) + 1):
        for combo in combinations(literals, size):
            out.append(PartialAssignment((l.var, l.positive) for l in combo))
    return out


def substitute(
    formula: CnfFormula, bindings: Mapping[int, bool]
) -> Union[CnfFormula, UnsatMarker]:
    """Reduce a formula under a partial assignment.

    Satisfied clauses are dropped, falsified literals removed, surviving
    duplicates merged.  A clause losing all its literals means the reduced
    formula is unsatisfiable: the UNSAT marker is returned.  The universe of
    the result is the unbound remainder of the input universe.
    """
    new_clauses: list[Clause] = []
    seen: set[Clause] = set()
    for clause in formula.clauses:
        survivors = []
        satisfied = False
        for lit in clause:
            bound = bindings.get(lit.var)
            if bound is None:
                survivors.append(lit)
            elif bound == lit.positive:
                satisfied = True
                break
        if satisfied:
            continue
        if not survivors:
            return UNSAT
        reduced = Clause(survivors)
        if reduced in seen:
            continue
        seen.add(reduced)
        new_clauses.append(reduced)
    remaining = tuple(v for v in formula.universe if v not in bindings)
    return CnfFormula(new_clauses, universe=remaining)


def to_truth_table(formula: CnfFormula) -> TruthTable:
    """Dense truth table of the formula over its sorted universe.

    Variable at universe position j maps to table variable j.  This is the
    independent evaluation path used to cross-check the enumerating solver.
    """
    n = len(formula.universe)
    if n > MAX_VARS:
        raise CapacityError(
            f"truth tables support at most {MAX_VARS} variables, formula has {n}")
    position = {v: j for j, v in enumerate(formula.universe)}
    table = TruthTable.constant(n, True)
    for clause in formula.clauses:
        acc = TruthTable.constant(n, False)
        for lit in clause:
            var_table = TruthTable.variable(n, position[lit.var])
            acc = acc | (var_table if lit.positive else ~var_table)
        table = table & acc
    return table


def clause_vars(clause: Clause) -> tuple[int, ...]:
    """Sorted distinct variables of a clause."""
    return clause.vars


def formula_vars(formula: CnfFormula) -> tuple[int, ...]:
    """Sorted distinct variables occurring in the formula's clauses."""
    return tuple(sorted({v for c in formula.clauses for v in c.vars}))
