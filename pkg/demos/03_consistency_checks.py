#!/usr/bin/env python3
"""Deciding satisfiability of f = 1 through expansion coefficients.

Once f is expanded over a base, f = 1 is consistent exactly when one of the
per-member systems (alpha_i = 1, g_i = 1) is consistent, and the outcome is
independent of which cofactor was picked.  Over an orthonormal base the
witnessing member is unique at every satisfying point.
"""

from cofsat import (
    BaseSet,
    TruthTable,
    consistency_over_base,
    consistency_over_on,
)
from cofsat.expr import parse_function

# A CNF-shaped product: each factor doubles as a base member, because the
# product of clauses is always dominated by their sum.
clauses = [
    parse_function("x0'+x1+x3", 4),
    parse_function("x1'+x2+x3'", 4),
    parse_function("x0+x2+x3'", 4),
    parse_function("x0+x2'+x3'", 4),
]
f = clauses[0]
for c in clauses[1:]:
    f = f & c

base = BaseSet(clauses)
verdict = consistency_over_base(f, base)
print("product of 4 clauses, expanded over the clauses themselves:")
print("  satisfiable:", verdict.sat)
print("  witnessing member index:", verdict.witness_index)
print("  witness point (bit j = value of variable j):",
      format(verdict.witness_point, "04b"))
print("  f at witness:", f.evaluate(verdict.witness_point))

zero = TruthTable.constant(4, False)
print("\nconstant 0 over the same base:",
      consistency_over_base(zero, base))

# Orthonormal case: the witnessing member is unique per point.
phi = BaseSet.minterms(3)
g = parse_function("x0x1 + x2'", 3)
on_verdict = consistency_over_on(g, phi)
print("\nover the minterm base:")
print("  satisfiable:", on_verdict.sat,
      "| unique member at witness:", on_verdict.exactly_one)
print("  minterm index equals the witness point:",
      on_verdict.witness_index == on_verdict.witness_point)
