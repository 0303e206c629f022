#!/usr/bin/env python3
"""Expanding a function over a base set of functions.

The classic Boole-Shannon split f = x*f(x=1) + x'*f(x=0) is the special
case of a much looser recipe: take ANY family G of nonzero functions whose
OR dominates f, pick ANY cofactor of f per member, and the weighted sum
reconstructs f exactly.  The base does not need to be orthonormal.
"""

import random

from cofsat import (
    BaseSet,
    TruthTable,
    cofactor_sample,
    expand,
    is_orthonormal,
    term_expansions,
)
from cofsat.expr import parse_function

rng = random.Random(1)

# 1. The Boole-Shannon split as an orthonormal term expansion.
f = parse_function("x0x1 + x1'x2", 3)
shannon = BaseSet.shannon(3, 0)  # {x0, x0'}
sum_form, product_form = term_expansions(f, shannon)
print("Boole-Shannon over {x0, x0'}:")
print("  sum form equals f:    ", sum_form == f)
print("  product form equals f:", product_form == f)

# 2. Minterms are the finest orthonormal term set.
minterms = BaseSet.minterms(3)
print("\nminterm base is orthonormal:", is_orthonormal(minterms))
s, p = term_expansions(f, minterms)
print("both dual forms equal f:", s == f and p == f)

# 3. Beyond orthonormality: expand over an arbitrary covering base.
g1 = parse_function("x0 + x1", 3)
g2 = parse_function("x1' + x2", 3)
base = BaseSet([g1, g2])
print("\nbase {x0+x1, x1'+x2} is orthonormal:", is_orthonormal(base))
h = parse_function("x0x2 + x1x2", 3)
print("h <= cover:", h <= base.cover)
for trial in range(3):
    alphas = [cofactor_sample(h, g, TruthTable(3, rng.getrandbits(8)))
              for g in base]
    print(f"  random cofactor choice {trial}: sum == h ->",
          expand(h, base, alphas) == h)

# 4. If f is not dominated by the cover, the sum clips to f & cover.
wide = parse_function("x0' + x2'", 3)
raw = expand(wide, base, [wide & g for g in base], require_cover=False)
print("\nuncovered operand clips to f & cover:", raw == (wide & base.cover))
