#!/usr/bin/env python3
"""Cofactors of a Boolean function relative to another function.

The cofactors of f relative to a nonzero g are all functions that agree
with f wherever g is 1.  They form the interval [f*g, f+g'], and every
member can be written f*g + p*g' for some free parameter p.
"""

from cofsat import TruthTable, cofactor_interval, cofactor_sample, is_cofactor
from cofsat.expr import parse_function


def show(label, table):
    print(f"{label:>10}: {''.join('1' if v else '0' for v in table.values())}"
          f"   ({table.support_size} ones)")


f = parse_function("x0'x1 + x1x2 + x0x2'", 3)
g = parse_function("x0' + x2", 3)

print("Truth tables are printed position 0 first; bit j of a position")
print("is the value of variable j.\n")
show("f", f)
show("g", g)

interval = cofactor_interval(f, g)
print("\nThe cofactor set of f relative to g is the interval [f*g, f+g']:")
show("lower", interval.lower)
show("upper", interval.upper)

print("\nHere the lower endpoint happens to be x1*g, and the upper is f itself:")
print("  lower == x1 & g :", interval.lower == (parse_function("x1", 3) & g))
print("  upper == f      :", interval.upper == f)

print("\nEvery choice of the parameter p gives a valid cofactor f*g + p*g':")
for bits in (0b00000000, 0b10101010, 0b11111111):
    p = TruthTable(3, bits)
    alpha = cofactor_sample(f, g, p)
    print(f"  p=0b{bits:08b} -> member={is_cofactor(alpha, f, g)}, "
          f"in interval={interval.contains(alpha)}")

count = sum(
    1 for bits in range(256) if is_cofactor(TruthTable(3, bits), f, g))
print(f"\nCounting members over all 256 candidate functions: {count}")
print(f"Predicted by 2^(2^n - |supp g|) = 2^(8 - {g.support_size}):",
      1 << (8 - g.support_size))
