"""Homotopy ranks of deformation K-theory across group expressions.

The star computation: the modular group PSL_2(Z) is the free product
Z/2 * Z/3, and its deformation K-theory has rank 4 in every even degree
and vanishes in odd degrees.  This script walks from the base cases to
that answer and a few relatives.
"""

from defkt import homotopy_groups, kdef, parse_group_expr, render_group_expr

MAX_DEGREE = 8


def show(text: str) -> None:
    expr = parse_group_expr(text)
    w = kdef(expr)
    ranks = homotopy_groups(w, MAX_DEGREE).ranks
    print(f"{render_group_expr(expr):>18}   shifts {str(w.shifts):<18} "
          f"ranks 0..{MAX_DEGREE}: {list(ranks)}")


print("Base cases")
print("----------")
# The trivial group contributes a single unshifted copy of ku: Z in even
# degrees, 0 in odd degrees.
show("1")
# A finite group contributes one unshifted copy per irreducible.
show("Z/3")
show("S3")
show("Q8")
# The integers contribute ku plus a single suspension, so every degree
# from 0 on has rank 1.
show("Z")

print()
print("Free products")
print("-------------")
# The excision rule on ranks: r_j(G*H) = r_j(G) + r_j(H) - r_j(1).
# Odd degrees add outright; even degrees lose one copy of the shared
# trivial summand.
show("Z/2 * Z/3")          # PSL_2(Z): rank 4 even, 0 odd
show("Z/2 * Z/2")
show("S3 * Q8")

print()
# Free groups are iterated free products of Z; each extra factor adds one
# suspended summand.
for rank in (1, 2, 3, 4):
    show(f"F{rank}")

print()
# The trivial group is the unit of the free product.
show("1 * Z/5 * 1")
