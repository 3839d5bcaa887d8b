"""Counting components of representation spaces.

For a finite group, the n-dimensional unitary representations fall into
one component per multiset of irreducibles with degrees summing to n.
For cyclic groups that is stars-and-bars; for free products the counts
multiply dimension by dimension.
"""

import math

from defkt import (
    build_group,
    count_components,
    free_product_components,
    free_product_pi0,
    irrep_data,
    k0,
    parse_group_expr,
    pi0_rep_monoid,
)


def monoid_for(name: str):
    group = build_group(parse_group_expr(name))
    return pi0_rep_monoid(irrep_data(group), group.label)


print("Cyclic groups: stars and bars")
print("-----------------------------")
data = irrep_data(build_group(parse_group_expr("Z/3")))
for n in range(7):
    result = count_components(data, n)
    check = math.comb(n + 2, 2)
    print(f"dim {n}: {result.count:>3} components  (C(n+2,2) = {check})")

print()
print("Dimension 0 always has exactly one component, the empty representation:")
print(count_components(data, 0))

print()
print("S3 at dimension 2: degrees are 1,1,2")
print("------------------------------------")
s3 = irrep_data(build_group(parse_group_expr("S3")))
result = count_components(s3, 2)
for vec in result.representatives:
    pretty = " + ".join(
        f"{e}*irr{i + 1}" for i, e in enumerate(vec) if e
    )
    print(f"  {vec}  =  {pretty}")
print(f"total: {result.count}")

print()
print("Free products: counts multiply per dimension")
print("--------------------------------------------")
c2, c3 = monoid_for("Z/2"), monoid_for("Z/3")
product = free_product_pi0(c2, c3)
for n in range(5):
    print(f"dim {n}: Z/2 has {count_components(irrep_data(build_group(parse_group_expr('Z/2'))), n).count}, "
          f"Z/3 has {count_components(irrep_data(build_group(parse_group_expr('Z/3'))), n).count}, "
          f"Z/2 * Z/3 has {product.count_at(n)}")

print()
print("Components at dimension 1 of Z/2 * Z/3 (pairs of characters):")
for vec in free_product_components([c2, c3], 1).representatives:
    print(f"  left {vec[:2]}  right {vec[2:]}")

print()
print("Group completions of the component monoids")
print("------------------------------------------")
print("K0(Z/2)       =", k0(c2).describe())
print("K0(Z/3)       =", k0(c3).describe())
print("K0(Z/2 * Z/3) =", product.group.describe(),
      " (grades must agree across the two factors: one rank is lost)")
