"""Group completions of presented commutative monoids, two ways.

A presented monoid lives on exponent vectors; its group completion is
Z^k modulo the lattice of relation differences, computed by an exact
Smith normal form.  The telescope route localizes at an anchor element
instead and must land on the same group whenever the anchor's powers
are cofinal ("stably group-like").
"""

from defkt import (
    FgCommMonoid,
    MonoidElement,
    add,
    equal_in_monoid,
    grothendieck_group,
    is_stably_group_like,
    stable_inverse,
    telescope_pi0_group,
)


def el(*exps):
    return MonoidElement(tuple(exps))


print("Free monoids complete to free groups")
print("------------------------------------")
free3 = FgCommMonoid(3)
print("N^3  ->", grothendieck_group(free3).describe())

print()
print("Relations can kill or twist the completion")
print("-------------------------------------------")
collapse = FgCommMonoid(1, relations=((el(1), el(2)),))        # x = 2x
torsion = FgCommMonoid(2, relations=((el(2, 0), el(0, 2)),))   # 2x = 2y
print("<x | x = 2x>   ->", grothendieck_group(collapse).describe())
print("<x,y | 2x = 2y> ->", grothendieck_group(torsion).describe())

print()
print("Deciding equality under the congruence is bounded search")
print("---------------------------------------------------------")
absorb = FgCommMonoid(2, relations=((el(1, 1), el(0, 3)),))    # x + y = 3y
print("x+y ~ 3y       :", equal_in_monoid(absorb, el(1, 1), el(0, 3)))
print("2x+y ~ x+3y    :", equal_in_monoid(absorb, el(2, 1), el(1, 3)))
# 2x and x+2y differ only after cancelling a y; the monoid congruence has
# no cancellation, and a bounded search cannot rule out a longer chain:
print("2x ~ x+2y      :", equal_in_monoid(absorb, el(2, 0), el(1, 2)),
      " (their difference does die in the completion)")

print()
print("Stable inverses in a free monoid")
print("--------------------------------")
# Against the anchor m = sum of all generators: pad every coordinate up to
# the maximum, c + inverse = (max exponent) * m on the nose.
free4 = FgCommMonoid(4)
c = el(3, 0, 2, 1)
inverse, n = stable_inverse(free4, c)
print(f"c = {c.exponents}, inverse = {inverse.exponents}, "
      f"c + inverse = {add(free4, c, inverse).exponents} = {n} * (1,1,1,1)")

print()
print("Telescope route vs completion route")
print("-----------------------------------")
for monoid, anchor, label in [
    (FgCommMonoid(4), el(1, 1, 1, 1), "N^4, anchor (1,1,1,1)"),
    (FgCommMonoid(2), el(2, 1), "N^2, anchor (2,1)"),
    (collapse, el(1), "<x | x = 2x>, anchor x"),
    (FgCommMonoid(1, relations=((el(2), el(0)),)), el(1), "<x | 2x = 0>, anchor x"),
]:
    verdict = is_stably_group_like(monoid, anchor)
    tele = telescope_pi0_group(monoid, anchor).describe()
    comp = grothendieck_group(monoid).describe()
    print(f"{label:<28} stably group-like: {verdict:<4} "
          f"telescope: {tele:<8} completion: {comp}")

print()
print("An anchor missing a generator is not cofinal:")
print("N^2, anchor (1,0) ->", is_stably_group_like(FgCommMonoid(2), el(1, 0)))
