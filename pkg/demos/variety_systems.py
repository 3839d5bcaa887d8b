"""Polynomial systems cutting out representation spaces.

A presentation <g_1,...,g_k | r_i> and a size n give a real algebraic
description of the n-dimensional representations: unitarity (or formal
inverses, in the general linear flavor) per generator plus one matrix
equation per relator, expanded into integer polynomials in the real and
imaginary parts of the matrix entries.
"""

import math
from fractions import Fraction

from defkt import (
    EmitOptions,
    evaluate_system,
    gl_variety,
    parse_presentation,
    system_to_text,
    unitary_variety,
)

print("One free generator, one dimension: the unit circle U(1)")
print("--------------------------------------------------------")
circle = unitary_variety(parse_presentation("<a | >"), 1)
print(system_to_text(circle))

print("Adding the relator a^2: the two square roots of 1")
print("--------------------------------------------------")
square = unitary_variety(parse_presentation("<a | a^2>"), 1)
print(system_to_text(square))
for point in [(1, 0), (-1, 0), (0, 1)]:
    residuals = evaluate_system(square, [Fraction(v) for v in point])
    verdict = "solution" if all(r == 0 for r in residuals) else f"residuals {residuals}"
    print(f"  a = {point[0]}+{point[1]}i : {verdict}")

print()
print("Fifth roots of unity solve <a | a^5> at n = 1 (float check)")
print("-----------------------------------------------------------")
fifth = unitary_variety(parse_presentation("<a | a^5>"), 1)
for j in range(5):
    point = (math.cos(2 * math.pi * j / 5), math.sin(2 * math.pi * j / 5))
    worst = max(abs(r) for r in evaluate_system(fifth, point))
    print(f"  j={j}: worst residual {worst:.2e}")

print()
print("General linear flavor: formal inverses instead of unitarity")
print("------------------------------------------------------------")
gl = gl_variety(parse_presentation("<a | a^2>"), 1)
print(system_to_text(gl))
print("a = b = -1 is a (non-compact) solution:",
      evaluate_system(gl, [Fraction(-1), Fraction(0), Fraction(-1), Fraction(0)]))

print()
print("Two dimensions: variables per generator grow as 2n^2")
print("-----------------------------------------------------")
pres = parse_presentation("<a,b | abAB>")  # commuting pairs in U(2)
system = unitary_variety(pres, 2)
print(f"{len(system.variables)} variables, {len(system.polynomials)} equations")
print("first few variables:", ", ".join(system.variables[:6]), "...")

print()
print("Long relators: prefix variables keep every equation quadratic")
print("--------------------------------------------------------------")
long_pres = parse_presentation("<a | a^6>")
dense = unitary_variety(long_pres, 1)
chained = unitary_variety(long_pres, 1, EmitOptions(prefix_vars=True))
dense_deg = max(sum(e) for poly in dense.polynomials for _, e in poly)
chain_deg = max(sum(e) for poly in chained.polynomials for _, e in poly)
print(f"dense: {len(dense.variables)} variables, max degree {dense_deg}")
print(f"prefixed: {len(chained.variables)} variables, max degree {chain_deg}")
