"""Brute-force reference computations for the test suite.

Everything here recomputes results along routes independent of the
library code paths they check: congruence questions by exhaustive
union-find closure over a bounded universe, group completions by
discovering kernel vectors of the difference map empirically and handing
them to sympy's Smith form, component counts by direct enumeration, and
telescope classes by merging an explicit universe of (element, stage)
pairs.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from defkt.commutative_monoid import FgCommMonoid, MonoidElement


class UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def vectors_with_total_at_most(k: int, bound: int):
    """All tuples in N^k with coordinate sum <= bound."""
    if k == 0:
        yield ()
        return
    for head in range(bound + 1):
        for tail in vectors_with_total_at_most(k - 1, bound - head):
            yield (head,) + tail


def congruence_closure(monoid: FgCommMonoid, state_bound: int) -> UnionFind:
    """Union-find over all states of total exponent <= state_bound, merged
    along every applicable one-step rewrite whose result stays in bounds."""
    k = monoid.generator_count
    steps = []
    for u, v in monoid.relations:
        steps.append((u.exponents, v.exponents))
    uf = UnionFind()
    for state in vectors_with_total_at_most(k, state_bound):
        uf.add(state)
    for state in list(uf.parent):
        for u, v in steps:
            if all(s >= a for s, a in zip(state, u)):
                target = tuple(s - a + b for s, a, b in zip(state, u, v))
                if sum(target) <= state_bound:
                    uf.union(state, target)
    return uf


def brute_congruent(uf: UnionFind, a, b) -> bool:
    return uf.find(tuple(a)) == uf.find(tuple(b))


def signed_vectors(k: int, radius: int):
    """All z in Z^k with sum |z_i| <= radius."""
    for mags in vectors_with_total_at_most(k, radius):
        nonzero = [i for i, m in enumerate(mags) if m]
        for signs in itertools.product((1, -1), repeat=len(nonzero)):
            z = list(mags)
            for i, s in zip(nonzero, signs):
                z[i] *= s
            yield tuple(z)


def brute_kernel_vectors(
    monoid: FgCommMonoid,
    uf: UnionFind,
    z_radius: int = 8,
    pad_radius: int = 4,
):
    """Vectors z with z+ + e ~ z- + e for some padding e: the differences
    that die in the group completion, found by exhaustive search.

    The kernel is symmetric under negation, so only the half-ball with
    positive leading sign is scanned; spans are unaffected.
    """
    pads = sorted(vectors_with_total_at_most(monoid.generator_count, pad_radius), key=sum)
    roots = {state: uf.find(state) for state in uf.parent}
    found = []
    for z in signed_vectors(monoid.generator_count, z_radius):
        leading = next((v for v in z if v), None)
        if leading is None or leading < 0:
            continue
        pos = tuple(max(v, 0) for v in z)
        neg = tuple(max(-v, 0) for v in z)
        for e in pads:
            a = tuple(p + x for p, x in zip(pos, e))
            b = tuple(m + x for m, x in zip(neg, e))
            if roots[a] == roots[b]:
                found.append(z)
                break
    return found


def gr_oracle(monoid: FgCommMonoid, z_radius: int = 8, pad_radius: int = 3,
              state_bound: int = 14):
    """(rank, torsion) of the group completion, via empirically discovered
    kernel vectors and sympy's Smith form."""
    k = monoid.generator_count
    uf = congruence_closure(monoid, state_bound)
    kernel = brute_kernel_vectors(monoid, uf, z_radius, pad_radius)
    kernel = [z for z in kernel if any(z)]
    if not kernel:
        return k, ()
    diag = sympy_invariant_factors(Matrix(kernel), domain=ZZ)
    nonzero = [int(d) for d in diag if d]
    return k - len(nonzero), tuple(int(d) for d in nonzero if d > 1)


def presented_monoid_family():
    """Every presented monoid with <= 3 generators and <= 2 relations of
    total exponent <= 4, up to permuting the generators."""
    monoids = []
    for k in (1, 2, 3):
        relations = []
        vecs = list(vectors_with_total_at_most(k, 4))
        for u in vecs:
            for v in vecs:
                if u < v and sum(u) + sum(v) <= 4:
                    relations.append((u, v))
        perms = list(itertools.permutations(range(k)))

        def canonical(rel_set):
            best = None
            for p in perms:
                image = tuple(sorted(
                    tuple(sorted((tuple(u[i] for i in p), tuple(v[i] for i in p))))
                    for u, v in rel_set
                ))
                if best is None or image < best:
                    best = image
            return best

        seen = set()
        for count in (0, 1, 2):
            for combo in itertools.combinations(relations, count):
                key = canonical(combo)
                if key in seen:
                    continue
                seen.add(key)
                monoids.append(
                    FgCommMonoid(
                        generator_count=k,
                        relations=tuple(
                            (MonoidElement(u), MonoidElement(v)) for u, v in combo
                        ),
                    )
                )
    return monoids


def telescope_universe_classes(monoid: FgCommMonoid, m: MonoidElement,
                               state_bound: int = 12, stage_bound: int = 6):
    """Classes of (element, stage) pairs under the telescope identifications,
    merged exhaustively inside a bounded universe.  Returns a dict mapping
    each pair to its class root."""
    k = monoid.generator_count
    uf = UnionFind()
    states = [s for s in vectors_with_total_at_most(k, state_bound)]
    for n in range(stage_bound + 1):
        for s in states:
            uf.add((s, n))
    closure = congruence_closure(monoid, state_bound)
    rep_of = {}
    for s in states:
        rep_of.setdefault(closure.find(s), []).append(s)
    for n in range(stage_bound + 1):
        for members in rep_of.values():
            first = members[0]
            for other in members[1:]:
                uf.union((first, n), (other, n))
    mexp = m.exponents
    for n in range(stage_bound):
        for s in states:
            shifted = tuple(a + b for a, b in zip(s, mexp))
            if sum(shifted) <= state_bound:
                uf.union((s, n), (shifted, n + 1))
    return {pair: uf.find(pair) for pair in uf.parent}


def enumerate_grade_vectors(degrees, n):
    """Exponent vectors with sum e_i * d_i = n, via multisets of summands.

    Enumerates multisets of irreducible indices whose degrees sum to n
    (sizes 0..n since every degree is >= 1), then converts each multiset
    to its exponent vector.
    """
    k = len(degrees)
    out = []
    for size in range(n + 1):
        for combo in itertools.combinations_with_replacement(range(k), size):
            if sum(degrees[i] for i in combo) == n:
                vec = [0] * k
                for i in combo:
                    vec[i] += 1
                out.append(tuple(vec))
    return out


def exact_residual_is_zero(value) -> bool:
    if isinstance(value, Fraction):
        return value == 0
    return abs(value) < 1e-9
