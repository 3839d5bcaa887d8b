"""Component monoids of unitary representation spaces of finite groups.

For a finite group, components of the n-dimensional representation space
are classified by the multiset of irreducible summands: the component
monoid under block sum is the free commutative monoid on the
irreducibles, graded by degree.  Counting components of the
n-dimensional space is then counting exponent vectors of grade n.

For a free product the n-dimensional representation space is the product
of the factors' n-dimensional spaces, so its components at grade n are
pairs of factor components at grade n.  The group completion of that
graded pullback is taken to be the lattice of integer vectors whose
factor grades all agree — the kernel of the grade-difference map — which
is what the degree-zero excision computation forces on the groups
handled here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .commutative_monoid import (
    FgAbelianGroup,
    FgCommMonoid,
    grothendieck_group,
    invariant_factors,
)
from .finite_groups import IrrepData

REPRESENTATIVE_CAP = 1000


@dataclass(frozen=True)
class Pi0RepMonoid:
    """Free graded monoid on the irreducibles of one group."""

    base: FgCommMonoid
    generator_labels: tuple[str, ...]
    group_label: str

    def __post_init__(self):
        if not self.base.is_free:
            raise ValueError("component monoid must be free")
        if self.base.grades is None:
            raise ValueError("component monoid must be graded by degree")
        if self.base.generator_count < 1:
            raise ValueError("every group has at least the trivial irreducible")
        if len(self.generator_labels) != self.base.generator_count:
            raise ValueError("need one label per generator")

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.base.grades


def pi0_rep_monoid(data: IrrepData, label: str) -> Pi0RepMonoid:
    """Free graded monoid on k generators with grades the irreducible degrees."""
    if data.degrees is None:
        raise ValueError(
            f"{label}: irreducible degrees unavailable, component monoid undefined"
        )
    base = FgCommMonoid(
        generator_count=data.class_count,
        grades=tuple(data.degrees),
    )
    labels = tuple(f"irr{i + 1}" for i in range(data.class_count))
    return Pi0RepMonoid(base=base, generator_labels=labels, group_label=label)


@dataclass(frozen=True)
class ComponentCount:
    """Components of the grade-n slice, with capped lexicographic representatives."""

    n: int
    count: int
    representatives: tuple[tuple[int, ...], ...]
    truncated: bool


def _count_graded_vectors(degrees: Sequence[int], n: int) -> int:
    # Bounded-coin dynamic program over the degree multiset.
    ways = [0] * (n + 1)
    ways[0] = 1
    for d in degrees:
        for total in range(d, n + 1):
            ways[total] += ways[total - d]
    return ways[n]


def _iter_graded_vectors(degrees: Sequence[int], n: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors e >= 0 with sum e_i * d_i = n, ascending lexicographic."""
    k = len(degrees)

    def rec(prefix: list[int], i: int, remaining: int):
        if i == k:
            if remaining == 0:
                yield tuple(prefix)
            return
        if i == k - 1:
            if remaining % degrees[i] == 0:
                yield tuple(prefix + [remaining // degrees[i]])
            return
        for e in range(remaining // degrees[i] + 1):
            prefix.append(e)
            yield from rec(prefix, i + 1, remaining - e * degrees[i])
            prefix.pop()

    yield from rec([], 0, n)


def count_components(data: IrrepData, n: int, *, cap: int = REPRESENTATIVE_CAP) -> ComponentCount:
    """Components of the n-dimensional representation space.

    n = 0 has exactly one component, the empty representation.
    """
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if data.degrees is None:
        raise ValueError("irreducible degrees unavailable, cannot grade components")
    count = _count_graded_vectors(data.degrees, n)
    reps: list[tuple[int, ...]] = []
    truncated = False
    for vec in _iter_graded_vectors(data.degrees, n):
        if len(reps) >= cap:
            truncated = True
            break
        reps.append(vec)
    return ComponentCount(n=n, count=count, representatives=tuple(reps), truncated=truncated)


def k0(monoid: Pi0RepMonoid) -> FgAbelianGroup:
    """Group completion of the component monoid: free of rank #irreducibles."""
    return grothendieck_group(monoid.base)


def free_product_k0(factors: Sequence[Pi0RepMonoid]) -> FgAbelianGroup:
    """Group completion of the graded pullback of several component monoids.

    The lattice consists of integer vectors (z_1 | ... | z_r) whose factor
    grades agree pairwise; its rank is computed from the Smith form of the
    (r-1)-row grade-difference matrix.  Kernels of maps to free groups are
    free, so there is never torsion.
    """
    if not factors:
        raise ValueError("need at least one factor")
    total = sum(f.base.generator_count for f in factors)
    if len(factors) == 1:
        return FgAbelianGroup(rank=total)
    widths = [f.base.generator_count for f in factors]
    starts = [sum(widths[:i]) for i in range(len(factors))]
    rows = []
    for a in range(len(factors) - 1):
        row = [0] * total
        for i, d in enumerate(factors[a].degrees):
            row[starts[a] + i] = d
        for i, d in enumerate(factors[a + 1].degrees):
            row[starts[a + 1] + i] = -d
        rows.append(row)
    constraint_rank = len(invariant_factors(rows))
    return FgAbelianGroup(rank=total - constraint_rank)


@dataclass(frozen=True)
class FreeProductPi0:
    """Graded pullback of two component monoids, with its group completion.

    The grade-n components are pairs (component of the left factor at
    grade n, component of the right factor at grade n); representatives
    are emitted as concatenated exponent vectors.
    """

    left: Pi0RepMonoid
    right: Pi0RepMonoid
    group: FgAbelianGroup

    def count_at(self, n: int) -> int:
        return _count_graded_vectors(self.left.degrees, n) * _count_graded_vectors(
            self.right.degrees, n
        )

    def components_at(self, n: int, *, cap: int = REPRESENTATIVE_CAP) -> ComponentCount:
        return free_product_components([self.left, self.right], n, cap=cap)


def free_product_pi0(a: Pi0RepMonoid, b: Pi0RepMonoid) -> FreeProductPi0:
    """Graded pullback of two component monoids plus its group completion."""
    return FreeProductPi0(left=a, right=b, group=free_product_k0([a, b]))


def free_product_components(
    factors: Sequence[Pi0RepMonoid], n: int, *, cap: int = REPRESENTATIVE_CAP
) -> ComponentCount:
    """Grade-n components across a free product: the per-factor counts multiply.

    Representatives are concatenations of per-factor exponent vectors, in
    lexicographic order of the concatenated vector, capped like
    :func:`count_components`.
    """
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if not factors:
        raise ValueError("need at least one factor")
    count = 1
    for f in factors:
        count *= _count_graded_vectors(f.degrees, n)

    reps: list[tuple[int, ...]] = []
    truncated = False

    def rec(prefix: tuple[int, ...], i: int):
        nonlocal truncated
        if truncated:
            return
        if i == len(factors):
            if len(reps) >= cap:
                truncated = True
            else:
                reps.append(prefix)
            return
        for vec in _iter_graded_vectors(factors[i].degrees, n):
            rec(prefix + vec, i + 1)
            if truncated:
                return

    if count:
        rec((), 0)
    return ComponentCount(n=n, count=count, representatives=tuple(reps), truncated=truncated)
