"""Deformation K-theory of group expressions as wedges of shifted ku.

Every expression handled here has deformation K-theory a finite wedge of
(possibly suspended) copies of connective complex K-theory, recorded as
the multiset of suspension shifts.  Base cases: the trivial group gives
one unshifted copy; a finite group gives one unshifted copy per
irreducible (equivalently per conjugacy class); the integers give an
unshifted copy plus one single-shifted copy.

Free products combine by the excision rule: the square of spectra over
the trivial group is homotopy cartesian, boundary maps vanish, so
degreewise ranks satisfy r_j(G*H) = r_j(G) + r_j(H) - r_j(1).  On shift
multisets that is multiset union minus one unshifted copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from . import finite_groups
from .finite_groups import DEFAULT_ORDER_CAP
from .presentation_dsl import (
    FINITE_LEAVES,
    FreeProduct,
    GroupExpr,
    IntegerGroup,
    atomic_factors,
)


class UnsupportedLeafError(ValueError):
    """The expression contains a leaf with no computation rule here."""


@dataclass(frozen=True)
class KuWedge:
    """Finite multiset of nonnegative suspension shifts, stored sorted.

    Shift s contributes Z to every homotopy degree j >= s with j ≡ s
    (mod 2), so the rank in degree j is #{s : s <= j, j ≡ s mod 2}.
    """

    shifts: tuple[int, ...]

    def __post_init__(self):
        if not self.shifts:
            raise ValueError("a wedge needs at least one summand")
        if any(s < 0 for s in self.shifts):
            raise ValueError("shifts must be nonnegative")
        if tuple(sorted(self.shifts)) != self.shifts:
            raise ValueError("shifts must be sorted ascending")

    def rank(self, degree: int) -> int:
        if degree < 0:
            return 0
        return sum(1 for s in self.shifts if s <= degree and (degree - s) % 2 == 0)


def wedge(shifts) -> KuWedge:
    return KuWedge(tuple(sorted(int(s) for s in shifts)))


@dataclass(frozen=True)
class GradedRanks:
    """Homotopy ranks indexed by degree, 0..max_degree."""

    ranks: tuple[int, ...]

    def __post_init__(self):
        if any(r < 0 for r in self.ranks):
            raise ValueError("ranks must be nonnegative")


def kdef_base(
    leaf: GroupExpr,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    cache_dir: str | None = None,
) -> KuWedge:
    """Wedge for an atomic leaf.

    Finite leaves route through the group builder; the shift-0 count is
    the number of irreducibles, i.e. the conjugacy class count.
    """
    if isinstance(leaf, FreeProduct):
        raise ValueError("kdef_base needs an atomic leaf, not a free product")
    if isinstance(leaf, IntegerGroup):
        return wedge((0, 1))
    if isinstance(leaf, FINITE_LEAVES):
        group = finite_groups.build_group(leaf, order_cap=order_cap)
        data = finite_groups.irrep_data(group, cache_dir=cache_dir)
        return wedge((0,) * data.class_count)
    raise UnsupportedLeafError(f"no base spectrum known for leaf {leaf!r}")


def mv_free_product(a: KuWedge, b: KuWedge) -> KuWedge:
    """Combine two wedges along a free product: union minus one shift 0.

    Both inputs must contain a shift-0 summand (the trivial representation
    contributes one); without it the trivial-group correction cannot be
    subtracted.
    """
    if 0 not in a.shifts or 0 not in b.shifts:
        raise ValueError("both wedges must contain a shift-0 summand")
    merged = list(a.shifts) + list(b.shifts)
    merged.remove(0)
    return wedge(merged)


def kdef(
    expr: GroupExpr,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    cache_dir: str | None = None,
) -> KuWedge:
    """Left fold of the free-product rule over the factors of an expression."""
    wedges = [
        kdef_base(f, order_cap=order_cap, cache_dir=cache_dir)
        for f in atomic_factors(expr)
    ]
    return reduce(mv_free_product, wedges)


def homotopy_groups(w: KuWedge, max_degree: int) -> GradedRanks:
    """Ranks in degrees 0..max_degree; odd degrees see only odd shifts."""
    if max_degree < 0:
        raise ValueError("max degree must be nonnegative")
    return GradedRanks(tuple(w.rank(j) for j in range(max_degree + 1)))
