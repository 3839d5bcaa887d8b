"""Finitely generated commutative monoids and their group completions.

Elements of a monoid on k generators are exponent vectors in N^k; a
presented monoid carries relations u = v which generate a congruence
(the smallest equivalence containing every translate (u + t, v + t) and
compatible with addition).  Path components of a topological monoid are
modeled by exactly these congruence classes.

The group completion of a presented monoid is Z^k modulo the lattice
spanned by the relation differences u - v, computed by an exact integer
Smith normal form.  Congruence questions on presented monoids are only
semidecidable, so the deciding operations return "yes"/"no"/"unknown",
with "unknown" signalling exhaustion of the search bound rather than a
verdict.

The telescope operations model the mapping-telescope construction along
a chosen anchor element m: a telescope class is a pair (x, n) of an
element and a stage, and (x, n) ~ (x', n') when x + (N-n)m and
x' + (N-n')m fall in the same congruence class for some common stage N.
When the cyclic submonoid generated by m is cofinal ("stably
group-like"), the telescope classes form the group completion; the
implementation computes that group through the localization M[1/m],
giving a second route that cross-validates the Smith-normal-form one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

Decision = Literal["yes", "no", "unknown"]

DEFAULT_SEARCH_BOUND = 16


class BoundExhausted(RuntimeError):
    """A bounded decision procedure ran out of budget without an answer."""


@dataclass(frozen=True)
class MonoidElement:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    def total(self) -> int:
        return sum(self.exponents)


@dataclass(frozen=True)
class FgCommMonoid:
    """Presented commutative monoid; free when ``relations`` is empty.

    ``grades``, when present, assigns each generator a positive dimension;
    relations must then be grade-homogeneous.
    """

    generator_count: int
    grades: tuple[int, ...] | None = None
    relations: tuple[tuple[MonoidElement, MonoidElement], ...] = ()

    def __post_init__(self):
        if self.generator_count < 0:
            raise ValueError("generator count must be nonnegative")
        if self.grades is not None:
            if len(self.grades) != self.generator_count:
                raise ValueError("need one grade per generator")
            if any(g < 1 for g in self.grades):
                raise ValueError("grades must be positive")
        for u, v in self.relations:
            if len(u.exponents) != self.generator_count or len(v.exponents) != self.generator_count:
                raise ValueError("relation references a missing generator")
            if self.grades is not None and self.grade_of(u) != self.grade_of(v):
                raise ValueError("relations must be grade-homogeneous")

    @property
    def is_free(self) -> bool:
        return not self.relations

    def element(self, exponents: Sequence[int]) -> MonoidElement:
        el = MonoidElement(tuple(int(e) for e in exponents))
        self._check(el)
        return el

    def zero(self) -> MonoidElement:
        return MonoidElement((0,) * self.generator_count)

    def generator(self, i: int) -> MonoidElement:
        if not 0 <= i < self.generator_count:
            raise ValueError(f"no generator {i}")
        exps = [0] * self.generator_count
        exps[i] = 1
        return MonoidElement(tuple(exps))

    def all_generators_sum(self) -> MonoidElement:
        return MonoidElement((1,) * self.generator_count)

    def grade_of(self, el: MonoidElement) -> int:
        if self.grades is None:
            raise ValueError("monoid is not graded")
        return sum(e * g for e, g in zip(el.exponents, self.grades))

    def _check(self, el: MonoidElement) -> None:
        if len(el.exponents) != self.generator_count:
            raise ValueError(
                f"element has {len(el.exponents)} exponents, monoid has "
                f"{self.generator_count} generators"
            )


@dataclass(frozen=True)
class FgAbelianGroup:
    """Rank plus invariant factors d_1 | d_2 | ... (all >= 2)."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if any(d < 2 for d in self.torsion):
            raise ValueError("invariant factors must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a divisibility chain")

    def describe(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TelescopeClass:
    element: MonoidElement
    stage: int

    def __post_init__(self):
        if self.stage < 0:
            raise ValueError("stage must be nonnegative")


def add(monoid: FgCommMonoid, a: MonoidElement, b: MonoidElement) -> MonoidElement:
    """Componentwise sum; grades are additive when the monoid is graded."""
    monoid._check(a)
    monoid._check(b)
    return MonoidElement(tuple(x + y for x, y in zip(a.exponents, b.exponents)))


def scale(el: MonoidElement, n: int) -> MonoidElement:
    if n < 0:
        raise ValueError("scale factor must be nonnegative")
    return MonoidElement(tuple(n * e for e in el.exponents))


# ---------------------------------------------------------------------------
# Smith normal form over Z (exact, arbitrary precision)


def smith_normal_form(
    rows: Sequence[Sequence[int]],
) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns ``(diag, left, right)`` with ``left @ A @ right`` diagonal,
    ``diag`` nonnegative and each entry dividing the next.  Pivots are
    chosen by minimal absolute value, which keeps intermediate entries
    small on the matrices seen here; arithmetic is exact Python int.
    """
    a = [[int(x) for x in row] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    left = [[int(i == j) for j in range(m)] for i in range(m)]
    right = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        arow, lrow = a[src], left[src]
        adst, ldst = a[dst], left[dst]
        for t in range(n):
            adst[t] += q * arow[t]
        for t in range(m):
            ldst[t] += q * lrow[t]

    def add_col(src, dst, q):  # col dst += q * col src
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    for s in range(min(m, n)):
        while True:
            pivot = None
            best = None
            for i in range(s, m):
                for j in range(s, n):
                    v = abs(a[i][j])
                    if v and (best is None or v < best):
                        best, pivot = v, (i, j)
            if pivot is None:
                break  # lower-right block is zero
            swap_rows(s, pivot[0])
            swap_cols(s, pivot[1])
            for i in range(s + 1, m):
                if a[i][s]:
                    add_row(s, i, -(a[i][s] // a[s][s]))
            for j in range(s + 1, n):
                if a[s][j]:
                    add_col(s, j, -(a[s][j] // a[s][s]))
            if any(a[i][s] for i in range(s + 1, m)) or any(
                a[s][j] for j in range(s + 1, n)
            ):
                continue  # division remainders left entries behind; repeat
            offender = next(
                (
                    (i, j)
                    for i in range(s + 1, m)
                    for j in range(s + 1, n)
                    if a[i][j] % a[s][s]
                ),
                None,
            )
            if offender is None:
                break
            add_row(offender[0], s, 1)  # pull the bad entry into the pivot row

        if s < min(m, n) and a[s][s] < 0:
            for t in range(n):
                a[s][t] = -a[s][t]
            for t in range(m):
                left[s][t] = -left[s][t]

    diag = [a[i][i] for i in range(min(m, n))]
    return diag, left, right


def invariant_factors(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith form, in divisibility order."""
    diag, _, _ = smith_normal_form(rows)
    return [d for d in diag if d]


# ---------------------------------------------------------------------------
# Congruence machinery for presented monoids


@lru_cache(maxsize=None)
def _relation_snf(monoid: FgCommMonoid):
    """Smith data of the k x r matrix whose columns are u - v per relation."""
    k = monoid.generator_count
    cols = [
        [u.exponents[i] - v.exponents[i] for (u, v) in monoid.relations]
        for i in range(k)
    ]
    diag, left, _ = smith_normal_form(cols)
    return diag, left


def _difference_in_lattice(monoid: FgCommMonoid, diff: tuple[int, ...]) -> bool:
    """Is ``diff`` an integer combination of the relation differences?"""
    if not monoid.relations:
        return all(d == 0 for d in diff)
    diag, left = _relation_snf(monoid)
    k = monoid.generator_count
    y = [sum(left[i][j] * diff[j] for j in range(k)) for i in range(k)]
    for i in range(k):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if y[i] != 0:
                return False
        elif y[i] % d != 0:
            return False
    return True


def _rewrite_steps(monoid: FgCommMonoid):
    steps = []
    for u, v in monoid.relations:
        steps.append((u.exponents, v.exponents))
        steps.append((v.exponents, u.exponents))
    return steps


@lru_cache(maxsize=4096)
def _congruence_class(
    monoid: FgCommMonoid, start: tuple[int, ...], bound: int
) -> frozenset[tuple[int, ...]]:
    """All vectors congruent to ``start`` via chains of total exponent <= bound."""
    steps = _rewrite_steps(monoid)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for u, v in steps:
            if all(a >= b for a, b in zip(w, u)):
                w2 = tuple(a - b + c for a, b, c in zip(w, u, v))
                if sum(w2) <= bound and w2 not in seen:
                    seen.add(w2)
                    queue.append(w2)
    return frozenset(seen)


def equal_in_monoid(
    monoid: FgCommMonoid,
    a: MonoidElement,
    b: MonoidElement,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> Decision:
    """Decide a ~ b under the congruence generated by the relations.

    Free monoids are decided exactly by vector equality.  For presented
    monoids a breadth-first closure explores rewrite chains whose
    intermediate elements have total exponent at most the larger of
    search_bound and the operand sizes; a failed lattice test on a - b
    gives a definite "no", otherwise exhaustion reports "unknown".
    """
    monoid._check(a)
    monoid._check(b)
    if a == b:
        return "yes"
    if monoid.is_free:
        return "no"
    diff = tuple(x - y for x, y in zip(a.exponents, b.exponents))
    if not _difference_in_lattice(monoid, diff):
        return "no"
    bound = max(search_bound, a.total(), b.total())
    if b.exponents in _congruence_class(monoid, a.exponents, bound):
        return "yes"
    return "unknown"


def is_stably_group_like(
    monoid: FgCommMonoid,
    m: MonoidElement,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> Decision:
    """Is the cyclic submonoid generated by m cofinal?

    Checking the generators suffices: if every generator g admits y and n
    with g + y ~ n*m, additivity of the congruence extends this to every
    element.  Free monoids are decided exactly: the anchor must touch
    every coordinate.  Presented monoids search n <= search_bound and
    never answer "no".
    """
    monoid._check(m)
    if monoid.is_free:
        return "yes" if all(e >= 1 for e in m.exponents) else "no"
    for i in range(monoid.generator_count):
        if not _generator_absorbed(monoid, m, i, search_bound):
            return "unknown"
    return "yes"


def _generator_absorbed(
    monoid: FgCommMonoid, m: MonoidElement, i: int, bound: int
) -> bool:
    for n in range(bound + 1):
        nm = scale(m, n)
        # chains may shrink totals, so anchor powers above the bound still
        # get explored, just without growing further
        state_bound = max(bound, nm.total())
        for member in _congruence_class(monoid, nm.exponents, state_bound):
            if member[i] >= 1:
                return True
        if m.total() == 0:
            break  # higher powers of a zero anchor add nothing
    return False


def grothendieck_group(monoid: FgCommMonoid) -> FgAbelianGroup:
    """Group completion: Z^k modulo the lattice of relation differences.

    Computed from the Smith normal form of the k x r difference matrix;
    the rank drops by one per nonzero invariant factor and factors > 1
    survive as torsion.
    """
    k = monoid.generator_count
    if monoid.is_free:
        return FgAbelianGroup(rank=k)
    diag, _ = _relation_snf(monoid)
    nonzero = [d for d in diag if d]
    return FgAbelianGroup(
        rank=k - len(nonzero),
        torsion=tuple(d for d in nonzero if d > 1),
    )


def stable_inverse(
    monoid: FgCommMonoid,
    c: MonoidElement,
    m: MonoidElement | None = None,
) -> tuple[MonoidElement, int]:
    """Inverse up to a power of the all-generators anchor, in a free monoid.

    With A the maximal exponent of c, the element with exponents A - c_i
    satisfies c + inverse = A * m exactly.
    """
    if not monoid.is_free:
        raise ValueError("stable inverses in closed form need a free monoid")
    monoid._check(c)
    if m is None:
        m = monoid.all_generators_sum()
    else:
        monoid._check(m)
        if m != monoid.all_generators_sum():
            raise ValueError("anchor must be the sum of all generators")
    top = max(c.exponents, default=0)
    inverse = MonoidElement(tuple(top - e for e in c.exponents))
    return inverse, top


def telescope_equiv(
    monoid: FgCommMonoid,
    m: MonoidElement,
    a: TelescopeClass,
    b: TelescopeClass,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> Decision:
    """Decide (x, n) ~ (x', n'): some stage N >= n, n' makes the padded
    elements x + (N-n)m and x' + (N-n')m congruent.

    Exact for free monoids, where the condition is linear: x - x' must
    equal (n - n')m.  For presented monoids stages up to search_bound are
    tried, with a lattice precheck supplying definite "no".
    """
    monoid._check(m)
    monoid._check(a.element)
    monoid._check(b.element)
    x, n = a.element.exponents, a.stage
    xp, np_ = b.element.exponents, b.stage
    if monoid.is_free:
        ok = all(
            xi - xpi == (n - np_) * mi for xi, xpi, mi in zip(x, xp, m.exponents)
        )
        return "yes" if ok else "no"
    diff = tuple(
        xi - xpi - (n - np_) * mi for xi, xpi, mi in zip(x, xp, m.exponents)
    )
    if not _difference_in_lattice(monoid, diff):
        return "no"
    for stage in range(max(n, np_), search_bound + 1):
        lhs = MonoidElement(
            tuple(xi + (stage - n) * mi for xi, mi in zip(x, m.exponents))
        )
        rhs = MonoidElement(
            tuple(xi + (stage - np_) * mi for xi, mi in zip(xp, m.exponents))
        )
        inner = search_bound + max(lhs.total(), rhs.total())
        if equal_in_monoid(monoid, lhs, rhs, inner) == "yes":
            return "yes"
    return "unknown"


def telescope_pi0_group(
    monoid: FgCommMonoid,
    m: MonoidElement,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> FgAbelianGroup:
    """Group of telescope classes along m, for stably group-like input.

    Computed as the localization M[1/m]: a free monoid with full-support
    anchor localizes to Z^k outright (every integer vector is reached
    after enough shifts), with no normal-form computation at all.  A
    presented monoid localizes by adjoining one inverter generator t with
    the relation m + t = 0 and completing that augmented presentation.
    Either way the result is isomorphic to the group completion, giving
    an independent cross-check of :func:`grothendieck_group`.
    """
    monoid._check(m)
    verdict = is_stably_group_like(monoid, m, search_bound)
    if verdict == "no":
        raise ValueError("monoid is not stably group-like for this anchor")
    if verdict == "unknown":
        raise BoundExhausted(
            "could not verify the stably-group-like precondition within the bound"
        )
    k = monoid.generator_count
    if monoid.is_free:
        return FgAbelianGroup(rank=k)
    cols = []
    for u, v in monoid.relations:
        cols.append([u.exponents[i] - v.exponents[i] for i in range(k)] + [0])
    cols.append(list(m.exponents) + [1])  # m + t = 0 inverts the anchor
    matrix = [[col[i] for col in cols] for i in range(k + 1)]
    nonzero = invariant_factors(matrix)
    return FgAbelianGroup(
        rank=(k + 1) - len(nonzero),
        torsion=tuple(d for d in nonzero if d > 1),
    )


# ---------------------------------------------------------------------------
# Text format: "generators k [grades g1 .. gk]" then "relation u1 .. uk = v1 .. vk"


def parse_monoid(text: str) -> FgCommMonoid:
    """Parse the presented-monoid text format (``#`` comments allowed)."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty monoid description")
    head = lines[0].split()
    if not head or head[0] != "generators":
        raise ValueError("first line must start with 'generators'")
    if len(head) < 2 or not head[1].isdigit():
        raise ValueError("generator count missing")
    k = int(head[1])
    grades = None
    if len(head) > 2:
        if head[2] != "grades":
            raise ValueError("expected 'grades' after the generator count")
        if len(head) != 3 + k:
            raise ValueError(f"expected {k} grades")
        grades = tuple(int(tok) for tok in head[3:])
    relations = []
    for line in lines[1:]:
        tokens = line.split()
        if tokens[0] != "relation":
            raise ValueError(f"expected 'relation', got {tokens[0]!r}")
        body = tokens[1:]
        if "=" not in body or len(body) != 2 * k + 1:
            raise ValueError(f"relation needs {k} exponents, '=', {k} exponents")
        eq = body.index("=")
        if eq != k:
            raise ValueError("'=' must separate two exponent vectors of equal length")
        u = MonoidElement(tuple(int(tok) for tok in body[:k]))
        v = MonoidElement(tuple(int(tok) for tok in body[k + 1:]))
        relations.append((u, v))
    return FgCommMonoid(generator_count=k, grades=grades, relations=tuple(relations))


def render_monoid(monoid: FgCommMonoid) -> str:
    head = f"generators {monoid.generator_count}"
    if monoid.grades is not None:
        head += " grades " + " ".join(str(g) for g in monoid.grades)
    lines = [head]
    for u, v in monoid.relations:
        lines.append(
            "relation "
            + " ".join(str(e) for e in u.exponents)
            + " = "
            + " ".join(str(e) for e in v.exponents)
        )
    return "\n".join(lines) + "\n"
