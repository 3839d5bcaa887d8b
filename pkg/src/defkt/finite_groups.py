"""Finite groups as validated Cayley tables.

Groups are stored as an order-N index set with 0 the identity, an N×N
Cayley table and an inverse table.  Construction fully validates the
table: closure, Latin-square property, identity, two-sided inverses and
associativity — checked on all triples up to order 256, and by Light's
generator test (equally exact, far cheaper) above that.

Beyond construction the module extracts the character-theoretic data that
drives everything downstream: conjugacy classes, and the multiset of
irreducible degrees.  Over the complex numbers the number of irreducibles
equals the number of conjugacy classes; that identity is imported from
standard character theory.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import tempfile
from dataclasses import dataclass

import numpy as np

from .presentation_dsl import (
    Cyclic,
    Dihedral,
    GroupExpr,
    Quaternion8,
    Symmetric,
    TableRef,
    Trivial,
)

DEFAULT_ORDER_CAP = 1024
CACHE_ENV_VAR = "DEFKT_CACHE"

# Rows processed per chunk of the associativity check; keeps the largest
# intermediate at chunk*N*N int32 entries.
_ASSOC_CHUNK = 64


class GroupTableError(ValueError):
    """A Cayley table failed validation (closure, identity, inverses, associativity)."""


class OrderCapError(ValueError):
    """Requested group exceeds the configured order cap."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    cayley: np.ndarray  # (N, N) int32, read-only
    inverse: np.ndarray  # (N,) int32, read-only
    label: str

    def mul(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.cayley, self.cayley.T))

    def __repr__(self):
        return f"FiniteGroup({self.label}, order={self.order})"


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int32)
    arr.setflags(write=False)
    return arr


def _validate_table(table: np.ndarray, label: str) -> tuple[np.ndarray, np.ndarray]:
    """Check all group axioms; returns (table, inverse) with identity at index 0."""
    n = table.shape[0]
    if table.shape != (n, n):
        raise GroupTableError(f"{label}: table must be square, got {table.shape}")
    if table.min() < 0 or table.max() >= n:
        raise GroupTableError(f"{label}: table not closed (entries outside 0..{n - 1})")

    idx = np.arange(n, dtype=np.int32)
    if not (np.array_equal(np.sort(table, axis=1), np.tile(idx, (n, 1)))
            and np.array_equal(np.sort(table, axis=0), np.tile(idx[:, None], (1, n)))):
        raise GroupTableError(f"{label}: table is not a Latin square")

    identity = None
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            identity = e
            break
    if identity is None:
        raise GroupTableError(f"{label}: table has no identity element")
    if identity != 0:
        # Relabel by the transposition (0 identity) so index 0 is the identity.
        sigma = idx.copy()
        sigma[0], sigma[identity] = identity, 0
        table = sigma[table[np.ix_(sigma, sigma)]]

    inverse = np.empty(n, dtype=np.int32)
    for x in range(n):
        y = int(np.nonzero(table[x] == 0)[0][0])
        if table[y, x] != 0:
            raise GroupTableError(f"{label}: left and right inverses disagree at {x}")
        inverse[x] = y

    _check_associativity(table, label)
    return table, inverse


def _check_associativity(table: np.ndarray, label: str) -> None:
    """All-triples check for small orders, Light's test (exact) above that.

    Light's test: if (a*b)*s == a*(b*s) for all a, b and all s in a set S
    whose left-normed products cover the whole element set, associativity
    holds on all triples.
    """
    n = table.shape[0]
    if n <= 256:
        for start in range(0, n, _ASSOC_CHUNK):
            block = slice(start, min(start + _ASSOC_CHUNK, n))
            left = table[table[block, :], :]       # (a*b)*c
            right = table[block, :][:, table]      # a*(b*c)
            if not np.array_equal(left, right):
                raise GroupTableError(f"{label}: table is not associative")
        return
    for s in _greedy_generators(table):
        col = table[:, s]
        if not np.array_equal(col[table], table[:, col]):
            raise GroupTableError(f"{label}: table is not associative")


def _greedy_generators(table: np.ndarray) -> list[int]:
    """A set whose left-normed products reach every index of the table."""
    n = table.shape[0]
    gens: list[int] = []
    reached = np.zeros(n, dtype=bool)
    while not reached.all():
        gens.append(int(np.flatnonzero(~reached)[0]))
        reached[:] = False
        reached[gens] = True
        frontier = list(gens)
        while frontier:
            nxt = np.unique(table[np.ix_(frontier, gens)])
            frontier = [int(v) for v in nxt if not reached[v]]
            reached[nxt] = True
    return gens


def _group_from_table(table: np.ndarray, label: str, order_cap: int) -> FiniteGroup:
    n = table.shape[0]
    if n > order_cap:
        raise OrderCapError(f"{label}: order {n} exceeds cap {order_cap}")
    table, inverse = _validate_table(table, label)
    return FiniteGroup(order=n, cayley=_freeze(table), inverse=_freeze(inverse), label=label)


def _cyclic_table(m: int) -> np.ndarray:
    i = np.arange(m)
    return (i[:, None] + i[None, :]) % m


def _dihedral_table(m: int) -> np.ndarray:
    # Element (eps, c) acts on Z/m by x -> eps*x + c; index = (m if eps == -1 else 0) + c.
    n = 2 * m
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        e1, c1 = (1, i) if i < m else (-1, i - m)
        for j in range(n):
            e2, c2 = (1, j) if j < m else (-1, j - m)
            e, c = e1 * e2, (e1 * c2 + c1) % m
            table[i, j] = c if e == 1 else m + c
    return table


def _symmetric_table(n: int) -> np.ndarray:
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    table = np.empty((size, size), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(p[q[t]] for t in range(n))]
    return table


def _quaternion8_table() -> np.ndarray:
    # Units ±1, ±i, ±j, ±k; index = 2*basis + (0 if positive else 1).
    basis_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    table = np.empty((8, 8), dtype=np.int64)
    for i in range(8):
        s1, b1 = 1 - 2 * (i % 2), i // 2
        for j in range(8):
            s2, b2 = 1 - 2 * (j % 2), j // 2
            s, b = basis_mul[(b1, b2)]
            s *= s1 * s2
            table[i, j] = 2 * b + (0 if s == 1 else 1)
    return table


def load_cayley_table(path: str) -> np.ndarray:
    """Read the table file format: ``order N`` then N rows of N indices.

    ``#`` starts a comment; blank lines are ignored.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as ex:
        raise GroupTableError(f"cannot read table file {path}: {ex}") from ex
    tokens_per_line = []
    for line in raw.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens_per_line.append(line.split())
    if not tokens_per_line:
        raise GroupTableError(f"{path}: empty table file")
    header = tokens_per_line[0]
    if len(header) != 2 or header[0] != "order" or not header[1].isdigit():
        raise GroupTableError(f"{path}: first line must be 'order N'")
    n = int(header[1])
    if n < 1:
        raise GroupTableError(f"{path}: order must be positive")
    flat = [tok for line in tokens_per_line[1:] for tok in line]
    if len(flat) != n * n:
        raise GroupTableError(f"{path}: expected {n * n} entries, got {len(flat)}")
    try:
        values = [int(tok) for tok in flat]
    except ValueError as ex:
        raise GroupTableError(f"{path}: non-integer table entry") from ex
    return np.array(values, dtype=np.int64).reshape(n, n)


def build_group(leaf: GroupExpr, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Realize an atomic finite leaf as a validated FiniteGroup."""
    if isinstance(leaf, Trivial):
        return _group_from_table(np.zeros((1, 1), dtype=np.int64), "1", order_cap)
    if isinstance(leaf, Cyclic):
        return _group_from_table(_cyclic_table(leaf.m), f"Z/{leaf.m}", order_cap)
    if isinstance(leaf, Dihedral):
        return _group_from_table(_dihedral_table(leaf.m), f"D{leaf.m}", order_cap)
    if isinstance(leaf, Symmetric):
        return _group_from_table(_symmetric_table(leaf.n), f"S{leaf.n}", order_cap)
    if isinstance(leaf, Quaternion8):
        return _group_from_table(_quaternion8_table(), "Q8", order_cap)
    if isinstance(leaf, TableRef):
        return _group_from_table(load_cayley_table(leaf.path), f"table:{leaf.path}", order_cap)
    raise TypeError(f"not an atomic finite leaf: {leaf!r}")


def conjugacy_classes(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Orbits of the conjugation action, blocks sorted by minimal element."""
    table = group.cayley
    inv = group.inverse
    # conj[g, x] = g * x * g^-1
    conj = table[table, inv[:, None]]
    seen = np.zeros(group.order, dtype=bool)
    blocks = []
    for x in range(group.order):
        if seen[x]:
            continue
        orbit = np.unique(conj[:, x])
        seen[orbit] = True
        blocks.append(tuple(int(v) for v in orbit))
    return tuple(blocks)


@dataclass(frozen=True)
class IrrepData:
    """Number of irreducibles and, when determined, their degrees.

    ``degrees is None`` is the explicit "degrees unavailable" outcome: the
    class count is always known, the degree multiset may not be.
    """

    class_count: int
    degrees: tuple[int, ...] | None

    def __post_init__(self):
        if self.class_count < 1:
            raise ValueError("class count must be positive")
        if self.degrees is not None:
            if len(self.degrees) != self.class_count:
                raise ValueError("need one degree per irreducible")
            if any(d < 1 for d in self.degrees):
                raise ValueError("degrees must be positive")
            if min(self.degrees) != 1:
                raise ValueError("the trivial representation forces a degree-1 entry")
            if tuple(sorted(self.degrees)) != self.degrees:
                raise ValueError("degrees must be sorted ascending")


def _degree_multiset_search(order: int, count: int) -> tuple[int, ...] | None:
    """Unique multiset {d_i} with sum d_i^2 = order, |{d_i}| = count, d_i | order,
    min d_i = 1.  Returns None when zero or several solutions exist.

    Degrees dividing the order is a standard character-theoretic fact used
    purely for pruning.
    """
    divisors = [d for d in range(1, order + 1) if order % d == 0]
    solutions: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int, start: int):
        if len(solutions) > 1:
            return
        slots = count - len(prefix)
        if slots == 0:
            if remaining == 0:
                solutions.append(tuple(prefix))
            return
        for d in divisors:
            if d < start:
                continue
            sq = d * d
            if sq * slots > remaining:  # later slots are >= d, so >= sq each
                break
            prefix.append(d)
            extend(prefix, remaining - sq, d)
            prefix.pop()

    # The trivial representation pins the first entry to 1.
    extend([1], order - 1, 1)
    if len(solutions) == 1:
        return solutions[0]
    return None


def _table_digest(group: FiniteGroup) -> str:
    payload = f"order {group.order}\n".encode() + group.cayley.astype("<i8").tobytes()
    return hashlib.sha256(payload).hexdigest()


def _cache_read(cache_dir: str, key: str) -> IrrepData | None:
    path = os.path.join(cache_dir, f"{key}.json")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
        degrees = payload["degrees"]
        return IrrepData(
            class_count=int(payload["class_count"]),
            degrees=None if degrees is None else tuple(int(d) for d in degrees),
        )
    except (OSError, KeyError, TypeError, ValueError, json.JSONDecodeError):
        return None  # unreadable cache entries are recomputed


def _cache_write(cache_dir: str, key: str, data: IrrepData) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    payload = {
        "schema": 1,
        "class_count": data.class_count,
        "degrees": None if data.degrees is None else list(data.degrees),
    }
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, os.path.join(cache_dir, f"{key}.json"))
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def irrep_data(group: FiniteGroup, *, cache_dir: str | None = None) -> IrrepData:
    """Class count plus the irreducible degree multiset when it is forced.

    Strategy: abelian groups have all degrees 1; otherwise search for the
    unique multiset compatible with the order/count constraints.  When the
    arithmetic admits several candidates the degrees are reported
    unavailable rather than guessed — a modular character-theoretic
    computation is the natural extension point there.

    Results are cached as JSON keyed by a hash of the Cayley table when
    ``cache_dir`` (or the DEFKT_CACHE environment variable) names a
    directory.
    """
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV_VAR) or None
    key = _table_digest(group) if cache_dir else ""
    if cache_dir:
        cached = _cache_read(cache_dir, key)
        if cached is not None:
            return cached

    count = len(conjugacy_classes(group))
    if group.is_abelian():
        data = IrrepData(class_count=count, degrees=(1,) * count)
    else:
        data = IrrepData(class_count=count, degrees=_degree_multiset_search(group.order, count))
    if data.degrees is not None and sum(d * d for d in data.degrees) != group.order:
        raise AssertionError("degree multiset inconsistent with group order")

    if cache_dir:
        _cache_write(cache_dir, key, data)
    return data
