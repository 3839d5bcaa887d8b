"""Real polynomial systems presenting representation spaces.

Given a finite presentation on k generators, the n-dimensional unitary
representation space is cut out inside R^(2kn^2) — real and imaginary
parts of one n×n matrix per generator — by the unitarity equations
A_j A_j* = I and one matrix equation r(A_1, ..., A_k) = I per relator,
each expanded symbolically into integer-coefficient real polynomials.
The general linear version doubles the variables (a formal inverse
matrix B_j per generator) and replaces unitarity by A_j B_j = I.

Inverse letters in unitary relators become conjugate transposes, so the
system stays polynomial in the same variables.  A_j A_j* - I is
Hermitian, so by default only the n^2 independent real equations per
generator are emitted (diagonal real parts and upper-triangle pairs);
``full_redundant`` restores all 2n^2.

Dense expansion of long relator words can blow up; ``prefix_vars``
introduces one auxiliary matrix of variables per proper prefix of each
relator, keeping every polynomial of degree at most two at the price of
more variables.

The module only emits and evaluates systems.  No solving is attempted;
exports are intended for external root-finding tools.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .presentation_dsl import FinitePresentation, render_presentation

UNITARY = "unitary"
GENERAL_LINEAR = "general_linear"

DEFAULT_TERM_CAP = 1_000_000

# Internally a polynomial is a dict mapping exponent tuples to nonzero
# integer coefficients; a complex entry is a (real, imag) pair of those.
Poly = dict


class TermBudgetError(RuntimeError):
    """Symbolic expansion exceeded the term cap; prefix_vars avoids this."""


@dataclass(frozen=True)
class EmitOptions:
    full_redundant: bool = False
    prefix_vars: bool = False
    term_cap: int = DEFAULT_TERM_CAP


@dataclass(frozen=True)
class SystemMetadata:
    presentation: str
    n: int
    flavor: str


@dataclass(frozen=True)
class PolynomialSystem:
    """Named real variables plus integer-coefficient polynomials.

    Each polynomial is a tuple of (coefficient, exponent vector) terms in
    descending exponent order with like terms combined; an empty tuple is
    the zero polynomial.
    """

    variables: tuple[str, ...]
    polynomials: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]
    metadata: SystemMetadata

    def __post_init__(self):
        nvars = len(self.variables)
        for poly in self.polynomials:
            seen = set()
            for coeff, exps in poly:
                if len(exps) != nvars:
                    raise ValueError("exponent vector length must match variables")
                if coeff == 0:
                    raise ValueError("terms must have nonzero coefficients")
                if exps in seen:
                    raise ValueError("terms must be combined")
                seen.add(exps)


def _poly_zero() -> Poly:
    return {}


def _poly_const(c: int, nvars: int) -> Poly:
    return {(0,) * nvars: c} if c else {}


def _poly_var(index: int, nvars: int) -> Poly:
    exps = [0] * nvars
    exps[index] = 1
    return {tuple(exps): 1}


def _poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for exps, c in q.items():
        s = out.get(exps, 0) + c
        if s:
            out[exps] = s
        else:
            out.pop(exps, None)
    return out


def _poly_neg(p: Poly) -> Poly:
    return {exps: -c for exps, c in p.items()}


def _poly_sub(p: Poly, q: Poly) -> Poly:
    return _poly_add(p, _poly_neg(q))


def _poly_mul(p: Poly, q: Poly, term_cap: int) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            exps = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(exps, 0) + c1 * c2
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        if len(out) > term_cap:
            raise TermBudgetError(
                f"expansion exceeded {term_cap} terms; rerun with prefix_vars"
            )
    return out


CEntry = tuple[Poly, Poly]  # (real part, imaginary part)


def _c_add(a: CEntry, b: CEntry) -> CEntry:
    return _poly_add(a[0], b[0]), _poly_add(a[1], b[1])


def _c_mul(a: CEntry, b: CEntry, term_cap: int) -> CEntry:
    re = _poly_sub(_poly_mul(a[0], b[0], term_cap), _poly_mul(a[1], b[1], term_cap))
    im = _poly_add(_poly_mul(a[0], b[1], term_cap), _poly_mul(a[1], b[0], term_cap))
    return re, im


CMatrix = list  # n x n nested lists of CEntry


def _mat_mul(a: CMatrix, b: CMatrix, n: int, term_cap: int) -> CMatrix:
    out = []
    for p in range(n):
        row = []
        for q in range(n):
            acc: CEntry = (_poly_zero(), _poly_zero())
            for r in range(n):
                acc = _c_add(acc, _c_mul(a[p][r], b[r][q], term_cap))
            row.append(acc)
        out.append(row)
    return out


def _mat_sub_identity(mat: CMatrix, n: int, nvars: int) -> CMatrix:
    out = []
    for p in range(n):
        row = []
        for q in range(n):
            re, im = mat[p][q]
            if p == q:
                re = _poly_sub(re, _poly_const(1, nvars))
            row.append((re, im))
        out.append(row)
    return out


class _VariablePool:
    def __init__(self):
        self.names: list[str] = []

    def new(self, name: str) -> int:
        self.names.append(name)
        return len(self.names) - 1


def _entry_matrix(indices, n: int, nvars: int) -> CMatrix:
    """Matrix of complex variables from an (n, n) grid of (re, im) index pairs."""
    return [
        [(_poly_var(indices[p][q][0], nvars), _poly_var(indices[p][q][1], nvars))
         for q in range(n)]
        for p in range(n)
    ]


def _conjugate_transpose(mat: CMatrix, n: int) -> CMatrix:
    return [[(mat[q][p][0], _poly_neg(mat[q][p][1])) for q in range(n)] for p in range(n)]


def _sorted_terms(p: Poly) -> tuple[tuple[int, tuple[int, ...]], ...]:
    return tuple((p[exps], exps) for exps in sorted(p, reverse=True))


def _build_system(
    pres: FinitePresentation,
    n: int,
    options: EmitOptions,
    flavor: str,
) -> PolynomialSystem:
    if n < 1:
        raise ValueError("matrix size must be at least 1")
    k = len(pres.generators)
    pool = _VariablePool()

    # Generator-major, row-major, real before imaginary.
    gen_re_im: list[list[list[tuple[int, int]]]] = []
    gen_inv: list[list[list[tuple[int, int]]]] = []
    for j in range(1, k + 1):
        grid = []
        for p in range(1, n + 1):
            grid.append([
                (pool.new(f"x_{j}_{p}_{q}"), pool.new(f"y_{j}_{p}_{q}"))
                for q in range(1, n + 1)
            ])
        gen_re_im.append(grid)
        if flavor == GENERAL_LINEAR:
            grid_inv = []
            for p in range(1, n + 1):
                grid_inv.append([
                    (pool.new(f"u_{j}_{p}_{q}"), pool.new(f"v_{j}_{p}_{q}"))
                    for q in range(1, n + 1)
                ])
            gen_inv.append(grid_inv)

    prefix_grids: list[list[list[list[tuple[int, int]]]]] = []
    if options.prefix_vars:
        for r, word in enumerate(pres.relators, start=1):
            grids = []
            for t in range(1, len(word)):
                grid = []
                for p in range(1, n + 1):
                    grid.append([
                        (pool.new(f"p_{r}_{t}_{p}_{q}"), pool.new(f"q_{r}_{t}_{p}_{q}"))
                        for q in range(1, n + 1)
                    ])
                grids.append(grid)
            prefix_grids.append(grids)

    nvars = len(pool.names)
    cap = options.term_cap

    gen_matrices = [_entry_matrix(grid, n, nvars) for grid in gen_re_im]
    inv_matrices = [_entry_matrix(grid, n, nvars) for grid in gen_inv]

    def letter_matrix(letter) -> CMatrix:
        idx, exp = letter
        if exp == 1:
            return gen_matrices[idx]
        if flavor == UNITARY:
            return _conjugate_transpose(gen_matrices[idx], n)
        return inv_matrices[idx]

    polys: list[Poly] = []

    def emit_all_entries(mat: CMatrix):
        for p in range(n):
            for q in range(n):
                polys.append(mat[p][q][0])
                polys.append(mat[p][q][1])

    # Per-generator constraints.
    for j in range(k):
        a = gen_matrices[j]
        if flavor == UNITARY:
            prod = _mat_mul(a, _conjugate_transpose(a, n), n, cap)
            prod = _mat_sub_identity(prod, n, nvars)
            if options.full_redundant:
                emit_all_entries(prod)
            else:
                # Hermitian: diagonal is real, (q,p) is the conjugate of (p,q).
                for p in range(n):
                    polys.append(prod[p][p][0])
                for p in range(n):
                    for q in range(p + 1, n):
                        polys.append(prod[p][q][0])
                        polys.append(prod[p][q][1])
        else:
            prod = _mat_mul(a, inv_matrices[j], n, cap)
            emit_all_entries(_mat_sub_identity(prod, n, nvars))

    # Relator constraints.
    for r, word in enumerate(pres.relators):
        if options.prefix_vars and len(word) > 1:
            grids = prefix_grids[r]
            prev = _entry_matrix(grids[0], n, nvars)
            first = letter_matrix(word[0])
            for p in range(n):
                for q in range(n):
                    polys.append(_poly_sub(prev[p][q][0], first[p][q][0]))
                    polys.append(_poly_sub(prev[p][q][1], first[p][q][1]))
            for t in range(1, len(word) - 1):
                cur = _entry_matrix(grids[t], n, nvars)
                prod = _mat_mul(prev, letter_matrix(word[t]), n, cap)
                for p in range(n):
                    for q in range(n):
                        polys.append(_poly_sub(cur[p][q][0], prod[p][q][0]))
                        polys.append(_poly_sub(cur[p][q][1], prod[p][q][1]))
                prev = cur
            final = _mat_mul(prev, letter_matrix(word[-1]), n, cap)
            emit_all_entries(_mat_sub_identity(final, n, nvars))
        else:
            acc = letter_matrix(word[0])
            for letter in word[1:]:
                acc = _mat_mul(acc, letter_matrix(letter), n, cap)
            emit_all_entries(_mat_sub_identity(acc, n, nvars))

    return PolynomialSystem(
        variables=tuple(pool.names),
        polynomials=tuple(_sorted_terms(p) for p in polys),
        metadata=SystemMetadata(
            presentation=render_presentation(pres), n=n, flavor=flavor
        ),
    )


def unitary_variety(
    pres: FinitePresentation, n: int, options: EmitOptions = EmitOptions()
) -> PolynomialSystem:
    """System cutting out the n-dimensional unitary representation space.

    2kn^2 variables (before any prefix auxiliaries): real and imaginary
    parts of one matrix per generator.
    """
    return _build_system(pres, n, options, UNITARY)


def gl_variety(
    pres: FinitePresentation, n: int, options: EmitOptions = EmitOptions()
) -> PolynomialSystem:
    """System for the general linear representation space: 4kn^2 variables,
    each generator paired with a formal inverse constrained by A B = I."""
    return _build_system(pres, n, options, GENERAL_LINEAR)


def evaluate_system(system: PolynomialSystem, point: Sequence) -> list:
    """Residual of every polynomial at the point.

    Rational coordinates (ints or Fractions) are evaluated exactly;
    anything else falls back to floating point.
    """
    if len(point) != len(system.variables):
        raise ValueError(
            f"point has {len(point)} coordinates, system has "
            f"{len(system.variables)} variables"
        )
    exact = all(isinstance(v, Rational) for v in point)
    coords = [Fraction(v) for v in point] if exact else [float(v) for v in point]
    zero = Fraction(0) if exact else 0.0
    residuals = []
    for poly in system.polynomials:
        acc = zero
        for coeff, exps in poly:
            term = coeff if exact else float(coeff)
            for value, e in zip(coords, exps):
                if e:
                    term = term * value**e
            acc += term
        residuals.append(acc)
    return residuals


def _render_term(coeff: int, exps: tuple[int, ...], variables: tuple[str, ...]) -> str:
    sign = "+" if coeff >= 0 else "-"
    parts = [str(abs(coeff))]
    for name, e in zip(variables, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return sign + "*".join(parts)


def system_to_text(system: PolynomialSystem) -> str:
    """One polynomial per line in expanded monomial form, after a variable header."""
    lines = ["variables " + " ".join(system.variables)]
    for poly in system.polynomials:
        if not poly:
            lines.append("0")
        else:
            lines.append("".join(_render_term(c, e, system.variables) for c, e in poly))
    return "\n".join(lines) + "\n"


def system_to_dict(system: PolynomialSystem) -> dict:
    """JSON-ready mirror of the PolynomialSystem fields."""
    return {
        "variables": list(system.variables),
        "polynomials": [
            [[coeff, list(exps)] for coeff, exps in poly] for poly in system.polynomials
        ],
        "metadata": {
            "presentation": system.metadata.presentation,
            "n": system.metadata.n,
            "flavor": system.metadata.flavor,
        },
    }
