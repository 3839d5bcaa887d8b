"""Group-expression DSL and finite presentations.

Grammar for group expressions (tokens may be separated by whitespace):

    expr := term ('*' term)*
    term := '1' | 'Z' | 'Z/'INT | 'D'INT | 'S'INT | 'Q8' | 'F'INT
          | 'table:'PATH | '(' expr ')'

``*`` is the free product.  It is parsed left-associatively and the
resulting factor lists are flattened, so ``A * (B * C)`` and
``(A * B) * C`` yield identical trees.  ``F<r>`` is shorthand for the
r-fold free product of Z (``F1`` is just ``Z``).

Finite presentations use ``'<' generators '|' relators '>'`` where the
generators are comma-separated single lowercase letters and relators are
words such as ``a^2``, ``abA`` (uppercase = inverse) or ``(ab)^3``.
Relators are stored fully expanded into sequences of
(generator index, +1/-1) letters.
"""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Rejected input, with a 0-based byte offset into the source text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


class GroupExpr:
    """Base class for nodes of a normalized group expression."""

    __slots__ = ()


@dataclass(frozen=True)
class Trivial(GroupExpr):
    pass


@dataclass(frozen=True)
class Cyclic(GroupExpr):
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"cyclic modulus must be >= 1, got {self.m}")


@dataclass(frozen=True)
class Dihedral(GroupExpr):
    m: int

    def __post_init__(self):
        if self.m < 3:
            raise ValueError(f"dihedral parameter must be >= 3, got {self.m}")


@dataclass(frozen=True)
class Symmetric(GroupExpr):
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= 6:
            raise ValueError(f"symmetric degree must be in 1..6, got {self.n}")


@dataclass(frozen=True)
class Quaternion8(GroupExpr):
    pass


@dataclass(frozen=True)
class IntegerGroup(GroupExpr):
    pass


@dataclass(frozen=True)
class TableRef(GroupExpr):
    path: str

    def __post_init__(self):
        if not self.path:
            raise ValueError("table reference needs a nonempty path")


@dataclass(frozen=True)
class FreeProduct(GroupExpr):
    factors: tuple[GroupExpr, ...]

    def __post_init__(self):
        if len(self.factors) < 2:
            raise ValueError("free product needs at least 2 factors")
        if any(isinstance(f, FreeProduct) for f in self.factors):
            raise ValueError("free product factors must be flat")


FINITE_LEAVES = (Trivial, Cyclic, Dihedral, Symmetric, Quaternion8, TableRef)


def atomic_factors(expr: GroupExpr) -> tuple[GroupExpr, ...]:
    """Factor list of a normalized expression (the expression itself if atomic)."""
    if isinstance(expr, FreeProduct):
        return expr.factors
    return (expr,)


def free_product(factors) -> GroupExpr:
    """Flatten and rebuild a free product; a single factor collapses to itself."""
    flat: list[GroupExpr] = []
    for f in factors:
        flat.extend(atomic_factors(f))
    if len(flat) == 1:
        return flat[0]
    return FreeProduct(tuple(flat))


# Characters that terminate a table: path token.
_PATH_STOP = set(" \t\r\n()*")


class _ExprParser:
    """One-token-lookahead recursive descent over the expression grammar."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, offset: int | None = None):
        raise ParseError(message, self.pos if offset is None else offset)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self, what: str) -> tuple[int, int]:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error(f"expected {what}", start)
        return int(self.text[start:self.pos]), start

    def parse_expr(self) -> GroupExpr:
        factors = [self.parse_term()]
        while self.peek() == "*":
            self.pos += 1
            factors.append(self.parse_term())
        return free_product(factors)

    def parse_term(self) -> GroupExpr:
        ch = self.peek()
        start = self.pos
        if ch == "":
            self.error("expected a group term")
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if ch == "1":
            self.pos += 1
            return Trivial()
        if ch == "Z":
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos] == "/":
                self.pos += 1
                m, at = self.take_int("cyclic modulus after 'Z/'")
                if m < 1:
                    self.error(f"cyclic modulus must be >= 1, got {m}", at)
                return Cyclic(m)
            return IntegerGroup()
        if ch == "D":
            self.pos += 1
            m, at = self.take_int("integer after 'D'")
            if m < 3:
                self.error(f"dihedral parameter must be >= 3, got {m}", at)
            return Dihedral(m)
        if ch == "S":
            self.pos += 1
            n, at = self.take_int("integer after 'S'")
            if not 1 <= n <= 6:
                self.error(f"symmetric degree must be in 1..6, got {n}", at)
            return Symmetric(n)
        if ch == "Q":
            self.pos += 1
            n, at = self.take_int("integer after 'Q'")
            if n != 8:
                self.error(f"only Q8 is supported, got Q{n}", start)
            return Quaternion8()
        if ch == "F":
            self.pos += 1
            r, at = self.take_int("free-group rank after 'F'")
            if r < 1:
                self.error(f"free-group rank must be >= 1, got {r}", at)
            return free_product([IntegerGroup() for _ in range(r)])
        if self.text.startswith("table:", self.pos):
            self.pos += len("table:")
            start_path = self.pos
            while self.pos < len(self.text) and self.text[self.pos] not in _PATH_STOP:
                self.pos += 1
            if self.pos == start_path:
                self.error("expected a path after 'table:'", start_path)
            return TableRef(self.text[start_path:self.pos])
        self.error(f"unexpected character {ch!r}")


def parse_group_expr(text: str) -> GroupExpr:
    """Parse a group expression into its normalized (flat) tree."""
    if not text.strip():
        raise ParseError("empty group expression", 0)
    p = _ExprParser(text)
    expr = p.parse_expr()
    if not p.eof():
        p.error("trailing input after expression")
    return expr


def render_group_expr(expr: GroupExpr) -> str:
    """Inverse of :func:`parse_group_expr` on normalized trees."""
    if isinstance(expr, FreeProduct):
        return " * ".join(render_group_expr(f) for f in expr.factors)
    if isinstance(expr, Trivial):
        return "1"
    if isinstance(expr, IntegerGroup):
        return "Z"
    if isinstance(expr, Cyclic):
        return f"Z/{expr.m}"
    if isinstance(expr, Dihedral):
        return f"D{expr.m}"
    if isinstance(expr, Symmetric):
        return f"S{expr.n}"
    if isinstance(expr, Quaternion8):
        return "Q8"
    if isinstance(expr, TableRef):
        return f"table:{expr.path}"
    raise TypeError(f"not a group expression node: {expr!r}")


Letter = tuple[int, int]  # (generator index, +1 or -1)


@dataclass(frozen=True)
class FinitePresentation:
    """Generators plus relator words, each letter an exponent-±1 pair."""

    generators: tuple[str, ...]
    relators: tuple[tuple[Letter, ...], ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("presentation needs at least one generator")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        for word in self.relators:
            if not word:
                raise ValueError("relator words must be nonempty")
            for idx, exp in word:
                if not 0 <= idx < len(self.generators):
                    raise ValueError(f"relator letter index {idx} out of range")
                if exp not in (1, -1):
                    raise ValueError(f"relator letter exponent must be ±1, got {exp}")


def _invert_word(word: list[Letter]) -> list[Letter]:
    return [(idx, -exp) for idx, exp in reversed(word)]


class _PresentationParser:
    def __init__(self, text: str, generators: tuple[str, ...]):
        self.text = text
        self.pos = 0
        self.gen_index = {g: i for i, g in enumerate(generators)}

    def error(self, message: str, offset: int | None = None):
        raise ParseError(message, self.pos if offset is None else offset)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_word(self, stop: str) -> list[Letter]:
        word: list[Letter] = []
        while True:
            ch = self.peek()
            if ch == "" or ch in stop:
                break
            word.extend(self.parse_factor())
        if not word:
            self.error("empty relator word")
        return word

    def parse_factor(self) -> list[Letter]:
        ch = self.peek()
        at = self.pos
        if ch == "(":
            self.pos += 1
            base = self.parse_word(")")
            if self.peek() != ")":
                self.error("expected ')' in relator")
            self.pos += 1
        elif ch.isalpha():
            self.pos += 1
            low = ch.lower()
            if low not in self.gen_index:
                self.error(f"unknown generator {low!r} in relator", at)
            base = [(self.gen_index[low], 1 if ch.islower() else -1)]
        else:
            self.error(f"unexpected character {ch!r} in relator")
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                self.error("malformed exponent", at)
            exp = sign * int(self.text[start:self.pos])
            if exp == 0:
                self.error("exponent must be nonzero", start)
            if exp < 0:
                base = _invert_word(base)
                exp = -exp
            base = base * exp
        return base


def parse_presentation(text: str) -> FinitePresentation:
    """Parse ``'<' gens '|' relators '>'`` with relators fully expanded."""
    lt = text.find("<")
    gt = text.rfind(">")
    if lt < 0:
        raise ParseError("expected '<' opening the presentation", 0)
    if gt < 0 or gt < lt:
        raise ParseError("expected '>' closing the presentation", len(text))
    if text[:lt].strip() or text[gt + 1:].strip():
        raise ParseError("text outside '<...>'", 0 if text[:lt].strip() else gt + 1)
    bar = text.find("|", lt, gt)
    if bar < 0:
        raise ParseError("expected '|' between generators and relators", lt + 1)

    generators: list[str] = []
    for piece_start, name in _split_commas(text, lt + 1, bar):
        if not name:
            raise ParseError("empty generator name", piece_start)
        if not (len(name) == 1 and name.isalpha() and name.islower()):
            raise ParseError(
                f"generator must be a single lowercase letter, got {name!r}",
                piece_start,
            )
        generators.append(name)
    if not generators:
        raise ParseError("empty generator list", lt + 1)
    if len(set(generators)) != len(generators):
        raise ParseError("generator names must be distinct", lt + 1)
    gens = tuple(generators)

    relators: list[tuple[Letter, ...]] = []
    for piece_start, piece in _split_commas(text, bar + 1, gt):
        if not piece:
            if len(list(_split_commas(text, bar + 1, gt))) == 1:
                break  # "<a,b | >" — no relators at all
            raise ParseError("empty relator", piece_start)
        parser = _PresentationParser(text[:gt], gens)
        parser.pos = piece_start
        word = parser.parse_word(",")
        relators.append(tuple(word))
    return FinitePresentation(gens, tuple(relators))


def _split_commas(text: str, start: int, end: int):
    """Yield (offset, stripped piece) for comma-separated pieces of text[start:end].

    Commas inside parentheses do not split.
    """
    depth = 0
    piece_start = start
    for i in range(start, end):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth = max(0, depth - 1)
        elif ch == "," and depth == 0:
            yield _strip_span(text, piece_start, i)
            piece_start = i + 1
    yield _strip_span(text, piece_start, end)


def _strip_span(text: str, start: int, end: int) -> tuple[int, str]:
    while start < end and text[start] in " \t\r\n":
        start += 1
    while end > start and text[end - 1] in " \t\r\n":
        end -= 1
    return start, text[start:end]


def render_presentation(pres: FinitePresentation) -> str:
    """Canonical text for a presentation, relators in expanded letter form."""
    words = []
    for word in pres.relators:
        chars = []
        for idx, exp in word:
            g = pres.generators[idx]
            chars.append(g if exp == 1 else g.upper())
        words.append("".join(chars))
    return f"<{','.join(pres.generators)} | {', '.join(words)}>"
