"""Finitely presented groups: a small text syntax and Todd-Coxeter enumeration.

Syntax::

    < a, b | a^5 = b^8 = e, b a b^-1 = a^2 >

Juxtaposition is multiplication, ``e`` (or ``1``) is the identity, ``^``
takes a signed integer (``a^-1``, ``a^{-1}``), parentheses group subwords
(``(ac)^2``). Generator names are a letter followed by optional digits, so
``bab`` reads as three letters. A chain ``X = Y = Z`` means ``X = Z`` and
``Y = Z``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import OrderMismatch, PresentationSyntaxError, TableOverflow, UndeclaredGenerator
from .permgroup import FiniteGroup, Permutation, generate

__all__ = [
    "GroupWord",
    "Presentation",
    "CosetTable",
    "parse_presentation",
    "parse_word",
    "coset_enumerate",
    "realize",
    "evaluate_word",
    "DEFAULT_MAX_COSETS",
]

DEFAULT_MAX_COSETS = 50_000

Letter = tuple[str, int]


def _reduce(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    """Merge adjacent powers of the same generator and drop zero exponents."""
    out: list[Letter] = []
    for sym, exp in letters:
        if out and out[-1][0] == sym:
            exp += out.pop()[1]
        if exp:
            out.append((sym, exp))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def __pow__(self, k: int) -> "GroupWord":
        base = self.letters if k >= 0 else self.inverse().letters
        return GroupWord(base * abs(k))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((s, -e) for s, e in reversed(self.letters)))

    def symbols(self) -> set[str]:
        return {s for s, _ in self.letters}

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(s if e == 1 else f"{s}^{e}" for s, e in self.letters)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[GroupWord, ...] = field(default=())

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a presentation needs at least one generator")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"repeated generator in {self.generators}")
        declared = set(self.generators)
        for r in self.relators:
            missing = r.symbols() - declared
            if missing:
                raise UndeclaredGenerator(f"undeclared generator(s) {sorted(missing)} in relator {r}")

    def __str__(self) -> str:
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z][0-9]*(?:_[0-9]+)?)|(?P<int>[0-9]+)|(?P<op>[<>|,=^(){}\-]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise PresentationSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, generators: Sequence[str] | None = None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.generators = set(generators) if generators is not None else None

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def error(self, message: str, pos: int | None = None) -> PresentationSyntaxError:
        if pos is None:
            pos = self.peek()[2]
        return PresentationSyntaxError(message, pos, self.text)

    def expect(self, value: str) -> int:
        kind, tok, pos = self.peek()
        if tok != value or kind not in ("op",):
            found = tok or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")
        self.i += 1
        return pos

    def accept(self, value: str) -> bool:
        kind, tok, _ = self.peek()
        if kind == "op" and tok == value:
            self.i += 1
            return True
        return False

    def presentation(self) -> Presentation:
        self.expect("<")
        gens = []
        while True:
            kind, tok, pos = self.peek()
            if kind != "name":
                raise self.error("expected a generator name")
            if tok == "e":
                raise self.error("'e' is reserved for the identity")
            if tok in gens:
                raise self.error(f"generator {tok!r} declared twice")
            gens.append(tok)
            self.i += 1
            if not self.accept(","):
                break
        self.generators = set(gens)
        relators: list[GroupWord] = []
        if self.accept("|"):
            if self.peek()[1] != ">":
                while True:
                    relators.extend(self.relation())
                    if not self.accept(","):
                        break
        self.expect(">")
        if self.peek()[0] != "end":
            raise self.error("trailing input after '>'")
        return Presentation(tuple(gens), tuple(r for r in relators if r.letters))

    def relation(self) -> list[GroupWord]:
        sides = [self.word()]
        while self.accept("="):
            sides.append(self.word())
        if len(sides) == 1:
            return sides
        last = sides[-1].inverse()
        return [s * last for s in sides[:-1]]

    def word(self) -> GroupWord:
        start = self.peek()[2]
        factors = []
        while True:
            kind, tok, pos = self.peek()
            if kind == "name" or (kind == "op" and tok == "(") or (kind == "int" and tok == "1"):
                factors.append(self.factor())
            else:
                break
        if not factors:
            raise self.error("expected a word", start)
        w = GroupWord()
        for f in factors:
            w = w * f
        return w

    def factor(self) -> GroupWord:
        kind, tok, pos = self.peek()
        if kind == "op":
            self.expect("(")
            base = self.word()
            self.expect(")")
        elif kind == "int":
            self.i += 1
            base = GroupWord()
        elif tok == "e":
            self.i += 1
            base = GroupWord()
        else:
            if self.generators is not None and tok not in self.generators:
                raise UndeclaredGenerator(f"undeclared generator {tok!r}", pos, self.text)
            self.i += 1
            base = GroupWord(((tok, 1),))
        if self.accept("^"):
            base = base ** self.exponent()
        return base

    def exponent(self) -> int:
        braced = self.accept("{")
        sign = -1 if self.accept("-") else 1
        kind, tok, pos = self.peek()
        if kind != "int":
            raise self.error("expected an integer exponent")
        self.i += 1
        if braced:
            self.expect("}")
        return sign * int(tok)


def parse_presentation(text: str) -> Presentation:
    return _Parser(text).presentation()


def parse_word(text: str, generators: Sequence[str] | None = None) -> GroupWord:
    """Parse a bare word such as ``"b a b^-1"``."""
    p = _Parser(text, generators)
    w = p.word()
    if p.peek()[0] != "end":
        raise p.error("trailing input after word")
    return w


# -- coset enumeration -----------------------------------------------------

@dataclass
class CosetTable:
    """Completed coset table on live cosets, renumbered ``0..n-1``.

    ``rows[c][2*i]`` is ``c . g_i`` and ``rows[c][2*i+1]`` is ``c . g_i^-1``.
    Coset 0 is the subgroup itself (here the trivial subgroup).
    """

    presentation: Presentation
    rows: list[list[int]]
    defined: int = 0  # total cosets ever defined, dead ones included

    @property
    def n_cosets(self) -> int:
        return len(self.rows)

    def is_complete(self) -> bool:
        return all(x is not None for row in self.rows for x in row)

    def generator_permutations(self) -> list[Permutation]:
        return [Permutation(row[2 * i] for row in self.rows) for i in range(len(self.presentation.generators))]


class _Enumerator:
    # HLT strategy with coincidence processing, after Holt, Eick & O'Brien,
    # "Handbook of Computational Group Theory", section 5.1.

    def __init__(self, pres: Presentation, max_cosets: int):
        self.pres = pres
        self.max_cosets = max_cosets
        ngens = len(pres.generators)
        self.ncols = 2 * ngens
        col = {g: 2 * i for i, g in enumerate(pres.generators)}
        self.relators = []
        for r in pres.relators:
            cols = []
            for sym, exp in r.letters:
                c = col[sym] if exp > 0 else col[sym] + 1
                cols.extend([c] * abs(exp))
            self.relators.append(cols)
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.queue: list[int] = []

    @staticmethod
    def inv(x: int) -> int:
        return x ^ 1

    def rep(self, k: int) -> int:
        p = self.parent
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def define(self, c: int, x: int) -> None:
        if self.live >= self.max_cosets:
            raise TableOverflow(f"more than {self.max_cosets} live cosets")
        n = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(n)
        self.live += 1
        self.table[c][x] = n
        self.table[n][self.inv(x)] = c

    def merge(self, k: int, l: int) -> None:
        a, b = self.rep(k), self.rep(l)
        if a != b:
            a, b = min(a, b), max(a, b)
            self.parent[b] = a
            self.live -= 1
            self.queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        self.queue = []
        self.merge(a, b)
        table = self.table
        i = 0
        while i < len(self.queue):
            g = self.queue[i]
            i += 1
            for x in range(self.ncols):
                d = table[g][x]
                if d is None:
                    continue
                xi = self.inv(x)
                table[d][xi] = None
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] is not None:
                    self.merge(nu, table[mu][x])
                elif table[nu][xi] is not None:
                    self.merge(mu, table[nu][xi])
                else:
                    table[mu][x] = nu
                    table[nu][xi] = mu

    def scan_and_fill(self, alpha: int, word: list[int]) -> None:
        table = self.table
        f = b = alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][self.inv(word[j])] is not None:
                b = table[b][self.inv(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][self.inv(word[i])] = f
                return
            self.define(f, word[i])

    def run(self) -> CosetTable:
        alpha = 0
        while alpha < len(self.table):
            for w in self.relators:
                if self.parent[alpha] != alpha:
                    break
                self.scan_and_fill(alpha, w)
            if self.parent[alpha] == alpha:
                for x in range(self.ncols):
                    if self.table[alpha][x] is None:
                        self.define(alpha, x)
            alpha += 1
        return self.compact()

    def compact(self) -> CosetTable:
        live = [c for c in range(len(self.table)) if self.parent[c] == c]
        renumber = {c: k for k, c in enumerate(live)}
        rows = [[renumber[self.rep(self.table[c][x])] for x in range(self.ncols)] for c in live]
        return CosetTable(self.pres, rows, defined=len(self.table))


def coset_enumerate(P: Presentation | str, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerate cosets of the trivial subgroup; the coset count is |G|."""
    if isinstance(P, str):
        P = parse_presentation(P)
    return _Enumerator(P, max_cosets).run()


def realize(P: Presentation | str, max_cosets: int = DEFAULT_MAX_COSETS, label: str | None = None) -> FiniteGroup:
    """Regular permutation representation of a finitely presented group.

    Generators of the returned group correspond, in order, to the
    presentation's generators.
    """
    if isinstance(P, str):
        P = parse_presentation(P)
    table = coset_enumerate(P, max_cosets)
    perms = table.generator_permutations()
    G = generate(perms, limit=max(table.n_cosets, 1), label=label or str(P), degree=table.n_cosets)
    if G.order != table.n_cosets:  # the regular action is faithful, so this means a bug
        raise OrderMismatch(f"{table.n_cosets} cosets but the generated group has order {G.order}")
    return G


def evaluate_word(word: GroupWord, images: dict[str, Permutation], degree: int) -> Permutation:
    result = Permutation.identity(degree)
    for sym, exp in word.letters:
        result = result * (images[sym] ** exp)
    return result
