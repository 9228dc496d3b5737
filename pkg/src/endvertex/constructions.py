"""Named group families, products, the group-spec language and the catalog.

A group spec is text such as ``Dicyclic(12) x Cyclic(2)`` or
``Semidirect(Cyclic(5), Cyclic(4), "a^2")``. Each constructor fixes the
generator order of the group it builds; semidirect actions refer to the
normal factor's generators by the letters ``a, b, c, d, f, g, ...`` (``e``
is skipped because it denotes the identity).

Generator conventions:

- ``Cyclic(n)``: one generator, an n-cycle.
- ``Dihedral(2k)``: rotation, reflection.
- ``Dicyclic(4k)``: ``a`` of order 2k, ``b`` with ``b^2 = a^k``, ``b a b^-1 = a^-1``.
- ``Symmetric(n)``: n-cycle, transposition. ``Alternating(n)``: 3-cycles ``(0 1 k)``.
- ``Affine(1, q)``: translation ``x -> x+1``, scaling ``x -> g x`` (g a primitive root).
- ``A x B`` and ``Semidirect(N, H, ...)``: generators of the left factor, then the right.
- ``Presented("<...>")``: the presentation's generators in order.
- ``Generated("(0 1 2)", "(0 1)")``: the given permutations.
"""
from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    CatalogParseError,
    DuplicateLabel,
    InvalidParameter,
    LimitExceeded,
    NotAnAutomorphism,
    OrderMismatch,
    PresentationSyntaxError,
)
from .numtheory import is_prime, factorize
from .permgroup import ORDER_CAP, FiniteGroup, Permutation, direct_product, generate
from . import presentation as fp

__all__ = [
    "GroupSpec",
    "Cyclic",
    "Dihedral",
    "Dicyclic",
    "Symmetric",
    "Alternating",
    "Affine",
    "DirectProduct",
    "SemidirectProduct",
    "Presented",
    "Generated",
    "parse_spec",
    "build",
    "semidirect_product",
    "from_multiplication_table",
    "CatalogEntry",
    "Catalog",
    "load_catalog",
    "parse_catalog",
    "default_catalog_path",
    "CATALOG_ENV",
]

CATALOG_ENV = "ENDVERTEX_CATALOG"
GENERATOR_LETTERS = "abcdfghijklmnopqrstuvwyz"  # no 'e' (identity), no 'x' (product)


# -- group specs -----------------------------------------------------------

class GroupSpec:
    """Base class of the spec expression tree."""

    def build(self, limit: int = ORDER_CAP) -> FiniteGroup:
        raise NotImplementedError

    def __str__(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<GroupSpec {self}>"


@dataclass(frozen=True, repr=False)
class Cyclic(GroupSpec):
    n: int

    def build(self, limit=ORDER_CAP):
        if self.n < 1:
            raise InvalidParameter(f"Cyclic needs n >= 1, got {self.n}")
        _check_cap(self.n, limit)
        gen = Permutation([(i + 1) % self.n for i in range(self.n)])
        return generate([gen], limit, str(self))

    def __str__(self):
        return f"Cyclic({self.n})"


@dataclass(frozen=True, repr=False)
class Dihedral(GroupSpec):
    """Dihedral group of the given order 2k (symmetries of a k-gon)."""

    order: int

    def build(self, limit=ORDER_CAP):
        m = self.order
        if m < 4 or m % 2:
            raise InvalidParameter(f"Dihedral needs an even order >= 4, got {m}")
        _check_cap(m, limit)
        k = m // 2
        if k == 2:
            rot = Permutation.from_cycles([(0, 1), (2, 3)], 4)
            ref = Permutation.from_cycles([(0, 2), (1, 3)], 4)
        else:
            rot = Permutation([(i + 1) % k for i in range(k)])
            ref = Permutation([(-i) % k for i in range(k)])
        return generate([rot, ref], limit, str(self))

    def __str__(self):
        return f"Dihedral({self.order})"


@dataclass(frozen=True, repr=False)
class Dicyclic(GroupSpec):
    """Dicyclic group of order 4k, <a, b | a^2k = e, b^2 = a^k, b a b^-1 = a^-1>."""

    order: int

    def build(self, limit=ORDER_CAP):
        m = self.order
        if m < 8 or m % 4:
            raise InvalidParameter(f"Dicyclic needs an order divisible by 4 and >= 8, got {m}")
        _check_cap(m, limit)
        k = m // 4
        n = 2 * k
        # a^i b^j  <->  index i + n*j
        def mul(x, y):
            i, j = x % n, x // n
            s, t = y % n, y // n
            if j == 0:
                return (i + s) % n + n * t
            # a^i b a^s b^t = a^(i-s) b^(1+t)
            if t == 0:
                return (i - s) % n + n
            return (i - s + k) % n

        return from_multiplication_table(_table(m, mul), [1, n], label=str(self))

    def __str__(self):
        return f"Dicyclic({self.order})"


@dataclass(frozen=True, repr=False)
class Symmetric(GroupSpec):
    n: int

    def build(self, limit=ORDER_CAP):
        n = self.n
        if n < 1:
            raise InvalidParameter(f"Symmetric needs n >= 1, got {n}")
        _check_cap(_factorial(n), limit)
        if n == 1:
            return generate([], limit, str(self), degree=1)
        gens = [Permutation([(i + 1) % n for i in range(n)]), Permutation.from_cycles([(0, 1)], n)]
        return generate(gens if n > 2 else gens[1:], limit, str(self))

    def __str__(self):
        return f"Symmetric({self.n})"


@dataclass(frozen=True, repr=False)
class Alternating(GroupSpec):
    n: int

    def build(self, limit=ORDER_CAP):
        n = self.n
        if n < 1:
            raise InvalidParameter(f"Alternating needs n >= 1, got {n}")
        _check_cap(max(_factorial(n) // 2, 1), limit)
        gens = [Permutation.from_cycles([(0, 1, k)], n) for k in range(2, n)]
        return generate(gens, limit, str(self), degree=n)

    def __str__(self):
        return f"Alternating({self.n})"


@dataclass(frozen=True, repr=False)
class Affine(GroupSpec):
    """GA(1, q) = maps x -> a x + b over Z_q, q prime."""

    dim: int
    q: int

    def build(self, limit=ORDER_CAP):
        if self.dim != 1:
            raise InvalidParameter("only Affine(1, q) is supported")
        q = self.q
        if not is_prime(q):
            raise InvalidParameter(f"Affine(1, q) needs prime q, got {q}")
        _check_cap(q * (q - 1), limit)
        g = _primitive_root(q)
        gens = [Permutation([(x + 1) % q for x in range(q)])]
        if q > 2:
            gens.append(Permutation([(g * x) % q for x in range(q)]))
        return generate(gens, limit, str(self))

    def __str__(self):
        return f"Affine({self.dim}, {self.q})"


@dataclass(frozen=True, repr=False)
class DirectProduct(GroupSpec):
    left: GroupSpec
    right: GroupSpec

    def build(self, limit=ORDER_CAP):
        return direct_product(self.left.build(limit), self.right.build(limit), limit, label=str(self))

    def __str__(self):
        return f"{_operand(self.left, self)} x {_operand(self.right, self, right=True)}"


@dataclass(frozen=True, repr=False)
class SemidirectProduct(GroupSpec):
    """N semidirect H; ``action`` lists, per generator of H (separated by ';'),
    the images of N's generators (separated by ',') as words in a, b, c, ..."""

    normal: GroupSpec
    acting: GroupSpec
    action: str

    def build(self, limit=ORDER_CAP):
        N = self.normal.build(limit)
        H = self.acting.build(limit)
        images = parse_action(self.action, N, len(H.generators))
        return semidirect_product(N, H, images, limit=limit, label=str(self))

    def __str__(self):
        return f"Semidirect({self.normal}, {self.acting}, {_quote(self.action)})"


@dataclass(frozen=True, repr=False)
class Presented(GroupSpec):
    text: str

    def build(self, limit=ORDER_CAP):
        return fp.realize(self.text, max_cosets=max(fp.DEFAULT_MAX_COSETS, limit), label=str(self))

    def __str__(self):
        return f"Presented({_quote(self.text)})"


@dataclass(frozen=True, repr=False)
class Generated(GroupSpec):
    """Group generated by explicit permutations in cycle notation on points 0, 1, ..."""

    cycles: tuple[str, ...]

    def build(self, limit=ORDER_CAP):
        try:
            perms = [Permutation.from_cycles(c) for c in self.cycles]
        except ValueError as exc:
            raise InvalidParameter(str(exc)) from None
        degree = max((p.degree for p in perms), default=1)
        perms = [Permutation(list(p.images) + list(range(p.degree, degree))) for p in perms]
        return generate(perms, limit, str(self), degree=max(degree, 1))

    def __str__(self):
        return f"Generated({', '.join(_quote(c) for c in self.cycles)})"


def _operand(spec: GroupSpec, parent: GroupSpec, right: bool = False) -> str:
    # direct product is left-associative; parenthesize a product on the right
    if right and isinstance(spec, DirectProduct):
        return f"({spec})"
    return str(spec)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _check_cap(order: int, limit: int) -> None:
    if order > limit:
        raise LimitExceeded(f"group of order {order} exceeds the cap of {limit}")


def _primitive_root(q: int) -> int:
    if q == 2:
        return 1
    primes = [p for p, _ in factorize(q - 1)]
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in primes):
            return g
    raise InvalidParameter(f"no primitive root mod {q}")


def _table(n: int, mul: Callable[[int, int], int]) -> np.ndarray:
    return np.array([[mul(i, j) for j in range(n)] for i in range(n)], dtype=np.int64)


def build(spec: GroupSpec | str, limit: int = ORDER_CAP) -> FiniteGroup:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    return spec.build(limit)


def from_multiplication_table(table, generators: Sequence[int] | None = None, label: str = "G") -> FiniteGroup:
    """Right-regular permutation realization of a group given by its Cayley table.

    ``table[i][j]`` is the index of the product of elements i and j; element 0
    must be the identity. ``generators`` are element indices (default: all).
    """
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    if t.shape != (n, n) or not (t[0] == np.arange(n)).all() or not (t[:, 0] == np.arange(n)).all():
        raise InvalidParameter("table must be square with element 0 as identity")
    if generators is None:
        generators = range(1, n)
    # x -> x * s
    perms = [Permutation(t[:, s]) for s in generators]
    G = generate(perms, limit=n, label=label, degree=n)
    if G.order != n:
        raise InvalidParameter(f"generators span {G.order} of {n} elements")
    return G


# -- semidirect products ---------------------------------------------------

def _bfs_words(G: FiniteGroup) -> list[tuple[int, int]]:
    """For each element reached from the identity: (parent index, generator position)."""
    gen_idx = [G.index(g) for g in G.generators]
    t = G.table
    parent: dict[int, tuple[int, int]] = {0: (-1, -1)}
    queue = deque([0])
    order = []
    while queue:
        x = queue.popleft()
        order.append(x)
        for k, g in enumerate(gen_idx):
            y = int(t[x, g])
            if y not in parent:
                parent[y] = (x, k)
                queue.append(y)
    return [(y, *parent[y]) for y in order]


def _extend_hom(G: FiniteGroup, gen_images: Sequence[np.ndarray], compose, identity) -> list:
    values: list = [None] * G.order
    for y, x, k in _bfs_words(G):
        values[y] = identity if x < 0 else compose(values[x], gen_images[k])
    return values


def semidirect_product(N: FiniteGroup, H: FiniteGroup, action: Sequence[Sequence[int]],
                       limit: int = ORDER_CAP, label: str | None = None) -> FiniteGroup:
    """N semidirect H where generator k of H acts on N by sending N's
    generators to the element indices ``action[k]``.

    Elements are pairs (n, h) with (n1, h1)(n2, h2) = (n1 . h1(n2), h1 h2).
    """
    label = label or f"{N.label}:{H.label}"
    if N.order * H.order > limit:
        raise LimitExceeded(f"|{N.label}| * |{H.label}| exceeds {limit}")
    if len(action) != len(H.generators):
        raise NotAnAutomorphism(f"{len(action)} action entries for {len(H.generators)} generators of {H.label}")
    Nt = N.table
    n_gens = [N.index(g) for g in N.generators]

    autos = []
    for k, imgs in enumerate(action):
        if len(imgs) != len(n_gens):
            raise NotAnAutomorphism(f"generator {k}: {len(imgs)} images for {len(n_gens)} generators")
        f = np.array(_extend_hom(N, list(imgs), lambda a, b: int(Nt[a, b]), 0), dtype=np.int64)
        # f(x g) == f(x) f(g) for all x and generators g makes f a homomorphism
        for g, img in zip(n_gens, imgs):
            if not (f[Nt[:, g]] == Nt[f, img]).all():
                raise NotAnAutomorphism(f"generator {k} of {H.label} does not induce a homomorphism of {N.label}")
        if len(set(f.tolist())) != N.order:
            raise NotAnAutomorphism(f"generator {k} of {H.label} induces a non-bijective map of {N.label}")
        autos.append(f)

    ident = np.arange(N.order, dtype=np.int64)
    # phi(h1 h2) = phi(h1) o phi(h2): apply phi(h2) first
    phi = _extend_hom(H, autos, lambda a, b: a[b], ident)
    Ht = H.table
    h_gens = [H.index(g) for g in H.generators]
    for h in range(H.order):
        for k, g in enumerate(h_gens):
            if not (phi[int(Ht[h, g])] == phi[h][autos[k]]).all():
                raise NotAnAutomorphism(f"action of {H.label} is not a homomorphism into Aut({N.label})")

    nH = H.order
    size = N.order * nH

    def right_mult(n2: int, h2: int) -> Permutation:
        images = np.empty(size, dtype=np.int64)
        for h1 in range(nH):
            rows = Nt[np.arange(N.order), phi[h1][n2]]  # n1 . h1(n2) for every n1
            images[np.arange(N.order) * nH + h1] = rows * nH + Ht[h1, h2]
        return Permutation(images)

    gens = [right_mult(g, 0) for g in n_gens] + [right_mult(0, g) for g in h_gens]
    return generate(gens, limit, label, degree=size)


def parse_action(text: str, N: FiniteGroup, n_acting: int) -> list[list[int]]:
    """Turn ``"a^2; a^-1"`` into element indices of N, one list per acting generator."""
    names = GENERATOR_LETTERS[: len(N.generators)]
    images = {s: g for s, g in zip(names, N.generators)}
    parts = [p for p in text.split(";")] if text.strip() else []
    if len(parts) != n_acting:
        raise NotAnAutomorphism(f"action {text!r} has {len(parts)} parts for {n_acting} acting generators")
    out = []
    for part in parts:
        words = [w for w in part.split(",")]
        row = []
        for w in words:
            word = fp.parse_word(w, names)
            row.append(N.index(fp.evaluate_word(word, images, N.degree)))
        out.append(row)
    return out


# -- spec language ---------------------------------------------------------

_SPEC_TOKEN = re.compile(r'\s*(?:(?P<str>"(?:[^"\\]|\\.)*")|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[(),×*]))')

_CONSTRUCTORS: dict[str, tuple[type, str]] = {
    "Cyclic": (Cyclic, "i"),
    "Dihedral": (Dihedral, "i"),
    "Dicyclic": (Dicyclic, "i"),
    "Symmetric": (Symmetric, "i"),
    "Alternating": (Alternating, "i"),
    "Affine": (Affine, "ii"),
    "DirectProduct": (DirectProduct, "gg"),
    "Semidirect": (SemidirectProduct, "ggs"),
    "SemidirectProduct": (SemidirectProduct, "ggs"),
    "Presented": (Presented, "s"),
    "Generated": (Generated, "s*"),
}


def _spec_tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _SPEC_TOKEN.match(text, pos)
        if not m:
            raise PresentationSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        tok = m.group(kind)
        start = m.start(kind)
        if kind == "name" and len(tok) > 1 and tok[0] == "x" and tok[1].isupper():
            # "Cyclic(2)xCyclic(3)"
            out.append(("op", "x", start))
            out.append(("name", tok[1:], start + 1))
        elif kind == "name" and tok == "x" or kind == "op" and tok in "×*":
            out.append(("op", "x", start))
        elif kind == "str":
            out.append(("str", re.sub(r"\\(.)", r"\1", tok[1:-1]), start))
        else:
            out.append((kind, tok, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _spec_tokens(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def error(self, msg, pos=None):
        return PresentationSyntaxError(msg, self.peek()[2] if pos is None else pos, self.text)

    def take(self, kind, value=None):
        k, tok, pos = self.peek()
        if k != kind or (value is not None and tok != value):
            want = value or kind
            raise self.error(f"expected {want!r}, found {tok or 'end of input'!r}")
        self.i += 1
        return tok, pos

    def parse(self) -> GroupSpec:
        spec = self.expr()
        if self.peek()[0] != "end":
            raise self.error("trailing input")
        return spec

    def expr(self) -> GroupSpec:
        spec = self.term()
        while self.peek()[:2] == ("op", "x"):
            self.i += 1
            spec = DirectProduct(spec, self.term())
        return spec

    def term(self) -> GroupSpec:
        kind, tok, pos = self.peek()
        if (kind, tok) == ("op", "("):
            self.i += 1
            spec = self.expr()
            self.take("op", ")")
            return spec
        name, pos = self.take("name")
        if name not in _CONSTRUCTORS:
            raise PresentationSyntaxError(f"unknown constructor {name!r}", pos, self.text)
        cls, sig = _CONSTRUCTORS[name]
        self.take("op", "(")
        args = []
        variadic = sig.endswith("*")
        sig = sig.rstrip("*")
        while True:
            if self.peek()[:2] == ("op", ")") and (variadic or not sig):
                break
            kinds = sig[len(args)] if len(args) < len(sig) else (sig[-1] if variadic else None)
            if kinds is None:
                raise self.error(f"too many arguments to {name}")
            args.append(self.argument(kinds))
            if not (self.peek()[:2] == ("op", ",")):
                break
            self.i += 1
        _, close = self.take("op", ")")
        if len(args) < len(sig):
            raise PresentationSyntaxError(f"{name} takes {len(sig)} argument(s)", close, self.text)
        if cls is Generated:
            return Generated(tuple(args))
        if cls is Presented:
            try:
                fp.parse_presentation(args[0])
            except PresentationSyntaxError as exc:
                raise PresentationSyntaxError(f"in Presented(...): {exc}", pos, self.text) from None
        return cls(*args)

    def argument(self, kind: str):
        if kind == "i":
            tok, _ = self.take("int")
            return int(tok)
        if kind == "s":
            tok, _ = self.take("str")
            return tok
        return self.expr()


def parse_spec(text: str) -> GroupSpec:
    """Parse a group-spec expression, e.g. ``Dihedral(12) x Cyclic(2)``."""
    return _SpecParser(text).parse()


# -- catalog ---------------------------------------------------------------

@dataclass
class CatalogEntry:
    label: str
    spec: GroupSpec
    order: int
    expected_end_vertices: int | None = None
    small_group_id: tuple[int, int] | None = None
    note: str = ""
    line: int | None = None

    def realize(self, limit: int = ORDER_CAP) -> FiniteGroup:
        G = self.spec.build(limit).relabel(self.label)
        if G.order != self.order:
            raise OrderMismatch(f"{self.label}: declared order {self.order}, realized {G.order}")
        return G


class Catalog(list):
    """List of CatalogEntry plus the set of orders for which the list is complete."""

    def __init__(self, entries: Iterable[CatalogEntry] = (), complete_orders: Iterable[int] = ()):
        super().__init__(entries)
        self.complete_orders = frozenset(complete_orders)

    def by_label(self, label: str) -> CatalogEntry:
        for e in self:
            if e.label == label:
                return e
        raise KeyError(label)

    def restrict(self, keep: Callable[[CatalogEntry], bool]) -> "Catalog":
        """Sub-catalog; completeness is kept only for orders whose entries all survive."""
        kept = [e for e in self if keep(e)]
        dropped = {e.order for e in self if not keep(e)}
        return Catalog(kept, self.complete_orders - dropped)


def _split_fields(line: str) -> list[str]:
    fields, buf, quoted, escaped = [], [], False, False
    for ch in line:
        if escaped:
            buf.append(ch)
            escaped = False
        elif ch == "\\" and quoted:
            buf.append(ch)
            escaped = True
        elif ch == '"':
            quoted = not quoted
            buf.append(ch)
        elif ch == "|" and not quoted:
            fields.append("".join(buf).strip())
            buf = []
        else:
            buf.append(ch)
    fields.append("".join(buf).strip())
    return fields


def _parse_orders(text: str, lineno: int) -> set[int]:
    orders: set[int] = set()
    for part in re.split(r"[,\s]+", text.strip()):
        if not part:
            continue
        m = re.fullmatch(r"(\d+)(?:-(\d+))?", part)
        if not m:
            raise CatalogParseError(f"bad order range {part!r}", lineno)
        lo, hi = int(m[1]), int(m[2] or m[1])
        orders.update(range(lo, hi + 1))
    return orders


def parse_catalog(text: str) -> Catalog:
    """Parse catalog text.

    One entry per line::

        label | spec | order=N | expect=K | sgid=(n,k) | note=free text

    ``expect``, ``sgid`` and ``note`` are optional; ``note=`` swallows the rest
    of the line. ``#`` starts a comment line. A line ``@complete 1-24, 28``
    declares orders for which the catalog lists every group up to isomorphism.
    """
    entries: list[CatalogEntry] = []
    complete: set[int] = set()
    labels: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("@"):
            directive, _, rest = line.partition(" ")
            if directive != "@complete":
                raise CatalogParseError(f"unknown directive {directive!r}", lineno)
            complete |= _parse_orders(rest, lineno)
            continue
        note = ""
        head, sep, tail = line.partition("| note=")
        if sep:
            line, note = head, tail.strip()
        fields = _split_fields(line)
        if len(fields) < 3:
            raise CatalogParseError("expected 'label | spec | order=N ...'", lineno)
        label, spec_text, *attrs = fields
        if not label or "|" in label:
            raise CatalogParseError("empty label", lineno)
        if label in labels:
            raise DuplicateLabel(f"duplicate label {label!r}", lineno)
        try:
            spec = parse_spec(spec_text)
        except PresentationSyntaxError as exc:
            raise CatalogParseError(f"bad spec {spec_text!r}: {exc}", lineno) from None
        order = expect = sgid = None
        for attr in attrs:
            key, eq, value = attr.partition("=")
            key, value = key.strip(), value.strip()
            if not eq:
                raise CatalogParseError(f"expected key=value, got {attr!r}", lineno)
            if key == "order" and value.isdigit():
                order = int(value)
            elif key == "expect" and value.isdigit():
                expect = int(value)
            elif key == "sgid" and (m := re.fullmatch(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", value)):
                sgid = (int(m[1]), int(m[2]))
            elif key == "note":
                note = value
            else:
                raise CatalogParseError(f"bad field {attr!r}", lineno)
        if order is None:
            raise CatalogParseError("missing order=N", lineno)
        labels.add(label)
        entries.append(CatalogEntry(label, spec, order, expect, sgid, note, lineno))
    return Catalog(entries, complete)


def load_catalog(path: str | os.PathLike | None = None) -> Catalog:
    path = Path(path) if path is not None else default_catalog_path()
    return parse_catalog(path.read_text(encoding="utf-8"))


def default_catalog_path() -> Path:
    env = os.environ.get(CATALOG_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("endvertex") / "data" / "catalog.txt"))
