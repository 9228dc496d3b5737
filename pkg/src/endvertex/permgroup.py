"""Permutation groups realized as fully enumerated element lists.

Products compose left to right: ``(p * q)(i) == q(p(i))``, i.e. apply ``p``
first. This matches the right action on cosets used by coset enumeration, so a
word ``g1 g2 ... gk`` evaluates to ``g1 * g2 * ... * gk``.
"""
from __future__ import annotations

import math
import re
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import DegreeMismatch, LimitExceeded
from .numtheory import lcm, prime_power_base

__all__ = [
    "ORDER_CAP",
    "Permutation",
    "FiniteGroup",
    "generate",
    "element_order",
    "centralizer",
    "conjugacy_class",
    "cyclic_subgroup",
    "is_p_group",
    "direct_product",
]

ORDER_CAP = 10_000


class Permutation:
    """Bijection of ``{0, ..., degree-1}`` stored as a tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]] | str, degree: int | None = None) -> "Permutation":
        """Build from cycles, e.g. ``[(0, 1, 2), (3, 4)]`` or ``"(0 1 2)(3,4)"``."""
        if isinstance(cycles, str):
            text = cycles.strip()
            if not re.fullmatch(r"(\s*\(\s*\d+(?:\s*[,\s]\s*\d+)*\s*\))*\s*", text):
                raise ValueError(f"bad cycle notation: {cycles!r}")
            cycles = [
                [int(t) for t in re.split(r"[,\s]+", body.strip()) if t]
                for body in re.findall(r"\(([^()]*)\)", text)
            ]
        points = [p for c in cycles for p in c]
        if len(points) != len(set(points)):
            raise ValueError(f"cycles are not disjoint: {cycles}")
        if degree is None:
            degree = max(points, default=-1) + 1
        images = list(range(degree))
        for c in cycles:
            for i, p in enumerate(c):
                images[p] = c[(i + 1) % len(c)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        q = other.images
        return Permutation(q[i] for i in self.images)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.degree else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial) or "()"
        return f"Permutation({body}, degree={self.degree})"


class FiniteGroup:
    """Enumerated permutation group. Immutable once built.

    ``elements[0]`` is always the identity; the remaining elements are in
    breadth-first discovery order from ``generators``.
    """

    def __init__(self, elements: Sequence[Permutation], generators: Sequence[Permutation], label: str = "G"):
        self.elements: tuple[Permutation, ...] = tuple(elements)
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self.label = label
        self.degree = self.elements[0].degree
        self._index = {p: i for i, p in enumerate(self.elements)}
        self.order_of: tuple[int, ...] = tuple(p.order() for p in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.label!r} order={self.order} degree={self.degree}>"

    def relabel(self, label: str) -> "FiniteGroup":
        g = FiniteGroup.__new__(FiniteGroup)
        g.__dict__.update({k: v for k, v in self.__dict__.items()})
        g.label = label
        return g

    def index(self, p: Permutation) -> int:
        return self._index[p]

    def __contains__(self, p: Permutation) -> bool:
        return p in self._index

    @cached_property
    def table(self) -> np.ndarray:
        """Cayley table on indices: ``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        n = self.order
        perms = np.array([p.images for p in self.elements], dtype=np.int64).reshape(n, self.degree)
        lookup = {row.tobytes(): i for i, row in enumerate(perms)}
        table = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            # row j of perms[:, perms[i]] is elements[i] * elements[j]
            prods = perms[:, perms[i]]
            table[i] = [lookup[r.tobytes()] for r in prods]
        return table

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmin(self.table, axis=1)  # identity has index 0

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverses[i])

    def power(self, i: int, k: int) -> int:
        k %= self.order_of[i]
        r = 0
        for _ in range(k):
            r = self.mul(r, i)
        return r

    def order_multiset(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for o in self.order_of:
            counts[o] = counts.get(o, 0) + 1
        return dict(sorted(counts.items()))

    @cached_property
    def center(self) -> frozenset[int]:
        t = self.table
        return frozenset(int(i) for i in np.flatnonzero((t == t.T).all(axis=1)))

    def is_abelian(self) -> bool:
        return len(self.center) == self.order


def generate(generators: Sequence[Permutation], limit: int = ORDER_CAP, label: str = "G",
             degree: int | None = None) -> FiniteGroup:
    """Breadth-first closure of ``generators`` under right multiplication.

    An empty generator list needs ``degree`` (defaults to 1) and gives the
    trivial group.
    """
    generators = list(generators)
    degrees = {g.degree for g in generators}
    if len(degrees) > 1:
        raise DegreeMismatch(f"generators have different degrees: {sorted(degrees)}")
    if degrees:
        (deg,) = degrees
        if degree is not None and degree != deg:
            raise DegreeMismatch(f"degree {degree} requested, generators have degree {deg}")
    else:
        deg = 1 if degree is None else degree
    identity = Permutation.identity(deg)
    seen = {identity}
    elements = [identity]
    queue = deque([identity])
    gen_images = [g.images for g in generators]
    while queue:
        x = queue.popleft()
        xi = x.images
        for q in gen_images:
            y = Permutation(q[i] for i in xi)
            if y not in seen:
                if len(elements) >= limit:
                    raise LimitExceeded(f"closure of {label!r} exceeds {limit} elements")
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return FiniteGroup(elements, generators, label)


def element_order(G: FiniteGroup, x: int) -> int:
    return G.order_of[x]


def centralizer(G: FiniteGroup, x: int) -> frozenset[int]:
    t = G.table
    return frozenset(int(g) for g in np.flatnonzero(t[:, x] == t[x, :]))


def conjugacy_class(G: FiniteGroup, x: int) -> frozenset[int]:
    t = G.table
    # g x g^-1 for every g
    return frozenset(int(c) for c in t[t[:, x], G.inverses])


def cyclic_subgroup(G: FiniteGroup, x: int) -> frozenset[int]:
    out = [0]
    y = x
    while y != 0:
        out.append(y)
        y = G.mul(y, x)
    return frozenset(out)


def is_p_group(G: FiniteGroup) -> int | None:
    return prime_power_base(G.order)


def direct_product(A: FiniteGroup, B: FiniteGroup, limit: int = ORDER_CAP, label: str | None = None) -> FiniteGroup:
    """A x B acting on the disjoint union of the two point sets.

    Generators are A's generators (shifted to act on the first block)
    followed by B's.
    """
    if A.order * B.order > limit:
        raise LimitExceeded(f"|{A.label}| * |{B.label}| = {A.order * B.order} exceeds {limit}")
    da, db = A.degree, B.degree

    def left(p: Permutation) -> Permutation:
        return Permutation(list(p.images) + list(range(da, da + db)))

    def right(p: Permutation) -> Permutation:
        return Permutation(list(range(da)) + [da + i for i in p.images])

    gens = [left(g) for g in A.generators] + [right(g) for g in B.generators]
    return generate(gens, limit, label or f"{A.label}x{B.label}", degree=da + db)


def order_lcm_multiset(A: FiniteGroup, B: FiniteGroup) -> dict[int, int]:
    """Order multiset a direct product must have: lcm over all pairs of component orders."""
    counts: dict[int, int] = {}
    for a, ca in A.order_multiset().items():
        for b, cb in B.order_multiset().items():
            m = lcm(a, b)
            counts[m] = counts.get(m, 0) + ca * cb
    return dict(sorted(counts.items()))
