"""Executable checks of the structural facts about end vertices.

Each ``check_*`` function takes a realized group and returns a CheckResult.
They are regression oracles: every one of them is a theorem, so a failing
check on a correctly realized group points at a bug in this package.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from . import coprimegraph as cg
from .errors import DegenerateGroup
from .numtheory import max_phi_inverse, phi, prime_power_base, rad
from .permgroup import FiniteGroup, centralizer, conjugacy_class, cyclic_subgroup, is_p_group

__all__ = [
    "CheckResult",
    "check_rad_characterization",
    "check_phi_bound",
    "check_unique_cyclic",
    "check_prime_power_equivalence",
    "check_parity",
    "check_centralizer_union",
    "general_order_bound",
    "check_general_bound",
    "check_cyclic_containment_bound",
    "run_full_suite",
    "ORACLE_MAX_ORDER",
]

ORACLE_MAX_ORDER = 256


@dataclass
class CheckResult:
    name: str
    label: str
    holds: bool
    witness: str | None = None
    details: dict[str, Any] = field(default_factory=dict)
    applicable: bool = True

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError(f"failed check {self.name} needs a witness")

    @property
    def status(self) -> str:
        if not self.applicable:
            return "n/a"
        return "holds" if self.holds else "FAILS"

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "label": self.label,
            "status": self.status,
            "witness": self.witness,
            "details": self.details,
        }


def _not_applicable(name: str, G: FiniteGroup, reason: str) -> CheckResult:
    return CheckResult(name, G.label, True, details={"reason": reason}, applicable=False)


def _ends(G: FiniteGroup) -> frozenset[int]:
    return cg.end_vertices(cg.build_graph(G)).end_vertices


def _need_three(G: FiniteGroup, name: str) -> None:
    if G.order < 3:
        raise DegenerateGroup(f"{name} needs |G| >= 3, got {G.order}")


def _describe(G: FiniteGroup, x: int) -> str:
    return f"element {x} of order {G.order_of[x]}"


def check_rad_characterization(G: FiniteGroup) -> CheckResult:
    """End vertices are exactly the elements whose order has the same radical as |G|."""
    name = "rad_characterization"
    _need_three(G, name)
    ends = _ends(G)
    r = rad(G.order)
    by_rad = frozenset(x for x in range(1, G.order) if rad(G.order_of[x]) == r)
    details = {"end_vertex_count": len(ends), "rad_G": r}
    if ends == by_rad:
        return CheckResult(name, G.label, True, details=details)
    x = min(ends ^ by_rad)
    side = "graph-only" if x in ends else "rad-only"
    return CheckResult(name, G.label, False, f"{_describe(G, x)} is {side}", details)


def check_phi_bound(G: FiniteGroup) -> CheckResult:
    name = "phi_bound"
    _need_three(G, name)
    ends = _ends(G)
    for x in sorted(ends):
        if phi(G.order_of[x]) > len(ends):
            return CheckResult(name, G.label, False,
                               f"{_describe(G, x)}: phi = {phi(G.order_of[x])} > {len(ends)}")
    worst = max((phi(G.order_of[x]) for x in ends), default=0)
    return CheckResult(name, G.label, True, details={"end_vertex_count": len(ends), "max_phi": worst})


def check_unique_cyclic(G: FiniteGroup) -> CheckResult:
    """Equality phi(|x|) = |E_G| forces |x| squarefree and <x> unique of its order."""
    name = "unique_cyclic"
    _need_three(G, name)
    ends = _ends(G)
    cases = [x for x in sorted(ends) if phi(G.order_of[x]) == len(ends)]
    for x in cases:
        m = G.order_of[x]
        if rad(m) != m:
            return CheckResult(name, G.label, False, f"{_describe(G, x)}: rad({m}) = {rad(m)} != {m}")
        cx = cyclic_subgroup(G, x)
        for y in range(G.order):
            if G.order_of[y] == m and cyclic_subgroup(G, y) != cx:
                return CheckResult(name, G.label, False,
                                   f"{_describe(G, y)} generates a second cyclic subgroup of order {m}")
    return CheckResult(name, G.label, True, details={"equality_cases": len(cases)})


def check_prime_power_equivalence(G: FiniteGroup) -> CheckResult:
    """A prime-power-order end vertex exists iff G is a p-group; then |G| = |E_G| + 1."""
    name = "prime_power_equivalence"
    ends = _ends(G)
    p = is_p_group(G)
    pp = [x for x in sorted(ends) if prime_power_base(G.order_of[x]) is not None]
    details = {"p": p, "end_vertex_count": len(ends), "order": G.order}
    if bool(pp) != (p is not None):
        if pp:
            return CheckResult(name, G.label, False, f"{_describe(G, pp[0])} but G is not a p-group", details)
        return CheckResult(name, G.label, False, f"G is a {p}-group without a prime-power end vertex", details)
    if p is not None:
        if G.order != len(ends) + 1:
            return CheckResult(name, G.label, False, f"|G| = {G.order} but |E_G| + 1 = {len(ends) + 1}", details)
        bad = [x for x in pp if prime_power_base(G.order_of[x]) != p]
        if bad:
            return CheckResult(name, G.label, False, f"{_describe(G, bad[0])} is not a {p}-power", details)
    return CheckResult(name, G.label, True, details=details)


def check_parity(G: FiniteGroup) -> CheckResult:
    """|E_G| is odd iff G is a 2-group, and then |E_G| = 2^n - 1."""
    name = "parity"
    k = len(_ends(G))
    two_group = is_p_group(G) == 2
    details = {"end_vertex_count": k, "two_group": two_group}
    if (k % 2 == 1) != two_group:
        return CheckResult(name, G.label, False, f"|E_G| = {k} but 2-group is {two_group}", details)
    if k % 2 and (k + 1) & k:
        return CheckResult(name, G.label, False, f"|E_G| = {k} is odd but not of the form 2^n - 1", details)
    return CheckResult(name, G.label, True, details=details)


def check_centralizer_union(G: FiniteGroup) -> CheckResult:
    """C_G(x) is the union of <y> over end vertices y commuting with x, for every end vertex x."""
    name = "centralizer_union"
    ends = _ends(G)
    if not ends:
        return _not_applicable(name, G, "no end vertices")
    cyclic = {y: cyclic_subgroup(G, y) for y in ends}
    for x in sorted(ends):
        c = centralizer(G, x)
        union = frozenset().union(*(cyclic[y] for y in ends if y in c))
        if union != c:
            return CheckResult(name, G.label, False,
                               f"{_describe(G, x)}: |C_G(x)| = {len(c)}, union has {len(union)} elements")
    return CheckResult(name, G.label, True, details={"checked": len(ends)})


def general_order_bound(n: int) -> int:
    """Upper bound 2n(Mn - n + 1) on |G| when |E_G| = 2n, M = max{m : phi(m) <= 2n}."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    M = max_phi_inverse(2 * n)
    return 2 * n * (M * n - n + 1)


def check_general_bound(G: FiniteGroup) -> CheckResult:
    name = "general_bound"
    k = len(_ends(G))
    if k == 0 or k % 2:
        return _not_applicable(name, G, f"|E_G| = {k} is not a positive even number")
    bound = general_order_bound(k // 2)
    details = {"end_vertex_count": k, "bound": bound, "order": G.order}
    if G.order > bound:
        return CheckResult(name, G.label, False, f"|G| = {G.order} > {bound}", details)
    return CheckResult(name, G.label, True, details=details)


def check_cyclic_containment_bound(G: FiniteGroup) -> CheckResult:
    """If E_G lies in one cyclic subgroup <x>, then |G| <= |x| phi(|x|).

    Such an x is itself an end vertex, so only end vertices are scanned.
    """
    name = "cyclic_containment_bound"
    _need_three(G, name)
    ends = _ends(G)
    if not ends:
        return _not_applicable(name, G, "no end vertices")
    containing = [x for x in sorted(ends) if ends <= cyclic_subgroup(G, x)]
    if not containing:
        return _not_applicable(name, G, "E_G is not contained in a cyclic subgroup")
    m = G.order_of[containing[0]]
    bound = m * phi(m)
    details = {"element_order": m, "bound": bound, "order": G.order, "sharp": G.order == bound}
    for x in containing:
        mx = G.order_of[x]
        if G.order > mx * phi(mx):
            return CheckResult(name, G.label, False, f"{_describe(G, x)}: |G| = {G.order} > {mx * phi(mx)}", details)
    return CheckResult(name, G.label, True, details=details)


# -- graph-level invariants ------------------------------------------------

def _check_graph(G: FiniteGroup) -> list[CheckResult]:
    graph = cg.build_graph(G)
    out = []
    n = G.order
    if n >= 2:
        d = cg.diameter(graph)
        ok = d <= 2 and (d >= 1)
        out.append(CheckResult("diameter_at_most_2", G.label, ok,
                               None if ok else f"diameter {d}", {"diameter": d}))
        star = cg.is_star(graph)
        p = is_p_group(G)
        ok = star == (p is not None)
        out.append(CheckResult("star_iff_p_group", G.label, ok,
                               None if ok else f"star={star}, p={p}", {"star": star, "p": p}))
    deg0 = cg.degree(graph, 0)
    out.append(CheckResult("identity_universal", G.label, deg0 == n - 1,
                           None if deg0 == n - 1 else f"identity degree {deg0}", {"degree": deg0}))
    if n <= ORACLE_MAX_ORDER:
        fast = cg.explicit_edges(graph)
        slow = cg.brute_force_edges(G.order_of)
        ok = fast == slow
        witness = None
        if not ok:
            diff = sorted(set(fast) ^ set(slow))
            witness = f"edge {diff[0]} differs" if diff else "edge multiplicity differs"
        out.append(CheckResult("graph_oracle", G.label, ok, witness, {"edges": len(slow)}))
    ends = cg.end_vertices(graph).end_vertices
    bad = [x for x in sorted(ends) if G.inv(x) not in ends]
    out.append(CheckResult("inverse_closure", G.label, not bad,
                           f"{_describe(G, bad[0])} has inverse outside E_G" if bad else None))
    for x in range(G.order):
        if len(centralizer(G, x)) * len(conjugacy_class(G, x)) != n:
            out.append(CheckResult("class_equation", G.label, False, f"{_describe(G, x)}"))
            break
    else:
        out.append(CheckResult("class_equation", G.label, True))
    return out


CHECKS: tuple[Callable[[FiniteGroup], CheckResult], ...] = (
    check_rad_characterization,
    check_phi_bound,
    check_unique_cyclic,
    check_prime_power_equivalence,
    check_parity,
    check_centralizer_union,
    check_general_bound,
    check_cyclic_containment_bound,
)


def run_full_suite(G: FiniteGroup) -> list[CheckResult]:
    """Run every check; one failing or erroring check never stops the rest."""
    results = []
    for check in CHECKS:
        name = check.__name__.removeprefix("check_")
        try:
            results.append(check(G))
        except DegenerateGroup as exc:
            results.append(_not_applicable(name, G, str(exc)))
        except Exception as exc:  # report, keep going
            results.append(CheckResult(name, G.label, False, f"error: {exc!r}"))
    try:
        results.extend(_check_graph(G))
    except Exception as exc:
        results.append(CheckResult("graph_invariants", G.label, False, f"error: {exc!r}"))
    return results
