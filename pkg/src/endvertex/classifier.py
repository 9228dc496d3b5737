"""Search a catalog for the groups with a given number of end vertices and
compare the result with the published classification lists for 1 <= n <= 10.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from . import coprimegraph as cg
from .constructions import Catalog, CatalogEntry
from .numtheory import phi, prime_power_base, rad
from .theorems import general_order_bound

__all__ = [
    "AdmissibleOrders",
    "ClassificationReport",
    "EntryAnalysis",
    "PublishedTable",
    "PUBLISHED_TABLES",
    "admissible_orders",
    "analyze_entries",
    "classify",
    "verify_paper_tables",
    "check_expectations",
    "PROVEN_COMPLETE",
    "CATALOG_RELATIVE",
    "NO_CLAIM",
]

PROVEN_COMPLETE = "PROVEN-COMPLETE"
CATALOG_RELATIVE = "CATALOG-RELATIVE"
NO_CLAIM = "NO-CLAIM"


@dataclass(frozen=True)
class AdmissibleOrders:
    """Group orders compatible with |E_G| = n. ``orders`` is None when unbounded (n = 0)."""

    n: int
    orders: frozenset[int] | None
    bound: int | None
    reason: str

    def __contains__(self, order: int) -> bool:
        return self.orders is None or order in self.orders


def admissible_orders(n: int) -> AdmissibleOrders:
    """Orders a group with exactly n end vertices can have.

    Odd n: only 2-groups, so |G| = n + 1 and n + 1 must be a power of 2.
    Even n: a p-group of order n + 1, or |G| at most the general bound for
    n/2, divisible by the order d of some end vertex (phi(d) <= n, d not a
    prime power) with rad(|G|) = rad(d).
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return AdmissibleOrders(0, None, None, "every order admits groups without end vertices")
    if n % 2:
        if (n + 1) & n == 0:
            return AdmissibleOrders(n, frozenset({n + 1}), n + 1, f"odd, only 2-groups of order {n + 1}")
        return AdmissibleOrders(n, frozenset(), None, f"odd, {n + 1} not a power of 2")
    bound = general_order_bound(n // 2)
    orders = set()
    if prime_power_base(n + 1) is not None:
        orders.add(n + 1)
    end_orders = [d for d in range(2, bound + 1) if phi(d) <= n and prime_power_base(d) is None]
    for d in end_orders:
        r = rad(d)
        orders.update(m for m in range(d, bound + 1, d) if rad(m) == r)
    return AdmissibleOrders(n, frozenset(orders), bound,
                            f"even, |G| <= {bound}; end-vertex orders {end_orders}")


@dataclass(frozen=True)
class EntryAnalysis:
    label: str
    order: int
    end_vertex_count: int | None
    error: str | None = None


def _analyze(entry: CatalogEntry) -> EntryAnalysis:
    try:
        G = entry.realize()
        count = cg.end_vertices(cg.build_graph(G)).count
        return EntryAnalysis(entry.label, entry.order, count)
    except Exception as exc:  # one bad entry must not sink the run
        return EntryAnalysis(entry.label, entry.order, None, f"{type(exc).__name__}: {exc}")


def analyze_entries(entries: Sequence[CatalogEntry], jobs: int = 1) -> dict[str, EntryAnalysis]:
    """Realize entries and count end vertices, optionally across worker processes.

    The result is keyed by label; completion order never affects it.
    """
    entries = list(entries)
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_analyze, entries, chunksize=4))
    else:
        results = [_analyze(e) for e in entries]
    return {r.label: r for r in results}


# -- published lists -------------------------------------------------------

@dataclass(frozen=True)
class PublishedTable:
    """Published answer for |E_G| = n.

    ``labels`` name bundled catalog entries. ``all_of_order`` means every
    group of that order; ``sgids`` lists small-group identifiers, of which
    the catalog may bundle only a subset.
    """

    n: int
    labels: tuple[str, ...] = ()
    all_of_order: int | None = None
    sgids: tuple[tuple[int, int], ...] = ()


_SGIDS_8 = (
    (9, 1), (9, 2), (15, 1), (18, 2), (18, 5), (24, 3), (24, 13), (30, 4), (36, 1), (36, 4),
    (36, 7), (36, 13), (48, 28), (48, 29), (48, 30), (48, 48), (60, 1), (60, 2), (60, 3), (60, 10),
    (60, 11), (60, 12), (72, 19), (72, 45), (120, 6), (120, 7), (120, 8), (120, 9), (120, 10),
    (120, 11), (120, 12), (120, 13), (120, 14), (120, 40), (120, 41), (120, 42), (144, 114),
    (144, 120), (144, 185), (144, 187), (240, 95), (240, 96), (240, 97), (240, 98), (240, 99),
    (240, 100), (240, 101), (240, 195),
)

PUBLISHED_TABLES: dict[int, PublishedTable] = {
    1: PublishedTable(1, ("Z2",)),
    2: PublishedTable(2, ("Z3", "Z6", "D12", "Dic12")),
    3: PublishedTable(3, ("Z4", "Z2xZ2")),
    4: PublishedTable(4, ("Z5", "Z10", "D20", "Dic20", "GA(1,5)xZ2", "Z5:Z8")),
    5: PublishedTable(5),
    6: PublishedTable(6, (
        "Z7", "Z12", "Z2xZ6", "Z14", "S3xZ3", "D24", "Dic24", "S3xZ4", "Dic12xZ2", "D12xZ2",
        "Z3:Z8", "Z3:D8", "D28", "Dic28", "Z3xA4", "Z2^2:Z9", "G72a", "G72b",
    )),
    7: PublishedTable(7, all_of_order=8),
    8: PublishedTable(8, sgids=_SGIDS_8),
    9: PublishedTable(9),
    10: PublishedTable(10, ("Z11", "Z22", "D44", "Dic44")),
}


# -- reports ---------------------------------------------------------------

FOUND = "found"
MISSING = "missing"
NOT_IN_CATALOG = "not-in-catalog"
NOT_BUNDLED = "not-bundled"


@dataclass
class ClassificationReport:
    n: int
    confidence: str
    admissible: AdmissibleOrders
    searched_orders: list[int]
    complete_orders: list[int]
    matches: list[tuple[str, int, int]]
    pruned: list[str]
    errors: list[tuple[str, str]]
    expected: list[str] | None = None
    verdicts: dict[str, str] = field(default_factory=dict)
    extras: list[tuple[str, int, str]] = field(default_factory=list)

    @property
    def match_labels(self) -> list[str]:
        return [m[0] for m in self.matches]

    @property
    def passed(self) -> bool:
        """True when nothing contradicts the published list.

        Every expected group that is bundled is found, no match falls
        outside the list at an order the catalog covers completely, and no
        entry failed to realize.
        """
        if self.errors:
            return False
        if any(v in (MISSING, NOT_IN_CATALOG) for v in self.verdicts.values()):
            return False
        return not any(ctx == "contradiction" for _, _, ctx in self.extras)

    def to_dict(self) -> dict[str, Any]:
        adm = self.admissible
        return {
            "n": self.n,
            "confidence": self.confidence,
            "admissible": {
                "orders": None if adm.orders is None else sorted(adm.orders),
                "bound": adm.bound,
                "reason": adm.reason,
            },
            "searched_orders": self.searched_orders,
            "complete_orders": self.complete_orders,
            "matches": [{"label": l, "order": o, "end_vertices": k} for l, o, k in self.matches],
            "pruned": self.pruned,
            "errors": [{"label": l, "error": e} for l, e in self.errors],
            "expected": self.expected,
            "verdicts": dict(sorted(self.verdicts.items())),
            "extras": [{"label": l, "order": o, "context": c} for l, o, c in self.extras],
            "passed": self.passed,
        }

    def summary(self) -> str:
        head = f"|E_G| = {self.n:2d}: {len(self.matches)} match(es) [{self.confidence}]"
        if not self.admissible.orders and self.admissible.orders is not None:
            head += f" - no groups ({self.admissible.reason})"
        return head + ("  PASS" if self.passed else "  FAIL")


def _expected(table: PublishedTable, catalog: Catalog) -> tuple[list[str], dict[str, str]]:
    """Expected labels and an id for each; for sgid tables the id is the sgid text."""
    if table.all_of_order is not None:
        labels = [e.label for e in catalog if e.order == table.all_of_order]
        return labels, {l: l for l in labels}
    if table.sgids:
        by_sgid = {e.small_group_id: e.label for e in catalog if e.small_group_id}
        ids = {f"SmallGroup{sg}".replace(" ", ""): by_sgid.get(sg) for sg in table.sgids}
        return [v for v in ids.values() if v], ids
    return list(table.labels), {l: l for l in table.labels}


def classify(n: int, catalog: Catalog, jobs: int = 1,
             analyses: dict[str, EntryAnalysis] | None = None) -> ClassificationReport:
    """All catalog groups with exactly n end vertices, with per-label verdicts
    against the published list when one exists."""
    adm = admissible_orders(n)
    candidates = [e for e in catalog if e.order in adm]
    pruned = [e.label for e in catalog if e.order not in adm]
    if analyses is None:
        analyses = analyze_entries(candidates, jobs)
    matches, errors = [], []
    for e in candidates:
        a = analyses[e.label]
        if a.error:
            errors.append((e.label, a.error))
        elif a.end_vertex_count == n:
            matches.append((e.label, e.order, n))
    searched = sorted({e.order for e in candidates})
    complete = sorted(set(searched) & catalog.complete_orders)

    if n == 0:
        confidence = NO_CLAIM
    elif adm.orders is not None and adm.orders <= catalog.complete_orders:
        confidence = PROVEN_COMPLETE
    else:
        confidence = CATALOG_RELATIVE

    report = ClassificationReport(n, confidence, adm, searched, complete, matches, pruned, errors)
    table = PUBLISHED_TABLES.get(n)
    if table is None:
        return report
    expected_labels, ids = _expected(table, catalog)
    report.expected = sorted(ids) if table.sgids else expected_labels
    present = {e.label for e in catalog}
    matched = set(report.match_labels)
    for key, label in ids.items():
        if label is None:
            report.verdicts[key] = NOT_BUNDLED
        elif label not in present:
            report.verdicts[key] = NOT_IN_CATALOG
        else:
            report.verdicts[key] = FOUND if label in matched else MISSING
    expected_set = set(expected_labels)
    for label, order, _ in matches:
        if label in expected_set:
            continue
        ctx = "contradiction" if order in catalog.complete_orders else "unverified (order not catalog-complete)"
        report.extras.append((label, order, ctx))
    return report


def verify_paper_tables(catalog: Catalog, jobs: int = 1, ns: Iterable[int] = range(1, 11)) -> list[ClassificationReport]:
    analyses = analyze_entries(list(catalog), jobs)
    return [classify(n, catalog, analyses=analyses) for n in ns]


def check_expectations(catalog: Catalog, jobs: int = 1,
                       analyses: dict[str, EntryAnalysis] | None = None) -> list[tuple[str, int | None, int | None, str | None]]:
    """Entries whose computed end-vertex count differs from their ``expect=`` value.

    Each row is (label, expected, computed, error).
    """
    if analyses is None:
        analyses = analyze_entries(list(catalog), jobs)
    bad = []
    for e in catalog:
        a = analyses[e.label]
        if a.error or (e.expected_end_vertices is not None and a.end_vertex_count != e.expected_end_vertices):
            bad.append((e.label, e.expected_end_vertices, a.end_vertex_count, a.error))
    return bad
