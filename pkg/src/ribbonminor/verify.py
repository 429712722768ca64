"""Exhaustive enumeration of small presentations and end-to-end verification
of the excluded-minor characterisations.

The built-in checks are named T1-T7 and C1-C4 for the class/minor
equivalences and by content for the supporting lemmas; see CHECKS and LEMMAS
for what each one asserts.  Reports are deterministic: one machine-readable
row per enumerated class, sorted by canonical form, plus a ``#`` summary
footer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .arrow_core import (
    ArpError,
    ArrowPresentation,
    canonical_presentation,
    canonicalize,
    euler_genus,
    underlying_graph,
)
from .duality import geometric_dual
from .minor_ops import contract_edge, delete_edge, delete_vertex
from .minor_search import (
    MinorFamily,
    applicable_moves,
    bipartite_by_even_face_minors,
    bipartite_by_excluded_minors,
    bipartite_by_join_minors,
    bipartite_plane_by_excluded_minors,
    cc_by_excluded_eulerian_minors,
    cc_by_excluded_minors,
    cc_plane_by_excluded_minors,
    plane_bipartite_by_excluded_minors,
    plane_cc_by_excluded_minors,
)
from .predicates import is_bipartite, is_checkerboard_colourable, is_plane

__all__ = [
    "CHECKS",
    "EnumerationSpec",
    "LEMMAS",
    "ReportRow",
    "VerificationReport",
    "enumerate_presentations",
    "verify_lemma",
    "verify_theorem",
]

_MAX_SUPPORTED_EDGES = 4


@dataclass(frozen=True)
class EnumerationSpec:
    """Bounds for exhaustive enumeration, one representative per equivalence
    class.  Four edges are supported but slow; see the README for budgets."""

    max_edges: int = 3
    max_circles: int = 4
    connected_only: bool = True

    def __post_init__(self):
        if not 0 <= self.max_edges <= _MAX_SUPPORTED_EDGES:
            raise ArpError(f"max_edges must be between 0 and {_MAX_SUPPORTED_EDGES}")
        if self.max_circles < 1:
            raise ArpError("max_circles must be positive")


def _words(n_edges: int):
    """All token sequences of length 2*n_edges: every edge index appears
    twice, indices first appear in increasing order, and each first
    occurrence has positive sign (both are pure normalisations of the
    canonical form)."""
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(word: list[tuple[int, int]], opened: int, open_set: frozenset[int]):
        if len(word) == 2 * n_edges:
            out.append(tuple(word))
            return
        if opened < n_edges:
            word.append((opened, 1))
            rec(word, opened + 1, open_set | {opened})
            word.pop()
        for e in sorted(open_set):
            for s in (1, -1):
                word.append((e, s))
                rec(word, opened, open_set - {e})
                word.pop()

    rec([], 0, frozenset())
    return out


def _compositions(n: int, max_parts: int):
    """Splits of range(n) into at most max_parts consecutive non-empty runs."""
    from itertools import combinations

    for k in range(1, min(n, max_parts) + 1):
        for cuts in combinations(range(1, n), k - 1):
            bounds = (0, *cuts, n)
            yield [range(bounds[i], bounds[i + 1]) for i in range(k)]


@lru_cache(maxsize=None)
def enumerate_presentations(spec: EnumerationSpec = EnumerationSpec()) -> tuple[ArrowPresentation, ...]:
    """Every presentation within the bounds, one canonical representative per
    class, sorted by canonical form.

    >>> [g.to_text() for g in enumerate_presentations(EnumerationSpec(1, 2))]
    ['(a+ a+)', '(a+ a-)', '(a+)(a+)']
    """
    forms: set[str] = set()
    if not spec.connected_only or spec.max_edges == 0:
        top = 1 if spec.connected_only else spec.max_circles
        for k in range(1, top + 1):
            forms.add(canonicalize(ArrowPresentation([()] * k)))
    for e in range(1, spec.max_edges + 1):
        for word in _words(e):
            for parts in _compositions(2 * e, spec.max_circles):
                circles = [tuple((f"e{word[i][0]}", word[i][1]) for i in part) for part in parts]
                g = ArrowPresentation(circles)
                if spec.connected_only and not underlying_graph(g).is_connected():
                    continue
                forms.add(canonicalize(g))
                if not spec.connected_only:
                    for extra in range(1, spec.max_circles - len(circles) + 1):
                        padded = ArrowPresentation(circles + [()] * extra)
                        forms.add(canonicalize(padded))
    return tuple(canonical_presentation(ArrowPresentation.from_text(f)) for f in sorted(forms))


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReportRow:
    subject: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    check_id: str
    rows: tuple[ReportRow, ...] = field(default_factory=tuple)

    @property
    def n_failures(self) -> int:
        return sum(1 for r in self.rows if not r.ok)

    @property
    def passed(self) -> bool:
        return self.n_failures == 0

    def counterexamples(self) -> tuple[str, ...]:
        return tuple(r.subject for r in self.rows if not r.ok)

    def to_text(self) -> str:
        lines = [
            f"{self.check_id}\t{r.subject}\t{r.detail}\tok={str(r.ok).lower()}" for r in self.rows
        ]
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(
            f"# {self.check_id}: checked={len(self.rows)} failures={self.n_failures} -> {verdict}"
        )
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# theorem-style checks: class predicate == excluded-minor predicate
# ---------------------------------------------------------------------------

# id -> (domain restriction or None, class predicate, excluded-minor predicate)
CHECKS = {
    "T1": (None, is_checkerboard_colourable, cc_by_excluded_eulerian_minors),
    "T2": (None, is_checkerboard_colourable, cc_by_excluded_minors),
    "T3": (None, is_bipartite, bipartite_by_even_face_minors),
    "T4": (None, is_bipartite, bipartite_by_excluded_minors),
    "T5": (None, is_bipartite, bipartite_by_join_minors),
    "T6": (
        is_checkerboard_colourable,
        is_plane,
        lambda g: plane_cc_by_excluded_minors(g, "cc") and plane_cc_by_excluded_minors(g, "eulerian"),
    ),
    "T7": (
        is_bipartite,
        is_plane,
        lambda g: plane_bipartite_by_excluded_minors(g, "bipartite")
        and plane_bipartite_by_excluded_minors(g, "even-face"),
    ),
    "C1": (None, lambda g: is_checkerboard_colourable(g) and is_plane(g),
           lambda g: cc_plane_by_excluded_minors(g, "eulerian")),
    "C2": (None, lambda g: is_checkerboard_colourable(g) and is_plane(g),
           lambda g: cc_plane_by_excluded_minors(g, "cc")),
    "C3": (None, lambda g: is_bipartite(g) and is_plane(g),
           lambda g: bipartite_plane_by_excluded_minors(g, "even-face")),
    "C4": (None, lambda g: is_bipartite(g) and is_plane(g),
           lambda g: bipartite_plane_by_excluded_minors(g, "bipartite")),
}


def verify_theorem(check_id: str, spec: EnumerationSpec = EnumerationSpec()) -> VerificationReport:
    """Check one predicate/excluded-minor equivalence over the enumerated
    classes; disagreements are reported, never raised."""
    if check_id not in CHECKS:
        raise ArpError(f"unknown check id {check_id!r}")
    domain, predicate, excluded = CHECKS[check_id]
    rows = []
    for g in enumerate_presentations(spec):
        if domain is not None and not domain(g):
            continue
        lhs = predicate(g)
        rhs = excluded(g)
        rows.append(
            ReportRow(
                subject=canonicalize(g),
                ok=lhs == rhs,
                detail=f"predicate={str(lhs).lower()} excluded_minor={str(rhs).lower()}",
            )
        )
    return VerificationReport(check_id, tuple(rows))


# ---------------------------------------------------------------------------
# lemma-style checks: closure, genus monotonicity, dual move transport
# ---------------------------------------------------------------------------


def _closure_check(g, families, predicate) -> tuple[int, int]:
    checked = violations = 0
    for fam in families:
        for mv in applicable_moves(g, fam):
            checked += 1
            if not predicate(mv.apply(g)):
                violations += 1
    return checked, violations


def _lemma_cc_closure(g):
    if not is_checkerboard_colourable(g):
        return None
    return _closure_check(
        g, (MinorFamily.CHECKERBOARD, MinorFamily.EULERIAN), is_checkerboard_colourable
    )


def _lemma_bipartite_closure(g):
    if not is_bipartite(g):
        return None
    return _closure_check(g, (MinorFamily.BIPARTITE, MinorFamily.EVEN_FACE), is_bipartite)


def _lemma_genus_contract_delete(g):
    checked = violations = 0
    base = euler_genus(g)
    for e in g.labels:
        for result in (contract_edge(g, e), delete_edge(g, e)):
            checked += 1
            violations += euler_genus(result) > base
    for c in range(g.n_vertices):
        checked += 1
        violations += euler_genus(delete_vertex(g, c)) > base
    return checked, violations


def _lemma_genus_eulerian(g):
    checked = violations = 0
    base = euler_genus(g)
    for mv in applicable_moves(g, MinorFamily.EULERIAN):
        checked += 1
        violations += euler_genus(mv.apply(g)) > base
    return checked, violations


def _lemma_genus_cc(g):
    # empirical only: monotonicity for the checkerboard family (which also
    # allows improper contractions) is observed, not a stated law
    checked = violations = 0
    base = euler_genus(g)
    for mv in applicable_moves(g, MinorFamily.CHECKERBOARD):
        checked += 1
        violations += euler_genus(mv.apply(g)) > base
    return checked, violations


def _transport_check(g, family, dual_family) -> tuple[int, int]:
    star = geometric_dual(g)
    direct = {canonicalize(geometric_dual(mv.apply(g))) for mv in applicable_moves(g, family)}
    transported = {canonicalize(mv.apply(star)) for mv in applicable_moves(star, dual_family)}
    return 1, int(direct != transported)


def _lemma_dual_transport_eulerian(g):
    return _transport_check(g, MinorFamily.EULERIAN, MinorFamily.EVEN_FACE)


def _lemma_dual_transport_cc(g):
    return _transport_check(g, MinorFamily.CHECKERBOARD, MinorFamily.BIPARTITE)


LEMMAS = {
    "cc-closure": _lemma_cc_closure,
    "bipartite-closure": _lemma_bipartite_closure,
    "genus-contract-delete": _lemma_genus_contract_delete,
    "genus-eulerian": _lemma_genus_eulerian,
    "genus-cc": _lemma_genus_cc,
    "dual-transport-eulerian": _lemma_dual_transport_eulerian,
    "dual-transport-cc": _lemma_dual_transport_cc,
}


def verify_lemma(lemma_id: str, spec: EnumerationSpec = EnumerationSpec()) -> VerificationReport:
    """Check a closure / genus-monotonicity / dual-transport law over the
    enumerated classes."""
    if lemma_id not in LEMMAS:
        raise ArpError(f"unknown lemma id {lemma_id!r}")
    fn = LEMMAS[lemma_id]
    rows = []
    for g in enumerate_presentations(spec):
        result = fn(g)
        if result is None:
            continue
        checked, violations = result
        rows.append(
            ReportRow(
                subject=canonicalize(g),
                ok=violations == 0,
                detail=f"moves={checked} violations={violations}",
            )
        )
    return VerificationReport(lemma_id, tuple(rows))
