"""Minor containment for the five move families, and the excluded-minor
characterisations built on it.

A family fixes the legal moves: ``eulerian`` uses proper edge contractions,
component deletions and even vertex splits; ``cc`` (checkerboard colourable)
the same with all contractions allowed; ``even-face`` proper edge deletions,
component deletions and even face splits; ``bipartite`` the same with all
deletions allowed; ``join`` permissible vertex joins, vertex deletions and
edge deletions.  Containment is decided by breadth-first search over
canonical forms; for the join family two presentations count as equal when
their underlying abstract graphs are isomorphic, since joins only ever feed
abstract-graph predicates.
"""

from __future__ import annotations

from collections import deque
from enum import Enum
from functools import lru_cache

from .arrow_core import (
    ArpError,
    ArrowPresentation,
    canonical_presentation,
    canonicalize,
    euler_genus,
    parse_arp,
    trace_boundaries,
    underlying_graph,
)
from .duality import geometric_dual
from .minor_ops import (
    MinorMove,
    can_split_face,
    can_split_vertex,
    is_permissible_join,
    is_proper_contraction,
    is_proper_deletion,
)
from .predicates import is_bipartite, is_checkerboard_colourable, is_plane

__all__ = [
    "MinorFamily",
    "applicable_moves",
    "bipartite_by_even_face_minors",
    "bipartite_by_excluded_minors",
    "bipartite_by_join_minors",
    "bipartite_plane_by_excluded_minors",
    "cc_by_excluded_eulerian_minors",
    "cc_by_excluded_minors",
    "cc_plane_by_excluded_minors",
    "contains_minor",
    "minor_witness",
    "plane_bipartite_by_excluded_minors",
    "plane_cc_by_excluded_minors",
    "replay_witness",
    "target_catalog",
]


class MinorFamily(str, Enum):
    EULERIAN = "eulerian"
    EVEN_FACE = "even-face"
    CHECKERBOARD = "cc"
    BIPARTITE = "bipartite"
    BIPARTITE_JOIN = "join"

    @classmethod
    def parse(cls, name: str) -> "MinorFamily":
        aliases = {
            "eulerian": cls.EULERIAN,
            "even-face": cls.EVEN_FACE,
            "evenface": cls.EVEN_FACE,
            "cc": cls.CHECKERBOARD,
            "checkerboard": cls.CHECKERBOARD,
            "bipartite": cls.BIPARTITE,
            "join": cls.BIPARTITE_JOIN,
            "bipartite-join": cls.BIPARTITE_JOIN,
        }
        try:
            return aliases[name.lower()]
        except KeyError:
            raise ArpError(f"unknown minor family {name!r}") from None


def _vertex_split_moves(g: ArrowPresentation) -> list[MinorMove]:
    moves = []
    for ci in range(g.n_vertices):
        ngaps = g.n_gaps(ci)
        for p in range(ngaps):
            for q in range(p, ngaps):
                if can_split_vertex(g, ci, p, q):
                    moves.append(MinorMove("split-vertex", (ci, p, q)))
    return moves


def _face_split_moves(g: ArrowPresentation) -> list[MinorMove]:
    moves = []
    for bi, b in enumerate(trace_boundaries(g)):
        vpos = b.vertex_positions()
        for i, p in enumerate(vpos):
            for q in vpos[i:]:
                if can_split_face(g, bi, p, q):
                    moves.append(MinorMove("split-face", (bi, p, q)))
    return moves


def applicable_moves(g: ArrowPresentation, family: MinorFamily) -> tuple[MinorMove, ...]:
    """Every legal move of the family on g, duplicate-free, in a fixed order
    (deletions, then contractions, then splits, then joins)."""
    family = MinorFamily(family)
    n_comp = len(underlying_graph(g).components())
    comp_dels = [MinorMove("delete-component", (k,)) for k in range(n_comp)]
    moves: list[MinorMove] = []
    if family is MinorFamily.EULERIAN:
        moves += comp_dels
        moves += [MinorMove("contract", (e,)) for e in g.labels if is_proper_contraction(g, e)]
        moves += _vertex_split_moves(g)
    elif family is MinorFamily.CHECKERBOARD:
        moves += comp_dels
        moves += [MinorMove("contract", (e,)) for e in g.labels]
        moves += _vertex_split_moves(g)
    elif family is MinorFamily.EVEN_FACE:
        moves += [MinorMove("delete", (e,)) for e in g.labels if is_proper_deletion(g, e)]
        moves += comp_dels
        moves += _face_split_moves(g)
    elif family is MinorFamily.BIPARTITE:
        moves += [MinorMove("delete", (e,)) for e in g.labels]
        moves += comp_dels
        moves += _face_split_moves(g)
    else:  # BIPARTITE_JOIN
        moves += [MinorMove("delete", (e,)) for e in g.labels]
        moves += [MinorMove("delete-vertex", (c,)) for c in range(g.n_vertices)]
        moves += [
            MinorMove("join", (c1, c2))
            for c1 in range(g.n_vertices)
            for c2 in range(c1 + 1, g.n_vertices)
            if is_permissible_join(g, c1, c2)
        ]
    return tuple(moves)


# ---------------------------------------------------------------------------
# containment search
# ---------------------------------------------------------------------------

_successor_cache: dict[tuple[ArrowPresentation, MinorFamily], tuple] = {}


def _successors(g: ArrowPresentation, family: MinorFamily):
    """Cached (move, canonical successor) pairs; shared across searches."""
    key = (g, family)
    got = _successor_cache.get(key)
    if got is None:
        got = tuple(
            (mv, canonical_presentation(mv.apply(g))) for mv in applicable_moves(g, family)
        )
        _successor_cache[key] = got
    return got


def _isolated_count(g: ArrowPresentation) -> int:
    return sum(1 for c in g.circles if not c)


def _state_key(g: ArrowPresentation, family: MinorFamily):
    if family is MinorFamily.BIPARTITE_JOIN:
        return underlying_graph(g).canonical_key()
    return canonicalize(g)


def _search(g: ArrowPresentation, h: ArrowPresentation, family: MinorFamily, want_witness: bool):
    family = MinorFamily(family)
    target = _state_key(h, family)
    start = canonical_presentation(g)
    # Finiteness caps: vertex counts are bounded (splits add one vertex at a
    # time and surplus isolated vertices are useless), and no move ever adds
    # an edge.  Euler genus never increases along Eulerian-family moves, so
    # it prunes that family too.
    vcap = g.n_vertices + g.n_edges + h.n_vertices
    isocap = max(_isolated_count(start), h.n_vertices)
    emin = h.n_edges
    gmin = euler_genus(h) if family is MinorFamily.EULERIAN else None

    def pruned(s: ArrowPresentation) -> bool:
        if s.n_edges < emin or s.n_vertices > vcap or _isolated_count(s) > isocap:
            return True
        return gmin is not None and euler_genus(s) < gmin

    start_key = _state_key(start, family)
    if start_key == target:
        return [] if want_witness else True
    if pruned(start):
        return None if want_witness else False
    seen = {start_key}
    parents: dict = {}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        skey = _state_key(state, family)
        for mv, nxt in _successors(state, family):
            if pruned(nxt):
                continue
            nkey = _state_key(nxt, family)
            if nkey in seen:
                continue
            seen.add(nkey)
            parents[nkey] = (skey, mv)
            if nkey == target:
                if not want_witness:
                    return True
                moves = []
                k = nkey
                while k != start_key:
                    k, m = parents[k]
                    moves.append(m)
                return list(reversed(moves))
            queue.append(nxt)
    return None if want_witness else False


_contains_cache: dict[tuple, bool] = {}


def contains_minor(g: ArrowPresentation, h: ArrowPresentation, family: MinorFamily) -> bool:
    """Whether some sequence of family moves turns g into a presentation
    equivalent to h (underlying-graph isomorphism for the join family)."""
    family = MinorFamily(family)
    key = (family, canonicalize(g), canonicalize(h))
    got = _contains_cache.get(key)
    if got is None:
        got = _search(g, h, family, want_witness=False)
        _contains_cache[key] = got
    return got


def minor_witness(g, h, family: MinorFamily):
    """A shortest move sequence witnessing containment, or None.

    Each move applies to the canonical form of the previous state, starting
    from the canonical form of g; :func:`replay_witness` follows the same
    convention.
    """
    return _search(g, h, MinorFamily(family), want_witness=True)


def replay_witness(g: ArrowPresentation, moves) -> ArrowPresentation:
    state = canonical_presentation(g)
    for mv in moves:
        state = canonical_presentation(mv.apply(state))
    return state


# ---------------------------------------------------------------------------
# target catalog
# ---------------------------------------------------------------------------


def _validate_catalog(cat: dict[str, ArrowPresentation]) -> None:
    checks = [
        ("single_edge not checkerboard colourable", not is_checkerboard_colourable(cat["single_edge"])),
        ("nonorientable_loop not checkerboard colourable", not is_checkerboard_colourable(cat["nonorientable_loop"])),
        ("double_interleaved_loops not checkerboard colourable", not is_checkerboard_colourable(cat["double_interleaved_loops"])),
        ("orientable_loop not bipartite", not is_bipartite(cat["orientable_loop"])),
        ("nonorientable_loop not bipartite", not is_bipartite(cat["nonorientable_loop"])),
        ("triple_interleaved_loops checkerboard colourable", is_checkerboard_colourable(cat["triple_interleaved_loops"])),
        ("triple_interleaved_loops not plane", not is_plane(cat["triple_interleaved_loops"])),
        ("twisted_interleaved_loops checkerboard colourable", is_checkerboard_colourable(cat["twisted_interleaved_loops"])),
        ("twisted_interleaved_loops not plane", not is_plane(cat["twisted_interleaved_loops"])),
        ("triple_interleaved_loops genus 2", euler_genus(cat["triple_interleaved_loops"]) == 2),
        ("twisted_interleaved_loops genus 1", euler_genus(cat["twisted_interleaved_loops"]) == 1),
    ]
    bad = [name for name, ok in checks if not ok]
    if bad:
        raise RuntimeError("target catalog invariant violated: " + "; ".join(bad))


@lru_cache(maxsize=1)
def target_catalog() -> dict[str, ArrowPresentation]:
    """The named excluded-minor targets, validated on first use.

    ``orientable_loop`` and ``nonorientable_loop`` are the one-edge bouquets,
    ``single_edge`` the one edge joining two vertices,
    ``triple_interleaved_loops`` / ``double_interleaved_loops`` the bouquets
    of three / two pairwise interleaved orientable loops, and
    ``twisted_interleaved_loops`` the two interleaved non-orientable loops;
    ``*_dual`` entries are geometric duals.
    """
    cat = {
        "orientable_loop": parse_arp("(e+ e+)"),
        "nonorientable_loop": parse_arp("(e+ e-)"),
        "single_edge": parse_arp("(e+)(e+)"),
        "triple_interleaved_loops": parse_arp("(a+ b+ c+ a+ b+ c+)"),
        "double_interleaved_loops": parse_arp("(a+ b+ a+ b+)"),
        "twisted_interleaved_loops": parse_arp("(a+ b+ a- b-)"),
    }
    cat["triple_interleaved_loops_dual"] = geometric_dual(cat["triple_interleaved_loops"])
    cat["twisted_interleaved_loops_dual"] = geometric_dual(cat["twisted_interleaved_loops"])
    _validate_catalog(cat)
    return cat


# ---------------------------------------------------------------------------
# excluded-minor predicates
# ---------------------------------------------------------------------------


def _excludes(g: ArrowPresentation, family: MinorFamily, names: tuple[str, ...]) -> bool:
    cat = target_catalog()
    return not any(contains_minor(g, cat[n], family) for n in names)


def cc_by_excluded_minors(g: ArrowPresentation) -> bool:
    """Checkerboard colourability via excluded checkerboard-colourable
    minors: no minor equivalent to the single edge or the twisted loop."""
    return _excludes(g, MinorFamily.CHECKERBOARD, ("single_edge", "nonorientable_loop"))


def cc_by_excluded_eulerian_minors(g: ArrowPresentation) -> bool:
    """Checkerboard colourability via excluded Eulerian minors."""
    return _excludes(
        g, MinorFamily.EULERIAN, ("single_edge", "nonorientable_loop", "double_interleaved_loops")
    )


def bipartite_by_excluded_minors(g: ArrowPresentation) -> bool:
    """Bipartiteness via excluded bipartite minors."""
    return _excludes(g, MinorFamily.BIPARTITE, ("orientable_loop", "nonorientable_loop"))


def bipartite_by_even_face_minors(g: ArrowPresentation) -> bool:
    """Bipartiteness via excluded even-face minors."""
    return _excludes(
        g, MinorFamily.EVEN_FACE, ("orientable_loop", "nonorientable_loop", "double_interleaved_loops")
    )


def bipartite_by_join_minors(g: ArrowPresentation) -> bool:
    """Bipartiteness via excluded join minors (abstract-graph equivalence)."""
    return _excludes(g, MinorFamily.BIPARTITE_JOIN, ("orientable_loop", "nonorientable_loop"))


_PLANE_CC_TARGETS = ("triple_interleaved_loops", "twisted_interleaved_loops")
_PLANE_BIP_TARGETS = ("triple_interleaved_loops_dual", "twisted_interleaved_loops_dual")


def plane_cc_by_excluded_minors(g: ArrowPresentation, family: str = "cc") -> bool:
    """For checkerboard colourable g: planarity via excluded minors of the
    checkerboard-colourable (default) or Eulerian family."""
    fam = MinorFamily.parse(family)
    if fam not in (MinorFamily.CHECKERBOARD, MinorFamily.EULERIAN):
        raise ArpError("family must be 'cc' or 'eulerian'")
    return _excludes(g, fam, _PLANE_CC_TARGETS)


def plane_bipartite_by_excluded_minors(g: ArrowPresentation, family: str = "bipartite") -> bool:
    """For bipartite g: planarity via excluded minors of the bipartite
    (default) or even-face family."""
    fam = MinorFamily.parse(family)
    if fam not in (MinorFamily.BIPARTITE, MinorFamily.EVEN_FACE):
        raise ArpError("family must be 'bipartite' or 'even-face'")
    return _excludes(g, fam, _PLANE_BIP_TARGETS)


def cc_plane_by_excluded_minors(g: ArrowPresentation, family: str = "cc") -> bool:
    """Checkerboard colourable *and* plane, via a single enlarged exclusion
    list, with no precondition on g."""
    fam = MinorFamily.parse(family)
    if fam is MinorFamily.EULERIAN:
        names = (
            "single_edge",
            "nonorientable_loop",
            "triple_interleaved_loops",
            "double_interleaved_loops",
            "twisted_interleaved_loops",
        )
    elif fam is MinorFamily.CHECKERBOARD:
        names = (
            "single_edge",
            "nonorientable_loop",
            "triple_interleaved_loops",
            "twisted_interleaved_loops",
        )
    else:
        raise ArpError("family must be 'cc' or 'eulerian'")
    return _excludes(g, fam, names)


def bipartite_plane_by_excluded_minors(g: ArrowPresentation, family: str = "bipartite") -> bool:
    """Bipartite *and* plane, via a single enlarged exclusion list."""
    fam = MinorFamily.parse(family)
    if fam is MinorFamily.EVEN_FACE:
        names = (
            "orientable_loop",
            "nonorientable_loop",
            "triple_interleaved_loops_dual",
            "double_interleaved_loops",
            "twisted_interleaved_loops_dual",
        )
    elif fam is MinorFamily.BIPARTITE:
        names = (
            "orientable_loop",
            "nonorientable_loop",
            "triple_interleaved_loops_dual",
            "twisted_interleaved_loops_dual",
        )
    else:
        raise ArpError("family must be 'bipartite' or 'even-face'")
    return _excludes(g, fam, names)
