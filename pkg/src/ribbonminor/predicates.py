"""Decision procedures for the ribbon-graph classes.

All of these are pure functions of a presentation: Eulerian (all vertex
degrees even), even-face (every boundary component carries an even number of
edge line segments), checkerboard colourable (boundary components can be
2-coloured so the two edge line segments of every edge get different
colours), bipartite (no odd cycle in the underlying graph), and plane (Euler
genus zero).
"""

from __future__ import annotations

from .arrow_core import (
    ArpError,
    ArrowPresentation,
    EdgeLineSegment,
    euler_genus,
    trace_boundaries,
    underlying_graph,
)

__all__ = [
    "checkerboard_colouring",
    "is_bipartite",
    "is_checkerboard_colourable",
    "is_eulerian",
    "is_even_face",
    "is_plane",
    "is_trivial_loop",
]


def is_eulerian(g: ArrowPresentation) -> bool:
    """Every circle carries an even number of arrows."""
    return all(len(c) % 2 == 0 for c in g.circles)


def is_even_face(g: ArrowPresentation) -> bool:
    """Every boundary component has an even number of edge line segments."""
    return all(b.n_edge_segments() % 2 == 0 for b in trace_boundaries(g))


def checkerboard_colouring(g: ArrowPresentation) -> dict[int, int] | None:
    """A 2-colouring of boundary components separating the two edge line
    segments of every edge, or None when no such colouring exists.

    Each edge constrains the components holding its two sides to differ, so
    this is 2-colourability of the constraint multigraph on components; an
    edge with both sides on one component rules a colouring out immediately.
    """
    boundaries = trace_boundaries(g)
    where: dict[tuple[str, int], int] = {}
    for bi, b in enumerate(boundaries):
        for seg in b.segments:
            if isinstance(seg, EdgeLineSegment):
                where[(seg.label, seg.side)] = bi
    adj: dict[int, list[int]] = {bi: [] for bi in range(len(boundaries))}
    for lab in g.labels:
        b1, b2 = where[(lab, 1)], where[(lab, 2)]
        if b1 == b2:
            return None
        adj[b1].append(b2)
        adj[b2].append(b1)
    colour: dict[int, int] = {}
    for start in range(len(boundaries)):
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = colour[v] ^ 1
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return None
    return colour


def is_checkerboard_colourable(g: ArrowPresentation) -> bool:
    """
    >>> is_checkerboard_colourable(ArrowPresentation.from_text("(e+ e+)"))
    True
    >>> is_checkerboard_colourable(ArrowPresentation.from_text("(e+)(e+)"))
    False
    """
    return checkerboard_colouring(g) is not None


def is_bipartite(g: ArrowPresentation) -> bool:
    """No odd cycle in the underlying abstract graph; any loop disqualifies."""
    return not underlying_graph(g).has_odd_cycle()


def is_plane(g: ArrowPresentation) -> bool:
    return euler_genus(g) == 0


def is_trivial_loop(g: ArrowPresentation, e: str) -> bool:
    """For a bouquet, whether no other loop's occurrences interleave with e's.

    Only single-circle presentations are supported; every edge of a bouquet
    is a loop.
    """
    if g.n_vertices != 1:
        raise ArpError("is_trivial_loop requires a bouquet (exactly one circle)")
    if e not in g.occurrences:
        raise ArpError(f"label {e!r} not present")
    circle = g.circles[0]
    p1, p2 = (pos for _, pos in g.occurrences[e])
    for lab in g.labels:
        if lab == e:
            continue
        (_, q1), (_, q2) = g.occurrences[lab]
        if (p1 < q1 < p2) != (p1 < q2 < p2):
            return False
    return True
