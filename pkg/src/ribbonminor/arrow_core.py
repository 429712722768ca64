"""Arrow presentations of ribbon graphs.

A ribbon graph (a surface with boundary built from vertex discs and edge
discs) is encoded as an *arrow presentation*: a collection of circles, each
carrying a cyclic sequence of labelled, directed marking arrows, such that
every label occurs on exactly two arrows.  The two arrows sharing a label
form an edge; each circle is a vertex; a circle with no arrows is an
isolated vertex.

This module owns the data model and the operations that read it directly:
boundary tracing, Euler genus, the underlying abstract graph, and canonical
forms / equivalence testing.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

__all__ = [
    "ArpError",
    "ArrowPresentation",
    "BoundaryComponent",
    "EdgeLineSegment",
    "UnderlyingGraph",
    "VertexLineSegment",
    "canonical_presentation",
    "canonicalize",
    "degree",
    "euler_genus",
    "format_arp",
    "is_equivalent",
    "parse_arp",
    "trace_boundaries",
    "underlying_graph",
]

#: Sign of an arrow relative to its circle's stored traversal order:
#: +1 if the arrow points along the traversal, -1 if it opposes it.
Sign = int
Arrow = tuple[str, Sign]
Circle = tuple[Arrow, ...]

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_TOKEN_RE = re.compile(r"([A-Za-z0-9_]+)([+-])\Z")


class ArpError(ValueError):
    """Malformed arrow-presentation data or text."""


class ArrowPresentation:
    """An immutable set of circles with paired, labelled, directed arrows.

    ``circles`` is a tuple of circles; each circle is a tuple of
    ``(label, sign)`` pairs read in the circle's stored traversal order.
    Every label must occur exactly twice across all circles.  Instances are
    value objects: hashable, comparable, and safe to share.

    >>> ArrowPresentation([[("e", 1), ("e", -1)]]).to_text()
    '(e+ e-)'
    """

    __slots__ = ("circles", "_hash", "_occ")

    def __init__(self, circles: Iterable[Iterable[Arrow]] = ()):
        circs = []
        for circle in circles:
            circ = []
            for label, sign in circle:
                if not isinstance(label, str) or not _LABEL_RE.match(label):
                    raise ArpError(f"bad edge label {label!r}")
                if sign not in (1, -1):
                    raise ArpError(f"bad sign {sign!r} for label {label!r}")
                circ.append((label, sign))
            circs.append(tuple(circ))
        self.circles: tuple[Circle, ...] = tuple(circs)
        counts = Counter(lab for c in self.circles for lab, _ in c)
        for lab, n in sorted(counts.items()):
            if n != 2:
                raise ArpError(f"label {lab!r} occurs {n} times (exactly 2 required)")
        self._hash = hash(self.circles)
        self._occ = None

    # -- basic views ---------------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        """Edge labels in sorted order."""
        return tuple(sorted({lab for c in self.circles for lab, _ in c}))

    @property
    def n_vertices(self) -> int:
        return len(self.circles)

    @property
    def n_edges(self) -> int:
        return sum(len(c) for c in self.circles) // 2

    @property
    def occurrences(self) -> dict[str, tuple[tuple[int, int], tuple[int, int]]]:
        """Map label -> its two occurrence positions ``(circle, index)``, sorted."""
        if self._occ is None:
            occ = defaultdict(list)
            for ci, circle in enumerate(self.circles):
                for j, (lab, _) in enumerate(circle):
                    occ[lab].append((ci, j))
            self._occ = {lab: tuple(ps) for lab, ps in occ.items()}
        return self._occ

    def degree(self, circle: int) -> int:
        """Number of arrow occurrences on a circle (a loop contributes 2)."""
        self._check_circle(circle)
        return len(self.circles[circle])

    def n_gaps(self, circle: int) -> int:
        """Number of vertex line segments on a circle; an empty circle has one."""
        self._check_circle(circle)
        return max(len(self.circles[circle]), 1)

    def sign_of(self, circle: int, pos: int) -> Sign:
        return self.circles[circle][pos][1]

    def _check_circle(self, circle: int) -> None:
        if not isinstance(circle, int) or not 0 <= circle < len(self.circles):
            raise ArpError(f"unknown circle id {circle!r}")

    # -- text form -----------------------------------------------------

    def to_text(self) -> str:
        """One-line form, e.g. ``(a+ b-)(a+)(b+)``; empty presentation -> ``''``."""
        return "".join(
            "(" + " ".join(f"{lab}{'+' if s > 0 else '-'}" for lab, s in c) + ")"
            for c in self.circles
        )

    @classmethod
    def from_text(cls, text: str) -> "ArrowPresentation":
        return parse_arp(text)

    def to_arp(self) -> str:
        return format_arp(self)

    # -- value semantics -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ArrowPresentation) and self.circles == other.circles

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ArrowPresentation({self.to_text()!r})"


# ---------------------------------------------------------------------------
# text I/O
# ---------------------------------------------------------------------------


def _parse_tokens(tokens: list[str], lineno: int) -> Circle:
    circle = []
    for tok in tokens:
        m = _TOKEN_RE.match(tok)
        if not m:
            raise ArpError(f"line {lineno}: bad token {tok!r} (expected label+ or label-)")
        circle.append((m.group(1), 1 if m.group(2) == "+" else -1))
    return tuple(circle)


def parse_arp(text: str) -> ArrowPresentation:
    """Parse presentation text.

    Each non-empty, non-comment line is one circle of whitespace-separated
    ``label+`` / ``label-`` tokens; an empty circle is written ``()``.  Lines
    starting with ``#`` are comments.  A line may instead hold one or more
    parenthesised circles, so the one-line form produced by
    :meth:`ArrowPresentation.to_text` parses too.
    """
    circles: list[Circle] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "(" in line or ")" in line:
            rest = re.sub(r"\(([^()]*)\)", " ", line)
            if rest.strip():
                raise ArpError(f"line {lineno}: stray text outside circles: {rest.strip()!r}")
            for group in re.findall(r"\(([^()]*)\)", line):
                circles.append(_parse_tokens(group.split(), lineno))
        else:
            circles.append(_parse_tokens(line.split(), lineno))
    return ArrowPresentation(circles)


def format_arp(g: ArrowPresentation) -> str:
    """Render one circle per line; empty circles as ``()``."""
    lines = []
    for c in g.circles:
        lines.append("()" if not c else " ".join(f"{lab}{'+' if s > 0 else '-'}" for lab, s in c))
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# boundary tracing
# ---------------------------------------------------------------------------


class VertexLineSegment(NamedTuple):
    """The arc of a circle between two consecutive arrows: gap ``gap`` follows
    the arrow at position ``gap``; an empty circle has the single gap 0."""

    circle: int
    gap: int


class EdgeLineSegment(NamedTuple):
    """One of the two free sides of an edge: side 1 runs from the head of the
    first occurrence to the tail of the second, side 2 the other way round."""

    label: str
    side: int


Segment = Union[VertexLineSegment, EdgeLineSegment]

# endpoint of an arrow occurrence: (circle, position, part) with part 0=tail, 1=head
_Endpoint = tuple[int, int, int]


@dataclass(frozen=True)
class BoundaryComponent:
    """A closed boundary walk, as the cyclic sequence of segments it crosses.

    ``directions[i]`` is +1 when the walk traverses ``segments[i]`` along its
    intrinsic orientation (a gap along its circle's traversal; an edge side
    from the head of one arrow to the tail of the other), else -1.
    """

    segments: tuple[Segment, ...]
    directions: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.segments)

    def n_edge_segments(self) -> int:
        return sum(1 for s in self.segments if isinstance(s, EdgeLineSegment))

    def vertex_positions(self) -> tuple[int, ...]:
        """Positions of the vertex line segments within this walk."""
        return tuple(i for i, s in enumerate(self.segments) if isinstance(s, VertexLineSegment))

    def position_of(self, seg: Segment) -> int:
        try:
            return self.segments.index(seg)
        except ValueError:
            raise ArpError(f"segment {seg!r} not on this boundary component") from None


def _entry_endpoint(ci: int, pos: int, sign: Sign) -> _Endpoint:
    # first endpoint met when walking the circle: tail for +, head for -
    return (ci, pos, 0 if sign > 0 else 1)


def _exit_endpoint(ci: int, pos: int, sign: Sign) -> _Endpoint:
    return (ci, pos, 1 if sign > 0 else 0)


def _segment_endpoints(g: ArrowPresentation) -> dict[Segment, tuple[_Endpoint, _Endpoint] | None]:
    """Map every boundary segment to its intrinsically oriented endpoint pair.

    Isolated-vertex gaps map to ``None``: their boundary is a closed circle on
    its own.
    """
    segs: dict[Segment, tuple[_Endpoint, _Endpoint] | None] = {}
    for ci, circle in enumerate(g.circles):
        d = len(circle)
        if d == 0:
            segs[VertexLineSegment(ci, 0)] = None
            continue
        for j in range(d):
            k = (j + 1) % d
            segs[VertexLineSegment(ci, j)] = (
                _exit_endpoint(ci, j, circle[j][1]),
                _entry_endpoint(ci, k, circle[k][1]),
            )
    for lab, ((c1, p1), (c2, p2)) in sorted(g.occurrences.items()):
        segs[EdgeLineSegment(lab, 1)] = ((c1, p1, 1), (c2, p2, 0))
        segs[EdgeLineSegment(lab, 2)] = ((c2, p2, 1), (c1, p1, 0))
    return segs


def _segment_sort_key(seg: Segment):
    if isinstance(seg, VertexLineSegment):
        return (0, seg.circle, seg.gap)
    return (1, seg.label, seg.side)


@lru_cache(maxsize=None)
def trace_boundaries(g: ArrowPresentation) -> tuple[BoundaryComponent, ...]:
    """Trace the boundary components of the ribbon graph.

    Every arrow contributes a tail and a head endpoint on its circle; gaps
    join consecutive endpoints around each circle, and each edge contributes
    the two jump segments head-to-tail between its occurrences.  The result
    is 2-regular and its cycles are the boundary components, each a strictly
    alternating walk of vertex and edge line segments.

    >>> [b.n_edge_segments() for b in trace_boundaries(parse_arp("(e+ e+)"))]
    [1, 1]
    >>> [b.n_edge_segments() for b in trace_boundaries(parse_arp("(e+ e-)"))]
    [2]
    """
    segs = _segment_endpoints(g)
    at: dict[_Endpoint, list[Segment]] = defaultdict(list)
    for seg, eps in segs.items():
        if eps is not None:
            at[eps[0]].append(seg)
            at[eps[1]].append(seg)
    components: list[BoundaryComponent] = []
    seen: set[Segment] = set()
    for seg0 in sorted(segs, key=_segment_sort_key):
        if seg0 in seen:
            continue
        if segs[seg0] is None:
            seen.add(seg0)
            components.append(BoundaryComponent((seg0,), (1,)))
            continue
        walk = [seg0]
        dirs = [1]
        seen.add(seg0)
        cur, direction = seg0, 1
        while True:
            a, b = segs[cur]  # type: ignore[misc]
            ep = b if direction == 1 else a
            s1, s2 = at[ep]
            nxt = s2 if s1 == cur else s1
            if nxt == seg0:
                break
            ndir = 1 if segs[nxt][0] == ep else -1  # type: ignore[index]
            walk.append(nxt)
            dirs.append(ndir)
            seen.add(nxt)
            cur, direction = nxt, ndir
        components.append(BoundaryComponent(tuple(walk), tuple(dirs)))
    return tuple(components)


# ---------------------------------------------------------------------------
# underlying abstract graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnderlyingGraph:
    """The abstract multigraph under a presentation: circles become vertices,
    label pairs become edges (loops and multi-edges allowed)."""

    n_vertices: int
    edges: tuple[tuple[str, int, int], ...]  # (label, u, v) with u <= v

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for _, u, w in self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        out = set()
        for _, u, w in self.edges:
            if u == v:
                out.add(w)
            if w == v:
                out.add(u)
        return frozenset(out)

    def components(self) -> tuple[frozenset[int], ...]:
        """Connected components as vertex sets, sorted by smallest member."""
        parent = list(range(self.n_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for _, u, w in self.edges:
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[ru] = rw
        groups: dict[int, set[int]] = defaultdict(set)
        for v in range(self.n_vertices):
            groups[find(v)].add(v)
        return tuple(sorted((frozenset(s) for s in groups.values()), key=min))

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def has_odd_cycle(self) -> bool:
        """Odd-cycle test by 2-colouring; any loop counts as an odd cycle."""
        if any(u == w for _, u, w in self.edges):
            return True
        adj: dict[int, list[int]] = defaultdict(list)
        for _, u, w in self.edges:
            adj[u].append(w)
            adj[w].append(u)
        colour: dict[int, int] = {}
        for start in range(self.n_vertices):
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
                        return True
        return False

    def canonical_key(self) -> tuple:
        """Isomorphism-class key: minimal relabelled edge multiset.

        Brute-force over vertex permutations; intended for the small graphs
        this library works with.
        """
        from itertools import permutations

        if self.n_vertices > 8:
            raise ValueError("canonical_key supports at most 8 vertices")
        pairs = [(u, w) for _, u, w in self.edges]
        best = None
        for perm in permutations(range(self.n_vertices)):
            cand = tuple(sorted((min(perm[u], perm[w]), max(perm[u], perm[w])) for u, w in pairs))
            if best is None or cand < best:
                best = cand
        return (self.n_vertices, best if best is not None else ())

    def is_isomorphic(self, other: "UnderlyingGraph") -> bool:
        return self.canonical_key() == other.canonical_key()


@lru_cache(maxsize=None)
def underlying_graph(g: ArrowPresentation) -> UnderlyingGraph:
    edges = []
    for lab, ((c1, _), (c2, _)) in sorted(g.occurrences.items()):
        edges.append((lab, min(c1, c2), max(c1, c2)))
    return UnderlyingGraph(g.n_vertices, tuple(edges))


def degree(g: ArrowPresentation, circle: int) -> int:
    """Occurrence count of a circle (loops contribute twice)."""
    return g.degree(circle)


# ---------------------------------------------------------------------------
# Euler genus
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def euler_genus(g: ArrowPresentation) -> int:
    """Euler genus 2c - |V| + |E| - |F|, with c counting isolated circles too.

    >>> euler_genus(parse_arp("(e+ e-)"))
    1
    """
    f = len(trace_boundaries(g))
    c = len(underlying_graph(g).components())
    return 2 * c - g.n_vertices + g.n_edges - f


# ---------------------------------------------------------------------------
# canonical form and equivalence
# ---------------------------------------------------------------------------
#
# Two presentations describe the same ribbon graph exactly when one maps to
# the other by a combination of: permuting circles, rotating a circle,
# reversing a circle (which flips every sign on it), relabelling edges, and
# flipping both arrows of an edge (re-orienting the edge disc; it flips both
# of that label's signs).  The canonical form is the minimum encoding over
# all those choices.


def _circle_variants(circle: Circle) -> tuple[Circle, ...]:
    if not circle:
        return ((),)
    variants = set()
    reversed_flipped = tuple((lab, -s) for lab, s in reversed(circle))
    for base in (circle, reversed_flipped):
        for r in range(len(base)):
            variants.add(base[r:] + base[:r])
    return tuple(sorted(variants))


def _encode_circle(variant: Circle, mapping: dict[str, int]) -> tuple[tuple, dict[str, int]]:
    m = dict(mapping)
    nxt = len(m)
    enc = []
    for lab, s in variant:
        i = m.get(lab)
        if i is None:
            m[lab] = i = nxt
            nxt += 1
        enc.append((i, 0 if s > 0 else 1))
    return tuple(enc), m


def _base_canonical(circles: tuple[Circle, ...]) -> tuple:
    """Minimal encoding over circle order, rotations, reversals, relabelling."""
    variants = [_circle_variants(c) for c in circles]

    def rec(remaining: frozenset[int], mapping: dict[str, int]) -> tuple:
        if not remaining:
            return ()
        cands = []
        for ci in remaining:
            for var in variants[ci]:
                enc, m = _encode_circle(var, mapping)
                cands.append((enc, ci, m))
        best_enc = min(c[0] for c in cands)
        results = []
        seen_branch = set()
        for enc, ci, m in cands:
            if enc != best_enc:
                continue
            sig = (tuple(sorted(m.items())), tuple(sorted(circles[i] for i in remaining if i != ci)))
            if sig in seen_branch:
                continue
            seen_branch.add(sig)
            results.append((best_enc,) + rec(remaining - {ci}, m))
        return min(results)

    return rec(frozenset(range(len(circles))), {})


def _canonical_label(i: int) -> str:
    out = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        out = chr(97 + r) + out
    return out


def _render_canonical(encoded: tuple) -> str:
    return "".join(
        "(" + " ".join(f"{_canonical_label(i)}{'+' if bit == 0 else '-'}" for i, bit in circ) + ")"
        for circ in encoded
    )


_canon_cache: dict[ArrowPresentation, str] = {}


def canonicalize(g: ArrowPresentation) -> str:
    """Canonical textual form; equal exactly for equivalent presentations.

    Idempotent: the canonical form re-parses to a presentation with the same
    canonical form.

    >>> canonicalize(parse_arp("(e+ e-)")) == canonicalize(parse_arp("(f- f+)"))
    True
    """
    cached = _canon_cache.get(g)
    if cached is not None:
        return cached
    labels = g.labels
    best = None
    for mask in range(1 << len(labels)):
        flip = {labels[i] for i in range(len(labels)) if mask >> i & 1}
        circles = tuple(
            tuple((lab, -s if lab in flip else s) for lab, s in c) for c in g.circles
        )
        cand = _base_canonical(circles)
        if best is None or cand < best:
            best = cand
    text = _render_canonical(best if best is not None else ())
    _canon_cache[g] = text
    return text


def canonical_presentation(g: ArrowPresentation) -> ArrowPresentation:
    """The canonical representative of g's equivalence class."""
    return parse_arp(canonicalize(g))


def is_equivalent(g: ArrowPresentation, h: ArrowPresentation) -> bool:
    """Whether g and h present the same ribbon graph."""
    return canonicalize(g) == canonicalize(h)
