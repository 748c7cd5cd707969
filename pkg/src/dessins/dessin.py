"""Bicolored plane trees encoded as permutation pairs on their edges.

A tree dessin on ``n`` edges is a pair ``(s0, s1)`` of permutations of
1..n: ``s0`` rotates edges counterclockwise about black vertices and ``s1``
about white vertices.  Vertices are the cycles of these permutations (fixed
points included), named by color and smallest edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .permcore import Perm, PermGroup, cycle_decomposition, is_transitive

__all__ = [
    "DessinError",
    "TreeDessin",
    "VertexId",
    "NormalizedDessin",
    "ValidationReport",
    "CanonicalForm",
    "validate",
    "is_clean",
    "vertices",
    "is_extra_clean",
    "canonical_form",
    "canonical_form_normalized",
    "underlying",
    "refine",
    "smooth",
    "BLACK",
    "WHITE",
]

BLACK = "B"
WHITE = "W"


class DessinError(ValueError):
    """Raised when an operation receives a dessin outside its domain."""


class VertexId(NamedTuple):
    color: str
    rep: int

    def __str__(self) -> str:
        return f"{self.color}:{self.rep}"

    @classmethod
    def parse(cls, text: str) -> VertexId:
        color, sep, rep = text.strip().partition(":")
        color = color.strip().upper()
        if not sep or color not in (BLACK, WHITE):
            raise ValueError(f"bad vertex {text!r}, expected B:<edge> or W:<edge>")
        return cls(color, int(rep))


@dataclass(frozen=True)
class TreeDessin:
    s0: Perm
    s1: Perm

    def __post_init__(self):
        if self.s0.n != self.s1.n:
            raise DessinError(f"s0 acts on {self.s0.n} edges but s1 on {self.s1.n}")

    @classmethod
    def from_cycles(cls, n: int, s0: str, s1: str) -> TreeDessin:
        return cls(Perm.parse(s0, n), Perm.parse(s1, n))

    @property
    def n_edges(self) -> int:
        return self.s0.n

    def rotation(self, color: str) -> Perm:
        return self.s0 if color == BLACK else self.s1

    def vertex_of(self, color: str, edge: int) -> VertexId:
        """The vertex of the given color incident to ``edge``."""
        p = self.rotation(color)
        rep, x = edge, p(edge)
        while x != edge:
            rep = min(rep, x)
            x = p(x)
        return VertexId(color, rep)

    def cycle_of(self, v: VertexId) -> list[int]:
        p = self.rotation(v.color)
        cyc, x = [v.rep], p(v.rep)
        while x != v.rep:
            cyc.append(x)
            x = p(x)
        return cyc

    def has_vertex(self, v: VertexId) -> bool:
        if v.color not in (BLACK, WHITE) or not 1 <= v.rep <= self.n_edges:
            return False
        return min(self.cycle_of(v)) == v.rep

    def relabel(self, t: Perm) -> TreeDessin:
        """Rename edge ``e`` to ``t(e)``."""
        return TreeDessin(self.s0.conjugate(t), self.s1.conjugate(t))

    def monodromy_group(self) -> PermGroup:
        return PermGroup(self.n_edges, (self.s0, self.s1))


@dataclass(frozen=True)
class NormalizedDessin:
    """A clean tree dessin with an ordered pair of marked vertices.

    ``mark0`` is where 0 sits, ``mark1`` where 1 sits.
    """

    dessin: TreeDessin
    mark0: VertexId
    mark1: VertexId

    def __post_init__(self):
        object.__setattr__(self, "mark0", VertexId(*self.mark0))
        object.__setattr__(self, "mark1", VertexId(*self.mark1))

    @property
    def n_edges(self) -> int:
        return self.dessin.n_edges

    @property
    def marked_edges(self) -> tuple[int, int]:
        """The edges at the two marks; meaningful when both marks are ends."""
        if not is_extra_clean(self):
            raise DessinError("marked edges are only defined for extra-clean dessins")
        return self.mark0.rep, self.mark1.rep

    def relabel(self, t: Perm) -> NormalizedDessin:
        d = self.dessin.relabel(t)
        return NormalizedDessin(
            d,
            d.vertex_of(self.mark0.color, t(self.mark0.rep)),
            d.vertex_of(self.mark1.color, t(self.mark1.rep)),
        )


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "ok" if self.ok else "invalid: " + ", ".join(self.failures)


def _tree_failures(d: TreeDessin) -> list[str]:
    failures = []
    if not is_transitive(d.monodromy_group()):
        failures.append("transitive")
    if d.s0.cycle_count() + d.s1.cycle_count() != d.n_edges + 1:
        failures.append("vertex_count")
    if len(cycle_decomposition(d.s0 * d.s1)) != 1:
        failures.append("single_face")
    return failures


def validate(d: TreeDessin | NormalizedDessin) -> ValidationReport:
    """Check every structural invariant and report the ones that fail.

    For a normalized dessin the marks and cleanness are checked as well.
    """
    if isinstance(d, NormalizedDessin):
        failures = _tree_failures(d.dessin)
        if not failures and not is_clean(d.dessin):
            failures.append("clean")
        for name, m in (("mark0", d.mark0), ("mark1", d.mark1)):
            if not d.dessin.has_vertex(m):
                failures.append(f"{name}_vertex")
        if d.mark0 == d.mark1:
            failures.append("distinct_marks")
        return ValidationReport(tuple(failures))
    return ValidationReport(tuple(_tree_failures(d)))


def _require_valid(d: TreeDessin | NormalizedDessin) -> None:
    report = validate(d)
    if not report.ok:
        raise DessinError(str(report))


def is_clean(d: TreeDessin) -> bool:
    """True iff ``s1`` is a fixed-point-free involution."""
    s1 = d.s1
    return all(s1(e) != e and s1(s1(e)) == e for e in range(1, d.n_edges + 1))


def vertices(d: TreeDessin) -> list[tuple[VertexId, int]]:
    """All vertices with their valences, blacks first, each sorted by rep."""
    out = []
    for color, p in ((BLACK, d.s0), (WHITE, d.s1)):
        out.extend((VertexId(color, c[0]), len(c)) for c in cycle_decomposition(p))
    return out


def is_extra_clean(nd: NormalizedDessin) -> bool:
    """Both marks are black ends (valence-1 black vertices)."""
    d = nd.dessin
    return all(
        m.color == BLACK and d.has_vertex(m) and d.s0(m.rep) == m.rep
        for m in (nd.mark0, nd.mark1)
    )


# -- canonical forms -------------------------------------------------------------

class CanonicalForm(NamedTuple):
    dessin: TreeDessin
    relabeling: Perm          # old edge -> canonical edge
    key: tuple


def _bfs_order(s0: tuple[int, ...], s1: tuple[int, ...], start: int) -> list[int]:
    # 0-based edges; label of edge x is its position in the returned order
    n = len(s0)
    label = [-1] * n
    label[start] = 0
    order = [start]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for p in (s0, s1):
            y = p[x]
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
    return label


def _canonical_search(d: TreeDessin, extra=None):
    s0, s1 = d.s0._zero, d.s1._zero
    n = len(s0)
    best = None
    for base in range(n):
        label = _bfs_order(s0, s1, base)
        inv = [0] * n
        for x, lx in enumerate(label):
            inv[lx] = x
        key = (
            tuple(label[s0[inv[i]]] for i in range(n)),
            tuple(label[s1[inv[i]]] for i in range(n)),
        )
        if extra is not None:
            key += extra(label)
        if best is None or key < best[0]:
            best = (key, label)
    return best


def canonical_form(d: TreeDessin) -> CanonicalForm:
    """Canonical relabeling of ``d``.

    Each edge in turn serves as base; edges are numbered in order of first
    appearance in a breadth-first search applying ``s0`` then ``s1``.  The
    lexicographically smallest ``(s0, s1)`` image pair wins.  Two dessins are
    isomorphic iff their canonical dessins are equal.
    """
    _require_valid(d)
    key, label = _canonical_search(d)
    t = Perm(tuple(x + 1 for x in label))
    return CanonicalForm(d.relabel(t), t, key)


def canonical_form_normalized(nd: NormalizedDessin) -> tuple:
    """Hashable canonical triple ``(s0, s1, marks)`` deciding normalized isomorphism."""
    _require_valid(nd)
    d = nd.dessin
    cyc0, cyc1 = d.cycle_of(nd.mark0), d.cycle_of(nd.mark1)

    def marks(label):
        return (
            (nd.mark0.color, min(label[x - 1] for x in cyc0) + 1),
            (nd.mark1.color, min(label[x - 1] for x in cyc1) + 1),
        )

    key, _ = _canonical_search(d, marks)
    s0, s1, m0, m1 = key
    return (tuple(x + 1 for x in s0), tuple(x + 1 for x in s1), m0, m1)


def canonical_normalized(nd: NormalizedDessin) -> NormalizedDessin:
    """The canonical representative as a NormalizedDessin value."""
    s0, s1, m0, m1 = canonical_form_normalized(nd)
    return NormalizedDessin(TreeDessin(Perm(s0), Perm(s1)), VertexId(*m0), VertexId(*m1))


def is_isomorphic(a: TreeDessin, b: TreeDessin) -> bool:
    return a.n_edges == b.n_edges and canonical_form(a).key == canonical_form(b).key


def underlying(nd: NormalizedDessin) -> TreeDessin:
    return nd.dessin


# -- refine / smooth -------------------------------------------------------------

def refine(d: TreeDessin) -> TreeDessin:
    """Recolor white vertices black and bisect every edge with a new white vertex.

    Edge ``e`` becomes ``2e-1`` (old black side) and ``2e`` (old white side).
    The output is clean with twice as many edges.
    """
    _require_valid(d)
    n = d.n_edges
    s0 = [0] * (2 * n)
    s1 = [0] * (2 * n)
    for e in range(1, n + 1):
        s1[2 * e - 2], s1[2 * e - 1] = 2 * e, 2 * e - 1
        s0[2 * e - 2] = 2 * d.s0(e) - 1
        s0[2 * e - 1] = 2 * d.s1(e)
    return TreeDessin(Perm(tuple(s0)), Perm(tuple(s1)))


def smooth(d: TreeDessin, anchor: VertexId) -> TreeDessin:
    """Erase the white vertices of a clean dessin, merging each white's two edges.

    The merged tree is recolored by bipartition with the class of ``anchor``
    black.  New edge labels follow the smallest old edge of each pair.
    """
    _require_valid(d)
    if not is_clean(d):
        raise DessinError("smooth needs a clean dessin")
    anchor = VertexId(*anchor)
    if anchor.color != BLACK or not d.has_vertex(anchor):
        raise DessinError(f"anchor {anchor} is not a black vertex")
    n = d.n_edges
    reps = sorted(e for e in range(1, n + 1) if e < d.s1(e))
    new_label = {}
    for i, e in enumerate(reps, start=1):
        new_label[e] = new_label[d.s1(e)] = i

    black = [c for c in cycle_decomposition(d.s0)]
    owner = {}
    for idx, c in enumerate(black):
        for e in c:
            owner[e] = idx
    # two-color the merged tree starting from the anchor's class
    side = {owner[anchor.rep]: 0}
    queue = deque([owner[anchor.rep]])
    while queue:
        v = queue.popleft()
        for e in black[v]:
            w = owner[d.s1(e)]
            if w not in side:
                side[w] = 1 - side[v]
                queue.append(w)

    m = n // 2
    s0 = list(range(1, m + 1))
    s1 = list(range(1, m + 1))
    for idx, c in enumerate(black):
        target = s0 if side[idx] == 0 else s1
        labels = [new_label[e] for e in c]
        for i, x in enumerate(labels):
            target[x - 1] = labels[(i + 1) % len(labels)]
    return TreeDessin(Perm(tuple(s0)), Perm(tuple(s1)))
