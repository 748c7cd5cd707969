"""Hubbard trees: plane trees with vertex dynamics and local degrees.

Vertices are numbered 1..n.  ``rotation[v - 1]`` lists the neighbors of ``v``
in counterclockwise order, ``tau[v - 1]`` is the image vertex and
``delta[v - 1]`` the local degree.  An edge ``{u, v}`` maps onto the tree
path from ``tau(u)`` to ``tau(v)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .dessin import (
    BLACK,
    WHITE,
    DessinError,
    NormalizedDessin,
    TreeDessin,
    VertexId,
    is_clean,
    validate,
    vertices,
)
from .permcore import Perm

__all__ = [
    "HubbardError",
    "HubbardTree",
    "HubbardReport",
    "BelyiType",
    "degree",
    "classify_vertices",
    "validate_hubbard",
    "is_belyi_type",
    "dessin_to_hubbard",
    "hubbard_to_dessin",
    "canonical_form_hubbard",
    "FATOU",
    "JULIA",
]

FATOU = "Fatou"
JULIA = "Julia"


class HubbardError(ValueError):
    pass


@dataclass(frozen=True)
class HubbardTree:
    rotation: tuple[tuple[int, ...], ...]
    tau: tuple[int, ...]
    delta: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        object.__setattr__(self, "tau", tuple(self.tau))
        object.__setattr__(self, "delta", tuple(self.delta))
        check_structure(self)

    @property
    def v_count(self) -> int:
        return len(self.rotation)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(
            (u, v) for u, nbrs in enumerate(self.rotation, start=1) for v in nbrs if u < v
        ))

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    @cached_property
    def _parents(self) -> dict[int, list[int]]:
        # parents[r][v - 1] = neighbor of v on the path towards r
        out = {}
        for r in range(1, self.v_count + 1):
            parent = [0] * self.v_count
            parent[r - 1] = r
            queue = deque([r])
            while queue:
                u = queue.popleft()
                for w in self.rotation[u - 1]:
                    if not parent[w - 1]:
                        parent[w - 1] = u
                        queue.append(w)
            out[r] = parent
        return out

    def path(self, a: int, b: int) -> list[int]:
        """Vertices on the tree path from ``a`` to ``b``, both included."""
        parent = self._parents[b]
        out = [a]
        while out[-1] != b:
            out.append(parent[out[-1] - 1])
        return out

    def edge_image(self, u: int, v: int) -> list[int]:
        return self.path(self.tau[u - 1], self.tau[v - 1])

    @property
    def critical(self) -> frozenset[int]:
        return frozenset(v for v, dv in enumerate(self.delta, start=1) if dv >= 2)

    @property
    def postcritical(self) -> frozenset[int]:
        out: set[int] = set()
        frontier = {self.tau[c - 1] for c in self.critical}
        while frontier - out:
            out |= frontier
            frontier = {self.tau[v - 1] for v in frontier}
        return frozenset(out)


def check_structure(t: HubbardTree) -> None:
    n = t.v_count
    if n < 1:
        raise HubbardError("empty tree")
    if len(t.tau) != n or len(t.delta) != n:
        raise HubbardError("tau and delta need one entry per vertex")
    for v, nbrs in enumerate(t.rotation, start=1):
        if len(set(nbrs)) != len(nbrs):
            raise HubbardError(f"repeated neighbor at vertex {v}")
        for w in nbrs:
            if not 1 <= w <= n or w == v:
                raise HubbardError(f"bad neighbor {w} at vertex {v}")
            if v not in t.rotation[w - 1]:
                raise HubbardError(f"edge {v}-{w} missing at {w}")
    if any(not 1 <= x <= n for x in t.tau):
        raise HubbardError("tau maps outside the vertex set")
    if any(x < 1 for x in t.delta):
        raise HubbardError("local degrees must be positive")
    if sum(len(r) for r in t.rotation) != 2 * (n - 1):
        raise HubbardError("edge count is not v_count - 1")
    seen = {1}
    queue = [1]
    while queue:
        u = queue.pop()
        for w in t.rotation[u - 1]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != n:
        raise HubbardError("tree is not connected")


def degree(t: HubbardTree) -> int:
    return 1 + sum(dv - 1 for dv in t.delta)


def classify_vertices(t: HubbardTree) -> dict[int, str]:
    """Fatou iff the orbit lands on a periodic cycle through a critical vertex."""
    crit = t.critical
    out = {}
    for v in range(1, t.v_count + 1):
        seen: list[int] = []
        x = v
        while x not in seen:
            seen.append(x)
            x = t.tau[x - 1]
        cycle = seen[seen.index(x):]
        out[v] = FATOU if crit.intersection(cycle) else JULIA
    return out


@dataclass(frozen=True)
class HubbardReport:
    results: tuple[tuple[str, str], ...]   # (check, "pass" | "fail: ..." | "not checked")

    @property
    def ok(self) -> bool:
        return all(not r.startswith("fail") for _, r in self.results)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(name for name, r in self.results if r.startswith("fail"))

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "\n".join(f"{name}: {r}" for name, r in self.results)


def _winding_failures(t: HubbardTree) -> list[int]:
    bad = []
    for v in range(1, t.v_count + 1):
        nbrs = t.rotation[v - 1]
        if not nbrs:
            continue
        tv = t.tau[v - 1]
        target_rot = t.rotation[tv - 1]
        mp = len(target_rot)
        if mp == 0:
            bad.append(v)
            continue
        pos = []
        for w in nbrs:
            p = t.path(tv, t.tau[w - 1])
            if len(p) < 2:
                break
            pos.append(target_rot.index(p[1]))
        if len(pos) != len(nbrs):
            bad.append(v)
            continue
        m = len(pos)
        total = sum(((pos[(i + 1) % m] - pos[i] - 1) % mp) + 1 for i in range(m))
        if total != t.delta[v - 1] * mp:
            bad.append(v)
    return bad


def _image_counts(t: HubbardTree):
    """Vertex and edge preimage counts over the image of the tree."""
    d = degree(t)
    vertex_count = {}
    edge_count = {}
    for v in range(1, t.v_count + 1):
        x = t.tau[v - 1]
        vertex_count[x] = vertex_count.get(x, 0) + t.delta[v - 1]
    for u, v in t.edges:
        p = t.edge_image(u, v)
        for x in p[1:-1]:
            vertex_count[x] = vertex_count.get(x, 0) + 1
        for a, b in zip(p, p[1:]):
            key = (min(a, b), max(a, b))
            edge_count[key] = edge_count.get(key, 0) + 1
    return d, vertex_count, edge_count


def _homogeneity_failures(t: HubbardTree) -> list[str]:
    d, vertex_count, edge_count = _image_counts(t)
    bad = []
    missing = t.postcritical - set(vertex_count)
    if missing:
        bad.append(f"postcritical vertices without preimages {sorted(missing)}")
    bad.extend(f"vertex {x} covered {c} times" for x, c in sorted(vertex_count.items()) if c != d)
    bad.extend(f"edge {e} covered {c} times" for e, c in sorted(edge_count.items()) if c != d)
    return bad


def _expansion_failures(t: HubbardTree) -> list[tuple[int, int]]:
    kinds = classify_vertices(t)
    bound = t.v_count ** 2
    bad = []
    for u, v in t.edges:
        if kinds[u] != JULIA or kinds[v] != JULIA:
            continue
        a, b = u, v
        seen = set()
        ok = False
        for _ in range(bound + 1):
            a, b = t.tau[a - 1], t.tau[b - 1]
            if not t.adjacent(a, b):
                ok = True
                break
            if (a, b) in seen:
                break
            seen.add((a, b))
        if not ok:
            bad.append((u, v))
    return bad


def validate_hubbard(t: HubbardTree) -> HubbardReport:
    """Run every axiom check and report each by name.

    Minimality is only decided for Belyi-type trees, where it reduces to:
    every vertex of valence at most two maps into the postcritical set.
    """
    check_structure(t)
    results = []

    bad_edges = [(u, v) for u, v in t.edges if t.tau[u - 1] == t.tau[v - 1]]
    results.append(("edge_injective", f"fail: edges {bad_edges}" if bad_edges else "pass"))

    bad = _winding_failures(t)
    results.append(("extendable", f"fail: vertices {bad}" if bad else "pass"))

    d = degree(t)
    results.append(("nontrivial", "pass" if d >= 2 else f"fail: degree {d}"))

    if bad_edges:
        results.append(("homogeneous", "fail: edge images undefined"))
        results.append(("expanding", "fail: edge images undefined"))
    else:
        bad_h = _homogeneity_failures(t)
        results.append(("homogeneous", "fail: " + "; ".join(bad_h) if bad_h else "pass"))
        bad_x = _expansion_failures(t)
        results.append(("expanding", f"fail: pairs {bad_x}" if bad_x else "pass"))

    if is_belyi_type(t).ok:
        post = t.postcritical
        lazy = [v for v in range(1, t.v_count + 1)
                if len(t.rotation[v - 1]) <= 2 and t.tau[v - 1] not in post]
        results.append(("minimal", f"fail: vertices {lazy}" if lazy else "pass"))
    else:
        results.append(("minimal", "not checked"))
    return HubbardReport(tuple(results))


class BelyiType(NamedTuple):
    ok: bool
    clean_value: int | None


def is_belyi_type(t: HubbardTree) -> BelyiType:
    """Two-point postcritical set, degree >= 3 and a clean value.

    The clean value is a postcritical vertex all of whose preimages are
    vertices of local degree exactly two.
    """
    check_structure(t)
    post = t.postcritical
    if len(post) != 2 or degree(t) < 3:
        return BelyiType(False, None)
    if any(t.tau[u - 1] == t.tau[v - 1] for u, v in t.edges):
        return BelyiType(False, None)
    interior = set()
    for u, v in t.edges:
        interior.update(t.edge_image(u, v)[1:-1])
    for v in sorted(post):
        pre = [y for y in range(1, t.v_count + 1) if t.tau[y - 1] == v]
        if pre and v not in interior and all(t.delta[y - 1] == 2 for y in pre):
            return BelyiType(True, v)
    return BelyiType(False, None)


def _vertex_numbering(d: TreeDessin) -> dict[VertexId, int]:
    return {vid: i for i, (vid, _) in enumerate(vertices(d), start=1)}


def dessin_to_hubbard(nd: NormalizedDessin) -> HubbardTree:
    """The Hubbard tree of the dynamical map a normalized dessin describes.

    The tree is the dessin itself; blacks map to the mark0 vertex, whites to
    the mark1 vertex, and local degrees are valences.  Vertices are numbered
    in the order of :func:`dessins.dessin.vertices`.
    """
    report = validate(nd)
    if not report.ok:
        raise DessinError(str(report))
    if nd.n_edges < 3:
        raise DessinError(f"degree {nd.n_edges} < 3")
    d = nd.dessin
    number = _vertex_numbering(d)
    z, w = number[nd.mark0], number[nd.mark1]
    rotation, tau, delta = [], [], []
    for vid, val in vertices(d):
        other = WHITE if vid.color == BLACK else BLACK
        rotation.append(tuple(number[d.vertex_of(other, e)] for e in d.cycle_of(vid)))
        tau.append(z if vid.color == BLACK else w)
        delta.append(val)
    return HubbardTree(tuple(rotation), tuple(tau), tuple(delta))


def hubbard_to_dessin(t: HubbardTree) -> NormalizedDessin:
    """Inverse of :func:`dessin_to_hubbard` on Belyi-type trees.

    Vertices over the non-clean postcritical point are black, those over the
    clean value white.  Edges are numbered by sorted endpoint pairs.
    """
    ok, p1 = is_belyi_type(t)
    if not ok:
        if len(t.postcritical) == 1:
            raise HubbardError("postcritical set has a single point; no normalized dessin")
        raise HubbardError("tree is not of Belyi type")
    (p0,) = t.postcritical - {p1}
    color = {}
    for v in range(1, t.v_count + 1):
        image = t.tau[v - 1]
        if image == p0:
            color[v] = BLACK
        elif image == p1:
            color[v] = WHITE
        else:
            raise HubbardError(f"vertex {v} maps to {image}, outside the postcritical pair")
    for u, v in t.edges:
        if color[u] == color[v]:
            raise HubbardError(f"edge {u}-{v} joins two vertices of one color; not Belyi-type shape")
    label = {e: i for i, e in enumerate(t.edges, start=1)}
    n = len(label)
    s = {BLACK: list(range(1, n + 1)), WHITE: list(range(1, n + 1))}
    for v in range(1, t.v_count + 1):
        es = [label[(min(v, w), max(v, w))] for w in t.rotation[v - 1]]
        for i, e in enumerate(es):
            s[color[v]][e - 1] = es[(i + 1) % len(es)]
    d = TreeDessin(Perm(tuple(s[BLACK])), Perm(tuple(s[WHITE])))
    if not validate(d).ok or not is_clean(d):
        raise HubbardError("recovered dessin is not a clean tree")

    def vid(x):
        e = label[(min(x, t.rotation[x - 1][0]), max(x, t.rotation[x - 1][0]))]
        return d.vertex_of(color[x], e)

    return NormalizedDessin(d, vid(p0), vid(p1))


def _encode(t: HubbardTree, root: int, first: int) -> tuple:
    n = t.v_count
    label = {root: 0}
    order = [root]
    start_of = {root: first}
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        rot = t.rotation[v - 1]
        if not rot:
            continue
        k = start_of[v]
        for i in range(len(rot)):
            w = rot[(k + i) % len(rot)]
            if w not in label:
                label[w] = len(order)
                order.append(w)
                # children of w are listed starting just after its parent v
                start_of[w] = (t.rotation[w - 1].index(v) + 1) % len(t.rotation[w - 1])
    rows = []
    for v in order:
        rot = t.rotation[v - 1]
        k = start_of[v]
        rows.append((
            t.delta[v - 1],
            label[t.tau[v - 1]],
            tuple(label[rot[(k + i) % len(rot)]] for i in range(len(rot))),
        ))
    return (n, tuple(rows))


def canonical_form_hubbard(t: HubbardTree) -> str:
    """Text encoding that is equal for two trees iff they are isomorphic.

    Minimizes over every root vertex and every starting neighbor at the root.
    """
    check_structure(t)
    best = None
    for r in range(1, t.v_count + 1):
        for k in range(max(1, len(t.rotation[r - 1]))):
            enc = _encode(t, r, k)
            if best is None or enc < best:
                best = enc
    n, rows = best
    parts = [f"{delta}>{tau}[{' '.join(map(str, nb))}]" for delta, tau, nb in rows]
    return f"hubbard/{n}:" + ";".join(parts)
