"""Composition, iteration and monodromy towers of normalized dessins.

Edges of the n-th iterate of an extra-clean dessin are tuples
``(e_1, ..., e_n)`` of base edges, finest coordinate first.  The tuple is
stored as the label ``1 + sum((e_i - 1) * d**(i - 1))``, so the last
(coarsest) coordinate carries the highest weight.

Two constructions of the iterate are provided and are meant to be checked
against each other: :func:`iterate_recursion` builds the rotations directly
from the tuple formulas, :func:`iterate_substitution` glues copies of the
base dessin into every edge of the previous iterate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .dessin import (
    BLACK,
    DessinError,
    NormalizedDessin,
    TreeDessin,
    VertexId,
    is_extra_clean,
    validate,
    vertices,
)
from .permcore import Perm, PermGroup, cycle_decomposition, group_order

__all__ = [
    "IterateEdge",
    "FiberClass",
    "Fingerprint",
    "fiber_class",
    "compose",
    "iterate",
    "iterate_recursion",
    "iterate_substitution",
    "monodromy",
    "fingerprint",
]

MIN_DEGREE = 3


class IterateEdge(NamedTuple):
    """An edge of an iterate, as a tuple of base edges (finest first) and its label."""

    coords: tuple[int, ...]
    index: int

    @classmethod
    def from_coords(cls, coords: Sequence[int], d: int) -> IterateEdge:
        index = 1 + sum((e - 1) * d**i for i, e in enumerate(coords))
        return cls(tuple(coords), index)

    @classmethod
    def from_index(cls, index: int, d: int, n: int) -> IterateEdge:
        if not 1 <= index <= d**n:
            raise ValueError(f"index {index} outside 1..{d ** n}")
        rest, coords = index - 1, []
        for _ in range(n):
            rest, r = divmod(rest, d)
            coords.append(r + 1)
        return cls(tuple(coords), index)

    def apply_map(self, d: int) -> IterateEdge:
        """Image under the dynamics: drop the finest coordinate."""
        return IterateEdge.from_coords(self.coords[1:], d)

    def restrict(self, d: int) -> IterateEdge:
        """Image under inclusion into the previous level: drop the coarsest."""
        return IterateEdge.from_coords(self.coords[:-1], d)


class FiberClass(NamedTuple):
    g0: int          # image of 0: 0 if mark0 is black, else 1
    g1: int          # image of 1
    localdeg0: int
    localdeg1: int


@dataclass(frozen=True)
class Fingerprint:
    degree: int
    black_valencies: tuple[int, ...]
    white_valencies: tuple[int, ...]
    mon_orders: tuple[int, ...]


def _check_degree(nd: NormalizedDessin) -> None:
    if nd.n_edges < MIN_DEGREE:
        raise DessinError(f"degree {nd.n_edges} < {MIN_DEGREE}")


def _require_extra_clean(nd: NormalizedDessin) -> None:
    report = validate(nd)
    if not report.ok:
        raise DessinError(str(report))
    _check_degree(nd)
    if not is_extra_clean(nd):
        raise DessinError("dessin is not extra-clean (marks must be black ends)")


def fiber_class(nd: NormalizedDessin) -> FiberClass:
    report = validate(nd)
    if not report.ok:
        raise DessinError(str(report))
    _check_degree(nd)
    d = nd.dessin
    deg0 = len(d.cycle_of(nd.mark0))
    deg1 = len(d.cycle_of(nd.mark1))
    return FiberClass(
        0 if nd.mark0.color == BLACK else 1,
        0 if nd.mark1.color == BLACK else 1,
        deg0,
        deg1,
    )


def _from_arrays(s0: list[int], s1: list[int], m0: int, m1: int) -> NormalizedDessin:
    # 0-based arrays; marks are 0-based edges fixed by s0
    d = TreeDessin(Perm._from0(s0), Perm._from0(s1))
    return NormalizedDessin(d, VertexId(BLACK, m0 + 1), VertexId(BLACK, m1 + 1))


def compose(outer: NormalizedDessin, inner: NormalizedDessin) -> NormalizedDessin:
    """Normalized dessin of ``outer o inner`` for extra-clean factors.

    Edge ``(e_inner, e_outer)`` gets label ``e_inner + (e_outer - 1) * d_inner``.
    """
    _require_extra_clean(outer)
    _require_extra_clean(inner)
    f0, f1 = outer.dessin.s0._zero, outer.dessin.s1._zero
    g0, g1 = inner.dessin.s0._zero, inner.dessin.s1._zero
    eps0, eps1 = outer.mark0.rep - 1, outer.mark1.rep - 1
    dg, df = len(g0), len(f0)
    s0 = [0] * (dg * df)
    s1 = [0] * (dg * df)
    for ef in range(df):
        for eg in range(dg):
            x = eg + ef * dg
            s1[x] = eg + f1[ef] * dg
            if ef == eps1:
                s0[x] = g1[eg] + ef * dg
            elif ef == eps0:
                s0[x] = g0[eg] + ef * dg
            else:
                s0[x] = eg + f0[ef] * dg
    m0 = (inner.mark0.rep - 1) + eps0 * dg
    m1 = (inner.mark1.rep - 1) + eps0 * dg
    return _from_arrays(s0, s1, m0, m1)


def iterate_recursion(nd: NormalizedDessin, n: int) -> NormalizedDessin:
    """n-th iterate from the recursive formulas for the rotations.

    ``s1`` acts on the last coordinate.  ``s0`` acts on the last coordinate
    unless it is a marked edge; there it fixes the last coordinate and acts
    on the prefix by the previous level's ``s1`` (mark1 edge) or ``s0``
    (mark0 edge).
    """
    if n < 1:
        raise ValueError(f"iteration count must be >= 1, got {n}")
    _require_extra_clean(nd)
    if n == 1:
        return nd
    b0, b1 = nd.dessin.s0._zero, nd.dessin.s1._zero
    eps0, eps1 = nd.mark0.rep - 1, nd.mark1.rep - 1
    d = len(b0)
    s0, s1 = list(b0), list(b1)
    for level in range(2, n + 1):
        size = d ** (level - 1)
        new0 = [0] * (size * d)
        new1 = [0] * (size * d)
        for last in range(d):
            off = last * size
            off1 = b1[last] * size
            if last == eps1:
                for pre in range(size):
                    new0[off + pre] = off + s1[pre]
            elif last == eps0:
                for pre in range(size):
                    new0[off + pre] = off + s0[pre]
            else:
                off0 = b0[last] * size
                for pre in range(size):
                    new0[off + pre] = off0 + pre
            for pre in range(size):
                new1[off + pre] = off1 + pre
        s0, s1 = new0, new1
    # all-eps0 tuple and (eps1, eps0, ..., eps0)
    tail = sum(eps0 * d**i for i in range(1, n))
    return _from_arrays(s0, s1, eps0 + tail, eps1 + tail)


def iterate_substitution(nd: NormalizedDessin, n: int) -> NormalizedDessin:
    """n-th iterate by gluing a copy of the base into every edge, ``n - 1`` times.

    Each copy's mark0 end is glued to the black endpoint of the edge it
    replaces and its mark1 end to the white endpoint, taking that edge's slot
    in the rotation there.  Both glue points end up black.
    """
    if n < 1:
        raise ValueError(f"iteration count must be >= 1, got {n}")
    _require_extra_clean(nd)
    base = nd.dessin
    d = base.n_edges
    eps0, eps1 = nd.mark0.rep, nd.mark1.rep
    base_black = [c for c in cycle_decomposition(base.s0) if c[0] not in (eps0, eps1)]
    base_white = cycle_decomposition(base.s1)

    cur = base
    marks = (eps0, eps1)   # edges at the current marks (both black ends)
    for _ in range(n - 1):
        m = cur.n_edges

        def lab(c, eps):
            # copy edge c inside the copy replacing edge eps
            return (c - 1) + (eps - 1) * d

        black_cycles: list[list[int]] = []
        white_cycles: list[list[int]] = []
        for eps in range(1, m + 1):
            black_cycles.extend([lab(c, eps) for c in cyc] for cyc in base_black)
            white_cycles.extend([lab(c, eps) for c in cyc] for cyc in base_white)
        for cyc in cycle_decomposition(cur.s0):
            black_cycles.append([lab(eps0, e) for e in cyc])
        for cyc in cycle_decomposition(cur.s1):
            black_cycles.append([lab(eps1, e) for e in cyc])

        size = m * d
        s0, s1 = list(range(size)), list(range(size))
        for target, cycles in ((s0, black_cycles), (s1, white_cycles)):
            for cyc in cycles:
                for i, x in enumerate(cyc):
                    target[x] = cyc[(i + 1) % len(cyc)]
        cur = TreeDessin(Perm._from0(s0), Perm._from0(s1))
        marks = (lab(eps0, marks[0]) + 1, lab(eps0, marks[1]) + 1)
    return NormalizedDessin(cur, VertexId(BLACK, marks[0]), VertexId(BLACK, marks[1]))


def iterate(nd: NormalizedDessin, n: int, method: str = "recursion") -> NormalizedDessin:
    if method == "recursion":
        return iterate_recursion(nd, n)
    if method == "substitution":
        return iterate_substitution(nd, n)
    raise ValueError(f"unknown iteration method {method!r}")


def monodromy(d: TreeDessin | NormalizedDessin) -> PermGroup:
    """The group generated by the two rotations, acting on edges."""
    if isinstance(d, NormalizedDessin):
        d = d.dessin
    report = validate(d)
    if not report.ok:
        raise DessinError(str(report))
    return d.monodromy_group()


def fingerprint(nd: NormalizedDessin, depth: int = 1) -> Fingerprint:
    """Degree, valencies and the tower of monodromy orders up to ``depth``."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    report = validate(nd)
    if not report.ok:
        raise DessinError(str(report))
    if depth >= 2:
        _require_extra_clean(nd)
    vs = vertices(nd.dessin)
    orders = [group_order(monodromy(nd))]
    for k in range(2, depth + 1):
        orders.append(group_order(monodromy(iterate_recursion(nd, k))))
    return Fingerprint(
        nd.n_edges,
        tuple(sorted(v for vid, v in vs if vid.color == BLACK)),
        tuple(sorted(v for vid, v in vs if vid.color != BLACK)),
        tuple(orders),
    )
