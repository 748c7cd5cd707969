"""Permutations on {1..n} and permutation groups with exact order computation.

Composition convention: ``a * b`` (and :func:`perm_compose`) applies ``b``
first, so ``(a * b)(x) == a(b(x))``.  Everything downstream relies on this.

Group orders come from a deterministic Schreier-Sims construction of a base
and strong generating set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Perm",
    "PermGroup",
    "perm_compose",
    "cycle_decomposition",
    "is_transitive",
    "group_order",
    "orbits",
    "parse_cycles",
    "format_cycles",
]


@dataclass(frozen=True)
class Perm:
    """A permutation of the points 1..n.

    ``images[i - 1]`` is the image of point ``i``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Perm:
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if not 1 <= x <= n:
                    raise ValueError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"point {x} appears twice")
                seen.add(x)
                images[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int) -> Perm:
        return cls.from_cycles(n, parse_cycles(text))

    @classmethod
    def _from0(cls, images0: Sequence[int]) -> Perm:
        p = object.__new__(cls)
        object.__setattr__(p, "images", tuple(x + 1 for x in images0))
        return p

    @property
    def n(self) -> int:
        return len(self.images)

    @cached_property
    def _zero(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Perm) -> Perm:
        return perm_compose(self, other)

    def inverse(self) -> Perm:
        inv = [0] * self.n
        for i, x in enumerate(self.images):
            inv[x - 1] = i + 1
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))

    def cycles(self) -> list[list[int]]:
        return cycle_decomposition(self)

    def cycle_count(self) -> int:
        return len(cycle_decomposition(self))

    def conjugate(self, t: Perm) -> Perm:
        """Return ``t * self * t^-1`` (relabel points by ``t``)."""
        return t * self * t.inverse()

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Perm.parse({format_cycles(self)!r}, {self.n})"


def perm_compose(a: Perm, b: Perm) -> Perm:
    """Return the permutation ``x -> a(b(x))``."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")
    ai = a.images
    return Perm._from0(tuple(ai[y - 1] - 1 for y in b.images))


def cycle_decomposition(a: Perm) -> list[list[int]]:
    """Cycles of ``a`` including fixed points.

    Each cycle starts at its smallest point; cycles are sorted by that point.
    """
    seen = [False] * (a.n + 1)
    out = []
    for start in range(1, a.n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = a(start)
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = a(x)
        out.append(cyc)
    return out


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse cycle notation such as ``"(1 3 5 7)(2 4)"``; ``"()"`` is identity.

    Whitespace anywhere is ignored apart from separating numbers; commas are
    accepted as separators too.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty cycle notation")
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise ValueError(f"unexpected text {stripped[pos:m.start()]!r} at offset {pos}")
        body = m.group(1).replace(",", " ").split()
        try:
            cyc = [int(tok) for tok in body]
        except ValueError:
            raise ValueError(f"non-integer point in cycle {m.group(0)!r}") from None
        if cyc:
            cycles.append(cyc)
        pos = m.end()
    if stripped[pos:].strip():
        raise ValueError(f"unexpected text {stripped[pos:]!r} at offset {pos}")
    return cycles


def format_cycles(a: Perm) -> str:
    """Canonical cycle notation: fixed points omitted, identity is ``"()"``."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycle_decomposition(a) if len(c) > 1]
    return "".join(parts) or "()"


# -- internal 0-based helpers --------------------------------------------------

def _mul0(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[y] for y in b)


def _inv0(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


class _Level:
    __slots__ = ("base", "gens", "trans", "done")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[tuple[int, ...]] = []
        # trans[p] maps base -> p; entries are never replaced once set
        self.trans: dict[int, tuple[int, ...]] = {}
        # Schreier generators already shown to lie in the next stabilizer
        self.done: set[tuple[int, int]] = set()

    def extend_orbit(self, ident: tuple[int, ...]) -> None:
        if not self.trans:
            self.trans[self.base] = ident
        queue = list(self.trans)
        while queue:
            p = queue.pop()
            u = self.trans[p]
            for g in self.gens:
                q = g[p]
                if q not in self.trans:
                    self.trans[q] = _mul0(g, u)
                    queue.append(q)


def _schreier_sims(n: int, gens: Sequence[tuple[int, ...]]) -> list[_Level]:
    ident = tuple(range(n))
    gens = [g for g in gens if g != ident]
    levels: list[_Level] = []

    def strip(g, start):
        for m in range(start, len(levels)):
            lev = levels[m]
            x = g[lev.base]
            u = lev.trans.get(x)
            if u is None:
                return g, m
            g = _mul0(_inv0(u), g)
        return g, len(levels)

    def add_generator(h, upto):
        # h fixes the base points of levels < upto
        if upto == len(levels):
            moved = next(i for i in range(n) if h[i] != i)
            levels.append(_Level(moved))
        # the residue lies in every stabilizer up to its level
        for m in range(upto + 1):
            levels[m].gens.append(h)
            levels[m].extend_orbit(ident)

    for g in gens:
        h, j = strip(g, 0)
        if h != ident:
            add_generator(h, j)

    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        found = False
        for p in list(lev.trans):
            u = lev.trans[p]
            for gi, s in enumerate(lev.gens):
                if (p, gi) in lev.done:
                    continue
                sp = s[p]
                sg = _mul0(_inv0(lev.trans[sp]), _mul0(s, u))
                h, j = strip(sg, i + 1)
                if h != ident:
                    add_generator(h, j)
                    i = j
                    found = True
                    break
                lev.done.add((p, gi))
            if found:
                break
        if not found:
            i -= 1
    return levels


@dataclass(frozen=True)
class PermGroup:
    """The group generated by ``generators``, all acting on the points 1..n."""

    n: int
    generators: tuple[Perm, ...] = field(default=())

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if g.n != self.n:
                raise ValueError(f"generator on {g.n} points, expected {self.n}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, *gens: Perm) -> PermGroup:
        if not gens:
            raise ValueError("need at least one generator to infer n")
        return cls(gens[0].n, gens)

    @cached_property
    def bsgs(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Base points (1-based) and basic orbit lengths."""
        levels = _schreier_sims(self.n, [g._zero for g in self.generators])
        return tuple(lev.base + 1 for lev in levels), tuple(len(lev.trans) for lev in levels)

    def order(self) -> int:
        return group_order(self)

    def orbits(self) -> list[list[int]]:
        return orbits(self)

    def is_transitive(self) -> bool:
        return is_transitive(self)

    def contains(self, g: Perm) -> bool:
        """Membership test by sifting through the stabilizer chain."""
        levels = _schreier_sims(self.n, [x._zero for x in self.generators])
        h = g._zero
        for lev in levels:
            u = lev.trans.get(h[lev.base])
            if u is None:
                return False
            h = _mul0(_inv0(u), h)
        return all(x == i for i, x in enumerate(h))


def _orbit_of(n: int, gens: Sequence[Perm], start: int) -> set[int]:
    orbit = {start}
    queue = [start]
    while queue:
        x = queue.pop()
        for g in gens:
            y = g(x)
            if y not in orbit:
                orbit.add(y)
                queue.append(y)
    return orbit


def is_transitive(g: PermGroup) -> bool:
    """True iff the orbit of point 1 is all of 1..n."""
    if g.n < 1:
        raise ValueError("need at least one point")
    return len(_orbit_of(g.n, g.generators, 1)) == g.n


def orbits(g: PermGroup) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for x in range(1, g.n + 1):
        if x in seen:
            continue
        orb = _orbit_of(g.n, g.generators, x)
        seen |= orb
        out.append(sorted(orb))
    return out


def group_order(g: PermGroup) -> int:
    """Exact order of the generated group (Python int, no overflow)."""
    order = 1
    for size in g.bsgs[1]:
        order *= size
    return order
