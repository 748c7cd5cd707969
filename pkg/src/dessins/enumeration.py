"""Exhaustive generation of clean tree dessins and their normalizations."""

from __future__ import annotations

from itertools import permutations as _permutations

from .dessin import (
    BLACK,
    NormalizedDessin,
    TreeDessin,
    VertexId,
    canonical_form,
    canonical_form_normalized,
    is_extra_clean,
    vertices,
)
from .permcore import Perm

__all__ = ["enumerate_clean", "enumerate_normalized", "permutations_with_cycles", "DEFAULT_BOUND"]

DEFAULT_BOUND = 10


def permutations_with_cycles(n: int, k: int):
    """Yield every permutation of 0..n-1 (as a list) with exactly ``k`` cycles.

    Points are added one at a time, either as a new fixed point or spliced
    into an existing cycle right after some earlier point; every permutation
    arises exactly once.
    """
    perm = [0] * n

    def rec(i, cycles):
        if i == n:
            if cycles == k:
                yield list(perm)
            return
        remaining = n - i
        if cycles + remaining < k or cycles > k:
            return
        perm[i] = i
        yield from rec(i + 1, cycles + 1)
        for j in range(i):
            perm[i], perm[j] = perm[j], i
            yield from rec(i + 1, cycles)
            perm[j], perm[i] = perm[i], i

    yield from rec(0, 0)


def _connected(s0, s1) -> bool:
    n = len(s0)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in (s0[x], s1[x]):
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def _check_size(n: int, bound: int) -> None:
    if n < 2 or n % 2:
        raise ValueError(f"clean dessins have an even number >= 2 of edges, got {n}")
    if n > bound:
        raise ValueError(f"degree {n} exceeds the enumeration bound {bound}")


def enumerate_clean(n: int, bound: int = DEFAULT_BOUND) -> list[TreeDessin]:
    """One canonical representative per isomorphism class of clean tree dessins.

    ``s1`` is fixed to ``(1 2)(3 4)...``; ``s0`` ranges over permutations with
    ``n/2 + 1`` cycles.  Results are sorted by canonical form.
    """
    _check_size(n, bound)
    s1 = [i ^ 1 for i in range(n)]
    s1_perm = Perm._from0(s1)
    classes = {}
    for s0 in permutations_with_cycles(n, n // 2 + 1):
        if not _connected(s0, s1):
            continue
        cf = canonical_form(TreeDessin(Perm._from0(s0), s1_perm))
        classes.setdefault(cf.key, cf.dessin)
    return [classes[k] for k in sorted(classes)]


def enumerate_normalized(
    n: int, extra_clean_only: bool = False, bound: int = DEFAULT_BOUND
) -> list[NormalizedDessin]:
    """All normalized dessins of degree ``n`` up to isomorphism.

    With ``extra_clean_only`` only markings by two black ends are kept.
    """
    out = {}
    for d in enumerate_clean(n, bound):
        vs = [vid for vid, val in vertices(d) if not extra_clean_only or (vid.color == BLACK and val == 1)]
        for z, w in _permutations(vs, 2):
            nd = NormalizedDessin(d, z, w)
            if extra_clean_only and not is_extra_clean(nd):
                continue
            key = canonical_form_normalized(nd)
            if key not in out:
                out[key] = NormalizedDessin(
                    TreeDessin(Perm(key[0]), Perm(key[1])), VertexId(*key[2]), VertexId(*key[3])
                )
    return [out[k] for k in sorted(out)]
