"""Brute-force reference computations, kept independent of the library paths."""

from itertools import permutations


def closure_order(gens):
    """Size of the group generated by 0-based tuples, by exhaustive closure."""
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[g[i]] for i in range(n))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen)


def cycle_count(p):
    seen = set()
    count = 0
    for i in range(len(p)):
        if i not in seen:
            count += 1
            while i not in seen:
                seen.add(i)
                i = p[i]
    return count


def connected(s0, s1):
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in (s0[x], s1[x]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(s0)


def is_tree_pair(s0, s1):
    return connected(s0, s1) and cycle_count(s0) + cycle_count(s1) == len(s0) + 1


def conj(p, t):
    """t p t^-1 on 0-based tuples."""
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[t[i]] = t[x]
    return tuple(out)


def brute_iso_key(s0, s1):
    """Minimum of (s0, s1) over all relabelings of the edges."""
    n = len(s0)
    return min((conj(s0, t), conj(s1, t)) for t in permutations(range(n)))


def brute_isomorphic(a, b):
    """Search every edge bijection for one conjugating both rotations."""
    n = len(a[0])
    if len(b[0]) != n:
        return False
    return any(conj(a[0], t) == b[0] and conj(a[1], t) == b[1] for t in permutations(range(n)))


def all_tree_pairs(n):
    """Every (s0, s1) in S_n x S_n forming a bicolored plane tree."""
    perms = list(permutations(range(n)))
    return [(a, b) for a in perms for b in perms if is_tree_pair(a, b)]


def clean_tree_classes(n):
    """Isomorphism classes of clean tree dessins with both rotations free."""
    perms = list(permutations(range(n)))
    keys = set()
    for s1 in perms:
        if any(s1[i] == i or s1[s1[i]] != i for i in range(n)):
            continue
        for s0 in perms:
            if is_tree_pair(s0, s1):
                keys.add(brute_iso_key(s0, s1))
    return keys
