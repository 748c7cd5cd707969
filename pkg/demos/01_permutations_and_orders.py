"""Permutations and exact group orders.

Permutations act on 1..n and compose right to left: ``(a * b)(x) = a(b(x))``.
Group orders come from a deterministic Schreier-Sims computation.
"""

# %%
from dessins.permcore import Perm, PermGroup, format_cycles, group_order

a = Perm.parse("(1 2 3)", 4)
b = Perm.parse("(3 4)", 4)
print("a * b =", format_cycles(a * b))   # b first, then a
print("b * a =", format_cycles(b * a))
print("cycles of a*b:", (a * b).cycles())

# %%
# A transposition and a long cycle generate the full symmetric group.
n = 6
gens = [Perm.parse("(1 2)", n), Perm.parse("(1 2 3 4 5 6)", n)]
g = PermGroup(n, gens)
print("order:", g.order(), "transitive:", g.is_transitive())
print("base and basic orbit lengths:", g.bsgs)

# %%
# Two disjoint transpositions give a Klein four-group with two orbits.
k = PermGroup(4, [Perm.parse("(1 2)", 4), Perm.parse("(3 4)", 4)])
print("Klein four:", k.order(), "orbits:", k.orbits())
print("contains (1 2)(3 4):", k.contains(Perm.parse("(1 2)(3 4)", 4)))

# %%
# Orders are unchanged by relabeling the points.
t = Perm.parse("(1 4 2)", 6)
moved = [p.conjugate(t) for p in gens]
assert group_order(PermGroup(n, moved)) == g.order()
print("relabeled order:", group_order(PermGroup(n, moved)))
