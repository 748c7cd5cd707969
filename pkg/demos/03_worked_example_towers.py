"""Monodromy towers of the two markings of the 8-edge star.

The star is the dessin of 4z^4(1 - z^4).  Its two extra-clean markings agree
on every depth-1 invariant, but their second iterates have monodromy groups
of different orders.
"""

# %%
import time

from dessins.dessin import NormalizedDessin, TreeDessin, VertexId, canonical_form_normalized, smooth
from dessins.dynamics import compose, fingerprint, iterate_recursion, iterate_substitution, monodromy
from dessins.permcore import group_order

star = TreeDessin.from_cycles(8, "(1 3 5 7)", "(1 2)(3 4)(5 6)(7 8)")
f = NormalizedDessin(star, VertexId("B", 6), VertexId("B", 2))
g = NormalizedDessin(star, VertexId("B", 6), VertexId("B", 4))

print("depth 1:", fingerprint(f), fingerprint(g), sep="\n  ")

# %%
start = time.perf_counter()
for name, nd in (("f", f), ("g", g)):
    fp = fingerprint(nd, depth=2)
    k = fp.mon_orders[1].bit_length() - 1
    print(f"|Mon({name} o {name})| = {fp.mon_orders[1]} = 2^{k}")
print(f"({time.perf_counter() - start:.2f} s)")

# %%
# The two constructions of the iterate, and composition, agree.
for nd in (f, g):
    a = iterate_recursion(nd, 2)
    b = iterate_substitution(nd, 2)
    c = compose(nd, nd)
    same = canonical_form_normalized(a) == canonical_form_normalized(b) == canonical_form_normalized(c)
    print("recursion = substitution = compose:", same)

# %%
# Smoothing the 64-edge iterates halves the edge count.
for name, nd in (("f", f), ("g", g)):
    second = iterate_recursion(nd, 2)
    s = smooth(second.dessin, second.mark0)
    order = group_order(monodromy(s))
    print(f"smoothed {name}: {s.n_edges} edges, order 2^{order.bit_length() - 1}")
