"""Tree dessins as permutation pairs, and deciding isomorphism.

A dessin on n edges is a pair (s0, s1): s0 rotates edges around black
vertices, s1 around white ones.  It is a plane tree when the pair acts
transitively, the cycle counts add up to n + 1 and s0*s1 is one cycle.
"""

# %%
from dessins.dessin import (
    NormalizedDessin,
    TreeDessin,
    VertexId,
    canonical_form,
    canonical_form_normalized,
    is_clean,
    is_isomorphic,
    refine,
    smooth,
    validate,
    vertices,
)
from dessins.formats import serialize, to_dot

star = TreeDessin.from_cycles(8, "(1 3 5 7)", "(1 2)(3 4)(5 6)(7 8)")
print(validate(star))
print("clean:", is_clean(star))
for vid, valence in vertices(star):
    print(f"  {vid} valence {valence}")

# %%
# Relabeling the edges gives an isomorphic dessin with the same canonical form.
t = TreeDessin.from_cycles(8, "(2 3 6 8)", "(2 1)(3 5)(6 4)(8 7)")
print("isomorphic:", is_isomorphic(star, t))
print(serialize(canonical_form(t).dessin))

# %%
# Marking where 0 and 1 go turns a dessin into a normalized dessin.
# Opposite and adjacent ends of the star give two different ones.
f = NormalizedDessin(star, VertexId("B", 6), VertexId("B", 2))
g = NormalizedDessin(star, VertexId("B", 6), VertexId("B", 4))
print("f vs g normalized forms equal:", canonical_form_normalized(f) == canonical_form_normalized(g))

# %%
# Refinement bisects every edge; smoothing undoes it from a chosen black vertex.
quartic = TreeDessin.from_cycles(4, "(1 2 3 4)", "()")
fine = refine(quartic)
print("refined 4-star is the 8-edge star:", is_isomorphic(fine, star))
print("smoothing back:", is_isomorphic(smooth(fine, VertexId("B", 1)), quartic))

# %%
print(to_dot(f))
