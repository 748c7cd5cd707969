"""From normalized dessins to Hubbard trees and back."""

# %%
from dessins.dessin import NormalizedDessin, TreeDessin, VertexId, canonical_form_normalized
from dessins.formats import serialize
from dessins.hubbard import (
    HubbardTree,
    canonical_form_hubbard,
    classify_vertices,
    dessin_to_hubbard,
    hubbard_to_dessin,
    is_belyi_type,
    validate_hubbard,
)

path = TreeDessin.from_cycles(4, "(2 3)", "(1 2)(3 4)")
nd = NormalizedDessin(path, VertexId("B", 1), VertexId("B", 4))
tree = dessin_to_hubbard(nd)
print(serialize(tree))

# %%
print(validate_hubbard(tree))
print("Belyi type:", is_belyi_type(tree))
print("critical:", sorted(tree.critical), "postcritical:", sorted(tree.postcritical))
print("vertex types:", classify_vertices(tree))

# %%
back = hubbard_to_dessin(tree)
print("round trip:", canonical_form_normalized(back) == canonical_form_normalized(nd))
print(canonical_form_hubbard(tree))

# %%
# A dynamics that collapses an edge is rejected.
bad = HubbardTree(((2,), (1,)), (1, 1), (1, 1))
for name, result in validate_hubbard(bad).results:
    print(f"  {name}: {result}")
