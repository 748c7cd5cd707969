"""How many clean trees and normalized dessins there are, by degree."""

# %%
import time

from dessins.dessin import vertices
from dessins.enumeration import enumerate_clean, enumerate_normalized
from dessins.hubbard import dessin_to_hubbard, validate_hubbard

print("degree  clean  normalized  extra-clean")
for n in (2, 4, 6, 8):
    start = time.perf_counter()
    clean = enumerate_clean(n)
    normalized = enumerate_normalized(n)
    extra = enumerate_normalized(n, extra_clean_only=True)
    print(f"{n:6d}  {len(clean):5d}  {len(normalized):10d}  {len(extra):11d}"
          f"   ({time.perf_counter() - start:.2f} s)")

# %%
# Valence profiles of the degree-8 clean trees.
for d in enumerate_clean(8):
    black = sorted(v for vid, v in vertices(d) if vid.color == "B")
    print("black valencies", black)

# %%
# Every normalized dessin of degree 8 yields a valid Hubbard tree.
trees = [dessin_to_hubbard(nd) for nd in enumerate_normalized(8)]
print(sum(validate_hubbard(t).ok for t in trees), "of", len(trees), "valid")
