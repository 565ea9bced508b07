"""Cyclic covers of the family(i) links.

family(i) is a branch arc (cut open into the seam) plus one circle that
crosses the seam out and back, clasping its neighbour i times.  Every
base alinking number vanishes; the covers tell the family apart.

Run: python3 demos/03_family_covers.py
"""

# %%
from spunlink import cover_lift, deck_action, descriptor, obstruct
from spunlink.fixtures import family
from spunlink.report import format_matrix, matrix_rows

for i in range(3):
    print(f"family({i}) base alk:", descriptor(family(i)).alk)

# %%
# the 3-fold cover of family(1): three tori, each pair linked once
lifted, prov = cover_lift(family(1), 3)
c = descriptor(lifted)
print(format_matrix(c.labels, matrix_rows(c.alk, len(c))))
print("deck shift by 1:", deck_action(prov, 1))

# %%
# at p = 5 only neighbours link, with value i
for i in range(4):
    c = descriptor(cover_lift(family(i), 5)[0])
    print(i, sorted(c.off_diagonal_values()))

# %%
for i, j in [(0, 1), (1, 2), (2, 4), (3, 3)]:
    print(i, j, obstruct(family(i), family(j), 5).summary())
