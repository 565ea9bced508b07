"""Two links whose sublinks all look standard, separated by a 5-fold cover.

Each diagram has a branch arc, a circle and a second arc.  The circle
clasps its own next lift once in L and twice in L'; the second arc hooks
the circle with opposite signs on either side of the seam so nothing
links downstairs.

Run: python3 demos/04_main_pair.py
"""

# %%
from itertools import permutations

from spunlink import cover_lift, descriptor, obstruct, sublink_descriptor
from spunlink.fixtures import main_pair

L, Lp = main_pair()
for name, d in (("L", L), ("L'", Lp)):
    full = descriptor(d)
    subs = {(full.labels[a], full.labels[b]): sublink_descriptor(d, {a, b}).alk
            for a, b in permutations(range(len(full)), 2)}
    print(name, full.components, "all 2-sublinks split:",
          all(not any(map(any, m)) for m in subs.values()))

# %%
cL = descriptor(cover_lift(L, 5)[0])
cLp = descriptor(cover_lift(Lp, 5)[0])
print("cover of L :", sorted(cL.off_diagonal_values()))
print("cover of L':", sorted(cLp.off_diagonal_values()))

# %%
v = obstruct(L, Lp, 5)
print(v.summary())
print(obstruct(L, L, 5).summary())
