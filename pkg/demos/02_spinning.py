"""Spinning: arcs become spheres, circles become tori.

Run: python3 demos/02_spinning.py
"""

# %%
import random

from spunlink import descriptor, semi_boundary
from spunlink.fixtures import fig6_2
from spunlink.moves import apply_move, random_move
from spunlink.report import format_matrix, matrix_rows

d = descriptor(fig6_2())
print(d.components)  # (label, genus)

# %%
# rows are "around", columns are "what": the torus J sees K once,
# every circle on the sphere K bounds off J
print(format_matrix(d.labels, matrix_rows(d.alk, len(d))))
print("semi-boundary:", semi_boundary(d))

# %%
# moves never change the descriptor
rng = random.Random(7)
e = fig6_2()
for _ in range(30):
    e = apply_move(e, random_move(e, rng, max_events=30))
print(len(e.events), "events after 30 moves:", descriptor(e) == d)
