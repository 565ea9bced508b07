"""Event words, components and linking numbers.

Run: python3 demos/01_words_and_linking.py
"""

# %%
from spunlink import StripDiagram, linking_matrix, validate, word

hopf = StripDiagram(word("cup1; cup3; x_over2; x_over2; cap1; cap1"), ("A", "B"))
table = validate(hopf)
for c in table.components:
    print(c.id, c.label, c.kind, "strands:", sorted(c.strands))

# %%
# both crossings have the same sign, so the half-sum is +-1
print(linking_matrix(hopf))

# %%
# an arc runs from the axis (bottom line) back to it
arc = StripDiagram(word("ax+; cup2; x_over1; x_over1; cap2; ax-"))
for c in validate(arc).components:
    print(c.label, c.kind, "axis endpoints:", c.axis_endpoint_count)
print(linking_matrix(arc))

# %%
# the sign follows the orientations, not the over/under tag
flipped = StripDiagram(word("cup1; cup3; x_under2; x_under2; cap1; cap1"))
print(linking_matrix(flipped)[0, 1], "vs", linking_matrix(hopf)[0, 1])
