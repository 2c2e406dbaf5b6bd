"""
An element that w_so sees and w_gl does not
===========================================

h is a degree-7 polynomial in the multiplicative generators of the chord
diagram algebra.  Evaluating it through multiplicativity takes a few
seconds per family.
"""

# %%
from weightsys.fourterm import evaluate_h, generator_values
from weightsys.generators import H_TERMS
from weightsys.engine import GL, SO

print(f"h has {len(H_TERMS)} terms")

# %%
gl = generator_values(GL)
so = generator_values(SO)
for g in ("p1", "p2", "p3"):
    print(f"{g}: gl {gl[g]}\n    so {so[g]}")

# %%
print("w_gl(h) =", evaluate_h(gl))
print("w_so(h) =", evaluate_h(so))
