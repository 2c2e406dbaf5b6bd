"""
Weight systems on permutations
==============================

Evaluate the universal gl and so weight systems on a few permutations and
chord diagrams.  Values are polynomials in the Casimir variables C0, C1, ...
"""

# %%
from weightsys import GL, SO, Permutation, WeightSystem, chord_to_permutation, parse_diagram

wgl = WeightSystem(GL)
wso = WeightSystem(SO)

# %% [markdown]
# A standard cycle 1 -> 2 -> ... -> m -> 1 evaluates to the Casimir C_m.

for m in range(1, 5):
    s = Permutation.standard_cycle(m)
    print(f"w_gl({s}) = {wgl(s)}")

# %% [markdown]
# Under w_so odd cycles are not new variables: they reduce to even ones.

for m in (3, 5):
    print(f"w_so(standard {m}-cycle) = {wso(Permutation.standard_cycle(m))}")

# %% [markdown]
# A chord diagram is a fixed-point-free involution.

for text in ("1 2 1 2", "1 2 1 3 2 3", "(1,4)(2,5)(3,6)"):
    s = chord_to_permutation(parse_diagram(text))
    print(f"{text:>18}:  gl {wgl(s)}")
    print(f"{'':>18}   so {wso(s)}")
