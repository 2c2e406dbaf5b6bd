"""
Odd Casimirs two ways
=====================

The generating series F(u) satisfies F(u) F(C0 - 1 - u) = 1.  Solving
this order by order expresses every odd Casimir through even ones.  The
so weight system gets the same polynomials from the doubling trick.
"""

# %%
from weightsys import SO, WeightSystem, build_F, solve_odd_casimirs

F = build_F(4)
for k in range(4):
    print(f"u^-{k}: {F[k]}")

# %%
solved = solve_odd_casimirs(7)
ws = WeightSystem(SO)
for m, expr in solved.items():
    same = expr == ws.odd_cycle_value(m)
    print(f"C{m} = {expr}\n    doubling trick agrees: {same}")
