"""
Chord diagrams modulo 4-term relations
======================================

Enumerate chord diagrams up to rotation, impose every 4-term relation, and
measure how much of the quotient the two weight systems detect.
Going up to n = 7 takes several minutes; set MAX_N accordingly.
"""

# %%
import logging

from weightsys import kernel_report

logging.basicConfig(level=logging.INFO, format="%(message)s")
MAX_N = 6

# %%
print(" n  diagrams  dim A  ker gl  ker gl+so")
for n in range(1, MAX_N + 1):
    r = kernel_report(n)
    print(f"{n:>2} {r.num_diagrams:>9} {r.dim_A:>6} {r.ker_gl:>7} {r.ker_joint:>10}")

# %% [markdown]
# From n = 6 on, w_gl has a kernel; at n = 7 w_so detects one element of
# it (see 04_element_h.py).
