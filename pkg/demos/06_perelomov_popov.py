"""
Casimirs from the Perelomov-Popov product
=========================================

For so, sp and osp the series F(u) is a ratio of shifted products in the
diagonal variables x_i.  The extracted Casimirs must satisfy the universal
odd-Casimir relations identically in the x_i.
"""

# %%
from weightsys import FamilySpec, PPData, pp_F, verify_pp
from weightsys.casimir_series import casimirs_from_F

pp = PPData(FamilySpec("so", 3))
cas = casimirs_from_F(pp_F(pp, 6), pp.spec.c0)
for m in range(4):
    print(f"so(3): C{m} = {cas[m]}")

# %%
for spec in (FamilySpec("so", 4), FamilySpec("sp", 0, 2), FamilySpec("osp", 3, 1)):
    r = verify_pp(PPData(spec), 8)
    print(spec, "pass" if r.passed else r.first_failure)
