"""
Checking w_so inside U(so(N)) and U(sp(2M))
===========================================

Sum X_{i1 i_s(1)} ... X_{im i_s(m)} over all indices, normal order the
result, and compare with the universal polynomial evaluated on the
algebra's own Casimir elements.
"""

# %%
import itertools

from weightsys import AlgebraSpec, Permutation, casimir_pbw, oracle_check
from weightsys.pbw import format_element

so3 = AlgebraSpec.so(3)
print("C2 in U(so(3)):", format_element(so3, casimir_pbw(so3, 2)))

# %%
for spec in (AlgebraSpec.so(3), AlgebraSpec.so(4), AlgebraSpec.sp(2)):
    results = [
        oracle_check(spec, Permutation(p))
        for m in range(1, 5)
        for p in itertools.permutations(range(1, m + 1))
    ]
    print(f"{spec}: {sum(results)}/{len(results)} permutations agree")
