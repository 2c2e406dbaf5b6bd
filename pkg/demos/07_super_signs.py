"""
Sign function for the osp weight system
=======================================

The osp(N|2M) sum weights each index tuple by (-1)^f_s, with f_s a
quadratic polynomial in the index parities.  With every index even the
sign is +1 and the so(N) sum comes back.
"""

# %%
import itertools

from weightsys import Permutation, distinguished_sets, sign_value

s = Permutation((3, 4, 1, 2))
sd = distinguished_sets(s)
print("P1 =", sorted(sd.P1), " P2 =", sorted(sd.P2))

# %%
for tau in itertools.product((0, 1), repeat=2):
    eta = tau + (0, 0)
    print(eta, sign_value(sd, eta))
