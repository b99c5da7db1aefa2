"""From the 16x16 conic matrix to the orthogonal complement of h and a comparison with Lambda_15.

The norm-6 count is skipped here; pass --deep to include it (about half a minute).
"""

import sys

from heisquartic import conicconfig as cc
from heisquartic import lattice as lat

deep = "--deep" in sys.argv[1:]

M, det, conv, _ = cc.submatrix_M()
print(f"M: det {det}, signature {lat.signature(M)}, convention {conv}")

h = lat.solve_integral(M, [2] * 16)
print(f"h in the conic basis: {h}")

L = lat.GramLattice(M)
perp = lat.orth_complement(L, h)
print(f"h-perp: rank {perp.rank}, det {perp.det()}, saturated {lat.is_saturated(perp.basis)}")
print(f"index of Zh + h-perp in M: {lat.sublattice_index([h] + perp.basis, M)}")

bound = 6 if deep else 4
neg = perp.negated().gram
print(f"norm counts up to {bound}:")
print(f"  -h-perp   {lat.norm_counts(neg, bound)}")
print(f"  Lambda_15 {lat.norm_counts(lat.LAMBDA15, bound)}")
