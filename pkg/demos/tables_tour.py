"""Tour of the table engines: DDT, the three BCT builders, uniformities.

Run:  python demos/tables_tour.py
"""

import numpy as np

import bctlab as B

# An S-box is a full lookup table over GF(2^n). Build one from a family...
f = B.kasami(6, 2)  # x^13 over GF(2^64 elements)
print(f"kasami(6, 2) over {f.spec.label()}: permutation={f.is_permutation()}")

# ... or from raw values, or from a file (see B.read_sbox / B.write_sbox).
g = B.SBox(B.make_field(3), [1, 0, 5, 6, 7, 2, 3, 4])

# The DDT counts solutions of f(x+a) + f(x) = b per cell (a, b).
d = B.ddt(f)
print(f"differential uniformity: {B.differential_uniformity(d)}")

# The BCT counts pairs (x, y) with f(x)+f(y) = b and f(x+a)+f(y+a) = b.
# Three builders, one output: a cubic-time inverse-based reference, the
# literal pair count, and the bucketed fast path.
t_naive = B.bct_naive(f)
t_system = B.bct_system(f)
t_fast = B.bct_fast(f)
assert np.array_equal(t_naive.counts, t_system.counts)
assert np.array_equal(t_system.counts, t_fast.counts)
print(f"BCT builders agree; boomerang uniformity: {t_fast.max_nonzero()}")

# The headline report carries argmax witnesses for both tables.
rep = B.boomerang_uniformity(f)
print(rep)

# Power maps never need the full table: every BCT row of x^d is a scaled
# copy of the a=1 row, so one row determines the uniformity. This is what
# makes the large published instances cheap to reproduce.
row_rep = B.monomial_boomerang_uniformity(B.make_field(10), 13)
print(f"x^13 over GF(2^10): boomerang uniformity {row_rep.boomerang_uniformity}")

# Tables export to CSV or JSON payloads.
print()
print("\n".join(B.ktable_to_csv(B.ddt(g)).splitlines()[:4]))
