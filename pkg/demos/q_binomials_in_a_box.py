"""
Gaussian polynomials count partitions in a box
==============================================

A q-binomial is a generating function: the coefficient of q^n in [L; a]
counts partitions of n that fit in an a by (L - a) rectangle.  The
q-multinomials deform the coefficients of (1 + x + ... + x^k)^L in the same
spirit, and setting q = 1 recovers the ordinary numbers.
"""

import numpy as np

from agpoly import gaussian_binomial, q_multinomial
from agpoly.partitions import partitions_in_box

L, a = 6, 3
poly = gaussian_binomial(L, a)
print(f"[{L};{a}] =", poly)

# count the same partitions by brute force
counts = np.zeros(a * (L - a) + 1, dtype=int)
for p in partitions_in_box(L - a, a):
    counts[p.weight] += 1
print("box count    =", counts.tolist())
print("coefficients =", list(poly.coeffs))

# the superscript p shifts and reshapes, but q = 1 always gives the trinomial row
k, L = 2, 4
row = [q_multinomial(L, b, 0, k).at_one() for b in range(k * L + 1)]
print("trinomial row, L=4:", row)
print("numpy check       :", np.polynomial.polynomial.polypow([1, 1, 1], L).astype(int).tolist())
for p in range(k + 1):
    print(f"M[4,3,{p},2] =", q_multinomial(4, 3, p, 2))
