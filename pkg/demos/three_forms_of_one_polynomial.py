"""
One polynomial, three formulas
==============================

Partitions whose parts stay below L, with at most i-1 ones, at most i'-1
copies of L-1 and f_j + f_(j+1) <= k, have a generating function that can be
written as a positive sum over an (m,n)-system or as an alternating sum of
q-multinomials.  Here both formulas are evaluated next to the enumeration.
"""

from agpoly import GordonParams, boson_polynomial, fermion_polynomial, gen_func_bruteforce

for k, i, ip, L in [(1, 2, 2, 6), (2, 3, 1, 5), (3, 2, 4, 4)]:
    gp = GordonParams(k, i, ip, L)
    count = gen_func_bruteforce(k, i, ip, L)
    fermion = fermion_polynomial(gp)
    boson = boson_polynomial(gp)
    print(f"k={k} i={i} i'={ip} L={L}")
    print("  enumeration:", count)
    print("  agree      :", fermion == count, boson == count)

# as L grows the low coefficients freeze into the product over parts = +-1 mod 5
big = boson_polynomial(GordonParams(1, 2, 2, 30), max_exp=12)
print("L=30, first terms:", big)
