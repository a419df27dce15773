"""
Checking a dual q-series identity
=================================

The dual identities live in fractional powers of q, so both sides are stored
as integer grades in t = q^(1/(4 ell)).  With the quadratic form and overall
power as printed the two sides disagree; the q -> 1/q image of the
fermionic polynomials suggests a different linear term and prefactor, and
with those every tested point matches.
"""

from fractions import Fraction

from agpoly.cli import render_graded
from agpoly.identities import compare_dual, dual_lhs, dual_rhs

for k, ell, i, ip, N in [(1, 1, 2, 2, 40), (2, 1, 1, 2, 40), (2, 2, 1, 1, 40)]:
    printed = compare_dual(k, ell, i, ip, N)
    pre = Fraction(ip - i + k - ell, 4)
    fixed = compare_dual(k, ell, i, ip, N, exponent="limit", prefactor=pre)
    print(f"k={k} ell={ell} i={i} i'={ip}")
    print("  theta side   :", render_graded(dual_rhs(k, ell, i, ip, N)))
    print("  printed      :", render_graded(dual_lhs(k, ell, i, ip, N)))
    print(f"  exact={printed.exact} up to a monomial={printed.up_to_monomial}; corrected exact={fixed.exact}")
