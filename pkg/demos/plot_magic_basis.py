"""
Magic positivity in five minutes
================================

A polynomial of degree d can be written in the basis x^i (x+1)^(d-i).
When every coefficient is non-negative we call it magic positive.
"""

from fractions import Fraction

from magicpos import binomial_poly, is_magic_positive, m_index, scale_arg, to_magic


def show(seq):
    return "(" + ", ".join(str(c) for c in seq) + ")"


# the unimodular triangle counts C(n+2, 2) lattice points in its n-th dilate
triangle = binomial_poly(2, 2)
print("E(x) =", triangle)

# one negative coefficient, so the triangle itself is not magic positive
print("magic coefficients:", show(to_magic(triangle, 1).coeffs))

# doubling the triangle fixes it
print("E(2x) =", scale_arg(triangle, 2), "->", show(to_magic(triangle, 2).coeffs))
print("positive at k=2?", is_magic_positive(scale_arg(triangle, 2)))

# the m-index is the least dilation that works
r = m_index(triangle)
print("m-index:", r.value, f"(search bound {r.search_bound_used})")

# rational dilations are allowed too
print("k = 3/2:", show(to_magic(triangle, Fraction(3, 2)).coeffs))
