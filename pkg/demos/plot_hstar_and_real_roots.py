"""
h*-vectors and real-rootedness
==============================

The h*-polynomial is the numerator of the Ehrhart series.  A magic
positive Ehrhart polynomial always has a real-rooted h*-polynomial.
"""

from magicpos import (
    CrossPolytope,
    MagicExpansion,
    SpikedSimplex,
    ehrhart,
    hstar_from_ehrhart,
    is_palindromic,
    is_real_rooted,
    numerator_from_magic,
    parse_polynomial,
    reflexive_magic_check,
)


def show(seq):
    return "(" + ", ".join(str(c) for c in seq) + ")"


# spiked simplices have h* = (1, q, ..., q)
print("h*(P_{3,4}) =", show(hstar_from_ehrhart(ehrhart(SpikedSimplex(3, 4))).h))

# x^d in the magic basis gives the Eulerian numbers
e = MagicExpansion(5, (0, 0, 0, 0, 0, 1))
h = numerator_from_magic(e)
print("numerator of x^5:", show(h.h), "real-rooted:", is_real_rooted(h.as_polynomial()))

# reflexive polytopes have palindromic h* and a symmetric magic expansion
for d in range(2, 6):
    f = ehrhart(CrossPolytope(d))
    print(f"cross-polytope d={d}: h* = {show(hstar_from_ehrhart(f).h)}",
          "palindromic" if is_palindromic(hstar_from_ehrhart(f)) else "",
          "| magic symmetric:", reflexive_magic_check(f))

# a non-lattice input is flagged, not rejected
print("issues for x + 1/2:", hstar_from_ehrhart(parse_polynomial("x + 1/2")).issues)
