"""
Ehrhart polynomials of classical polytopes
==========================================

Closed forms for simplices, cross-polytopes, hypersimplices and matroid
polytopes, checked against brute-force lattice point counts.
"""

from magicpos import (
    CompleteMultipartite,
    CrossPolytope,
    Hypersimplex,
    MinimalMatroid,
    StandardReflexiveSimplex,
    StandardSimplex,
    ehrhart,
    evaluate,
    lattice_count,
    m_index,
)

# formula against enumeration on a few small dilates
for spec in (CrossPolytope(3), Hypersimplex(2, 5), MinimalMatroid(2, 5), CompleteMultipartite((1, 2, 3))):
    f = ehrhart(spec)
    counts = [lattice_count(spec, 1, n).count for n in (1, 2, 3)]
    print(f"{spec!r:45} E(1..3) = {[int(evaluate(f, n)) for n in (1, 2, 3)]}  counted = {counts}")

# m-index tables
print()
print("simplex          ", [m_index(ehrhart(StandardSimplex(d))).value for d in range(1, 11)])
print("cross-polytope   ", [m_index(ehrhart(CrossPolytope(d))).value for d in range(1, 17)])
print("reflexive simplex", [m_index(ehrhart(StandardReflexiveSimplex(d))).value for d in range(1, 13)])

# the complete graph K_n has the second hypersimplex as edge polytope
print()
print("K_6 == Delta(2,6):", ehrhart(CompleteMultipartite((1,) * 6)) == ehrhart(Hypersimplex(2, 6)))
