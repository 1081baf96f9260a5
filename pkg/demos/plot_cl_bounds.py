"""
Roots on the critical line
==========================

If every root of E(x) has real part -1/2, the m-index is bounded by
ceil(1/2 + 2 b^2) where -1/2 +- b i is the root furthest from the axis.
"""

from magicpos import (
    CrossPolytope,
    StandardReflexiveSimplex,
    cl_check,
    cl_mindex_bound,
    dimension_only_bound,
    ehrhart,
    m_index,
)

print(f"{'polytope':24} {'m-index':>8} {'CL bound':>9} {'dim bound':>10}")
for d in range(1, 11):
    for name, spec in (("cross", CrossPolytope(d)), ("reflexive simplex", StandardReflexiveSimplex(d))):
        f = ehrhart(spec)
        cert = cl_check(f)
        assert cert.is_cl
        print(f"{name + ' d=' + str(d):24} {m_index(f).value:8} {cl_mindex_bound(f):9} {dimension_only_bound(d):10}")

# squared imaginary parts come back as exact isolating intervals
cert = cl_check(ehrhart(CrossPolytope(4)))
for lo, hi in cert.squared_parts:
    print(f"b^2 in [{float(lo):.8f}, {float(hi):.8f}]")
