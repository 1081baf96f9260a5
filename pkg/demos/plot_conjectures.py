"""
Testing open m-index conjectures
================================

Each scan compares computed m-indices with a conjectured value and only
reports the outcome.
"""

from magicpos import conjecture_scan, counterexample_q

for which, kwargs in (
    ("minimal-matroid", {"ns": range(4, 9)}),
    ("multipartite", {}),
    ("hypersimplex", {"ns": range(6, 11)}),
):
    print(f"== {which}")
    for rec in conjecture_scan(which, **kwargs):
        print(f"  {rec.params}  computed={rec.computed}  expected={set(rec.conjectured)}  {rec.status}")

# no single dilation works for every polytope of dimension d >= 3
print("== smallest q with k P_{q,d} not magic positive")
for d in range(3, 7):
    print(f"  d={d}:", [counterexample_q(d, k) for k in range(1, 6)])
