"""
Saturation over a small sweep
=============================

Two routes to "Supp(S_lambda) equals its convex hull's integer points":

* the hook-polyhedron chain of verify_snp, which needs Supp = H ∩ Z^d;
* a direct test that looks at each lattice point of H missing from the
  support and certifies that it lies outside Conv(Supp).

The first route breaks whenever the prefix-sum inequalities over-count;
the second still finds no gaps.
"""

from collections import Counter

from superschur import hook_instances, verify_snp
from superschur.saturation import direct_saturation

instances = list(hook_instances(5, 2, 2))
chain = Counter()
direct_gaps = 0
for lam, k, l in instances:
    r = verify_snp(lam, k, l)
    chain["pass" if r.passed else r.counterexample_check] += 1
    direct_gaps += 0 if direct_saturation(lam, k, l).passed else 1

print(len(instances), "instances")
print("certificate chain:", dict(chain))
print("direct saturation failures:", direct_gaps)

r = verify_snp((2, 1, 1), 2, 1)
print()
print("(2,1,1):", r.checks, "witness", r.counterexample)
