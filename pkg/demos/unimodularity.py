"""
Total unimodularity of the hook system
======================================

After flipping the signs of the -e and -I rows every entry of Atilde is
0 or 1 with consecutive ones, so it is an interval matrix and hence TU.
The exhaustive minor test agrees; a 3x3 circulant shows what failure
looks like.
"""

from superschur import build_system, certify_atilde_tu, find_bad_minor, is_interval
from superschur.tu import atilde_signs, row_sign_normalize

k, l = 2, 1
system = build_system((2, 1, 1), k, l)
flipped = row_sign_normalize(system.atilde, atilde_signs(k, l))
for row in flipped:
    print(row)
print("interval:", is_interval(flipped))

report = certify_atilde_tu((2, 1, 1), k, l)
print(report.checks)

# small k and l, interval test only
print(all(certify_atilde_tu((), a, b, cap=0).checks["interval"] for a in range(7) for b in range(7) if a + b))

circulant = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
print("circulant bad minor:", find_bad_minor(circulant))
