"""
Linear objectives over H
========================

H is integral, so every linear objective has an integral optimum.  Over
the support instead, the optimum can be smaller if the lattice maximiser
is a point with no tableau.
"""

import random

from superschur import build_system, maximize_linear, schur_super_tableau

lam, k, l = (2, 1, 1), 2, 1
system = build_system(lam, k, l)
supp = schur_super_tableau(lam, k, l).support()

rng = random.Random(1)
for _ in range(8):
    c = [rng.randint(-5, 5) for _ in range(k + l)]
    point, value = maximize_linear(system, c)
    over_supp = max(sum(a * b for a, b in zip(c, s)) for s in supp)
    flag = "" if point in supp else "  <- not an exponent of S_lambda"
    print(c, point, value, over_supp, flag)
