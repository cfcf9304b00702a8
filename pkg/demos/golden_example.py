"""
S_(2,1,1) in two x-variables and one y-variable
===============================================

Build the polynomial from tableaux and from the determinant, and check
that they agree.
"""

from superschur import enumerate_tableaux, schur_super_det, schur_super_tableau

lam, k, l = (2, 1, 1), 2, 1

# every (2,1)-semistandard filling of the diagram
for tab in enumerate_tableaux(lam, k, l):
    print(" / ".join(" ".join(f"{z.kind.lower()}{z.index}" for z in row) for row in tab.rows))

by_tableaux = schur_super_tableau(lam, k, l)
by_det = schur_super_det(lam, k, l)
print()
print("tableaux:", by_tableaux.format(k))
print("det:     ", by_det.format(k))
print("equal:", by_tableaux == by_det)
