"""
The hook polyhedron of (2,1,1)
==============================

Compares the support of S_(2,1,1) with the integer points and vertices of
H = {u : Atilde u <= btilde}.  The prefix-sum inequalities let in one point
that no tableau has, (0,3,1), and it is a vertex of H.
"""

from superschur import build_system, enumerate_lattice, enumerate_vertices, schur_super_tableau

lam, k, l = (2, 1, 1), 2, 1
system = build_system(lam, k, l)
for row, b in zip(system.atilde, system.btilde):
    print(row, "<=", b)

supp = schur_super_tableau(lam, k, l).support()
lattice = enumerate_lattice(system).as_set()
print()
print("support:       ", sorted(supp))
print("lattice points:", sorted(lattice))
print("not in support:", sorted(lattice - supp))

verts = sorted(tuple(int(x) for x in v) for v in enumerate_vertices(system))
print("vertices of H: ", verts)
