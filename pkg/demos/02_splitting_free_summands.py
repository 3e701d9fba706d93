"""
Finding free summands
=====================

A finitely presented module splits off a copy of R exactly when some
element x and functional f satisfy f(x) = 1.  This script searches for such
pairs, reads off what goes wrong when none exist, and checks how the local
count of free summands behaves once one is split away.
"""

from freesplit import (
    Ideal,
    PolyRing,
    PresentedModule,
    QQ,
    delta_at,
    hom_dual,
    split_off,
    split_search,
    trace_ideal,
)

R = PolyRing(QQ, ["x", "y"])
x, y = R.gens()

# M = R^3 + R/(x, y): plenty of free rank compared to dim R = 2
M = PresentedModule(R, 4, [R.vector([0, 0, 0, x]), R.vector([0, 0, 0, y])])
cert = split_search(M, rank=1, seed=0)
print("status:", cert.status)
print("x =", cert.elements[0], " f =", cert.functionals[0].vector)
print("certificate checks out:", cert.verify())

# delta counts local free summands at a point; after splitting off one it drops by one
E = hom_dual(M)
S = [g.vector for g in M.gens()]
M2, E2, S2 = split_off(M, E, S, cert.elements[0], cert.functionals[0])
for pt in [(0, 0), (1, 2), (-3, 5)]:
    print(pt, "delta before:", delta_at(M, S, E, pt), "after:", delta_at(M2, S2, E2, pt))

# The Koszul module R^2/(x, y) has no free summand.  The obstruction is the
# trace ideal (x, y): every f(m) lands in it, and 1 does not.
K = PresentedModule(R, 2, [R.vector([x, y])])
ob = split_search(K)
print("status:", ob.status, " trace ideal:", [str(g) for g in ob.trace_ideal.groebner().elements])
print("witness point where every f(m) vanishes:", tuple(str(c) for c in ob.witness))

# Restricting the functionals: with only x*Hom(R^2, R) available, no split exists
F = PresentedModule.free(R, 2)
ob = split_search(F, hom_dual(F).scaled(x))
print("restricted:", ob.status, " trace inside (x):", ob.trace_ideal <= Ideal(R, [x]))
print("trace of the full dual:", [str(g) for g in trace_ideal(F, hom_dual(F)).groebner().elements])

# Elements can be drawn from a chosen submodule.  <(x,1), (0,y)> has a
# free-basic element, but <(x,1), (1,y)> holds no rank-2 free summand because
# its determinant xy - 1 is not a unit.
cert = split_search(F, restrict_to=[[x, 1], [0, y]])
print("rank 1 from <(x,1), (0,y)>:", cert.status, [str(v) for v in cert.elements])
ob = split_search(F, rank=2, restrict_to=[[x, 1], [1, y]])
print("rank 2 from <(x,1), (1,y)>:", ob.status, " stuck at stage", ob.stage)
