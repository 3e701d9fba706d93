"""
Ideals, normal forms and elimination
====================================

A short walk through the polynomial layer: build a ring, compute a reduced
Groebner basis, reduce with cofactors, eliminate a variable and saturate.
"""

from freesplit import Ideal, PolyRing, QQ, GF, eliminate, saturate, krull_dim

R = PolyRing(QQ, ["x", "y"], "grevlex")
x, y = R.gens()

# the ideal (xy - 1, y^2 - 1) cuts out the two points (1, 1) and (-1, -1)
I = Ideal(R, [x * y - 1, y**2 - 1])
G = I.groebner()
print("reduced basis:", [str(g) for g in G.elements])
print("dimension:", krull_dim(I))

# x^2 is 1 modulo I; the cofactors say how
rem, cof = G.reduce(x**2, with_cofactors=True)
print("x^2 mod I =", rem, " cofactors:", [str(c) for c in cof])

# lift expresses a member in terms of the original generators
f = x - y
coeffs = I.lift(f)
print("x - y =", " + ".join(f"({c})*({g})" for c, g in zip(coeffs, I.gens)))

# eliminating x from (x - y^2, x - 1) leaves a polynomial in y alone
J = Ideal(R, [x - y**2, x - 1])
print("eliminate x:", [str(g) for g in eliminate(J, 1).gens])

# saturating by x strips the x-torsion
K = Ideal(R, [x**2 * y])
print("saturate (x^2 y) by x:", [str(g) for g in saturate(K, x).groebner().elements])

# the same computation over F_7 is exact too
F = PolyRing(GF(7), ["x", "y"])
a, b = F.gens()
print("over F_7:", [str(g) for g in Ideal(F, [8 * a * b - 1, b**2 - 1]).groebner().elements])
