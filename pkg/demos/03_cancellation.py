"""
Cancelling a free summand
=========================

Given an isomorphism alpha: R + N -> R + M, build an explicit
isomorphism N -> M.  We scramble the identity of R + M with random
elementary moves, hand the result to bass_cancel, and check the answer.
"""

import random

from freesplit import (
    FreeVector,
    Morphism,
    PolyRing,
    PresentedModule,
    QQ,
    bass_cancel,
    huneke_rossi_check,
    ideal_as_module,
    Ideal,
    morphism_is_iso,
    snf_decompose,
)

T = PolyRing(QQ, ["x"])
x = T.gen(0)

# R + M with M = R^2 + R/(x); generator 0 is the free head
RM = PresentedModule(T, 4, [T.vector([0, 0, 0, x])])

rng = random.Random(3)
alpha = Morphism.identity(RM)
for _ in range(6):
    j = rng.randrange(3)
    k = rng.choice([i for i in range(4) if i != j])
    c = T.from_dict({(d,): rng.randint(-3, 3) for d in range(3)})
    cols = [FreeVector.unit(T, 4, i) for i in range(4)]
    cols[j] = cols[j] + FreeVector.unit(T, 4, k) * c
    alpha = Morphism(RM, RM, cols).compose(alpha)

print("alpha is an isomorphism:", morphism_is_iso(alpha).kind)
res = bass_cancel(alpha, seed=0)
print("candidates tried:", res.stats["candidates"])
print("induced map N -> M, columns:")
for col in res.morphism.columns:
    print("   ", [str(c) for c in col.comps])
print("intermediate identities hold:", res.verify())

# over k[t] the Smith form sees the same free rank the splitter finds
sf = snf_decompose(PresentedModule(T, 3, [T.vector([0, 0, x])]))
print("invariants:", [str(d) for d in sf.invariants], " free rank:", sf.free_rank)

# the dimension of Sym(I) for I = (x, y) matches the Fitting-ideal count
R = PolyRing(QQ, ["x", "y"])
a, b = R.gens()
rep = huneke_rossi_check(ideal_as_module(Ideal(R, [a, b])))
print("Sym dimension:", rep.sym_dim, " stratified bound:", rep.stratified, " match:", rep.match)
