"""Module constructions shared by the splitter, acceptance and CLI tests."""

import random

from freesplit.coefficients import QQ
from freesplit.modules import Morphism, PresentedModule
from freesplit.polyring import FreeVector, PolyRing


def free_rich_modules():
    """R^2 + R/(x) over Q[x] and R^3 + R/(x,y) over Q[x,y]."""
    T = PolyRing(QQ, ["x"])
    x = T.gen(0)
    A = PresentedModule(T, 3, [T.vector([0, 0, x])])
    R = PolyRing(QQ, ["x", "y"])
    x, y = R.gens()
    B = PresentedModule(R, 4, [R.vector([0, 0, 0, x]), R.vector([0, 0, 0, y])])
    return [A, B]


def koszul_module():
    R = PolyRing(QQ, ["x", "y"])
    x, y = R.gens()
    return PresentedModule(R, 2, [R.vector([x, y])])


def cancellation_target():
    """R + M with M = R^2 + R/(x) over Q[x]; generator 0 is the free head."""
    T = PolyRing(QQ, ["x"])
    x = T.gen(0)
    return PresentedModule(T, 4, [T.vector([0, 0, 0, x])])


def elementary_scramble(RM, seed, steps=6, free=3):
    """Random product of elementary automorphisms of ``RM`` moving only free generators."""
    rng = random.Random(seed)
    ring = RM.ring
    H = Morphism.identity(RM)
    for _ in range(steps):
        j = rng.randrange(free)
        k = rng.choice([i for i in range(RM.rank) if i != j])
        c = ring.from_dict({(d,) + (0,) * (ring.nvars - 1): rng.randint(-3, 3) for d in range(3)})
        cols = [FreeVector.unit(ring, RM.rank, i) for i in range(RM.rank)]
        cols[j] = cols[j] + FreeVector.unit(ring, RM.rank, k) * c
        H = Morphism(RM, RM, cols).compose(H)
    return H


def morphism_session(H):
    """Session text declaring ``H`` on a module given by column relations over one variable."""
    ring = H.source.ring

    def vec(v):
        return "[" + ", ".join(str(c) for c in v.comps) + "]"

    def module(name, P):
        if not P.relations:
            return f"module {name} = free {P.rank};"
        return f"module {name} = cokernel rows {P.rank} [ " + ", ".join(vec(c) for c in P.relations) + " ];"

    lines = [
        f"ring R = Q[{', '.join(ring.names)}] order grevlex;",
        module("S", H.source),
        module("T", H.target),
        "morphism H : S -> T = [ " + ", ".join(vec(c) for c in H.columns) + " ];",
    ]
    return "\n".join(lines) + "\n"
