import random

import pytest

from freesplit import CertificateError, Inconclusive, NoFieldElementLeft, NotIso
from freesplit.coefficients import GF, QQ
from freesplit.groebner import Ideal
from freesplit.modules import (
    Morphism,
    PresentedModule,
    delta_at,
    hom_apply,
    hom_dual,
    ideal_as_module,
    morphism_is_iso,
    snf_decompose,
)
from freesplit.polyring import PolyRing
from freesplit.splitter import (
    ObstructionReport,
    SplitCertificate,
    avoid_primes,
    bass_cancel,
    free_basic_certificate,
    huneke_rossi_check,
    minimal_generator_check,
    projective_unimodular_element,
    split_off,
    split_search,
    sym_presentation,
)

from helpers import cancellation_target, elementary_scramble, koszul_module, free_rich_modules
from oracles import random_vector


def test_sym_presentation_examples(Rxy, Rx):
    S = sym_presentation(koszul_module())
    x, y = S.ring.gen(0), S.ring.gen(1)
    assert S.ideal == Ideal(S.ring, [x * S.u(0) + y * S.u(1)])
    S = sym_presentation(PresentedModule.free(Rxy, 2))
    assert S.ideal.is_zero() and S.ring.nvars == 4
    T = PresentedModule(Rx, 1, [Rx.vector([Rx.gen(0)])])
    S = sym_presentation(T)
    assert S.ideal == Ideal(S.ring, [S.ring.gen(0) * S.u(0)])


def test_sym_presentation_of_ideal(Rxy):
    x, y = Rxy.gens()
    S = sym_presentation(Ideal(Rxy, [x, y]))
    assert S.dim() == 3


def test_minimal_generator_examples(Rxy):
    F = PresentedModule.free(Rxy, 2)
    assert minimal_generator_check(F, [1, 0], (0, 0))
    assert not minimal_generator_check(F, [0, 0], (3, 1))
    assert minimal_generator_check(F, [1, 1], (0, 0))


def projective_modules(R):
    x, y = R.gens()
    return [
        PresentedModule.free(R, 2),
        PresentedModule.free(R, 3),
        PresentedModule(R, 3, [R.vector([x, y, 1])]),
        PresentedModule(R, 2, [R.vector([1 + x * y, x])]),
    ]


def test_minimal_generator_two_sides_agree(Rxy):
    rng = random.Random(17)
    for P in projective_modules(Rxy):
        seen = set()
        for _ in range(15):
            r = [rng.randint(-2, 2) for _ in range(P.rank)]
            pt = (rng.randint(-2, 2), rng.randint(-2, 2))
            a = minimal_generator_check(P, r, pt, method="residue")
            b = minimal_generator_check(P, r, pt, method="sym")
            assert a == b
            seen.add(a)
        assert True in seen


def test_minimal_generator_in_image_of_relations(Rxy):
    # r lies in the column span of A(m): not a minimal generator
    P = PresentedModule(Rxy, 3, [Rxy.vector(["x", "y", 1])])
    assert not minimal_generator_check(P, [2, 3, 1], (2, 3))
    assert minimal_generator_check(P, [1, 0, 0], (2, 3))


def test_avoid_primes_examples():
    U = PolyRing(QQ, ["u1", "u2"])
    u1 = U.gen(0)
    assert avoid_primes([Ideal(U, [u1]), Ideal(U, [u1 - 1])], 0) == 2
    assert avoid_primes([Ideal(U, [u1**2 + 1])], 0) == 0
    assert avoid_primes([], 0) == 0


def test_avoid_primes_finite_field():
    F2 = PolyRing(GF(2), ["u"])
    u = F2.gen(0)
    assert avoid_primes([Ideal(F2, [u])], 0) == 1
    with pytest.raises(NoFieldElementLeft):
        avoid_primes([Ideal(F2, [u]), Ideal(F2, [u + 1])], 0)


def test_free_basic_examples(Rxy, Rx):
    F = PresentedModule.free(Rxy, 2)
    c = free_basic_certificate(F, hom_dual(F), [1, 0])
    assert isinstance(c, SplitCertificate)
    assert c.functionals[0].vector == Rxy.vector([1, 0])
    c.verify()
    M = koszul_module()
    R = M.ring
    ob = free_basic_certificate(M, hom_dual(M), [0, 1])
    assert isinstance(ob, ObstructionReport) and not ob.inconclusive
    assert ob.trace_ideal == Ideal(R, [R.gen(0)])
    assert not ob.gb.reduce(R.one()).is_zero()
    x = Rx.gen(0)
    M = PresentedModule(Rx, 2, [Rx.vector([0, x])])
    c = free_basic_certificate(M, hom_dual(M), [1, 1])
    assert c.functionals[0].vector == Rx.vector([1, 0])


def test_split_search_examples():
    M = free_rich_modules()[0]
    c = split_search(M, rank=1, seed=1)
    assert c.status == "ok" and c.verify()
    assert hom_apply(c.functionals[0], c.elements[0]) == M.ring.one()
    K = PolyRing(QQ, [])
    c = split_search(PresentedModule.free(K, 1))
    assert c.elements[0] == K.vector([1]) and c.functionals[0].vector == K.vector([1])
    ob = split_search(koszul_module())
    assert ob.status == "obstruction"
    R = ob.trace_ideal.ring
    assert ob.trace_ideal == Ideal(R, list(R.gens()))
    assert ob.verify()


def test_split_full_rank_and_beyond(Rxy):
    F = PresentedModule.free(Rxy, 3)
    c = split_search(F, rank=3)
    assert c.rank == 3 and c.verify()
    ob = split_search(F, rank=4)
    assert ob.status == "obstruction" and ob.stage == 4 and ob.partial.rank == 3


def test_split_rank_two_on_module_with_torsion():
    for M in free_rich_modules():
        c = split_search(M, rank=2, seed=3)
        assert c.rank == 2 and c.verify()


def test_restricted_splitting(Rxy):
    x, y = Rxy.gens()
    F = PresentedModule.free(Rxy, 2)
    ob = split_search(F, restrict_to=[[x, 0], [0, y]])
    assert ob.status == "obstruction"
    c = split_search(F, restrict_to=[[x, 1], [0, y]])
    assert c.status == "ok" and c.verify()
    for xj, coeffs in zip(c.elements, c.s_coeffs):
        total = Rxy.vector([x, 1]) * coeffs[0] + Rxy.vector([0, y]) * coeffs[1]
        assert total == xj


def test_E_restriction(Rxy):
    F = PresentedModule.free(Rxy, 2)
    E = hom_dual(F).scaled(Rxy.gen(0))
    ob = split_search(F, E)
    assert ob.status == "obstruction" and ob.trace_ideal <= Ideal(Rxy, [Rxy.gen(0)])
    assert split_search(F, hom_dual(F)).status == "ok"


def test_obstruction_at_second_stage(Rxy):
    x, y = Rxy.gens()
    M = PresentedModule(Rxy, 3, [Rxy.vector([0, x, y])])
    c = split_search(M, rank=1)
    assert c.status == "ok"
    ob = split_search(M, rank=2)
    assert ob.status == "obstruction" and ob.stage == 2
    assert ob.trace_ideal <= Ideal(Rxy, [x, y])


def test_determinism():
    M = free_rich_modules()[1]
    a = split_search(M, rank=2, seed=7)
    b = split_search(M, rank=2, seed=7)
    assert a.elements == b.elements and [f.vector for f in a.functionals] == [f.vector for f in b.functionals]


def test_certificate_tampering_detected():
    M = free_rich_modules()[0]
    c = split_search(M, rank=1)
    c.elements[0] = c.elements[0] * 2
    with pytest.raises(CertificateError):
        c.verify()


def test_inconclusive_on_tiny_budget(Rx):
    # trace of <x e1, (1-x) e1> is the unit ideal, yet neither generator splits off alone
    x = Rx.gen(0)
    F = PresentedModule.free(Rx, 2)
    res = split_search(F, restrict_to=[[x, 0], [1 - x, 0]], budget=2)
    assert res.status == "inconclusive" and res.inconclusive
    assert res.stats["candidates"] == 2 and res.trace_ideal.is_unit()
    c = split_search(F, restrict_to=[[x, 0], [1 - x, 0]])
    assert c.status == "ok" and c.verify()


def test_delta_drops_after_split_off():
    for M in free_rich_modules():
        E = hom_dual(M)
        S = [g.vector for g in M.gens()]
        c = split_search(M, E, rank=1, seed=2)
        M2, E2, S2 = split_off(M, E, S, c.elements[0], c.functionals[0])
        rng = random.Random(4)
        for _ in range(8):
            pt = tuple(rng.randint(-3, 3) for _ in range(M.ring.nvars))
            assert delta_at(M2, S2, E2, pt) == delta_at(M, S, E, pt) - 1


def test_perturbation_stability():
    rng = random.Random(13)
    for M in free_rich_modules():
        c = split_search(M, rank=1)
        xv = c.elements[0]
        for _ in range(4):
            z = random_vector(M.ring, rng, M.rank, 1)
            res = split_search(M, rank=1, restrict_to=[xv + z, z], seed=rng.randint(0, 99))
            assert res.status == "ok" and res.verify()


def test_split_search_matches_snf_free_rank():
    T = PolyRing(QQ, ["t"])
    rng = random.Random(99)
    for _ in range(8):
        g, c = rng.randint(1, 3), rng.randint(0, 2)
        M = PresentedModule(T, g, [random_vector(T, rng, g, 2) for _ in range(c)])
        rank = 0
        while split_search(M, rank=rank + 1, seed=rank).status == "ok":
            rank += 1
        assert rank == snf_decompose(M).free_rank


def test_projective_unimodular_element(Rxy):
    x, y = Rxy.gens()
    P = PresentedModule(Rxy, 4, [Rxy.vector([x, y, 1, 0])])
    r, cert = projective_unimodular_element(P)
    assert cert.verify()
    # rank 2 over a 2-dimensional ring is below the range where the elimination must be nonzero
    assert projective_unimodular_element(PresentedModule(Rxy, 2, [Rxy.vector([x, y])])) is None


def test_bass_cancel_identity():
    K = PolyRing(QQ, ["x"])
    R2 = PresentedModule.free(K, 2)
    res = bass_cancel(Morphism.identity(R2))
    assert res.morphism == Morphism.identity(PresentedModule.free(K, 1))
    assert res.verify()


def test_bass_cancel_swap_over_field():
    K = PolyRing(QQ, [])
    R2 = PresentedModule.free(K, 2)
    swap = Morphism(R2, R2, [K.vector([0, 1]), K.vector([1, 0])])
    res = bass_cancel(swap)
    (col,) = res.morphism.columns
    assert col[0].is_constant() and not col[0].is_zero()
    assert morphism_is_iso(res.morphism)


@pytest.mark.parametrize("seed", range(3))
def test_bass_cancel_scramble(seed):
    RM = cancellation_target()
    alpha = elementary_scramble(RM, seed)
    res = bass_cancel(alpha, seed=seed)
    assert res.verify()
    assert morphism_is_iso(res.morphism).kind == "iso"


def test_bass_cancel_rejects_non_iso(Rx):
    F2 = PresentedModule.free(Rx, 2)
    x = Rx.gen(0)
    with pytest.raises(NotIso):
        bass_cancel(Morphism(F2, F2, [Rx.vector([x, 0]), Rx.vector([0, 1])]))


def test_bass_cancel_budget_exhausted():
    # R + R/(x) -> R + R/(x) over Q[x] where alpha(1,0) = (x, 1): no x1 + a*z is free-basic in R/(x)
    T = PolyRing(QQ, ["x"])
    x = T.gen(0)
    RM = PresentedModule(T, 2, [T.vector([0, x])])
    alpha = Morphism(RM, RM, [T.vector([1, 1]), T.vector([0, 1])])
    assert morphism_is_iso(alpha)
    with pytest.raises(Inconclusive) as info:
        bass_cancel(alpha, budget=5)
    assert info.value.stats["candidates"] == 5


def test_huneke_rossi_examples(Rxy, Rx):
    x, y = Rxy.gens()
    rep = huneke_rossi_check(ideal_as_module(Ideal(Rxy, [x, y])))
    assert rep.match and rep.sym_dim == 3
    rep = huneke_rossi_check(PresentedModule.free(Rxy, 3))
    assert rep.match and rep.sym_dim == 5
    rep = huneke_rossi_check(PresentedModule(Rx, 1, [Rx.vector([Rx.gen(0)])]))
    assert rep.match and rep.sym_dim == 1


def test_huneke_rossi_over_domain_quotient():
    R = PolyRing(QQ, ["x", "y", "z"])
    x, y, z = R.gens()
    base = Ideal(R, [x * y - z**2])
    M = PresentedModule(R, 2, [R.vector([x, z]), R.vector([z, y])])
    rep = huneke_rossi_check(M, base)
    assert rep.match
