from __future__ import annotations

from math import factorial

import pytest

from lrbhopf.hopf import (
    ALGEBRA_TAGS,
    AlgebraM,
    AlgebraP,
    ClosureError,
    HopfDiagram,
    WellDefinednessError,
    AlgebraAL,
    AlgebraALStar,
    dims,
    structure_constants,
)
from lrbhopf.linalg import (
    BasisMap,
    check_bialgebra_laws,
    check_morphism,
    identity_map,
    is_injective_on_basis,
    is_surjective_on_basis,
)

from oracles import bell, fubini, pointed_face_count


def r(alg, x):
    return alg.render(x)


# -- coproduct examples ------------------------------------------------------------------


def test_coproduct_examples(diagram):
    P, M, N, S = (diagram.algebra(t) for t in "PMNS")
    assert r(P, P.coproduct(P.parse("M[1|2]"))) == "1 ⊗ M[1|2] + M[1] ⊗ M[1] + M[1|2] ⊗ 1"
    assert r(M, M.coproduct(M.parse("H[2|1]"))) == "1 ⊗ H[2|1] + 2*H[1] ⊗ H[1] + H[2|1] ⊗ 1"
    assert r(P, P.coproduct(P.parse("M[12]"))) == "1 ⊗ M[1,2] + M[1,2] ⊗ 1"
    assert r(N, N.coproduct(N.parse("H[(12),(1|2)]"))) == (
        "1 ⊗ H[(1,2),(1|2)] + H[(1),(1)] ⊗ H[(1),(1)] + H[(1,2),(1|2)] ⊗ 1")
    assert r(S, S.coproduct(S.parse("F[(1|2),(2|1)]"))) == (
        "1 ⊗ F[(1|2),(2|1)] + F[(1),(1)] ⊗ F[(1),(1)] + F[(1|2),(2|1)] ⊗ 1")


def test_coproduct_of_unit(diagram):
    for tag in ALGEBRA_TAGS:
        alg = diagram.algebra(tag)
        assert r(alg, alg.coproduct(alg.unit())) == "1 ⊗ 1"


def test_p_coproduct_counts_rank_one_faces(diagram, fam):
    # [DERIVED] number of terms = 2 + #{rank-1 K <= F}
    P = diagram.algebra("P")
    for F in fam.faces(4):
        expected = 2 + sum(1 for K in fam.rank_one(4) if fam.leq(4, K, F))
        assert sum(P.coproduct_basis((4, F)).values()) == expected


def test_m_coproduct_term_count(diagram, fam):
    # every one of the |T^n| maps contributes exactly one term
    M = diagram.algebra("M")
    for P in fam.faces(3):
        assert sum(M.coproduct_basis((3, P)).values()) == len(fam.t_set(3))


# -- product examples ---------------------------------------------------------------------


def test_product_examples(diagram):
    P, M, S, Q = (diagram.algebra(t) for t in "PMSQ")
    assert r(P, P.multiply(P.parse("M[1]"), P.parse("M[1]"))) == "M[1,2] + M[1|2] + M[2|1]"
    assert r(M, M.multiply(M.parse("H[1]"), M.parse("H[1]"))) == "H[1|2]"
    assert r(S, S.multiply(S.parse("F[(1),(1)]"), S.parse("F[(1),(1)]"))) == (
        "F[(1|2),(1|2)] + F[(1|2),(2|1)]")
    assert r(Q, Q.multiply(Q.parse("M[(1),(1)]"), Q.parse("M[(1),(1)]"))) == (
        "M[(1,2),(1|2)] + M[(1|2),(1|2)] + M[(2|1),(2|1)]")


def test_unit_is_two_sided(diagram):
    for tag in ALGEBRA_TAGS:
        alg = diagram.algebra(tag)
        for key in alg.basis(2):
            x = alg.element(key)
            assert alg.multiply(alg.unit(), x) == x == alg.multiply(x, alg.unit())


def test_r_product_mirrors_s(diagram):
    R = diagram.algebra("R")
    assert r(R, R.multiply(R.parse("K[(1),(1)]"), R.parse("K[(1),(1)]"))) == (
        "K[(1|2),(1|2)] + K[(2|1),(1|2)]")


def test_m_product_is_shifted_concatenation(diagram):
    M = diagram.algebra("M")
    assert r(M, M.multiply(M.parse("H[2|1]"), M.parse("H[1|2]"))) == "H[2|1|3|4]"


# -- maps -----------------------------------------------------------------------------------


def test_supp_examples(diagram):
    supp = diagram.map("supp")
    AL, M = diagram.algebra("A_L"), diagram.algebra("M")
    assert r(AL, supp(M.parse("H[1|2]"))) == r(AL, supp(M.parse("H[2|1]"))) == "h[{1}{2}]"
    assert supp(M.unit()) == AL.unit()


def test_lune_examples(diagram):
    lune = diagram.map("lune")
    N = diagram.algebra("N")
    assert lune(N.parse("H[(1|2),(1|2)]")) == lune(N.parse("H[(2|1),(2|1)]"))
    assert lune(N.parse("H[(12),(1|2)]")) != lune(N.parse("H[(12),(2|1)]"))


def test_star_examples(diagram):
    P, Q = diagram.algebra("P"), diagram.algebra("Q")
    s = diagram.map("supp*")
    ALs, AZs = diagram.algebra("A_L*"), diagram.algebra("A_Z*")
    assert r(P, s(ALs.parse("m[{1}{2}]"))) == "M[1|2] + M[2|1]"
    assert s(ALs.unit()) == P.unit()
    lst = diagram.map("lune_star")
    assert r(Q, lst(AZs.parse("m[(1|2),(1|2)]"))) == "M[(1|2),(1|2)] + M[(2|1),(2|1)]"


@pytest.mark.parametrize("name", ["supp*", "lune*"])
def test_star_maps_injective(diagram, name):
    f = diagram.map(name)
    assert all(is_injective_on_basis(f, n) for n in range(6))


@pytest.mark.parametrize("name", ["supp", "lune"])
def test_quotient_maps_surjective(diagram, name):
    f = diagram.map(name)
    assert all(is_surjective_on_basis(f, n) for n in range(6))


def test_identity_map_is_morphism(diagram):
    assert check_morphism(identity_map(diagram.algebra("S")), 3).passed


def test_swapped_flats_not_a_morphism(diagram):
    supp = diagram.map("supp")
    AL = diagram.algebra("A_L")

    def swapped(key):
        img = supp.basis_image(key)
        (k, _), = img.terms.items()
        if k[0] == 2:
            return AL.element((2, 1 - k[1]))
        return img

    bad = BasisMap("supp-swapped", supp.source, AL, swapped)
    rep = check_morphism(bad, 3)
    assert not rep.passed and rep.failure["law"]


# -- dimensions [DERIVED from independent oracles] -----------------------------------------


def test_dims(diagram):
    assert dims(diagram, "P", 5) == dims(diagram, "M", 5) == [fubini(n) for n in range(6)]
    assert dims(diagram, "A_L", 5) == dims(diagram, "A_L*", 5) == [bell(n) for n in range(6)]
    assert dims(diagram, "Q", 5) == dims(diagram, "N", 5) == [pointed_face_count(n) for n in range(6)]
    sq = [1] + [factorial(n) ** 2 for n in range(1, 6)]
    assert dims(diagram, "S", 5) == dims(diagram, "R", 5) == sq
    assert dims(diagram, "A_Z", 5) == dims(diagram, "A_Z*", 5)


# -- bialgebra laws (exhaustive, small) -------------------------------------------------------


@pytest.mark.parametrize("tag", ALGEBRA_TAGS)
def test_bialgebra_laws_degree3(diagram, tag):
    rep = check_bialgebra_laws(diagram.algebra(tag), 3)
    assert rep.passed, rep.to_text()


def test_compatibility_witness(diagram):
    P = diagram.algebra("P")
    x = P.parse("M[1]")
    lhs = P.coproduct(P.multiply(x, x))
    rhs = P.multiply_tensor(P.coproduct(x), P.coproduct(x))
    assert lhs == rhs
    assert r(P, lhs) == (
        "1 ⊗ M[1,2] + 1 ⊗ M[1|2] + 1 ⊗ M[2|1] + 2*M[1] ⊗ M[1] + M[1,2] ⊗ 1 + M[1|2] ⊗ 1 + M[2|1] ⊗ 1")


# -- audits and constructed failures -----------------------------------------------------------


@pytest.mark.parametrize("tag", ["A_L", "A_Z", "A_L*", "A_Z*"])
def test_audits_pass(diagram, tag):
    assert diagram.algebra(tag).audit(4) > 0


class _BrokenM(AlgebraM):
    """H[1|2] * H[1] reported as H[2|1|3]: breaks representative independence."""

    def _product(self, a, b):
        out = super()._product(a, b)
        if a == (2, self.family.index(2, "1|2")) and b[0] == 1:
            return {(3, self.family.index(3, "1|2|3")): 1}
        if a == (2, self.family.index(2, "2|1")) and b[0] == 1:
            return {(3, self.family.index(3, "1,2|3")): 1}
        return out


def test_quotient_not_well_defined_is_reported(fam):
    q = AlgebraAL(_BrokenM(fam), fam)
    with pytest.raises(WellDefinednessError):
        q.audit(3)


class _BrokenP(AlgebraP):
    """M[1] * M[1] missing the M[2|1] term: leaves the fiber-sum span."""

    def _product(self, a, b):
        out = dict(super()._product(a, b))
        if a[0] == b[0] == 1:
            out.pop((2, self.family.index(2, "2|1")), None)
        return out


def test_subalgebra_closure_failure_is_reported(fam):
    s = AlgebraALStar(_BrokenP(fam), fam)
    with pytest.raises(ClosureError):
        s.audit(2)


# -- structure constants -----------------------------------------------------------------------


def test_structure_constants_s_degree2(diagram):
    doc = structure_constants(diagram.algebra("S"), 2)
    assert doc["product"] == [
        ["F[(1),(1)]", "F[(1),(1)]", "F[(1|2),(1|2)]", "1"],
        ["F[(1),(1)]", "F[(1),(1)]", "F[(1|2),(2|1)]", "1"],
    ]
    assert len(doc["coproduct"]) == 12


def test_diagram_rejects_unknown_tags(fam):
    d = HopfDiagram(fam)
    with pytest.raises(ValueError):
        d.algebra("X")
    with pytest.raises(ValueError):
        d.map("road")
