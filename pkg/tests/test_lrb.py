from __future__ import annotations

import numpy as np
import pytest

from lrbhopf.lrb import (
    FamilyError,
    GradeError,
    PointedFace,
    chambers,
    hat_apply,
    is_lrb,
    leq,
    lune_classes,
    reg,
    supp_classes,
    t_set,
)

from conftest import unvalidated
from oracles import bell, pointed_face_count


def face(fam, text):
    return fam.parse_face(text)[1]


# -- is_lrb ----------------------------------------------------------------------------


def test_is_lrb_b2_and_grade0(fam):
    rep = is_lrb(fam, 2)
    assert rep.passed and rep.pairs_checked == 9
    assert is_lrb(fam, 0).passed


def test_is_lrb_reports_injected_counterexample(b3_copy):
    grade = b3_copy["grades"][3]
    labels = grade["faces"]
    x, y = labels.index("1|2,3"), labels.index("3|2|1")
    grade["product"][x][y] = labels.index("1,2|3")
    rep = is_lrb(unvalidated(b3_copy), 3)
    assert not rep.passed
    assert rep.counterexample["x"] == "1|2,3" and rep.counterexample["y"] == "3|2|1"


def test_is_lrb_grade_out_of_range(fam):
    with pytest.raises(GradeError):
        is_lrb(fam, 7)


# -- order, chambers -----------------------------------------------------------------------


def test_leq_examples(fam):
    assert leq(fam, 2, face(fam, "1,2"), face(fam, "2|1"))
    assert leq(fam, 2, face(fam, "2|1"), face(fam, "2|1"))
    assert not leq(fam, 2, face(fam, "1|2"), face(fam, "2|1"))


def test_chambers(fam):
    assert [fam.label(2, c) for c in chambers(fam, 2)] == ["1|2", "2|1"]
    assert chambers(fam, 1) == [0] and chambers(fam, 0) == [0]
    assert len(chambers(fam, 3)) == 6


@pytest.mark.parametrize("n", range(6))
def test_order_is_partial_with_unit_minimum(fam, n):
    L = fam.leq_matrix(n)
    assert L.diagonal().all()
    assert not (L & L.T & ~np.eye(len(L), dtype=bool)).any()
    Li = L.astype(np.int64)
    assert not (((Li @ Li) > 0) & ~L).any()
    e = fam.empty(n)
    assert (fam.table(n)[e] == np.arange(fam.size(n))).all()


@pytest.mark.parametrize("n", range(6))
def test_degree_and_composition(fam, n):
    for F in fam.faces(n):
        comp = fam.b_iso(n, F).composition
        assert len(comp) == fam.degree(n, F) == fam.rank(n, F) + 1
        assert sum(comp) == n


# -- flats -------------------------------------------------------------------------------


def test_flats_b2(fam):
    flats, order = supp_classes(fam, 2)
    assert sorted(sorted(fam.label(2, x) for x in fl.members) for fl in flats) == [["1,2"], ["1|2", "2|1"]]
    assert order.shape == (2, 2)
    assert len(supp_classes(fam, 0)[0]) == 1


@pytest.mark.parametrize("n", range(6))
def test_flat_counts_are_bell_numbers(fam, n):
    assert len(fam.flats(n)) == bell(n)


@pytest.mark.parametrize("n", range(6))
def test_supp_order_characterisation_and_monotone(fam, n):
    _, order = fam.supp_classes(n)
    of = fam.flat_of(n)
    t = fam.table(n)
    size = fam.size(n)
    pre = t.T == np.arange(size)[None, :]  # pre[x, y] iff yx = y
    assert (order[of[:, None], of[None, :]] == pre).all()
    L = fam.leq_matrix(n)
    assert (order[of[:, None], of[None, :]] | ~L).all()


def test_flat_representative_is_least_label(fam):
    for n in range(5):
        for fl in fam.flats(n):
            assert fam.label(n, fl.representative) == min(fam.label(n, x) for x in fl.members)


# -- lunes ------------------------------------------------------------------------------


def test_pointed_faces_b2(fam):
    pts = fam.pointed_faces(2)
    assert len(pts) == 4
    assert {fam.pair_text(2, p) for p in pts} == {
        "(1,2),(1|2)", "(1,2),(2|1)", "(1|2),(1|2)", "(2|1),(2|1)"}


@pytest.mark.parametrize("n", range(6))
def test_pointed_face_count_bruteforce(fam, n):
    assert len(fam.pointed_faces(n)) == pointed_face_count(n)


def test_lune_classes_b2(fam):
    lunes, _ = lune_classes(fam, 2)
    groups = sorted(sorted(fam.pair_text(2, p) for p in lu.members) for lu in lunes)
    assert groups == [["(1,2),(1|2)"], ["(1,2),(2|1)"], ["(1|2),(1|2)", "(2|1),(2|1)"]]
    assert len(lune_classes(fam, 1)[0]) == 1


@pytest.mark.parametrize("n", range(6))
def test_lune_order_characterisation_and_monotone(fam, n):
    lunes, order = fam.lune_classes(n)
    pts = fam.pointed_faces(n)
    t = fam.table(n)
    L = fam.leq_matrix(n)
    of = np.array([fam.lune_of(n, p) for p in pts])
    xs = np.array([p.F for p in pts])
    cs = np.array([p.D for p in pts])
    pre = (t[xs[None, :], xs[:, None]] == xs[None, :]) & (t[xs[None, :], cs[:, None]] == cs[None, :])
    assert (order[of[:, None], of[None, :]] == pre).all()
    # (x,c) <= (y,d) componentwise implies lune order
    le = L[xs[:, None], xs[None, :]] & L[cs[:, None], cs[None, :]]
    assert (order[of[:, None], of[None, :]] | ~le).all()


# -- regions ----------------------------------------------------------------------------


def test_reg_examples(fam):
    c = face(fam, "1|2")
    assert reg(fam, 2, face(fam, "1|2"), c) == frozenset(fam.faces(2))
    e = fam.empty(2)
    assert reg(fam, 2, e, c) == frozenset(y for y in fam.faces(2) if fam.leq(2, y, c))


def test_reg_rejects_non_pointed(fam):
    with pytest.raises(FamilyError):
        reg(fam, 2, face(fam, "2|1"), face(fam, "1|2"))


@pytest.mark.parametrize("n", range(5))
def test_reg_constant_on_lunes(fam, n):
    for lu in fam.lunes(n):
        regions = {fam.reg(n, p.F, p.D) for p in lu.members}
        assert len(regions) == 1


def test_zone_classes_b2_bruteforce(fam):
    zones = fam.zone_classes(2)
    by_reg = {}
    for lu in fam.lunes(2):
        p = lu.representative
        by_reg.setdefault(fam.reg(2, p.F, p.D), []).append(lu.index)
    assert sorted(ids for _, ids in zones) == sorted(by_reg.values())


# -- T^n and hats ------------------------------------------------------------------------


def test_t_set_examples(fam):
    assert [fam.t_text(f) for f in t_set(fam, 2)] == ["b_{1|2}", "b_{2|1}", "b^2", "B^2"]
    assert [fam.t_text(f) for f in t_set(fam, 2, fam.empty(2))] == ["b^2", "B^2"]
    assert [fam.t_text(f) for f in t_set(fam, 0)] == ["b^0"]


@pytest.mark.parametrize("n", range(1, 6))
def test_t_set_membership(fam, n):
    for F in fam.faces(n):
        sub = t_set(fam, n, F)
        assert all(fam.leq(n, f.K, F) for f in sub)
        assert len(sub) == 2 + sum(1 for K in fam.rank_one(n) if fam.leq(n, K, F))


def test_hat_apply_examples(fam):
    b1 = t_set(fam, 2)[0]
    assert hat_apply(fam, b1, face(fam, "2|1")) == (0, 0)
    left, right = t_set(fam, 3)[-2:]
    P = face(fam, "2|1,3")
    assert hat_apply(fam, left, P) == (0, P)
    assert hat_apply(fam, right, P) == (P, 0)


@pytest.mark.parametrize("n", range(6))
def test_hat_of_minimum_is_pair_of_minima(fam, n):
    for f in t_set(fam, n):
        a, b = f.grades
        assert hat_apply(fam, f, fam.empty(n)) == (fam.empty(a), fam.empty(b))


def test_pointed_face_is_ordered():
    assert PointedFace(0, 2) < PointedFace(1, 0)
