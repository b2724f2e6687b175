import pytest

from hopflab import families as fam
from hopflab.core import tensor_hopf
from hopflab.errors import FieldMismatch, SearchSpaceTooLarge
from hopflab.oracle import (
    AbstractGroupTable,
    brute_pairings,
    enumerate_alg_maps,
    enumerate_lazy_units,
    enumerate_z2L,
    quotient_order,
)
from hopflab.kac import is_central_pairing, trivial_pairing
from hopflab.lazy import is_lazy2
from hopflab.scalars import PrimeField
from hopflab.twist import is_left_cocycle

F3, F5 = PrimeField(3), PrimeField(5)


def test_sweedler_over_f3():
    r = enumerate_z2L(fam.sweedler(F3))
    assert (len(r.z2l), len(r.b2l), r.residual_dim) == (3, 1, 4)
    assert r.quotient.isomorphic_to_cyclic(3)
    assert all(is_lazy2(s) and is_left_cocycle(s) for s in r.z2l)


def test_sweedler_cocycles_are_sigma_t():
    H = fam.sweedler(F3)
    got = {tuple(map(tuple, s.m)) for s in enumerate_z2L(H).z2l}
    want = {tuple(map(tuple, fam.sweedler_sigma(t, H).m)) for t in range(3)}
    assert got == want


def test_z2_over_f5():
    r = enumerate_z2L(fam.z2(F5))
    assert (len(r.z2l), len(r.b2l)) == (4, 2)
    assert r.quotient.isomorphic_to_cyclic(2)
    assert quotient_order(fam.z2(F3)) == 2


def test_report_fields():
    rep = enumerate_z2L(fam.z2(F5)).report()
    assert rep["quotient"]["order"] == 2
    assert rep["z2l"] == 4 and "seconds" in rep


def test_lazy_units():
    for F in (F3, F5):
        H = fam.sweedler(F)
        assert enumerate_lazy_units(H) == [H.counit_form()]
    assert len(enumerate_lazy_units(fam.z2(F5))) == 4


def test_alg_maps_sweedler():
    H = fam.sweedler(F3)
    got = {tuple(f.v) for f in enumerate_alg_maps(H)}
    assert got == {tuple(H.field(c) for c in (1, 1, 0, 0)), tuple(H.field(c) for c in (1, -1, 0, 0))}
    exact = enumerate_alg_maps(fam.sweedler(), exact=True)
    assert exact.certified and len(exact) == 2


def test_alg_maps_e2_and_groups():
    assert len(enumerate_alg_maps(fam.en_algebra(2), exact=True)) == 2
    assert len(enumerate_alg_maps(fam.en_algebra(2, F3))) == 2
    assert len(enumerate_alg_maps(fam.z2(F5))) == 2


def test_pairings():
    H = fam.sweedler(F3)
    zp = brute_pairings(H, H, 3)
    assert len(zp) == 1
    assert zp[0].m == trivial_pairing(zp[0].mp).m
    Z2 = fam.z2(F5)
    zp2 = brute_pairings(Z2, Z2)
    assert len(zp2) == 2
    assert all(is_central_pairing(b) for b in zp2)


def test_schur_yamazaki_count():
    Z2 = fam.z2(F5)
    h = quotient_order(Z2)
    hh = quotient_order(tensor_hopf(Z2, Z2))
    assert hh == h * h * len(brute_pairings(Z2, Z2)) == 8


def test_search_limit():
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_z2L(fam.z2(F5), limit=1)


def test_needs_prime_field():
    with pytest.raises(FieldMismatch):
        enumerate_z2L(fam.sweedler())
    with pytest.raises(FieldMismatch):
        enumerate_lazy_units(fam.sweedler(F3), p=5)


def test_nontrivial_actions_unsupported():
    H = fam.sweedler(F3)
    with pytest.raises(NotImplementedError):
        brute_pairings(H, H, trivial_actions=False)


def test_abstract_group_table():
    c4 = AbstractGroupTable([[(i + j) % 4 for j in range(4)] for i in range(4)])
    assert c4.is_group() and c4.is_abelian() and c4.isomorphic_to_cyclic(4)
    v4 = AbstractGroupTable([[i ^ j for j in range(4)] for i in range(4)])
    assert v4.is_group() and not v4.is_cyclic()
    assert not AbstractGroupTable([[0, 0], [0, 0]]).is_group()
