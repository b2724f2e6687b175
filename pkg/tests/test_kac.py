from fractions import Fraction

import pytest

from hopflab import families as fam
from hopflab import kac
from hopflab.core import LinForm, conv_inverse, convolve, is_hopf_morphism, unit_biform
from hopflab.errors import NontrivialActions, NotAHopfMap, NotLazyAlgebraMap
from hopflab.lazy import coboundary, is_lazy2, is_left_cocycle
from hopflab.oracle import brute_pairings
from hopflab.scalars import CyclotomicField, PrimeField

SIGN = [[1, 1], [1, -1]]


@pytest.fixture(scope="module")
def z2_pair():
    K = fam.z2()
    return fam.trivial_matched_pair(K, K)


def test_trivial_pairing_is_central(h4, z2_pair):
    for mp in (fam.trivial_matched_pair(h4, h4), z2_pair, fam.drinfeld_matched_pair(h4)):
        assert kac.is_central_pairing(kac.trivial_pairing(mp), mp)


def test_sign_pairing(z2_pair):
    beta = kac.CentralPairing(z2_pair, SIGN)
    assert kac.is_central_pairing(beta)
    assert beta("g", "g") == -1
    assert convolve(beta.as_form(), beta.as_form()) == kac.trivial_pairing(z2_pair).as_form()


def test_non_multiplicative_pairing_fails(z2_pair):
    fails = kac.central_pairing_failures(kac.CentralPairing(z2_pair, [[1, 1], [1, 2]]))
    assert fails


def test_only_trivial_pairing_with_e1_over_f3():
    H = fam.sweedler(PrimeField(3))
    E1 = fam.en_algebra(1, PrimeField(3))
    ps = brute_pairings(E1, H)
    assert len(ps) == 1
    assert ps[0].m == kac.trivial_pairing(ps[0].mp).m


def test_lambda_of_counits(h4):
    mp = fam.drinfeld_matched_pair(h4)
    beta = kac.lambda_map(mp.B.counit_form(), mp.A.counit_form(), mp)
    assert beta == kac.trivial_pairing(mp)


def test_lambda_rejects_nonlazy_input(h4):
    mp = fam.drinfeld_matched_pair(h4)
    with pytest.raises(NotLazyAlgebraMap):
        kac.lambda_map(mp.B.counit_form(), LinForm(mp.A, [1, -1, 0, 0]), mp)


def test_lambda_trivial_for_trivial_actions(z2_pair):
    K = z2_pair.A
    for u in (1, -1):
        for v in (1, -1):
            beta = kac.lambda_map(LinForm(K, [1, u]), LinForm(K, [1, v]), z2_pair)
            assert beta == kac.trivial_pairing(z2_pair)


def test_lambda_on_s3():
    K = CyclotomicField(3)
    z = K.zeta
    mp = fam.s3_matched_pair(K)
    D = kac.bowtie(mp)
    fB, fA = LinForm(mp.B, [1, z, z * z]), LinForm(mp.A, [1, -1])
    beta = kac.lambda_map(fB, fA, mp)
    assert kac.is_central_pairing(beta)
    assert beta != kac.trivial_pairing(mp)
    lhs = kac.sigma_from_pairing(beta)
    assert lhs == coboundary(kac.tensor_linform(conv_inverse(fB), conv_inverse(fA), D))


def test_sigma_of_trivial(z2_pair):
    s = kac.sigma_from_pairing(kac.trivial_pairing(z2_pair))
    assert s == unit_biform(s.hopf)


def test_sigma_of_sign_pairing(z2_pair):
    s = kac.sigma_from_pairing(kac.CentralPairing(z2_pair, SIGN))
    assert is_lazy2(s) and is_left_cocycle(s)
    D = s.hopf
    # sigma(b (x) a, b' (x) a') = beta(b', a)
    assert s("1⊗g", "g⊗1") == -1
    assert s("g⊗1", "1⊗g") == 1
    assert s("g⊗g", "g⊗g") == -1
    assert kac.restrict(s) == (unit_biform(z2_pair.B), unit_biform(z2_pair.A))
    assert D.dim == 4


def test_normalize_class(h4, z2_pair):
    s = kac.sigma_from_pairing(kac.CentralPairing(z2_pair, SIGN))
    assert kac.normalize_class(s) == s
    J = kac.yamazaki_join(fam.sweedler_sigma(1, h4), fam.sweedler_sigma(2, h4))
    assert kac.normalize_class(J) == J


def test_normalize_polluted_cocycle(z2_pair):
    s = kac.sigma_from_pairing(kac.CentralPairing(z2_pair, SIGN))
    D = s.hopf
    nu = LinForm(D, [1, 3, Fraction(1, 2), -2])
    polluted = convolve(s, coboundary(nu))
    assert polluted != s
    out = kac.normalize_class(polluted)
    assert is_lazy2(out) and is_left_cocycle(out)
    assert kac.restrict(out) == kac.restrict(polluted)


def test_join_and_restrict(h4):
    e = unit_biform(h4)
    assert kac.yamazaki_join(e, e) == unit_biform(kac.yamazaki_join(e, e).hopf)
    for s, t in [(1, 2), (0, -1), (Fraction(1, 2), 3)]:
        sB, sA = fam.sweedler_sigma(s, h4), fam.sweedler_sigma(t, h4)
        J = kac.yamazaki_join(sB, sA)
        assert is_lazy2(J) and is_left_cocycle(J)
        assert kac.restrict(J) == (sB, sA)


def test_join_needs_trivial_actions(h4):
    mp = fam.drinfeld_matched_pair(h4)
    with pytest.raises(NontrivialActions):
        kac.yamazaki_join(unit_biform(mp.B), unit_biform(mp.A), mp)


def test_image_of_sigma_in_kernel_of_restriction(z2_pair):
    for beta in brute_pairings(fam.z2(PrimeField(5)), fam.z2(PrimeField(5))):
        s = kac.sigma_from_pairing(beta)
        B, A = beta.mp.B, beta.mp.A
        assert kac.restrict(s) == (unit_biform(B), unit_biform(A))


def test_l_morphisms(h4):
    trivial = kac.scalar_map(h4.counit_form(), h4, h4)
    assert kac.is_L_morphism(trivial, h4, h4)
    f = kac.scalar_map(LinForm(h4, [1, -1, 0, 0]), h4, h4)
    assert kac.l_conditions(f, h4, h4) == {"cocentral": ("x",)}
    with pytest.raises(NotAHopfMap):
        kac.is_L_morphism(f, h4, h4)


def test_pairing_to_hopf_map(z2_pair):
    beta = kac.CentralPairing(z2_pair, SIGN)
    f, target = kac.pairing_to_hopf_map(beta)
    assert is_hopf_morphism(f, z2_pair.B, target)
    assert kac.hopf_map_to_pairing(f, z2_pair) == beta
