from fractions import Fraction

import pytest

from hopflab import families as fam
from hopflab.core import BiForm, LinForm, conv_inverse, convolve, unit_biform
from hopflab.errors import NotLazy, ShapeError
from hopflab.lazy import coboundary, is_lazy1
from hopflab.linalg import identity, mat_mul
from hopflab.projreps import (
    ProjRep,
    basic_morphism_space,
    check_projrep,
    dual_projrep,
    evaluation_identities,
    is_basic_morphism,
    projrep_failures,
    regular_projrep,
    tensor_projrep,
    unit_rep,
)


def mats(X):
    return [[list(r) for r in M] for M in X.pi]


def test_regular_of_trivial_cocycle(h4):
    X = regular_projrep(h4, unit_biform(h4))
    for a in range(4):
        for b in range(4):
            col = [X.pi[a][i][b] for i in range(4)]
            assert col == list(h4.mult[a][b])
    assert check_projrep(X)


@pytest.mark.parametrize("t", [0, 1, 4, Fraction(-2, 3)])
def test_regular_square_of_x(h4, t):
    X = regular_projrep(h4, fam.sweedler_sigma(t, h4))
    P = mats(X)[2]
    F = h4.field
    assert mat_mul(P, P, F) == [[F(t) / 2 * c for c in r] for r in identity(4, F)]
    assert check_projrep(X)


def test_perturbed_pi_fails(h4):
    X = regular_projrep(h4, fam.sweedler_sigma(4, h4))
    pi = mats(X)
    pi[2][0][1] += 1
    fails = projrep_failures(ProjRep(X.sigma, 4, pi))
    assert fails == {"multiplicative": ("g", "x")}


def test_shape_and_laziness_checked(h4):
    with pytest.raises(ShapeError):
        ProjRep(unit_biform(h4), 2, [identity(2, h4.field)] * 3)
    with pytest.raises(NotLazy):
        regular_projrep(h4, coboundary(LinForm(h4, [1, 1, 1, 0])))


def test_tensor_with_unit(h4):
    X = regular_projrep(h4, fam.sweedler_sigma(1, h4))
    T = tensor_projrep(X, unit_rep(h4))
    assert T.dim == X.dim
    assert T.pi == X.pi
    assert T.sigma == X.sigma


def test_tensor_cocycle(h4):
    s, w = fam.sweedler_sigma(1, h4), fam.sweedler_sigma(3, h4)
    T = tensor_projrep(regular_projrep(h4, s), regular_projrep(h4, w))
    assert T.sigma == convolve(s, w)
    assert T.dim == 16


def test_tensor_associative(h4):
    X = regular_projrep(h4, fam.sweedler_sigma(1, h4))
    Y = unit_rep(h4)
    Z = regular_projrep(h4, fam.sweedler_sigma(-2, h4))
    L = tensor_projrep(tensor_projrep(X, Y), Z)
    R = tensor_projrep(X, tensor_projrep(Y, Z))
    assert L.pi == R.pi and L.sigma == R.sigma


def test_dual_of_unit(h4):
    D = dual_projrep(unit_rep(h4))
    assert D.pi == unit_rep(h4).pi
    assert D.sigma == unit_biform(h4)


@pytest.mark.parametrize("t", [1, -3, Fraction(1, 2)])
def test_dual_cocycle(h4, t):
    D = dual_projrep(regular_projrep(h4, fam.sweedler_sigma(t, h4)))
    assert D.sigma == fam.sweedler_sigma(-t, h4)
    assert check_projrep(D)


def test_evaluation(h4, e2):
    assert evaluation_identities(regular_projrep(h4, fam.sweedler_sigma(2, h4))) == (True, True)
    assert evaluation_identities(regular_projrep(e2, fam.en_exp_twist(e2, [[1, 0], [0, 1]]))) == (True, True)


def test_identity_is_basic(h4):
    X = regular_projrep(h4, fam.sweedler_sigma(1, h4))
    assert is_basic_morphism(identity(4, h4.field), X, X, h4.counit_form())


def test_no_basic_morphism_between_classes(h4):
    for t, s in [(1, 2), (0, 1), (Fraction(1, 2), -1)]:
        X = regular_projrep(h4, fam.sweedler_sigma(t, h4))
        Y = regular_projrep(h4, fam.sweedler_sigma(s, h4))
        for mu in (h4.counit_form(), LinForm(h4, [1, -1, 0, 0]), LinForm(h4, [1, 1, 2, 0])):
            assert basic_morphism_space(X, Y, mu) == []
    X = regular_projrep(h4, fam.sweedler_sigma(1, h4))
    assert len(basic_morphism_space(X, X, h4.counit_form())) > 0


def test_twisting_by_lazy_form_gives_basic_identity(e2):
    s = fam.en_exp_twist(e2, [[1, 2], [2, 0]])
    X = regular_projrep(e2, s)
    mu = LinForm(e2, [1, 1, 0, 0, 0, 0, 5, 0])
    assert is_lazy1(mu)
    minv = conv_inverse(mu)
    F = e2.field
    pi = []
    for a in range(e2.dim):
        acc = [F.zero] * e2.dim
        for a1, a2, c in e2.comult[a]:
            acc[a2] = acc[a2] + c * minv.v[a1]
        pi.append(X.act(acc))
    W = ProjRep(convolve(coboundary(minv), s), e2.dim, pi)
    assert check_projrep(W)
    assert is_basic_morphism(identity(e2.dim, F), X, W, mu)
    assert not is_basic_morphism(identity(e2.dim, F), X, W, e2.counit_form())


def test_non_lazy_sigma_in_biform_form(h4):
    bad = BiForm(h4, [[1 if i == j else 0 for j in range(4)] for i in range(4)])
    with pytest.raises(NotLazy):
        regular_projrep(h4, bad)
