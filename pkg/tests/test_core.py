from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopflab import families as fam
from hopflab.core import (
    BiForm,
    HopfAlgebra,
    LinForm,
    LinMap,
    conv_inverse,
    convolve,
    dual_hopf,
    is_hopf_morphism,
    op_cop,
    tensor_forms,
    tensor_hopf,
    unit_biform,
    verify_hopf_axioms,
)
from hopflab.errors import FieldMismatch, NotInvertible, ShapeError
from hopflab.groups import cyclic_group, product_group
from hopflab.linalg import identity
from hopflab.scalars import PrimeField

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def same_tensors(A, B):
    return (A.mult == B.mult and A.comult == B.comult and A.unit == B.unit
            and A.counit == B.counit and A.antipode == B.antipode)


def test_sweedler_axioms(h4):
    assert verify_hopf_axioms(h4).ok


def test_group_algebra_axioms(kz2):
    assert verify_hopf_axioms(kz2).ok
    assert kz2.grouplikes() == [0, 1]


def test_identity_antipode_fails_at_x(h4):
    bad = HopfAlgebra(h4.field, h4.basis, h4.mult, h4.comult, h4.unit, h4.counit, identity(4, h4.field))
    rep = verify_hopf_axioms(bad)
    assert not rep.ok
    assert rep.failures() == {"antipode": ("x",)}


def test_shape_checked(h4):
    with pytest.raises(ShapeError):
        HopfAlgebra(h4.field, h4.basis[:3], h4.mult, h4.comult, h4.unit, h4.counit, h4.antipode)


def test_counit_is_convolution_unit(h4, e2):
    for H in (h4, e2):
        eps = H.counit_form()
        assert convolve(eps, eps) == eps


def test_sigma_family_adds(h4):
    for t, s in [(1, 2), (Fraction(1, 3), -1), (0, 5)]:
        assert convolve(fam.sweedler_sigma(t, h4), fam.sweedler_sigma(s, h4)) == fam.sweedler_sigma(t + s, h4)


def test_grouplike_forms_multiply(kz2):
    mu, nu = LinForm(kz2, [1, 3]), LinForm(kz2, [1, Fraction(-2, 5)])
    assert convolve(mu, nu)("g") == 3 * Fraction(-2, 5)


def test_inverse_of_sigma(h4):
    for t in (1, -3, Fraction(5, 2)):
        s = fam.sweedler_sigma(t, h4)
        inv = conv_inverse(s)
        assert inv == fam.sweedler_sigma(-t, h4)
        assert convolve(s, inv) == unit_biform(h4)
    assert conv_inverse(h4.counit_form()) == h4.counit_form()


def test_singular_form(kz2):
    with pytest.raises(NotInvertible):
        conv_inverse(LinForm(kz2, [1, 0]))


def test_mixed_fields_rejected(h4):
    H3 = fam.sweedler(PrimeField(3))
    with pytest.raises(FieldMismatch):
        tensor_hopf(h4, H3)


def test_double_dual(h4, e2, kz2):
    for H in (h4, e2, kz2):
        DD = dual_hopf(dual_hopf(H))
        assert DD.basis == H.basis
        assert same_tensors(DD, H)


def test_dual_of_group_algebra(kz2):
    D = dual_hopf(kz2)
    assert verify_hopf_axioms(D).ok
    assert D.is_commutative() and D.is_cocommutative()
    one = D.field.one
    chars = [[one, one], [one, -one]]
    for v in chars:
        delta = D.delta_vec(v)
        assert delta == {(i, j): v[i] * v[j] for i in range(2) for j in range(2) if v[i] * v[j]}


def test_sweedler_self_dual(h4):
    phi = fam.en_phi(h4)
    assert is_hopf_morphism(phi, h4, phi.dst)
    assert phi.inverse() is not None


def test_tensor_of_sweedlers(h4):
    T = tensor_hopf(h4, h4)
    assert T.dim == 16
    assert verify_hopf_axioms(T).ok


def test_tensor_of_group_algebras(kz2):
    T = tensor_hopf(kz2, kz2)
    K = fam.group_algebra(product_group(cyclic_group(2), cyclic_group(2)))
    assert same_tensors(T, K)
    assert is_hopf_morphism(LinMap(identity(4, T.field), T, K), T, K)


def test_op_cop(h4, kz2):
    assert op_cop(h4, False, False) is h4
    for flips in [(True, False), (False, True), (True, True)]:
        assert same_tensors(op_cop(kz2, *flips), kz2)
    cop = op_cop(h4, False, True)
    assert verify_hopf_axioms(cop).ok
    assert verify_hopf_axioms(op_cop(h4, True, False)).ok


def test_alpha_t_is_hopf(h4):
    assert is_hopf_morphism(fam.alpha_t(2, h4), h4, h4)
    assert is_hopf_morphism(h4.identity_map(), h4, h4)


def test_non_coalgebra_map(h4):
    F = h4.field
    rows = [h4.vec("1"), h4.vec("g"), [F.one, -F.one, F.one, F.zero], h4.vec("gx")]
    ok, fails = is_hopf_morphism(LinMap(rows, h4, h4), h4, h4, report=True)
    assert not ok
    assert fails


def test_biform_evaluation(h4):
    s = fam.sweedler_sigma(2, h4)
    assert s("x", "x") == 1
    assert s("gx", "x") == 1
    assert s("x", "gx") == -1
    assert s.flip()("x", "gx") == 1


@given(st.lists(small, min_size=4, max_size=4), st.lists(small, min_size=4, max_size=4),
       st.lists(small, min_size=4, max_size=4))
def test_convolution_associative(a, b, c):
    H = fam.sweedler()
    f, g, h = LinForm(H, a), LinForm(H, b), LinForm(H, c)
    assert convolve(convolve(f, g), h) == convolve(f, convolve(g, h))


@given(st.lists(small, min_size=2, max_size=2), st.lists(small, min_size=2, max_size=2))
def test_tensor_forms_convolve_componentwise(a, b):
    H = fam.sweedler()
    f = LinForm(H, [1, 1] + a)
    g = LinForm(H, [1, -1] + b)
    assert convolve(tensor_forms(f, f), tensor_forms(g, g)) == tensor_forms(convolve(f, g), convolve(f, g))


@given(small, small)
def test_biform_inverse(t, u):
    H = fam.sweedler()
    s = fam.sweedler_sigma(t, H)
    s = BiForm(H, [[c + (u if (i, j) == (1, 1) else 0) for j, c in enumerate(r)] for i, r in enumerate(s.m)])
    try:
        inv = conv_inverse(s)
    except NotInvertible:
        return
    assert convolve(s, inv) == unit_biform(H)
    assert convolve(inv, s) == unit_biform(H)
