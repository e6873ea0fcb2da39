from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spinordict import composition as comp
from spinordict.dictionary import DICTIONARIES, check_dictionary, complex_form, get_dictionary
from spinordict.exact_linalg import I, GaussRational, Matrix
from spinordict.polyforms import Polyform, polyform_sum

from conftest import gauss, rationals

HALF = Fraction(1, 2)


def _image(name, polyform):
    d = get_dictionary(name, "plus")
    m = d.model
    (x,) = d.to_algebra(m.chiral_part(m.from_polyform(polyform), 1))
    return x


@pytest.mark.parametrize("name", list(DICTIONARIES))
def test_dictionary_checks(name):
    rep = check_dictionary(name)
    assert rep.ok, [c.name for c in rep.checks if not c.passed]


@pytest.mark.parametrize("name", list(DICTIONARIES))
@pytest.mark.parametrize("side", ["plus", "minus"])
def test_round_trip_residual(name, side):
    assert get_dictionary(name, side).round_trip_residual().is_zero()


@pytest.mark.parametrize("name", ["c2-h", "cl6-h2", "cl8-o", "cl44-complex-o"])
@given(data=st.data())
def test_round_trip_on_columns(name, data):
    d = get_dictionary(name, "plus")
    dim = d.algebra.dim
    if d.real:
        column = [d.algebra.element(data.draw(st.lists(rationals, min_size=dim, max_size=dim))) for _ in range(d.copies)]
    else:
        column = [d.algebra.element(data.draw(st.lists(gauss, min_size=dim, max_size=dim))) for _ in range(d.copies)]
    assert d.to_algebra(d.from_algebra(column)) == column


def test_identity_quaternion_coordinates():
    d = get_dictionary("c2-h", "plus")
    assert d.from_algebra([d.algebra.one()]) == [GaussRational(HALF), GaussRational(0)]


def test_operator_correspondences_are_checked():
    names = {c.name for c in check_dictionary("c2-h").checks}
    assert "R' (hat) as -R_i on plus" in names
    assert "-i as R_k on plus" in names
    names = {c.name for c in check_dictionary("c2-hsplit").checks}
    assert "R' as R_i~ on plus" in names
    names = {c.name for c in check_dictionary("cl6-h2").checks}
    assert {"Gamma_6 S+ -> S- as R_k", "Gamma_6 S- -> S+ as -R_k"} <= names
    assert "R' as R_i~ on plus" in {c.name for c in check_dictionary("cl33-hsplit2").checks}
    assert "pairing <S-,S+> in quaternion form" in {c.name for c in check_dictionary("cl51-h2").checks}


@given(gauss, gauss)
def test_split_quaternion_norm(u1, u2):
    d = get_dictionary("c2-hsplit", "plus")
    (q,) = d.to_algebra([u1, u2])
    assert comp.norm2(q) == GaussRational(4 * u1.abs2() - 4 * u2.abs2())


@given(st.lists(rationals, min_size=4, max_size=4))
def test_split_left_multiplication_shape(coords):
    d = get_dictionary("c2-hsplit", "plus")
    m = complex_form(d, comp.left_mult_matrix(d.algebra.element(coords)))
    assert m[1, 1] == m[0, 0].conj()
    assert m[0, 1] == m[1, 0].conj()


def test_cl8_named_spinors():
    o = comp.make_algebra("O")
    u = o.basis(4)
    # i(1 + e^4123) is the identity, 1 - e^4123 is u
    assert _image("cl8-o", polyform_sum(4, [(I, ()), (I, (4, 1, 2, 3))])) == o.one()
    assert _image("cl8-o", polyform_sum(4, [(1, ()), (-1, (4, 1, 2, 3))])) == u
    assert _image("cl8-o", Polyform.one(4)) == (o.one() + u.scale(I)).scale(1 / GaussRational(0, 2))


def test_cl44_named_spinors():
    sp = comp.make_algebra("Osplit")
    half = GaussRational(HALF)
    assert _image("cl44-complex-o", Polyform.one(4)) == (sp.one() - sp.basis(3).scale(I)).scale(half)
    p = polyform_sum(4, [(1, ()), (-1, (4, 1, 2, 3)), (I, (4, 2)), (I, (3, 1))])
    assert _image("cl44-complex-o", p) == sp.one() + sp.basis(4)


def test_unknown_dictionary():
    with pytest.raises(ValueError):
        get_dictionary("nosuch")
    with pytest.raises(ValueError):
        get_dictionary("c2-h", "sideways")


def test_dictionary_json():
    js = get_dictionary("cl8-o", "minus").to_json()
    assert js["model"] == "cl8" and js["side"] == "minus"
    assert Matrix.from_json(js["forward"]).shape == (8, 8)
