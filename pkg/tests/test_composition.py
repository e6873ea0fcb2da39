from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from spinordict import composition as comp
from spinordict.exact_linalg import I, ONE, ZERO, GaussRational, Matrix

from conftest import gauss, rationals

KINDS = comp.KINDS

# Split-octonion table regenerated by brute force over basis triples from the
# listed 3-form (see test_split_table_from_three_form) and frozen here.
SPLIT_TABLE = [
    ["+1", "+e1", "+e2", "+e3", "+e4", "+e5", "+e6", "+e7"],
    ["+e1", "-1", "+e3", "-e2", "+e5", "-e4", "-e7", "+e6"],
    ["+e2", "-e3", "-1", "+e1", "+e6", "+e7", "-e4", "-e5"],
    ["+e3", "+e2", "-e1", "-1", "+e7", "-e6", "+e5", "-e4"],
    ["+e4", "-e5", "-e6", "-e7", "+1", "-e1", "-e2", "-e3"],
    ["+e5", "+e4", "-e7", "+e6", "+e1", "+1", "+e3", "-e2"],
    ["+e6", "+e7", "+e4", "-e5", "+e2", "-e3", "+1", "+e1"],
    ["+e7", "-e6", "+e5", "+e4", "+e3", "+e2", "-e1", "+1"],
]

SPLIT_FORM = {
    (1, 2, 3): 1, (1, 4, 5): -1, (1, 6, 7): 1, (2, 4, 6): -1,
    (2, 5, 7): -1, (3, 4, 7): -1, (3, 5, 6): 1,
}


def _form_value(coeffs, a, b, c):
    for perm, sign in (((a, b, c), 1), ((b, c, a), 1), ((c, a, b), 1), ((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1)):
        if perm in coeffs:
            return sign * coeffs[perm]
    return 0


def elements(kind):
    dim = comp.make_algebra(kind).dim
    return st.lists(rationals, min_size=dim, max_size=dim).map(comp.make_algebra(kind).element)


def test_named_products():
    assert comp.make_algebra("H").product_word(1, 2) == "+k"
    assert comp.make_algebra("O").product_word(5, 6) == "+e7"
    assert comp.make_algebra("Osplit").product_word(1, 6) == "-e7"
    sp = comp.make_algebra("Osplit")
    e4 = sp.basis(4)
    assert comp.mul(e4, e4) == sp.one()


def test_split_table_frozen():
    assert comp.multiplication_table(comp.make_algebra("Osplit")) == SPLIT_TABLE


def test_split_table_from_three_form():
    eta = [1, 1, 1, 1, -1, -1, -1, -1]
    alg = comp.make_algebra("Osplit")
    for a, b in product(range(1, 8), repeat=2):
        expected = [0] * 8
        if a == b:
            expected[0] = -eta[a]
        for c in range(1, 8):
            expected[c] = eta[c] * _form_value(SPLIT_FORM, a, b, c)
        got = comp.mul(alg.basis(a), alg.basis(b))
        assert got.coords == [GaussRational(x) for x in expected], (a, b)


def test_norms():
    h = comp.make_algebra("Hsplit")
    # q = q4 + q1 i + q2 j + q3 k with |q|^2 = q4^2 + q3^2 - q2^2 - q1^2
    q4, q1, q2, q3 = 1, 2, 3, 5
    q = h.element([q4, q1, q2, q3])
    assert comp.norm2(q) == q4**2 + q3**2 - q2**2 - q1**2
    assert comp.norm2(comp.make_algebra("O").one()) == ONE
    sp = comp.make_algebra("Osplit")
    assert not comp.norm2(sp.one() + sp.basis(4))


def test_null_elements():
    sp = comp.make_algebra("Osplit")
    assert comp.is_null(sp.one() + sp.basis(4))
    o = comp.make_algebra("O")
    assert not comp.is_null(o.one())
    assert comp.is_null(o.one() + o.basis(4).scale(I))


def test_identity_left_multiplication():
    for kind in KINDS:
        alg = comp.make_algebra(kind)
        assert comp.left_mult_matrix(alg.one()) == Matrix.identity(alg.dim)
        assert comp.right_mult_matrix(alg.one()) == Matrix.identity(alg.dim)


def test_elementary_convention():
    e = comp.elementary(0, 1)
    assert e[0, 1] == ONE and e[1, 0] == -ONE
    s = comp.symmetric_elementary(2, 5)
    assert s[2, 5] == s[5, 2] == ONE


def test_cross_from_form_matches_table():
    for kind in ("O", "Osplit"):
        alg = comp.make_algebra(kind)
        for a, b in permutations(range(1, 8), 2):
            want = comp.cross(alg.basis(a), alg.basis(b))
            assert want.coords == [GaussRational(x) for x in comp.cross_from_form(alg, a, b)]


@pytest.mark.parametrize("kind", KINDS)
def test_basis_identities(kind):
    alg = comp.make_algebra(kind)
    basis = [alg.basis(a) for a in range(alg.dim)]
    for x, y in product(basis, repeat=2):
        assert comp.mul(alg.one(), x) == x == comp.mul(x, alg.one())
        assert comp.norm2(comp.mul(x, y)) == comp.norm2(x) * comp.norm2(y)
        assert comp.conj(comp.mul(x, y)) == comp.mul(comp.conj(y), comp.conj(x))
        assert comp.mul(x, comp.mul(x, y)) == comp.mul(comp.mul(x, x), y)
        assert comp.mul(comp.mul(y, x), x) == comp.mul(y, comp.mul(x, x))
        # L_{conj x} is the adjoint of L_x under the norm pairing
        for z in basis:
            assert comp.pairing(comp.mul(x, y), z) == comp.pairing(y, comp.mul(comp.conj(x), z))


def test_three_form_antisymmetry():
    for tf in (comp.octonion_three_form(), comp.split_octonion_three_form()):
        assert tf.is_antisymmetric(range(1, 8))
    with pytest.raises(ValueError):
        comp.ThreeForm([(1, (1, 1, 2))])


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_composition_law(kind, data):
    x = data.draw(elements(kind))
    y = data.draw(elements(kind))
    assert comp.norm2(comp.mul(x, y)) == comp.norm2(x) * comp.norm2(y)
    assert comp.left_mult_matrix(x).apply(y.coords) == comp.mul(x, y).coords
    assert comp.right_mult_matrix(x).apply(y.coords) == comp.mul(y, x).coords
    assert comp.pairing(x, x) == comp.norm2(x)


@given(st.lists(gauss, min_size=8, max_size=8))
def test_complexified_norm_is_bilinear(coords):
    x = comp.make_algebra("O").element(coords)
    assert comp.norm2(x.scale(I)) == -comp.norm2(x)


def test_algebra_mismatch():
    with pytest.raises(ValueError):
        comp.mul(comp.make_algebra("H").one(), comp.make_algebra("O").one())
    with pytest.raises(ValueError):
        comp.canonical_kind("S")
