from itertools import product

import pytest
from hypothesis import given, strategies as st

from spinordict.exact_linalg import I, Matrix
from spinordict.polyforms import (
    Polyform,
    annihilate,
    conj_coeffs,
    create,
    even_monomials,
    monomials,
    odd_monomials,
    operator_matrix,
    polyform_sum,
    reverse,
    sort_with_sign,
    top_pairing,
    wedge,
)

from conftest import gauss


def polyforms(gen):
    words = monomials(gen)
    return st.lists(gauss, min_size=len(words), max_size=len(words)).map(
        lambda cs: Polyform.from_coords(gen, words, cs)
    )


def test_wedge_examples():
    e1, e2 = Polyform.word(2, 1), Polyform.word(2, 2)
    assert wedge(Polyform.one(2), e1) == e1
    assert not wedge(e1, e1)
    assert wedge(e1, e2) == Polyform.word(2, 1, 2)
    assert wedge(e2, e1) == -Polyform.word(2, 1, 2)


def test_create_annihilate_examples():
    dz1 = Polyform.word(2, 1)
    assert create(1, Polyform.one(2)) == dz1
    assert not create(1, dz1)
    assert create(2, dz1) == -Polyform.word(2, 1, 2)
    assert annihilate(1, dz1) == Polyform.one(2)
    assert not annihilate(1, Polyform.one(2))
    dz21 = polyform_sum(2, [(1, (2, 1))])
    assert annihilate(1, dz21) == -Polyform.word(2, 2)


def test_index_out_of_range():
    with pytest.raises(IndexError):
        create(3, Polyform.one(2))
    with pytest.raises(IndexError):
        annihilate(0, Polyform.one(2))


def test_reverse_examples():
    assert reverse(Polyform.word(3, 2)) == Polyform.word(3, 2)
    assert reverse(Polyform.word(2, 1, 2)) == -Polyform.word(2, 1, 2)
    p = Polyform(2, {(): 3, (1, 2): 5})
    assert reverse(p) == Polyform(2, {(): 3, (1, 2): -5})


def test_top_pairing_examples():
    assert not top_pairing(Polyform.one(2), Polyform.one(2))
    # <t1 + t2 e12, u1 + u2 e12> = t1 u2 - t2 u1
    t1, t2, u1, u2 = 2, 7, 3, 5
    left = Polyform(2, {(): t1, (1, 2): t2})
    right = Polyform(2, {(): u1, (1, 2): u2})
    assert top_pairing(left, right) == t1 * u2 - t2 * u1


def test_conj_coeffs():
    assert conj_coeffs(Polyform(2, {(): I})) == Polyform(2, {(): -I})


def test_sort_with_sign():
    assert sort_with_sign((2, 1)) == (-1, (1, 2))
    assert sort_with_sign((3, 1, 2)) == (1, (1, 2, 3))
    assert sort_with_sign((1, 1))[0] == 0


def test_monomial_counts():
    for n in range(1, 5):
        assert len(monomials(n)) == 2**n
        assert len(even_monomials(n)) == len(odd_monomials(n)) == 2 ** (n - 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_canonical_anticommutators(n):
    ident = Matrix.identity(2**n)
    a = {i: operator_matrix(lambda p, i=i: create(i, p), n) for i in range(1, n + 1)}
    b = {i: operator_matrix(lambda p, i=i: annihilate(i, p), n) for i in range(1, n + 1)}
    for i, j in product(range(1, n + 1), repeat=2):
        assert (a[i] @ a[j] + a[j] @ a[i]).is_zero()
        assert (b[i] @ b[j] + b[j] @ b[i]).is_zero()
        expected = ident if i == j else Matrix.zeros(2**n)
        assert a[i] @ b[j] + b[j] @ a[i] == expected


@given(polyforms(3), polyforms(3), polyforms(3))
def test_wedge_associative(p, q, r):
    assert wedge(wedge(p, q), r) == wedge(p, wedge(q, r))


@given(st.sampled_from(monomials(4)), st.sampled_from(monomials(4)), gauss)
def test_graded_commutativity(a, b, c):
    p, q = Polyform(4, {a: c}), Polyform(4, {b: 1})
    sign = -1 if (len(a) * len(b)) % 2 else 1
    assert wedge(p, q) == wedge(q, p).scale(sign)


@given(polyforms(4))
def test_involutions(p):
    assert reverse(reverse(p)) == p
    assert conj_coeffs(conj_coeffs(p)) == p
    assert Polyform.from_json(p.to_json()) == p


@given(polyforms(4), polyforms(4))
def test_top_pairing_symmetry_n4(p, q):
    # on n = 4 the top pairing is symmetric
    assert top_pairing(p, q) == top_pairing(q, p)


def test_malformed_json():
    with pytest.raises(ValueError):
        Polyform.from_json({"terms": []})
    with pytest.raises(ValueError):
        Polyform.from_json({"gen": 2, "terms": {"": "1"}})
