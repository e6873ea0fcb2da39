from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spinordict.clifford import build_model
from spinordict.exact_linalg import (
    I,
    ONE,
    ZERO,
    GaussRational,
    Matrix,
    kernel_basis,
    parse_rational,
    rank,
    rational_str,
    realify,
    solve,
    span_rank,
    sqrt_rational,
    stack_rows,
    unrealify,
)
from spinordict.geometry import octonion_spinor, stabilizer_system

from conftest import gauss, rationals


def test_rank_small_cases():
    assert rank(Matrix.identity(2)) == 2
    assert rank(Matrix.zeros(3)) == 0
    assert rank(Matrix([[1, 2], [2, 4]])) == 1


def test_kernel_small_cases():
    assert kernel_basis(Matrix.identity(3)) == []
    (k,) = kernel_basis(Matrix([[1, 1]]))
    assert k[0] == -k[1] and k[0]


def test_solve_small_cases():
    b = [GaussRational(3), GaussRational(-1, 2)]
    assert solve(Matrix.identity(2), b) == b
    m = Matrix([[1, 1]])
    x = solve(m, [2])
    assert m.apply(x) == [GaussRational(2)]
    assert solve(Matrix([[1, 1], [1, 1]]), [1, 2]) is None


def test_stabilizer_system_ranks():
    m = build_model("cl44-complex")
    plus = octonion_spinor(m, [1, 0, 0, 0, 1, 0, 0, 0])
    assert rank(stabilizer_system(m, plus)) == 7
    pure = octonion_spinor(m, [1, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, -1, 0, 0, 0, 0])
    assert len(kernel_basis(stabilizer_system(m, pure))) == 15


def test_gauss_arithmetic():
    z = GaussRational(Fraction(1, 2), -3)
    assert z * z.conj() == GaussRational(z.abs2())
    assert I * I == -ONE
    assert (z / z) == ONE
    assert str(GaussRational(Fraction(-3, 4))) == "-3/4"
    with pytest.raises(ZeroDivisionError):
        z / ZERO
    with pytest.raises(TypeError):
        GaussRational.coerce(1.5j)


def test_rational_strings_round_trip():
    for text in ("0", "-7", "3/8", "-22/7"):
        assert rational_str(parse_rational(text)) == text
    assert parse_rational("4/6") == Fraction(2, 3)


def test_sqrt_rational():
    assert sqrt_rational(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_rational(Fraction(2)) is None


def test_stack_rows_and_span_rank():
    a = Matrix([[1, 0, 0]])
    b = Matrix([[0, 1, 0], [1, 1, 0]])
    s = stack_rows([a, b])
    assert s.shape == (3, 3)
    assert rank(s) == 2
    assert span_rank([[ONE, ZERO], [I, ZERO]]) == 1


@given(st.lists(st.lists(gauss, min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_nullity(rows):
    m = Matrix(rows)
    basis = kernel_basis(m)
    assert rank(m) + len(basis) == m.cols
    for v in basis:
        assert all(not c for c in m.apply(v))


@given(st.lists(st.lists(gauss, min_size=3, max_size=3), min_size=3, max_size=3), st.lists(gauss, min_size=3, max_size=3))
def test_solve_residual_is_zero(rows, x):
    m = Matrix(rows)
    b = m.apply(x)
    y = solve(m, b)
    assert y is not None
    assert m.apply(y) == b


@given(st.lists(st.lists(gauss, min_size=2, max_size=2), min_size=2, max_size=2))
def test_realify_round_trip_and_product(rows):
    m = Matrix(rows)
    assert unrealify(realify(m)) == m
    assert realify(m @ m) == realify(m) @ realify(m)


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a * b).abs2() == a.abs2() * b.abs2()
    if a:
        assert a * (ONE / a) == ONE


@given(rationals)
def test_json_round_trip(x):
    z = GaussRational(x, -x)
    assert GaussRational.from_json(z.to_json()) == z
