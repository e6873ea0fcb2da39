from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from spinordict import composition as comp
from spinordict.clifford import (
    MODEL_NAMES,
    POLYFORM_MODELS,
    AntilinearOp,
    LieParams,
    bilinear,
    build_model,
    lie_element,
    lie_generators,
    lie_param_labels,
    reality_op,
    verify_clifford,
    x_model_generators,
)
from spinordict.dictionary import get_dictionary
from spinordict.exact_linalg import I, ONE, GaussRational, Matrix, anticommutator, realify, span_rank

from conftest import gauss

ID4 = Matrix.identity(4)
SIGMA = {
    1: Matrix([[0, 1], [1, 0]]),
    2: Matrix([[0, -I], [I, 0]]),
    3: Matrix([[1, 0], [0, -1]]),
}


def test_cl8_gamma0_is_swap():
    m = build_model("cl8")
    eye = Matrix.identity(8)
    assert m.gamma(0) == Matrix.blocks([[0, eye], [eye, 0]])


def test_cl51_last_gamma():
    eye = Matrix.identity(4)
    assert build_model("cl51").gamma(6) == Matrix.blocks([[0, eye], [-eye, 0]])


def test_cl4_gamma_blocks():
    m = build_model("cl4")
    for i, s in SIGMA.items():
        block = s.scale(I)
        assert m.gamma(i) == Matrix.blocks([[0, block], [-block, 0]])
    assert m.gamma(4) @ m.gamma(4) == ID4


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_clifford_relations(name):
    m = build_model(name)
    rep = verify_clifford(m)
    assert rep.ok, [c.name for c in rep.checks if not c.passed]
    n = m.dim_spinor
    for a, b in combinations_with_replacement(m.labels, 2):
        expected = Matrix.identity(n).scale(2 * m.metric_of(a)) if a == b else Matrix.zeros(n)
        assert anticommutator(m.gamma(a), m.gamma(b)) == expected


def test_cl4_has_ten_pairs():
    rep = verify_clifford(build_model("cl4"))
    pairs = [c for c in rep.checks if c.name.startswith("anticommutator")]
    assert len(pairs) == 10


def test_cl44_negative_directions():
    m = build_model("cl44-real")
    for a in (4, 5, 6, 7):
        assert m.gamma(a) @ m.gamma(a) == -Matrix.identity(16)


@pytest.mark.parametrize("name", POLYFORM_MODELS)
def test_gammas_are_odd(name):
    m = build_model(name)
    for a in m.labels:
        assert anticommutator(m.gamma(a), m.chirality).is_zero()


def test_reality_examples():
    eps = Matrix([[0, 1], [-1, 0]])
    r = reality_op(build_model("cl4"), "Rprime")
    assert r.matrix == Matrix.block_diag(eps, eps)
    assert r.square().matrix == -ID4
    r = reality_op(build_model("cl22"), "Rprime")
    assert r.matrix == Matrix.block_diag(SIGMA[1], SIGMA[1])
    assert r.square().matrix == ID4
    m = build_model("cl8")
    r = reality_op(m, "R")
    assert r.square().matrix == Matrix.identity(16)
    for a in m.labels:
        assert r.conjugate_through(m.gamma(a)) == m.gamma(a)


@pytest.mark.parametrize("name", POLYFORM_MODELS)
def test_reality_squares(name):
    m = build_model(name)
    for key, sign in m.expected_reality_square.items():
        assert reality_op(m, key).square().matrix == Matrix.identity(m.dim_spinor).scale(sign)


def test_unknown_operator_and_model():
    with pytest.raises(ValueError):
        reality_op(build_model("cl8"), "Rprime")
    with pytest.raises(ValueError):
        build_model("cl9")


@given(st.lists(gauss, min_size=4, max_size=4))
def test_antilinear_composition(v):
    a = AntilinearOp(Matrix([[1, I, 0, 0], [0, 2, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]), True)
    b = AntilinearOp(Matrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, I, 0], [0, 0, 0, 1]]), True)
    assert a.compose(b).apply(v) == a.apply(b.apply(v))


def test_bilinear_zero_form_is_pairing():
    m = build_model("cl6")
    psi = m.embed([1, I, 2, 0], 1)
    phi = m.embed([3, 0, -1, I], -1)
    assert bilinear(m, 0, psi, phi).get((), GaussRational(0)) == m.pair(psi, phi)


def test_bilinear_rejects_bad_input():
    m = build_model("cl4")
    with pytest.raises(ValueError):
        bilinear(m, 1, [1, 0, 0], [1, 0, 0, 0])
    with pytest.raises(ValueError):
        bilinear(m, 5, [1, 0, 0, 0], [1, 0, 0, 0])


@given(st.lists(gauss, min_size=8, max_size=8))
def test_cl8_weyl_two_form_vanishes(half):
    m = build_model("cl8")
    psi = m.embed(half, 1)
    assert not bilinear(m, 2, psi, psi)


def test_lie_element_zero_and_single():
    m = build_model("cl44-real")
    zero = LieParams.from_flat(m, [0] * len(lie_param_labels(m)))
    assert lie_element(m, zero).is_zero()
    d = get_dictionary("cl44-real-o", "plus")
    sp = comp.make_algebra("Osplit")
    e = {a: comp.left_mult_matrix(sp.basis(a)) for a in range(1, 8)}
    for a, b in ((1, 2), (3, 7), (4, 5)):
        x = lie_element(m, LieParams.single(m, a, b))
        assert x == m.gamma_product((a, b)).submatrix(m.chiral_indices(1), m.chiral_indices(1))
        # parametrisation w^a E_a - w^ab E_a E_b on S+
        assert d.transport(x) == -(e[a] @ e[b])
    for a in range(1, 8):
        assert d.transport(lie_element(m, LieParams.single(m, a))) == e[a]


def test_lie_params_antisymmetry():
    m = build_model("cl8")
    p = LieParams.single(m, 5, 2, value=3)
    assert p.get(2, 5) == -3 and p.get(5, 2) == 3
    with pytest.raises(ValueError):
        LieParams.from_flat(m, [1, 2])


@pytest.mark.parametrize("name", ["cl6", "cl51", "cl33"])
def test_lie_image_rank(name):
    gens = lie_generators(build_model(name), 1)
    assert span_rank([realify(g).flatten() for g in gens]) == 15


def test_x_model_generators():
    gens = x_model_generators(comp.make_algebra("C"), include_diagonal=False)
    assert len(gens) == 2
    assert gens[0] @ gens[0] == ID4 == gens[1] @ gens[1]
    assert anticommutator(gens[0], gens[1]).is_zero()
    assert len(x_model_generators(comp.make_algebra("O"), include_diagonal=True)) == 9
    assert build_model("x:O").signature.as_list() == [9, 0]
    assert build_model("x:O'").signature.as_list() == [5, 4]


def test_cl44_builds_agree():
    real, cplx = build_model("cl44-real"), build_model("cl44-complex")
    # both builds share the (alpha, beta) column, so the relabelling is the identity
    for a in real.labels:
        assert real.gamma(a) == cplx.gamma(a)
    assert real.chirality == cplx.chirality


def test_model_json():
    js = build_model("cl22").to_json()
    assert js["signature"] == [2, 2]
    assert Matrix.from_json(js["gammas"][0]) == build_model("cl22").gamma(1)
