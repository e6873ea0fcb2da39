"""Named Clifford-algebra models as exact matrices.

Polyform models build their gamma operators from creation/annihilation operators
on the exterior algebra and then express them in a fixed coordinate column.  The
composition-algebra family ``x:*`` uses 2x2 blocks of left-multiplication
operators.  Gamma labels follow the numbering used throughout the package, so
``model.gammas[0]`` is the "identity direction" of the 8-dimensional models.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from . import composition as comp
from .exact_linalg import (
    I,
    ZERO,
    GaussRational,
    Matrix,
    Scalar,
    anticommutator,
    vec_conj,
)
from .polyforms import Polyform, annihilate, create, monomials, operator_matrix, polyform_sum, top_pairing

POLYFORM_MODELS = ("cl4", "cl22", "cl6", "cl51", "cl33", "cl8", "cl44-real", "cl44-complex")
X_MODELS = ("x:C", "x:C'", "x:H", "x:H'", "x:O", "x:O'")
MODEL_NAMES = POLYFORM_MODELS + X_MODELS


@dataclass(frozen=True)
class Signature:
    plus: int
    minus: int

    def as_list(self) -> list[int]:
        return [self.plus, self.minus]


@dataclass(frozen=True)
class AntilinearOp:
    """``v -> matrix @ conj(v)`` (or plain ``matrix @ v`` when ``then_conjugate`` is false)."""

    matrix: Matrix
    then_conjugate: bool = True

    def apply(self, v: Sequence[GaussRational]) -> list[GaussRational]:
        return self.matrix.apply(vec_conj(v) if self.then_conjugate else list(v))

    def compose(self, other: "AntilinearOp") -> "AntilinearOp":
        """``self`` after ``other``."""
        inner = other.matrix.conj() if self.then_conjugate else other.matrix
        return AntilinearOp(self.matrix @ inner, self.then_conjugate != other.then_conjugate)

    def square(self) -> "AntilinearOp":
        return self.compose(self)

    @cached_property
    def inverse_matrix(self) -> Matrix:
        return self.matrix.inverse()

    def conjugate_through(self, m: Matrix) -> Matrix:
        """The matrix ``X`` with ``self . m = X . self`` (needs an invertible operator)."""
        inner = m.conj() if self.then_conjugate else m
        return self.matrix @ inner @ self.inverse_matrix

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> "AntilinearOp":
        return AntilinearOp(self.matrix.submatrix(rows, cols), self.then_conjugate)


@dataclass(frozen=True, eq=False)
class CliffordModel:
    """A fully built model.  Vectors are Dirac spinors in the model's coordinate column."""

    name: str
    signature: Signature
    labels: tuple[int, ...]
    gammas: Mapping[int, Matrix]
    metric: Mapping[int, int]
    chirality: Matrix | None
    generators: int = 0
    basis: tuple[Polyform, ...] | None = None
    top_gram: Matrix | None = None
    gram: Matrix | None = None
    reality: Mapping[str, AntilinearOp] = field(default_factory=dict)
    reality_words: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    expected_reality_square: Mapping[str, int] = field(default_factory=dict)
    distinguished: int | None = None
    algebra: str | None = None
    fock_labels: Mapping[int, str] = field(default_factory=dict)

    @property
    def dim_spinor(self) -> int:
        return next(iter(self.gammas.values())).rows

    @property
    def base_dim(self) -> int:
        return len(self.labels)

    def metric_of(self, index: int) -> int:
        return self.metric[index]

    def gamma(self, index: int) -> Matrix:
        try:
            return self.gammas[index]
        except KeyError:
            raise KeyError(f"{self.name} has no gamma with label {index}; labels are {self.labels}") from None

    def gamma_product(self, indices: Iterable[int]) -> Matrix:
        out = Matrix.identity(self.dim_spinor)
        for i in indices:
            out = out @ self.gamma(i)
        return out

    def clifford_vector(self, coeffs: Mapping[int, Scalar] | Sequence[Scalar]) -> Matrix:
        """``sum v^I Gamma_I`` for a base vector given by label map or label-ordered list."""
        if not isinstance(coeffs, Mapping):
            if len(coeffs) != self.base_dim:
                raise ValueError(f"{self.name}: base vector needs {self.base_dim} entries")
            coeffs = dict(zip(self.labels, coeffs))
        out = Matrix.zeros(self.dim_spinor)
        for i, c in coeffs.items():
            if GaussRational.coerce(c):
                out = out + self.gamma(i).scale(c)
        return out

    # chirality helpers -------------------------------------------------

    def chiral_indices(self, sign: int) -> list[int]:
        if self.chirality is None:
            raise ValueError(f"{self.name} has no chirality grading")
        want = GaussRational(1 if sign > 0 else -1)
        return [k for k in range(self.dim_spinor) if self.chirality[k, k] == want]

    def chiral_part(self, psi: Sequence[GaussRational], sign: int) -> list[GaussRational]:
        return [psi[k] for k in self.chiral_indices(sign)]

    def embed(self, half: Sequence[Scalar], sign: int) -> list[GaussRational]:
        idx = self.chiral_indices(sign)
        if len(half) != len(idx):
            raise ValueError(f"{self.name}: chiral vector needs {len(idx)} entries, got {len(half)}")
        out = [ZERO] * self.dim_spinor
        for k, c in zip(idx, half):
            out[k] = GaussRational.coerce(c)
        return out

    def chirality_of(self, psi: Sequence[GaussRational]) -> int:
        """+1 or -1 for a nonzero Weyl spinor, 0 otherwise."""
        if self.chirality is None:
            return 0
        plus = any(psi[k] for k in self.chiral_indices(1))
        minus = any(psi[k] for k in self.chiral_indices(-1))
        if plus and not minus:
            return 1
        if minus and not plus:
            return -1
        return 0

    # polyform coordinates -----------------------------------------------

    def to_polyform(self, psi: Sequence[Scalar]) -> Polyform:
        if self.basis is None:
            raise ValueError(f"{self.name} is not a polyform model")
        out = Polyform(self.generators)
        for c, b in zip(psi, self.basis):
            if GaussRational.coerce(c):
                out = out + b.scale(c)
        return out

    def from_polyform(self, p: Polyform) -> list[GaussRational]:
        if self.basis is None:
            raise ValueError(f"{self.name} is not a polyform model")
        if p.gen != self.generators:
            raise ValueError(f"{self.name} polyforms have {self.generators} generators, got {p.gen}")
        mons = monomials(self.generators)
        cols = [b.coords(mons) for b in self.basis]
        from .exact_linalg import solve

        sol = solve(Matrix.from_columns(cols), p.coords(mons))
        if sol is None:
            raise ValueError("polyform outside the model's spinor space")
        return sol

    def pair(self, psi: Sequence[Scalar], phi: Sequence[Scalar], normalization: str = "model") -> GaussRational:
        g = self._gram(normalization)
        return _bilinear_form(g, psi, phi)

    def _gram(self, normalization: str) -> Matrix:
        if normalization == "model":
            g = self.gram
        elif normalization == "top":
            g = self.top_gram
        else:
            raise ValueError(f"unknown pairing normalization {normalization!r}")
        if g is None:
            raise ValueError(f"{self.name} has no invariant pairing")
        return g

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "signature": self.signature.as_list(),
            "labels": list(self.labels),
            "gammas": [self.gammas[i].to_json() for i in self.labels],
        }


def _bilinear_form(g: Matrix, psi: Sequence[Scalar], phi: Sequence[Scalar]) -> GaussRational:
    gp = g.apply([GaussRational.coerce(x) for x in phi])
    total = ZERO
    for a, b in zip(psi, gp):
        a = GaussRational.coerce(a)
        if a and b:
            total = total + a * b
    return total


# Fock-space building blocks ---------------------------------------------


@lru_cache(maxsize=None)
def fock_operators(gen: int) -> tuple[dict[int, Matrix], dict[int, Matrix]]:
    """Creation and annihilation matrices on the full monomial basis of ``gen`` generators."""
    mons = monomials(gen)
    a = {i: operator_matrix(lambda p, i=i: create(i, p), gen, mons) for i in range(1, gen + 1)}
    ad = {i: operator_matrix(lambda p, i=i: annihilate(i, p), gen, mons) for i in range(1, gen + 1)}
    return a, ad


def _plus(gen: int, i: int) -> Matrix:
    a, ad = fock_operators(gen)
    return a[i] + ad[i]


def _minus(gen: int, i: int) -> Matrix:
    a, ad = fock_operators(gen)
    return a[i] - ad[i]


def _poly(gen: int, parts) -> Polyform:
    return polyform_sum(gen, parts)


def _polyform_model(
    name: str,
    gen: int,
    basis: Sequence[Polyform],
    fock_gammas: Mapping[int, Matrix],
    chirality: Sequence[int],
    reality_words: Mapping[str, tuple[int, ...]] = {},
    expected_square: Mapping[str, int] = {},
    gram_scale: Scalar = 1,
    distinguished: int | None = None,
    algebra: str | None = None,
    fock_labels: Mapping[int, str] = {},
    extra_reality: Mapping[str, AntilinearOp] = {},
) -> CliffordModel:
    mons = monomials(gen)
    p = Matrix.from_columns([b.coords(mons) for b in basis])
    pinv = p.inverse()
    labels = tuple(sorted(fock_gammas))
    gammas = {k: pinv @ fock_gammas[k] @ p for k in labels}
    metric = {}
    for k in labels:
        sq = gammas[k] @ gammas[k]
        if sq == Matrix.identity(len(basis)):
            metric[k] = 1
        elif sq == Matrix.identity(len(basis)).scale(-1):
            metric[k] = -1
        else:
            raise ArithmeticError(f"{name}: gamma {k} does not square to a sign")
    reality = dict(extra_reality)
    for key, word in reality_words.items():
        m = Matrix.identity(len(mons))
        for k in word:
            m = m @ fock_gammas[k]
        reality[key] = AntilinearOp(pinv @ m @ p.conj())
    top = Matrix([[top_pairing(x, y) for y in basis] for x in basis])
    scale = GaussRational.coerce(gram_scale)
    return CliffordModel(
        name=name,
        signature=Signature(sum(1 for v in metric.values() if v > 0), sum(1 for v in metric.values() if v < 0)),
        labels=labels,
        gammas=gammas,
        metric=metric,
        chirality=Matrix.diag(chirality),
        generators=gen,
        basis=tuple(basis),
        top_gram=top,
        gram=top.scale(scale),
        reality=reality,
        reality_words=dict(reality_words),
        expected_reality_square=dict(expected_square),
        distinguished=distinguished,
        algebra=algebra,
        fock_labels=dict(fock_labels),
    )


def _dim4_basis() -> list[Polyform]:
    # (u1, u2, v1, v2) = (1, e12, e1, e2)
    return [_poly(2, [(1, ())]), _poly(2, [(1, (1, 2))]), _poly(2, [(1, (1,))]), _poly(2, [(1, (2,))])]


def _dim6_basis() -> list[Polyform]:
    # (u1, u2, v1, v2, u~1, u~2, v~1, v~2) = (1, e12, e13, e23, e3, e123, e1, e2)
    words = [(), (1, 2), (1, 3), (2, 3), (3,), (1, 2, 3), (1,), (2,)]
    return [_poly(3, [(1, w)]) for w in words]


def _build_cl4() -> CliffordModel:
    g = {
        4: _plus(2, 1),
        3: _minus(2, 1).scale(-I),
        2: _plus(2, 2),
        1: _minus(2, 2).scale(-I),
    }
    return _polyform_model(
        "cl4", 2, _dim4_basis(), g, [1, 1, -1, -1],
        reality_words={"R": (2, 4), "Rprime": (3, 1)},
        expected_square={"R": -1, "Rprime": -1},
        distinguished=4, algebra="H",
    )


def _build_cl22() -> CliffordModel:
    g = {
        4: _plus(2, 1),
        3: _minus(2, 1).scale(-I),
        2: _plus(2, 2).scale(-I),
        1: _minus(2, 2),
    }
    return _polyform_model(
        "cl22", 2, _dim4_basis(), g, [1, 1, -1, -1],
        reality_words={"R": (4, 1), "Rprime": (2, 3)},
        expected_square={"Rprime": 1},
        distinguished=4, algebra="Hsplit",
    )


def _build_cl6_family(name: str) -> CliffordModel:
    if name == "cl33":
        g = {
            4: _plus(3, 1),
            3: _minus(3, 1).scale(-I),
            2: _plus(3, 2).scale(-I),
            1: _minus(3, 2),
        }
    else:
        g = {
            4: _plus(3, 1),
            3: _minus(3, 1).scale(-I),
            2: _plus(3, 2),
            1: _minus(3, 2).scale(-I),
        }
    g[5] = _plus(3, 3)
    if name == "cl6":
        g[6] = _minus(3, 3).scale(-I)
        words, squares = {"Rprime": (3, 1, 6)}, {"Rprime": 1}
        alg = "H"
    elif name == "cl51":
        g[6] = _minus(3, 3).scale(-1)
        words, squares = {"R": (2, 4, 5, 6), "Rprime": (3, 1)}, {"R": -1, "Rprime": -1}
        alg = "H"
    else:
        g[6] = _minus(3, 3).scale(-1)
        words, squares = {"Rprime": (2, 3)}, {"Rprime": 1}
        alg = "Hsplit"
    return _polyform_model(
        name, 3, _dim6_basis(), g, [1] * 4 + [-1] * 4,
        reality_words=words, expected_square=squares, distinguished=6, algebra=alg,
    )


def _octo_column(even: Mapping[int, list], odd: Mapping[int, list]) -> list[Polyform]:
    return [_poly(4, even[k]) for k in range(8)] + [_poly(4, odd[k]) for k in range(8)]


def cl8_column() -> list[Polyform]:
    """Polyforms of the alpha_0..7, beta_0..7 coordinates of the Cl(8) column."""
    even = {
        1: [(1, (4, 1)), (1, (2, 3))], 2: [(1, (4, 2)), (1, (3, 1))], 3: [(1, (4, 3)), (1, (1, 2))],
        4: [(1, ()), (-1, (4, 1, 2, 3))],
        5: [(I, (4, 1)), (-I, (2, 3))], 6: [(I, (4, 2)), (-I, (3, 1))], 7: [(I, (4, 3)), (-I, (1, 2))],
        0: [(I, ()), (I, (4, 1, 2, 3))],
    }
    odd = {
        1: [(1, (1,)), (1, (4, 2, 3))], 2: [(1, (2,)), (1, (4, 3, 1))], 3: [(1, (3,)), (1, (4, 1, 2))],
        4: [(1, (4,)), (-1, (1, 2, 3))],
        5: [(I, (1,)), (-I, (4, 2, 3))], 6: [(I, (2,)), (-I, (4, 3, 1))], 7: [(I, (3,)), (-I, (4, 1, 2))],
        0: [(I, (4,)), (I, (1, 2, 3))],
    }
    return _octo_column(even, odd)


def cl44_real_column() -> list[Polyform]:
    even = {
        1: [(1, (4, 1)), (-1, (2, 3))], 2: [(1, (4, 2)), (-1, (3, 1))], 3: [(1, (4, 3)), (-1, (1, 2))],
        4: [(1, ()), (-1, (4, 1, 2, 3))],
        5: [(1, (4, 1)), (1, (2, 3))], 6: [(1, (4, 2)), (1, (3, 1))], 7: [(1, (4, 3)), (1, (1, 2))],
        0: [(1, ()), (1, (4, 1, 2, 3))],
    }
    odd = {
        1: [(1, (1,)), (-1, (4, 2, 3))], 2: [(1, (2,)), (-1, (4, 3, 1))], 3: [(1, (3,)), (-1, (4, 1, 2))],
        4: [(1, (4,)), (-1, (1, 2, 3))],
        5: [(1, (1,)), (1, (4, 2, 3))], 6: [(1, (2,)), (1, (4, 3, 1))], 7: [(1, (3,)), (1, (4, 1, 2))],
        0: [(1, (4,)), (1, (1, 2, 3))],
    }
    return _octo_column(even, odd)


def cl44_complex_column() -> list[Polyform]:
    even = {
        5: [(1, (4, 1)), (-1, (2, 3))], 7: [(1, (4, 2)), (-1, (3, 1))], 2: [(1, (4, 3)), (1, (1, 2))],
        0: [(1, ()), (-1, (4, 1, 2, 3))],
        6: [(I, (4, 1)), (I, (2, 3))], 4: [(I, (4, 2)), (I, (3, 1))], 1: [(I, (4, 3)), (-I, (1, 2))],
        3: [(I, ()), (I, (4, 1, 2, 3))],
    }
    odd = {
        5: [(1, (1,)), (-1, (4, 2, 3))], 7: [(1, (2,)), (-1, (4, 3, 1))], 2: [(1, (3,)), (1, (4, 1, 2))],
        0: [(1, (4,)), (-1, (1, 2, 3))],
        6: [(I, (1,)), (I, (4, 2, 3))], 4: [(I, (2,)), (I, (4, 3, 1))], 1: [(I, (3,)), (-I, (4, 1, 2))],
        3: [(I, (4,)), (I, (1, 2, 3))],
    }
    return _octo_column(even, odd)


_HALF = Fraction(1, 2)


def _build_cl8() -> CliffordModel:
    g = {0: _plus(4, 4)}
    for j in range(1, 4):
        g[4 + j] = _plus(4, j)
    for j in range(1, 5):
        g[j] = _minus(4, j).scale(-I)
    labels = {0: "a4+a4^", 4: "-i(a4-a4^)"}
    for j in range(1, 4):
        labels[4 + j] = f"a{j}+a{j}^"
        labels[j] = f"-i(a{j}-a{j}^)"
    return _polyform_model(
        "cl8", 4, cl8_column(), g, [1] * 8 + [-1] * 8,
        reality_words={"R": (1, 2, 3, 4)}, expected_square={"R": 1},
        gram_scale=_HALF, distinguished=0, algebra="O", fock_labels=labels,
    )


def _build_cl44_real() -> CliffordModel:
    g = {0: _plus(4, 4), 4: _minus(4, 4)}
    for j in range(1, 4):
        g[j] = _plus(4, j)
        g[4 + j] = _minus(4, j)
    ident = AntilinearOp(Matrix.identity(16))
    return _polyform_model(
        "cl44-real", 4, cl44_real_column(), g, [1] * 8 + [-1] * 8,
        expected_square={"R": 1, "Rprime": 1},
        # the real column pairs with the opposite top-form orientation
        gram_scale=-_HALF, distinguished=0, algebra="Osplit",
        extra_reality={"R": ident, "Rprime": ident},
    )


def _build_cl44_complex() -> CliffordModel:
    g = {
        0: _plus(4, 4),
        3: _minus(4, 4).scale(I),
        2: _plus(4, 3),
        1: _minus(4, 3).scale(I),
        4: _plus(4, 2).scale(I),
        7: _minus(4, 2),
        6: _plus(4, 1).scale(I),
        5: _minus(4, 1),
    }
    return _polyform_model(
        "cl44-complex", 4, cl44_complex_column(), g, [1] * 8 + [-1] * 8,
        reality_words={"Rprime": (3, 1, 4, 6), "R": (0, 2, 7, 5)},
        expected_square={"R": 1, "Rprime": 1},
        gram_scale=_HALF, distinguished=0, algebra="Osplit",
    )


# composition-algebra family ----------------------------------------------


def x_matrix(alg: comp.CompAlgebra, r: Scalar, q: comp.AlgElement) -> Matrix:
    """The block matrix [[r, L_conj(q)], [L_q, -r]]."""
    d = alg.dim
    lq = comp.left_mult_matrix(q)
    lqb = comp.left_mult_matrix(comp.conj(q))
    rr = Matrix.identity(d).scale(r)
    return Matrix.blocks([[rr, lqb], [lq, rr.scale(-1)]])


def x_model_generators(alg: comp.CompAlgebra, include_diagonal: bool = True) -> list[Matrix]:
    gens = [x_matrix(alg, 0, alg.basis(a)) for a in range(alg.dim)]
    if include_diagonal:
        gens.append(x_matrix(alg, 1, alg.zero()))
    return gens


def _build_x(name: str) -> CliffordModel:
    alg = comp.make_algebra(name.split(":", 1)[1])
    gens = x_model_generators(alg, include_diagonal=True)
    labels = tuple(range(len(gens)))
    metric = {a: alg.norm_signature[a] for a in range(alg.dim)}
    metric[alg.dim] = 1
    return CliffordModel(
        name=name,
        signature=Signature(sum(1 for v in metric.values() if v > 0), sum(1 for v in metric.values() if v < 0)),
        labels=labels,
        gammas=dict(zip(labels, gens)),
        metric=metric,
        chirality=None,
        algebra=alg.kind,
    )


_BUILDERS: dict[str, Callable[[], CliffordModel]] = {
    "cl4": _build_cl4,
    "cl22": _build_cl22,
    "cl6": lambda: _build_cl6_family("cl6"),
    "cl51": lambda: _build_cl6_family("cl51"),
    "cl33": lambda: _build_cl6_family("cl33"),
    "cl8": _build_cl8,
    "cl44-real": _build_cl44_real,
    "cl44-complex": _build_cl44_complex,
}
for _n in X_MODELS:
    _BUILDERS[_n] = lambda _n=_n: _build_x(_n)


@lru_cache(maxsize=None)
def build_model(name: str) -> CliffordModel:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown model {name!r}; expected one of {', '.join(MODEL_NAMES)}") from None
    return builder()


# verification -------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.name, "pass": self.passed, **self.detail}


@dataclass
class ModelReport:
    model: str
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"model": self.model, "ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def verify_clifford(model: CliffordModel) -> ModelReport:
    """Anticommutators, chirality oddness and reality-operator squares/commutation."""
    checks = []
    n = model.dim_spinor
    ident = Matrix.identity(n)
    for idx, a in enumerate(model.labels):
        for b in model.labels[idx:]:
            expected = ident.scale(2 * model.metric[a]) if a == b else Matrix.zeros(n)
            ok = anticommutator(model.gammas[a], model.gammas[b]) == expected
            checks.append(CheckResult(f"anticommutator {a},{b}", ok, {"pair": [a, b], "g": model.metric[a] if a == b else 0}))
    if model.chirality is not None:
        for a in model.labels:
            ok = anticommutator(model.chirality, model.gammas[a]).is_zero()
            checks.append(CheckResult(f"odd gamma {a}", ok, {"gamma": a}))
    for key, op in model.reality.items():
        sq = op.square()
        sign = 0
        if not sq.then_conjugate:
            if sq.matrix == ident:
                sign = 1
            elif sq.matrix == ident.scale(-1):
                sign = -1
        want = model.expected_reality_square.get(key)
        ok = sign != 0 and (want is None or want == sign)
        checks.append(CheckResult(f"{key} squares to sign", ok, {"operator": key, "square": sign, "expected": want}))
        signs = set()
        for a in model.labels:
            moved = op.conjugate_through(model.gammas[a])
            if moved == model.gammas[a]:
                signs.add(1)
            elif moved == model.gammas[a].scale(-1):
                signs.add(-1)
            else:
                signs.add(0)
        ok = len(signs) == 1 and 0 not in signs
        checks.append(CheckResult(
            f"{key} (anti)commutes with gammas", ok,
            {"operator": key, "sign": signs.pop() if len(signs) == 1 else None},
        ))
    return ModelReport(model.name, checks)


def reality_op(model: CliffordModel, which: str) -> AntilinearOp:
    key = {"R": "R", "Rprime": "Rprime", "R'": "Rprime"}.get(which, which)
    try:
        return model.reality[key]
    except KeyError:
        raise ValueError(f"operator {which!r} is not defined for {model.name}") from None


# bilinears -----------------------------------------------------------------


def bilinear(
    model: CliffordModel,
    k: int,
    psi: Sequence[Scalar],
    phi: Sequence[Scalar],
    normalization: str = "model",
) -> dict[tuple[int, ...], GaussRational]:
    """Components ``<psi, Gamma_I1 ... Gamma_Ik phi>`` over increasing label tuples (zeros omitted)."""
    n = model.dim_spinor
    if len(psi) != n or len(phi) != n:
        raise ValueError(f"{model.name}: spinors must have {n} components")
    if not 0 <= k <= model.base_dim:
        raise ValueError(f"k must be in 0..{model.base_dim}")
    g = model._gram(normalization)
    left = g.transpose().apply([GaussRational.coerce(x) for x in psi])
    phi = [GaussRational.coerce(x) for x in phi]
    images = {(): phi}

    def image(word):
        # Gamma_{w0} ... Gamma_{wn} phi, sharing suffixes between words
        if word not in images:
            images[word] = model.gammas[word[0]].apply(image(word[1:]))
        return images[word]

    out = {}
    for word in combinations(model.labels, k):
        v = image(word)
        val = ZERO
        for a, b in zip(left, v):
            if a and b:
                val = val + a * b
        if val:
            out[word] = val
    return out


# Lie algebra ---------------------------------------------------------------


def lie_param_labels(model: CliffordModel) -> list[tuple[int, ...]]:
    """Parameter order: ``(a,)`` for ``w^{d a}`` then ``(a, b)`` with a < b for ``w^{ab}``."""
    if model.distinguished is None:
        raise ValueError(f"{model.name} has no Lie parametrization")
    others = [a for a in model.labels if a != model.distinguished]
    return [(a,) for a in others] + list(combinations(others, 2))


@dataclass(frozen=True)
class LieParams:
    """Real coefficients: ``vector[a]`` multiplies Gamma_d Gamma_a, ``bivector[(a,b)]`` Gamma_a Gamma_b."""

    vector: Mapping[int, Fraction]
    bivector: Mapping[tuple[int, int], Fraction]

    @classmethod
    def from_flat(cls, model: CliffordModel, values: Sequence[Scalar]) -> "LieParams":
        labels = lie_param_labels(model)
        if len(values) != len(labels):
            raise ValueError(f"{model.name}: expected {len(labels)} Lie parameters, got {len(values)}")
        vec, biv = {}, {}
        for lab, v in zip(labels, values):
            v = GaussRational.coerce(v)
            if not v.is_real():
                raise ValueError("Lie parameters must be real")
            if len(lab) == 1:
                vec[lab[0]] = v.re
            else:
                biv[lab] = v.re
        return cls(vec, biv)

    @classmethod
    def single(cls, model: CliffordModel, *label: int, value: Scalar = 1) -> "LieParams":
        value = GaussRational.coerce(value).re
        if len(label) == 1:
            return cls({label[0]: value}, {})
        a, b = label
        if a == b:
            raise ValueError("bivector parameter needs distinct indices")
        return cls({}, {(a, b) if a < b else (b, a): value if a < b else -value})

    def get(self, a: int, b: int | None = None) -> Fraction:
        if b is None:
            return Fraction(self.vector.get(a, 0))
        if a < b:
            return Fraction(self.bivector.get((a, b), 0))
        return -Fraction(self.bivector.get((b, a), 0))

    def flat(self, model: CliffordModel) -> list[Fraction]:
        return [self.get(*lab) for lab in lie_param_labels(model)]


def lie_generators(model: CliffordModel, chirality: int | None = 1) -> list[Matrix]:
    """Matrices multiplying each Lie parameter, restricted to the requested chiral block."""
    d = model.distinguished
    mats = []
    for lab in lie_param_labels(model):
        word = (d, lab[0]) if len(lab) == 1 else lab
        m = model.gamma_product(word)
        if chirality is not None:
            idx = model.chiral_indices(chirality)
            m = m.submatrix(idx, idx)
        mats.append(m)
    return mats


def lie_element(model: CliffordModel, params: LieParams, chirality: int | None = 1) -> Matrix:
    gens = lie_generators(model, chirality)
    out = Matrix.zeros(gens[0].rows)
    for c, m in zip(params.flat(model), gens):
        if c:
            out = out + m.scale(c)
    return out
