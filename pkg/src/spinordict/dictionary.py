"""Explicit maps between polyform spinor coordinates and composition-algebra columns.

Two kinds of dictionary occur.  For the 4- and 6-dimensional models a pair of
complex coordinates is identified with a (split) quaternion by a real-linear
map, so ``forward`` acts on the realified chiral coordinates (real and
imaginary parts interleaved).  For the 8-dimensional models the coordinate
column is already the (complexified) octonion, and ``forward`` is complex
linear.  Every documented operator translation is checked as an exact matrix
identity by :func:`check_dictionary`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from . import composition as comp
from .clifford import AntilinearOp, CheckResult, CliffordModel, ModelReport, build_model
from .exact_linalg import (
    I,
    GaussRational,
    Matrix,
    Scalar,
    complexify_vector,
    realify,
    realify_antilinear,
    realify_vector,
    unrealify,
)

SIDES = {"plus": 1, "minus": -1, "even": 1, "odd": -1}

# Gamma label -> (sign, basis index) of the unit whose left multiplication the
# gamma block becomes.  Under the (u1, u2) coordinates the Pauli-type matrices
# -i sigma^1, -i sigma^2 land on -j and i, so the quaternion labels are rotated
# by the automorphism i -> -j, j -> i, k -> k.  The split case is diagonal.
GAMMA_UNITS = {
    "H": {4: (1, 0), 1: (-1, 2), 2: (1, 1), 3: (1, 3)},
    "Hsplit": {4: (1, 0), 1: (1, 1), 2: (1, 2), 3: (1, 3)},
}


def c2_quaternion_matrix(split: bool = False) -> Matrix:
    """Real map ``(Re u1, Im u1, Re u2, Im u2) -> (q4, q1, q2, q3)``.

    Inverts ``u1 = (q4 - i q3)/2`` together with ``u2 = (q1 + i q2)/2`` (or
    ``(q1 - i q2)/2`` for split quaternions).  Algebra coordinates are ordered
    identity first.
    """
    s = -2 if split else 2
    return Matrix([[2, 0, 0, 0], [0, 0, 2, 0], [0, 0, 0, s], [0, -2, 0, 0]])


@dataclass(frozen=True, eq=False)
class Dictionary:
    """Identification of one chiral half of ``model`` with ``copies`` copies of ``algebra``."""

    name: str
    model: CliffordModel
    side: str
    algebra: comp.CompAlgebra
    copies: int
    real: bool
    forward: Matrix
    backward: Matrix
    conj_twist: AntilinearOp
    notes: Mapping[str, object] = field(default_factory=dict)

    @property
    def chirality(self) -> int:
        return SIDES[self.side]

    @property
    def indices(self) -> list[int]:
        return self.model.chiral_indices(self.chirality)

    def to_algebra(self, half: Sequence[Scalar]) -> list[comp.AlgElement]:
        """Algebra column of a chiral spinor given in the model's chiral coordinates."""
        half = [GaussRational.coerce(c) for c in half]
        flat = self.forward.apply(realify_vector(half) if self.real else half)
        d = self.algebra.dim
        return [self.algebra.element(flat[k * d : (k + 1) * d]) for k in range(self.copies)]

    def from_algebra(self, column: Sequence[comp.AlgElement]) -> list[GaussRational]:
        if len(column) != self.copies:
            raise ValueError(f"{self.name}: expected {self.copies} algebra entries")
        flat = [c for x in column for c in x.coords]
        out = self.backward.apply(flat)
        return complexify_vector(out) if self.real else out

    def transport(self, m: Matrix) -> Matrix:
        """Algebra-side matrix of a complex-linear operator on this chiral half."""
        return self.forward @ (realify(m) if self.real else m) @ self.backward

    def transport_antilinear(self, op: AntilinearOp) -> AntilinearOp:
        if self.real:
            return AntilinearOp(self.forward @ realify_antilinear(op.matrix) @ self.backward, False)
        return AntilinearOp(self.forward @ op.matrix @ self.backward.conj(), op.then_conjugate)

    def round_trip_residual(self) -> Matrix:
        return self.backward @ self.forward - Matrix.identity(self.forward.cols)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "model": self.model.name,
            "side": self.side,
            "algebra": self.algebra.kind,
            "copies": self.copies,
            "coordinates": "realified" if self.real else "complex",
            "forward": self.forward.to_json(),
            "backward": self.backward.to_json(),
            "notes": dict(self.notes),
        }


def between(src: Dictionary, dst: Dictionary, m: Matrix) -> Matrix:
    """Algebra-side matrix of the block of a Dirac operator mapping ``src``'s half to ``dst``'s."""
    block = m.submatrix(dst.indices, src.indices)
    return dst.forward @ (realify(block) if src.real else block) @ src.backward


def between_antilinear(src: Dictionary, dst: Dictionary, op: AntilinearOp) -> Matrix:
    """Same as :func:`between` for an antilinear operator; realified dictionaries only."""
    if not src.real:
        raise ValueError("antilinear cross-chirality transport needs realified coordinates")
    block = op.matrix.submatrix(dst.indices, src.indices)
    return dst.forward @ realify_antilinear(block) @ src.backward


def _real_dictionary(name: str, model_name: str, side: str, kind: str, copies: int, notes=None) -> Dictionary:
    model = build_model(model_name)
    alg = comp.make_algebra(kind)
    q = c2_quaternion_matrix(split=alg.split)
    fwd = Matrix.block_diag(*([q] * copies))
    bwd = fwd.inverse()
    flip = realify_antilinear(Matrix.identity(2 * copies))
    return Dictionary(
        name=name, model=model, side=side, algebra=alg, copies=copies, real=True,
        forward=fwd, backward=bwd, conj_twist=AntilinearOp(fwd @ flip @ bwd, False),
        notes=dict(notes or {}),
    )


def dict_c2_h(side: str = "plus") -> Dictionary:
    """cl4 chiral half (u1, u2) as a quaternion, u1 = (q4 - i q3)/2, u2 = (q1 + i q2)/2."""
    return _real_dictionary("c2-h", "cl4", side, "H", 1, {"u1": "(q4 - i q3)/2", "u2": "(q1 + i q2)/2"})


def dict_c2_hsplit(side: str = "plus") -> Dictionary:
    """cl22 chiral half as a split quaternion, u2 = (q1 - i q2)/2."""
    return _real_dictionary("c2-hsplit", "cl22", side, "Hsplit", 1, {"u1": "(q4 - i q3)/2", "u2": "(q1 - i q2)/2"})


def dict_cl6_h2(side: str = "plus") -> Dictionary:
    return _real_dictionary("cl6-h2", "cl6", side, "H", 2, {"column": "(u, v)"})


def dict_cl51_h2(side: str = "plus") -> Dictionary:
    return _real_dictionary("cl51-h2", "cl51", side, "H", 2, {"column": "(u, v)"})


def dict_cl33_hsplit2(side: str = "plus") -> Dictionary:
    return _real_dictionary("cl33-hsplit2", "cl33", side, "Hsplit", 2, {"column": "(u, v)"})


def _octonion_dictionary(name: str, model_name: str, side: str, notes: dict) -> Dictionary:
    model = build_model(model_name)
    alg = comp.make_algebra(model.algebra)
    ident = Matrix.identity(8)
    return Dictionary(
        name=name, model=model, side=side, algebra=alg, copies=1, real=False,
        forward=ident, backward=ident, conj_twist=AntilinearOp(ident), notes=notes,
    )


def dict_cl8_majorana(side: str = "plus") -> Dictionary:
    """cl8 chiral half: real coordinates alpha_0..alpha_7 are the octonion components."""
    notes = {"u": {"1": [1, 5], "2": [2, 6], "3": [3, 7], "4": [0, 4]}, "majorana": "R-fixed = real coordinates"}
    return _octonion_dictionary("cl8-o", "cl8", side, notes)


def dict_cl44(variant: str = "complex", side: str = "plus") -> Dictionary:
    """cl44 chiral half as (complexified) split octonions; ``variant`` is real or complex."""
    if variant == "complex":
        notes = {
            "u": {"1": [5, 6], "2": [7, 4], "3": [2, 1], "4": [3, 0]},
            "majorana": "R'-fixed = real coordinates",
        }
        return _octonion_dictionary("cl44-complex-o", "cl44-complex", side, notes)
    if variant == "real":
        return _octonion_dictionary("cl44-real-o", "cl44-real", side, {"majorana": "real polyforms"})
    raise ValueError(f"unknown cl44 variant {variant!r}; expected 'real' or 'complex'")


DICTIONARIES: dict[str, Callable[..., Dictionary]] = {
    "c2-h": dict_c2_h,
    "c2-hsplit": dict_c2_hsplit,
    "cl6-h2": dict_cl6_h2,
    "cl51-h2": dict_cl51_h2,
    "cl33-hsplit2": dict_cl33_hsplit2,
    "cl8-o": dict_cl8_majorana,
    "cl44-real-o": lambda side="plus": dict_cl44("real", side),
    "cl44-complex-o": lambda side="plus": dict_cl44("complex", side),
}


def get_dictionary(name: str, side: str = "plus") -> Dictionary:
    if name not in DICTIONARIES:
        raise ValueError(f"unknown dictionary {name!r}; choose from {', '.join(DICTIONARIES)}")
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    return DICTIONARIES[name](side=side)


# Algebra-side operators.

def _right(alg: comp.CompAlgebra, a: int, sign: int = 1) -> Matrix:
    return comp.right_mult_matrix(alg.basis(a)).scale(sign)


def _left(alg: comp.CompAlgebra, a: int, conjugate: bool = False, sign: int = 1) -> Matrix:
    x = alg.basis(a).scale(sign)
    return comp.left_mult_matrix(comp.conj(x) if conjugate else x)


def _blocks2(a, b, c, d) -> Matrix:
    return Matrix.blocks([[a, b], [c, d]])


def _residual(name: str, got: Matrix, expected: Matrix, **detail) -> CheckResult:
    diff = got - expected
    nonzero = sum(1 for v in diff.flatten() if v)
    return CheckResult(name, nonzero == 0, {"nonzero_residual_entries": nonzero, **detail})


def pairing_matrix(src: Dictionary, dst: Dictionary) -> Matrix:
    """Complex matrix ``P`` with ``<psi_dst, psi_src> = x_dst^T P x_src`` in algebra coordinates."""
    g = src.model.gram.submatrix(dst.indices, src.indices)
    if not src.real:
        return dst.backward.T @ g @ src.backward

    def complexifier(d: Dictionary) -> Matrix:
        n = len(d.indices)
        rows = [[0] * (2 * n) for _ in range(n)]
        for k in range(n):
            rows[k][2 * k], rows[k][2 * k + 1] = 1, I
        return Matrix(rows) @ d.backward

    return complexifier(dst).T @ g @ complexifier(src)


def quaternion_pairing_matrix(alg: comp.CompAlgebra, copies: int) -> Matrix:
    """``1/4 (x, y(-i)) + i/4 (x, y(-j))`` summed over copies (``1/(4i)`` and ``+i,+j`` if split)."""
    m = comp.metric_matrix(alg)
    if alg.split:
        one = m @ _right(alg, 1)
        two = (m @ _right(alg, 2)).scale(GaussRational(0, Fraction(-1)))
    else:
        one = m @ _right(alg, 1, -1)
        two = (m @ _right(alg, 2, -1)).scale(I)
    block = (one + two).scale(Fraction(1, 4))
    return Matrix.block_diag(*([block] * copies))


def _gamma_checks(plus: Dictionary, minus: Dictionary) -> list[CheckResult]:
    model, alg = plus.model, plus.algebra
    out = []
    for label, (sign, a) in GAMMA_UNITS[alg.kind].items():
        g = model.gamma(label)
        if plus.copies == 1:
            down, up = _left(alg, a, sign=sign), _left(alg, a, True, sign)
        else:
            z = Matrix.zeros(4)
            down = _blocks2(z, _left(alg, a, True, sign), _left(alg, a, sign=sign), z)
            up = down
        out.append(_residual(f"Gamma_{label} S+ -> S- as L block", between(plus, minus, g), down, gamma=label))
        out.append(_residual(f"Gamma_{label} S- -> S+ as L block", between(minus, plus, g), up, gamma=label))
    return out


def check_dictionary(name: str) -> ModelReport:
    """Round trips and every documented intertwining for dictionary ``name``."""
    plus, minus = get_dictionary(name, "plus"), get_dictionary(name, "minus")
    model, alg = plus.model, plus.algebra
    checks = []
    for d in (plus, minus):
        checks.append(_residual(f"round trip {d.side}", d.round_trip_residual(), Matrix.zeros(d.forward.cols)))
        checks.append(_residual(
            f"inverse {d.side}", d.forward @ d.backward, Matrix.identity(d.forward.rows)))
    if plus.real:
        z4, i4 = Matrix.zeros(4), Matrix.identity(4)
        for d in (plus, minus):
            n = len(d.indices)
            minus_i = Matrix.identity(n).scale(GaussRational(0, -1))
            rk = Matrix.block_diag(*([_right(alg, 3)] * d.copies))
            checks.append(_residual(f"-i as R_k on {d.side}", d.transport(minus_i), rk))
        if name in ("c2-h", "c2-hsplit", "cl51-h2", "cl33-hsplit2"):
            key = "Rprime"
            op = model.reality[key]
            sign, unit = (1, 1) if alg.split else (-1, 1)
            expected = Matrix.block_diag(*([_right(alg, unit, sign)] * plus.copies))
            label = "R' as R_i~" if alg.split else "R' (hat) as -R_i"
            for d in (plus, minus) if plus.copies == 1 else (plus,):
                checks.append(_residual(f"{label} on {d.side}", d.transport_antilinear(op.block(d.indices, d.indices)).matrix, expected))
        checks.extend(_gamma_checks(plus, minus))
        if plus.copies == 2:
            g5 = model.gamma(5)
            d5 = _blocks2(i4, z4, z4, i4.scale(-1))
            checks.append(_residual("Gamma_5 S+ -> S- as diag(1,-1)", between(plus, minus, g5), d5))
            checks.append(_residual("Gamma_5 S- -> S+ as diag(1,-1)", between(minus, plus, g5), d5))
            g6 = model.gamma(6)
            if name == "cl6-h2":
                rk = Matrix.block_diag(_right(alg, 3), _right(alg, 3))
                checks.append(_residual("Gamma_6 S+ -> S- as R_k", between(plus, minus, g6), rk))
                checks.append(_residual("Gamma_6 S- -> S+ as -R_k", between(minus, plus, g6), rk.scale(-1)))
                rj = Matrix.block_diag(_right(alg, 2), _right(alg, 2))
                rp = model.reality["Rprime"]
                checks.append(_residual("R' S+ -> S- as R_j", between_antilinear(plus, minus, rp), rj))
                checks.append(_residual("R' S- -> S+ as -R_j", between_antilinear(minus, plus, rp), rj.scale(-1)))
            else:
                i8 = Matrix.identity(8)
                checks.append(_residual("Gamma_6 S+ -> S- as -1", between(plus, minus, g6), i8.scale(-1)))
                checks.append(_residual("Gamma_6 S- -> S+ as +1", between(minus, plus, g6), i8))
        cross = name in ("cl6-h2", "cl51-h2", "cl33-hsplit2")
        src, dst = (plus, minus) if cross else (plus, plus)
        label = "pairing <S-,S+>" if cross else "pairing <S+,S+>"
        checks.append(_residual(f"{label} in quaternion form", pairing_matrix(src, dst),
                                quaternion_pairing_matrix(alg, plus.copies)))
    else:
        for a in range(1, 8):
            e = _left(alg, a)
            checks.append(_residual(f"Gamma_{a} S+ -> S- as L_e{a}", between(plus, minus, model.gamma(a)), e, gamma=a))
            checks.append(_residual(f"Gamma_{a} S- -> S+ as L_conj(e{a})", between(minus, plus, model.gamma(a)),
                                    _left(alg, a, True), gamma=a))
        i8 = Matrix.identity(8)
        checks.append(_residual("Gamma_0 as identity blocks", between(plus, minus, model.gamma(0)), i8))
        key = "R" if model.name == "cl8" else "Rprime"
        for d in (plus, minus):
            op = model.reality[key].block(d.indices, d.indices)
            checks.append(_residual(f"{key} as coordinate conjugation on {d.side}", op.matrix, i8))
    return ModelReport(name, checks)


def complex_form(d: Dictionary, algebra_matrix: Matrix) -> Matrix:
    """Complex matrix on the polyform pair coordinates of a complex-linear algebra operator."""
    if not d.real:
        return d.backward @ algebra_matrix @ d.forward
    return unrealify(d.backward @ algebra_matrix @ d.forward)
