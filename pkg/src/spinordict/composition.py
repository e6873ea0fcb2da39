"""Composition algebras C, C', H, H', O, O' with exact structure constants.

Basis index 0 is the identity; indices 1..dim-1 are the imaginary units.  The
imaginary product is ``x y = -(x, y) 1 + x cross y``.  The cross product is read off
a totally antisymmetric 3-form by raising the last index with the algebra's own
norm signature, ``(u cross v)^c = eta^{cc} C(u, v, e_c)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .exact_linalg import ZERO, GaussRational, Matrix, Scalar

KINDS = ("C", "Csplit", "H", "Hsplit", "O", "Osplit")

# Accepted spellings for the algebra names used on the command line and in JSON.
ALIASES = {
    "C": "C",
    "Csplit": "Csplit",
    "C'": "Csplit",
    "C-split": "Csplit",
    "H": "H",
    "Hsplit": "Hsplit",
    "H'": "Hsplit",
    "H-split": "Hsplit",
    "O": "O",
    "Osplit": "Osplit",
    "O'": "Osplit",
    "O-split": "Osplit",
}


def canonical_kind(kind: str) -> str:
    try:
        return ALIASES[kind]
    except KeyError:
        raise ValueError(f"unknown composition algebra {kind!r}; expected one of {sorted(ALIASES)}") from None


class ThreeForm:
    """Totally antisymmetric 3-form on imaginary indices, stored on sorted triples."""

    def __init__(self, terms: Sequence[tuple[int, Sequence[int]]] = ()):
        self.coeffs: dict[tuple[int, int, int], int] = {}
        for c, word in terms:
            self.add(c, word)

    def add(self, c: int, word: Sequence[int]) -> None:
        a, b, d = word
        if len({a, b, d}) < 3:
            raise ValueError(f"3-form word {tuple(word)} has a repeated index")
        inv = (a > b) + (a > d) + (b > d)
        key = tuple(sorted(word))
        val = self.coeffs.get(key, 0) + (-c if inv % 2 else c)
        if val:
            self.coeffs[key] = val
        else:
            self.coeffs.pop(key, None)

    def __call__(self, a: int, b: int, c: int) -> int:
        if len({a, b, c}) < 3:
            return 0
        key = tuple(sorted((a, b, c)))
        val = self.coeffs.get(key, 0)
        inv = (a > b) + (a > c) + (b > c)
        return -val if inv % 2 else val

    def is_antisymmetric(self, indices: Sequence[int]) -> bool:
        for a, b, c in permutations(indices, 3):
            if self(a, b, c) != -self(b, a, c) or self(a, b, c) != -self(a, c, b):
                return False
        return True


def octonion_three_form() -> ThreeForm:
    """e^567 + e^5(e^41 - e^23) + e^6(e^42 - e^31) + e^7(e^43 - e^12)."""
    return ThreeForm([
        (1, (5, 6, 7)),
        (1, (5, 4, 1)), (-1, (5, 2, 3)),
        (1, (6, 4, 2)), (-1, (6, 3, 1)),
        (1, (7, 4, 3)), (-1, (7, 1, 2)),
    ])


def split_octonion_three_form() -> ThreeForm:
    """e^123 - e^1(e^45 - e^67) - e^2(e^46 - e^75) - e^3(e^47 - e^56)."""
    return ThreeForm([
        (1, (1, 2, 3)),
        (-1, (1, 4, 5)), (1, (1, 6, 7)),
        (-1, (2, 4, 6)), (1, (2, 7, 5)),
        (-1, (3, 4, 7)), (1, (3, 5, 6)),
    ])


def quaternion_three_form() -> ThreeForm:
    return ThreeForm([(1, (1, 2, 3))])


_SIGNATURES = {
    "C": (1, 1),
    "Csplit": (1, -1),
    "H": (1, 1, 1, 1),
    "Hsplit": (1, -1, -1, 1),
    "O": (1,) * 8,
    "Osplit": (1, 1, 1, 1, -1, -1, -1, -1),
}

_LABELS = {
    "C": ("1", "e1"),
    "Csplit": ("1", "e1"),
    "H": ("1", "i", "j", "k"),
    "Hsplit": ("1", "i", "j", "k"),
    "O": tuple(["1"] + [f"e{a}" for a in range(1, 8)]),
    "Osplit": tuple(["1"] + [f"e{a}" for a in range(1, 8)]),
}


def _three_form_for(kind: str) -> ThreeForm:
    if kind in ("O",):
        return octonion_three_form()
    if kind == "Osplit":
        return split_octonion_three_form()
    if kind in ("H", "Hsplit"):
        return quaternion_three_form()
    return ThreeForm()


@dataclass(frozen=True)
class CompAlgebra:
    """Structure constants ``structure[a][b] = (sign, c)`` meaning ``e_a e_b = sign * e_c``."""

    kind: str
    dim: int
    split: bool
    norm_signature: tuple[int, ...]
    structure: tuple[tuple[tuple[int, int], ...], ...]
    three_form: ThreeForm = field(compare=False, repr=False)

    @property
    def labels(self) -> tuple[str, ...]:
        return _LABELS[self.kind]

    def basis(self, a: int) -> "AlgElement":
        coords = [ZERO] * self.dim
        coords[a] = GaussRational(1)
        return AlgElement(self, coords)

    def element(self, coords: Sequence[Scalar]) -> "AlgElement":
        return AlgElement(self, [GaussRational.coerce(c) for c in coords])

    def one(self) -> "AlgElement":
        return self.basis(0)

    def zero(self) -> "AlgElement":
        return AlgElement(self, [ZERO] * self.dim)

    def product_word(self, a: int, b: int) -> str:
        sign, c = self.structure[a][b]
        return ("+" if sign > 0 else "-") + self.labels[c]


def _build_structure(kind: str) -> tuple:
    eta = _SIGNATURES[kind]
    dim = len(eta)
    form = _three_form_for(kind)
    table = []
    for a in range(dim):
        row = []
        for b in range(dim):
            if a == 0:
                row.append((1, b))
            elif b == 0:
                row.append((1, a))
            elif a == b:
                row.append((-eta[a], 0))
            else:
                hits = [(eta[c] * form(a, b, c), c) for c in range(1, dim) if form(a, b, c)]
                if len(hits) != 1 or abs(hits[0][0]) != 1:
                    raise ArithmeticError(f"{kind}: product e{a} e{b} is not a signed basis element")
                row.append(hits[0])
        table.append(tuple(row))
    return tuple(table)


_CACHE: dict[str, CompAlgebra] = {}


def make_algebra(kind: str) -> CompAlgebra:
    """Build (and cache) one of the six composition algebras."""
    kind = canonical_kind(kind)
    if kind not in _CACHE:
        eta = _SIGNATURES[kind]
        _CACHE[kind] = CompAlgebra(
            kind=kind,
            dim=len(eta),
            split=kind.endswith("split"),
            norm_signature=eta,
            structure=_build_structure(kind),
            three_form=_three_form_for(kind),
        )
    return _CACHE[kind]


class AlgElement:
    """Vector in a composition algebra (or its complexification) with exact coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: CompAlgebra, coords: Sequence[Scalar]):
        if len(coords) != algebra.dim:
            raise ValueError(f"{algebra.kind} element needs {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = [GaussRational.coerce(c) for c in coords]

    def _same(self, other: "AlgElement") -> None:
        if not isinstance(other, AlgElement) or other.algebra.kind != self.algebra.kind:
            raise ValueError("algebra mismatch")

    def __add__(self, other):
        self._same(other)
        return AlgElement(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._same(other)
        return AlgElement(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return AlgElement(self.algebra, [-a for a in self.coords])

    def scale(self, c: Scalar) -> "AlgElement":
        c = GaussRational.coerce(c)
        return AlgElement(self.algebra, [c * a for a in self.coords])

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.algebra.kind == other.algebra.kind and self.coords == other.coords

    def __repr__(self):
        parts = [f"({c!r}){lab}" for c, lab in zip(self.coords, self.algebra.labels) if c]
        return f"{self.algebra.kind}[" + (" + ".join(parts) or "0") + "]"

    def real_part(self) -> "AlgElement":
        return AlgElement(self.algebra, [GaussRational(c.re) for c in self.coords])

    def imag_part(self) -> "AlgElement":
        return AlgElement(self.algebra, [GaussRational(c.im) for c in self.coords])

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coords)


def mul(x: AlgElement, y: AlgElement) -> AlgElement:
    x._same(y)
    alg = x.algebra
    out = [ZERO] * alg.dim
    for a, xa in enumerate(x.coords):
        if not xa:
            continue
        for b, yb in enumerate(y.coords):
            if not yb:
                continue
            sign, c = alg.structure[a][b]
            t = xa * yb
            out[c] = out[c] + (t if sign > 0 else -t)
    return AlgElement(alg, out)


def conj(x: AlgElement) -> AlgElement:
    """Algebra conjugation (imaginary units flip sign); coefficients are untouched."""
    return AlgElement(x.algebra, [x.coords[0]] + [-c for c in x.coords[1:]])


def pairing(x: AlgElement, y: AlgElement) -> GaussRational:
    """Complex-bilinear extension of the real norm pairing."""
    x._same(y)
    total = ZERO
    for s, a, b in zip(x.algebra.norm_signature, x.coords, y.coords):
        total = total + (a * b if s > 0 else -(a * b))
    return total


def norm2(x: AlgElement) -> GaussRational:
    return pairing(x, x)


def hermitian_pairing(x: AlgElement, y: AlgElement) -> GaussRational:
    """``sum eta_a conj(x_a) y_a``: the sesquilinear extension."""
    x._same(y)
    total = ZERO
    for s, a, b in zip(x.algebra.norm_signature, x.coords, y.coords):
        t = a.conj() * b
        total = total + (t if s > 0 else -t)
    return total


def is_null(x: AlgElement) -> bool:
    return not norm2(x)


def left_mult_matrix(x: AlgElement) -> Matrix:
    alg = x.algebra
    return Matrix.from_columns([mul(x, alg.basis(b)).coords for b in range(alg.dim)])


def right_mult_matrix(x: AlgElement) -> Matrix:
    alg = x.algebra
    return Matrix.from_columns([mul(alg.basis(b), x).coords for b in range(alg.dim)])


def metric_matrix(alg: CompAlgebra) -> Matrix:
    return Matrix.diag(alg.norm_signature)


def cross(x: AlgElement, y: AlgElement) -> AlgElement:
    """Imaginary-part product: ``Im(x) Im(y) + (Im x, Im y) 1``."""
    xi = AlgElement(x.algebra, [ZERO] + x.coords[1:])
    yi = AlgElement(y.algebra, [ZERO] + y.coords[1:])
    p = mul(xi, yi)
    p.coords[0] = p.coords[0] + pairing(xi, yi)
    return p


def cross_from_form(alg: CompAlgebra, a: int, b: int) -> list[int]:
    """Cross product of two imaginary units via 3-form insertion (independent of the table)."""
    eta = alg.norm_signature
    out = [0] * alg.dim
    for c in range(1, alg.dim):
        out[c] = eta[c] * alg.three_form(a, b, c)
    return out


def multiplication_table(alg: CompAlgebra) -> list[list[str]]:
    return [[alg.product_word(a, b) for b in range(alg.dim)] for a in range(alg.dim)]


def table_json(alg: CompAlgebra) -> dict:
    return {"algebra": alg.kind, "labels": list(alg.labels), "table": multiplication_table(alg)}


def table_text(alg: CompAlgebra) -> str:
    table = multiplication_table(alg)
    width = max(len(w) for row in table for w in row) + 1
    head = " " * 4 + "".join(lab.rjust(width) for lab in alg.labels)
    lines = [head]
    for lab, row in zip(alg.labels, table):
        lines.append(lab.rjust(3) + " " + "".join(w.rjust(width) for w in row))
    return "\n".join(lines)


def elementary(a: int, b: int, n: int = 8) -> Matrix:
    """Antisymmetric unit ``E_ab``: +1 at (a, b), -1 at (b, a)."""
    m = Matrix.zeros(n)
    m.entries[a][b] = GaussRational(1)
    m.entries[b][a] = GaussRational(-1)
    return m


def symmetric_elementary(a: int, b: int, n: int = 8) -> Matrix:
    """Symmetric unit ``S_ab``: +1 at (a, b) and (b, a)."""
    m = Matrix.zeros(n)
    m.entries[a][b] = GaussRational(1)
    m.entries[b][a] = GaussRational(1)
    return m


def matrix_from_units(terms: Sequence[tuple[int, str, int, int]], n: int = 8) -> Matrix:
    """Sum of signed ``E``/``S`` units given as ``(sign, 'E'|'S', a, b)``."""
    out = Matrix.zeros(n)
    for sign, kind, a, b in terms:
        unit = elementary(a, b, n) if kind == "E" else symmetric_elementary(a, b, n)
        out = out + unit.scale(sign)
    return out
