"""Spinor geometry: annihilators, stabilizers, structures from bilinears, orbits, Hopf maps.

Spinors are full Dirac columns in a model's coordinates and must be Weyl
(one chirality).  Base-space vectors are label-indexed: component ``I``
multiplies ``Gamma_I``.  Forms are sparse dicts from increasing label tuples
to exact scalars.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import composition as comp
from .clifford import (
    CliffordModel,
    LieParams,
    bilinear,
    lie_generators,
    lie_param_labels,
)
from .exact_linalg import (
    ZERO,
    GaussRational,
    Matrix,
    Scalar,
    kernel_basis,
    rank,
    sqrt_rational,
    stack_rows,
    vec_add,
    vec_is_zero,
    vec_scale,
)
from .polyforms import sort_with_sign

Form = dict[tuple[int, ...], GaussRational]


class DegenerateSpinor(ValueError):
    """Raised for zero or mixed-chirality input where a Weyl spinor is required."""


# Forms ---------------------------------------------------------------------

def form(terms: Iterable[tuple[Scalar, Sequence[int]]]) -> Form:
    """Sum of ``c * e^{word}``; words may be unsorted."""
    out: Form = {}
    for c, word in terms:
        sign, key = sort_with_sign(word)
        if not sign:
            continue
        c = GaussRational.coerce(c)
        v = out.get(key, ZERO) + (c if sign > 0 else -c)
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def form_add(*forms: Form) -> Form:
    return form((c, k) for f in forms for k, c in f.items())


def form_scale(c: Scalar, f: Form) -> Form:
    c = GaussRational.coerce(c)
    return {k: c * v for k, v in f.items()} if c else {}


def wedge(f: Form, g: Form) -> Form:
    terms = []
    for a, ca in f.items():
        for b, cb in g.items():
            if not set(a) & set(b):
                terms.append((ca * cb, a + b))
    return form(terms)


def form_str(f: Form) -> str:
    if not f:
        return "0"
    parts = []
    for k in sorted(f, key=lambda t: (len(t), t)):
        parts.append(f"({f[k]})e" + "".join(map(str, k)))
    return " + ".join(parts)


def three_form_of(tf: comp.ThreeForm) -> Form:
    return form((c, k) for k, c in tf.coeffs.items())


def octonion_dual_four_form() -> Form:
    """``e1234 + e67(e41 - e23) + e75(e42 - e31) + e56(e43 - e12)``."""
    return form([
        (1, (1, 2, 3, 4)),
        (1, (6, 7, 4, 1)), (-1, (6, 7, 2, 3)),
        (1, (7, 5, 4, 2)), (-1, (7, 5, 3, 1)),
        (1, (5, 6, 4, 3)), (-1, (5, 6, 1, 2)),
    ])


# Weyl spinors --------------------------------------------------------------

def _weyl(model: CliffordModel, psi: Sequence[Scalar]) -> tuple[int, list[GaussRational]]:
    psi = [GaussRational.coerce(c) for c in psi]
    if len(psi) != model.dim_spinor:
        raise ValueError(f"{model.name}: spinors have {model.dim_spinor} components, got {len(psi)}")
    if vec_is_zero(psi):
        raise DegenerateSpinor("zero spinor")
    if model.chirality is None:
        raise ValueError(f"{model.name} has no chirality operator")
    sign = model.chirality_of(psi)
    if not sign:
        raise DegenerateSpinor("spinor is not of definite chirality")
    return sign, psi


def _real_rows(columns: Sequence[Sequence[GaussRational]]) -> Matrix:
    """Rows of the real system ``sum x_j columns[j] = 0`` for real unknowns ``x``."""
    n = len(columns[0])
    rows = []
    for i in range(n):
        rows.append([c[i].re for c in columns])
        rows.append([c[i].im for c in columns])
    return Matrix(rows)


# Annihilators --------------------------------------------------------------

@dataclass
class AnnihilatorReport:
    basis: list[list[GaussRational]]
    dim: int
    real_index: int
    half_dim: int
    labels: tuple[int, ...]

    @property
    def pure(self) -> bool:
        return self.dim == self.half_dim

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "real_index": self.real_index,
            "pure": self.pure,
            "labels": list(self.labels),
            "basis": [[c.to_json() for c in v] for v in self.basis],
        }


def annihilator(model: CliffordModel, psi: Sequence[Scalar]) -> AnnihilatorReport:
    """Complex base vectors ``v`` with ``(sum v^I Gamma_I) psi = 0``."""
    _, psi = _weyl(model, psi)
    cols = [model.gammas[a].apply(psi) for a in model.labels]
    m = Matrix.from_columns(cols)
    basis = kernel_basis(m)
    real_index = len(model.labels) - rank(_real_rows(cols))
    return AnnihilatorReport(basis, len(basis), real_index, model.base_dim // 2, model.labels)


def is_pure(model: CliffordModel, psi: Sequence[Scalar]) -> bool:
    return annihilator(model, psi).pure


def cartan_vanishing(model: CliffordModel, psi: Sequence[Scalar]) -> bool:
    """True iff ``B_k(psi, psi) = 0`` for every ``k < n`` (n = half the base dimension)."""
    _, psi = _weyl(model, psi)
    return all(not bilinear(model, k, psi, psi) for k in range(model.base_dim // 2))


# Stabilizers ---------------------------------------------------------------

STABILIZER_NAMES = {
    "pure": "su(4)",
    "generic-su4": "su(4)",
    "majorana-direction": "spin(7)",
    "case-1-su22": "su(2,2)",
    "case-2-sl4r": "sl(4,R)",
    "case-3-su22": "su(2,2)",
    "case-4-beta-null": "beta-null",
    "case-5-alpha-null": "alpha-null",
}
# Real form of the Majorana-direction stabilizer differs between the two signatures.
MAJORANA_STABILIZER = {"cl8": "spin(7)", "cl44-real": "spin(4,3)", "cl44-complex": "spin(4,3)"}


@dataclass
class StabilizerReport:
    dim: int
    kernel: list[list[Fraction]]
    system: Matrix
    params: list[tuple[int, ...]]
    label: str | None = None

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "label": self.label,
            "params": ["w" + "".join(map(str, p)) for p in self.params],
            "equations": rank(self.system) if self.system.rows else 0,
            "kernel": [[str(c) for c in v] for v in self.kernel],
        }


def stabilizer_system(model: CliffordModel, psi: Sequence[Scalar]) -> Matrix:
    """Real rows (real and imaginary parts) of ``lie_element(w) psi = 0`` in the Lie parameters."""
    sign, psi = _weyl(model, psi)
    half = model.chiral_part(psi, sign)
    gens = lie_generators(model, sign)
    return _real_rows([g.apply(half) for g in gens])


def joint_stabilizer(model: CliffordModel, psis: Sequence[Sequence[Scalar]], label: str | None = None) -> StabilizerReport:
    if not psis:
        raise ValueError("need at least one spinor")
    system = stack_rows([stabilizer_system(model, p) for p in psis])
    basis = kernel_basis(system)
    kernel = [[c.re for c in v] for v in basis]
    return StabilizerReport(len(kernel), kernel, system, lie_param_labels(model), label)


def stabilizer(model: CliffordModel, psi: Sequence[Scalar]) -> StabilizerReport:
    report = joint_stabilizer(model, [psi])
    if model.name in ORBIT_MODELS:
        orbit = classify_orbit(model, psi).label
        if orbit == "majorana-direction":
            report.label = MAJORANA_STABILIZER[model.name]
        else:
            report.label = STABILIZER_NAMES.get(orbit)
    return report


def same_system(a: Matrix, b: Matrix) -> bool:
    """Equal row spaces, i.e. the two homogeneous systems have the same solutions."""
    r = rank(a)
    return r == rank(b) == rank(stack_rows([a, b]))


def lie_equations(model: CliffordModel, equations: Iterable[Mapping[str, Scalar]]) -> Matrix:
    """Rows from ``{"w3": 1, "w12": -1, "w74": 1}``-style equations; ``w74`` means ``-w47``."""
    params = lie_param_labels(model)
    index = {p: i for i, p in enumerate(params)}
    rows = []
    for eq in equations:
        row = [Fraction(0)] * len(params)
        for name, c in eq.items():
            digits = tuple(int(ch) for ch in name.lstrip("w"))
            sign = 1
            if len(digits) == 2 and digits[0] > digits[1]:
                digits, sign = digits[::-1], -1
            if digits not in index:
                raise ValueError(f"unknown Lie parameter {name!r}")
            row[index[digits]] += sign * GaussRational.coerce(c).re
        rows.append(row)
    return Matrix(rows)


# Structures from pairs -------------------------------------------------------

@dataclass
class PairStructure:
    two_form: Form
    endomorphism: Matrix
    square: GaussRational | None
    kind: str
    real_form: Matrix | None = None

    def to_json(self) -> dict:
        return {
            "two_form": {"".join(map(str, k)): v.to_json() for k, v in sorted(self.two_form.items())},
            "kind": self.kind,
            "J_squared": None if self.square is None else self.square.to_json(),
        }


def raise_index(model: CliffordModel, f: Form) -> Matrix:
    """``J^a_b = g^{aa} F_{ab}`` in label order."""
    labels = list(model.labels)
    pos = {a: i for i, a in enumerate(labels)}
    m = Matrix.zeros(len(labels))
    for (a, b), c in f.items():
        m.entries[pos[a]][pos[b]] = c * model.metric[a]
        m.entries[pos[b]][pos[a]] = -c * model.metric[b]
    return m


def structure_from_pair(model: CliffordModel, psi: Sequence[Scalar], phi: Sequence[Scalar]) -> PairStructure:
    """``B_2(psi, phi)`` with its index raised; classified by ``J^2``."""
    f = bilinear(model, 2, psi, phi)
    if not f:
        raise DegenerateSpinor("B_2 vanishes for this pair")
    j = raise_index(model, f)
    n = j.rows
    sq = j @ j
    lam = sq[0, 0]
    if sq != Matrix.identity(n).scale(lam) or not lam:
        return PairStructure(f, j, None, "degenerate")
    z = next(v for v in j.flatten() if v)
    jr = j.scale(GaussRational(1) / z)
    if not jr.is_real():
        return PairStructure(f, j, lam, "mixed")
    lam_r = lam / (z * z)
    kind = "complex" if lam_r.re < 0 else "paracomplex"
    return PairStructure(f, j, lam, kind, jr)


def four_form(model: CliffordModel, psi: Sequence[Scalar], phi: Sequence[Scalar]) -> Form:
    return bilinear(model, 4, psi, phi)


# Orbits --------------------------------------------------------------------

ORBIT_MODELS = ("cl8", "cl44-real", "cl44-complex")


@dataclass(frozen=True)
class HyperbolicPoint:
    """Rational ``(c, s)`` on ``c^2 - s^2 = 1`` (hyperbola) or ``c^2 + s^2 = 1`` (circle)."""

    c: Fraction
    s: Fraction
    kind: str = "hyperbola"

    def __post_init__(self):
        c, s = Fraction(self.c), Fraction(self.s)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "s", s)
        if self.kind == "hyperbola":
            ok = c * c - s * s == 1
        elif self.kind == "circle":
            ok = c * c + s * s == 1
        else:
            raise ValueError(f"unknown kind {self.kind!r}")
        if not ok:
            raise ValueError(f"({c}, {s}) is not on the {self.kind}")

    @classmethod
    def from_parameter(cls, t: Fraction, kind: str = "hyperbola") -> "HyperbolicPoint":
        """Rational parametrisation; ``t`` avoids the poles (``|t| != 1`` on the hyperbola)."""
        t = Fraction(t)
        if kind == "hyperbola":
            d = 1 - t * t
            if not d:
                raise ValueError("t = +-1 is a pole of the hyperbola parametrisation")
            return cls((1 + t * t) / d, 2 * t / d, kind)
        d = 1 + t * t
        return cls((1 - t * t) / d, 2 * t / d, kind)


@dataclass
class OrbitInvariants:
    q_self: GaussRational
    q_R: GaussRational
    alpha_norm2: Fraction
    beta_norm2: Fraction
    alpha_beta_pairing: Fraction
    alpha_null: bool
    beta_null: bool
    chirality: int

    def to_json(self) -> dict:
        return {
            "q_self": self.q_self.to_json(),
            "q_R": self.q_R.to_json(),
            "alpha_norm2": str(self.alpha_norm2),
            "beta_norm2": str(self.beta_norm2),
            "alpha_beta_pairing": str(self.alpha_beta_pairing),
            "alpha_null": self.alpha_null,
            "beta_null": self.beta_null,
            "chirality": self.chirality,
        }


@dataclass
class OrbitReport:
    invariants: OrbitInvariants
    label: str
    real_index: int | None = None
    note: str = ""

    def to_json(self) -> dict:
        out = {"label": self.label, "invariants": self.invariants.to_json()}
        if self.real_index is not None:
            out["real_index"] = self.real_index
        if self.note:
            out["note"] = self.note
        return out


def _conjugation_key(model: CliffordModel) -> str:
    return "R" if model.name == "cl8" else "Rprime"


def conjugation(model: CliffordModel, psi: Sequence[Scalar]) -> list[GaussRational]:
    """The reality operator that is plain complex conjugation of the octonion coordinates."""
    return model.reality[_conjugation_key(model)].apply(psi)


def _check_orbit_model(model: CliffordModel) -> None:
    if model.name not in ORBIT_MODELS:
        raise ValueError(f"orbit classification is implemented for {', '.join(ORBIT_MODELS)}, not {model.name}")


def orbit_invariants(model: CliffordModel, psi: Sequence[Scalar]) -> OrbitInvariants:
    _check_orbit_model(model)
    sign, psi = _weyl(model, psi)
    alg = comp.make_algebra(model.algebra)
    half = model.chiral_part(psi, sign)
    alpha = alg.element([c.re for c in half])
    beta = alg.element([c.im for c in half])
    a2, b2 = comp.norm2(alpha).re, comp.norm2(beta).re
    ab = comp.pairing(alpha, beta).re
    return OrbitInvariants(
        q_self=model.pair(psi, psi),
        q_R=model.pair(conjugation(model, psi), psi),
        alpha_norm2=a2,
        beta_norm2=b2,
        alpha_beta_pairing=ab,
        alpha_null=not vec_is_zero(alpha.coords) and a2 == 0,
        beta_null=not vec_is_zero(beta.coords) and b2 == 0,
        chirality=sign,
    )


def _real_multiple(half: Sequence[GaussRational]) -> bool:
    """Is ``alpha + i beta`` a complex multiple of a real vector (alpha, beta dependent)?"""
    rows = [[c.re for c in half], [c.im for c in half]]
    return rank(Matrix(rows)) <= 1


PURE_TYPES = {4: "pure-paracomplex-type", 2: "pure-mixed-type", 0: "pure-complex-type"}


def classify_orbit(model: CliffordModel, psi: Sequence[Scalar]) -> OrbitReport:
    """Orbit label from sign and nullity data; no normalisation is needed.

    With ``q = <psi, psi>`` and ``r = <R psi, psi>``, the normalised value of
    ``r`` is ``r / |q|``, so the cases compare ``r^2`` with ``|q|^2``.
    """
    inv = orbit_invariants(model, psi)
    sign = inv.chirality
    q, r = inv.q_self, inv.q_R.re
    if not q:
        if model.name == "cl8":
            return OrbitReport(inv, "pure", None)
        ann = annihilator(model, psi)
        return OrbitReport(inv, PURE_TYPES.get(ann.real_index, "pure-index-%d" % ann.real_index), ann.real_index)
    half = model.chiral_part(psi, sign)
    if _real_multiple(half):
        return OrbitReport(inv, "majorana-direction")
    if model.name == "cl8":
        return OrbitReport(inv, "generic-su4")
    r2, q2 = r * r, q.abs2()
    if r2 > q2:
        return OrbitReport(inv, "case-1-su22" if r > 0 else "case-3-su22")
    if r2 < q2:
        return OrbitReport(inv, "case-2-sl4r")
    if r > 0:
        return OrbitReport(inv, "case-4-beta-null")
    return OrbitReport(inv, "case-5-alpha-null", note="no reference stabilizer for this representative; dimension computed here")


def octonion_spinor(model: CliffordModel, re: Sequence[Scalar], im: Sequence[Scalar] | None = None, sign: int = 1) -> list[GaussRational]:
    """Dirac column of the Weyl spinor ``alpha + i beta`` given octonion coordinates."""
    _check_orbit_model(model)
    im = im if im is not None else [0] * len(re)
    if len(re) != 8 or len(im) != 8:
        raise ValueError("octonion coordinates need 8 entries")
    half = [GaussRational(Fraction(a), Fraction(b)) for a, b in zip(re, im)]
    return model.embed(half, sign)


def _unit(a: int, c: Scalar = 1) -> list[Fraction]:
    v = [Fraction(0)] * 8
    v[a] = Fraction(c)
    return v


def orbit_representative(model: CliffordModel, case: str, point: HyperbolicPoint | None = None) -> list[GaussRational]:
    """The unit representatives used for the orbit cases (octonion indices: 0 = identity)."""
    def pair(a, ca, b, cb):
        return octonion_spinor(model, _unit(a, ca), _unit(b, cb))

    if case == "case-4-beta-null":
        return octonion_spinor(model, _unit(0), _add(_unit(3), _unit(4)))
    if case == "case-5-alpha-null":
        return octonion_spinor(model, _add(_unit(3), _unit(7)), _unit(4))
    if point is None:
        raise ValueError(f"{case} needs a HyperbolicPoint")
    c, s = point.c, point.s
    if model.name == "cl8" and case == "generic-su4":
        return pair(0, c, 4, s)
    table = {
        "case-1-su22": ("hyperbola", lambda: pair(0, c, 3, s)),
        "case-2-sl4r": ("circle", lambda: pair(0, c, 4, s)),
        "case-3-su22": ("hyperbola", lambda: pair(4, s, 7, c)),
    }
    if case not in table:
        raise ValueError(f"no representative for {case!r}")
    kind, build = table[case]
    if point.kind != kind:
        raise ValueError(f"{case} uses a point on the {kind}")
    return build()


def _add(u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
    return [a + b for a, b in zip(u, v)]


def impure_to_pure(model: CliffordModel, psi: Sequence[Scalar]) -> list[GaussRational]:
    """``(lambda psi - R psi)/sqrt(lambda^2 - 1)`` for a unit spinor (``i sqrt(1 - lambda^2)`` if |lambda| < 1)."""
    inv = orbit_invariants(model, psi)
    if inv.q_self != GaussRational(1):
        raise ValueError("impure_to_pure needs a unit spinor, <psi, psi> = 1")
    lam = inv.q_R.re
    d = lam * lam - 1
    if d == 0:
        raise ValueError("lambda = +-1: the construction is not applicable")
    root = sqrt_rational(abs(d))
    if root is None:
        raise ValueError(f"normaliser sqrt({abs(d)}) is irrational; use a HyperbolicPoint representative")
    denom = GaussRational(root) if d > 0 else GaussRational(0, root)
    psi = [GaussRational.coerce(c) for c in psi]
    num = [lam * a - b for a, b in zip(psi, conjugation(model, psi))]
    return vec_scale(GaussRational(1) / denom, num)


# Hopf maps -----------------------------------------------------------------

HOPF_METRICS = {"H": (1, 1, 1, 1, 1, -1), "Hsplit": (1, -1, -1, 1, 1, -1)}


def hopf_map(variant: str, u: comp.AlgElement, v: comp.AlgElement) -> list[GaussRational]:
    """``(2 (v, e_a u) for a = 0..3, |u|^2 - |v|^2, |u|^2 + |v|^2)``."""
    kind = comp.canonical_kind(variant)
    if kind not in HOPF_METRICS:
        raise ValueError(f"Hopf map needs H or Hsplit, got {variant!r}")
    if u.algebra.kind != kind or v.algebra.kind != kind:
        raise ValueError("algebra mismatch")
    alg = u.algebra
    out = [comp.pairing(v, alg.basis(a) * u) * 2 for a in range(4)]
    nu, nv = comp.norm2(u), comp.norm2(v)
    return out + [nu - nv, nu + nv]


def ambient_norm(variant: str, x: Sequence[Scalar]) -> GaussRational:
    metric = HOPF_METRICS[comp.canonical_kind(variant)]
    total = ZERO
    for g, c in zip(metric, x):
        c = GaussRational.coerce(c)
        total = total + c * c * g
    return total


# Three-form decomposability ------------------------------------------------

@dataclass
class Decomposition:
    three_form: Form
    decomposable: bool
    factors: list[list[GaussRational]] = field(default_factory=list)
    scale: GaussRational | None = None

    def to_json(self) -> dict:
        return {
            "decomposable": self.decomposable,
            "three_form": {"".join(map(str, k)): v.to_json() for k, v in sorted(self.three_form.items())},
            "factors": [[c.to_json() for c in f] for f in self.factors],
            "scale": None if self.scale is None else self.scale.to_json(),
        }


def vector_form(labels: Sequence[int], v: Sequence[GaussRational]) -> Form:
    return form((c, (a,)) for a, c in zip(labels, v) if c)


def majorana_weyl(model: CliffordModel, psi: Sequence[Scalar]) -> list[GaussRational]:
    """``psi + R'(psi)``, which is fixed by ``R'`` whenever ``R'^2 = 1``."""
    psi = [GaussRational.coerce(c) for c in psi]
    return vec_add(psi, model.reality["Rprime"].apply(psi))


def b3_decomposability(model: CliffordModel, psi: Sequence[Scalar]) -> Decomposition:
    """Factor ``B_3(psi, psi)`` of a cl33 Majorana-Weyl spinor into three null directions."""
    if model.name != "cl33":
        raise ValueError("b3_decomposability is defined for cl33")
    _, psi = _weyl(model, psi)
    if model.reality["Rprime"].apply(psi) != psi:
        raise DegenerateSpinor("spinor is not Majorana (R'psi != psi)")
    t = bilinear(model, 3, psi, psi)
    if not t:
        return Decomposition(t, False)
    labels = list(model.labels)
    quads = sorted({k for a in labels for k in wedge({(a,): GaussRational(1)}, t)})
    cols = []
    for a in labels:
        w = wedge({(a,): GaussRational(1)}, t)
        cols.append([w.get(k, ZERO) for k in quads])
    kern = kernel_basis(Matrix.from_columns(cols)) if quads else []
    if len(kern) != 3:
        return Decomposition(t, False)
    factors = []
    for v in kern:
        w = next(c for c in v if c)
        factors.append(vec_scale(GaussRational(1) / w, v))
    prod = wedge(wedge(vector_form(labels, factors[0]), vector_form(labels, factors[1])), vector_form(labels, factors[2]))
    key = next(iter(prod))
    k = t.get(key, ZERO) / prod[key]
    if form_scale(k, prod) != t:
        return Decomposition(t, False)
    return Decomposition(t, True, factors, k)


def is_null_vector(model: CliffordModel, v: Sequence[GaussRational]) -> bool:
    total = ZERO
    for a, c in zip(model.labels, v):
        total = total + c * c * model.metric[a]
    return not total
