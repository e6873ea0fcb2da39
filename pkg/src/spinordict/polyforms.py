"""Polyforms: the exterior algebra on at most four generators.

A polyform is a sparse map from strictly increasing index tuples (basis
monomials ``e^{i1 i2 ...}``) to :class:`GaussRational` coefficients.  These are
the spinors of the creation/annihilation operator models: ``create(i)``
wedges ``e^i`` from the left and ``annihilate(i)`` moves ``e^i`` to the
leftmost slot before erasing it.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exact_linalg import ZERO, GaussRational, Scalar, parse_rational, rational_str

MAX_GENERATORS = 4


def sort_with_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort a generator word; return ``(sign, sorted tuple)`` or ``(0, ())`` on repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1 if inversions % 2 else 1), tuple(sorted(idx))


def merge_sign(left: tuple[int, ...], right: tuple[int, ...]) -> int:
    """Sign of the permutation sorting ``left + right``; 0 if they share an index."""
    if set(left) & set(right):
        return 0
    inversions = 0
    for a in left:
        for b in right:
            if a > b:
                inversions += 1
    return -1 if inversions % 2 else 1


def monomials(n: int) -> list[tuple[int, ...]]:
    """All basis monomials on ``n`` generators, ordered by degree then lexicographically."""
    out = []
    for k in range(n + 1):
        out.extend(combinations(range(1, n + 1), k))
    return out


def even_monomials(n: int) -> list[tuple[int, ...]]:
    return [m for m in monomials(n) if len(m) % 2 == 0]


def odd_monomials(n: int) -> list[tuple[int, ...]]:
    return [m for m in monomials(n) if len(m) % 2 == 1]


class Polyform:
    """Element of the exterior algebra on ``gen`` generators with Q(i) coefficients."""

    __slots__ = ("gen", "terms")

    def __init__(self, gen: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        if not 0 <= gen <= MAX_GENERATORS:
            raise ValueError(f"generator count must be in 0..{MAX_GENERATORS}, got {gen}")
        self.gen = gen
        self.terms: dict[tuple[int, ...], GaussRational] = {}
        for word, c in (terms or {}).items():
            self._accumulate(tuple(word), GaussRational.coerce(c))

    def _accumulate(self, word: tuple[int, ...], c: GaussRational) -> None:
        if not c:
            return
        for i in word:
            if not 1 <= i <= self.gen:
                raise ValueError(f"generator index {i} outside 1..{self.gen}")
        sign, key = sort_with_sign(word)
        if not sign:
            return
        total = self.terms.get(key, ZERO) + (c if sign > 0 else -c)
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    @classmethod
    def word(cls, gen: int, *indices: int, coeff: Scalar = 1) -> "Polyform":
        """The monomial ``coeff * e^{i1} ^ e^{i2} ^ ...`` in the given (unsorted) order."""
        return cls(gen, {tuple(indices): coeff})

    @classmethod
    def one(cls, gen: int) -> "Polyform":
        return cls(gen, {(): 1})

    @classmethod
    def from_coords(cls, gen: int, basis: Sequence[tuple[int, ...]], coords: Sequence[Scalar]) -> "Polyform":
        if len(basis) != len(coords):
            raise ValueError("basis/coordinate length mismatch")
        p = cls(gen)
        for m, c in zip(basis, coords):
            p._accumulate(tuple(m), GaussRational.coerce(c))
        return p

    def coords(self, basis: Sequence[tuple[int, ...]]) -> list[GaussRational]:
        known = set(basis)
        stray = [m for m in self.terms if m not in known]
        if stray:
            raise ValueError(f"polyform has components {stray} outside the given basis")
        return [self.terms.get(tuple(m), ZERO) for m in basis]

    def coeff(self, *indices: int) -> GaussRational:
        sign, key = sort_with_sign(indices)
        if not sign:
            return ZERO
        c = self.terms.get(key, ZERO)
        return c if sign > 0 else -c

    def degrees(self) -> set[int]:
        return {len(m) for m in self.terms}

    def is_even(self) -> bool:
        return all(len(m) % 2 == 0 for m in self.terms)

    def is_odd(self) -> bool:
        return all(len(m) % 2 == 1 for m in self.terms)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def _check(self, other: "Polyform") -> None:
        if not isinstance(other, Polyform):
            raise TypeError("expected a Polyform")
        if other.gen != self.gen:
            raise ValueError(f"generator-count mismatch: {self.gen} vs {other.gen}")

    def __add__(self, other: "Polyform") -> "Polyform":
        self._check(other)
        out = self.copy()
        for m, c in other.terms.items():
            out._accumulate(m, c)
        return out

    def __sub__(self, other: "Polyform") -> "Polyform":
        return self + other.scale(-1)

    def __neg__(self) -> "Polyform":
        return self.scale(-1)

    def scale(self, c: Scalar) -> "Polyform":
        c = GaussRational.coerce(c)
        out = Polyform(self.gen)
        if c:
            out.terms = {m: c * v for m, v in self.terms.items()}
        return out

    def __rmul__(self, c: Scalar) -> "Polyform":
        return self.scale(c)

    def copy(self) -> "Polyform":
        out = Polyform(self.gen)
        out.terms = dict(self.terms)
        return out

    def __eq__(self, other):
        if not isinstance(other, Polyform):
            return NotImplemented
        return self.gen == other.gen and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"Polyform({self.gen}: 0)"
        parts = []
        for m in sorted(self.terms, key=lambda t: (len(t), t)):
            label = "1" if not m else "e" + "".join(map(str, m))
            parts.append(f"({self.terms[m]!r}){label}")
        return f"Polyform({self.gen}: " + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return {
            "gen": self.gen,
            "terms": [
                {"idx": list(m), "re": rational_str(c.re), "im": rational_str(c.im)} for m, c in items
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Polyform":
        try:
            gen = int(obj["gen"])
            terms = obj.get("terms", [])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed polyform JSON: {exc}") from exc
        p = cls(gen)
        try:
            for t in terms:
                c = GaussRational(parse_rational(t.get("re", "0")), parse_rational(t.get("im", "0")))
                p._accumulate(tuple(int(i) for i in t["idx"]), c)
        except (AttributeError, KeyError, TypeError) as exc:
            raise ValueError(f"malformed polyform term: {exc}") from exc
        return p


def wedge(p: Polyform, q: Polyform) -> Polyform:
    p._check(q)
    out = Polyform(p.gen)
    for a, ca in p.terms.items():
        for b, cb in q.terms.items():
            s = merge_sign(a, b)
            if s:
                out._accumulate(tuple(sorted(a + b)), ca * cb if s > 0 else -(ca * cb))
    return out


def _check_index(i: int, p: Polyform) -> None:
    if not 1 <= i <= p.gen:
        raise IndexError(f"generator index {i} outside 1..{p.gen}")


def create(i: int, p: Polyform) -> Polyform:
    """``e^i ^ p`` (left wedge)."""
    _check_index(i, p)
    return wedge(Polyform.word(p.gen, i), p)


def annihilate(i: int, p: Polyform) -> Polyform:
    """Contraction removing ``e^i`` after moving it to the leftmost position."""
    _check_index(i, p)
    out = Polyform(p.gen)
    for m, c in p.terms.items():
        if i not in m:
            continue
        pos = m.index(i)
        rest = m[:pos] + m[pos + 1 :]
        out._accumulate(rest, -c if pos % 2 else c)
    return out


def reverse(p: Polyform) -> Polyform:
    """Reversal: a degree-k monomial picks up ``(-1)^(k(k-1)/2)``."""
    out = Polyform(p.gen)
    for m, c in p.terms.items():
        k = len(m)
        out.terms[m] = -c if (k * (k - 1) // 2) % 2 else c
    return out


def conj_coeffs(p: Polyform) -> Polyform:
    out = Polyform(p.gen)
    out.terms = {m: c.conj() for m, c in p.terms.items()}
    return out


def top_pairing(p: Polyform, q: Polyform) -> GaussRational:
    """Top-degree coefficient of ``reverse(p) ^ q``."""
    p._check(q)
    total = ZERO
    for a, ca in p.terms.items():
        k = len(a)
        ra = -ca if (k * (k - 1) // 2) % 2 else ca
        for b, cb in q.terms.items():
            if len(a) + len(b) != p.gen:
                continue
            s = merge_sign(a, b)
            if s:
                total = total + (ra * cb if s > 0 else -(ra * cb))
    return total


def operator_matrix(op, gen: int, basis: Sequence[tuple[int, ...]] | None = None):
    """Matrix of a linear polyform operator in a monomial basis (columns = images)."""
    from .exact_linalg import Matrix

    basis = list(monomials(gen)) if basis is None else list(basis)
    cols = [op(Polyform(gen, {m: 1})).coords(basis) for m in basis]
    return Matrix.from_columns(cols)


def polyform_sum(gen: int, parts: Iterable[tuple[Scalar, Sequence[int]]]) -> Polyform:
    """Build ``sum c * e^{word}`` from ``(c, word)`` pairs; words may be unsorted."""
    p = Polyform(gen)
    for c, w in parts:
        p._accumulate(tuple(w), GaussRational.coerce(c))
    return p
