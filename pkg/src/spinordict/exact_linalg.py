"""Exact scalars and dense matrices over the Gaussian rationals Q(i).

Everything here is exact: rationals are :class:`fractions.Fraction`, complex
scalars are pairs of rationals, and rank/kernel/solve use fraction-free
(Bareiss) elimination over the Gaussian integers with exact zero tests.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction, "GaussRational"]


def rational_str(x: Fraction) -> str:
    """Canonical string form ``"p/q"``, or ``"p"`` when ``q == 1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: Union[str, int, Fraction]) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise TypeError(f"cannot parse rational from {type(s).__name__}")


class GaussRational:
    """Complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        self.re = re if type(re) is Fraction else parse_rational(re)
        self.im = im if type(im) is Fraction else parse_rational(im)

    @classmethod
    def coerce(cls, x: Scalar) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Fraction(x))
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact; use GaussRational")
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussRational")

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, GaussRational):
            if isinstance(other, (int, Fraction)):
                return GaussRational(self.re + other, self.im)
            return NotImplemented
        if not (other.re or other.im):
            return self
        if not (self.re or self.im):
            return other
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussRational):
            if isinstance(other, (int, Fraction)):
                return GaussRational(self.re - other, self.im)
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GaussRational):
            if isinstance(other, (int, Fraction)):
                return GaussRational(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not (a or b) or not (c or d):
            return ZERO
        if not b and not d:
            return GaussRational(a * c, b)
        return GaussRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussRational.coerce(other)
        n = other.abs2()
        if not n:
            raise ZeroDivisionError("division by zero GaussRational")
        num = self * other.conj()
        return GaussRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return GaussRational.coerce(other) / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return (GaussRational(1) / self) ** (-n)
        out = GaussRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return rational_str(self.re)
        if not self.re:
            return f"{rational_str(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{rational_str(self.re)}{sign}{rational_str(abs(self.im))}i"

    def to_json(self) -> dict:
        return {"re": rational_str(self.re), "im": rational_str(self.im)}

    @classmethod
    def from_json(cls, obj) -> "GaussRational":
        if isinstance(obj, dict):
            return cls(parse_rational(obj.get("re", "0")), parse_rational(obj.get("im", "0")))
        return cls(parse_rational(obj))


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


def gr(re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0) -> GaussRational:
    return GaussRational(re, im)


def sqrt_rational(x: Fraction):
    """Exact square root of a non-negative rational, or ``None`` if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = _isqrt_exact(p), _isqrt_exact(q)
    if rp is None or rq is None:
        return None
    return Fraction(rp, rq)


def _isqrt_exact(n: int):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def sqrt_gauss(z: GaussRational):
    """Principal exact square root in Q(i), or ``None`` when it does not exist.

    The principal root has positive real part, or non-negative imaginary part
    when the real part vanishes.
    """
    z = GaussRational.coerce(z)
    if not z:
        return GaussRational(0)
    modulus = sqrt_rational(z.abs2())
    if modulus is None:
        return None
    x = sqrt_rational((modulus + z.re) / 2)
    if x is None:
        return None
    if x:
        y = z.im / (2 * x)
    else:
        y = sqrt_rational((modulus - z.re) / 2)
        if y is None:
            return None
    root = GaussRational(x, y)
    if root * root != z:
        return None
    return root


Vector = list


def vec(values: Iterable[Scalar]) -> list:
    return [GaussRational.coerce(v) for v in values]


def vec_is_zero(v: Sequence[GaussRational]) -> bool:
    return not any(v)


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    c = GaussRational.coerce(c)
    return [c * a for a in v]


def vec_conj(v):
    return [a.conj() for a in v]


def dot(u, v) -> GaussRational:
    """Bilinear (not Hermitian) dot product."""
    s = GaussRational(0)
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


class Matrix:
    """Dense row-major matrix with :class:`GaussRational` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Scalar]], cols: int | None = None):
        data = [[GaussRational.coerce(x) for x in row] for row in entries]
        self.rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        self.cols = cols
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.entries = data

    @classmethod
    def _raw(cls, data: list, rows: int, cols: int) -> "Matrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m.entries = rows, cols, data
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._raw([[ZERO] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        m = cls.zeros(n)
        for i in range(n):
            m.entries[i][i] = ONE
        return m

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> "Matrix":
        m = cls.zeros(len(values))
        for i, v in enumerate(values):
            m.entries[i][i] = GaussRational.coerce(v)
        return m

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]]) -> "Matrix":
        if not columns:
            raise ValueError("no columns")
        return cls([list(r) for r in zip(*columns)])

    @classmethod
    def blocks(cls, grid: Sequence[Sequence["Matrix | int"]]) -> "Matrix":
        """Assemble a block matrix; integer ``0`` stands for a zero block."""
        heights = []
        for brow in grid:
            h = next((b.rows for b in brow if isinstance(b, Matrix)), None)
            if h is None:
                raise ValueError("block row without a matrix")
            heights.append(h)
        widths = []
        for j in range(len(grid[0])):
            w = next((brow[j].cols for brow in grid if isinstance(brow[j], Matrix)), None)
            if w is None:
                raise ValueError("block column without a matrix")
            widths.append(w)
        out = []
        for brow, h in zip(grid, heights):
            for i in range(h):
                row = []
                for b, w in zip(brow, widths):
                    if isinstance(b, Matrix):
                        if b.rows != h or b.cols != w:
                            raise ValueError("block size mismatch")
                        row.extend(b.entries[i])
                    else:
                        if b != 0:
                            raise ValueError("non-matrix blocks must be 0")
                        row.extend([ZERO] * w)
                out.append(row)
        return cls._raw(out, sum(heights), sum(widths))

    @classmethod
    def block_diag(cls, *mats: "Matrix") -> "Matrix":
        out = cls.zeros(sum(m.rows for m in mats), sum(m.cols for m in mats))
        r = c = 0
        for m in mats:
            for i in range(m.rows):
                out.entries[r + i][c : c + m.cols] = list(m.entries[i])
            r += m.rows
            c += m.cols
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> list:
        return list(self.entries[i])

    def col(self, j: int) -> list:
        return [r[j] for r in self.entries]

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw([[self.entries[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def copy(self) -> "Matrix":
        return Matrix._raw([list(r) for r in self.entries], self.rows, self.cols)

    # algebra
    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            [[(a + b if a else b) if b else a for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.rows,
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            [[(a - b) if b else a for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.rows,
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw([[-a for a in r] for r in self.entries], self.rows, self.cols)

    def scale(self, c: Scalar) -> "Matrix":
        c = GaussRational.coerce(c)
        return Matrix._raw([[c * a if a else ZERO for a in r] for r in self.entries], self.rows, self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.cols
        oent = other.entries
        out = []
        for r in self.entries:
            acc = [ZERO] * ocols
            for k, a in enumerate(r):
                if not a:
                    continue
                orow = oent[k]
                for j in range(ocols):
                    b = orow[j]
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix._raw(out, self.rows, ocols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def apply(self, v: Sequence[GaussRational]) -> list:
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != {self.cols} columns")
        out = []
        for r in self.entries:
            s = ZERO
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def transpose(self) -> "Matrix":
        return Matrix._raw([list(c) for c in zip(*self.entries)], self.cols, self.rows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def conj(self) -> "Matrix":
        return Matrix._raw([[a.conj() for a in r] for r in self.entries], self.rows, self.cols)

    def trace(self) -> GaussRational:
        s = ZERO
        for i in range(min(self.rows, self.cols)):
            s = s + self.entries[i][i]
        return s

    def is_zero(self) -> bool:
        return not any(a for r in self.entries for a in r)

    def is_real(self) -> bool:
        return all(not a.im for r in self.entries for a in r)

    def real_part(self) -> "Matrix":
        return Matrix._raw([[GaussRational(a.re) for a in r] for r in self.entries], self.rows, self.cols)

    def imag_part(self) -> "Matrix":
        return Matrix._raw([[GaussRational(a.im) for a in r] for r in self.entries], self.rows, self.cols)

    def flatten(self) -> list:
        return [a for r in self.entries for a in r]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.flatten())))

    def __repr__(self):
        body = "; ".join(" ".join(repr(a) for a in r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def to_json(self) -> list:
        return [[a.to_json() for a in r] for r in self.entries]

    @classmethod
    def from_json(cls, rows) -> "Matrix":
        return cls([[GaussRational.from_json(a) for a in r] for r in rows])

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        cols = []
        for j in range(n):
            e = [ZERO] * n
            e[j] = ONE
            x = solve(self, e)
            if x is None:
                raise ZeroDivisionError("matrix is singular")
            cols.append(x)
        return Matrix.from_columns(cols)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def anticommutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b + b @ a


def realify(m: Matrix) -> Matrix:
    """Real 2n x 2m matrix of a complex-linear map, coordinates (re, im) interleaved."""
    out = Matrix.zeros(2 * m.rows, 2 * m.cols)
    e = out.entries
    for i, r in enumerate(m.entries):
        for j, a in enumerate(r):
            if not a:
                continue
            re, im = GaussRational(a.re), GaussRational(a.im)
            e[2 * i][2 * j] = re
            e[2 * i][2 * j + 1] = -im
            e[2 * i + 1][2 * j] = im
            e[2 * i + 1][2 * j + 1] = re
    return out


def realify_antilinear(m: Matrix) -> Matrix:
    """Real matrix of the antilinear map ``v -> m @ conj(v)``."""
    out = Matrix.zeros(2 * m.rows, 2 * m.cols)
    e = out.entries
    for i, r in enumerate(m.entries):
        for j, a in enumerate(r):
            if not a:
                continue
            re, im = GaussRational(a.re), GaussRational(a.im)
            e[2 * i][2 * j] = re
            e[2 * i][2 * j + 1] = im
            e[2 * i + 1][2 * j] = im
            e[2 * i + 1][2 * j + 1] = -re
    return out


def unrealify(m: Matrix) -> Matrix:
    """Inverse of :func:`realify`; raises if the real matrix is not complex-linear."""
    if m.rows % 2 or m.cols % 2:
        raise ValueError("realified matrix must have even shape")
    out = Matrix.zeros(m.rows // 2, m.cols // 2)
    for i in range(out.rows):
        for j in range(out.cols):
            a, b = m[2 * i, 2 * j], m[2 * i, 2 * j + 1]
            c, d = m[2 * i + 1, 2 * j], m[2 * i + 1, 2 * j + 1]
            if a != d or b != -c:
                raise ValueError("matrix does not commute with the complex structure")
            out.entries[i][j] = GaussRational(a.re, c.re)
    return out


def realify_vector(v: Sequence[GaussRational]) -> list:
    out = []
    for a in v:
        out.append(GaussRational(a.re))
        out.append(GaussRational(a.im))
    return out


def complexify_vector(v: Sequence[GaussRational]) -> list:
    if len(v) % 2:
        raise ValueError("realified vector must have even length")
    return [GaussRational(v[2 * k].re, v[2 * k + 1].re) for k in range(len(v) // 2)]


# Fraction-free elimination over Z[i]. Gaussian integers are (re, im) int pairs.


def _gi_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gi_sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gi_exact_div(a, b):
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    qr, rr = divmod(re, n)
    qi, ri = divmod(im, n)
    if rr or ri:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return (qr, qi)


def _integer_rows(rows: Sequence[Sequence[GaussRational]]) -> list:
    out = []
    for r in rows:
        den = 1
        for a in r:
            den = lcm(den, a.re.denominator, a.im.denominator)
        out.append([(int(a.re * den), int(a.im * den)) for a in r])
    return out


def _bareiss_echelon(rows: list, ncols: int, stop_col: int | None = None):
    """In-place fraction-free row echelon form; returns pivot columns."""
    nrows = len(rows)
    limit = ncols if stop_col is None else stop_col
    prev = (1, 0)
    pivots = []
    r = 0
    for c in range(limit):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != (0, 0)), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            lead = row[c]
            if lead == (0, 0):
                if prev != (1, 0):
                    for j in range(c + 1, ncols):
                        if row[j] != (0, 0):
                            row[j] = _gi_exact_div(_gi_mul(piv, row[j]), prev)
                else:
                    for j in range(c + 1, ncols):
                        if row[j] != (0, 0):
                            row[j] = _gi_mul(piv, row[j])
                continue
            for j in range(c + 1, ncols):
                val = _gi_sub(_gi_mul(piv, row[j]), _gi_mul(lead, prow[j]))
                row[j] = _gi_exact_div(val, prev) if prev != (1, 0) else val
            row[c] = (0, 0)
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _echelon(m: Matrix, stop_col: int | None = None):
    rows = _integer_rows(m.entries)
    pivots = _bareiss_echelon(rows, m.cols, stop_col)
    return rows, pivots


def rank(m: Matrix) -> int:
    """Exact rank over Q(i)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _echelon(m)
    return len(pivots)


def _back_substitute(rows, pivots, ncols, free_values: dict) -> list:
    xs = [ZERO] * ncols
    for c, v in free_values.items():
        xs[c] = GaussRational.coerce(v)
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        row = rows[r]
        s = ZERO
        for j in range(pc + 1, ncols):
            a = row[j]
            if a != (0, 0) and xs[j]:
                s = s + GaussRational(a[0], a[1]) * xs[j]
        piv = GaussRational(row[pc][0], row[pc][1])
        xs[pc] = -s / piv
    return xs


def kernel_basis(m: Matrix) -> list:
    """Basis of the right kernel ``{x : m x = 0}``; length ``cols - rank``."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        basis = []
        for j in range(m.cols):
            e = [ZERO] * m.cols
            e[j] = ONE
            basis.append(e)
        return basis
    rows, pivots = _echelon(m)
    pset = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pset:
            continue
        free = {c: (ONE if c == f else ZERO) for c in range(m.cols) if c not in pset}
        basis.append(_back_substitute(rows, pivots, m.cols, free))
    return basis


def solve(m: Matrix, b: Sequence[Scalar]):
    """One exact solution of ``m x = b``, or ``None`` when inconsistent."""
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    b = [GaussRational.coerce(x) for x in b]
    aug = Matrix._raw([list(r) + [bi] for r, bi in zip(m.entries, b)], m.rows, m.cols + 1)
    rows = _integer_rows(aug.entries)
    pivots = _bareiss_echelon(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    free = {c: ZERO for c in range(m.cols) if c not in set(pivots)}
    xs = _back_substitute_aug(rows, pivots, m.cols, free)
    return xs


def _back_substitute_aug(rows, pivots, ncols, free_values):
    xs = [ZERO] * ncols
    for c, v in free_values.items():
        xs[c] = v
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        row = rows[r]
        rhs = GaussRational(row[ncols][0], row[ncols][1])
        s = ZERO
        for j in range(pc + 1, ncols):
            a = row[j]
            if a != (0, 0) and xs[j]:
                s = s + GaussRational(a[0], a[1]) * xs[j]
        xs[pc] = (rhs - s) / GaussRational(row[pc][0], row[pc][1])
    return xs


def stack_rows(mats: Sequence[Matrix]) -> Matrix:
    mats = [m for m in mats if m.rows]
    if not mats:
        raise ValueError("nothing to stack")
    cols = mats[0].cols
    data = []
    for m in mats:
        if m.cols != cols:
            raise ValueError("column count mismatch in stack_rows")
        data.extend(list(r) for r in m.entries)
    return Matrix._raw(data, len(data), cols)


def span_rank(vectors: Sequence[Sequence[GaussRational]]) -> int:
    """Dimension of the span of the given vectors."""
    if not vectors:
        return 0
    return rank(Matrix([list(v) for v in vectors]))
