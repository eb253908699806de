"""Exact arithmetic substrate: rationals, rational matrices, integer
polynomials and truncated power series.

Everything here is immutable and pure.  No floating point anywhere: the
ground field is Q via fractions.Fraction (already canonically reduced,
arbitrary precision), integers are Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InexactDivision, ZeroConstantTerm

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact arithmetic only: got {type(x).__name__}")


@dataclass(frozen=True)
class QMatrix:
    """Dense matrix over Q. entries[i][j] is row i, column j."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows) -> "QMatrix":
        ent = tuple(tuple(_as_fraction(x) for x in row) for row in rows)
        ncols = len(ent[0]) if ent else 0
        return cls(len(ent), ncols, ent)

    @classmethod
    def identity(cls, n) -> "QMatrix":
        return cls.from_rows(
            [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        )

    def transpose(self) -> "QMatrix":
        return QMatrix.from_rows(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def row(self, i):
        return self.entries[i]


def row_reduce(m: QMatrix):
    """Reduced row-echelon form over Q.

    Returns (rank, reduced QMatrix, pivot column list).  Exact: pivots are
    scaled to 1 and eliminated above and below.
    """
    work = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, QMatrix.from_rows(work) if nrows else m, pivots


# ---------------------------------------------------------------------------
# sparse exact elimination (rows as {column: Fraction} dicts)

class SparseEchelon:
    """Incremental echelon basis of a row space over Q.

    Rows are dicts column -> nonzero Fraction.  Each inserted row is reduced
    against the current pivots (pivot column = smallest column of the row,
    pivot entry normalized to 1), so membership tests and coordinate
    reductions are a single forward pass.
    """

    def __init__(self):
        self.pivot_rows = {}  # pivot column -> row dict with row[col] == 1

    @property
    def rank(self):
        return len(self.pivot_rows)

    def reduce(self, vec):
        """Residual of vec modulo the current row space (fresh dict)."""
        v = dict(vec)
        while v:
            c = min(v)
            piv = self.pivot_rows.get(c)
            if piv is None:
                break
            f = v[c]
            for col, val in piv.items():
                nv = v.get(col, 0) - f * val
                if nv:
                    v[col] = nv
                else:
                    v.pop(col, None)
        return v

    def reduce_coordinates(self, vec):
        """Eliminate every pivot column from vec, not just a leading prefix.

        The residual is supported on non-pivot columns only, so it reads off
        coordinates modulo the row space in the non-pivot basis.  Terminates
        because eliminating at a pivot column only introduces larger columns.
        """
        v = dict(vec)
        while True:
            hits = [c for c in v if c in self.pivot_rows]
            if not hits:
                return v
            c = min(hits)
            f = v[c]
            for col, val in self.pivot_rows[c].items():
                nv = v.get(col, 0) - f * val
                if nv:
                    v[col] = nv
                else:
                    v.pop(col, None)

    def insert(self, vec) -> bool:
        """Insert a row; returns True if it enlarged the row space."""
        v = self.reduce(vec)
        if not v:
            return False
        c = min(v)
        inv = 1 / Fraction(v[c])
        self.pivot_rows[c] = {col: val * inv for col, val in v.items()}
        return True

    def contains(self, vec) -> bool:
        return not self.reduce(vec)


def sparse_rank(rows) -> int:
    ech = SparseEchelon()
    for r in rows:
        ech.insert(r)
    return ech.rank


def sparse_compose(rows_a, rows_b):
    """Row-convention composition: source --A--> mid --B--> target.

    rows_a[i] maps source basis vector i to a vector over mid indices;
    the result maps source directly to target.
    """
    out = []
    for ra in rows_a:
        acc = {}
        for mid, ca in ra.items():
            for tgt, cb in rows_b[mid].items():
                nv = acc.get(tgt, 0) + ca * cb
                if nv:
                    acc[tgt] = nv
                else:
                    acc.pop(tgt, None)
        out.append(acc)
    return out


def int_rank(vectors) -> int:
    """Rank over Q of a list of integer vectors."""
    return sparse_rank(
        [{j: Fraction(x) for j, x in enumerate(v) if x} for v in vectors]
    )


def smith_invariant_factors(rows):
    """Invariant factors of an integer matrix given as sparse rows.

    rows: list of {column: int}.  Returns the positive invariant factors in
    divisibility order (zeros dropped).  Unit pivots are preferred, which
    keeps fill-in and entry growth low on the matrices that arise here.
    """
    mat = {
        i: {c: int(v) for c, v in row.items() if v}
        for i, row in enumerate(rows)
        if any(row.values())
    }
    factors = []
    while mat:
        best = None
        for i, row in mat.items():
            for c, v in row.items():
                a = abs(v)
                if best is None or a < best[0]:
                    best = (a, i, c)
                if a == 1:
                    break
            if best and best[0] == 1:
                break
        _, pi, pc = best
        while True:
            # clear the pivot column with row operations; a nonzero
            # remainder becomes the new (smaller) pivot
            restart = False
            for i in list(mat):
                if i == pi:
                    continue
                row = mat[i]
                v = row.get(pc)
                if not v:
                    continue
                p = mat[pi][pc]
                q = v // p
                if q:
                    for c2, v2 in mat[pi].items():
                        nv = row.get(c2, 0) - q * v2
                        if nv:
                            row[c2] = nv
                        else:
                            row.pop(c2, None)
                if row.get(pc):
                    pi = i
                    restart = True
                    break
                if not row:
                    del mat[i]
            if restart:
                continue
            # the pivot column is zero off the pivot row, so clearing the
            # pivot row with column operations touches only that row
            p = mat[pi][pc]
            leftover = None
            for c2, v2 in list(mat[pi].items()):
                if c2 == pc:
                    continue
                r = v2 - (v2 // p) * p
                if r:
                    mat[pi][c2] = r
                    leftover = c2
                else:
                    del mat[pi][c2]
            if leftover is not None:
                pc = leftover
                continue
            break
        factors.append(abs(mat[pi][pc]))
        del mat[pi]
        for row in mat.values():
            row.pop(pc, None)
        for i in [k for k, row in mat.items() if not row]:
            del mat[i]
    # normalize to divisibility order
    from math import gcd

    factors.sort()
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                if b % a:
                    g = gcd(a, b)
                    factors[i], factors[j] = g, a // g * b
                    changed = True
        factors.sort()
    return factors


def covector_kernel_basis(covector):
    """Integer basis of the kernel of a single nonzero integer covector."""
    n = len(covector)
    p = next(i for i, x in enumerate(covector) if x)
    basis = []
    for j in range(n):
        if j == p:
            continue
        v = [0] * n
        v[j] = covector[p]
        v[p] = -covector[j]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# integer polynomials

@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial with integer coefficients, index = degree."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @property
    def degree(self):
        return len(self.coefficients) - 1 if self.coefficients else -1

    def is_zero(self):
        return not self.coefficients

    def coefficient(self, k):
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __add__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def linear_product(scalars, sign=1) -> IntPolynomial:
    """Product of (1 + sign*c*t) over the given integer scalars."""
    out = IntPolynomial.one()
    for c in scalars:
        out = out * IntPolynomial((1, sign * c))
    return out


def poly_divide_exact(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact division over Z; raises InexactDivision on nonzero remainder."""
    if q.is_zero():
        raise InexactDivision("division by the zero polynomial")
    rem = list(p.coefficients)
    qc = q.coefficients
    dq = q.degree
    lead = qc[-1]
    if len(rem) - 1 < dq:
        if any(rem):
            raise InexactDivision("degree of divisor exceeds dividend")
        return IntPolynomial.zero()
    quot = [0] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        if c % lead:
            raise InexactDivision("leading coefficient does not divide")
        f = c // lead
        quot[k - dq] = f
        for j, b in enumerate(qc):
            rem[k - dq + j] -= f * b
    if any(rem):
        raise InexactDivision("nonzero remainder")
    return IntPolynomial(tuple(quot))


# ---------------------------------------------------------------------------
# truncated power series

@dataclass(frozen=True)
class TruncatedSeries:
    """Power series over Q truncated at a fixed degree (inclusive)."""

    coefficients: tuple
    truncation_degree: int

    def __post_init__(self):
        coeffs = tuple(_as_fraction(c) for c in self.coefficients)
        if len(coeffs) != self.truncation_degree + 1:
            raise ValueError("coefficient list must have truncation_degree + 1 entries")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_list(cls, coeffs, truncation_degree=None):
        if truncation_degree is None:
            truncation_degree = len(coeffs) - 1
        coeffs = list(coeffs)[: truncation_degree + 1]
        coeffs += [Fraction(0)] * (truncation_degree + 1 - len(coeffs))
        return cls(tuple(coeffs), truncation_degree)

    def coefficient(self, k):
        return self.coefficients[k]

    def mul(self, other) -> "TruncatedSeries":
        d = min(self.truncation_degree, other.truncation_degree)
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coefficients[: d + 1]):
            if a:
                for j in range(d + 1 - i):
                    b = other.coefficients[j]
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(tuple(out), d)

    def integer_coefficients(self):
        """Coefficients as ints; raises ValueError if any is non-integral."""
        out = []
        for c in self.coefficients:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return out


def series_of_rational(numerator: IntPolynomial, denominator: IntPolynomial,
                       max_degree: int) -> TruncatedSeries:
    """Expand numerator/denominator as a power series up to max_degree.

    Requires denominator(0) != 0.  The defining property (and the test
    oracle) is that the output convolved with the denominator reproduces the
    numerator through max_degree.
    """
    d0 = denominator.coefficient(0)
    if d0 == 0:
        raise ZeroConstantTerm("denominator has zero constant term")
    coeffs = []
    for k in range(max_degree + 1):
        acc = Fraction(numerator.coefficient(k))
        for j in range(1, k + 1):
            dj = denominator.coefficient(j)
            if dj:
                acc -= dj * coeffs[k - j]
        coeffs.append(acc / d0)
    return TruncatedSeries(tuple(coeffs), max_degree)


def series_mul(a, b, max_degree):
    """Convolution of two Fraction coefficient lists, truncated."""
    out = [Fraction(0)] * (max_degree + 1)
    for i, x in enumerate(a[: max_degree + 1]):
        if x:
            for j in range(max_degree + 1 - i):
                if j < len(b) and b[j]:
                    out[i + j] += x * b[j]
    return out

def series_inverse(a, max_degree):
    """Multiplicative inverse of a series with unit constant term."""
    a0 = _as_fraction(a[0])
    if a0 == 0:
        raise ZeroConstantTerm("series has zero constant term")
    inv = [1 / a0]
    for k in range(1, max_degree + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            aj = _as_fraction(a[j]) if j < len(a) else Fraction(0)
            if aj:
                acc += aj * inv[k - j]
        inv.append(-acc / a0)
    return inv
