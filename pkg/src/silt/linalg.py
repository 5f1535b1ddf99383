"""Exact linear algebra over the rationals.

Everything downstream (intertwiner systems, homotopy quotients, structure
constants) reduces to small dense rational linear algebra, so this module is
the single place where elimination happens.  Matrices are dense, row major,
with ``fractions.Fraction`` entries.  Elimination clears denominators row by
row and runs a fraction-free (Bareiss) forward pass on plain integers; the
unique reduced row echelon form is produced by a final normalization pass.
That keeps the hot loop in machine integers and the results exact.

Vectors are plain lists of Fraction.  Matrices never mutate after
construction; every operation returns a fresh object.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vec = list  # list[Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QM:
    """Dense rational matrix with value semantics.

    Args:
        m: number of rows.
        n: number of columns.
        rows: optional row data; entries are coerced to Fraction.  When
            omitted the matrix is zero.
    """

    __slots__ = ("m", "n", "rows")

    def __init__(self, m: int, n: int, rows: Optional[Sequence[Sequence]] = None):
        if m < 0 or n < 0:
            raise ValueError("negative matrix dimension")
        self.m = m
        self.n = n
        if rows is None:
            self.rows = [[_ZERO] * n for _ in range(m)]
        else:
            if len(rows) != m:
                raise ValueError("row count mismatch")
            data = []
            for r in rows:
                if len(r) != n:
                    raise ValueError("column count mismatch")
                data.append([_coerce(x) for x in r])
            self.rows = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QM":
        m = len(rows)
        n = len(rows[0]) if m else 0
        return cls(m, n, rows)

    @classmethod
    def zeros(cls, m: int, n: int) -> "QM":
        return cls(m, n)

    @classmethod
    def identity(cls, n: int) -> "QM":
        out = cls(n, n)
        for i in range(n):
            out.rows[i][i] = _ONE
        return out

    @classmethod
    def column(cls, v: Sequence) -> "QM":
        return cls(len(v), 1, [[x] for x in v])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QM)
            and self.m == other.m
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.m, self.n, tuple(tuple(r) for r in self.rows)))

    def __repr__(self) -> str:
        return f"QM({self.m}x{self.n}, {self.rows!r})"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def __add__(self, other: "QM") -> "QM":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch in addition")
        return QM(self.m, self.n, [
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)
        ])

    def __sub__(self, other: "QM") -> "QM":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch in subtraction")
        return QM(self.m, self.n, [
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)
        ])

    def __neg__(self) -> "QM":
        return QM(self.m, self.n, [[-a for a in r] for r in self.rows])

    def scaled(self, c) -> "QM":
        c = _coerce(c)
        return QM(self.m, self.n, [[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "QM") -> "QM":
        if self.n != other.m:
            raise ValueError("shape mismatch in product")
        out = QM(self.m, other.n)
        orows = other.rows
        for i, srow in enumerate(self.rows):
            dst = out.rows[i]
            for k, a in enumerate(srow):
                if a:
                    orow = orows[k]
                    for j in range(other.n):
                        b = orow[j]
                        if b:
                            dst[j] += a * b
        return out

    def matvec(self, v: Sequence) -> Vec:
        if len(v) != self.n:
            raise ValueError("shape mismatch in matvec")
        out = [_ZERO] * self.m
        for i, row in enumerate(self.rows):
            s = _ZERO
            for a, b in zip(row, v):
                if a and b:
                    s += a * b
            out[i] = s
        return out

    def t(self) -> "QM":
        return QM(self.n, self.m, [[self.rows[i][j] for i in range(self.m)] for j in range(self.n)])

    def col(self, j: int) -> Vec:
        return [self.rows[i][j] for i in range(self.m)]

    def columns(self) -> list:
        return [self.col(j) for j in range(self.n)]


def hstack(mats: Sequence[QM]) -> QM:
    if not mats:
        raise ValueError("hstack of nothing")
    m = mats[0].m
    if any(a.m != m for a in mats):
        raise ValueError("row count mismatch in hstack")
    rows = [[x for a in mats for x in a.rows[i]] for i in range(m)]
    return QM(m, sum(a.n for a in mats), rows)


def vstack(mats: Sequence[QM]) -> QM:
    if not mats:
        raise ValueError("vstack of nothing")
    n = mats[0].n
    if any(a.n != n for a in mats):
        raise ValueError("column count mismatch in vstack")
    rows = [list(r) for a in mats for r in a.rows]
    return QM(sum(a.m for a in mats), n, rows)


def block_diag(mats: Sequence[QM]) -> QM:
    m = sum(a.m for a in mats)
    n = sum(a.n for a in mats)
    out = QM(m, n)
    ro = co = 0
    for a in mats:
        for i in range(a.m):
            out.rows[ro + i][co:co + a.n] = list(a.rows[i])
        ro += a.m
        co += a.n
    return out


def from_columns(cols: Sequence[Sequence], nrows: int) -> QM:
    """Matrix whose columns are the given vectors (all of length nrows)."""
    out = QM(nrows, len(cols))
    for j, c in enumerate(cols):
        if len(c) != nrows:
            raise ValueError("column length mismatch")
        for i, x in enumerate(c):
            out.rows[i][j] = _coerce(x)
    return out


def _int_rows(a: QM) -> list:
    """Cleared-denominator integer copies of the rows (content removed)."""
    out = []
    for row in a.rows:
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x.numerator * (den // x.denominator)) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def rref(a: QM) -> tuple:
    """Reduced row echelon form.

    Returns:
        (R, rank, pivots) where R is the unique RREF of ``a`` as a QM,
        rank is the number of pivots and pivots is the tuple of pivot
        column indices.
    """
    rows = _int_rows(a)
    m, n = a.m, a.n
    pivots = []
    r = 0
    prev = 1
    for c in range(n):
        if r >= m:
            break
        pr = None
        for i in range(r, m):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        rr = rows[r]
        for i in range(r + 1, m):
            # Bareiss: scale every row below, not just those with a nonzero
            # pivot-column entry, so the division by the previous pivot
            # stays exact.
            fi = rows[i][c]
            ri = rows[i]
            for j in range(c, n):
                ri[j] = (ri[j] * piv - fi * rr[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    rank = r
    # Normalize: convert to Fraction, make pivots 1, eliminate above.
    frows = [[Fraction(x) for x in rows[i]] for i in range(rank)]
    for i in range(rank - 1, -1, -1):
        c = pivots[i]
        piv = frows[i][c]
        frows[i] = [x / piv for x in frows[i]]
        for k in range(i):
            f = frows[k][c]
            if f:
                frows[k] = [x - f * y for x, y in zip(frows[k], frows[i])]
    out = QM(m, n)
    for i in range(rank):
        out.rows[i] = frows[i]
    return out, rank, tuple(pivots)


def rank(a: QM) -> int:
    return rref(a)[1]


def kernel_basis(a: QM) -> list:
    """Basis of the right kernel of ``a`` as a list of vectors."""
    red, rk, pivots = rref(a)
    pivset = set(pivots)
    free = [j for j in range(a.n) if j not in pivset]
    basis = []
    for f in free:
        v = [_ZERO] * a.n
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -red.rows[i][f]
        basis.append(v)
    return basis


def solve(a: QM, b: Sequence) -> Optional[Vec]:
    """One solution of a @ x = b, or None when inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    if len(b) != a.m:
        raise ValueError("rhs length mismatch")
    aug = hstack([a, QM.column(b)])
    red, rk, pivots = rref(aug)
    if pivots and pivots[-1] == a.n:
        return None
    x = [_ZERO] * a.n
    for i, p in enumerate(pivots):
        x[p] = red.rows[i][a.n]
    return x


def solve_matrix(a: QM, b: QM) -> Optional[QM]:
    """Solve a @ X = b column by column; None when any column fails."""
    if a.m != b.m:
        raise ValueError("shape mismatch in solve_matrix")
    aug = hstack([a, b])
    red, rk, pivots = rref(aug)
    if any(p >= a.n for p in pivots):
        return None
    out = QM(a.n, b.n)
    for i, p in enumerate(pivots):
        out.rows[p] = list(red.rows[i][a.n:])
    return out


def quotient_basis(dim: int, subspace: Iterable) -> list:
    """Standard basis vectors completing ``subspace`` to all of Q^dim.

    The returned unit vectors represent a basis of the quotient space; the
    choice is canonical (non-pivot coordinates of the subspace row span).
    """
    vecs = list(subspace)
    if not vecs:
        return [_unit(dim, j) for j in range(dim)]
    mat = QM(len(vecs), dim, vecs)
    _, rk, pivots = rref(mat)
    pivset = set(pivots)
    return [_unit(dim, j) for j in range(dim) if j not in pivset]


def _unit(dim: int, j: int) -> Vec:
    v = [_ZERO] * dim
    v[j] = _ONE
    return v


def span_dim(vectors: Sequence, dim: int) -> int:
    vecs = list(vectors)
    if not vecs:
        return 0
    return rref(QM(len(vecs), dim, vecs))[1]


def in_span(vectors: Sequence, v: Sequence, dim: int) -> bool:
    base = span_dim(vectors, dim)
    return span_dim(list(vectors) + [list(v)], dim) == base


def coords_in_basis(basis: Sequence, v: Sequence) -> Optional[Vec]:
    """Coordinates of v in the given (independent) spanning set, or None."""
    if not basis:
        return [] if all(x == 0 for x in v) else None
    mat = from_columns(basis, len(v))
    return solve(mat, list(v))


def projection_onto_quotient(dim: int, sub: Sequence, reps: Sequence) -> QM:
    """Matrix Q with Q@s = 0 for s in sub and Q@r_j = e_j for the reps.

    ``sub`` may be any spanning set of the subspace; together with ``reps``
    its span must be all of Q^dim.  The result computes quotient coordinates
    with respect to the representatives.
    """
    sub = list(sub)
    if sub:
        r, rk, _ = rref(QM(len(sub), dim, sub))
        sub = r.rows[:rk]
    cols = list(sub) + list(reps)
    if len(cols) != dim:
        raise ValueError("sub + reps must be a basis")
    b = from_columns(cols, dim)
    inv = solve_matrix(b, QM.identity(dim))
    if inv is None:
        raise ValueError("sub + reps do not form a basis")
    k = len(sub)
    return QM(len(reps), dim, inv.rows[k:])
