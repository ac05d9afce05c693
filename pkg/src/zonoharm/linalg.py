"""Exact integer and rational linear algebra on small dense matrices.

All values are immutable and all functions are pure.  Ranks are computed
fraction-free (Bareiss), Hermite forms are canonical column-style forms of
column lattices, and elementary divisors come from the Smith form.  Matrices
are desk-scale; the Smith form enforces an explicit size cap instead of
trying to be clever.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import SizeExceededError

SMITH_MAX_DIM = 64


@dataclass(frozen=True)
class Mat:
    """Immutable row-major matrix with int (or Fraction) entries."""

    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.data) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "Mat":
        rows = [tuple(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
            cols = width
        elif cols is None:
            cols = 0
        data = tuple(x for r in rows for x in r)
        return Mat(len(rows), cols, data)

    @staticmethod
    def from_cols(cols, rows: int | None = None) -> "Mat":
        return Mat.from_rows(cols, rows).transpose()

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "Mat":
        return Mat(rows, cols, (0,) * (rows * cols))

    def row(self, i: int) -> tuple:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.data[j :: self.cols] if self.cols else ()

    def row_list(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def col_list(self) -> list:
        return [list(self.col(j)) for j in range(self.cols)]

    def transpose(self) -> "Mat":
        return Mat(
            self.cols,
            self.rows,
            tuple(self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def matvec(self, v) -> tuple:
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        return tuple(sum(r[j] * v[j] for j in range(self.cols)) for r in (self.row(i) for i in range(self.rows)))

    def matmul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = other.col_list()
        data = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                data.append(sum(a * b for a, b in zip(r, c)))
        return Mat(self.rows, other.cols, tuple(data))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.data)


@dataclass(frozen=True)
class HermiteForm:
    """Column-style Hermite normal form of a column lattice.

    ``basis`` has one column per lattice basis vector; ``pivots[c]`` is the row
    of column c's pivot.  Pivot entries are positive and entries to the left of
    a pivot in its row are reduced into ``[0, pivot)``.  ``elementary_divisors``
    are the nonzero invariant factors of the same lattice (Smith form), each
    dividing the next.
    """

    basis: Mat
    pivots: tuple
    elementary_divisors: tuple


def xgcd(a: int, b: int):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _rows_of(m) -> list:
    if isinstance(m, Mat):
        return m.row_list()
    return [list(r) for r in m]


def _clear_fractions(rows: list) -> list:
    out = []
    for r in rows:
        if any(isinstance(x, Fraction) for x in r):
            mult = lcm(*(Fraction(x).denominator for x in r)) if r else 1
            out.append([int(x * mult) for x in r])
        else:
            out.append([int(x) for x in r])
    return out


def det(m) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction-free)."""
    rows = _clear_fractions(_rows_of(m))
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if piv is None:
                return 0
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


def rank(m) -> int:
    """Rank over the rationals via fraction-free Gaussian elimination."""
    rows = _clear_fractions(_rows_of(m))
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c, ncols):
                row_i[j] = (row_i[j] * p - f * row_r[j]) // prev
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def kernel_basis(m) -> Mat:
    """Basis of the right kernel over Q; columns span the kernel.

    Returns an (ncols x k) matrix with Fraction entries; k = 0 when the kernel
    is trivial.
    """
    rows = [[Fraction(x) for x in r] for r in _rows_of(m)]
    ncols = len(rows[0]) if rows else (m.cols if isinstance(m, Mat) else 0)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis_cols = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis_cols.append(v)
    return Mat.from_cols(basis_cols, rows=ncols)


def primitive_vector(v) -> tuple:
    """Scale a nonzero rational vector to a primitive integer vector.

    The sign is normalized so the first nonzero entry is positive.
    """
    fracs = [Fraction(x) for x in v]
    mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * mult) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def row_hnf(rows, ncols: int, transform: bool = False):
    """Canonical row-style Hermite normal form of the row lattice.

    Returns (hnf_rows, pivot_cols) or, with ``transform``, additionally the
    full unimodular U with U * input = [hnf_rows; 0].
    """
    work = [[int(x) for x in r] for r in rows]
    n = len(work)
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if transform else None
    r = 0
    pivot_cols = []
    for c in range(ncols):
        piv = next((i for i in range(r, n) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        if U is not None:
            U[r], U[piv] = U[piv], U[r]
        for i in range(r + 1, n):
            if work[i][c]:
                g, x, y = xgcd(work[r][c], work[i][c])
                a_, b_ = work[r][c] // g, work[i][c] // g
                wr, wi = work[r], work[i]
                work[r] = [x * p + y * q for p, q in zip(wr, wi)]
                work[i] = [-b_ * p + a_ * q for p, q in zip(wr, wi)]
                if U is not None:
                    ur, ui = U[r], U[i]
                    U[r] = [x * p + y * q for p, q in zip(ur, ui)]
                    U[i] = [-b_ * p + a_ * q for p, q in zip(ur, ui)]
        if work[r][c] < 0:
            work[r] = [-x for x in work[r]]
            if U is not None:
                U[r] = [-x for x in U[r]]
        pivot_cols.append(c)
        r += 1
        if r == n:
            break
    # reduce entries above each pivot into [0, pivot)
    for k in range(len(pivot_cols)):
        c = pivot_cols[k]
        p = work[k][c]
        for i in range(k):
            q = work[i][c] // p
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[k])]
                if U is not None:
                    U[i] = [a - q * b for a, b in zip(U[i], U[k])]
    hnf = [tuple(work[i]) for i in range(len(pivot_cols))]
    if transform:
        return hnf, tuple(pivot_cols), [tuple(u) for u in U]
    return hnf, tuple(pivot_cols)


def smith_divisors(m) -> tuple:
    """Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix.

    Inputs with max dimension above SMITH_MAX_DIM are rejected.
    """
    rows = [[int(x) for x in r] for r in _rows_of(m)]
    nr = len(rows)
    nc = len(rows[0]) if rows else (m.cols if isinstance(m, Mat) else 0)
    if max(nr, nc, 0) > SMITH_MAX_DIM:
        raise SizeExceededError(f"smith form limited to dimension {SMITH_MAX_DIM}")
    a = rows
    t = 0
    limit = min(nr, nc)
    while t < limit:
        # locate a nonzero entry in the remaining block
        pos = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pos = v, (i, j)
        if pos is None:
            break
        i0, j0 = pos
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        # clear row and column t
        while True:
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
        # enforce divisibility of the remaining block by a[t][t]
        bad = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % a[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        t += 1
    return tuple(a[i][i] for i in range(t))


def smith_with_left_transform(m):
    """Smith data with the left transform tracked.

    Returns (divisors, U, U_inv) where U is unimodular, U_inv its inverse, and
    U * m * V = diag(divisors) for some (untracked) unimodular V.  Row ops are
    applied to U while U_inv accumulates the inverse ops, so U * U_inv = I.
    """
    rows = [[int(x) for x in r] for r in _rows_of(m)]
    nr = len(rows)
    nc = len(rows[0]) if rows else (m.cols if isinstance(m, Mat) else 0)
    if max(nr, nc, 0) > SMITH_MAX_DIM:
        raise SizeExceededError(f"smith form limited to dimension {SMITH_MAX_DIM}")
    a = rows
    U = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    Uinv = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row_i += q * row_j
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        U[i] = [x + q * y for x, y in zip(U[i], U[j])]
        for row in Uinv:
            row[j] -= q * row[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    t = 0
    limit = min(nr, nc)
    while t < limit:
        pos = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pos = v, (i, j)
        if pos is None:
            break
        i0, j0 = pos
        if i0 != t:
            swap_rows(t, i0)
        if j0 != t:
            for row in a:
                row[t], row[j0] = row[j0], row[t]
        while True:
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
        bad = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % a[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(t, bad, 1)
            continue
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    divisors = tuple(a[i][i] for i in range(t))
    return divisors, [tuple(r) for r in U], [tuple(r) for r in Uinv]


def hermite_normal_form(m) -> HermiteForm:
    """Column-style HNF of the column lattice, with its elementary divisors."""
    mat = m if isinstance(m, Mat) else Mat.from_rows(_rows_of(m))
    hnf_rows, pivot_cols = row_hnf(mat.transpose().row_list(), mat.rows)
    basis = Mat.from_rows(hnf_rows, cols=mat.rows).transpose()
    divisors = smith_divisors(basis) if basis.cols else ()
    return HermiteForm(basis=basis, pivots=pivot_cols, elementary_divisors=divisors)


def integer_kernel(m) -> Mat:
    """Basis of the integer right kernel {x in Z^cols : m x = 0} (saturated)."""
    mat = m if isinstance(m, Mat) else Mat.from_rows(_rows_of(m))
    hnf, pivots, U = row_hnf(mat.transpose().row_list(), mat.rows, transform=True)
    kernel_rows = U[len(hnf) :]
    if not kernel_rows:
        return Mat.zero(mat.cols, 0)
    canon, _ = row_hnf(kernel_rows, mat.cols)
    return Mat.from_rows(canon, cols=mat.cols).transpose()


def saturation(m) -> Mat:
    """Canonical basis of the saturation of the column lattice of m."""
    mat = m if isinstance(m, Mat) else Mat.from_rows(_rows_of(m))
    perp = integer_kernel(mat.transpose())
    return integer_kernel(perp.transpose())


def saturation_index(m, ambient_rank: int) -> int:
    """Index of a column lattice inside its saturation (1 iff saturated)."""
    mat = m if isinstance(m, Mat) else Mat.from_rows(_rows_of(m))
    if mat.rows != ambient_rank:
        raise ValueError("ambient rank does not match matrix rows")
    idx = 1
    for d in smith_divisors(mat):
        idx *= d
    return idx


def solve_row_lattice(gen_rows, target):
    """Integer coefficients expressing target in the row lattice, or None.

    ``sum(c[i] * gen_rows[i]) == target`` with integer c when solvable.
    """
    gen_rows = [list(r) for r in gen_rows]
    target = list(target)
    if not gen_rows:
        return () if all(x == 0 for x in target) else None
    ncols = len(gen_rows[0])
    hnf, pivots, U = row_hnf(gen_rows, ncols, transform=True)
    t = list(target)
    coeffs_on_h = []
    for i, c in enumerate(pivots):
        p = hnf[i][c]
        if t[c] % p:
            return None
        q = t[c] // p
        coeffs_on_h.append(q)
        if q:
            t = [a - q * b for a, b in zip(t, hnf[i])]
    if any(t):
        return None
    n = len(gen_rows)
    out = [0] * n
    for q, urow in zip(coeffs_on_h, U):
        if q:
            for j in range(n):
                out[j] += q * urow[j]
    return tuple(out)


class IntRowLattice:
    """Grow-only integer row lattice kept in echelon form.

    Rows are inserted with xgcd combinations; ``rank`` equals the rational
    dimension of the span, and ``canonical_rows`` returns the row-style HNF.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list = []  # sorted by pivot column
        self.pivot_cols: list = []

    def add(self, vec) -> None:
        v = [int(x) for x in vec]
        if len(v) != self.ncols:
            raise ValueError("length mismatch")
        for idx in range(len(self.rows) + 1):
            c = next((j for j in range(self.ncols) if v[j]), None)
            if c is None:
                return
            if idx == len(self.rows) or self.pivot_cols[idx] > c:
                if v[c] < 0:
                    v = [-x for x in v]
                self.rows.insert(idx, v)
                self.pivot_cols.insert(idx, c)
                return
            if self.pivot_cols[idx] < c:
                continue
            row = self.rows[idx]
            g, x, y = xgcd(row[c], v[c])
            a_, b_ = row[c] // g, v[c] // g
            new_row = [x * p + y * q for p, q in zip(row, v)]
            v = [-b_ * p + a_ * q for p, q in zip(row, v)]
            self.rows[idx] = new_row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, vec) -> bool:
        v = [int(x) for x in vec]
        for row, c in zip(self.rows, self.pivot_cols):
            if v[c]:
                if v[c] % row[c]:
                    return False
                q = v[c] // row[c]
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def canonical_rows(self) -> tuple:
        work = [list(r) for r in self.rows]
        for k in range(len(work)):
            c = self.pivot_cols[k]
            p = work[k][c]
            for i in range(k):
                q = work[i][c] // p
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[k])]
        return tuple(tuple(r) for r in work)
