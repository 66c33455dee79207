"""Exact elimination kernels and Hermitian inertia.

Row reduction clears denominators row by row and then runs fraction-free
Gauss-Jordan elimination (Bareiss updates with exact division) on Gaussian
integers.  Rationals only reappear in the final normalization, so
intermediate entries stay bounded by minors of the scaled input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DimensionError, NoSolutionError, NotHermitianError, SingularMatrixError
from .matrix import Matrix, hstack
from .scalars import GaussianRational


# ---------------------------------------------------------------------------
# fraction-free Gauss-Jordan


def _row_to_int(re_row, im_row):
    d = 1
    for x in re_row:
        d = lcm(d, x.denominator)
    if im_row is not None:
        for x in im_row:
            d = lcm(d, x.denominator)
    ri = [x.numerator * (d // x.denominator) for x in re_row]
    ii = None if im_row is None else [x.numerator * (d // x.denominator) for x in im_row]
    return ri, ii


def _exact_div(x: int, d: int) -> int:
    q, r = divmod(x, d)
    if r:
        raise ArithmeticError("fraction-free elimination lost exactness")
    return q


def _bareiss_real(a: list, ncols: int):
    nrows = len(a)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        piv_row = a[r]
        piv = piv_row[c]
        for i in range(nrows):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if f:
                a[i] = [_exact_div(piv * x - f * y, prev) for x, y in zip(row, piv_row)]
            elif piv != prev:
                a[i] = [_exact_div(piv * x, prev) for x in row]
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _gdiv(xr, xi, dr, di):
    """Exact Gaussian-integer division ``(xr + xi i) / (dr + di i)``."""
    n = dr * dr + di * di
    return _exact_div(xr * dr + xi * di, n), _exact_div(xi * dr - xr * di, n)


def _bareiss_complex(ar: list, ai: list, ncols: int):
    nrows = len(ar)
    prev_r, prev_i = 1, 0
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if ar[i][c] or ai[i][c]), None)
        if p is None:
            continue
        if p != r:
            ar[p], ar[r] = ar[r], ar[p]
            ai[p], ai[r] = ai[r], ai[p]
        pr_row, pi_row = ar[r], ai[r]
        pr, pi = pr_row[c], pi_row[c]
        for i in range(nrows):
            if i == r:
                continue
            xr_row, xi_row = ar[i], ai[i]
            fr, fi = xr_row[c], xi_row[c]
            new_r, new_i = [], []
            for xr, xi, yr, yi in zip(xr_row, xi_row, pr_row, pi_row):
                # piv * x - f * y
                tr = pr * xr - pi * xi - (fr * yr - fi * yi)
                ti = pr * xi + pi * xr - (fr * yi + fi * yr)
                qr, qi = _gdiv(tr, ti, prev_r, prev_i)
                new_r.append(qr)
                new_i.append(qi)
            ar[i], ai[i] = new_r, new_i
        prev_r, prev_i = pr, pi
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row-echelon form ``(R, pivot_columns, rank)``.

    The pivot in each column is the first nonzero entry at or below the
    current row, so the result is deterministic.
    """
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return Matrix.zeros(nrows, ncols), [], 0
    zero = Fraction(0)
    if m.is_real:
        a = [_row_to_int(row, None)[0] for row in m._re]
        pivots = _bareiss_real(a, ncols)
        out = []
        for i in range(nrows):
            if i < len(pivots):
                d = a[i][pivots[i]]
                out.append(tuple(Fraction(x, d) for x in a[i]))
            else:
                out.append((zero,) * ncols)
        return Matrix._from_tables(nrows, ncols, tuple(out), None), pivots, len(pivots)

    ar, ai = [], []
    for rrow, irow in zip(m._re, m._im):
        x, y = _row_to_int(rrow, irow)
        ar.append(x)
        ai.append(y)
    pivots = _bareiss_complex(ar, ai, ncols)
    out_r, out_i = [], []
    for i in range(nrows):
        if i < len(pivots):
            dr, di = ar[i][pivots[i]], ai[i][pivots[i]]
            n = dr * dr + di * di
            out_r.append(tuple(Fraction(xr * dr + xi * di, n) for xr, xi in zip(ar[i], ai[i])))
            out_i.append(tuple(Fraction(xi * dr - xr * di, n) for xr, xi in zip(ar[i], ai[i])))
        else:
            out_r.append((zero,) * ncols)
            out_i.append((zero,) * ncols)
    return Matrix._from_tables(nrows, ncols, tuple(out_r), tuple(out_i)), pivots, len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def kernel(m: Matrix) -> Matrix:
    """Null-space basis as columns, one per free variable of the rref."""
    r, pivots, _ = rref(m)
    n = m.cols
    free = [j for j in range(n) if j not in set(pivots)]
    cols = []
    for f in free:
        v = [GaussianRational(0)] * n
        v[f] = GaussianRational(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        cols.append(v)
    return Matrix.from_columns(cols, n)


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Particular solution of ``a @ x == b`` with every free variable set to zero."""
    if a.rows != b.rows:
        raise DimensionError(f"solve needs equal row counts, got {a.rows} and {b.rows}")
    n = a.cols
    r, pivots, _ = rref(hstack([a, b], rows=a.rows))
    if any(p >= n for p in pivots):
        raise NoSolutionError("inconsistent linear system")
    rows = [[GaussianRational(0)] * b.cols for _ in range(n)]
    for i, p in enumerate(pivots):
        rows[p] = [r[i, n + k] for k in range(b.cols)]
    return Matrix(rows, rows=n, cols=b.cols)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise DimensionError(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    r, pivots, rk = rref(hstack([m, Matrix.identity(n)], rows=n))
    if pivots[:n] != list(range(n)) or rk < n:
        raise SingularMatrixError("matrix is singular")
    return r[:, n:]


# ---------------------------------------------------------------------------
# Hermitian inertia


@dataclass(frozen=True)
class Inertia:
    pos: int
    neg: int
    zero: int

    def astuple(self) -> tuple[int, int, int]:
        return (self.pos, self.neg, self.zero)


def congruence_diagonalize(m: Matrix) -> tuple[list[Fraction], Matrix]:
    """Return ``(d, T)`` with ``T* m T == diag(d)`` exactly.

    Pivots on the first nonzero diagonal entry among the remaining indices.
    When the remaining diagonal is all zero but an off-diagonal ``m[i, j]``
    is not, the congruence ``x_i <- x_i + c x_j`` (``c`` = 1, or ``i`` when
    ``m[i, j]`` is purely imaginary) makes ``m[i, i]`` nonzero first.
    """
    if not m.is_hermitian():
        raise NotHermitianError("inertia requires a Hermitian matrix")
    n = m.rows
    a = m.tolist()
    t = Matrix.identity(n).tolist()
    active = list(range(n))
    one, iunit = GaussianRational(1), GaussianRational(0, 1)
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if j != i and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            c = one if a[i][j].re != 0 else iunit
            cc = c.conjugate()
            for r in range(n):
                a[r][i] = a[r][i] + c * a[r][j]
                t[r][i] = t[r][i] + c * t[r][j]
            for s in range(n):
                a[i][s] = a[i][s] + cc * a[j][s]
            k = i
        d = a[k][k]
        for j in active:
            if j == k or not a[k][j]:
                continue
            f = a[k][j] / d
            fc = f.conjugate()
            for r in range(n):
                if a[r][k]:
                    a[r][j] = a[r][j] - f * a[r][k]
                if t[r][k]:
                    t[r][j] = t[r][j] - f * t[r][k]
            for s in range(n):
                if a[k][s]:
                    a[j][s] = a[j][s] - fc * a[k][s]
        active.remove(k)
    return [a[i][i].re for i in range(n)], Matrix(t, rows=n, cols=n)


def hermitian_inertia(m: Matrix) -> Inertia:
    """Sylvester inertia ``(pos, neg, zero)`` of a Hermitian matrix."""
    d, _ = congruence_diagonalize(m)
    pos = sum(1 for x in d if x > 0)
    neg = sum(1 for x in d if x < 0)
    return Inertia(pos, neg, m.rows - pos - neg)


def is_psd(m: Matrix) -> bool:
    return hermitian_inertia(m).neg == 0


def negative_direction(m: Matrix) -> Matrix | None:
    """A column ``x`` with ``x* m x < 0``, or ``None`` when ``m`` is PSD."""
    d, t = congruence_diagonalize(m)
    for k, x in enumerate(d):
        if x < 0:
            return t[:, k]
    return None
