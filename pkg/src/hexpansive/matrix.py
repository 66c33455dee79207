"""Dense immutable matrices over the Gaussian rationals.

Entries are stored as two row-major tuples of :class:`~fractions.Fraction`,
one for the real part and one for the imaginary part.  The imaginary table is
``None`` for real matrices, which is the common case and keeps products on a
pure-integer fast path.  Zero-row and zero-column matrices are ordinary values.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from operator import mul
from typing import Iterable, Sequence

from .errors import DimensionError
from .scalars import GaussianRational, as_fraction, format_scalar

Rows = tuple  # tuple[tuple[Fraction, ...], ...]


def _zeros(r: int, c: int) -> Rows:
    z = Fraction(0)
    return tuple((z,) * c for _ in range(r))


def _all_zero(rows: Rows) -> bool:
    return not any(any(row) for row in rows)


def _common_den(*tables: Rows) -> int:
    d = 1
    for t in tables:
        if t is None:
            continue
        for row in t:
            for x in row:
                d = lcm(d, x.denominator)
    return d


def _scale_to_int(t: Rows, den: int) -> list:
    return [[x.numerator * (den // x.denominator) for x in row] for row in t]


def _int_mm(a: list, bt: list) -> list:
    """Integer product of ``a`` with the matrix whose columns are ``bt``."""
    return [[sum(map(mul, row, col)) for col in bt] for row in a]


class Matrix:
    """Immutable ``rows x cols`` matrix with exact complex-rational entries.

    Build from nested rows (ints, Fractions, ``"p/q"`` strings or
    :class:`GaussianRational`); pass ``rows``/``cols`` explicitly when a
    dimension is zero.
    """

    __slots__ = ("rows", "cols", "_re", "_im")

    def __init__(self, entries: Sequence[Sequence] = (), rows: int | None = None, cols: int | None = None):
        entries = [list(r) for r in entries]
        r = len(entries) if rows is None else rows
        if cols is None:
            if not entries:
                raise DimensionError("column count is ambiguous for a matrix without rows")
            cols = len(entries[0])
        c = cols
        if len(entries) != r or any(len(row) != c for row in entries):
            raise DimensionError(f"entries do not form a {r}x{c} array")
        re_rows, im_rows = [], []
        for row in entries:
            zs = [GaussianRational.coerce(x) for x in row]
            re_rows.append(tuple(z.re for z in zs))
            im_rows.append(tuple(z.im for z in zs))
        im = tuple(im_rows)
        self._set(r, c, tuple(re_rows), None if _all_zero(im) else im)

    def _set(self, r, c, re, im):
        object.__setattr__(self, "rows", r)
        object.__setattr__(self, "cols", c)
        object.__setattr__(self, "_re", re)
        object.__setattr__(self, "_im", im)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _from_tables(cls, r: int, c: int, re: Rows, im: Rows | None) -> "Matrix":
        m = cls.__new__(cls)
        if im is not None and _all_zero(im):
            im = None
        m._set(r, c, re, im)
        return m

    # ---- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._from_tables(rows, cols, _zeros(rows, cols), None)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        re = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        return cls._from_tables(n, n, re, None)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        rows = [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(rows, rows=n, cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [list(c) for c in columns]
        return cls([[col[i] for col in cols] for i in range(nrows)], rows=nrows, cols=len(cols))

    @classmethod
    def unit(cls, n: int, i: int) -> "Matrix":
        """Standard basis column ``e_i`` (0-based) of length ``n``."""
        return cls([[1 if k == i else 0] for k in range(n)], rows=n, cols=1)

    # ---- structure ------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_real(self) -> bool:
        return self._im is None

    def _im_table(self) -> Rows:
        return self._im if self._im is not None else _zeros(self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, slice) or isinstance(j, slice):
            ri = range(self.rows)[i] if isinstance(i, slice) else range(i, i + 1)
            cj = range(self.cols)[j] if isinstance(j, slice) else range(j, j + 1)
            re = tuple(tuple(self._re[a][b] for b in cj) for a in ri)
            im = None if self._im is None else tuple(tuple(self._im[a][b] for b in cj) for a in ri)
            return Matrix._from_tables(len(ri), len(cj), re, im)
        im = 0 if self._im is None else self._im[i][j]
        return GaussianRational(self._re[i][j], im)

    def column(self, j: int) -> "Matrix":
        return self[:, j]

    def columns(self) -> list["Matrix"]:
        return [self[:, j] for j in range(self.cols)]

    def tolist(self) -> list[list[GaussianRational]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    # ---- arithmetic -----------------------------------------------------

    def _check_same(self, other: "Matrix", op: str):
        if not isinstance(other, Matrix):
            raise TypeError(f"cannot {op} Matrix and {type(other).__name__}")
        if self.shape != other.shape:
            raise DimensionError(f"cannot {op} {self.rows}x{self.cols} and {other.rows}x{other.cols}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other, "add")
        re = tuple(tuple(map(Fraction.__add__, a, b)) for a, b in zip(self._re, other._re))
        if self._im is None and other._im is None:
            im = None
        else:
            im = tuple(
                tuple(map(Fraction.__add__, a, b))
                for a, b in zip(self._im_table(), other._im_table())
            )
        return Matrix._from_tables(self.rows, self.cols, re, im)

    def __neg__(self) -> "Matrix":
        re = tuple(tuple(-x for x in row) for row in self._re)
        im = None if self._im is None else tuple(tuple(-x for x in row) for row in self._im)
        return Matrix._from_tables(self.rows, self.cols, re, im)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other, "subtract")
        return self + (-other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        r, c = self.rows, other.cols
        if r == 0 or c == 0 or self.cols == 0:
            return Matrix.zeros(r, c)
        da = _common_den(self._re, self._im)
        db = _common_den(other._re, other._im)
        den = da * db
        ar = _scale_to_int(self._re, da)
        brt = [list(col) for col in zip(*_scale_to_int(other._re, db))]
        if self._im is None and other._im is None:
            prod = _int_mm(ar, brt)
            re = tuple(tuple(Fraction(x, den) for x in row) for row in prod)
            return Matrix._from_tables(r, c, re, None)
        ai = _scale_to_int(self._im_table(), da)
        bit = [list(col) for col in zip(*_scale_to_int(other._im_table(), db))]
        rr, ii = _int_mm(ar, brt), _int_mm(ai, bit)
        ri, ir = _int_mm(ar, bit), _int_mm(ai, brt)
        re = tuple(
            tuple(Fraction(x - y, den) for x, y in zip(row1, row2)) for row1, row2 in zip(rr, ii)
        )
        im = tuple(
            tuple(Fraction(x + y, den) for x, y in zip(row1, row2)) for row1, row2 in zip(ri, ir)
        )
        return Matrix._from_tables(r, c, re, im)

    def scale(self, c) -> "Matrix":
        z = GaussianRational.coerce(c)
        if z.im == 0:
            re = tuple(tuple(x * z.re for x in row) for row in self._re)
            im = None if self._im is None else tuple(tuple(x * z.re for x in row) for row in self._im)
            return Matrix._from_tables(self.rows, self.cols, re, im)
        xi = self._im_table()
        re = tuple(
            tuple(a * z.re - b * z.im for a, b in zip(ra, rb)) for ra, rb in zip(self._re, xi)
        )
        im = tuple(
            tuple(a * z.im + b * z.re for a, b in zip(ra, rb)) for ra, rb in zip(self._re, xi)
        )
        return Matrix._from_tables(self.rows, self.cols, re, im)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def transpose(self) -> "Matrix":
        re = tuple(zip(*self._re)) if self.rows else _zeros(self.cols, 0)
        im = None if self._im is None else tuple(zip(*self._im))
        return Matrix._from_tables(self.cols, self.rows, re, im)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def conj(self) -> "Matrix":
        if self._im is None:
            return self
        return Matrix._from_tables(
            self.rows, self.cols, self._re, tuple(tuple(-x for x in row) for row in self._im)
        )

    def adjoint(self) -> "Matrix":
        """Conjugate transpose."""
        return self.transpose().conj()

    @property
    def H(self) -> "Matrix":
        return self.adjoint()

    # ---- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return _all_zero(self._re) and (self._im is None or _all_zero(self._im))

    def is_hermitian(self) -> bool:
        return self.is_square and self == self.adjoint()

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._re == other._re
            and (self._im or None) == (other._im or None)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._re, self._im))

    # ---- display --------------------------------------------------------

    def __repr__(self):
        return f"Matrix({[[format_scalar(z) for z in row] for row in self.tolist()]!r}, rows={self.rows}, cols={self.cols})"

    def __str__(self):
        return format_blocks(self)


def hstack(blocks: Iterable[Matrix], rows: int | None = None) -> Matrix:
    blocks = list(blocks)
    if rows is None:
        if not blocks:
            raise DimensionError("hstack of nothing needs an explicit row count")
        rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise DimensionError("hstack blocks disagree on row count")
    cols = sum(b.cols for b in blocks)
    re = tuple(tuple(x for b in blocks for x in b._re[i]) for i in range(rows))
    if all(b._im is None for b in blocks):
        im = None
    else:
        tabs = [b._im_table() for b in blocks]
        im = tuple(tuple(x for t in tabs for x in t[i]) for i in range(rows))
    return Matrix._from_tables(rows, cols, re, im)


def vstack(blocks: Iterable[Matrix], cols: int | None = None) -> Matrix:
    blocks = list(blocks)
    if cols is None:
        if not blocks:
            raise DimensionError("vstack of nothing needs an explicit column count")
        cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise DimensionError("vstack blocks disagree on column count")
    rows = sum(b.rows for b in blocks)
    re = tuple(row for b in blocks for row in b._re)
    if all(b._im is None for b in blocks):
        im = None
    else:
        im = tuple(row for b in blocks for row in b._im_table())
    return Matrix._from_tables(rows, cols, re, im)


def block_diag(*blocks: Matrix) -> Matrix:
    n_r = sum(b.rows for b in blocks)
    n_c = sum(b.cols for b in blocks)
    out = []
    c0 = 0
    for b in blocks:
        parts = [Matrix.zeros(b.rows, c0), b, Matrix.zeros(b.rows, n_c - c0 - b.cols)]
        out.append(hstack(parts, rows=b.rows))
        c0 += b.cols
    return vstack(out, cols=n_c) if out else Matrix.zeros(n_r, n_c)


def block_matrix(grid: Sequence[Sequence[Matrix]], row_sizes: Sequence[int], col_sizes: Sequence[int]) -> Matrix:
    """Assemble from a grid of blocks; sizes make empty blocks unambiguous."""
    strips = [hstack(row, rows=r) for row, r in zip(grid, row_sizes)]
    return vstack(strips, cols=sum(col_sizes))


def partition(m: Matrix, row_sizes: Sequence[int], col_sizes: Sequence[int] | None = None) -> dict:
    """Split into blocks keyed by 1-based ``(i, j)``."""
    col_sizes = row_sizes if col_sizes is None else col_sizes
    if sum(row_sizes) != m.rows or sum(col_sizes) != m.cols:
        raise DimensionError(f"block sizes {row_sizes}/{col_sizes} do not fit {m.rows}x{m.cols}")
    out = {}
    r0 = 0
    for i, rs in enumerate(row_sizes, 1):
        c0 = 0
        for j, cs in enumerate(col_sizes, 1):
            out[i, j] = m[r0:r0 + rs, c0:c0 + cs]
            c0 += cs
        r0 += rs
    return out


def mat_arith(a: Matrix, b: Matrix | None, op: str, scalar=None) -> Matrix:
    """Dispatch for ``add``, ``sub``, ``mul``, ``adjoint`` (of ``a``), ``scalar-mul``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a @ b
    if op == "adjoint":
        return a.adjoint()
    if op == "scalar-mul":
        return a.scale(scalar)
    raise ValueError(f"unknown matrix operation {op!r}")


def format_blocks(m: Matrix, row_sizes: Sequence[int] | None = None, col_sizes: Sequence[int] | None = None) -> str:
    """Aligned text rendering, optionally with block separators."""
    if m.rows == 0 or m.cols == 0:
        return f"[empty {m.rows}x{m.cols}]"
    cells = [[format_scalar(z) for z in row] for row in m.tolist()]
    width = max(len(s) for row in cells for s in row)
    col_cuts = set()
    row_cuts = set()
    if row_sizes is not None:
        col_sizes = row_sizes if col_sizes is None else col_sizes
        acc = 0
        for s in row_sizes[:-1]:
            acc += s
            row_cuts.add(acc)
        acc = 0
        for s in col_sizes[:-1]:
            acc += s
            col_cuts.add(acc)
    lines = []
    for i, row in enumerate(cells):
        if i in row_cuts and i > 0:
            lines.append(_rule(m.cols, width, col_cuts))
        parts = []
        for j, s in enumerate(row):
            if j in col_cuts and j > 0:
                parts.append("|")
            parts.append(s.rjust(width))
        lines.append("[ " + " ".join(parts) + " ]")
    return "\n".join(lines)


def _rule(ncols, width, col_cuts):
    segs = []
    for j in range(ncols):
        if j in col_cuts and j > 0:
            segs.append("+")
        segs.append("-" * width)
    return "  " + "-".join(segs)


__all__ = [
    "Matrix",
    "hstack",
    "vstack",
    "block_diag",
    "block_matrix",
    "partition",
    "mat_arith",
    "format_blocks",
    "as_fraction",
]
